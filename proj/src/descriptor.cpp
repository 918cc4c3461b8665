#include "cohort/descriptor.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cohort {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key)
{
    if (!j.contains(key))
        throw InvalidInput(std::string("descriptor: missing field '") + key + "'");
    return j.at(key);
}

std::vector<double> number_array(const json& j, const char* what)
{
    if (!j.is_array())
        throw InvalidInput(std::string("descriptor: ") + what + " must be an array");
    std::vector<double> out;
    for (const json& v : j) {
        if (!v.is_number())
            throw InvalidInput(std::string("descriptor: ") + what + " must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

std::size_t count_field(const json& j, const char* key)
{
    if (!j.contains(key))
        return 0;
    const json& v = j.at(key);
    if (!v.is_number_unsigned())
        throw InvalidInput(std::string("descriptor: ") + key + " must be a non-negative integer");
    return v.get<std::size_t>();
}

json bounds_json(const Bounds& b)
{
    return {{"lower", b.lower()}, {"upper", b.upper()}};
}

}  // namespace

ProblemDescriptor parse_descriptor(const std::string& json_text)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("descriptor: malformed JSON: ") + e.what());
    }
    if (!j.is_object())
        throw InvalidInput("descriptor: top level must be an object");

    ProblemDescriptor d;
    const json& id = require(j, "id");
    const json& name = require(j, "name");
    if (!id.is_string() || id.get<std::string>().empty())
        throw InvalidInput("descriptor: id must be a non-empty string");
    if (!name.is_string())
        throw InvalidInput("descriptor: name must be a string");
    d.id = id.get<std::string>();
    d.name = name.get<std::string>();

    const json& dim = require(j, "dimension");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
        throw InvalidInput("descriptor: dimension must be a positive integer");
    d.dimension = dim.get<std::size_t>();

    const json& bounds = require(j, "bounds");
    if (!bounds.is_object())
        throw InvalidInput("descriptor: bounds must be an object with lower and upper");
    d.bounds = Bounds(number_array(require(bounds, "lower"), "bounds.lower"),
                      number_array(require(bounds, "upper"), "bounds.upper"));
    if (d.bounds.size() != d.dimension)
        throw InvalidInput("descriptor: bounds length does not match dimension");

    const json& best = require(j, "best_known");
    if (!best.is_number())
        throw InvalidInput("descriptor: best_known must be a number");
    d.best_known = best.get<double>();

    if (j.contains("category")) {
        if (!j.at("category").is_string())
            throw InvalidInput("descriptor: category must be a string");
        d.category = parse_category(j.at("category").get<std::string>());
    }
    d.inequality_count = count_field(j, "inequality_count");
    d.equality_count = count_field(j, "equality_count");
    return d;
}

ProblemDescriptor load_descriptor(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("descriptor: cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_descriptor(buf.str());
}

namespace {

json record_json(const ProblemRecord& r)
{
    return {{"id", r.suite_id},
            {"name", r.name},
            {"category", std::string(to_string(r.category))},
            {"dimension", r.dimension},
            {"inequality_count", r.inequality_count},
            {"equality_count", r.equality_count},
            {"best_known", r.best_known},
            {"bounds", bounds_json(r.definition.bounds)}};
}

json descriptor_json(const ProblemDescriptor& d)
{
    json j = {{"id", d.id},
              {"name", d.name},
              {"dimension", d.dimension},
              {"inequality_count", d.inequality_count},
              {"equality_count", d.equality_count},
              {"best_known", d.best_known},
              {"bounds", bounds_json(d.bounds)}};
    if (d.category)
        j["category"] = std::string(to_string(*d.category));
    return j;
}

}  // namespace

std::string to_json(const ProblemRecord& record)
{
    return record_json(record).dump();
}

std::string to_json(const ProblemDescriptor& descriptor)
{
    return descriptor_json(descriptor).dump();
}

std::string list_json(const std::vector<ProblemRecord>& records, const std::vector<ProblemDescriptor>& extra)
{
    json arr = json::array();
    for (const ProblemRecord& r : records)
        arr.push_back(record_json(r));
    for (const ProblemDescriptor& d : extra)
        arr.push_back(descriptor_json(d));
    return arr.dump(2);
}

}  // namespace cohort
