#include <doctest.h>

#include "cohort/descriptor.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

using namespace cohort;

namespace {

const char* good = R"({"id": "P1", "name": "toy", "dimension": 2,
    "bounds": {"lower": [0, -1], "upper": [1, 1]}, "best_known": 1.5,
    "category": "mechanical", "inequality_count": 1})";

}  // namespace

TEST_CASE("descriptor parses and round-trips")
{
    const ProblemDescriptor d = parse_descriptor(good);
    CHECK(d.id == "P1");
    CHECK(d.dimension == 2);
    CHECK(d.bounds.lower() == std::vector<double>{0.0, -1.0});
    CHECK(d.best_known == 1.5);
    CHECK(d.category == Category::mechanical);
    CHECK(d.inequality_count == 1);
    CHECK(d.equality_count == 0);

    const ProblemDescriptor again = parse_descriptor(to_json(d));
    CHECK(again.id == d.id);
    CHECK(again.bounds.upper() == d.bounds.upper());
    CHECK(again.category == d.category);
}

TEST_CASE("descriptor errors name the field")
{
    auto rejects = [](const std::string& text, const char* field) {
        CAPTURE(text);
        CHECK_THROWS_WITH_AS(parse_descriptor(text), doctest::Contains(field), InvalidInput);
    };
    rejects("{", "malformed");
    rejects("[]", "object");
    rejects(R"({"name": "a", "dimension": 1, "bounds": {"lower": [0], "upper": [1]}, "best_known": 0})", "id");
    rejects(R"({"id": "a", "name": "a", "dimension": 0, "bounds": {"lower": [], "upper": []}, "best_known": 0})",
            "dimension");
    rejects(R"({"id": "a", "name": "a", "dimension": 2, "bounds": {"lower": [0], "upper": [1]}, "best_known": 0})",
            "bounds");
    rejects(R"({"id": "a", "name": "a", "dimension": 1, "bounds": {"lower": [0], "upper": [1]}})", "best_known");
    rejects(R"({"id": "a", "name": "a", "dimension": 1, "bounds": {"lower": ["x"], "upper": [1]}, "best_known": 0})",
            "bounds.lower");
    rejects(R"({"id": "a", "name": "a", "dimension": 1, "bounds": {"lower": [0], "upper": [1]}, "best_known": 0,
               "inequality_count": -1})",
            "inequality_count");
    CHECK_THROWS_AS(parse_descriptor(R"({"id": "a", "name": "a", "dimension": 1,
        "bounds": {"lower": [2], "upper": [1]}, "best_known": 0})"),
                    InvalidInput);
}

TEST_CASE("descriptor files and listing")
{
    const auto path = std::filesystem::temp_directory_path() / "cohort_descriptor.json";
    std::ofstream(path) << good;
    const ProblemDescriptor d = load_descriptor(path);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_descriptor(path), InvalidInput);

    const auto records = list_problems();
    const auto arr = nlohmann::json::parse(list_json(records, {d}));
    REQUIRE(arr.size() == records.size() + 1);
    CHECK(arr[0]["id"] == records[0].suite_id);
    CHECK(arr.back()["id"] == "P1");
    CHECK(arr[0]["bounds"]["lower"].size() == records[0].dimension);
}
