#include "cohort/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cohort {

namespace {

constexpr const char* summary_header =
    "problem,algorithm,runs,feasible_runs,best,median,mean,worst,std,mcv,fr,avg_fe,"
    "violation_best,violation_mean,violation_worst";

constexpr const char* summary_preamble =
    "# mcv: mean over runs of the final incumbent's total constraint violation (feasible runs add 0).\n"
    "# best/median/mean/worst/std: feasible runs only (population std); 'infeasible' when none is feasible.\n";

void write_file(const std::filesystem::path& path, const std::string& body)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ReportError("cannot open " + path.string() + " for writing");
    out << body;
    out.flush();
    if (!out)
        throw ReportError("failed writing " + path.string());
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep))
        out.push_back(cell);
    if (!line.empty() && line.back() == sep)
        out.emplace_back();
    return out;
}

double parse_number(const std::string& cell, const char* column)
{
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (cell.empty() || end != cell.c_str() + cell.size())
        throw InvalidInput(std::string("summary.csv: bad value '") + cell + "' in column " + column);
    return v;
}

}  // namespace

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string summary_csv(const std::vector<RunStatistics>& stats)
{
    std::string out = summary_preamble;
    out += summary_header;
    out += '\n';
    for (const RunStatistics& s : stats) {
        const bool any = s.feasible_runs > 0;
        auto objective = [&](double v) { return any ? format_number(v) : std::string("infeasible"); };
        out += s.problem + ',' + std::string(to_string(s.algorithm)) + ',' + std::to_string(s.runs) + ','
               + std::to_string(s.feasible_runs) + ',' + objective(s.best) + ',' + objective(s.median) + ','
               + objective(s.mean) + ',' + objective(s.worst) + ',' + objective(s.std) + ',' + format_number(s.mcv)
               + ',' + format_number(s.fr) + ',' + format_number(s.avg_fe) + ',' + format_number(s.violation_best)
               + ',' + format_number(s.violation_mean) + ',' + format_number(s.violation_worst) + '\n';
    }
    return out;
}

std::string trace_csv(const RunResult& run)
{
    std::string out = "attempt,best_phi,best_f,best_violation\n";
    for (const TraceRecord& r : run.trace) {
        out += std::to_string(r.attempt) + ',' + format_number(r.best_phi) + ',' + format_number(r.best_f) + ','
               + format_number(r.best_violation) + '\n';
    }
    return out;
}

void emit_report(const std::vector<RunStatistics>& stats, const std::filesystem::path& dir)
{
    if (stats.empty())
        throw InvalidInput("emit_report: nothing to write");

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw ReportError("cannot create " + dir.string() + ": " + ec.message());

    write_file(dir / "summary.csv", summary_csv(stats));

    nlohmann::json rows = nlohmann::json::array();
    std::string timing = "problem,algorithm,avg_time\n";
    for (const RunStatistics& s : stats) {
        nlohmann::json row = {{"problem", s.problem},
                              {"algorithm", std::string(to_string(s.algorithm))},
                              {"runs", s.runs},
                              {"feasible_runs", s.feasible_runs},
                              {"mcv", s.mcv},
                              {"fr", s.fr},
                              {"avg_fe", s.avg_fe},
                              {"avg_time", s.avg_time},
                              {"violation_best", s.violation_best},
                              {"violation_mean", s.violation_mean},
                              {"violation_worst", s.violation_worst}};
        for (const auto& [key, value] :
             {std::pair{"best", s.best}, {"median", s.median}, {"mean", s.mean}, {"worst", s.worst}, {"std", s.std}}) {
            if (s.feasible_runs > 0)
                row[key] = value;
            else
                row[key] = "infeasible";
        }
        rows.push_back(std::move(row));
        timing += s.problem + ',' + std::string(to_string(s.algorithm)) + ',' + format_number(s.avg_time) + '\n';
    }
    write_file(dir / "summary.json", rows.dump(2) + '\n');
    write_file(dir / "timing.csv", timing);

    for (const RunStatistics& s : stats) {
        for (std::size_t i = 0; i < s.per_run.size(); ++i)
            write_file(dir / ("trace_" + s.problem + '_' + std::to_string(i) + ".csv"), trace_csv(s.per_run[i]));
    }
}

std::vector<RunStatistics> parse_summary_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    std::vector<RunStatistics> out;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (!header_seen) {
            if (line != summary_header)
                throw InvalidInput("summary.csv: unexpected header");
            header_seen = true;
            continue;
        }
        const std::vector<std::string> c = split(line, ',');
        if (c.size() != 15)
            throw InvalidInput("summary.csv: expected 15 columns, got " + std::to_string(c.size()));
        RunStatistics s;
        s.problem = c[0];
        s.algorithm = parse_algorithm(c[1]);
        s.runs = static_cast<std::size_t>(parse_number(c[2], "runs"));
        s.feasible_runs = static_cast<std::size_t>(parse_number(c[3], "feasible_runs"));
        if (s.feasible_runs > 0) {
            s.best = parse_number(c[4], "best");
            s.median = parse_number(c[5], "median");
            s.mean = parse_number(c[6], "mean");
            s.worst = parse_number(c[7], "worst");
            s.std = parse_number(c[8], "std");
        }
        s.mcv = parse_number(c[9], "mcv");
        s.fr = parse_number(c[10], "fr");
        s.avg_fe = parse_number(c[11], "avg_fe");
        s.violation_best = parse_number(c[12], "violation_best");
        s.violation_mean = parse_number(c[13], "violation_mean");
        s.violation_worst = parse_number(c[14], "violation_worst");
        out.push_back(std::move(s));
    }
    if (!header_seen)
        throw InvalidInput("summary.csv: missing header");
    return out;
}

std::vector<RunStatistics> read_summary_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ReportError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_summary_csv(buf.str());
}

}  // namespace cohort
