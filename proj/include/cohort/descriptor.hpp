#pragma once

#include "cohort/problem.hpp"
#include "cohort/suite.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace cohort {

/// Metadata-only description of a problem, as read from a JSON file:
///
///   {"id": "P1", "name": "...", "dimension": 2,
///    "bounds": {"lower": [0, 0], "upper": [1, 1]}, "best_known": 1.5,
///    "category": "mechanical", "inequality_count": 1, "equality_count": 0}
///
/// category and the two counts are optional.
struct ProblemDescriptor {
    std::string id;
    std::string name;
    std::size_t dimension = 0;
    Bounds bounds;
    double best_known = 0.0;
    std::optional<Category> category;
    std::size_t inequality_count = 0;
    std::size_t equality_count = 0;
};

/// Throws InvalidInput naming the offending field.
ProblemDescriptor parse_descriptor(const std::string& json_text);
ProblemDescriptor load_descriptor(const std::filesystem::path& path);

std::string to_json(const ProblemRecord& record);
std::string to_json(const ProblemDescriptor& descriptor);

/// JSON array of registry records, pretty-printed.
std::string list_json(const std::vector<ProblemRecord>& records,
                      const std::vector<ProblemDescriptor>& extra = {});

}  // namespace cohort
