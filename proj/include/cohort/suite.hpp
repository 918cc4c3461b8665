#pragma once

#include "cohort/problem.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cohort {

/// Unknown suite id. The message lists the ids that do exist.
class ProblemNotFound : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

struct ProblemRecord {
    std::string suite_id;
    std::string name;
    Category category = Category::mechanical;
    std::size_t dimension = 0;
    std::size_t inequality_count = 0;
    std::size_t equality_count = 0;
    double best_known = 0.0;
    ProblemDefinition definition;
};

const ProblemDefinition& get_problem(std::string_view suite_id);

/// Sorted by suite id.
std::vector<ProblemRecord> list_problems(std::optional<Category> category = std::nullopt);

std::vector<std::string> problem_ids();

}  // namespace cohort
