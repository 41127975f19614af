#pragma once

#include <string>
#include <vector>

#include "cspace/equivalence.hpp"
#include "cspace/formula.hpp"
#include "cspace/space.hpp"
#include "cspace/structure.hpp"

namespace cspace {

// Space file format:
//   { "points": ["a", "not_a"], "maximal_consistent": [["a"], ["not_a"]] }
// Unknown labels are load errors; an invalid space is rejected unless force.
Space space_from_json_text(const std::string& text, bool force = false);
std::string space_to_json_text(const Space& space);

Space load_space(const std::string& path, bool force = false);
void save_space(const Space& space, const std::string& path);

std::vector<LabeledFormula> load_formula_list(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace cspace
