#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cspace/formula.hpp"
#include "cspace/space.hpp"

namespace cspace {

// Explicit construction from labels and maximal-set label lists. Dominated
// sets are dropped (antichain normalization); the result must validate.
Space build_explicit(const std::vector<std::string>& labels,
                     const std::vector<std::vector<std::string>>& maximal_sets);

// The literal space on n variables: points v1, not_v1, ..., vn, not_vn; a
// set is consistent iff it contains no complementary pair; the maximal sets
// are the 2^n assignments (one literal per pair).
Space build_literal(unsigned n);

// The full Boolean space on n variables: one point per nonzero truth-table
// mask (2^(2^n)-1 points), consistent iff the bitwise-and of the member
// masks is nonzero; one maximal set per minterm. n <= 3.
Space build_full_boolean(unsigned n);

// Truth-table mask of point `id` in build_full_boolean(n) output (id+1).
std::uint32_t boolean_point_mask(unsigned n, std::uint32_t id);

// One point per formula; consistency = satisfiability of the member
// conjunction. Every formula must be satisfiable (axiom 2) and the whole
// list jointly unsatisfiable (axiom 1).
Space build_from_formulas(const std::vector<LabeledFormula>& formulas);

// Seeded deterministic generation: num_maximal proper subsets of X,
// re-sampled until every point is covered, then antichain-normalized.
Space random_space(unsigned num_points, unsigned num_maximal, std::uint64_t seed);

}  // namespace cspace
