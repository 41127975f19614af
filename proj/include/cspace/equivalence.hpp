#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cspace/space.hpp"

namespace cspace {

// Indices (into space.maximal()) of the maximal sets containing a subset.
// Empty iff the subset is inconsistent. Two subsets are equivalent iff their
// signatures are equal; the ground-truth kappa-loop oracle below is kept to
// check that claim, never to serve queries.
using Signature = std::vector<std::uint32_t>;

Signature signature(const Space& space, const Bitset& a);

// Signature equality; O(|maximal| * |X|/64) per query, no enumeration.
bool equivalent(const Space& space, const Bitset& a, const Bitset& b);

// Literal transcription of the defining condition: for every kappa subseteq X,
// a u kappa is consistent exactly when b u kappa is. 2^|X| work.
bool equivalent_bruteforce(const Space& space, const Bitset& a, const Bitset& b,
                           int cap = kDefaultExhaustiveCap);

// Smallest (size, then numeric) kappa with is_consistent(a u kappa) !=
// is_consistent(b u kappa); nullopt when none exists.
std::optional<Bitset> distinguishing_kappa(const Space& space, const Bitset& a,
                                           const Bitset& b, int cap = kDefaultExhaustiveCap);

struct EquivalenceClass {
    Bitset representative;          // smallest size, then numeric
    std::vector<Bitset> members;    // canonical (size, numeric) order
    Signature signature;
};

// Partition of all subsets (or those with at most max_size members) by
// signature, ordered by representative.
std::vector<EquivalenceClass> equivalence_classes(
    const Space& space, std::optional<unsigned> max_size = std::nullopt,
    int cap = kDefaultExhaustiveCap);

}  // namespace cspace
