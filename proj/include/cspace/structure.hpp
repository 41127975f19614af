#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cspace/connectives.hpp"
#include "cspace/space.hpp"

namespace cspace {

struct MinimalInconsistentFamily {
    std::vector<Bitset> sets;  // antichain, (size, numeric) order
    bool complete = false;     // true when enumeration covered every size
};

// Size-ordered search with superset pruning. Full enumeration needs
// |X| <= cap; beyond it, allow_partial limits the search to sets of at most
// partial_max_size members (complete = false), otherwise the call refuses.
MinimalInconsistentFamily minimal_inconsistent_sets(const Space& space,
                                                    int cap = kDefaultExhaustiveCap,
                                                    bool allow_partial = false,
                                                    unsigned partial_max_size = 2);

struct ConditionVerdict {
    CheckStatus status = CheckStatus::Skip;
    std::string detail;  // witness description on failure, reason on skip
};

struct BooleanDetectReport {
    bool is_boolean = false;
    ConditionVerdict doubleton_check;        // every minimal inconsistent set is a doubleton
    ConditionVerdict disjoint_check;         // the doubletons are pairwise disjoint
    ConditionVerdict cover_check;            // their union is the whole universe
    ConditionVerdict exactness_check;        // consistent = contains no doubleton
    ConditionVerdict equiv_supersets_check;  // minimal inconsistent supersets of each
                                             // consistent set are mutually equivalent
    bool equiv_supersets_vacuous = false;    // all inconsistent sets share one ~ class
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairing;  // point -> mate
    bool family_complete = false;
    std::string note;
};

// Decides the Boolean-consistency-space conditions. Beyond the cap the report
// is produced only when doubleton-level evidence already refutes; otherwise
// the call refuses.
BooleanDetectReport detect_boolean(const Space& space, int cap = kDefaultExhaustiveCap);

}  // namespace cspace
