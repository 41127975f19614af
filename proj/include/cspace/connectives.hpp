#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cspace/space.hpp"

namespace cspace {

// Range of the bound variable z in the negation conditions: single points,
// or every subset of X (the stronger reading; needs exhaustive work).
enum class ZMode { Elements, Subsets };

const char* zmode_name(ZMode m);
ZMode zmode_from_name(const std::string& name);

struct NegationResult {
    Bitset input;
    ZMode mode;
    std::vector<std::uint32_t> candidates;  // ascending id
    bool all_equivalent = true;             // pairwise ~ of candidate singletons
    std::optional<std::uint32_t> representative;  // lowest-id candidate
};

enum class Ternary { False, True, Undefined };

struct TernaryVerdict {
    Ternary value = Ternary::Undefined;
    std::string reason;  // set for Undefined
    bool is_true() const { return value == Ternary::True; }
};

// Whether point y negates the set a: (1) a u {y} is inconsistent; (2) for
// every z in range, a u z inconsistent implies {y} u z ~ z; (3) symmetric.
bool is_negation(const Space& space, const Bitset& a, std::uint32_t y, ZMode mode,
                 int cap = kDefaultExhaustiveCap);

NegationResult find_negations(const Space& space, const Bitset& a, ZMode mode,
                              int cap = kDefaultExhaustiveCap);

// a -> b: a together with a negation of b is inconsistent; Undefined when b
// has no negation. All negation candidates must yield the same verdict; a
// disagreement is an internal consistency failure and throws.
TernaryVerdict implies(const Space& space, const Bitset& a, const Bitset& b, ZMode mode,
                       int cap = kDefaultExhaustiveCap);

// x v y = negation of {x-bar, y-bar}; nullopt when any needed negation is
// missing.
std::optional<std::uint32_t> join(const Space& space, std::uint32_t x, std::uint32_t y,
                                  ZMode mode, int cap = kDefaultExhaustiveCap);

// Sets act as conjunctions, so the meet of two sets is their union.
Bitset meet(const Bitset& a, const Bitset& b);

// Memoized negation searches over one space and mode; the shared engine for
// implies/join and for the audit loops.
class NegationIndex {
  public:
    NegationIndex(const Space& space, ZMode mode, int cap = kDefaultExhaustiveCap);

    const NegationResult& of(const Bitset& a);
    const NegationResult& of_point(std::uint32_t p);

    TernaryVerdict implies(const Bitset& a, const Bitset& b);
    std::optional<std::uint32_t> join(std::uint32_t x, std::uint32_t y);

    const Space& space() const { return *space_; }
    ZMode mode() const { return mode_; }
    int cap() const { return cap_; }

  private:
    const Space* space_;
    ZMode mode_;
    int cap_;
    std::unordered_map<Bitset, NegationResult, BitsetHash> memo_;
};

enum class CheckStatus { Pass, Fail, Skip };

struct LubEntry {
    std::uint32_t t;
    CheckStatus upper;  // (x->t and y->t) => join(x,y)->t
    std::string upper_note;
    CheckStatus lower;  // (t->x and t->y) => t->meet({x},{y})
    std::string lower_note;
};

struct LubReport {
    std::uint32_t x, y;
    std::optional<std::uint32_t> join_point;
    std::vector<LubEntry> entries;  // one per point t, id order
    unsigned passes = 0, fails = 0, skips = 0;
};

LubReport lub_check(const Space& space, std::uint32_t x, std::uint32_t y, ZMode mode,
                    int cap = kDefaultExhaustiveCap);

}  // namespace cspace
