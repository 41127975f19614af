#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cspace/bitset.hpp"
#include "cspace/errors.hpp"

namespace cspace {

// Operations that enumerate all 2^|X| subsets refuse universes larger than
// this unless the caller raises the cap.
inline constexpr int kDefaultExhaustiveCap = 20;

struct Point {
    std::uint32_t id;
    std::string label;
};

enum class InvariantId {
    UniverseNonempty,    // |X| >= 1
    UniverseInconsistent,// the full universe must not be consistent
    SingletonConsistent, // every point must lie in some maximal set
    Antichain,           // no maximal set contains another
    SetWidth,            // every maximal set has the space's width
    Labels,              // labels nonempty, unique, no commas/newlines
};

const char* invariant_name(InvariantId id);

struct Violation {
    InvariantId id;
    std::string message;
    std::optional<Bitset> witness_set;
    std::optional<std::uint32_t> witness_point;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// A construction attempt that produced an invalid space.
struct BuildError : DomainError {
    BuildError(const std::string& what, ValidationReport rep)
        : DomainError(what), report(std::move(rep)) {}
    ValidationReport report;
};

// A finite consistency space: labeled points plus the family of consistent
// sets, stored by its maximal elements (an antichain; downward closure is
// then structural). Immutable after construction; all queries are pure.
class Space {
  public:
    Space(std::vector<std::string> labels, std::vector<Bitset> maximal,
          std::string origin = "explicit");

    unsigned size() const { return static_cast<unsigned>(points_.size()); }
    const std::vector<Point>& points() const { return points_; }
    const std::string& label(std::uint32_t id) const { return points_.at(id).label; }
    std::optional<std::uint32_t> find_label(const std::string& label) const;
    std::uint32_t require_label(const std::string& label) const;

    // Canonically ordered (size descending, then numeric bit order).
    const std::vector<Bitset>& maximal() const { return maximal_; }

    const std::string& origin() const { return origin_; }

    bool is_consistent(const Bitset& a) const;

    Bitset empty_set() const { return Bitset(size()); }
    Bitset singleton(std::uint32_t id) const { return Bitset(size()).with(id); }
    Bitset set_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(const Bitset& a) const;

    // Sorts into the canonical maximal order, in place.
    static void canonical_maximal_order(std::vector<Bitset>& sets);

  private:
    std::vector<Point> points_;
    std::vector<Bitset> maximal_;
    std::string origin_;
};

ValidationReport validate(const Space& space);
std::string render_validation(const Space& space, const ValidationReport& report);

// All consistent subsets, optionally only those with at most `max_size`
// members, in increasing numeric order; 2^|X| work, refused over the cap.
std::vector<Bitset> enumerate_consistent(const Space& space,
                                         std::optional<unsigned> max_size = std::nullopt,
                                         int cap = kDefaultExhaustiveCap);

// Streaming form of the above.
void for_each_consistent(const Space& space, std::optional<unsigned> max_size,
                         int cap, const std::function<void(const Bitset&)>& fn);

// Drops duplicates and dominated sets; orders canonically.
std::vector<Bitset> antichain_normalize(std::vector<Bitset> sets);

void require_exhaustive(unsigned universe, int cap, const char* what);

}  // namespace cspace
