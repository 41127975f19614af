#include "cspace/connectives.hpp"

#include <sstream>

#include "cspace/equivalence.hpp"

namespace cspace {

const char* zmode_name(ZMode m) { return m == ZMode::Elements ? "elements" : "subsets"; }

ZMode zmode_from_name(const std::string& name) {
    if (name == "elements") return ZMode::Elements;
    if (name == "subsets") return ZMode::Subsets;
    throw UsageError("unknown z-mode '" + name + "' (use elements or subsets)");
}

namespace {

std::string set_text(const Space& space, const Bitset& a) {
    std::string out = "{";
    bool first = true;
    for (unsigned i : a.indices()) {
        if (!first) out += ",";
        first = false;
        out += space.label(i);
    }
    return out + "}";
}

// Conditions (2)/(3) for one z.
bool z_conditions_hold(const Space& space, const Bitset& a, const Bitset& ypoint,
                       const Bitset& z) {
    if (!space.is_consistent(a | z) && !equivalent(space, ypoint | z, z)) return false;
    if (!space.is_consistent(ypoint | z) && !equivalent(space, a | z, z)) return false;
    return true;
}

}  // namespace

bool is_negation(const Space& space, const Bitset& a, std::uint32_t y, ZMode mode, int cap) {
    const unsigned n = space.size();
    if (a.width() != n) throw UsageError("subset width does not match the space");
    if (y >= n) throw UsageError("point id out of range");
    const Bitset ypoint = space.singleton(y);

    if (space.is_consistent(a | ypoint)) return false;  // condition (1)

    if (mode == ZMode::Elements) {
        for (std::uint32_t p = 0; p < n; ++p)
            if (!z_conditions_hold(space, a, ypoint, space.singleton(p))) return false;
        return true;
    }
    require_exhaustive(n, cap, "subsets-mode negation search");
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t v = 0; v < total; ++v)
        if (!z_conditions_hold(space, a, ypoint, Bitset::from_word(n, v))) return false;
    return true;
}

NegationResult find_negations(const Space& space, const Bitset& a, ZMode mode, int cap) {
    NegationResult out;
    out.input = a;
    out.mode = mode;
    for (std::uint32_t y = 0; y < space.size(); ++y)
        if (is_negation(space, a, y, mode, cap)) out.candidates.push_back(y);
    for (size_t i = 0; i + 1 < out.candidates.size() && out.all_equivalent; ++i)
        for (size_t j = i + 1; j < out.candidates.size(); ++j)
            if (!equivalent(space, space.singleton(out.candidates[i]),
                            space.singleton(out.candidates[j]))) {
                out.all_equivalent = false;
                break;
            }
    if (!out.candidates.empty()) out.representative = out.candidates.front();
    return out;
}

namespace {

TernaryVerdict implies_with(const Space& space, const Bitset& a, const Bitset& b,
                            const NegationResult& negs) {
    if (negs.candidates.empty())
        return {Ternary::Undefined, "no negation exists for " + set_text(space, b)};
    bool verdict = !space.is_consistent(a | space.singleton(negs.candidates.front()));
    for (std::uint32_t c : negs.candidates)
        if (!space.is_consistent(a | space.singleton(c)) != verdict)
            throw Error("negation candidates of " + set_text(space, b) +
                        " disagree on an implication verdict; ~ well-definedness is broken");
    return {verdict ? Ternary::True : Ternary::False, ""};
}

}  // namespace

TernaryVerdict implies(const Space& space, const Bitset& a, const Bitset& b, ZMode mode,
                       int cap) {
    if (a.width() != space.size() || b.width() != space.size())
        throw UsageError("subset width does not match the space");
    return implies_with(space, a, b, find_negations(space, b, mode, cap));
}

std::optional<std::uint32_t> join(const Space& space, std::uint32_t x, std::uint32_t y,
                                  ZMode mode, int cap) {
    NegationIndex index(space, mode, cap);
    return index.join(x, y);
}

Bitset meet(const Bitset& a, const Bitset& b) {
    if (a.width() != b.width()) throw UsageError("meet operands have different widths");
    return a | b;
}

NegationIndex::NegationIndex(const Space& space, ZMode mode, int cap)
    : space_(&space), mode_(mode), cap_(cap) {}

const NegationResult& NegationIndex::of(const Bitset& a) {
    auto it = memo_.find(a);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(a, find_negations(*space_, a, mode_, cap_)).first->second;
}

const NegationResult& NegationIndex::of_point(std::uint32_t p) {
    return of(space_->singleton(p));
}

TernaryVerdict NegationIndex::implies(const Bitset& a, const Bitset& b) {
    return implies_with(*space_, a, b, of(b));
}

std::optional<std::uint32_t> NegationIndex::join(std::uint32_t x, std::uint32_t y) {
    const NegationResult& nx = of_point(x);
    if (!nx.representative) return std::nullopt;
    const NegationResult& ny = of_point(y);
    if (!ny.representative) return std::nullopt;
    Bitset pair = space_->singleton(*nx.representative) | space_->singleton(*ny.representative);
    const NegationResult& nj = of(pair);
    return nj.representative;
}

LubReport lub_check(const Space& space, std::uint32_t x, std::uint32_t y, ZMode mode,
                    int cap) {
    if (x >= space.size() || y >= space.size()) throw UsageError("point id out of range");
    NegationIndex index(space, mode, cap);
    LubReport rep;
    rep.x = x;
    rep.y = y;
    rep.join_point = index.join(x, y);
    const Bitset xs = space.singleton(x), ys = space.singleton(y);
    const Bitset meet_xy = meet(xs, ys);
    const bool meet_neg = index.of(meet_xy).representative.has_value();

    auto run = [&](CheckStatus& status, std::string& note, const Bitset& conclusion_src,
                   bool conclusion_ready, const char* missing,
                   const Bitset& h1a, const Bitset& h1b, const Bitset& h2a, const Bitset& h2b,
                   const Bitset& cb) {
        TernaryVerdict h1 = index.implies(h1a, h1b);
        TernaryVerdict h2 = index.implies(h2a, h2b);
        if (!conclusion_ready || h1.value == Ternary::Undefined ||
            h2.value == Ternary::Undefined) {
            status = CheckStatus::Skip;
            note = !conclusion_ready ? missing
                 : (h1.value == Ternary::Undefined ? h1.reason : h2.reason);
            return;
        }
        if (!h1.is_true() || !h2.is_true()) {
            status = CheckStatus::Pass;  // hypothesis false
            return;
        }
        TernaryVerdict c = index.implies(conclusion_src, cb);
        if (c.value == Ternary::Undefined) {
            status = CheckStatus::Skip;
            note = c.reason;
            return;
        }
        status = c.is_true() ? CheckStatus::Pass : CheckStatus::Fail;
    };

    for (std::uint32_t t = 0; t < space.size(); ++t) {
        LubEntry e{};
        e.t = t;
        const Bitset ts = space.singleton(t);
        if (rep.join_point) {
            run(e.upper, e.upper_note, space.singleton(*rep.join_point), true, "",
                xs, ts, ys, ts, ts);
        } else {
            e.upper = CheckStatus::Skip;
            e.upper_note = "join of x and y is undefined";
        }
        run(e.lower, e.lower_note, ts, meet_neg,
            "no negation exists for the meet {x,y}", ts, xs, ts, ys, meet_xy);
        for (CheckStatus s : {e.upper, e.lower}) {
            if (s == CheckStatus::Pass) ++rep.passes;
            else if (s == CheckStatus::Fail) ++rep.fails;
            else ++rep.skips;
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace cspace
