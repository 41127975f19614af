#include "cspace/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cspace/equivalence.hpp"

namespace cspace {

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

std::vector<Bitset> minimal_up_to(const Space& space, unsigned max_size) {
    std::vector<Bitset> found;
    for (unsigned k = 1; k <= max_size; ++k) {
        for_each_subset_of_size(space.size(), k, [&](const Bitset& c) {
            for (const Bitset& f : found)
                if (f.subset_of(c)) return;
            if (!space.is_consistent(c)) found.push_back(c);
        });
    }
    return found;
}

}  // namespace

MinimalInconsistentFamily minimal_inconsistent_sets(const Space& space, int cap,
                                                    bool allow_partial,
                                                    unsigned partial_max_size) {
    const unsigned n = space.size();
    MinimalInconsistentFamily out;
    if (static_cast<int>(n) <= cap) {
        out.sets = minimal_up_to(space, n);
        out.complete = true;
        return out;
    }
    if (!allow_partial)
        require_exhaustive(n, cap, "minimal-inconsistent-set enumeration");
    out.sets = minimal_up_to(space, partial_max_size);
    out.complete = false;
    return out;
}

namespace {

// Work estimate for the per-consistent-set minimal-superset walk (~3^n).
bool equiv_walk_feasible(unsigned n) {
    long double work = 1;
    for (unsigned i = 0; i < n; ++i) {
        work *= 3;
        if (work > 2e8L) return false;
    }
    return true;
}

}  // namespace

BooleanDetectReport detect_boolean(const Space& space, int cap) {
    const unsigned n = space.size();
    BooleanDetectReport rep;
    rep.note = "consistency is read as 'contains no complete doubleton'";

    const bool full = static_cast<int>(n) <= cap;
    MinimalInconsistentFamily family =
        full ? minimal_inconsistent_sets(space, cap)
             : minimal_inconsistent_sets(space, cap, /*allow_partial=*/true, 2);
    rep.family_complete = family.complete;

    std::vector<Bitset> doubletons;
    for (const Bitset& s : family.sets)
        if (s.count() == 2) doubletons.push_back(s);

    // (ii) pairwise disjoint — doubleton-level, decidable even on a partial
    // family (every inconsistent pair is minimal once singletons validate).
    rep.disjoint_check = {CheckStatus::Pass, ""};
    for (size_t i = 0; i < doubletons.size() && rep.disjoint_check.status == CheckStatus::Pass; ++i)
        for (size_t j = i + 1; j < doubletons.size(); ++j)
            if (doubletons[i].intersects(doubletons[j])) {
                rep.disjoint_check = {CheckStatus::Fail,
                                      "overlapping minimal doubletons " +
                                          set_text(space, doubletons[i]) + " and " +
                                          set_text(space, doubletons[j])};
                break;
            }

    // (iii) union covers X
    Bitset covered(n);
    for (const Bitset& d : doubletons) covered = covered | d;
    if (covered == Bitset::universe(n)) {
        rep.cover_check = {CheckStatus::Pass, ""};
    } else {
        std::uint32_t missing = Bitset::universe(n).minus(covered).indices().front();
        rep.cover_check = {CheckStatus::Fail,
                           "point '" + space.label(missing) + "' belongs to no doubleton"};
    }

    if (!full) {
        if (rep.disjoint_check.status == CheckStatus::Pass &&
            rep.cover_check.status == CheckStatus::Pass)
            require_exhaustive(n, cap, "Boolean-space detection");
        const char* why = "universe beyond the exhaustive cap";
        rep.doubleton_check = {CheckStatus::Skip, why};
        rep.exactness_check = {CheckStatus::Skip, why};
        rep.equiv_supersets_check = {CheckStatus::Skip, why};
        rep.is_boolean = false;
        return rep;
    }

    // (i) every minimal inconsistent set is a doubleton
    rep.doubleton_check = {CheckStatus::Pass, ""};
    for (const Bitset& s : family.sets)
        if (s.count() != 2) {
            rep.doubleton_check = {CheckStatus::Fail,
                                   "minimal inconsistent set " + set_text(space, s) +
                                       " has " + std::to_string(s.count()) + " members"};
            break;
        }

    // (iv) exactness of the consistent family, plus the signature census that
    // decides whether (v) is vacuous.
    rep.exactness_check = {CheckStatus::Pass, ""};
    std::set<Signature> inconsistent_sigs;
    {
        const std::uint64_t total = 1ull << n;
        for (std::uint64_t v = 0; v < total; ++v) {
            Bitset s = Bitset::from_word(n, v);
            bool consistent = space.is_consistent(s);
            if (!consistent) inconsistent_sigs.insert(signature(space, s));
            bool has_doubleton = false;
            for (const Bitset& d : doubletons)
                if (d.subset_of(s)) {
                    has_doubleton = true;
                    break;
                }
            if (consistent == has_doubleton && rep.exactness_check.status == CheckStatus::Pass)
                rep.exactness_check = {
                    CheckStatus::Fail,
                    set_text(space, s) + (consistent ? " is consistent but contains a doubleton"
                                                     : " is inconsistent but doubleton-free")};
        }
    }
    rep.equiv_supersets_vacuous = inconsistent_sigs.size() <= 1;

    // (v) minimal inconsistent supersets of every consistent set are mutually
    // equivalent.
    if (!equiv_walk_feasible(n)) {
        rep.equiv_supersets_check = {CheckStatus::Skip,
                                     "superset walk exceeds the work budget"};
    } else {
        rep.equiv_supersets_check = {CheckStatus::Pass, ""};
        const std::uint64_t total = 1ull << n;
        std::vector<std::uint64_t> minimal_ext;  // masks over free positions
        std::vector<unsigned> free_pos;
        for (std::uint64_t v = 0; v < total && rep.equiv_supersets_check.status == CheckStatus::Pass;
             ++v) {
            Bitset a = Bitset::from_word(n, v);
            if (!space.is_consistent(a)) continue;
            free_pos.clear();
            for (unsigned i = 0; i < n; ++i)
                if (!a.test(i)) free_pos.push_back(i);
            const unsigned m = static_cast<unsigned>(free_pos.size());
            minimal_ext.clear();
            std::optional<Bitset> first;
            for (std::uint64_t e = 1; e < (1ull << m); ++e) {
                bool dominated = false;
                for (std::uint64_t f : minimal_ext)
                    if ((e & f) == f) {
                        dominated = true;
                        break;
                    }
                if (dominated) continue;
                Bitset b = a;
                for (unsigned i = 0; i < m; ++i)
                    if ((e >> i) & 1) b.set(free_pos[i]);
                if (space.is_consistent(b)) continue;
                minimal_ext.push_back(e);
                if (!first) {
                    first = b;
                } else if (!equivalent(space, *first, b)) {
                    rep.equiv_supersets_check = {
                        CheckStatus::Fail,
                        "minimal inconsistent supersets " + set_text(space, *first) + " and " +
                            set_text(space, b) + " of " + set_text(space, a) +
                            " are not equivalent"};
                    break;
                }
            }
        }
        // Increasing-mask order visits subsets before supersets only within
        // equal popcounts; re-run pruning is handled by the dominance test
        // above because any proper subset of e has a smaller mask value.
    }

    rep.is_boolean = rep.doubleton_check.status == CheckStatus::Pass &&
                     rep.disjoint_check.status == CheckStatus::Pass &&
                     rep.cover_check.status == CheckStatus::Pass &&
                     rep.exactness_check.status == CheckStatus::Pass &&
                     rep.equiv_supersets_check.status == CheckStatus::Pass;

    if (rep.is_boolean)
        for (const Bitset& d : doubletons) {
            auto idx = d.indices();
            rep.pairing.emplace_back(idx[0], idx[1]);
            rep.pairing.emplace_back(idx[1], idx[0]);
        }
    std::sort(rep.pairing.begin(), rep.pairing.end());
    return rep;
}

}  // namespace cspace
