#include "cspace/equivalence.hpp"

#include <algorithm>
#include <map>

namespace cspace {

Signature signature(const Space& space, const Bitset& a) {
    if (a.width() != space.size()) throw UsageError("subset width does not match the space");
    Signature out;
    const auto& maximal = space.maximal();
    for (std::uint32_t i = 0; i < maximal.size(); ++i)
        if (a.subset_of(maximal[i])) out.push_back(i);
    return out;
}

bool equivalent(const Space& space, const Bitset& a, const Bitset& b) {
    if (a.width() != space.size() || b.width() != space.size())
        throw UsageError("subset width does not match the space");
    for (const Bitset& m : space.maximal())
        if (a.subset_of(m) != b.subset_of(m)) return false;
    return true;
}

bool equivalent_bruteforce(const Space& space, const Bitset& a, const Bitset& b, int cap) {
    const unsigned n = space.size();
    require_exhaustive(n, cap, "brute-force equivalence");
    if (a.width() != n || b.width() != n)
        throw UsageError("subset width does not match the space");
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t v = 0; v < total; ++v) {
        Bitset kappa = Bitset::from_word(n, v);
        if (space.is_consistent(a | kappa) != space.is_consistent(b | kappa)) return false;
    }
    return true;
}

namespace {

// Subsets of {0..n-1} with k bits, ascending numeric order (Gosper's hack).
template <typename Fn>
void for_each_mask_of_size(unsigned n, unsigned k, Fn fn) {
    if (k > n) return;
    if (k == 0) {
        fn(std::uint64_t{0});
        return;
    }
    std::uint64_t v = (k >= 64) ? ~0ull : ((1ull << k) - 1);
    const std::uint64_t limit = 1ull << n;
    while (v < limit) {
        fn(v);
        std::uint64_t u = v & (~v + 1);
        std::uint64_t w = v + u;
        v = w | (((v ^ w) >> 2) / u);
    }
}

}  // namespace

std::optional<Bitset> distinguishing_kappa(const Space& space, const Bitset& a,
                                           const Bitset& b, int cap) {
    const unsigned n = space.size();
    require_exhaustive(n, cap, "distinguishing-set search");
    for (unsigned k = 0; k <= n; ++k) {
        std::optional<Bitset> found;
        for_each_mask_of_size(n, k, [&](std::uint64_t v) {
            if (found) return;
            Bitset kappa = Bitset::from_word(n, v);
            if (space.is_consistent(a | kappa) != space.is_consistent(b | kappa))
                found = kappa;
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::vector<EquivalenceClass> equivalence_classes(const Space& space,
                                                  std::optional<unsigned> max_size,
                                                  int cap) {
    const unsigned n = space.size();

    // Work estimate: number of subsets to visit must fit the cap's budget.
    if (!max_size || *max_size >= n) {
        require_exhaustive(n, cap, "equivalence-class enumeration");
    } else {
        long double budget = 1;
        for (long double i = 0; i < cap; ++i) budget *= 2;
        long double count = 0, binom = 1;
        for (unsigned k = 0; k <= *max_size; ++k) {
            count += binom;
            binom = binom * (n - k) / (k + 1);
            if (count > budget)
                throw CapError("equivalence-class enumeration over " + std::to_string(n) +
                               " points exceeds the exhaustive budget");
        }
    }

    std::map<Signature, std::vector<Bitset>> groups;
    auto visit = [&](const Bitset& s) { groups[signature(space, s)].push_back(s); };

    if (!max_size || *max_size >= n) {
        const std::uint64_t total = 1ull << n;
        for (std::uint64_t v = 0; v < total; ++v) visit(Bitset::from_word(n, v));
    } else if (n <= 63) {
        for (unsigned k = 0; k <= *max_size; ++k)
            for_each_mask_of_size(n, k, [&](std::uint64_t v) { visit(Bitset::from_word(n, v)); });
    } else {
        // wide universe, bounded size: index-combination enumeration
        for (unsigned k = 0; k <= *max_size; ++k) {
            std::vector<unsigned> idx(k);
            for (unsigned i = 0; i < k; ++i) idx[i] = i;
            bool more = k <= n;
            while (more) {
                Bitset s(n);
                for (unsigned i : idx) s.set(i);
                visit(s);
                if (k == 0) break;
                int pos = static_cast<int>(k) - 1;
                while (pos >= 0 && idx[pos] == n - k + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (unsigned i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
    }

    std::vector<EquivalenceClass> out;
    out.reserve(groups.size());
    for (auto& [sig, members] : groups) {
        std::sort(members.begin(), members.end(),
                  [](const Bitset& a, const Bitset& b) { return a.size_lex_less(b); });
        out.push_back(EquivalenceClass{members.front(), std::move(members), sig});
    }
    std::sort(out.begin(), out.end(), [](const EquivalenceClass& a, const EquivalenceClass& b) {
        return a.representative.size_lex_less(b.representative);
    });
    return out;
}

}  // namespace cspace
