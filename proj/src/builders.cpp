#include "cspace/builders.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

namespace cspace {

namespace {

Space finish(std::vector<std::string> labels, std::vector<Bitset> maximal,
             std::string origin) {
    Space space(std::move(labels), std::move(maximal), std::move(origin));
    ValidationReport rep = validate(space);
    if (!rep.ok())
        throw BuildError("constructed space is invalid:\n" + render_validation(space, rep),
                         std::move(rep));
    return space;
}

}  // namespace

Space build_explicit(const std::vector<std::string>& labels,
                     const std::vector<std::vector<std::string>>& maximal_sets) {
    std::set<std::string> seen;
    for (const std::string& l : labels)
        if (!seen.insert(l).second) throw UsageError("duplicate point label: '" + l + "'");

    auto index_of = [&](const std::string& l) -> unsigned {
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end()) throw UsageError("unknown point label: '" + l + "'");
        return static_cast<unsigned>(it - labels.begin());
    };

    const unsigned n = static_cast<unsigned>(labels.size());
    std::vector<Bitset> sets;
    sets.reserve(maximal_sets.size());
    for (const auto& ls : maximal_sets) {
        Bitset s(n);
        for (const std::string& l : ls) s.set(index_of(l));
        sets.push_back(s);
    }
    return finish(labels, antichain_normalize(std::move(sets)), "explicit");
}

Space build_literal(unsigned n) {
    if (n < 1 || n > 10)
        throw UsageError("literal builder needs 1 <= vars <= 10, got " + std::to_string(n));
    std::vector<std::string> labels;
    for (unsigned i = 1; i <= n; ++i) {
        labels.push_back("v" + std::to_string(i));
        labels.push_back("not_v" + std::to_string(i));
    }
    const unsigned width = 2 * n;
    std::vector<Bitset> maximal;
    maximal.reserve(1u << n);
    for (std::uint32_t assignment = 0; assignment < (1u << n); ++assignment) {
        Bitset m(width);
        for (unsigned i = 0; i < n; ++i)
            m.set(2 * i + (((assignment >> i) & 1) ? 0 : 1));
        maximal.push_back(m);
    }
    return finish(std::move(labels), std::move(maximal), "literal(" + std::to_string(n) + ")");
}

namespace {

std::string boolean_label(unsigned n, std::uint32_t mask) {
    static const char* kVars[3] = {"a", "b", "c"};
    const unsigned bits = 1u << n;
    const std::uint32_t ones = (bits >= 32) ? ~0u : ((1u << bits) - 1);
    if (mask == ones) return "1";
    for (unsigned i = 0; i < n; ++i) {
        std::uint32_t v = 0;
        for (std::uint32_t j = 0; j < bits; ++j)
            if ((j >> i) & 1) v |= (1u << j);
        if (mask == v) return kVars[i];
        if (mask == (ones & ~v)) return std::string("not_") + kVars[i];
    }
    std::ostringstream out;
    out << "x" << std::hex << std::uppercase;
    for (int shift = static_cast<int>(bits) - 4; shift >= 0; shift -= 4)
        out << ((mask >> shift) & 0xF);
    return out.str();
}

}  // namespace

std::uint32_t boolean_point_mask(unsigned n, std::uint32_t id) {
    (void)n;
    return id + 1;
}

Space build_full_boolean(unsigned n) {
    if (n < 1 || n > 3)
        throw UsageError("boolean builder needs 1 <= vars <= 3, got " + std::to_string(n));
    const unsigned assignments = 1u << n;
    const std::uint32_t npoints = (1u << assignments) - 1;  // nonzero masks
    std::vector<std::string> labels;
    labels.reserve(npoints);
    for (std::uint32_t mask = 1; mask <= npoints; ++mask)
        labels.push_back(boolean_label(n, mask));
    std::vector<Bitset> maximal;
    maximal.reserve(assignments);
    for (std::uint32_t minterm = 0; minterm < assignments; ++minterm) {
        Bitset m(npoints);
        for (std::uint32_t mask = 1; mask <= npoints; ++mask)
            if (mask & (1u << minterm)) m.set(mask - 1);
        maximal.push_back(m);
    }
    return finish(std::move(labels), std::move(maximal), "boolean(" + std::to_string(n) + ")");
}

Space build_from_formulas(const std::vector<LabeledFormula>& formulas) {
    if (formulas.empty()) throw UsageError("at least one formula is required");
    std::set<std::string> seen;
    for (const auto& lf : formulas)
        if (!seen.insert(lf.label).second)
            throw UsageError("duplicate point label: '" + lf.label + "'");

    std::vector<std::string> vars;
    for (const auto& lf : formulas)
        for (const std::string& v : lf.formula.variables())
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    if (vars.size() > kMaxTruthTableVars)
        throw CapError("formula set uses " + std::to_string(vars.size()) +
                       " variables (at most " + std::to_string(kMaxTruthTableVars) + ")");

    std::vector<TruthTable> tables;
    tables.reserve(formulas.size());
    for (const auto& lf : formulas) {
        TruthTable t = truth_table(lf.formula, vars);
        if (t.is_zero())
            throw DomainError("axiom 2 fails: formula for point '" + lf.label +
                              "' is unsatisfiable");
        tables.push_back(std::move(t));
    }

    std::vector<Formula> all;
    for (const auto& lf : formulas) all.push_back(lf.formula);
    if (conjunction_satisfiable(all, vars))
        throw DomainError("axiom 1 fails: the conjunction of all formulas is satisfiable");

    const unsigned npoints = static_cast<unsigned>(formulas.size());
    const std::uint64_t total = 1ull << vars.size();
    std::unordered_set<Bitset, BitsetHash> distinct;
    for (std::uint64_t omega = 0; omega < total; ++omega) {
        Bitset m(npoints);
        for (unsigned i = 0; i < npoints; ++i)
            if (tables[i].bit(omega)) m.set(i);
        if (m.any()) distinct.insert(m);
    }
    std::vector<Bitset> sets(distinct.begin(), distinct.end());

    std::vector<std::string> labels;
    for (const auto& lf : formulas) labels.push_back(lf.label);
    return finish(std::move(labels), antichain_normalize(std::move(sets)), "formulas");
}

Space random_space(unsigned num_points, unsigned num_maximal, std::uint64_t seed) {
    if (num_points < 1 || num_points > 20)
        throw UsageError("random builder needs 1 <= points <= 20, got " +
                         std::to_string(num_points));
    if (num_maximal < 1) throw UsageError("random builder needs at least one maximal set");
    if (num_points == 1)
        throw DomainError("a 1-point space cannot satisfy both axiom 1 and axiom 2");

    std::ostringstream origin;
    origin << "random(points=" << num_points << ",maximal=" << num_maximal
           << ",seed=" << seed << ")";

    // mt19937_64 with plain modulo draws: fully specified, so identical
    // (seed, params) give identical spaces on every platform.
    std::mt19937_64 rng(seed);
    auto draw = [&](unsigned k) { return static_cast<unsigned>(rng() % k); };

    constexpr int kAttempts = 1000;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<Bitset> sets;
        Bitset covered(num_points);
        for (unsigned s = 0; s < num_maximal; ++s) {
            unsigned size = 1 + draw(num_points - 1);  // 1 .. |X|-1
            std::vector<unsigned> idx(num_points);
            for (unsigned i = 0; i < num_points; ++i) idx[i] = i;
            Bitset set(num_points);
            for (unsigned i = 0; i < size; ++i) {
                std::swap(idx[i], idx[i + draw(num_points - i)]);
                set.set(idx[i]);
            }
            covered = covered | set;
            sets.push_back(std::move(set));
        }
        if (covered == Bitset::universe(num_points)) {
            std::vector<std::string> labels;
            for (unsigned i = 1; i <= num_points; ++i) labels.push_back("p" + std::to_string(i));
            return finish(std::move(labels), antichain_normalize(std::move(sets)),
                          origin.str());
        }
    }
    throw DomainError("random generation failed: " + std::to_string(num_maximal) +
                      " sets never covered all " + std::to_string(num_points) +
                      " points after " + std::to_string(kAttempts) + " attempts");
}

}  // namespace cspace
