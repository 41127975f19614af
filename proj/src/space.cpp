#include "cspace/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cspace {

const char* invariant_name(InvariantId id) {
    switch (id) {
        case InvariantId::UniverseNonempty: return "universe-nonempty";
        case InvariantId::UniverseInconsistent: return "axiom-1";
        case InvariantId::SingletonConsistent: return "axiom-2";
        case InvariantId::Antichain: return "antichain";
        case InvariantId::SetWidth: return "set-width";
        case InvariantId::Labels: return "labels";
    }
    return "?";
}

Space::Space(std::vector<std::string> labels, std::vector<Bitset> maximal,
             std::string origin)
    : origin_(std::move(origin)) {
    points_.reserve(labels.size());
    for (std::uint32_t i = 0; i < labels.size(); ++i)
        points_.push_back(Point{i, std::move(labels[i])});
    maximal_ = std::move(maximal);
    canonical_maximal_order(maximal_);
}

std::optional<std::uint32_t> Space::find_label(const std::string& label) const {
    for (const Point& p : points_)
        if (p.label == label) return p.id;
    return std::nullopt;
}

std::uint32_t Space::require_label(const std::string& label) const {
    if (auto id = find_label(label)) return *id;
    throw UsageError("unknown point label: '" + label + "'");
}

bool Space::is_consistent(const Bitset& a) const {
    if (a.width() != size()) throw UsageError("subset width does not match the space");
    for (const Bitset& m : maximal_)
        if (a.subset_of(m)) return true;
    return false;
}

Bitset Space::set_of(const std::vector<std::string>& labels) const {
    Bitset s(size());
    for (const std::string& l : labels) s.set(require_label(l));
    return s;
}

std::vector<std::string> Space::labels_of(const Bitset& a) const {
    std::vector<std::string> out;
    for (unsigned i : a.indices()) out.push_back(label(i));
    return out;
}

void Space::canonical_maximal_order(std::vector<Bitset>& sets) {
    std::sort(sets.begin(), sets.end(), [](const Bitset& a, const Bitset& b) {
        unsigned ca = a.count(), cb = b.count();
        if (ca != cb) return ca > cb;
        return a.numeric_less(b);
    });
}

ValidationReport validate(const Space& space) {
    ValidationReport rep;
    const unsigned n = space.size();

    if (n == 0)
        rep.violations.push_back({InvariantId::UniverseNonempty,
                                  "the universe is empty", std::nullopt, std::nullopt});

    std::set<std::string> seen;
    for (const Point& p : space.points()) {
        if (p.label.empty())
            rep.violations.push_back({InvariantId::Labels, "empty label", std::nullopt, p.id});
        else if (p.label.find(',') != std::string::npos ||
                 p.label.find('\n') != std::string::npos)
            rep.violations.push_back({InvariantId::Labels,
                                      "label '" + p.label + "' contains ',' or newline",
                                      std::nullopt, p.id});
        if (!seen.insert(p.label).second)
            rep.violations.push_back({InvariantId::Labels,
                                      "duplicate label '" + p.label + "'", std::nullopt, p.id});
    }

    const auto& maximal = space.maximal();
    const Bitset universe = Bitset::universe(n);
    for (const Bitset& m : maximal) {
        if (m.width() != n) {
            rep.violations.push_back({InvariantId::SetWidth,
                                      "maximal set width differs from |X|", m, std::nullopt});
            return rep;  // everything downstream assumes matching widths
        }
        if (n > 0 && m == universe)
            rep.violations.push_back({InvariantId::UniverseInconsistent,
                                      "the full universe is listed as consistent", m,
                                      std::nullopt});
    }

    for (size_t i = 0; i < maximal.size(); ++i)
        for (size_t j = 0; j < maximal.size(); ++j)
            if (i != j && maximal[i].subset_of(maximal[j])) {
                rep.violations.push_back({InvariantId::Antichain,
                                          "a maximal set is contained in another",
                                          maximal[i], std::nullopt});
                break;
            }

    for (const Point& p : space.points()) {
        bool covered = false;
        for (const Bitset& m : maximal)
            if (m.test(p.id)) {
                covered = true;
                break;
            }
        if (!covered)
            rep.violations.push_back({InvariantId::SingletonConsistent,
                                      "point '" + p.label + "' lies in no maximal set",
                                      std::nullopt, p.id});
    }
    return rep;
}

std::string render_validation(const Space& space, const ValidationReport& report) {
    std::ostringstream out;
    if (report.ok()) {
        out << "ok: " << space.size() << " points, " << space.maximal().size()
            << " maximal consistent sets\n";
        return out.str();
    }
    for (const Violation& v : report.violations) {
        out << invariant_name(v.id) << ": " << v.message;
        if (v.witness_set) {
            out << " [";
            bool first = true;
            for (unsigned i : v.witness_set->indices()) {
                if (!first) out << " ";
                first = false;
                out << (i < space.size() ? space.label(i) : "#" + std::to_string(i));
            }
            out << "]";
        }
        out << "\n";
    }
    return out.str();
}

void require_exhaustive(unsigned universe, int cap, const char* what) {
    if (static_cast<int>(universe) > cap) {
        std::ostringstream msg;
        msg << what << " needs 2^" << universe
            << " subset enumeration; refused (cap " << cap
            << " points, raise with --max-points)";
        throw CapError(msg.str());
    }
}

void for_each_consistent(const Space& space, std::optional<unsigned> max_size,
                         int cap, const std::function<void(const Bitset&)>& fn) {
    const unsigned n = space.size();
    require_exhaustive(n, cap, "consistent-set enumeration");
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t v = 0; v < total; ++v) {
        Bitset s = Bitset::from_word(n, v);
        if (max_size && s.count() > *max_size) continue;
        if (space.is_consistent(s)) fn(s);
    }
}

std::vector<Bitset> enumerate_consistent(const Space& space,
                                         std::optional<unsigned> max_size, int cap) {
    std::vector<Bitset> out;
    for_each_consistent(space, max_size, cap, [&](const Bitset& s) { out.push_back(s); });
    return out;
}

std::vector<Bitset> antichain_normalize(std::vector<Bitset> sets) {
    // Largest first, so a kept set can only be dominated by an earlier one.
    Space::canonical_maximal_order(sets);
    std::vector<Bitset> kept;
    for (const Bitset& s : sets) {
        bool dominated = false;
        for (const Bitset& k : kept)
            if (s.subset_of(k)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(s);
    }
    return kept;
}

}  // namespace cspace
