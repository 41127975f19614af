#include <doctest.h>

#include "cspace/builders.hpp"
#include "cspace/structure.hpp"
#include "oracle.hpp"

using namespace cspace;

namespace {

// Direct filter: inconsistent with every one-element removal consistent.
std::vector<Bitset> oracle_minimal(const Space& sp) {
    std::vector<Bitset> out;
    const unsigned n = sp.size();
    for (std::uint64_t v = 1; v < (1ull << n); ++v) {
        Bitset s = Bitset::from_word(n, v);
        if (sp.is_consistent(s)) continue;
        bool minimal = true;
        for (unsigned i : s.indices()) {
            Bitset t = s;
            t.reset(i);
            if (!sp.is_consistent(t)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
        return a.size_lex_less(b);
    });
    return out;
}

}  // namespace

TEST_CASE("minimal inconsistent sets of the small spaces") {
    Space l2 = build_literal(2);
    auto fam = minimal_inconsistent_sets(l2);
    CHECK(fam.complete);
    REQUIRE(fam.sets.size() == 2);
    CHECK(fam.sets[0] == l2.set_of({"v1", "not_v1"}));
    CHECK(fam.sets[1] == l2.set_of({"v2", "not_v2"}));

    Space b1 = build_full_boolean(1);
    auto fam1 = minimal_inconsistent_sets(b1);
    REQUIRE(fam1.sets.size() == 1);
    CHECK(fam1.sets[0] == b1.set_of({"a", "not_a"}));
}

TEST_CASE("the full Boolean space has overlapping and non-doubleton members") {
    Space b2 = build_full_boolean(2);
    auto fam = minimal_inconsistent_sets(b2);
    CHECK(fam.complete);
    // brute-force census: 25 doubletons, 22 triples, 1 quadruple
    unsigned by_size[6] = {};
    for (const Bitset& s : fam.sets) ++by_size[s.count()];
    CHECK(fam.sets.size() == 48);
    CHECK(by_size[2] == 25);
    CHECK(by_size[3] == 22);
    CHECK(by_size[4] == 1);

    Bitset pair1 = b2.set_of({"a", "not_a"});
    Bitset pair2 = b2.set_of({"a", "x4"});  // x4 is the not_a-and-b mask
    auto has = [&](const Bitset& s) {
        return std::find(fam.sets.begin(), fam.sets.end(), s) != fam.sets.end();
    };
    CHECK(has(pair1));
    CHECK(has(pair2));
    CHECK(pair1.intersects(pair2));
}

TEST_CASE("family matches the direct filter and characterizes inconsistency") {
    for (const auto& [name, sp] : oracle::corpus()) {
        if (sp.size() > 10) continue;
        CAPTURE(name);
        auto fam = minimal_inconsistent_sets(sp);
        CHECK(fam.complete);
        CHECK(fam.sets == oracle_minimal(sp));
        // antichain
        for (size_t i = 0; i < fam.sets.size(); ++i)
            for (size_t j = 0; j < fam.sets.size(); ++j)
                if (i != j) CHECK(!fam.sets[i].subset_of(fam.sets[j]));
        // A inconsistent iff it contains a member
        for (std::uint64_t v = 0; v < (1ull << sp.size()); ++v) {
            Bitset s = Bitset::from_word(sp.size(), v);
            bool covered = false;
            for (const Bitset& m : fam.sets)
                if (m.subset_of(s)) {
                    covered = true;
                    break;
                }
            CHECK(covered == !sp.is_consistent(s));
        }
    }
}

TEST_CASE("cap handling with and without partial results") {
    std::vector<std::string> labels;
    for (unsigned i = 0; i < 21; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<Bitset> maximal;
    for (unsigned i = 0; i < 21; ++i) {
        Bitset m(21);
        for (unsigned j = 0; j < 21; ++j)
            if (j != i) m.set(j);
        maximal.push_back(m);
    }
    Space wide(labels, maximal);
    CHECK_THROWS_AS(minimal_inconsistent_sets(wide), CapError);
    auto part = minimal_inconsistent_sets(wide, kDefaultExhaustiveCap, true, 2);
    CHECK(!part.complete);
    CHECK(part.sets.empty());  // its only minimal inconsistent set is the whole universe
}

TEST_CASE("detect_boolean on literal spaces") {
    for (unsigned n = 1; n <= 5; ++n) {
        CAPTURE(n);
        Space sp = build_literal(n);
        auto rep = detect_boolean(sp);
        CHECK(rep.is_boolean);
        CHECK(rep.family_complete);
        CHECK(rep.equiv_supersets_vacuous);
        REQUIRE(rep.pairing.size() == 2 * n);
        for (unsigned i = 0; i < n; ++i) {
            CHECK(rep.pairing[2 * i] == std::pair<std::uint32_t, std::uint32_t>{2 * i, 2 * i + 1});
            CHECK(rep.pairing[2 * i + 1] ==
                  std::pair<std::uint32_t, std::uint32_t>{2 * i + 1, 2 * i});
        }
    }
}

TEST_CASE("detect_boolean refutes the full Boolean spaces") {
    Space b1 = build_full_boolean(1);
    auto rep1 = detect_boolean(b1);
    CHECK(!rep1.is_boolean);
    CHECK(rep1.doubleton_check.status == CheckStatus::Pass);
    CHECK(rep1.disjoint_check.status == CheckStatus::Pass);
    CHECK(rep1.cover_check.status == CheckStatus::Fail);
    CHECK(rep1.cover_check.detail.find("'1'") != std::string::npos);

    Space b2 = build_full_boolean(2);
    auto rep2 = detect_boolean(b2);
    CHECK(!rep2.is_boolean);
    CHECK(rep2.doubleton_check.status == CheckStatus::Fail);
    CHECK(rep2.disjoint_check.status == CheckStatus::Fail);
    CHECK(rep2.disjoint_check.detail.find("overlapping minimal doubletons") !=
          std::string::npos);
    CHECK(rep2.exactness_check.status == CheckStatus::Fail);
    CHECK(rep2.equiv_supersets_check.status == CheckStatus::Pass);
    CHECK(rep2.equiv_supersets_vacuous);
    CHECK(rep2.pairing.empty());
}

TEST_CASE("detect_boolean on an unpaired triangle") {
    Space sp = build_explicit({"p", "q", "r"}, {{"p", "q"}, {"q", "r"}});
    auto fam = minimal_inconsistent_sets(sp);
    REQUIRE(fam.sets.size() == 1);
    CHECK(fam.sets[0] == sp.set_of({"p", "r"}));
    auto rep = detect_boolean(sp);
    CHECK(!rep.is_boolean);
    CHECK(rep.cover_check.status == CheckStatus::Fail);
    CHECK(rep.cover_check.detail.find("'q'") != std::string::npos);
}

TEST_CASE("condition (v) is vacuous across the corpus") {
    for (const auto& [name, sp] : oracle::corpus()) {
        if (sp.size() > 15) continue;
        CAPTURE(name);
        auto rep = detect_boolean(sp);
        CHECK(rep.equiv_supersets_vacuous);
        CHECK(rep.equiv_supersets_check.status == CheckStatus::Pass);
    }
}

TEST_CASE("detect_boolean beyond the cap decides only by doubleton evidence") {
    Space b3 = build_full_boolean(3);
    auto rep = detect_boolean(b3);  // 255 points; overlapping doubletons refute it
    CHECK(!rep.is_boolean);
    CHECK(!rep.family_complete);
    CHECK(rep.disjoint_check.status == CheckStatus::Fail);
    CHECK(rep.doubleton_check.status == CheckStatus::Skip);
    CHECK(rep.exactness_check.status == CheckStatus::Skip);

    // wide space, no doubletons at all: the cover check still refutes
    std::vector<std::string> labels;
    for (unsigned i = 0; i < 21; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<Bitset> maximal;
    for (unsigned i = 0; i < 21; ++i) {
        Bitset m(21);
        for (unsigned j = 0; j < 21; ++j)
            if (j != i) m.set(j);
        maximal.push_back(m);
    }
    auto wide = detect_boolean(Space(labels, maximal));
    CHECK(!wide.is_boolean);
    CHECK(wide.cover_check.status == CheckStatus::Fail);

    // wide space whose doubletons are disjoint and covering: must refuse
    std::vector<std::string> names;
    for (unsigned i = 0; i < 22; ++i) names.push_back("q" + std::to_string(i));
    std::vector<Bitset> assignments;
    for (std::uint32_t pick = 0; pick < (1u << 11); ++pick) {
        Bitset m(22);
        for (unsigned i = 0; i < 11; ++i) m.set(2 * i + ((pick >> i) & 1));
        assignments.push_back(m);
    }
    CHECK_THROWS_AS(detect_boolean(Space(names, assignments)), CapError);
}
