// Acceptance suite: runs every criterion and prints one pass/fail line each.
// Exit status is the number of failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cspace/auditor.hpp"
#include "cspace/builders.hpp"
#include "cspace/connectives.hpp"
#include "cspace/equivalence.hpp"
#include "cspace/io.hpp"
#include "cspace/structure.hpp"
#include "oracle.hpp"

using namespace cspace;
using nlohmann::json;

namespace {

struct Check {
    std::vector<std::string> failures;
    std::string notes;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void note(const std::string& text) { notes = text; }
};

struct NamedSpace {
    std::string name;
    Space space;
};

std::string fixture_dir() {
    return std::string(CSPACE_SOURCE_DIR) + "/tests/fixtures/formulas";
}

std::vector<std::string> fixture_files() {
    std::vector<std::string> out;
    for (const auto& entry : std::filesystem::directory_iterator(fixture_dir()))
        if (entry.path().extension() == ".txt") out.push_back(entry.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

// The acceptance corpus: literal and Boolean builders, the formula fixtures,
// and ten seeded random spaces.
std::vector<NamedSpace> acceptance_corpus() {
    std::vector<NamedSpace> out;
    for (unsigned n = 1; n <= 5; ++n)
        out.push_back({"L" + std::to_string(n), build_literal(n)});
    out.push_back({"B1", build_full_boolean(1)});
    out.push_back({"B2", build_full_boolean(2)});
    for (const std::string& file : fixture_files())
        out.push_back({std::filesystem::path(file).filename().string(),
                       build_from_formulas(load_formula_list(file))});
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        unsigned points = 4 + static_cast<unsigned>(seed % 3);
        out.push_back({"R" + std::to_string(seed), random_space(points, points, seed)});
    }
    return out;
}

std::string run_cli(const std::string& args, int* exit_code) {
    std::string cmd = std::string(CSPACE_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return out;
    }
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

const PropositionResult* find_prop(const AuditReport& rep, const std::string& id) {
    for (const PropositionResult& r : rep.results)
        if (r.id == id) return &r;
    return nullptr;
}

// --- criterion 1 -----------------------------------------------------------
void criterion_axioms_and_builders(Check& c) {
    for (unsigned n = 1; n <= 5; ++n)
        c.require(validate(build_literal(n)).ok(), "literal(" + std::to_string(n) + ") invalid");
    for (unsigned n = 1; n <= 3; ++n)
        c.require(validate(build_full_boolean(n)).ok(),
                  "boolean(" + std::to_string(n) + ") invalid");
    auto files = fixture_files();
    c.require(files.size() == 10, "expected 10 formula fixtures, found " +
                                      std::to_string(files.size()));
    for (const std::string& file : files) {
        Space sp = build_from_formulas(load_formula_list(file));
        c.require(validate(sp).ok(), file + " built an invalid space");
    }
    Space l2 = build_literal(2);
    std::uint64_t count = oracle::count_consistent(
        l2.size(), [&](const Bitset& s) { return oracle::literal_consistent(2, s); });
    c.require(count == 9, "L2 oracle count is not 9");
    c.require(enumerate_consistent(l2).size() == 9, "L2 has wrong consistent-set count");
    c.require(l2.maximal().size() == 4, "L2 has wrong maximal-set count");
}

// --- criterion 2 -----------------------------------------------------------
void criterion_oracle_agreement(Check& c) {
    std::uint64_t exhaustive_pairs = 0, sampled_pairs = 0;
    for (const auto& [name, sp] : acceptance_corpus()) {
        const unsigned n = sp.size();
        if (n <= 5) {
            for (std::uint64_t a = 0; a < (1ull << n); ++a)
                for (std::uint64_t b = 0; b < (1ull << n); ++b) {
                    Bitset A = Bitset::from_word(n, a), B = Bitset::from_word(n, b);
                    ++exhaustive_pairs;
                    if (equivalent(sp, A, B) != equivalent_bruteforce(sp, A, B)) {
                        c.require(false, name + ": disagreement on an exhaustive pair");
                        return;
                    }
                }
        } else if (n <= 15) {
            std::mt19937_64 rng(0xACCE97ull + n);
            for (int trial = 0; trial < 10000; ++trial) {
                Bitset A = oracle::random_subset(rng, n), B = oracle::random_subset(rng, n);
                ++sampled_pairs;
                if (equivalent(sp, A, B) != equivalent_bruteforce(sp, A, B)) {
                    c.require(false, name + ": disagreement on a sampled pair");
                    return;
                }
            }
        }
    }
    c.require(exhaustive_pairs > 0, "no exhaustive spaces in the corpus");
    c.require(sampled_pairs >= 10000 * 4, "not enough sampled spaces in the corpus");
    c.note(std::to_string(exhaustive_pairs) + " exhaustive + " +
           std::to_string(sampled_pairs) + " sampled pairs, zero disagreements");
}

// --- criterion 3 -----------------------------------------------------------
void criterion_inconsistent_collapse(Check& c) {
    std::mt19937_64 rng(31337);
    for (const auto& [name, sp] : acceptance_corpus()) {
        const unsigned n = sp.size();
        if (n <= 6) {
            std::optional<Bitset> first;
            for (std::uint64_t v = 0; v < (1ull << n); ++v) {
                Bitset s = Bitset::from_word(n, v);
                if (sp.is_consistent(s)) continue;
                if (!first) first = s;
                c.require(equivalent(sp, s, *first), name + ": inconsistent sets split");
            }
            for (std::uint64_t a = 0; a < (1ull << n); ++a)
                for (std::uint64_t b = 0; b < (1ull << n); ++b) {
                    Bitset A = Bitset::from_word(n, a), B = Bitset::from_word(n, b);
                    if (equivalent(sp, A, B))
                        c.require(sp.is_consistent(A) == sp.is_consistent(B),
                                  name + ": a consistent set is equivalent to an inconsistent one");
                }
        } else {
            std::optional<Bitset> first;
            for (int trial = 0; trial < 2000; ++trial) {
                Bitset s = oracle::random_subset(rng, n);
                if (sp.is_consistent(s)) continue;
                if (!first) first = s;
                c.require(equivalent(sp, s, *first), name + ": inconsistent sets split");
            }
        }
    }
}

// --- criterion 4 -----------------------------------------------------------
void criterion_negation_recovery(Check& c) {
    Space b2 = build_full_boolean(2);
    for (ZMode mode : {ZMode::Elements, ZMode::Subsets}) {
        for (std::uint32_t p = 0; p < b2.size(); ++p) {
            NegationResult r = find_negations(b2, b2.singleton(p), mode);
            std::uint32_t complement = (~(p + 1)) & 0xF;
            std::vector<std::uint32_t> expect;
            if (complement != 0) expect.push_back(complement - 1);
            c.require(r.candidates == expect,
                      "B2 " + std::string(zmode_name(mode)) + ": point " + b2.label(p) +
                          " negations differ from the Boolean complement");
        }
    }
    for (unsigned n : {2u, 3u}) {
        Space lit = build_literal(n);
        for (ZMode mode : {ZMode::Elements, ZMode::Subsets})
            for (std::uint32_t p = 0; p < lit.size(); ++p) {
                NegationResult r = find_negations(lit, lit.singleton(p), mode);
                std::uint32_t mate = (p % 2 == 0) ? p + 1 : p - 1;
                c.require(r.candidates == std::vector<std::uint32_t>{mate},
                          "L" + std::to_string(n) + ": literal " + lit.label(p) +
                              " negation is not exactly its mate");
            }
    }
}

// --- criterion 5 -----------------------------------------------------------
void criterion_join_recovery(Check& c) {
    Space b2 = build_full_boolean(2);
    NegationIndex negs(b2, ZMode::Subsets);
    unsigned matched = 0, top_pairs = 0;
    for (std::uint32_t x = 0; x < b2.size(); ++x)
        for (std::uint32_t y = x + 1; y < b2.size(); ++y) {
            auto j = negs.join(x, y);
            bool has_top = (x + 1) == 0xF || (y + 1) == 0xF;
            if (has_top) {
                // the unit has no negation, so the join formula is undefined here
                ++top_pairs;
                c.require(!j.has_value(), "B2: join involving the unit came out defined");
                continue;
            }
            std::uint32_t expect = ((x + 1) | (y + 1)) - 1;
            if (j && *j == expect) ++matched;
            else c.require(false, "B2: join(" + b2.label(x) + "," + b2.label(y) +
                                       ") is not the Boolean join");
        }
    c.require(matched == 91, "expected 91 Boolean-join matches, got " +
                                 std::to_string(matched));
    c.require(top_pairs == 14, "expected 14 unit pairs, got " + std::to_string(top_pairs));
    c.note("91 pairs equal the Boolean join; the 14 pairs involving the unit are "
           "undefined, matching the negation conditions");

    Space l2 = build_literal(2);
    for (std::uint32_t x : {0u, 1u})
        for (std::uint32_t y : {2u, 3u})
            c.require(!join(l2, x, y, ZMode::Subsets).has_value(),
                      "L2: a mixed-variable join came out defined");
    c.require(join(l2, 0, 0, ZMode::Subsets) == 0, "L2: join(x,x) should be x");
}

// --- criterion 6 -----------------------------------------------------------
void criterion_audit_pins(Check& c) {
    CampaignConfig cfg = default_campaign();
    CampaignReport rep = run_campaign(cfg);
    c.require(rep.build_errors.empty(), "campaign build errors");

    static const char* kNeverRefuted[] = {"P01", "P02", "P04", "P05", "P06",
                                          "P09", "P10", "P11", "P12", "P15"};
    for (const SummaryRow& row : rep.summary) {
        for (const char* id : kNeverRefuted)
            if (row.id == id)
                c.require(row.refuted == 0, row.id + " refuted somewhere in the campaign");
    }

    const AuditReport* l2 = nullptr;
    const AuditReport* b2 = nullptr;
    for (const AuditReport& r : rep.reports) {
        if (r.space_name == "L2") l2 = &r;
        if (r.space_name == "B2") b2 = &r;
    }
    c.require(l2 && b2, "campaign misses L2 or B2");
    if (!l2 || !b2) return;

    // P07 refuted on L2 with the pinned counterexample
    const PropositionResult* p07 = find_prop(*l2, "P07");
    c.require(p07 && p07->status == PropStatus::Refuted, "P07 not refuted on L2");
    if (p07 && p07->counterexample) {
        const Counterexample& cx = *p07->counterexample;
        c.require(cx.bindings.size() >= 2 &&
                      cx.bindings[0].value == std::vector<std::string>{"v1"} &&
                      cx.bindings[1].value == std::vector<std::string>{"v2"},
                  "P07 counterexample bindings are not (v1, v2)");
        c.require(cx.kappa && cx.kappa->empty(), "P07 distinguishing set is not empty");
    } else {
        c.require(false, "P07 counterexample missing");
    }

    // P03: holds on the literal spaces, refuted on B2 with a disjointness witness
    for (const AuditReport& r : rep.reports) {
        if (r.space_name == "L1" || r.space_name == "L2" || r.space_name == "L3") {
            const PropositionResult* p03 = find_prop(r, "P03");
            c.require(p03 && p03->status == PropStatus::Holds,
                      "P03 does not hold on " + r.space_name);
        }
    }
    const PropositionResult* p03 = find_prop(*b2, "P03");
    c.require(p03 && p03->status == PropStatus::Refuted, "P03 not refuted on B2");
    c.require(p03 && p03->counterexample &&
                  p03->counterexample->detail.find("overlapping minimal doubletons") !=
                      std::string::npos,
              "B2 P03 counterexample lacks the disjointness witness");

    // P13/P14/P16: zero skips on B2, skipped instances on the literal spaces
    for (const char* id : {"P13", "P14", "P16"}) {
        const PropositionResult* res = find_prop(*b2, id);
        c.require(res && res->status == PropStatus::Holds && res->skipped == 0,
                  std::string(id) + " on B2 is not a zero-skip hold");
        const PropositionResult* lres = find_prop(*l2, id);
        c.require(lres && lres->status == PropStatus::Holds && lres->skipped > 0,
                  std::string(id) + " on L2 should hold with skipped instances");
    }

    // byte-identical reports across two runs
    c.require(render_campaign_json(rep) == render_campaign_json(run_campaign(cfg)),
              "campaign reports are not byte-identical");
}

// --- criterion 7 -----------------------------------------------------------
void criterion_minimal_inconsistent(Check& c) {
    Space l2 = build_literal(2);
    auto fam = minimal_inconsistent_sets(l2);
    c.require(fam.complete && fam.sets.size() == 2 &&
                  fam.sets[0] == l2.set_of({"v1", "not_v1"}) &&
                  fam.sets[1] == l2.set_of({"v2", "not_v2"}),
              "L2 minimal inconsistent family is wrong");

    Space b1 = build_full_boolean(1);
    auto fam1 = minimal_inconsistent_sets(b1);
    c.require(fam1.complete && fam1.sets.size() == 1 &&
                  fam1.sets[0] == b1.set_of({"a", "not_a"}),
              "B1 minimal inconsistent family is wrong");

    for (const auto& [name, sp] : acceptance_corpus()) {
        const unsigned n = sp.size();
        if (n > 10) continue;
        auto family = minimal_inconsistent_sets(sp);
        for (std::uint64_t v = 0; v < (1ull << n); ++v) {
            Bitset s = Bitset::from_word(n, v);
            bool covered = false;
            for (const Bitset& m : family.sets)
                if (m.subset_of(s)) {
                    covered = true;
                    break;
                }
            if (covered == sp.is_consistent(s)) {
                c.require(false, name + ": the minimal family mischaracterizes a subset");
                return;
            }
        }
    }
}

// --- criterion 8 -----------------------------------------------------------
void criterion_detect_boolean(Check& c) {
    for (unsigned n = 1; n <= 5; ++n) {
        Space sp = build_literal(n);
        auto rep = detect_boolean(sp);
        c.require(rep.is_boolean, "L" + std::to_string(n) + " not detected Boolean");
        bool pairing_ok = rep.pairing.size() == 2 * n;
        for (unsigned i = 0; i < n && pairing_ok; ++i)
            pairing_ok = rep.pairing[2 * i].second == 2 * i + 1 &&
                         rep.pairing[2 * i + 1].second == 2 * i;
        c.require(pairing_ok, "L" + std::to_string(n) + " pairing is wrong");
    }
    auto b2 = detect_boolean(build_full_boolean(2));
    c.require(!b2.is_boolean, "B2 detected Boolean");
    c.require(b2.disjoint_check.status == CheckStatus::Fail &&
                  b2.disjoint_check.detail.find("overlapping minimal doubletons") !=
                      std::string::npos,
              "B2 lacks a disjointness witness");
    for (const auto& [name, sp] : acceptance_corpus()) {
        if (sp.size() > 15) continue;
        auto rep = detect_boolean(sp);
        c.require(rep.equiv_supersets_vacuous,
                  name + ": condition (v) is not reported vacuous");
    }
}

// --- criterion 9 -----------------------------------------------------------
void criterion_formula_module(Check& c) {
    static const std::pair<const char*, const char*> kPrecedence[] = {
        {"a & !b", "(a & !b)"},
        {"a -> b | c", "(a -> (b | c))"},
        {"a | b & c", "(a | (b & c))"},
        {"!a & b", "(!a & b)"},
        {"a -> b -> c", "(a -> (b -> c))"},
        {"a <-> b -> c", "(a <-> (b -> c))"},
        {"a & b | c & d", "((a & b) | (c & d))"},
        {"~a", "!a"},
        {"!(a | b)", "!(a | b)"},
        {"a <-> b <-> c", "((a <-> b) <-> c)"},
        {"((a))", "a"},
        {"!!a", "!!a"},
        {"a & b & c", "((a & b) & c)"},
        {"a | b | c", "((a | b) | c)"},
    };
    for (const auto& [text, expect] : kPrecedence)
        c.require(parse_formula(text).print() == expect,
                  std::string("precedence fixture failed: ") + text);

    std::mt19937_64 rng(2718);
    const std::vector<std::string> vars = {"a", "b", "c", "d", "e", "f"};
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<Formula> set;
        unsigned k = 1 + rng() % 4;
        for (unsigned i = 0; i < k; ++i)
            set.push_back(oracle::random_formula(rng, vars, 3));
        bool expect = false;
        for (std::uint64_t j = 0; j < (1ull << vars.size()) && !expect; ++j) {
            bool all = true;
            for (const Formula& f : set) all &= f.eval(vars, j);
            expect = all;
        }
        if (conjunction_satisfiable(set, vars) != expect) {
            c.require(false, "conjunction satisfiability disagrees with evaluation");
            return;
        }
    }
}

// --- criterion 10 ----------------------------------------------------------
void criterion_cli(Check& c) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "cspace_acceptance";
    fs::create_directories(dir);
    std::string l2 = (dir / "l2.json").string();
    int code = 0;

    run_cli("build literal --vars 2 -o " + l2, &code);
    c.require(code == 0, "build exited " + std::to_string(code));
    run_cli("validate " + l2, &code);
    c.require(code == 0, "validate exited " + std::to_string(code));
    std::string audit = run_cli("audit " + l2 + " --json", &code);
    c.require(code == 0, "audit exited " + std::to_string(code));

    try {
        json doc = json::parse(audit);
        c.require(doc.contains("propositions") && doc["propositions"].size() == 16,
                  "audit JSON misses propositions");
        c.require(doc.contains("space") && doc.contains("config") &&
                      doc.contains("z_mode_agreement"),
                  "audit JSON misses documented keys");
        for (const auto& p : doc["propositions"]) {
            c.require(p.contains("id") && p.contains("status") &&
                          p.contains("instances_checked") && p.contains("skipped") &&
                          p.contains("skip_reasons") && p.contains("quantifiers"),
                      "proposition entry misses documented keys");
        }
    } catch (const json::exception&) {
        c.require(false, "audit output is not valid JSON");
    }

    const std::string golden = std::string(CSPACE_SOURCE_DIR) + "/tests/golden";
    const std::pair<std::string, std::string> goldens[] = {
        {"build literal --vars 2", "l2_space.json"},
        {"classes " + l2 + " --json", "l2_classes.json"},
        {"negate " + l2 + " --set not_v1,not_v2 --json", "l2_negate.json"},
        {"detect-boolean " + l2 + " --json", "l2_detect.json"},
        {"audit " + l2 + " --props P02,P07 --json", "l2_audit.json"},
    };
    for (const auto& [args, name] : goldens) {
        std::string got = run_cli(args, &code);
        c.require(code == 0, name + ": command exited " + std::to_string(code));
        c.require(got == read_text_file(golden + "/" + name), name + ": bytes differ");
    }
    fs::remove_all(dir);
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<void(Check&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "axioms & builders", 5.0, criterion_axioms_and_builders},
        {2, "equivalence oracle agreement", 120.0, criterion_oracle_agreement},
        {3, "inconsistent collapse", 0.0, criterion_inconsistent_collapse},
        {4, "negation recovery", 0.0, criterion_negation_recovery},
        {5, "join recovery", 0.0, criterion_join_recovery},
        {6, "audit verdict pins", 300.0, criterion_audit_pins},
        {7, "minimal inconsistent sets", 0.0, criterion_minimal_inconsistent},
        {8, "boolean detection", 0.0, criterion_detect_boolean},
        {9, "formula module", 0.0, criterion_formula_module},
        {10, "CLI end-to-end", 0.0, criterion_cli},
    };

    int failed = 0;
    for (const Criterion& cr : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (cr.budget_seconds > 0 && seconds > cr.budget_seconds) {
            std::ostringstream msg;
            msg << "runtime " << seconds << "s exceeds the " << cr.budget_seconds
                << "s budget";
            check.require(false, msg.str());
        }
        bool ok = check.failures.empty();
        failed += !ok;
        std::printf("%s  criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", cr.id,
                    cr.title, seconds, check.notes.empty() ? "" : " -- ",
                    check.notes.c_str());
        for (const std::string& f : check.failures)
            std::printf("      %s\n", f.c_str());
    }
    if (failed) std::printf("%d criteria failed\n", failed);
    return failed;
}
