#include "cspace/auditor.hpp"

#include <algorithm>
#include <sstream>

#include "cspace/builders.hpp"
#include "cspace/equivalence.hpp"
#include "cspace/structure.hpp"

namespace cspace {

const std::array<PropositionInfo, 16>& proposition_registry() {
    static const std::array<PropositionInfo, 16> kRegistry = {{
        {"P01", "empty-set-consistent", "the empty set is consistent"},
        {"P02", "union-congruence", "if A ~ B then A u K ~ B u K"},
        {"P03", "boolean-from-algebra",
         "a space built from a Boolean algebra is a Boolean consistency space"},
        {"P04", "negation-uniqueness", "any two negations of x are equivalent"},
        {"P05", "double-negation", "not(not(x)) ~ x"},
        {"P06", "mate-pair-inconsistent", "{x, y, not(y)} is inconsistent"},
        {"P07", "mate-pair-absorption", "{x, y, not(y)} ~ {x}"},
        {"P08", "negation-congruence", "x ~ y iff not(x) ~ not(y)"},
        {"P09", "arrow-reflexivity", "x -> x"},
        {"P10", "arrow-antisymmetry", "if x -> y and y -> x then x ~ y"},
        {"P11", "equivalence-yields-arrows", "if x ~ y then x -> y and y -> x"},
        {"P12", "arrow-transitivity", "if x -> y and y -> z then x -> z"},
        {"P13", "meet-introduction", "if t -> x and t -> y then t -> {x, y}"},
        {"P14", "join-elimination", "if x -> t and y -> t then (x v y) -> t"},
        {"P15", "arrow-contrapositive", "x -> y iff not(y) -> not(x)"},
        {"P16", "arrow-monotonicity", "if x -> y then {t, x} -> {t, y}"},
    }};
    return kRegistry;
}

const PropositionInfo& proposition_info(const std::string& id) {
    for (const PropositionInfo& p : proposition_registry())
        if (id == p.id) return p;
    throw UsageError("unknown proposition id '" + id + "' (P01..P16)");
}

const char* prop_status_name(PropStatus s) {
    switch (s) {
        case PropStatus::Holds: return "holds";
        case PropStatus::Refuted: return "refuted";
        case PropStatus::Skipped: return "skipped";
    }
    return "?";
}

namespace {

std::string set_text(const Space& sp, const Bitset& a) {
    std::string out = "{";
    bool first = true;
    for (unsigned i : a.indices()) {
        if (!first) out += ",";
        first = false;
        out += sp.label(i);
    }
    return out + "}";
}

Binding bind_pt(const Space& sp, const char* var, std::uint32_t p) {
    return Binding{var, {sp.label(p)}};
}
Binding bind_set(const Space& sp, const char* var, const Bitset& s) {
    return Binding{var, sp.labels_of(s)};
}

// Counterexamples are kept minimal under (total bound size, then per-binding
// size-then-numeric order).
bool key_less(const std::vector<Bitset>& a, const std::vector<Bitset>& b) {
    unsigned ta = 0, tb = 0;
    for (const Bitset& s : a) ta += s.count();
    for (const Bitset& s : b) tb += s.count();
    if (ta != tb) return ta < tb;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] == b[i]) continue;
        return a[i].size_lex_less(b[i]);
    }
    return a.size() < b.size();
}

struct PropRun {
    PropositionResult res;
    bool have_cex = false;
    std::vector<Bitset> best_key;

    explicit PropRun(const std::string& id) { res.id = id; }

    void check_one() { ++res.instances_checked; }
    void check_many(std::uint64_t k) { res.instances_checked += k; }
    void skip(const std::string& reason, std::uint64_t k = 1) {
        res.skipped += k;
        res.skip_reasons[reason] += k;
    }
    void fail(std::vector<Bitset> key, const std::function<Counterexample()>& make) {
        if (!have_cex || key_less(key, best_key)) {
            best_key = std::move(key);
            res.counterexample = make();
            have_cex = true;
        }
    }
    PropositionResult finish() {
        res.status = have_cex ? PropStatus::Refuted
                   : res.instances_checked > 0 ? PropStatus::Holds
                                               : PropStatus::Skipped;
        return std::move(res);
    }
};

struct Ctx {
    const Space& sp;
    AuditConfig cfg;
    NegationIndex negs;
    std::vector<std::uint32_t> all_pts;
    std::vector<std::uint32_t> neg_pts;  // points with at least one negation
    std::vector<Bitset> bounded;         // set-quantifier domain
    unsigned bound_k = 0;
    bool bound_full = false;

    Ctx(const Space& space, const AuditConfig& config, bool scan_negations)
        : sp(space), cfg(config), negs(space, config.mode, config.cap) {
        for (std::uint32_t p = 0; p < sp.size(); ++p) {
            all_pts.push_back(p);
            if (scan_negations && negs.of_point(p).representative) neg_pts.push_back(p);
        }
        const unsigned n = sp.size();
        bound_full = n <= 6;
        bound_k = bound_full ? n : 3;
    }

    void build_bounded() {
        if (!bounded.empty()) return;
        const unsigned n = sp.size();
        if (n <= 6) {
            for (unsigned k = 0; k <= n; ++k)
                for_each_subset_of_size(n, k, [&](const Bitset& s) { bounded.push_back(s); });
            return;
        }
        for (unsigned k = 0; k <= bound_k; ++k)
            for_each_subset_of_size(n, k, [&](const Bitset& s) { bounded.push_back(s); });
        for (const Bitset& m : sp.maximal())
            if (m.count() > bound_k) bounded.push_back(m);
        std::sort(bounded.begin(), bounded.end(),
                  [](const Bitset& a, const Bitset& b) { return a.size_lex_less(b); });
        bounded.erase(std::unique(bounded.begin(), bounded.end()), bounded.end());
    }

    Bitset pt(std::uint32_t p) const { return sp.singleton(p); }

    std::string pts_note() const {
        return std::to_string(sp.size()) + " points";
    }
    std::string neg_pts_note() const {
        return std::to_string(neg_pts.size()) + " points with negations";
    }
    std::string bounded_note() const {
        std::ostringstream out;
        out << bounded.size() << " sets ("
            << (bound_full ? "all subsets" : "size <= 3 plus maximal sets") << ")";
        return out.str();
    }

    std::optional<std::vector<std::string>> kappa_for(const Bitset& a, const Bitset& b) {
        try {
            if (auto k = distinguishing_kappa(sp, a, b, cfg.cap)) return sp.labels_of(*k);
        } catch (const CapError&) {
        }
        return std::nullopt;
    }
};

// --- P01 ------------------------------------------------------------------
PropositionResult check_p01(Ctx& c) {
    PropRun r("P01");
    r.res.quantifiers = "single instance";
    r.check_one();
    if (!c.sp.is_consistent(c.sp.empty_set()))
        r.fail({}, [&] {
            return Counterexample{{}, std::nullopt, "the empty set is inconsistent"};
        });
    return r.finish();
}

// --- P02 ------------------------------------------------------------------
PropositionResult check_p02(Ctx& c) {
    PropRun r("P02");
    c.build_bounded();
    r.res.quantifiers = "A, B, K over " + c.bounded_note();
    const size_t d = c.bounded.size();
    const size_t words = (c.sp.maximal().size() + 63) / 64;
    std::vector<std::uint64_t> sig(d * words, 0);
    for (size_t i = 0; i < d; ++i)
        for (std::uint32_t m : signature(c.sp, c.bounded[i]))
            sig[i * words + m / 64] |= 1ull << (m % 64);

    auto same = [&](size_t i, size_t j) {
        for (size_t w = 0; w < words; ++w)
            if (sig[i * words + w] != sig[j * words + w]) return false;
        return true;
    };

    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) {
            if (!same(i, j)) {
                // hypothesis A ~ B is false: every K instance holds vacuously
                r.check_many(d);
                continue;
            }
            for (size_t k = 0; k < d; ++k) {
                r.check_one();
                bool ok = true;
                for (size_t w = 0; w < words; ++w)
                    if ((sig[i * words + w] & sig[k * words + w]) !=
                        (sig[j * words + w] & sig[k * words + w])) {
                        ok = false;
                        break;
                    }
                if (!ok) {
                    const Bitset &A = c.bounded[i], &B = c.bounded[j], &K = c.bounded[k];
                    r.fail({A, B, K}, [&] {
                        Counterexample cx;
                        cx.bindings = {bind_set(c.sp, "A", A), bind_set(c.sp, "B", B),
                                       bind_set(c.sp, "K", K)};
                        cx.kappa = c.kappa_for(A | K, B | K);
                        cx.detail = "A ~ B but A u K and B u K differ";
                        return cx;
                    });
                }
            }
        }
    }
    return r.finish();
}

// --- P03 ------------------------------------------------------------------
PropositionResult check_p03(Ctx& c) {
    PropRun r("P03");
    r.res.quantifiers = "single instance (space-level)";
    const std::string& origin = c.sp.origin();
    const bool algebraic = origin.rfind("literal(", 0) == 0 ||
                           origin.rfind("boolean(", 0) == 0 || origin == "formulas";
    if (!algebraic) {
        r.skip("space origin does not certify a Boolean-algebra construction");
        return r.finish();
    }
    try {
        BooleanDetectReport det = detect_boolean(c.sp, c.cfg.cap);
        r.check_one();
        if (!det.is_boolean) {
            r.fail({}, [&] {
                Counterexample cx;
                std::ostringstream detail;
                auto add = [&](const char* name, const ConditionVerdict& v) {
                    if (v.status == CheckStatus::Fail) {
                        if (detail.tellp() > 0) detail << "; ";
                        detail << name << ": " << v.detail;
                    }
                };
                add("doubleton check", det.doubleton_check);
                add("disjointness check", det.disjoint_check);
                add("cover check", det.cover_check);
                add("exactness check", det.exactness_check);
                add("equivalent-supersets check", det.equiv_supersets_check);
                cx.detail = detail.str();
                return cx;
            });
        }
    } catch (const CapError& e) {
        r.skip(std::string("detection refused: ") + e.what());
    }
    return r.finish();
}

// --- P04 ------------------------------------------------------------------
PropositionResult check_p04(Ctx& c) {
    PropRun r("P04");
    r.res.quantifiers = "x over " + c.pts_note();
    for (std::uint32_t x : c.all_pts) {
        const NegationResult& nr = c.negs.of_point(x);
        if (nr.candidates.empty()) {
            r.skip("missing negation of x");
            continue;
        }
        r.check_one();
        if (!nr.all_equivalent) {
            r.fail({c.pt(x)}, [&] {
                Counterexample cx;
                cx.bindings.push_back(bind_pt(c.sp, "x", x));
                Bitset cands(c.sp.size());
                for (std::uint32_t y : nr.candidates) cands.set(y);
                cx.bindings.push_back(bind_set(c.sp, "candidates", cands));
                for (size_t i = 0; i + 1 < nr.candidates.size() && !cx.kappa; ++i)
                    for (size_t j = i + 1; j < nr.candidates.size(); ++j)
                        if (!equivalent(c.sp, c.pt(nr.candidates[i]), c.pt(nr.candidates[j]))) {
                            cx.kappa = c.kappa_for(c.pt(nr.candidates[i]),
                                                   c.pt(nr.candidates[j]));
                            break;
                        }
                cx.detail = "two negation candidates are not equivalent";
                return cx;
            });
        }
    }
    return r.finish();
}

// --- P05 ------------------------------------------------------------------
PropositionResult check_p05(Ctx& c) {
    PropRun r("P05");
    r.res.quantifiers = "x over " + c.pts_note();
    for (std::uint32_t x : c.all_pts) {
        const NegationResult& nr = c.negs.of_point(x);
        if (!nr.representative) {
            r.skip("missing negation of x");
            continue;
        }
        const std::uint32_t xb = *nr.representative;
        const NegationResult& nr2 = c.negs.of_point(xb);
        if (nr2.candidates.empty()) {
            r.skip("missing negation of x-bar");
            continue;
        }
        r.check_one();
        for (std::uint32_t xbb : nr2.candidates)
            if (!equivalent(c.sp, c.pt(xbb), c.pt(x)))
                r.fail({c.pt(x)}, [&] {
                    Counterexample cx;
                    cx.bindings = {bind_pt(c.sp, "x", x), bind_pt(c.sp, "x-bar", xb),
                                   bind_pt(c.sp, "x-bar-bar", xbb)};
                    cx.kappa = c.kappa_for(c.pt(xbb), c.pt(x));
                    cx.detail = "not(not(x)) is not equivalent to x";
                    return cx;
                });
    }
    return r.finish();
}

// --- P06 ------------------------------------------------------------------
PropositionResult check_p06(Ctx& c) {
    PropRun r("P06");
    r.res.quantifiers = "x, y over " + c.pts_note();
    for (std::uint32_t x : c.all_pts)
        for (std::uint32_t y : c.all_pts) {
            const NegationResult& nr = c.negs.of_point(y);
            if (nr.candidates.empty()) {
                r.skip("missing negation of y");
                continue;
            }
            r.check_one();
            for (std::uint32_t yb : nr.candidates) {
                Bitset s = c.pt(x) | c.pt(y) | c.pt(yb);
                if (c.sp.is_consistent(s))
                    r.fail({c.pt(x), c.pt(y)}, [&] {
                        Counterexample cx;
                        cx.bindings = {bind_pt(c.sp, "x", x), bind_pt(c.sp, "y", y),
                                       bind_pt(c.sp, "y-bar", yb)};
                        cx.detail = set_text(c.sp, s) + " is consistent";
                        return cx;
                    });
            }
        }
    return r.finish();
}

// --- P07 ------------------------------------------------------------------
PropositionResult check_p07(Ctx& c) {
    PropRun r("P07");
    r.res.quantifiers =
        "x, y over " + c.pts_note() + "; x outside {y} and the negations of y";
    for (std::uint32_t x : c.all_pts)
        for (std::uint32_t y : c.all_pts) {
            if (x == y) continue;
            const NegationResult& nr = c.negs.of_point(y);
            if (std::find(nr.candidates.begin(), nr.candidates.end(), x) !=
                nr.candidates.end())
                continue;
            if (nr.candidates.empty()) {
                r.skip("missing negation of y");
                continue;
            }
            r.check_one();
            for (std::uint32_t yb : nr.candidates) {
                Bitset lhs = c.pt(x) | c.pt(y) | c.pt(yb);
                if (!equivalent(c.sp, lhs, c.pt(x)))
                    r.fail({c.pt(x), c.pt(y)}, [&] {
                        Counterexample cx;
                        cx.bindings = {bind_pt(c.sp, "x", x), bind_pt(c.sp, "y", y),
                                       bind_pt(c.sp, "y-bar", yb)};
                        cx.kappa = c.kappa_for(lhs, c.pt(x));
                        cx.detail = set_text(c.sp, lhs) + " is not equivalent to " +
                                    set_text(c.sp, c.pt(x));
                        return cx;
                    });
            }
        }
    return r.finish();
}

// --- P08 ------------------------------------------------------------------
PropositionResult check_p08(Ctx& c) {
    PropRun r("P08");
    r.res.quantifiers = "unordered pairs x <= y over " + c.pts_note() +
                        "; requires negations of x, y, x-bar, y-bar";
    for (std::uint32_t x : c.all_pts)
        for (std::uint32_t y : c.all_pts) {
            if (y < x) continue;
            const NegationResult& nx = c.negs.of_point(x);
            if (!nx.representative) {
                r.skip("missing negation of x");
                continue;
            }
            const NegationResult& ny = c.negs.of_point(y);
            if (!ny.representative) {
                r.skip("missing negation of y");
                continue;
            }
            if (!c.negs.of_point(*nx.representative).representative) {
                r.skip("missing negation of x-bar");
                continue;
            }
            if (!c.negs.of_point(*ny.representative).representative) {
                r.skip("missing negation of y-bar");
                continue;
            }
            r.check_one();
            const std::uint32_t xb = *nx.representative, yb = *ny.representative;
            bool lhs = equivalent(c.sp, c.pt(x), c.pt(y));
            bool rhs = equivalent(c.sp, c.pt(xb), c.pt(yb));
            if (lhs != rhs)
                r.fail({c.pt(x), c.pt(y)}, [&] {
                    Counterexample cx;
                    cx.bindings = {bind_pt(c.sp, "x", x), bind_pt(c.sp, "y", y),
                                   bind_pt(c.sp, "x-bar", xb), bind_pt(c.sp, "y-bar", yb)};
                    cx.kappa = lhs ? c.kappa_for(c.pt(xb), c.pt(yb))
                                   : c.kappa_for(c.pt(x), c.pt(y));
                    cx.detail = lhs ? "x ~ y but x-bar is not equivalent to y-bar"
                                    : "x-bar ~ y-bar but x is not equivalent to y";
                    return cx;
                });
        }
    return r.finish();
}

// --- P09 ------------------------------------------------------------------
PropositionResult check_p09(Ctx& c) {
    PropRun r("P09");
    r.res.quantifiers = "x over " + c.neg_pts_note();
    for (std::uint32_t x : c.neg_pts) {
        r.check_one();
        if (!c.negs.implies(c.pt(x), c.pt(x)).is_true())
            r.fail({c.pt(x)}, [&] {
                Counterexample cx;
                cx.bindings = {bind_pt(c.sp, "x", x)};
                cx.detail = "x together with its negation is consistent";
                return cx;
            });
    }
    return r.finish();
}

// --- P10 ------------------------------------------------------------------
PropositionResult check_p10(Ctx& c) {
    PropRun r("P10");
    r.res.quantifiers = "x, y over " + c.neg_pts_note();
    for (std::uint32_t x : c.neg_pts)
        for (std::uint32_t y : c.neg_pts) {
            r.check_one();
            if (c.negs.implies(c.pt(x), c.pt(y)).is_true() &&
                c.negs.implies(c.pt(y), c.pt(x)).is_true() &&
                !equivalent(c.sp, c.pt(x), c.pt(y)))
                r.fail({c.pt(x), c.pt(y)}, [&] {
                    Counterexample cx;
                    cx.bindings = {bind_pt(c.sp, "x", x), bind_pt(c.sp, "y", y)};
                    cx.kappa = c.kappa_for(c.pt(x), c.pt(y));
                    cx.detail = "x -> y and y -> x but x is not equivalent to y";
                    return cx;
                });
        }
    return r.finish();
}

// --- P11 ------------------------------------------------------------------
PropositionResult check_p11(Ctx& c) {
    PropRun r("P11");
    r.res.quantifiers = "x, y over " + c.neg_pts_note();
    for (std::uint32_t x : c.neg_pts)
        for (std::uint32_t y : c.neg_pts) {
            r.check_one();
            if (equivalent(c.sp, c.pt(x), c.pt(y)) &&
                (!c.negs.implies(c.pt(x), c.pt(y)).is_true() ||
                 !c.negs.implies(c.pt(y), c.pt(x)).is_true()))
                r.fail({c.pt(x), c.pt(y)}, [&] {
                    Counterexample cx;
                    cx.bindings = {bind_pt(c.sp, "x", x), bind_pt(c.sp, "y", y)};
                    cx.detail = "x ~ y but an arrow between them fails";
                    return cx;
                });
        }
    return r.finish();
}

// --- P12 ------------------------------------------------------------------
PropositionResult check_p12(Ctx& c) {
    PropRun r("P12");
    r.res.quantifiers =
        "x over " + c.pts_note() + "; y, z over " + c.neg_pts_note();
    for (std::uint32_t x : c.all_pts)
        for (std::uint32_t y : c.neg_pts)
            for (std::uint32_t z : c.neg_pts) {
                r.check_one();
                if (c.negs.implies(c.pt(x), c.pt(y)).is_true() &&
                    c.negs.implies(c.pt(y), c.pt(z)).is_true() &&
                    !c.negs.implies(c.pt(x), c.pt(z)).is_true())
                    r.fail({c.pt(x), c.pt(y), c.pt(z)}, [&] {
                        Counterexample cx;
                        cx.bindings = {bind_pt(c.sp, "x", x), bind_pt(c.sp, "y", y),
                                       bind_pt(c.sp, "z", z)};
                        cx.detail = "x -> y and y -> z but not x -> z";
                        return cx;
                    });
            }
    return r.finish();
}

// --- P13 ------------------------------------------------------------------
PropositionResult check_p13(Ctx& c) {
    PropRun r("P13");
    r.res.quantifiers =
        "t over " + c.pts_note() + "; x, y over " + c.neg_pts_note();
    for (std::uint32_t x : c.neg_pts)
        for (std::uint32_t y : c.neg_pts) {
            const Bitset meet_xy = c.pt(x) | c.pt(y);
            const NegationResult& nm = c.negs.of(meet_xy);
            if (nm.candidates.empty()) {
                r.skip("missing negation of {x,y}", c.all_pts.size());
                continue;
            }
            for (std::uint32_t t : c.all_pts) {
                r.check_one();
                if (c.negs.implies(c.pt(t), c.pt(x)).is_true() &&
                    c.negs.implies(c.pt(t), c.pt(y)).is_true() &&
                    !c.negs.implies(c.pt(t), meet_xy).is_true())
                    r.fail({c.pt(t), c.pt(x), c.pt(y)}, [&] {
                        Counterexample cx;
                        cx.bindings = {bind_pt(c.sp, "t", t), bind_pt(c.sp, "x", x),
                                       bind_pt(c.sp, "y", y)};
                        cx.detail = "t -> x and t -> y but not t -> {x,y}";
                        return cx;
                    });
            }
        }
    return r.finish();
}

// --- P14 ------------------------------------------------------------------
PropositionResult check_p14(Ctx& c) {
    PropRun r("P14");
    r.res.quantifiers = "x, y, t over " + c.neg_pts_note();
    for (std::uint32_t x : c.neg_pts)
        for (std::uint32_t y : c.neg_pts) {
            std::optional<std::uint32_t> j = c.negs.join(x, y);
            if (!j) {
                r.skip("join of x and y is undefined (missing negation of {x-bar,y-bar})",
                       c.neg_pts.size());
                continue;
            }
            for (std::uint32_t t : c.neg_pts) {
                r.check_one();
                if (c.negs.implies(c.pt(x), c.pt(t)).is_true() &&
                    c.negs.implies(c.pt(y), c.pt(t)).is_true() &&
                    !c.negs.implies(c.pt(*j), c.pt(t)).is_true())
                    r.fail({c.pt(x), c.pt(y), c.pt(t)}, [&] {
                        Counterexample cx;
                        cx.bindings = {bind_pt(c.sp, "x", x), bind_pt(c.sp, "y", y),
                                       bind_pt(c.sp, "t", t), bind_pt(c.sp, "x v y", *j)};
                        cx.detail = "x -> t and y -> t but not (x v y) -> t";
                        return cx;
                    });
            }
        }
    return r.finish();
}

// --- P15 ------------------------------------------------------------------
PropositionResult check_p15(Ctx& c) {
    PropRun r("P15");
    r.res.quantifiers = "x, y over " + c.neg_pts_note();
    for (std::uint32_t x : c.neg_pts)
        for (std::uint32_t y : c.neg_pts) {
            const std::uint32_t xb = *c.negs.of_point(x).representative;
            const std::uint32_t yb = *c.negs.of_point(y).representative;
            if (c.negs.of_point(xb).candidates.empty()) {
                r.skip("missing negation of x-bar");
                continue;
            }
            r.check_one();
            bool fwd = c.negs.implies(c.pt(x), c.pt(y)).is_true();
            bool bwd = c.negs.implies(c.pt(yb), c.pt(xb)).is_true();
            if (fwd != bwd)
                r.fail({c.pt(x), c.pt(y)}, [&] {
                    Counterexample cx;
                    cx.bindings = {bind_pt(c.sp, "x", x), bind_pt(c.sp, "y", y),
                                   bind_pt(c.sp, "x-bar", xb), bind_pt(c.sp, "y-bar", yb)};
                    cx.detail = fwd ? "x -> y but not y-bar -> x-bar"
                                    : "y-bar -> x-bar but not x -> y";
                    return cx;
                });
        }
    return r.finish();
}

// --- P16 ------------------------------------------------------------------
PropositionResult check_p16(Ctx& c) {
    PropRun r("P16");
    r.res.quantifiers =
        "x, t over " + c.pts_note() + "; y over " + c.neg_pts_note();
    for (std::uint32_t t : c.all_pts)
        for (std::uint32_t y : c.neg_pts) {
            const Bitset ty = c.pt(t) | c.pt(y);
            if (c.negs.of(ty).candidates.empty()) {
                r.skip("missing negation of {t,y}", c.all_pts.size());
                continue;
            }
            for (std::uint32_t x : c.all_pts) {
                r.check_one();
                if (c.negs.implies(c.pt(x), c.pt(y)).is_true() &&
                    !c.negs.implies(c.pt(t) | c.pt(x), ty).is_true())
                    r.fail({c.pt(x), c.pt(y), c.pt(t)}, [&] {
                        Counterexample cx;
                        cx.bindings = {bind_pt(c.sp, "x", x), bind_pt(c.sp, "y", y),
                                       bind_pt(c.sp, "t", t)};
                        cx.detail = "x -> y but not {t,x} -> {t,y}";
                        return cx;
                    });
            }
        }
    return r.finish();
}

using Checker = PropositionResult (*)(Ctx&);

const std::array<Checker, 16> kCheckers = {
    check_p01, check_p02, check_p03, check_p04, check_p05, check_p06,
    check_p07, check_p08, check_p09, check_p10, check_p11, check_p12,
    check_p13, check_p14, check_p15, check_p16,
};

bool needs_negations(const std::string& id) { return id != "P01" && id != "P02" && id != "P03"; }

}  // namespace

AuditReport audit_space(const Space& space, const std::string& name,
                        const AuditConfig& config) {
    std::vector<std::string> selected = config.props;
    if (selected.empty())
        for (const PropositionInfo& p : proposition_registry()) selected.push_back(p.id);
    for (const std::string& id : selected) proposition_info(id);  // reject unknown ids
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

    const unsigned n = space.size();
    for (const std::string& id : selected) {
        if (id == "P02" && static_cast<int>(n) > config.cap)
            throw CapError("audit of P02 needs bounded subset enumeration over " +
                           std::to_string(n) + " points; cap is " +
                           std::to_string(config.cap));
        if (needs_negations(id) && config.mode == ZMode::Subsets &&
            static_cast<int>(n) > config.cap)
            throw CapError("audit of " + id + " in subsets mode needs 2^" +
                           std::to_string(n) + " work; cap is " +
                           std::to_string(config.cap));
    }

    AuditReport rep;
    rep.space_name = name;
    rep.origin = space.origin();
    rep.points = n;
    rep.maximal_sets = static_cast<unsigned>(space.maximal().size());
    rep.z_mode = zmode_name(config.mode);
    rep.cap = config.cap;

    bool any_negations = false;
    for (const std::string& id : selected) any_negations |= needs_negations(id);
    Ctx ctx(space, config, any_negations);
    rep.subset_bound = ctx.bound_k;
    rep.subset_bound_full = ctx.bound_full;

    for (const std::string& id : selected) {
        size_t index = static_cast<size_t>(id[1] - '0') * 10 + (id[2] - '0') - 1;
        rep.results.push_back(kCheckers[index](ctx));
    }

    // Singleton-level cross-check of the two z ranges.
    if (static_cast<int>(n) <= config.cap) {
        rep.zmode_checked = true;
        rep.zmode_agree = true;
        NegationIndex elements(space, ZMode::Elements, config.cap);
        NegationIndex subsets(space, ZMode::Subsets, config.cap);
        for (std::uint32_t p = 0; p < n && rep.zmode_agree; ++p) {
            const auto& a = elements.of_point(p).candidates;
            const auto& b = subsets.of_point(p).candidates;
            if (a != b) {
                rep.zmode_agree = false;
                rep.zmode_divergence =
                    "negation candidates of '" + space.label(p) + "' differ between modes";
            }
        }
    }
    return rep;
}

CampaignConfig default_campaign() {
    CampaignConfig cfg;
    cfg.name = "default";
    for (unsigned v = 1; v <= 3; ++v)
        cfg.entries.push_back({"L" + std::to_string(v), [v] { return build_literal(v); }});
    for (unsigned v = 1; v <= 2; ++v)
        cfg.entries.push_back({"B" + std::to_string(v), [v] { return build_full_boolean(v); }});
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        unsigned points = 4 + static_cast<unsigned>((seed - 1) % 3);
        std::ostringstream name;
        name << "random(points=" << points << ",maximal=" << points << ",seed=" << seed << ")";
        cfg.entries.push_back(
            {name.str(), [points, seed] { return random_space(points, points, seed); }});
    }
    return cfg;
}

CampaignReport run_campaign(const CampaignConfig& config) {
    CampaignReport out;
    out.name = config.name;
    out.z_mode = zmode_name(config.audit.mode);
    out.cap = config.audit.cap;
    for (const CampaignEntry& entry : config.entries) {
        try {
            Space space = entry.build();
            out.reports.push_back(audit_space(space, entry.name, config.audit));
        } catch (const Error& e) {
            out.build_errors.push_back(entry.name + ": " + e.what());
        }
    }
    for (const PropositionInfo& p : proposition_registry()) {
        SummaryRow row;
        row.id = p.id;
        for (const AuditReport& rep : out.reports)
            for (const PropositionResult& res : rep.results) {
                if (res.id != p.id) continue;
                switch (res.status) {
                    case PropStatus::Holds: ++row.holds; break;
                    case PropStatus::Skipped: ++row.skipped; break;
                    case PropStatus::Refuted:
                        ++row.refuted;
                        if (row.first_refuted_space.empty()) {
                            row.first_refuted_space = rep.space_name;
                            row.first_counterexample = res.counterexample;
                        }
                        break;
                }
            }
        out.summary.push_back(std::move(row));
    }
    return out;
}

}  // namespace cspace
