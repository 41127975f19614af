// cspace: build, inspect, and audit finite consistency spaces.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cspace/auditor.hpp"
#include "cspace/builders.hpp"
#include "cspace/connectives.hpp"
#include "cspace/equivalence.hpp"
#include "cspace/io.hpp"
#include "cspace/structure.hpp"

using nlohmann::json;
using namespace cspace;

namespace {

struct GlobalOpts {
    std::string out_path;
    bool as_json = false;
    std::string z_mode = "subsets";
    int max_points = kDefaultExhaustiveCap;
    bool force = false;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out_path.empty())
        std::cout << text;
    else
        write_text_file(g.out_path, text);
}

std::vector<std::string> split_labels(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(csv);
    while (std::getline(in, cur, ',')) {
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

json labels_json(const Space& sp, const Bitset& s) { return json(sp.labels_of(s)); }

std::string set_text(const Space& sp, const Bitset& s) {
    std::string out = "{";
    bool first = true;
    for (unsigned i : s.indices()) {
        if (!first) out += ",";
        first = false;
        out += sp.label(i);
    }
    return out + "}";
}

std::string display_name(const std::string& file) {
    return std::filesystem::path(file).filename().string();
}

json space_header(const Space& sp, const std::string& file) {
    return json{{"file", display_name(file)},
                {"points", sp.size()},
                {"maximal_sets", sp.maximal().size()}};
}

int cmd_validate(const GlobalOpts& g, const std::string& file) {
    Space sp = load_space(file, /*force=*/true);
    ValidationReport rep = validate(sp);
    if (g.as_json) {
        json out;
        out["space"] = space_header(sp, file);
        out["ok"] = rep.ok();
        out["violations"] = json::array();
        for (const Violation& v : rep.violations) {
            json vj;
            vj["invariant"] = invariant_name(v.id);
            vj["message"] = v.message;
            if (v.witness_set) vj["witness_set"] = labels_json(sp, *v.witness_set);
            if (v.witness_point) vj["witness_point"] = sp.label(*v.witness_point);
            out["violations"].push_back(std::move(vj));
        }
        emit(g, out.dump(2) + "\n");
    } else {
        emit(g, render_validation(sp, rep));
    }
    return rep.ok() ? 0 : 1;
}

int cmd_classes(const GlobalOpts& g, const std::string& file,
                std::optional<unsigned> max_size) {
    Space sp = load_space(file, g.force);
    auto classes = equivalence_classes(sp, max_size, g.max_points);
    if (g.as_json) {
        json out;
        out["space"] = space_header(sp, file);
        if (max_size) out["max_size"] = *max_size;
        out["classes"] = json::array();
        for (const EquivalenceClass& c : classes) {
            json cj;
            cj["representative"] = labels_json(sp, c.representative);
            cj["class_size"] = c.members.size();
            cj["signature"] = json::array();
            for (std::uint32_t m : c.signature)
                cj["signature"].push_back(labels_json(sp, sp.maximal()[m]));
            out["classes"].push_back(std::move(cj));
        }
        emit(g, out.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << classes.size() << " equivalence classes\n";
        for (const EquivalenceClass& c : classes) {
            out << set_text(sp, c.representative) << "  size " << c.members.size()
                << "  signature";
            for (std::uint32_t m : c.signature) out << " " << set_text(sp, sp.maximal()[m]);
            if (c.signature.empty()) out << " (empty: inconsistent)";
            out << "\n";
        }
        emit(g, out.str());
    }
    return 0;
}

int cmd_negate(const GlobalOpts& g, const std::string& file, const std::string& set_csv) {
    Space sp = load_space(file, g.force);
    Bitset a = sp.set_of(split_labels(set_csv));
    NegationResult res = find_negations(sp, a, zmode_from_name(g.z_mode), g.max_points);
    if (g.as_json) {
        json out;
        out["space"] = space_header(sp, file);
        out["input_set"] = labels_json(sp, a);
        out["mode"] = zmode_name(res.mode);
        out["candidates"] = json::array();
        for (std::uint32_t c : res.candidates) out["candidates"].push_back(sp.label(c));
        out["representative"] =
            res.representative ? json(sp.label(*res.representative)) : json(nullptr);
        out["all_equivalent"] = res.all_equivalent;
        emit(g, out.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "negations of " << set_text(sp, a) << " (" << zmode_name(res.mode) << " mode): ";
        if (res.candidates.empty()) {
            out << "none\n";
        } else {
            for (size_t i = 0; i < res.candidates.size(); ++i)
                out << (i ? ", " : "") << sp.label(res.candidates[i]);
            out << (res.all_equivalent ? "  (all equivalent)" : "  (NOT all equivalent)")
                << "\n";
        }
        emit(g, out.str());
    }
    return 0;
}

int cmd_implies(const GlobalOpts& g, const std::string& file, const std::string& lhs_csv,
                const std::string& rhs_csv) {
    Space sp = load_space(file, g.force);
    Bitset lhs = sp.set_of(split_labels(lhs_csv));
    Bitset rhs = sp.set_of(split_labels(rhs_csv));
    TernaryVerdict v = implies(sp, lhs, rhs, zmode_from_name(g.z_mode), g.max_points);
    const char* verdict = v.value == Ternary::True    ? "true"
                          : v.value == Ternary::False ? "false"
                                                      : "undefined";
    if (g.as_json) {
        json out;
        out["space"] = space_header(sp, file);
        out["lhs"] = labels_json(sp, lhs);
        out["rhs"] = labels_json(sp, rhs);
        out["verdict"] = verdict;
        if (!v.reason.empty()) out["reason"] = v.reason;
        emit(g, out.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << set_text(sp, lhs) << " -> " << set_text(sp, rhs) << ": " << verdict;
        if (!v.reason.empty()) out << " (" << v.reason << ")";
        out << "\n";
        emit(g, out.str());
    }
    return 0;
}

int cmd_join(const GlobalOpts& g, const std::string& file, const std::string& x,
             const std::string& y) {
    Space sp = load_space(file, g.force);
    std::uint32_t xi = sp.require_label(x), yi = sp.require_label(y);
    auto j = join(sp, xi, yi, zmode_from_name(g.z_mode), g.max_points);
    if (g.as_json) {
        json out;
        out["space"] = space_header(sp, file);
        out["x"] = x;
        out["y"] = y;
        out["join"] = j ? json(sp.label(*j)) : json(nullptr);
        emit(g, out.dump(2) + "\n");
    } else {
        emit(g, x + " v " + y + " = " + (j ? sp.label(*j) : "none") + "\n");
    }
    return 0;
}

int cmd_meet(const GlobalOpts& g, const std::string& file, const std::string& lhs_csv,
             const std::string& rhs_csv) {
    Space sp = load_space(file, g.force);
    Bitset lhs = sp.set_of(split_labels(lhs_csv));
    Bitset rhs = sp.set_of(split_labels(rhs_csv));
    Bitset m = meet(lhs, rhs);
    if (g.as_json) {
        json out;
        out["space"] = space_header(sp, file);
        out["lhs"] = labels_json(sp, lhs);
        out["rhs"] = labels_json(sp, rhs);
        out["meet"] = labels_json(sp, m);
        out["consistent"] = sp.is_consistent(m);
        emit(g, out.dump(2) + "\n");
    } else {
        emit(g, set_text(sp, m) +
                    (sp.is_consistent(m) ? "  (consistent)\n" : "  (inconsistent)\n"));
    }
    return 0;
}

int cmd_minimal(const GlobalOpts& g, const std::string& file) {
    Space sp = load_space(file, g.force);
    auto fam = minimal_inconsistent_sets(sp, g.max_points);
    if (g.as_json) {
        json out;
        out["space"] = space_header(sp, file);
        out["complete"] = fam.complete;
        out["sets"] = json::array();
        for (const Bitset& s : fam.sets) out["sets"].push_back(labels_json(sp, s));
        emit(g, out.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << fam.sets.size() << " minimal inconsistent sets"
            << (fam.complete ? "" : " (partial)") << "\n";
        for (const Bitset& s : fam.sets) out << set_text(sp, s) << "\n";
        emit(g, out.str());
    }
    return 0;
}

json verdict_json(const ConditionVerdict& v) {
    json out;
    out["status"] = v.status == CheckStatus::Pass   ? "pass"
                    : v.status == CheckStatus::Fail ? "fail"
                                                    : "skipped";
    if (!v.detail.empty()) out["detail"] = v.detail;
    return out;
}

int cmd_detect(const GlobalOpts& g, const std::string& file) {
    Space sp = load_space(file, g.force);
    BooleanDetectReport rep = detect_boolean(sp, g.max_points);
    if (g.as_json) {
        json out;
        out["space"] = space_header(sp, file);
        out["is_boolean"] = rep.is_boolean;
        out["checks"] = {{"doubleton", verdict_json(rep.doubleton_check)},
                         {"disjoint", verdict_json(rep.disjoint_check)},
                         {"cover", verdict_json(rep.cover_check)},
                         {"exactness", verdict_json(rep.exactness_check)},
                         {"equiv_supersets", verdict_json(rep.equiv_supersets_check)}};
        out["equiv_supersets_vacuous"] = rep.equiv_supersets_vacuous;
        out["family_complete"] = rep.family_complete;
        out["note"] = rep.note;
        json pairing = json::object();
        for (auto [p, mate] : rep.pairing) pairing[sp.label(p)] = sp.label(mate);
        out["pairing"] = pairing;
        emit(g, out.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << (rep.is_boolean ? "Boolean consistency space\n"
                               : "not a Boolean consistency space\n");
        auto line = [&](const char* name, const ConditionVerdict& v) {
            out << "  " << name << ": "
                << (v.status == CheckStatus::Pass   ? "pass"
                    : v.status == CheckStatus::Fail ? "fail"
                                                    : "skipped");
            if (!v.detail.empty()) out << " -- " << v.detail;
            out << "\n";
        };
        line("doubleton", rep.doubleton_check);
        line("disjoint", rep.disjoint_check);
        line("cover", rep.cover_check);
        line("exactness", rep.exactness_check);
        line("equiv-supersets", rep.equiv_supersets_check);
        out << "  equiv-supersets vacuous: " << (rep.equiv_supersets_vacuous ? "yes" : "no")
            << "\n";
        if (!rep.pairing.empty()) {
            out << "  pairing:";
            for (auto [p, mate] : rep.pairing)
                if (p < mate) out << " " << sp.label(p) << "<->" << sp.label(mate);
            out << "\n";
        }
        out << "  note: " << rep.note << "\n";
        emit(g, out.str());
    }
    return 0;
}

int cmd_audit(const GlobalOpts& g, const std::string& file, const std::string& campaign,
              const std::string& props_csv) {
    AuditConfig cfg;
    cfg.mode = zmode_from_name(g.z_mode);
    cfg.cap = g.max_points;
    cfg.props = split_labels(props_csv);
    if (!campaign.empty()) {
        if (campaign != "default")
            throw UsageError("unknown campaign '" + campaign + "' (only: default)");
        CampaignConfig cc = default_campaign();
        cc.audit = cfg;
        CampaignReport rep = run_campaign(cc);
        emit(g, g.as_json ? render_campaign_json(rep) : render_campaign_text(rep));
        return 0;
    }
    Space sp = load_space(file, g.force);
    AuditReport rep = audit_space(sp, display_name(file), cfg);
    emit(g, g.as_json ? render_report_json(rep) : render_report_text(rep));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cspace: build, inspect, and audit finite consistency spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("-o,--output", g.out_path, "write output to a file instead of stdout");
    app.add_flag("--json", g.as_json, "machine-readable output");
    app.add_option("--z-mode", g.z_mode, "range of z in negation conditions")
        ->check(CLI::IsMember({"elements", "subsets"}))
        ->capture_default_str();
    app.add_option("--max-points", g.max_points,
                   "exhaustive-enumeration cap (points)")
        ->envname("CSPACE_MAX_POINTS")
        ->capture_default_str();
    app.add_flag("--force", g.force, "load spaces that fail validation");

    // build
    auto* build = app.add_subcommand("build", "construct a space and write it");
    unsigned vars = 2;
    std::string formulas_file;
    unsigned rnd_points = 4, rnd_maximal = 4;
    std::uint64_t rnd_seed = 1;
    auto* b_lit = build->add_subcommand("literal", "literal space on n variables");
    b_lit->add_option("--vars", vars, "number of variables")->required();
    auto* b_bool = build->add_subcommand("boolean", "full Boolean space on n variables");
    b_bool->add_option("--vars", vars, "number of variables")->required();
    auto* b_form = build->add_subcommand("formulas", "space from a formula list file");
    b_form->add_option("--file", formulas_file, "formula list file")->required();
    auto* b_rand = build->add_subcommand("random", "seeded random space");
    b_rand->add_option("--points", rnd_points, "number of points")->required();
    b_rand->add_option("--maximal", rnd_maximal, "number of sampled maximal sets")->required();
    b_rand->add_option("--seed", rnd_seed, "generator seed")->capture_default_str();
    build->require_subcommand(1);

    // analysis commands
    std::string file, set_csv, lhs_csv, rhs_csv, x_label, y_label, props_csv, campaign;
    std::optional<unsigned> max_size;
    unsigned max_size_raw = 0;

    auto* validate_cmd = app.add_subcommand("validate", "check the space axioms");
    validate_cmd->add_option("file", file, "space file")->required();

    auto* classes_cmd = app.add_subcommand("classes", "equivalence classes of subsets");
    classes_cmd->add_option("file", file, "space file")->required();
    auto* ms_opt = classes_cmd->add_option("--max-size", max_size_raw,
                                           "only subsets with at most this many members");

    auto* negate_cmd = app.add_subcommand("negate", "negation candidates of a set");
    negate_cmd->add_option("file", file, "space file")->required();
    negate_cmd->add_option("--set", set_csv, "comma-separated point labels")->required();

    auto* implies_cmd = app.add_subcommand("implies", "decide lhs -> rhs");
    implies_cmd->add_option("file", file, "space file")->required();
    implies_cmd->add_option("--lhs", lhs_csv, "comma-separated point labels")->required();
    implies_cmd->add_option("--rhs", rhs_csv, "comma-separated point labels")->required();

    auto* join_cmd = app.add_subcommand("join", "join of two points");
    join_cmd->add_option("file", file, "space file")->required();
    join_cmd->add_option("--x", x_label, "first point")->required();
    join_cmd->add_option("--y", y_label, "second point")->required();

    auto* meet_cmd = app.add_subcommand("meet", "meet (set union) of two sets");
    meet_cmd->add_option("file", file, "space file")->required();
    meet_cmd->add_option("--lhs", lhs_csv, "comma-separated point labels")->required();
    meet_cmd->add_option("--rhs", rhs_csv, "comma-separated point labels")->required();

    auto* minimal_cmd =
        app.add_subcommand("minimal-inconsistent", "minimal inconsistent sets");
    minimal_cmd->add_option("file", file, "space file")->required();

    auto* detect_cmd =
        app.add_subcommand("detect-boolean", "Boolean consistency space detection");
    detect_cmd->add_option("file", file, "space file")->required();

    auto* audit_cmd = app.add_subcommand("audit", "check the proposition catalog");
    audit_cmd->add_option("file", file, "space file");
    audit_cmd->add_option("--props", props_csv, "comma-separated proposition ids");
    audit_cmd->add_option("--campaign", campaign, "run a named campaign (default)");

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands([](CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*ms_opt) max_size = max_size_raw;
        if (build->parsed()) {
            Space sp = b_lit->parsed()    ? build_literal(vars)
                       : b_bool->parsed() ? build_full_boolean(vars)
                       : b_form->parsed()
                           ? build_from_formulas(load_formula_list(formulas_file))
                           : random_space(rnd_points, rnd_maximal, rnd_seed);
            emit(g, space_to_json_text(sp));
            return 0;
        }
        if (validate_cmd->parsed()) return cmd_validate(g, file);
        if (classes_cmd->parsed()) return cmd_classes(g, file, max_size);
        if (negate_cmd->parsed()) return cmd_negate(g, file, set_csv);
        if (implies_cmd->parsed()) return cmd_implies(g, file, lhs_csv, rhs_csv);
        if (join_cmd->parsed()) return cmd_join(g, file, x_label, y_label);
        if (meet_cmd->parsed()) return cmd_meet(g, file, lhs_csv, rhs_csv);
        if (minimal_cmd->parsed()) return cmd_minimal(g, file);
        if (detect_cmd->parsed()) return cmd_detect(g, file);
        if (audit_cmd->parsed()) {
            if (campaign.empty() && file.empty())
                throw UsageError("audit needs a space file or --campaign");
            return cmd_audit(g, file, campaign, props_csv);
        }
        throw UsageError("no command given");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BuildError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
