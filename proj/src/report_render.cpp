#include <sstream>

#include <json.hpp>

#include "cspace/auditor.hpp"

namespace cspace {

using nlohmann::json;  // plain json: object keys are kept sorted

namespace {

json counterexample_json(const Counterexample& cx) {
    json out;
    out["bindings"] = json::array();
    for (const Binding& b : cx.bindings)
        out["bindings"].push_back({{"var", b.var}, {"value", b.value}});
    if (cx.kappa) out["kappa"] = *cx.kappa;
    out["detail"] = cx.detail;
    return out;
}

json result_json(const PropositionResult& res) {
    const PropositionInfo& info = proposition_info(res.id);
    json out;
    out["id"] = res.id;
    out["name"] = info.name;
    out["statement"] = info.statement;
    out["status"] = prop_status_name(res.status);
    out["instances_checked"] = res.instances_checked;
    out["skipped"] = res.skipped;
    out["skip_reasons"] = json::object();
    for (const auto& [reason, count] : res.skip_reasons) out["skip_reasons"][reason] = count;
    out["quantifiers"] = res.quantifiers;
    if (res.counterexample) out["counterexample"] = counterexample_json(*res.counterexample);
    return out;
}

json report_json(const AuditReport& rep) {
    json out;
    out["space"] = {{"name", rep.space_name},
                    {"origin", rep.origin},
                    {"points", rep.points},
                    {"maximal_sets", rep.maximal_sets}};
    out["config"] = {{"z_mode", rep.z_mode},
                     {"cap", rep.cap},
                     {"subset_bound", rep.subset_bound},
                     {"subset_bound_full", rep.subset_bound_full}};
    json zm;
    zm["checked"] = rep.zmode_checked;
    if (rep.zmode_checked) {
        zm["agree"] = rep.zmode_agree;
        if (!rep.zmode_agree) zm["divergence"] = rep.zmode_divergence;
    }
    out["z_mode_agreement"] = zm;
    out["propositions"] = json::array();
    for (const PropositionResult& res : rep.results)
        out["propositions"].push_back(result_json(res));
    return out;
}

std::string counterexample_text(const Counterexample& cx) {
    std::ostringstream out;
    bool first = true;
    for (const Binding& b : cx.bindings) {
        if (!first) out << ", ";
        first = false;
        out << b.var << " = ";
        if (b.value.size() == 1) {
            out << b.value.front();
        } else {
            out << "{";
            for (size_t i = 0; i < b.value.size(); ++i)
                out << (i ? "," : "") << b.value[i];
            out << "}";
        }
    }
    if (cx.kappa) {
        if (!first) out << ", ";
        out << "kappa = {";
        for (size_t i = 0; i < cx.kappa->size(); ++i)
            out << (i ? "," : "") << (*cx.kappa)[i];
        out << "}";
    }
    if (!cx.detail.empty()) out << " -- " << cx.detail;
    return out.str();
}

}  // namespace

std::string render_report_json(const AuditReport& rep) {
    return report_json(rep).dump(2) + "\n";
}

std::string render_report_text(const AuditReport& rep) {
    std::ostringstream out;
    out << "audit of " << rep.space_name << " (origin " << rep.origin << ", " << rep.points
        << " points, " << rep.maximal_sets << " maximal sets)\n";
    out << "z-mode " << rep.z_mode << ", cap " << rep.cap << ", set bound "
        << (rep.subset_bound_full ? "full" : "size <= " + std::to_string(rep.subset_bound))
        << "\n";
    if (rep.zmode_checked)
        out << "z-mode agreement on point negations: "
            << (rep.zmode_agree ? "agree" : "DIVERGE: " + rep.zmode_divergence) << "\n";
    for (const PropositionResult& res : rep.results) {
        const PropositionInfo& info = proposition_info(res.id);
        out << res.id << " " << info.name << ": " << prop_status_name(res.status)
            << " (checked " << res.instances_checked << ", skipped " << res.skipped << ")\n";
        for (const auto& [reason, count] : res.skip_reasons)
            out << "    skip " << count << "x: " << reason << "\n";
        if (res.counterexample)
            out << "    counterexample: " << counterexample_text(*res.counterexample) << "\n";
    }
    return out.str();
}

std::string render_campaign_json(const CampaignReport& rep) {
    json out;
    out["campaign"] = rep.name;
    out["config"] = {{"z_mode", rep.z_mode}, {"cap", rep.cap}};
    out["build_errors"] = rep.build_errors;
    out["reports"] = json::array();
    for (const AuditReport& r : rep.reports) out["reports"].push_back(report_json(r));
    out["summary"] = json::array();
    for (const SummaryRow& row : rep.summary) {
        json s;
        s["id"] = row.id;
        s["name"] = proposition_info(row.id).name;
        s["holds"] = row.holds;
        s["refuted"] = row.refuted;
        s["skipped"] = row.skipped;
        if (!row.first_refuted_space.empty()) {
            json fr;
            fr["space"] = row.first_refuted_space;
            if (row.first_counterexample)
                fr["counterexample"] = counterexample_json(*row.first_counterexample);
            s["first_refutation"] = fr;
        }
        out["summary"].push_back(std::move(s));
    }
    return out.dump(2) + "\n";
}

std::string render_campaign_text(const CampaignReport& rep) {
    std::ostringstream out;
    out << "campaign " << rep.name << " (z-mode " << rep.z_mode << ", cap " << rep.cap
        << "): " << rep.reports.size() << " spaces audited";
    if (!rep.build_errors.empty()) out << ", " << rep.build_errors.size() << " build errors";
    out << "\n";
    for (const std::string& err : rep.build_errors) out << "  build error: " << err << "\n";
    out << "\nper-proposition summary (spaces holds/refuted/skipped):\n";
    for (const SummaryRow& row : rep.summary) {
        out << "  " << row.id << " " << proposition_info(row.id).name << ": " << row.holds
            << "/" << row.refuted << "/" << row.skipped;
        if (!row.first_refuted_space.empty()) {
            out << "  first refuted on " << row.first_refuted_space;
            if (row.first_counterexample)
                out << " with " << counterexample_text(*row.first_counterexample);
        }
        out << "\n";
    }
    out << "\nper-space results:\n";
    for (const AuditReport& r : rep.reports) {
        out << "== " << r.space_name << " ==\n" << render_report_text(r);
    }
    return out.str();
}

}  // namespace cspace
