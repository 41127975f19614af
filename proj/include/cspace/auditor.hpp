#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cspace/connectives.hpp"
#include "cspace/space.hpp"

namespace cspace {

struct PropositionInfo {
    const char* id;         // P01..P16
    const char* name;
    const char* statement;  // for x, y, z, t over points; A, B, K over sets
};

// Total registry of the audited propositions.
const std::array<PropositionInfo, 16>& proposition_registry();
const PropositionInfo& proposition_info(const std::string& id);

enum class PropStatus { Holds, Refuted, Skipped };
const char* prop_status_name(PropStatus s);

struct Binding {
    std::string var;
    std::vector<std::string> value;  // point label, or a set of labels
};

struct Counterexample {
    std::vector<Binding> bindings;
    std::optional<std::vector<std::string>> kappa;  // distinguishing set, when applicable
    std::string detail;
};

struct PropositionResult {
    std::string id;
    PropStatus status = PropStatus::Skipped;
    std::uint64_t instances_checked = 0;
    std::uint64_t skipped = 0;
    std::map<std::string, std::uint64_t> skip_reasons;
    std::optional<Counterexample> counterexample;
    std::string quantifiers;  // domains and bounds used
};

struct AuditConfig {
    ZMode mode = ZMode::Subsets;
    int cap = kDefaultExhaustiveCap;
    std::vector<std::string> props;  // subset of registry ids; empty = all
};

struct AuditReport {
    std::string space_name;
    std::string origin;
    unsigned points = 0;
    unsigned maximal_sets = 0;
    std::string z_mode;
    int cap = kDefaultExhaustiveCap;
    unsigned subset_bound = 0;   // max size of bounded set quantifiers
    bool subset_bound_full = false;
    bool zmode_checked = false;  // singleton negations compared across modes
    bool zmode_agree = false;
    std::string zmode_divergence;
    std::vector<PropositionResult> results;
};

// Checks the selected propositions over every admissible instantiation:
// point variables range over all points, except that a variable whose own
// negation the statement requires ranges over points possessing one;
// set-level negations found missing at check time are counted as skips.
AuditReport audit_space(const Space& space, const std::string& name,
                        const AuditConfig& config = {});

struct CampaignEntry {
    std::string name;
    std::function<Space()> build;
};

struct CampaignConfig {
    std::string name = "default";
    std::vector<CampaignEntry> entries;
    AuditConfig audit;
};

// L1..L3, B1, B2, and 50 seeded random spaces at 4-6 points.
CampaignConfig default_campaign();

struct SummaryRow {
    std::string id;
    unsigned holds = 0, refuted = 0, skipped = 0;
    std::string first_refuted_space;
    std::optional<Counterexample> first_counterexample;
};

struct CampaignReport {
    std::string name;
    std::string z_mode;
    int cap = kDefaultExhaustiveCap;
    std::vector<std::string> build_errors;  // "entry: message"
    std::vector<AuditReport> reports;
    std::vector<SummaryRow> summary;
};

CampaignReport run_campaign(const CampaignConfig& config);

// Both renderings are byte-stable for a fixed input.
std::string render_report_text(const AuditReport& report);
std::string render_report_json(const AuditReport& report);
std::string render_campaign_text(const CampaignReport& report);
std::string render_campaign_json(const CampaignReport& report);

}  // namespace cspace
