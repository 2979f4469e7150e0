#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclegraph/formulas.hpp"
#include "cyclegraph/gamma.hpp"
#include "cyclegraph/invariants.hpp"

namespace cyclegraph::audit {

inline constexpr const char* kStatusMatch = "match";
inline constexpr const char* kStatusDocumented = "documented-discrepancy-confirmed";
inline constexpr const char* kStatusMismatch = "MISMATCH";
inline constexpr const char* kStatusNotApplicable = "not-applicable";

/// A formula whose stated value disagrees with its own supporting evidence.
/// The audit expects computation to confirm the evidence value; anything else
/// is a MISMATCH, so implementation bugs cannot hide behind the registry.
struct DiscrepancyRecord {
    std::string id;
    std::string location;
    std::string stated_expr;
    std::string evidence_expr;
    std::string evidence_note;
};

const std::vector<DiscrepancyRecord>& known_discrepancies();

struct MinncSweep {
    long long p = 2;
    int r_lo = 1;
    int r_hi = 1;
    long long q = 3;
};

/// Which groups to audit. Sweeps run in ascending parameter order, so a spec
/// determines the report byte-for-byte.
struct CorpusSpec {
    std::vector<std::pair<long long, long long>> cyclic_ranges;
    std::vector<std::pair<long long, long long>> dihedral_ranges;
    std::vector<std::pair<int, int>> genq_ranges;
    std::vector<std::pair<long long, long long>> dicyclic_ranges;
    std::vector<MinncSweep> minnc_sweeps;
    std::vector<std::vector<long long>> products;  // cyclic factor orders
    std::vector<std::string> cayley_files;
    std::vector<long long> sl2_moduli;  // SL_2(F_p) via its standard generators
    std::vector<std::pair<std::string, std::vector<std::vector<int>>>> inline_cayley;
    long long order_cap = 1024;
    bool require_full_coverage = false;
};

/// Line-oriented spec: `cyclic 1..300`, `dihedral 1..100`, `genq 3..7`,
/// `dicyclic 2..50`, `minnc p=2 r=1..4 q=3`, `product Z4xZ3xZ3`,
/// `cayley path/to/file.tbl`, `sl2 3`. `#` starts a comment.
CorpusSpec parse_corpus_file(const std::string& path);

/// Built-in corpora: "paper-figures" (the worked examples and figure groups)
/// and "default" (the full sweep; requires every formula to be exercised).
CorpusSpec corpus_preset(const std::string& name);

struct CheckResult {
    std::string quantity;
    std::string predicted;  // stated value; empty for purely computed checks
    std::string evidence;   // evidence value when it differs from the stated one
    std::string computed;
    std::string status;
    std::string discrepancy_id;
};

struct GroupAudit {
    std::string descriptor;
    long long order = 0;
    int vertex_count = 0;
    int edge_count = 0;
    InvariantSummary summary;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, long long>> coverage;  // formula key -> uses
};

struct AuditReport {
    std::vector<GroupAudit> groups;
    long long match_count = 0;
    long long documented_count = 0;
    long long mismatch_count = 0;
    long long na_count = 0;
    std::vector<std::pair<std::string, long long>> coverage;  // formula key -> uses
    bool require_full_coverage = false;
    bool coverage_ok = true;

    bool pass() const {
        return mismatch_count == 0 && (!require_full_coverage || !!coverage_ok);
    }
};

AuditReport run_audit(const CorpusSpec& spec);

/// Audit of a single already-built group (the per-group body of run_audit).
GroupAudit audit_group(const Group& g, long long all_subgroups_cap = kAllSubgroupsCap);

std::string report_to_json(const AuditReport& report);
std::string report_to_csv(const AuditReport& report);
std::string report_to_text(const AuditReport& report);

}  // namespace cyclegraph::audit
