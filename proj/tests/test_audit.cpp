#include <doctest.h>

#include <stdexcept>

#include <filesystem>
#include <fstream>
#include <set>

#include "cyclegraph/audit.hpp"

using namespace cyclegraph;
using namespace cyclegraph::audit;

TEST_CASE("known discrepancy registry") {
    const auto& registry = known_discrepancies();
    REQUIRE(registry.size() == 3);
    std::set<std::string> ids;
    for (const auto& entry : registry) {
        ids.insert(entry.id);
        CHECK_FALSE(entry.stated_expr.empty());
        CHECK_FALSE(entry.evidence_expr.empty());
        CHECK_FALSE(entry.evidence_note.empty());
    }
    CHECK(ids == std::set<std::string>{kGenqCenterDegreeId, kMinncEdgeCountId, kMinncDiameterId});
}

TEST_CASE("empty corpus gives an empty passing report") {
    AuditReport report = run_audit(CorpusSpec{});
    CHECK(report.groups.empty());
    CHECK(report.mismatch_count == 0);
    CHECK(report.pass());
}

TEST_CASE("paper-figures preset confirms the registry and nothing else") {
    AuditReport report = run_audit(corpus_preset("paper-figures"));
    CHECK(report.mismatch_count == 0);
    CHECK(report.documented_count >= 3);
    CHECK(report.pass());

    std::set<std::string> confirmed;
    bool minnc_edges_documented = false;
    for (const auto& g : report.groups)
        for (const auto& c : g.checks)
            if (c.status == kStatusDocumented) {
                confirmed.insert(c.discrepancy_id);
                if (g.descriptor == "MinNC(p=2,r=3,q=3)" && c.quantity == "edge-count")
                    minnc_edges_documented = true;
            }
    CHECK(confirmed ==
          std::set<std::string>{kGenqCenterDegreeId, kMinncEdgeCountId, kMinncDiameterId});
    CHECK(minnc_edges_documented);
}

TEST_CASE("reports are byte-identical across runs") {
    CorpusSpec spec = corpus_preset("paper-figures");
    AuditReport a = run_audit(spec);
    AuditReport b = run_audit(spec);
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(report_to_csv(a) == report_to_csv(b));
    CHECK(report_to_text(a) == report_to_text(b));
}

TEST_CASE("a wrong family tag is caught as MISMATCH, not hidden by the registry") {
    // Z_8 wearing a quaternion descriptor: the formulas disagree with the
    // computed graph, and none of it may pass as a documented discrepancy.
    Group impostor = make_cyclic(8);
    impostor.family = FamilyDescriptor{family::GeneralizedQuaternion{3}};
    GroupAudit audit = audit_group(impostor);
    long long mismatches = 0;
    for (const auto& c : audit.checks) {
        if (c.status == kStatusMismatch) ++mismatches;
        if (c.quantity == "degree(order-2 center)") CHECK(c.status == kStatusMismatch);
    }
    CHECK(mismatches > 0);
}

TEST_CASE("cap violations are reported per entry, not fatally") {
    CorpusSpec spec;
    spec.dihedral_ranges = {{600, 600}};  // order 1200 exceeds the default cap
    spec.cyclic_ranges = {{12, 12}};
    AuditReport report = run_audit(spec);
    REQUIRE(report.groups.size() == 2);
    CHECK(report.groups[0].descriptor == "Z_12");
    CHECK(report.groups[1].descriptor == "D_1200 (order 1200)");
    REQUIRE(report.groups[1].checks.size() == 1);
    CHECK(report.groups[1].checks[0].quantity == "order-cap");
    CHECK(report.groups[1].checks[0].status == kStatusNotApplicable);
    CHECK(report.pass());
}

TEST_CASE("coverage gate fails on a corpus that skips formulas") {
    CorpusSpec spec;
    spec.cyclic_ranges = {{12, 12}};
    spec.require_full_coverage = true;
    AuditReport report = run_audit(spec);
    CHECK(report.mismatch_count == 0);
    CHECK_FALSE(report.coverage_ok);
    CHECK_FALSE(report.pass());
}

TEST_CASE("corpus spec parsing") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "cyclegraph_corpus.spec";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "cyclic 1..20\n";
        out << "cyclic 36\n";
        out << "dihedral 2..5\n";
        out << "genq 3..4\n";
        out << "dicyclic 2..6\n";
        out << "minnc p=2 r=1..3 q=3\n";
        out << "product Z4xZ3xZ3\n";
        out << "sl2 3\n";
        out << "cap 512\n";
    }
    CorpusSpec spec = parse_corpus_file(path.string());
    CHECK(spec.cyclic_ranges == decltype(spec.cyclic_ranges){{1, 20}, {36, 36}});
    CHECK(spec.dihedral_ranges == decltype(spec.dihedral_ranges){{2, 5}});
    CHECK(spec.genq_ranges == decltype(spec.genq_ranges){{3, 4}});
    CHECK(spec.dicyclic_ranges == decltype(spec.dicyclic_ranges){{2, 6}});
    REQUIRE(spec.minnc_sweeps.size() == 1);
    CHECK(spec.minnc_sweeps[0].p == 2);
    CHECK(spec.minnc_sweeps[0].r_lo == 1);
    CHECK(spec.minnc_sweeps[0].r_hi == 3);
    CHECK(spec.minnc_sweeps[0].q == 3);
    CHECK(spec.products == decltype(spec.products){{4, 3, 3}});
    CHECK(spec.sl2_moduli == decltype(spec.sl2_moduli){3});
    CHECK(spec.order_cap == 512);

    AuditReport report = run_audit(spec);
    CHECK(report.mismatch_count == 0);
    CHECK(report.pass());
    fs::remove(path);

    CHECK_THROWS_AS(parse_corpus_file("/nonexistent/corpus.spec"), std::runtime_error);

    fs::path bad = fs::temp_directory_path() / "cyclegraph_bad.spec";
    {
        std::ofstream out(bad);
        out << "frobnicate 7\n";
    }
    CHECK_THROWS_AS(parse_corpus_file(bad.string()), std::invalid_argument);
    fs::remove(bad);
}

TEST_CASE("cayley files flow through the audit") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "cyclegraph_z3z3.tbl";
    Group elab = make_direct_product({make_cyclic(3), make_cyclic(3)});
    {
        std::ofstream out(path);
        out << format_cayley_table(elab);
    }
    CorpusSpec spec;
    spec.cayley_files = {path.string()};
    AuditReport report = run_audit(spec);
    REQUIRE(report.groups.size() == 1);
    CHECK(report.groups[0].order == 9);
    CHECK(report.groups[0].summary.star_graph);  // every element has prime order
    CHECK(report.mismatch_count == 0);
    fs::remove(path);
}

TEST_CASE("unknown preset is rejected") {
    CHECK_THROWS_AS(corpus_preset("no-such-preset"), std::invalid_argument);
}
