#include "cyclegraph/audit.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cyclegraph::audit {

const std::vector<DiscrepancyRecord>& known_discrepancies() {
    static const std::vector<DiscrepancyRecord> registry{
        {kGenqCenterDegreeId,
         "degree table, generalized quaternion row, order-2 vertex",
         "2^(n-2)+1",
         "2^(n-2)+2",
         "the order-2 subgroup lies under every order-4 cyclic subgroup and over the "
         "trivial one: 2^(n-2)+1 subgroups of order 4 plus {e}; the order-8 worked "
         "figure shows degree 4"},
        {kMinncEdgeCountId,
         "minimal non-cyclic property list, edge count",
         "3r+q+2",
         "3r+q-2",
         "the stated degree sequence {1 x q, 2 x 3, 3 x (2r-4), q+2} sums to "
         "2(3r+q-2); the order-24 worked figure has 10 = 3*3+3-2 edges"},
        {kMinncDiameterId,
         "minimal non-cyclic theorem, diameter",
         "r+2",
         "r+1",
         "the accompanying distance analysis concludes r+1, attained between a "
         "Sylow-subgroup vertex of order p^r and the order-q vertex"},
    };
    return registry;
}

namespace {

std::string family_kind(const FamilyDescriptor& family) {
    if (family.as<family::Cyclic>()) return "cyclic";
    if (family.as<family::Dihedral>()) return "dihedral";
    if (family.as<family::GeneralizedQuaternion>()) return "genq";
    if (family.as<family::Dicyclic>()) return "dicyclic";
    if (family.as<family::DirectProduct>()) return "product";
    if (family.as<family::MinimalNonCyclic>()) return "minnc";
    if (family.as<family::MatrixGroup>()) return "matrix";
    return "opaque";
}

// The formula keys the coverage counter tracks; the default corpus must
// exercise all of them.
const std::vector<std::string>& coverage_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const char* fam : {"cyclic", "dihedral", "genq", "dicyclic", "product", "minnc"}) {
            k.push_back(std::string("vertex-count/") + fam);
            k.push_back(std::string("edge-count/") + fam);
        }
        for (const char* fam : {"cyclic", "dihedral", "genq", "dicyclic"}) {
            k.push_back(std::string("degrees/") + fam);
            k.push_back(std::string("min-degree/") + fam);
            k.push_back(std::string("max-degree/") + fam);
        }
        k.push_back("degrees/genq-center");
        k.push_back("degree-interval/cyclic");
        for (const char* fam : {"cyclic", "dihedral", "genq", "dicyclic", "minnc"})
            k.push_back(std::string("diameter/") + fam);
        k.push_back("diameter-bound/general");
        k.push_back("diameter-bound/nilpotent");
        k.push_back("bipartite");
        k.push_back("connected");
        k.push_back("girth");
        k.push_back("shape/path");
        k.push_back("shape/cycle");
        k.push_back("shape/star");
        k.push_back("shape/complete");
        k.push_back("regular");
        k.push_back("eulerian/cyclic");
        k.push_back("eulerian/noncyclic-family");
        k.push_back("tree");
        k.push_back("pendant");
        k.push_back("dual-oracle");
        k.push_back("induced-subgraphs");
        k.push_back("frobenius");
        k.push_back("minnc/degree-multiset");
        k.push_back("minnc/pendant-count");
        k.push_back("minnc/cycle-lengths");
        k.push_back("minnc/subgroup-count");
        return k;
    }();
    return keys;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string opt_int_str(const std::optional<int>& v, const char* when_empty) {
    return v ? std::to_string(*v) : std::string(when_empty);
}

struct Checker {
    GroupAudit& out;
    std::map<std::string, long long>& coverage;

    void add(CheckResult check, const std::string& coverage_key) {
        if (check.status != kStatusNotApplicable && !coverage_key.empty())
            ++coverage[coverage_key];
        out.checks.push_back(std::move(check));
    }

    // Scalar/boolean/multiset prediction against a computed value of the same
    // shape. Stated value -> match; evidence value of a registered
    // discrepancy -> documented-discrepancy-confirmed; anything else MISMATCH.
    void check_value(const std::string& quantity, const Prediction& pred,
                     const PredValue& computed, const std::string& coverage_key) {
        CheckResult c;
        c.quantity = quantity;
        c.computed = pred_value_to_string(computed);
        if (pred.applicability == Applicability::NotApplicable) {
            c.status = kStatusNotApplicable;
            add(std::move(c), coverage_key);
            return;
        }
        c.predicted = pred_value_to_string(pred.stated);
        if (pred.applicability == Applicability::Conflicting) {
            c.evidence = pred_value_to_string(*pred.evidence);
            c.discrepancy_id = pred.discrepancy_id;
            if (computed == *pred.evidence)
                c.status = kStatusDocumented;
            else if (computed == pred.stated)
                c.status = kStatusMatch;
            else
                c.status = kStatusMismatch;
        } else {
            c.status = computed == pred.stated ? kStatusMatch : kStatusMismatch;
        }
        add(std::move(c), coverage_key);
    }

    // Check with an explicitly described expectation (no Prediction object).
    void check_that(const std::string& quantity, const std::string& expected, bool ok,
                    const std::string& computed, const std::string& coverage_key) {
        CheckResult c;
        c.quantity = quantity;
        c.predicted = expected;
        c.computed = computed;
        c.status = ok ? kStatusMatch : kStatusMismatch;
        add(std::move(c), coverage_key);
    }

    void not_applicable(const std::string& quantity, const std::string& computed) {
        CheckResult c;
        c.quantity = quantity;
        c.computed = computed;
        c.status = kStatusNotApplicable;
        add(std::move(c), "");
    }
};

void audit_degrees(Checker& chk, const Group& g, const GammaGraph& gamma,
                   const std::vector<std::vector<int>>& adj, const std::string& kind) {
    bool any_applicable = false;
    long long checked = 0;
    std::vector<std::string> mismatches;
    for (size_t v = 0; v < gamma.vertices.size(); ++v) {
        Prediction pred = predict_degree(g, gamma.vertices[v]);
        if (pred.applicability == Applicability::NotApplicable) continue;
        any_applicable = true;
        long long computed = static_cast<long long>(adj[v].size());
        if (pred.applicability == Applicability::Conflicting) {
            // Reported as its own check so the registry confirmation is visible.
            chk.check_value("degree(order-2 center)", pred, computed, "degrees/genq-center");
            continue;
        }
        ++checked;
        if (computed != std::get<long long>(pred.stated))
            mismatches.push_back("vertex " + std::to_string(v) + ": predicted " +
                                 pred_value_to_string(pred.stated) + ", computed " +
                                 std::to_string(computed));
    }
    if (!any_applicable) {
        chk.not_applicable("vertex-degrees", "no per-vertex degree formula for this family");
        return;
    }
    std::string computed = mismatches.empty()
                               ? "all " + std::to_string(checked) + " predicted degrees match"
                               : mismatches.front() + (mismatches.size() > 1 ? " (and more)" : "");
    chk.check_that("vertex-degrees", "per-role degree formulas", mismatches.empty(), computed,
                   "degrees/" + kind);
}

void audit_induced_subgraphs(Checker& chk, const Group& g, const GammaGraph& gamma) {
    std::map<std::vector<ElementId>, int> vertex_index;
    for (size_t v = 0; v < gamma.vertices.size(); ++v)
        vertex_index[gamma.vertices[v].elements] = static_cast<int>(v);
    std::set<std::pair<int, int>> gamma_edges(gamma.edges.begin(), gamma.edges.end());

    auto subs = all_subgroups(g);
    std::string failure;
    for (const auto& h : subs) {
        Group hg = subgroup_as_group(g, h);
        GammaGraph hgamma = build_gamma_generic(hg);
        // Map the subgroup's own vertices back into parent element ids.
        std::vector<int> to_parent(hgamma.vertices.size());
        for (size_t v = 0; v < hgamma.vertices.size(); ++v) {
            std::vector<ElementId> elems;
            elems.reserve(hgamma.vertices[v].elements.size());
            for (ElementId e : hgamma.vertices[v].elements) elems.push_back(h.elements[e]);
            auto it = vertex_index.find(elems);
            if (it == vertex_index.end()) {
                failure = "cyclic subgroup of a subgroup missing from the parent graph";
                break;
            }
            to_parent[v] = it->second;
        }
        if (!failure.empty()) break;

        std::set<std::pair<int, int>> mapped;
        for (auto [u, v] : hgamma.edges) {
            int a = to_parent[u], b = to_parent[v];
            if (a > b) std::swap(a, b);
            mapped.insert({a, b});
        }
        std::set<int> inside(to_parent.begin(), to_parent.end());
        std::set<std::pair<int, int>> induced;
        for (const auto& e : gamma_edges)
            if (inside.count(e.first) && inside.count(e.second)) induced.insert(e);
        if (mapped != induced) {
            failure = "induced edge set differs inside subgroup of order " +
                      std::to_string(h.order);
            break;
        }
    }
    chk.check_that("induced-subgraphs",
                   "every subgroup graph equals the induced parent subgraph",
                   failure.empty(),
                   failure.empty() ? "ok (" + std::to_string(subs.size()) + " subgroups)"
                                   : failure,
                   "induced-subgraphs");
}

void audit_minnc_profile(Checker& chk, const Group& g, const family::MinimalNonCyclic& fam,
                         const GammaGraph& gamma, const Graph& graph,
                         const InvariantSummary& summary, long long all_subgroups_cap) {
    MinimalNonCyclicProfile profile = predict_minimal_noncyclic_profile(fam.p, fam.r, fam.q);
    if (profile.applicability != Applicability::Applies) {
        chk.not_applicable("minnc-profile", "profile formulas assume r >= 2");
        return;
    }

    Multiset degrees(summary.degree_sequence.begin(), summary.degree_sequence.end());
    chk.check_value("degree-multiset", Prediction::of(profile.degree_multiset), degrees,
                    "minnc/degree-multiset");
    chk.check_value("pendant-count", Prediction::of(profile.pendant_count),
                    static_cast<long long>(summary.pendant_count), "minnc/pendant-count");

    int root = -1;
    for (size_t v = 0; v < gamma.vertices.size(); ++v)
        if (gamma.vertices[v].order == 1) root = static_cast<int>(v);
    Multiset found;
    for (long long len : profile.cycle_lengths)
        if (has_cycle_through(graph, root, static_cast<int>(len))) found.push_back(len);
    chk.check_value("cycle-lengths-through-trivial", Prediction::of(profile.cycle_lengths),
                    found, "minnc/cycle-lengths");

    if (g.order <= all_subgroups_cap) {
        chk.check_value("subgroup-count", Prediction::of(profile.subgroup_count),
                        static_cast<long long>(all_subgroups(g).size()),
                        "minnc/subgroup-count");
    } else {
        chk.not_applicable("subgroup-count", "order above the lattice-oracle cap");
    }
}

}  // namespace

GroupAudit audit_group(const Group& g, long long all_subgroups_cap) {
    GroupAudit out;
    out.descriptor = g.family.name();
    out.order = g.order;

    GammaGraph gamma = build_gamma(g);
    Graph graph = Graph::from_gamma(gamma);
    InvariantSummary summary = summarize(graph);
    out.vertex_count = summary.vertex_count;
    out.edge_count = summary.edge_count;
    out.summary = summary;

    std::map<std::string, long long> coverage;
    Checker chk{out, coverage};
    std::string kind = family_kind(g.family);
    auto adj = gamma.adjacency();

    chk.check_value("vertex-count", predict_vertex_count(g.family),
                    static_cast<long long>(summary.vertex_count), "vertex-count/" + kind);
    chk.check_value("edge-count", predict_edge_count(g.family),
                    static_cast<long long>(summary.edge_count), "edge-count/" + kind);

    audit_degrees(chk, g, gamma, adj, kind);

    MinMaxPrediction mm = predict_min_max_degree(g.family);
    chk.check_value("min-degree", mm.min_degree, static_cast<long long>(summary.min_degree),
                    "min-degree/" + kind);
    chk.check_value("max-degree", mm.max_degree, static_cast<long long>(summary.max_degree),
                    "max-degree/" + kind);

    {
        Prediction interval = predict_degree_sequence_interval(g.family);
        if (interval.applicability == Applicability::Applies) {
            const auto& iv = std::get<Interval>(interval.stated);
            std::set<long long> present(summary.degree_sequence.begin(),
                                        summary.degree_sequence.end());
            bool covered = true;
            for (long long d = iv.lo; d <= iv.hi; ++d)
                if (!present.count(d)) covered = false;
            Multiset distinct(present.begin(), present.end());
            chk.check_that("degree-interval",
                           "every degree in " + pred_value_to_string(interval.stated), covered,
                           pred_value_to_string(PredValue{distinct}), "degree-interval/cyclic");
        } else {
            chk.not_applicable("degree-interval", "cyclic groups only");
        }
    }

    {
        Prediction pred = predict_diameter(g.family);
        if (summary.diameter) {
            chk.check_value("diameter", pred, static_cast<long long>(*summary.diameter),
                            "diameter/" + kind);
        } else if (pred.applicability == Applicability::NotApplicable) {
            chk.not_applicable("diameter", "disconnected");
        } else {
            chk.check_that("diameter", pred_value_to_string(pred.stated), false, "disconnected",
                           "diameter/" + kind);
        }
    }

    {
        DiameterBounds bounds = predict_diameter_bounds(g);
        auto check_bound = [&](const char* quantity, const Prediction& pred, const char* key) {
            if (pred.applicability != Applicability::Applies) {
                chk.not_applicable(quantity, opt_int_str(summary.diameter, "disconnected"));
                return;
            }
            const auto& iv = std::get<Interval>(pred.stated);
            bool ok = summary.diameter && *summary.diameter >= iv.lo && *summary.diameter <= iv.hi;
            chk.check_that(quantity, "diameter in " + pred_value_to_string(pred.stated), ok,
                           opt_int_str(summary.diameter, "disconnected"), key);
        };
        check_bound("diameter-general-bound", bounds.general, "diameter-bound/general");
        check_bound("diameter-nilpotent-bound", bounds.nilpotent, "diameter-bound/nilpotent");
    }

    chk.check_that("bipartite", "true", summary.bipartite, bool_str(summary.bipartite),
                   "bipartite");
    chk.check_that("connected", "true", summary.connected, bool_str(summary.connected),
                   "connected");
    chk.check_that("girth", "4 or inf", !summary.girth || *summary.girth == 4,
                   opt_int_str(summary.girth, "inf"), "girth");

    {
        ShapePrediction shape = classify_shape(g);
        chk.check_value("path-iff", Prediction::of(shape.path), summary.path_graph, "shape/path");
        chk.check_value("cycle-iff", Prediction::of(shape.cycle), summary.cycle_graph,
                        "shape/cycle");
        chk.check_value("star-iff", Prediction::of(shape.star), summary.star_graph, "shape/star");
        chk.check_value("complete-iff", Prediction::of(shape.complete), summary.complete_graph,
                        "shape/complete");
    }

    chk.check_value("regular-iff", predict_regular(g), summary.regular, "regular");

    {
        Prediction pred = predict_eulerian(g);
        std::string key = g.family.as<family::Cyclic>() ? "eulerian/cyclic"
                                                        : "eulerian/noncyclic-family";
        chk.check_value("eulerian", pred, summary.eulerian, key);
    }

    {
        TreePendantPrediction tp = predict_tree_and_pendants(g);
        chk.check_value("pendant-iff", tp.pendant, summary.pendant_count > 0, "pendant");
        chk.check_value("tree-iff", tp.tree, summary.tree, "tree");
    }

    if (g.order <= all_subgroups_cap) {
        GammaGraph generic = build_gamma_generic(g);
        chk.check_that("dual-oracle", "prime-index edges equal definitional edges",
                       generic.edges == gamma.edges,
                       generic.edges == gamma.edges
                           ? "equal (" + std::to_string(gamma.edges.size()) + " edges)"
                           : "edge sets differ",
                       "dual-oracle");
        audit_induced_subgraphs(chk, g, gamma);
    } else {
        chk.not_applicable("dual-oracle", "order above the lattice-oracle cap");
        chk.not_applicable("induced-subgraphs", "order above the lattice-oracle cap");
    }

    {
        bool ok = true;
        std::string detail;
        for (const auto& pp : factorize(g.order).factors) {
            long long count = count_subgroups_of_order(g, pp.prime);
            if (count % pp.prime != 1) {
                ok = false;
                detail = "n_" + std::to_string(pp.prime) + " = " + std::to_string(count);
                break;
            }
        }
        chk.check_that("frobenius", "subgroup count of each prime order is 1 mod p", ok,
                       ok ? "ok" : detail, "frobenius");
    }

    if (const auto* fam = g.family.as<family::MinimalNonCyclic>())
        audit_minnc_profile(chk, g, *fam, gamma, graph, summary, all_subgroups_cap);

    out.coverage.assign(coverage.begin(), coverage.end());
    return out;
}

namespace {

std::vector<std::vector<int>> group_to_raw(const Group& g) {
    std::vector<std::vector<int>> raw(g.order, std::vector<int>(g.order));
    for (long long i = 0; i < g.order; ++i)
        for (long long j = 0; j < g.order; ++j)
            raw[i][j] = g.mul(static_cast<int>(i), static_cast<int>(j));
    return raw;
}

}  // namespace

CorpusSpec corpus_preset(const std::string& name) {
    CorpusSpec spec;
    if (name == "paper-figures") {
        spec.cyclic_ranges = {{6, 6}, {12, 12}, {16, 16}};
        spec.dihedral_ranges = {{4, 4}, {6, 6}};
        spec.genq_ranges = {{3, 3}};
        spec.dicyclic_ranges = {{3, 3}};
        spec.minnc_sweeps = {{2, 3, 3, 3}};
        spec.products = {{2, 2}, {6, 2}};
        spec.sl2_moduli = {3};
        return spec;
    }
    if (name == "default") {
        spec.cyclic_ranges = {{1, 300}};
        spec.dihedral_ranges = {{1, 100}};
        spec.genq_ranges = {{3, 7}};
        spec.dicyclic_ranges = {{2, 50}};
        spec.minnc_sweeps = {{2, 1, 4, 3}, {2, 1, 2, 5}, {3, 1, 2, 7}, {5, 1, 1, 11}};
        spec.products = {{2, 2},    {6, 2},    {2, 3, 3}, {4, 3, 3}, {8, 3, 3},
                         {2, 5, 5}, {4, 5, 5}, {3, 2, 2}, {9, 2, 2}};
        spec.sl2_moduli = {3};
        // Klein four and the elementary abelian group of order 9, taken in
        // through the Cayley-table door so the Opaque path is audited too.
        auto as_table = [](const Group& g) { return group_to_raw(g); };
        spec.inline_cayley = {
            {"Cayley(klein4)", as_table(make_direct_product({make_cyclic(2), make_cyclic(2)}))},
            {"Cayley(elab9)", as_table(make_direct_product({make_cyclic(3), make_cyclic(3)}))},
        };
        spec.require_full_coverage = true;
        return spec;
    }
    throw std::invalid_argument("unknown preset: " + name);
}

CorpusSpec parse_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus spec: " + path);
    CorpusSpec spec;
    std::string line;
    int lineno = 0;
    auto parse_range = [&](const std::string& token) -> std::pair<long long, long long> {
        auto dots = token.find("..");
        if (dots == std::string::npos) {
            long long v = std::stoll(token);
            return {v, v};
        }
        return {std::stoll(token.substr(0, dots)), std::stoll(token.substr(dots + 2))};
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string verb;
        if (!(ls >> verb)) continue;
        try {
            if (verb == "cyclic" || verb == "dihedral" || verb == "dicyclic") {
                std::string token;
                ls >> token;
                auto range = parse_range(token);
                if (verb == "cyclic") spec.cyclic_ranges.push_back(range);
                if (verb == "dihedral") spec.dihedral_ranges.push_back(range);
                if (verb == "dicyclic") spec.dicyclic_ranges.push_back(range);
            } else if (verb == "genq") {
                std::string token;
                ls >> token;
                auto range = parse_range(token);
                spec.genq_ranges.push_back(
                    {static_cast<int>(range.first), static_cast<int>(range.second)});
            } else if (verb == "minnc") {
                MinncSweep sweep;
                std::string token;
                while (ls >> token) {
                    if (token.rfind("p=", 0) == 0) sweep.p = std::stoll(token.substr(2));
                    else if (token.rfind("q=", 0) == 0) sweep.q = std::stoll(token.substr(2));
                    else if (token.rfind("r=", 0) == 0) {
                        auto range = parse_range(token.substr(2));
                        sweep.r_lo = static_cast<int>(range.first);
                        sweep.r_hi = static_cast<int>(range.second);
                    } else {
                        throw std::invalid_argument("bad minnc token: " + token);
                    }
                }
                spec.minnc_sweeps.push_back(sweep);
            } else if (verb == "product") {
                std::string token;
                ls >> token;
                std::vector<long long> factors;
                size_t pos = 0;
                while (pos < token.size()) {
                    if (token[pos] != 'Z' && token[pos] != 'z')
                        throw std::invalid_argument("bad product token: " + token);
                    ++pos;
                    size_t end = token.find('x', pos);
                    if (end == std::string::npos) end = token.size();
                    factors.push_back(std::stoll(token.substr(pos, end - pos)));
                    pos = end == token.size() ? end : end + 1;
                }
                if (factors.empty()) throw std::invalid_argument("empty product: " + token);
                spec.products.push_back(std::move(factors));
            } else if (verb == "cayley") {
                std::string token;
                ls >> token;
                spec.cayley_files.push_back(token);
            } else if (verb == "sl2") {
                long long p = 0;
                ls >> p;
                spec.sl2_moduli.push_back(p);
            } else if (verb == "cap") {
                ls >> spec.order_cap;
            } else {
                throw std::invalid_argument("unknown verb: " + verb);
            }
        } catch (const std::exception& e) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return spec;
}

AuditReport run_audit(const CorpusSpec& spec) {
    AuditReport report;
    report.require_full_coverage = spec.require_full_coverage;

    std::vector<Group> corpus;
    std::vector<std::string> skipped;  // cap violations, reported per-entry
    auto admit = [&](Group g) {
        if (g.order > spec.order_cap) {
            skipped.push_back(g.family.name() + " (order " + std::to_string(g.order) + ")");
            return;
        }
        corpus.push_back(std::move(g));
    };

    for (auto [lo, hi] : spec.cyclic_ranges)
        for (long long n = lo; n <= hi; ++n) admit(make_cyclic(n));
    for (auto [lo, hi] : spec.dihedral_ranges)
        for (long long n = lo; n <= hi; ++n) admit(make_dihedral(n));
    for (auto [lo, hi] : spec.genq_ranges)
        for (int n = lo; n <= hi; ++n) admit(make_generalized_quaternion(n));
    for (auto [lo, hi] : spec.dicyclic_ranges)
        for (long long n = lo; n <= hi; ++n) admit(make_dicyclic(n));
    for (const auto& sweep : spec.minnc_sweeps)
        for (int r = sweep.r_lo; r <= sweep.r_hi; ++r)
            admit(make_minimal_noncyclic(sweep.p, r, sweep.q));
    for (const auto& factors : spec.products) {
        std::vector<Group> parts;
        for (long long n : factors) parts.push_back(make_cyclic(n));
        admit(make_direct_product(parts));
    }
    for (long long p : spec.sl2_moduli)
        admit(from_matrix_generators(p, {Mat2{1, 1, 0, 1}, Mat2{0, -1, 1, 0}}));
    for (const auto& path : spec.cayley_files) admit(load_cayley_table(path));
    for (const auto& [label, table] : spec.inline_cayley) {
        Group g = from_cayley_table(table);
        g.family = FamilyDescriptor{family::Opaque{label}};
        admit(g);
    }

    std::map<std::string, long long> coverage;
    for (const auto& g : corpus) {
        report.groups.push_back(audit_group(g));
        for (const auto& [key, count] : report.groups.back().coverage) coverage[key] += count;
    }
    for (const auto& label : skipped) {
        GroupAudit entry;
        entry.descriptor = label;
        CheckResult c;
        c.quantity = "order-cap";
        c.predicted = "order <= " + std::to_string(spec.order_cap);
        c.computed = "skipped: above the corpus order cap";
        c.status = kStatusNotApplicable;
        entry.checks.push_back(std::move(c));
        report.groups.push_back(std::move(entry));
    }

    for (const auto& key : coverage_keys()) {
        long long count = coverage.count(key) ? coverage.at(key) : 0;
        report.coverage.emplace_back(key, count);
        if (count == 0) report.coverage_ok = false;
    }
    for (const auto& group : report.groups)
        for (const auto& check : group.checks) {
            if (check.status == kStatusMatch) ++report.match_count;
            else if (check.status == kStatusDocumented) ++report.documented_count;
            else if (check.status == kStatusMismatch) ++report.mismatch_count;
            else ++report.na_count;
        }
    return report;
}

namespace {

nlohmann::ordered_json summary_to_json(const InvariantSummary& s) {
    nlohmann::ordered_json j;
    j["vertex_count"] = s.vertex_count;
    j["edge_count"] = s.edge_count;
    j["degree_sequence"] = s.degree_sequence;
    j["min_degree"] = s.min_degree;
    j["max_degree"] = s.max_degree;
    j["pendant_count"] = s.pendant_count;
    j["connected"] = s.connected;
    if (s.diameter) j["diameter"] = *s.diameter;
    else j["diameter"] = "disconnected";
    if (s.girth) j["girth"] = *s.girth;
    else j["girth"] = "inf";
    j["bipartite"] = s.bipartite;
    j["tree"] = s.tree;
    j["regular"] = s.regular;
    j["eulerian"] = s.eulerian;
    j["path_graph"] = s.path_graph;
    j["cycle_graph"] = s.cycle_graph;
    j["star_graph"] = s.star_graph;
    j["complete_graph"] = s.complete_graph;
    return j;
}

}  // namespace

std::string report_to_json(const AuditReport& report) {
    nlohmann::ordered_json j;
    j["groups"] = nlohmann::ordered_json::array();
    for (const auto& g : report.groups) {
        nlohmann::ordered_json gj;
        gj["descriptor"] = g.descriptor;
        gj["order"] = g.order;
        gj["vertices"] = g.vertex_count;
        gj["edges"] = g.edge_count;
        gj["summary"] = summary_to_json(g.summary);
        gj["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : g.checks) {
            nlohmann::ordered_json cj;
            cj["name"] = c.quantity;
            cj["predicted"] = c.predicted;
            if (!c.evidence.empty()) cj["evidence"] = c.evidence;
            cj["computed"] = c.computed;
            cj["status"] = c.status;
            if (!c.discrepancy_id.empty()) cj["discrepancy"] = c.discrepancy_id;
            gj["checks"].push_back(std::move(cj));
        }
        j["groups"].push_back(std::move(gj));
    }
    j["totals"] = {{"match", report.match_count},
                   {"documented", report.documented_count},
                   {"mismatch", report.mismatch_count},
                   {"na", report.na_count}};
    nlohmann::ordered_json cov;
    for (const auto& [key, count] : report.coverage) cov[key] = count;
    j["coverage"] = std::move(cov);
    j["coverage_complete"] = report.coverage_ok;
    return j.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string report_to_csv(const AuditReport& report) {
    std::ostringstream out;
    out << "group,quantity,predicted,evidence,computed,status,discrepancy\n";
    for (const auto& g : report.groups)
        for (const auto& c : g.checks)
            out << csv_escape(g.descriptor) << ',' << csv_escape(c.quantity) << ','
                << csv_escape(c.predicted) << ',' << csv_escape(c.evidence) << ','
                << csv_escape(c.computed) << ',' << c.status << ',' << c.discrepancy_id << "\n";
    return out.str();
}

std::string report_to_text(const AuditReport& report) {
    std::ostringstream out;
    for (const auto& g : report.groups)
        for (const auto& c : g.checks)
            if (c.status == kStatusDocumented || c.status == kStatusMismatch) {
                out << "[" << c.status << "] " << g.descriptor << " " << c.quantity
                    << ": stated " << c.predicted;
                if (!c.evidence.empty()) out << ", evidence " << c.evidence;
                out << ", computed " << c.computed;
                if (!c.discrepancy_id.empty()) out << " (" << c.discrepancy_id << ")";
                out << "\n";
            }
    out << "groups audited: " << report.groups.size() << "\n";
    out << "checks: match=" << report.match_count << " documented=" << report.documented_count
        << " mismatch=" << report.mismatch_count << " not-applicable=" << report.na_count << "\n";
    if (report.require_full_coverage) {
        out << "formula coverage: " << (report.coverage_ok ? "complete" : "INCOMPLETE") << "\n";
        if (!report.coverage_ok)
            for (const auto& [key, count] : report.coverage)
                if (count == 0) out << "  never exercised: " << key << "\n";
    }
    out << (report.pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace cyclegraph::audit
