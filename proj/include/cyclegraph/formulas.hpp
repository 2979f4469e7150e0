#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclegraph/group.hpp"

namespace cyclegraph {

/// Whether a closed-form formula speaks about a given group/vertex, and
/// whether its stated value agrees with its own supporting evidence.
enum class Applicability {
    Applies,
    NotApplicable,
    Conflicting,  // the stated value contradicts the evidence backing it
};

// Registry keys for the known self-conflicting formulas.
inline constexpr const char* kGenqCenterDegreeId = "genq-center-degree";
inline constexpr const char* kMinncEdgeCountId = "minnc-edge-count";
inline constexpr const char* kMinncDiameterId = "minnc-diameter";

struct Interval {
    long long lo = 0;
    long long hi = 0;
    bool operator==(const Interval&) const = default;
};

/// Sorted multiset of integers.
using Multiset = std::vector<long long>;

using PredValue = std::variant<long long, bool, Interval, Multiset>;

std::string pred_value_to_string(const PredValue& v);

/// One closed-form prediction. When Conflicting, `stated` carries the value
/// as published and `evidence` the value its own proof/figure/degree-sum
/// supports; the audit expects computation to land on `evidence`.
struct Prediction {
    Applicability applicability = Applicability::NotApplicable;
    PredValue stated{0LL};
    std::optional<PredValue> evidence;
    std::string discrepancy_id;  // registry key when Conflicting

    static Prediction na() { return {}; }
    static Prediction of(PredValue v) { return {Applicability::Applies, std::move(v), {}, {}}; }
    static Prediction conflict(PredValue stated, PredValue evidence, std::string id) {
        return {Applicability::Conflicting, std::move(stated), std::move(evidence), std::move(id)};
    }
};

/// Exponent profile of a subgroup order against a reference factorization:
/// b_i per prime, m = #{b_i = 0}, r = #{b_i = a_i}.
struct SubgroupProfile {
    std::vector<int> exponents;
    int zero_count = 0;  // m
    int full_count = 0;  // r
};

SubgroupProfile make_profile(const Factorization& reference, long long subgroup_order);

// ---- per-family closed forms ----

Prediction predict_vertex_count(const FamilyDescriptor& family);
Prediction predict_edge_count(const FamilyDescriptor& family);

/// Predicted degree of one vertex of the graph; the vertex role is derived
/// from the group and the subgroup itself.
Prediction predict_degree(const Group& g, const Subgroup& h);

struct MinMaxPrediction {
    Prediction min_degree;
    Prediction max_degree;
};
MinMaxPrediction predict_min_max_degree(const FamilyDescriptor& family);

/// Cyclic groups only: every integer in [min degree, max degree] occurs in
/// the degree sequence.
Prediction predict_degree_sequence_interval(const FamilyDescriptor& family);

Prediction predict_diameter(const FamilyDescriptor& family);

struct DiameterBounds {
    Prediction general;    // [1, sum of exponents of |G|], any |G| >= 2
    Prediction nilpotent;  // [sum b_i, 2 sum b_i], b_i = max element-order exponents
};
DiameterBounds predict_diameter_bounds(const Group& g);

/// Structural shape predictions, decidable from the table alone.
struct ShapePrediction {
    bool path = false;      // cyclic of prime-power order
    bool cycle = false;     // cyclic of order pq
    bool star = false;      // Z_{p^2}, Q_8, or every non-identity element of prime order
    bool complete = false;  // at most two cyclic subgroups
};
ShapePrediction classify_shape(const Group& g);

Prediction predict_regular(const Group& g);
Prediction predict_eulerian(const Group& g);

struct TreePendantPrediction {
    Prediction pendant;  // non-prime-power orders only: pendant iff not nilpotent
    Prediction tree;     // nilpotent groups only: tree iff prime-power order
};
TreePendantPrediction predict_tree_and_pendants(const Group& g);

/// Full predicted profile of the order-p^r*q minimal non-cyclic family.
/// Not applicable for r = 1 (the closed forms below assume r >= 2).
struct MinimalNonCyclicProfile {
    Applicability applicability = Applicability::NotApplicable;
    Multiset degree_multiset;           // {1 x q, 2 x 3, 3 x (2r-4), q+2}
    long long pendant_count = 0;        // q
    long long vertex_count = 0;         // 2r + q
    Prediction edge_count;              // stated 3r+q+2, evidence 3r+q-2
    Prediction diameter;                // stated r+2, evidence r+1
    std::vector<long long> cycle_lengths;  // 4, 6, ..., 2r through {e}
    bool regular = false;
    bool eulerian = false;
    long long subgroup_count = 0;       // 2r + q + 1
};
MinimalNonCyclicProfile predict_minimal_noncyclic_profile(long long p, int r, long long q);

}  // namespace cyclegraph
