#pragma once

#include <utility>
#include <vector>

#include "cyclegraph/group.hpp"

namespace cyclegraph {

/// The cyclic subgroup graph: vertices are the cyclic subgroups in canonical
/// order, edges join pairs in maximal containment. Undirected, simple.
struct GammaGraph {
    std::vector<Subgroup> vertices;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted lexicographically
    long long parent_order = 1;

    std::vector<std::vector<int>> adjacency() const;
};

/// Number of prime factors of |H| counted with multiplicity. Edge endpoints
/// always have opposite parity, which bipartitions the graph.
int es_value(const Subgroup& h);

/// Sorted-list inclusion: every element of `inner` appears in `outer`.
bool subgroup_contains(const Subgroup& outer, const Subgroup& inner);

/// Production adjacency rule: containment with prime index. Sufficient for
/// maximal containment because a finite cyclic group has exactly one subgroup
/// per divisor of its order, so H1 < K < H2 <= cyclic forces |H2|/|H1|
/// composite; conversely prime index leaves no room for an intermediate K.
bool is_maximal_prime_index(const Subgroup& h1, const Subgroup& h2);

/// Definitional adjacency rule, kept as an independent oracle: H1 < H2 with no
/// cyclic subgroup strictly between. Quantifying over cyclic subgroups only is
/// enough: any intermediate subgroup of the cyclic group H2 is itself cyclic.
bool is_maximal_generic(const std::vector<Subgroup>& cyclics, const Subgroup& h1,
                        const Subgroup& h2);
bool is_maximal_generic(const Group& g, const Subgroup& h1, const Subgroup& h2);

/// Builds the graph with the prime-index rule.
GammaGraph build_gamma(const Group& g);

/// Builds the graph with the definitional rule (test/audit oracle).
GammaGraph build_gamma_generic(const Group& g);

}  // namespace cyclegraph
