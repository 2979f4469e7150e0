#include "cyclegraph/gamma.hpp"

#include <algorithm>

namespace cyclegraph {

std::vector<std::vector<int>> GammaGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

int es_value(const Subgroup& h) { return factorize(h.order).exponent_sum(); }

bool subgroup_contains(const Subgroup& outer, const Subgroup& inner) {
    return std::includes(outer.elements.begin(), outer.elements.end(), inner.elements.begin(),
                         inner.elements.end());
}

bool is_maximal_prime_index(const Subgroup& h1, const Subgroup& h2) {
    if (h2.order % h1.order != 0) return false;
    if (!is_prime(h2.order / h1.order)) return false;
    return subgroup_contains(h2, h1);
}

bool is_maximal_generic(const std::vector<Subgroup>& cyclics, const Subgroup& h1,
                        const Subgroup& h2) {
    if (h1.order >= h2.order || !subgroup_contains(h2, h1)) return false;
    for (const auto& k : cyclics) {
        if (k.order <= h1.order || k.order >= h2.order) continue;
        if (subgroup_contains(k, h1) && subgroup_contains(h2, k)) return false;
    }
    return true;
}

bool is_maximal_generic(const Group& g, const Subgroup& h1, const Subgroup& h2) {
    return is_maximal_generic(cyclic_subgroups(g), h1, h2);
}

namespace {

template <class Adjacent>
GammaGraph build_with(const Group& g, Adjacent adjacent) {
    GammaGraph out;
    out.parent_order = g.order;
    out.vertices = cyclic_subgroups(g);
    int n = static_cast<int>(out.vertices.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adjacent(out.vertices[u], out.vertices[v])) out.edges.emplace_back(u, v);
    return out;  // canonical vertex order makes the edge list deterministic
}

}  // namespace

GammaGraph build_gamma(const Group& g) {
    return build_with(g, [](const Subgroup& a, const Subgroup& b) {
        return is_maximal_prime_index(a, b);
    });
}

GammaGraph build_gamma_generic(const Group& g) {
    auto cyclics = cyclic_subgroups(g);
    return build_with(g, [&cyclics](const Subgroup& a, const Subgroup& b) {
        return is_maximal_generic(cyclics, a, b);
    });
}

}  // namespace cyclegraph
