#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cyclegraph/gamma.hpp"
#include "cyclegraph/group.hpp"

namespace test_helpers {

using namespace cyclegraph;

// Full table-level validation: identity at 0, Latin square, two-sided
// inverses, associativity. O(n^3); use on small groups only.
inline void require_group_axioms(const Group& g) {
    long long n = g.order;
    if (static_cast<long long>(g.table.size()) != n * n) throw std::logic_error("table size");
    for (long long i = 0; i < n; ++i) {
        if (g.mul(0, static_cast<int>(i)) != i || g.mul(static_cast<int>(i), 0) != i)
            throw std::logic_error("identity");
    }
    for (long long i = 0; i < n; ++i) {
        std::vector<char> row(n, 0), col(n, 0);
        for (long long j = 0; j < n; ++j) {
            if (row[g.mul(static_cast<int>(i), static_cast<int>(j))]++)
                throw std::logic_error("row not a permutation");
            if (col[g.mul(static_cast<int>(j), static_cast<int>(i))]++)
                throw std::logic_error("column not a permutation");
        }
    }
    for (long long i = 0; i < n; ++i) {
        bool inv = false;
        for (long long j = 0; j < n && !inv; ++j)
            inv = g.mul(static_cast<int>(i), static_cast<int>(j)) == 0 &&
                  g.mul(static_cast<int>(j), static_cast<int>(i)) == 0;
        if (!inv) throw std::logic_error("missing inverse");
    }
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            for (long long c = 0; c < n; ++c)
                if (g.mul(g.mul(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c)) !=
                    g.mul(static_cast<int>(a), g.mul(static_cast<int>(b), static_cast<int>(c))))
                    throw std::logic_error("not associative");
}

// Independent count of cyclic subgroups from element orders alone:
// each cyclic subgroup of order d has phi(d) generators.
inline long long cyclic_subgroup_count_by_orders(const Group& g) {
    auto phi = [](long long d) {
        long long result = d;
        for (long long p = 2; p * p <= d; ++p) {
            if (d % p) continue;
            result -= result / p;
            while (d % p == 0) d /= p;
        }
        if (d > 1) result -= result / d;
        return result;
    };
    std::map<long long, long long> by_order;
    for (long long o : g.element_orders) ++by_order[o];
    long long total = 0;
    for (auto [o, count] : by_order) total += count / phi(o);
    return total;
}

// Sylow p-subgroup count through the full lattice oracle (order <= 200).
inline long long sylow_count_via_lattice(const Group& g, long long p) {
    long long p_part = 1;
    long long n = g.order;
    while (n % p == 0) {
        n /= p;
        p_part *= p;
    }
    long long count = 0;
    for (const auto& h : all_subgroups(g))
        if (h.order == p_part) ++count;
    return count;
}

// Backtracking graph isomorphism over vertices typed by subgroup order.
// Only suitable for the small fixtures in these tests.
inline bool gamma_isomorphic(const GammaGraph& a, const GammaGraph& b) {
    size_t n = a.vertices.size();
    if (n != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
    std::vector<std::vector<char>> adj_a(n, std::vector<char>(n, 0)),
        adj_b(n, std::vector<char>(n, 0));
    for (auto [u, v] : a.edges) adj_a[u][v] = adj_a[v][u] = 1;
    for (auto [u, v] : b.edges) adj_b[u][v] = adj_b[v][u] = 1;

    std::vector<int> map_ab(n, -1), used(n, 0);
    std::function<bool(size_t)> place = [&](size_t u) -> bool {
        if (u == n) return true;
        for (size_t w = 0; w < n; ++w) {
            if (used[w] || a.vertices[u].order != b.vertices[w].order) continue;
            bool ok = true;
            for (size_t prev = 0; prev < u && ok; ++prev)
                ok = adj_a[u][prev] == adj_b[w][map_ab[prev]];
            if (!ok) continue;
            map_ab[u] = static_cast<int>(w);
            used[w] = 1;
            if (place(u + 1)) return true;
            used[w] = 0;
            map_ab[u] = -1;
        }
        return false;
    };
    return place(0);
}

// A Latin square with identity and inverses that is not associative:
// all five elements square to the identity, which no order-5 group allows.
inline std::vector<std::vector<int>> nonassociative_latin_square5() {
    return {{0, 1, 2, 3, 4},
            {1, 0, 3, 4, 2},
            {2, 4, 0, 1, 3},
            {3, 2, 4, 0, 1},
            {4, 3, 1, 2, 0}};
}

}  // namespace test_helpers
