#include "cyclegraph/formulas.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyclegraph {

std::string pred_value_to_string(const PredValue& v) {
    struct Visitor {
        std::string operator()(long long x) const { return std::to_string(x); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const Interval& iv) const {
            return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
        }
        std::string operator()(const Multiset& m) const {
            std::ostringstream out;
            out << "{";
            for (size_t i = 0; i < m.size(); ++i) {
                if (i) out << ",";
                out << m[i];
            }
            out << "}";
            return out.str();
        }
    };
    return std::visit(Visitor{}, v);
}

SubgroupProfile make_profile(const Factorization& reference, long long subgroup_order) {
    SubgroupProfile profile;
    for (const auto& [p, a] : reference.factors) {
        int b = 0;
        while (subgroup_order % p == 0) {
            subgroup_order /= p;
            ++b;
        }
        profile.exponents.push_back(b);
        if (b == 0) ++profile.zero_count;
        if (b == a) ++profile.full_count;
    }
    return profile;
}

namespace {

bool is_power_of_two(long long n) { return n >= 1 && (n & (n - 1)) == 0; }

int log2_exact(long long n) {
    int e = 0;
    while (n > 1) {
        n >>= 1;
        ++e;
    }
    return e;
}

// Edge count of the cyclic-group graph: sum_i a_i * prod_{j != i} (a_j + 1).
long long cyclic_edge_count(const Factorization& f) {
    long long total = 0;
    for (size_t i = 0; i < f.factors.size(); ++i) {
        long long term = f.factors[i].exponent;
        for (size_t j = 0; j < f.factors.size(); ++j)
            if (j != i) term *= f.factors[j].exponent + 1;
        total += term;
    }
    return total;
}

// The product-family row Z_{p^a} x Z_q x Z_q.
struct PqqShape {
    long long p, q;
    int a;
};

std::optional<PqqShape> match_pqq(const family::DirectProduct& f) {
    if (f.parts.size() != 3) return std::nullopt;
    std::array<long long, 3> n{};
    for (int i = 0; i < 3; ++i) {
        const auto* c = f.parts[i].as<family::Cyclic>();
        if (!c) return std::nullopt;
        n[i] = c->n;
    }
    if (n[1] != n[2] || !is_prime(n[1])) return std::nullopt;
    Factorization f1 = factorize(n[0]);
    if (f1.prime_count() != 1) return std::nullopt;
    if (f1.factors[0].prime == n[1]) return std::nullopt;
    return PqqShape{f1.factors[0].prime, n[1], f1.factors[0].exponent};
}

}  // namespace

Prediction predict_vertex_count(const FamilyDescriptor& family) {
    if (const auto* f = family.as<family::Cyclic>())
        return Prediction::of(factorize(f->n).divisor_count());
    if (const auto* f = family.as<family::Dihedral>())
        return Prediction::of(factorize(f->n).divisor_count() + f->n);
    if (const auto* f = family.as<family::GeneralizedQuaternion>())
        return Prediction::of((1LL << (f->n - 2)) + f->n);
    if (const auto* f = family.as<family::Dicyclic>())
        return Prediction::of(factorize(2 * f->n).divisor_count() + f->n);
    if (const auto* f = family.as<family::DirectProduct>()) {
        if (auto pqq = match_pqq(*f)) return Prediction::of((pqq->a + 1) * (pqq->q + 2));
        return Prediction::na();
    }
    if (const auto* f = family.as<family::MinimalNonCyclic>()) {
        if (f->r < 2) return Prediction::na();
        return Prediction::of(2LL * f->r + f->q);
    }
    return Prediction::na();
}

Prediction predict_edge_count(const FamilyDescriptor& family) {
    if (const auto* f = family.as<family::Cyclic>())
        return Prediction::of(cyclic_edge_count(factorize(f->n)));
    if (const auto* f = family.as<family::Dihedral>())
        return Prediction::of(cyclic_edge_count(factorize(f->n)) + f->n);
    if (const auto* f = family.as<family::GeneralizedQuaternion>())
        return Prediction::of((1LL << (f->n - 2)) + f->n - 1);
    if (const auto* f = family.as<family::Dicyclic>())
        return Prediction::of(cyclic_edge_count(factorize(2 * f->n)) + f->n);
    if (const auto* f = family.as<family::DirectProduct>()) {
        if (auto pqq = match_pqq(*f))
            return Prediction::of((pqq->a - 1) * (2 * pqq->q + 3) + (3 * pqq->q + 4));
        return Prediction::na();
    }
    if (const auto* f = family.as<family::MinimalNonCyclic>()) {
        if (f->r < 2) return Prediction::na();
        return Prediction::conflict(3LL * f->r + f->q + 2, 3LL * f->r + f->q - 2, kMinncEdgeCountId);
    }
    return Prediction::na();
}

namespace {

// Degree of a subgroup of the distinguished cyclic subgroup of order `m`:
// 2k - m(H) - r(H) against the factorization of m.
long long chain_degree(long long m, long long subgroup_order) {
    Factorization f = factorize(m);
    SubgroupProfile profile = make_profile(f, subgroup_order);
    return 2LL * f.prime_count() - profile.zero_count - profile.full_count;
}

Prediction genq_degree(int n, const Subgroup& h, long long half) {
    if (h.order == 2)
        return Prediction::conflict((1LL << (n - 2)) + 1, (1LL << (n - 2)) + 2, kGenqCenterDegreeId);
    if (h.order == 1 || h.order == half) return Prediction::of(1LL);
    if (h.elements.back() < half) return Prediction::of(2LL);  // inside <a>, strictly between
    return Prediction::of(1LL);
}

}  // namespace

Prediction predict_degree(const Group& g, const Subgroup& h) {
    if (const auto* f = g.family.as<family::Cyclic>())
        return Prediction::of(chain_degree(f->n, h.order));
    if (const auto* f = g.family.as<family::Dihedral>()) {
        long long n = f->n;
        if (h.order == 1) return Prediction::of(factorize(n).prime_count() + n);
        if (h.order == 2 && h.elements.back() >= n) return Prediction::of(1LL);  // reflection
        return Prediction::of(chain_degree(n, h.order));
    }
    if (const auto* f = g.family.as<family::GeneralizedQuaternion>())
        return genq_degree(f->n, h, 1LL << (f->n - 1));
    if (const auto* f = g.family.as<family::Dicyclic>()) {
        long long n = f->n;
        // The dicyclic degree cases assume n is not a 2-power; Dic_{2^m} is the
        // generalized quaternion group, so those go through the Q rules.
        if (is_power_of_two(n)) return genq_degree(log2_exact(n) + 2, h, 2 * n);
        if (h.order == 2) return Prediction::of(factorize(n).prime_count() + n + 1);
        if (h.elements.back() < 2 * n) return Prediction::of(chain_degree(2 * n, h.order));
        return Prediction::of(1LL);  // order-4 subgroup outside <a>
    }
    return Prediction::na();
}

MinMaxPrediction predict_min_max_degree(const FamilyDescriptor& family) {
    if (const auto* f = family.as<family::Cyclic>()) {
        Factorization fac = factorize(f->n);
        long long k = fac.prime_count();
        long long ell = 0;
        for (const auto& pp : fac.factors)
            if (pp.exponent == 1) ++ell;
        return {Prediction::of(k), Prediction::of(2 * k - ell)};
    }
    if (const auto* f = family.as<family::Dihedral>()) {
        long long k = factorize(f->n).prime_count();
        return {Prediction::of(1LL), Prediction::of(k + f->n)};
    }
    if (const auto* f = family.as<family::GeneralizedQuaternion>()) {
        return {Prediction::of(1LL),
                Prediction::conflict((1LL << (f->n - 2)) + 1, (1LL << (f->n - 2)) + 2,
                                     kGenqCenterDegreeId)};
    }
    if (const auto* f = family.as<family::Dicyclic>()) {
        if (is_power_of_two(f->n))
            return {Prediction::of(1LL),
                    Prediction::conflict(f->n + 1, f->n + 2, kGenqCenterDegreeId)};
        long long k = factorize(f->n).prime_count();
        return {Prediction::of(1LL), Prediction::of(k + f->n + 1)};
    }
    return {Prediction::na(), Prediction::na()};
}

Prediction predict_degree_sequence_interval(const FamilyDescriptor& family) {
    if (!family.as<family::Cyclic>()) return Prediction::na();
    MinMaxPrediction mm = predict_min_max_degree(family);
    return Prediction::of(Interval{std::get<long long>(mm.min_degree.stated),
                                   std::get<long long>(mm.max_degree.stated)});
}

Prediction predict_diameter(const FamilyDescriptor& family) {
    if (const auto* f = family.as<family::Cyclic>())
        return Prediction::of(static_cast<long long>(factorize(f->n).exponent_sum()));
    if (const auto* f = family.as<family::Dihedral>())
        return Prediction::of(factorize(f->n).exponent_sum() + 1LL);
    if (const auto* f = family.as<family::GeneralizedQuaternion>())
        return Prediction::of(static_cast<long long>(f->n) - 1);
    if (const auto* f = family.as<family::Dicyclic>()) {
        long long base = factorize(f->n).exponent_sum();
        return Prediction::of(base + (f->n % 2 == 0 ? 1 : 2));
    }
    if (const auto* f = family.as<family::MinimalNonCyclic>()) {
        if (f->r < 2) return Prediction::na();
        return Prediction::conflict(static_cast<long long>(f->r) + 2,
                                    static_cast<long long>(f->r) + 1, kMinncDiameterId);
    }
    return Prediction::na();
}

DiameterBounds predict_diameter_bounds(const Group& g) {
    DiameterBounds out;
    Factorization f = factorize(g.order);
    if (g.order >= 2) out.general = Prediction::of(Interval{1, f.exponent_sum()});
    if (is_nilpotent(g)) {
        long long sum_b = 0;
        for (const auto& pp : f.factors) {
            int best = 0;
            for (long long o : g.element_orders) {
                int e = 0;
                while (o % pp.prime == 0) {
                    o /= pp.prime;
                    ++e;
                }
                best = std::max(best, e);
            }
            sum_b += best;
        }
        out.nilpotent = Prediction::of(Interval{sum_b, 2 * sum_b});
    }
    return out;
}

ShapePrediction classify_shape(const Group& g) {
    bool cyclic = false;
    for (long long o : g.element_orders)
        if (o == g.order) cyclic = true;
    Factorization f = factorize(g.order);

    ShapePrediction s;
    s.path = cyclic && f.prime_count() <= 1;
    s.cycle = cyclic && f.prime_count() == 2 && f.square_free();
    s.complete = g.order == 1 || (cyclic && is_prime(g.order));

    bool all_prime_orders = g.order >= 2;
    for (long long o : g.element_orders)
        if (o != 1 && !is_prime(o)) all_prime_orders = false;
    bool is_z_p2 = cyclic && f.prime_count() == 1 && f.exponent_sum() == 2;
    bool is_q8 = false;
    if (g.order == 8) {
        Multiset orders(g.element_orders.begin(), g.element_orders.end());
        std::sort(orders.begin(), orders.end());
        is_q8 = orders == Multiset{1, 2, 4, 4, 4, 4, 4, 4};
    }
    s.star = is_z_p2 || is_q8 || all_prime_orders;
    return s;
}

Prediction predict_regular(const Group& g) {
    bool cyclic = false;
    for (long long o : g.element_orders)
        if (o == g.order) cyclic = true;
    return Prediction::of(cyclic && factorize(g.order).square_free());
}

Prediction predict_eulerian(const Group& g) {
    if (const auto* f = g.family.as<family::Cyclic>()) {
        Factorization fac = factorize(f->n);
        return Prediction::of(fac.square_free() && fac.prime_count() % 2 == 0);
    }
    if (const auto* f = g.family.as<family::Dihedral>())
        return f->n >= 3 ? Prediction::of(false) : Prediction::na();
    if (g.family.as<family::GeneralizedQuaternion>()) return Prediction::of(false);
    if (const auto* f = g.family.as<family::Dicyclic>())
        return f->n >= 3 ? Prediction::of(false) : Prediction::na();
    if (const auto* f = g.family.as<family::MinimalNonCyclic>())
        return f->r >= 2 ? Prediction::of(false) : Prediction::na();
    return Prediction::na();
}

TreePendantPrediction predict_tree_and_pendants(const Group& g) {
    Factorization f = factorize(g.order);
    bool prime_power = f.prime_count() <= 1;  // the trivial group counts as a p-group
    TreePendantPrediction out;
    bool nilpotent = is_nilpotent(g);
    if (!prime_power) out.pendant = Prediction::of(!nilpotent);
    if (nilpotent) out.tree = Prediction::of(prime_power);
    return out;
}

MinimalNonCyclicProfile predict_minimal_noncyclic_profile(long long p, int r, long long q) {
    find_conjugation_exponent(p, q);  // validates p, q and p | q-1
    if (r < 1) throw std::invalid_argument("minimal_noncyclic_profile: r must be >= 1");
    MinimalNonCyclicProfile out;
    if (r < 2) return out;  // the closed forms below assume r >= 2

    out.applicability = Applicability::Applies;
    out.degree_multiset.assign(q, 1);
    out.degree_multiset.insert(out.degree_multiset.end(), 3, 2);
    out.degree_multiset.insert(out.degree_multiset.end(), 2 * r - 4, 3);
    out.degree_multiset.push_back(q + 2);
    out.pendant_count = q;
    out.vertex_count = 2LL * r + q;
    out.edge_count = Prediction::conflict(3LL * r + q + 2, 3LL * r + q - 2, kMinncEdgeCountId);
    out.diameter = Prediction::conflict(static_cast<long long>(r) + 2,
                                        static_cast<long long>(r) + 1, kMinncDiameterId);
    for (int len = 4; len <= 2 * r; len += 2) out.cycle_lengths.push_back(len);
    out.regular = false;
    out.eulerian = false;
    out.subgroup_count = 2LL * r + q + 1;
    return out;
}

}  // namespace cyclegraph
