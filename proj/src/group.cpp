#include "cyclegraph/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cyclegraph {

namespace {

std::vector<long long> orders_from_table(const Group& g) {
    std::vector<long long> out(g.order);
    out[0] = 1;
    for (ElementId x = 1; x < g.order; ++x) {
        long long t = 1;
        ElementId cur = x;
        while (cur != 0) {
            cur = g.mul(cur, x);
            ++t;
        }
        out[x] = t;
    }
    return out;
}

long long power_of(long long p, int a) {
    long long v = 1;
    while (a-- > 0) v *= p;
    return v;
}

}  // namespace

std::string FamilyDescriptor::name() const {
    struct Visitor {
        std::string operator()(const family::Cyclic& f) const {
            return "Z_" + std::to_string(f.n);
        }
        std::string operator()(const family::Dihedral& f) const {
            return "D_" + std::to_string(2 * f.n);
        }
        std::string operator()(const family::GeneralizedQuaternion& f) const {
            return "Q_" + std::to_string(1LL << f.n);
        }
        std::string operator()(const family::Dicyclic& f) const {
            return "Dic_" + std::to_string(f.n);
        }
        std::string operator()(const family::DirectProduct& f) const {
            std::string s;
            for (size_t i = 0; i < f.parts.size(); ++i) {
                if (i) s += "x";
                s += f.parts[i].name();
            }
            return s;
        }
        std::string operator()(const family::MinimalNonCyclic& f) const {
            return "MinNC(p=" + std::to_string(f.p) + ",r=" + std::to_string(f.r) +
                   ",q=" + std::to_string(f.q) + ")";
        }
        std::string operator()(const family::MatrixGroup& f) const {
            return "Matrix(mod=" + std::to_string(f.modulus) +
                   ",gens=" + std::to_string(f.generators.size()) + ")";
        }
        std::string operator()(const family::Opaque& f) const {
            return f.label.empty() ? "opaque" : f.label;
        }
    };
    return std::visit(Visitor{}, value);
}

Group make_cyclic(long long n) {
    if (n < 1) throw std::invalid_argument("make_cyclic: n must be >= 1");
    Group g;
    g.order = n;
    g.family = FamilyDescriptor{family::Cyclic{n}};
    g.table.resize(static_cast<size_t>(n) * n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) g.table[i * n + j] = static_cast<int>((i + j) % n);
    g.element_orders.resize(n);
    for (long long i = 0; i < n; ++i) g.element_orders[i] = n / std::gcd(n, i);
    return g;
}

// Ids 0..n-1 are the rotations r^i, ids n..2n-1 are the reflections r^i s.
Group make_dihedral(long long n) {
    if (n < 1) throw std::invalid_argument("make_dihedral: n must be >= 1");
    Group g;
    g.order = 2 * n;
    g.family = FamilyDescriptor{family::Dihedral{n}};
    g.table.resize(static_cast<size_t>(g.order) * g.order);
    auto id = [n](long long i, long long s) { return static_cast<int>(((i % n + n) % n) + n * s); };
    for (long long x = 0; x < g.order; ++x) {
        long long xi = x % n, xs = x / n;
        for (long long y = 0; y < g.order; ++y) {
            long long yi = y % n, ys = y / n;
            // r^a * r^b = r^{a+b};  r^a * r^b s = r^{a+b} s
            // r^a s * r^b = r^{a-b} s;  r^a s * r^b s = r^{a-b}
            long long i = xs == 0 ? xi + yi : xi - yi;
            long long s = xs ^ ys;
            g.table[x * g.order + y] = id(i, s);
        }
    }
    g.element_orders = orders_from_table(g);
    return g;
}

// Ids 0..2n-1 are a^i, ids 2n..4n-1 are a^i b, with a^{2n} = e, b^2 = a^n,
// b a b^-1 = a^-1.
Group make_dicyclic(long long n) {
    if (n < 2) throw std::invalid_argument("make_dicyclic: n must be >= 2");
    Group g;
    g.order = 4 * n;
    g.family = FamilyDescriptor{family::Dicyclic{n}};
    long long m = 2 * n;  // order of <a>
    g.table.resize(static_cast<size_t>(g.order) * g.order);
    auto id = [m](long long i, long long s) { return static_cast<int>(((i % m + m) % m) + m * s); };
    for (long long x = 0; x < g.order; ++x) {
        long long xi = x % m, xs = x / m;
        for (long long y = 0; y < g.order; ++y) {
            long long yi = y % m, ys = y / m;
            long long i, s;
            if (xs == 0) {
                i = xi + yi;
                s = ys;
            } else if (ys == 0) {
                i = xi - yi;  // a^xi b a^yi = a^{xi-yi} b
                s = 1;
            } else {
                i = xi - yi + n;  // (a^xi b)(a^yi b) = a^{xi-yi} b^2 = a^{xi-yi+n}
                s = 0;
            }
            g.table[x * g.order + y] = id(i, s);
        }
    }
    g.element_orders = orders_from_table(g);
    return g;
}

Group make_generalized_quaternion(int n) {
    if (n < 3) throw std::invalid_argument("make_generalized_quaternion: n must be >= 3");
    Group g = make_dicyclic(1LL << (n - 2));  // Q_{2^n} = Dic_{2^{n-2}}
    g.family = FamilyDescriptor{family::GeneralizedQuaternion{n}};
    return g;
}

// Mixed-radix encoding: id = ((c1*n2 + c2)*n3 + c3)...
Group make_direct_product(const std::vector<Group>& parts) {
    if (parts.empty()) throw std::invalid_argument("make_direct_product: empty part list");
    long long n = 1;
    for (const auto& p : parts) n *= p.order;
    Group g;
    g.order = n;
    family::DirectProduct fam;
    for (const auto& p : parts) fam.parts.push_back(p.family);
    g.family = FamilyDescriptor{std::move(fam)};

    size_t k = parts.size();
    auto decode = [&](long long x) {
        std::vector<long long> c(k);
        for (size_t i = k; i-- > 0;) {
            c[i] = x % parts[i].order;
            x /= parts[i].order;
        }
        return c;
    };
    auto encode = [&](const std::vector<long long>& c) {
        long long x = 0;
        for (size_t i = 0; i < k; ++i) x = x * parts[i].order + c[i];
        return x;
    };

    g.table.resize(static_cast<size_t>(n) * n);
    for (long long x = 0; x < n; ++x) {
        auto cx = decode(x);
        for (long long y = 0; y < n; ++y) {
            auto cy = decode(y);
            std::vector<long long> cz(k);
            for (size_t i = 0; i < k; ++i)
                cz[i] = parts[i].mul(static_cast<int>(cx[i]), static_cast<int>(cy[i]));
            g.table[x * n + y] = static_cast<int>(encode(cz));
        }
    }
    g.element_orders.resize(n);
    for (long long x = 0; x < n; ++x) {
        auto c = decode(x);
        long long o = 1;
        for (size_t i = 0; i < k; ++i) o = std::lcm(o, parts[i].element_orders[c[i]]);
        g.element_orders[x] = o;
    }
    return g;
}

long long find_conjugation_exponent(long long p, long long q) {
    if (!is_prime(p) || !is_prime(q) || p == q)
        throw std::invalid_argument("find_conjugation_exponent: p, q must be distinct primes");
    if ((q - 1) % p != 0)
        throw std::invalid_argument("find_conjugation_exponent: no valid s exists (p does not divide q-1)");
    for (long long s = 2; s < q; ++s) {
        long long pw = 1;
        for (long long t = 0; t < p; ++t) pw = pw * s % q;
        if (pw == 1) return s;  // s != 1 mod q holds since 2 <= s < q
    }
    throw std::logic_error("find_conjugation_exponent: unreachable");
}

// Elements are pairs (i mod q, j mod p^r) standing for a^i b^j, id = i*p^r + j.
// Multiplication uses b^j a = a^{s^-j} b^j, with s of multiplicative order p mod q.
Group make_minimal_noncyclic(long long p, int r, long long q) {
    if (r < 1) throw std::invalid_argument("make_minimal_noncyclic: r must be >= 1");
    long long s = find_conjugation_exponent(p, q);  // validates p, q
    long long pr = power_of(p, r);
    long long n = pr * q;

    // s^{-j} mod q depends on j mod p only.
    std::vector<long long> sinv(p);
    for (long long j = 0; j < p; ++j) {
        long long e = (p - j) % p, pw = 1;
        for (long long t = 0; t < e; ++t) pw = pw * s % q;
        sinv[j] = pw;
    }

    Group g;
    g.order = n;
    g.family = FamilyDescriptor{family::MinimalNonCyclic{p, r, q, s}};
    g.table.resize(static_cast<size_t>(n) * n);
    for (long long x = 0; x < n; ++x) {
        long long i1 = x / pr, j1 = x % pr;
        for (long long y = 0; y < n; ++y) {
            long long i2 = y / pr, j2 = y % pr;
            long long i = (i1 + i2 * sinv[j1 % p]) % q;
            long long j = (j1 + j2) % pr;
            g.table[x * n + y] = static_cast<int>(i * pr + j);
        }
    }
    g.element_orders = orders_from_table(g);
    return g;
}

Group from_cayley_table(const std::vector<std::vector<int>>& raw) {
    size_t n = raw.size();
    if (n == 0) throw std::invalid_argument("cayley: table must be non-empty");
    for (const auto& row : raw) {
        if (row.size() != n) throw std::invalid_argument("cayley: table must be square");
        for (int v : row)
            if (v < 0 || v >= static_cast<int>(n))
                throw std::invalid_argument("cayley: entry out of range [0,n)");
    }
    for (size_t i = 0; i < n; ++i)
        if (raw[0][i] != static_cast<int>(i) || raw[i][0] != static_cast<int>(i))
            throw std::invalid_argument("cayley: index 0 is not an identity");
    for (size_t i = 0; i < n; ++i) {
        std::vector<char> row_seen(n, 0), col_seen(n, 0);
        for (size_t j = 0; j < n; ++j) {
            if (row_seen[raw[i][j]]++) throw std::invalid_argument("cayley: duplicate entry in a row");
            if (col_seen[raw[j][i]]++) throw std::invalid_argument("cayley: duplicate entry in a column");
        }
    }
    for (size_t i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (size_t j = 0; j < n && !has_inverse; ++j)
            has_inverse = raw[i][j] == 0 && raw[j][i] == 0;
        if (!has_inverse) throw std::invalid_argument("cayley: element without a two-sided inverse");
    }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                if (raw[raw[a][b]][c] != raw[a][raw[b][c]])
                    throw std::invalid_argument("cayley: table is not associative");

    Group g;
    g.order = static_cast<long long>(n);
    g.family = FamilyDescriptor{family::Opaque{}};
    g.table.resize(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g.table[i * n + j] = raw[i][j];
    g.element_orders = orders_from_table(g);
    return g;
}

Group from_matrix_generators(long long modulus, const std::vector<Mat2>& gens, int closure_cap) {
    if (modulus < 2) throw std::invalid_argument("matrix: modulus must be >= 2");
    auto norm = [modulus](Mat2 m) {
        for (auto& v : m) v = (v % modulus + modulus) % modulus;
        return m;
    };
    auto mmul = [modulus](const Mat2& a, const Mat2& b) {
        return Mat2{(a[0] * b[0] + a[1] * b[2]) % modulus, (a[0] * b[1] + a[1] * b[3]) % modulus,
                    (a[2] * b[0] + a[3] * b[2]) % modulus, (a[2] * b[1] + a[3] * b[3]) % modulus};
    };
    std::vector<Mat2> ngens;
    for (const auto& raw : gens) {
        Mat2 m = norm(raw);
        long long det = ((m[0] * m[3] - m[1] * m[2]) % modulus + modulus) % modulus;
        if (std::gcd(det, modulus) != 1)
            throw std::invalid_argument("matrix: generator is not invertible mod modulus");
        ngens.push_back(m);
    }

    Mat2 identity{1, 0, 0, 1};
    std::map<Mat2, int> ids;
    std::vector<Mat2> elems{identity};
    ids[identity] = 0;
    for (size_t head = 0; head < elems.size(); ++head) {
        Mat2 cur = elems[head];  // copy: elems may reallocate
        for (const auto& gen : ngens) {
            Mat2 nxt = mmul(cur, gen);
            if (ids.emplace(nxt, static_cast<int>(elems.size())).second) {
                elems.push_back(nxt);
                if (static_cast<int>(elems.size()) > closure_cap)
                    throw std::invalid_argument("matrix: closure exceeds cap");
            }
        }
    }

    long long n = static_cast<long long>(elems.size());
    Group g;
    g.order = n;
    g.family = FamilyDescriptor{family::MatrixGroup{modulus, gens}};
    g.table.resize(static_cast<size_t>(n) * n);
    // Associativity holds by matrix algebra; the closure under generators of a
    // finite set of invertible matrices is a group, so every product lands in it.
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) g.table[i * n + j] = ids.at(mmul(elems[i], elems[j]));
    g.element_orders = orders_from_table(g);
    return g;
}

Group load_cayley_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cayley: cannot open " + path);
    long long n = 0;
    if (!(in >> n) || n < 1) throw std::invalid_argument("cayley: bad size line in " + path);
    std::vector<std::vector<int>> raw(n, std::vector<int>(n));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            if (!(in >> raw[i][j])) throw std::invalid_argument("cayley: truncated table in " + path);
    Group g = from_cayley_table(raw);
    std::string label = path;
    if (auto pos = label.find_last_of('/'); pos != std::string::npos) label = label.substr(pos + 1);
    g.family = FamilyDescriptor{family::Opaque{"Cayley(" + label + ")"}};
    return g;
}

std::string format_cayley_table(const Group& g) {
    std::ostringstream out;
    out << g.order << "\n";
    for (long long i = 0; i < g.order; ++i) {
        for (long long j = 0; j < g.order; ++j) {
            if (j) out << ' ';
            out << g.mul(static_cast<int>(i), static_cast<int>(j));
        }
        out << "\n";
    }
    return out.str();
}

long long element_order(const Group& g, ElementId x) {
    if (x < 0 || x >= g.order) throw std::invalid_argument("element_order: id out of range");
    return g.element_orders[x];
}

std::vector<ElementId> closure_from_generators(const Group& g, const std::vector<ElementId>& gens) {
    std::vector<char> member(g.order, 0);
    std::vector<ElementId> elems{0};
    member[0] = 1;
    for (ElementId x : gens)
        if (!member[x]) {
            member[x] = 1;
            elems.push_back(x);
        }
    for (size_t head = 0; head < elems.size(); ++head) {
        ElementId cur = elems[head];
        for (ElementId gen : gens) {
            ElementId nxt = g.mul(cur, gen);
            if (!member[nxt]) {
                member[nxt] = 1;
                elems.push_back(nxt);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

namespace {

std::vector<ElementId> generated_cyclic(const Group& g, ElementId x) {
    std::vector<ElementId> elems{0};
    ElementId cur = x;
    while (cur != 0) {
        elems.push_back(cur);
        cur = g.mul(cur, x);
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

void sort_canonical(std::vector<Subgroup>& subs) {
    std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.elements < b.elements;
    });
}

}  // namespace

std::vector<Subgroup> cyclic_subgroups(const Group& g) {
    std::set<std::vector<ElementId>> seen;
    std::vector<Subgroup> out;
    for (ElementId x = 0; x < g.order; ++x) {
        auto elems = generated_cyclic(g, x);
        if (seen.insert(elems).second) {
            Subgroup h;
            h.order = static_cast<long long>(elems.size());
            h.elements = std::move(elems);
            h.generator = x;  // smallest generator: ids scanned in ascending order
            out.push_back(std::move(h));
        }
    }
    sort_canonical(out);
    return out;
}

std::optional<ElementId> cyclic_generator(const Group& g, const Subgroup& h) {
    for (ElementId x : h.elements)
        if (g.element_orders[x] == h.order) return x;
    return std::nullopt;
}

std::vector<Subgroup> all_subgroups(const Group& g) {
    if (g.order > kAllSubgroupsCap)
        throw std::invalid_argument("all_subgroups: group order exceeds the oracle cap");

    struct Entry {
        std::vector<ElementId> elements;
        std::vector<ElementId> gens;
    };
    std::vector<Entry> entries;
    std::set<std::vector<ElementId>> seen;
    for (const auto& h : cyclic_subgroups(g)) {
        entries.push_back({h.elements, {*h.generator}});
        seen.insert(h.elements);
    }

    auto subset = [](const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    // Join closure: every subgroup is a join of cyclic subgroups, so iterating
    // pairwise joins to a fixed point yields the full lattice.
    for (size_t i = 1; i < entries.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            if (subset(entries[j].elements, entries[i].elements) ||
                subset(entries[i].elements, entries[j].elements))
                continue;
            std::vector<ElementId> gens = entries[i].gens;
            gens.insert(gens.end(), entries[j].gens.begin(), entries[j].gens.end());
            auto join = closure_from_generators(g, gens);
            if (seen.insert(join).second) entries.push_back({std::move(join), std::move(gens)});
        }
    }

    std::vector<Subgroup> out;
    out.reserve(entries.size());
    for (auto& e : entries) {
        Subgroup h;
        h.order = static_cast<long long>(e.elements.size());
        h.elements = std::move(e.elements);
        out.push_back(std::move(h));
    }
    sort_canonical(out);
    for (auto& h : out) h.generator = cyclic_generator(g, h);
    return out;
}

bool is_nilpotent(const Group& g) {
    Factorization f = factorize(g.order);
    for (const auto& [p, a] : f.factors) {
        long long p_part = power_of(p, a);
        long long p_elements = 0;
        for (long long o : g.element_orders) {
            while (o % p == 0) o /= p;
            if (o == 1) ++p_elements;
        }
        if (p_elements != p_part) return false;
    }
    return true;
}

long long count_subgroups_of_order(const Group& g, long long m) {
    long long count = 0;
    for (const auto& h : cyclic_subgroups(g))
        if (h.order == m) ++count;
    return count;
}

Group subgroup_as_group(const Group& g, const Subgroup& h) {
    std::vector<int> index_of(g.order, -1);
    for (size_t i = 0; i < h.elements.size(); ++i) index_of[h.elements[i]] = static_cast<int>(i);
    long long n = h.order;
    Group out;
    out.order = n;
    out.family = FamilyDescriptor{family::Opaque{}};
    out.table.resize(static_cast<size_t>(n) * n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            int prod = index_of[g.mul(h.elements[i], h.elements[j])];
            if (prod < 0) throw std::invalid_argument("subgroup_as_group: set is not closed");
            out.table[i * n + j] = prod;
        }
    out.element_orders.resize(n);
    for (long long i = 0; i < n; ++i) out.element_orders[i] = g.element_orders[h.elements[i]];
    return out;
}

}  // namespace cyclegraph
