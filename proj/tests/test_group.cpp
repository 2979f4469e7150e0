#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>

#include "cyclegraph/group.hpp"
#include "test_helpers.hpp"

using namespace cyclegraph;
using test_helpers::cyclic_subgroup_count_by_orders;
using test_helpers::require_group_axioms;

namespace {

std::map<long long, long long> order_histogram(const std::vector<Subgroup>& subs) {
    std::map<long long, long long> hist;
    for (const auto& h : subs) ++hist[h.order];
    return hist;
}

}  // namespace

TEST_CASE("make_cyclic basics") {
    Group t = make_cyclic(1);
    CHECK(t.order == 1);
    CHECK(t.element_orders == std::vector<long long>{1});

    Group g = make_cyclic(12);
    for (long long i = 0; i < 12; ++i) CHECK(g.element_orders[i] == 12 / std::gcd(12LL, i));
    CHECK(element_order(g, 1) == 12);
    CHECK(element_order(g, 0) == 1);
    CHECK(cyclic_subgroups(g).size() == 6);
    CHECK(g.family.name() == "Z_12");
    CHECK_THROWS_AS(make_cyclic(0), std::invalid_argument);
    require_group_axioms(make_cyclic(6));
}

TEST_CASE("make_dihedral basics") {
    Group d12 = make_dihedral(6);
    CHECK(d12.order == 12);
    auto subs = cyclic_subgroups(d12);
    CHECK(subs.size() == 10);
    auto hist = order_histogram(subs);
    CHECK(hist[1] == 1);
    CHECK(hist[2] == 7);  // six reflections plus the rotation r^3
    CHECK(hist[3] == 1);
    CHECK(hist[6] == 1);

    CHECK(cyclic_subgroups(make_dihedral(4)).size() == 7);

    Group d2 = make_dihedral(1);
    CHECK(d2.order == 2);
    CHECK(d2.table == make_cyclic(2).table);

    require_group_axioms(d12);
    require_group_axioms(make_dihedral(5));
    CHECK_THROWS_AS(make_dihedral(0), std::invalid_argument);
}

TEST_CASE("make_generalized_quaternion basics") {
    Group q8 = make_generalized_quaternion(3);
    CHECK(q8.order == 8);
    auto subs = cyclic_subgroups(q8);
    CHECK(subs.size() == 5);
    auto hist = order_histogram(subs);
    CHECK(hist[1] == 1);
    CHECK(hist[2] == 1);
    CHECK(hist[4] == 3);
    require_group_axioms(q8);

    Group q16 = make_generalized_quaternion(4);
    CHECK(count_subgroups_of_order(q16, 8) == 1);
    CHECK(count_subgroups_of_order(q16, 4) == 5);  // 2^{n-2} + 1
    CHECK(count_subgroups_of_order(q16, 2) == 1);
    require_group_axioms(q16);

    CHECK_THROWS_AS(make_generalized_quaternion(2), std::invalid_argument);
}

TEST_CASE("make_dicyclic basics") {
    CHECK(make_dicyclic(2).table == make_generalized_quaternion(3).table);

    Group dic3 = make_dicyclic(3);
    CHECK(dic3.order == 12);
    auto subs = cyclic_subgroups(dic3);
    CHECK(subs.size() == 7);
    // All order-4 subgroups lie outside the distinguished Z_6 (element ids < 6).
    long long outside_order4 = 0;
    for (const auto& h : subs)
        if (h.order == 4 && h.elements.back() >= 6) ++outside_order4;
    CHECK(outside_order4 == 3);
    CHECK(count_subgroups_of_order(dic3, 6) == 1);
    // Every element outside <a> has order 4.
    for (ElementId x = 6; x < 12; ++x) CHECK(dic3.element_orders[x] == 4);

    require_group_axioms(dic3);
    require_group_axioms(make_dicyclic(5));
    CHECK_THROWS_AS(make_dicyclic(1), std::invalid_argument);
}

TEST_CASE("dicyclic and generalized quaternion agree as relabeled groups") {
    for (int m = 1; m <= 3; ++m) {
        Group a = make_dicyclic(1LL << m);
        Group b = make_generalized_quaternion(m + 2);
        CHECK(a.order == b.order);
        auto ha = order_histogram(cyclic_subgroups(a));
        auto hb = order_histogram(cyclic_subgroups(b));
        CHECK(ha == hb);
        CHECK(test_helpers::gamma_isomorphic(build_gamma(a), build_gamma(b)));
        CHECK(a.table == b.table);
    }
}

TEST_CASE("quaternion groups have a unique involution") {
    for (int n = 3; n <= 6; ++n) {
        Group q = make_generalized_quaternion(n);
        long long involutions = 0;
        for (long long o : q.element_orders)
            if (o == 2) ++involutions;
        CHECK(involutions == 1);
    }
}

TEST_CASE("make_direct_product basics") {
    Group klein = make_direct_product({make_cyclic(2), make_cyclic(2)});
    CHECK(klein.order == 4);
    CHECK(cyclic_subgroups(klein).size() == 4);

    Group g = make_direct_product({make_cyclic(4), make_cyclic(3), make_cyclic(3)});
    CHECK(g.order == 36);
    CHECK(cyclic_subgroups(g).size() == 15);  // (a+1)(q+2) with a=2, q=3
    CHECK(g.family.name() == "Z_4xZ_3xZ_3");

    Group z6z2 = make_direct_product({make_cyclic(6), make_cyclic(2)});
    CHECK(cyclic_subgroups(z6z2).size() == 8);
    // Element order is the lcm of the component orders.
    CHECK(z6z2.element_orders[1 * 2 + 1] == 6);  // (r, s) with orders (6, 2)
    require_group_axioms(z6z2);

    CHECK_THROWS_AS(make_direct_product({}), std::invalid_argument);
}

TEST_CASE("find_conjugation_exponent") {
    CHECK(find_conjugation_exponent(2, 3) == 2);
    CHECK(find_conjugation_exponent(3, 7) == 2);
    CHECK(find_conjugation_exponent(2, 5) == 4);
    CHECK(find_conjugation_exponent(5, 11) == 3);
    CHECK_THROWS_WITH_AS(find_conjugation_exponent(3, 5),
                         "find_conjugation_exponent: no valid s exists (p does not divide q-1)",
                         std::invalid_argument);
    CHECK_THROWS_AS(find_conjugation_exponent(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(find_conjugation_exponent(3, 3), std::invalid_argument);
}

TEST_CASE("make_minimal_noncyclic structure") {
    Group g = make_minimal_noncyclic(2, 3, 3);  // order 24
    CHECK(g.order == 24);
    require_group_axioms(g);

    const auto* fam = g.family.as<family::MinimalNonCyclic>();
    REQUIRE(fam);
    long long pr = 8;
    ElementId a = static_cast<ElementId>(1 * pr + 0);  // (i=1, j=0)
    ElementId b = 1;                                   // (i=0, j=1)
    CHECK(g.element_orders[a] == 3);
    CHECK(g.element_orders[b] == 8);
    // b^-1 a b = a^s
    ElementId b_inv = 0;
    for (ElementId x = 0; x < g.order; ++x)
        if (g.mul(b, x) == 0) b_inv = x;
    ElementId conj = g.mul(g.mul(b_inv, a), b);
    ElementId a_s = 0;
    for (long long t = 0; t < fam->s; ++t) a_s = g.mul(a_s, a);
    CHECK(conj == a_s);

    auto hist = order_histogram(cyclic_subgroups(g));
    CHECK(hist[8] == 3);  // q Sylow p-subgroups
    CHECK(hist[2] == 1);  // unique subgroup of order p^i for i < r
    CHECK(hist[4] == 1);
    CHECK(hist[3] == 1);
    CHECK(hist[6] == 1);
    CHECK(hist[12] == 1);

    Group s3 = make_minimal_noncyclic(2, 1, 3);
    CHECK(s3.order == 6);
    bool abelian = true;
    for (ElementId x = 0; x < 6; ++x)
        for (ElementId y = 0; y < 6; ++y)
            if (s3.mul(x, y) != s3.mul(y, x)) abelian = false;
    CHECK_FALSE(abelian);
    CHECK(cyclic_subgroups(s3).size() == 5);

    CHECK(cyclic_subgroups(make_minimal_noncyclic(2, 2, 3)).size() == 7);  // 2r + q

    require_group_axioms(make_minimal_noncyclic(3, 2, 7));
    CHECK_THROWS_AS(make_minimal_noncyclic(2, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_minimal_noncyclic(3, 2, 5), std::invalid_argument);
}

TEST_CASE("minimal non-cyclic subgroup structure for r >= 2") {
    struct Params {
        long long p;
        int r;
        long long q;
    };
    for (Params prm : {Params{2, 2, 3}, {2, 3, 3}, {2, 4, 3}, {2, 2, 5}, {3, 2, 7}}) {
        Group g = make_minimal_noncyclic(prm.p, prm.r, prm.q);
        auto hist = order_histogram(cyclic_subgroups(g));
        long long pi = 1;
        for (int i = 1; i < prm.r; ++i) {
            pi *= prm.p;
            CHECK(hist[pi] == 1);           // unique subgroup of order p^i
            CHECK(hist[pi * prm.q] == 1);   // unique subgroup of order p^i * q
        }
        CHECK(hist[prm.q] == 1);
        CHECK(hist[pi * prm.p] == prm.q);   // q Sylow p-subgroups of order p^r
        long long total = 0;
        for (auto [o, count] : hist) total += count;
        CHECK(total == 2 * prm.r + prm.q);
    }
}

TEST_CASE("from_cayley_table validation") {
    CHECK(from_cayley_table({{0}}).order == 1);

    Group z6 = make_cyclic(6);
    std::vector<std::vector<int>> raw(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) raw[i][j] = z6.mul(i, j);
    Group loaded = from_cayley_table(raw);
    CHECK(loaded.table == z6.table);
    CHECK(loaded.element_orders == z6.element_orders);

    CHECK_THROWS_WITH_AS(from_cayley_table(test_helpers::nonassociative_latin_square5()),
                         "cayley: table is not associative", std::invalid_argument);
    CHECK_THROWS_WITH_AS(from_cayley_table({{0, 1}, {1, 5}}), "cayley: entry out of range [0,n)",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(from_cayley_table({{1, 0}, {0, 1}}), "cayley: index 0 is not an identity",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(from_cayley_table({{0, 1, 2}, {1, 1, 2}, {2, 2, 0}}),
                         "cayley: duplicate entry in a row", std::invalid_argument);
    CHECK_THROWS_AS(from_cayley_table({}), std::invalid_argument);
}

TEST_CASE("cayley table file round trip") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "cyclegraph_klein.tbl";
    Group klein = make_direct_product({make_cyclic(2), make_cyclic(2)});
    {
        std::ofstream out(path);
        out << format_cayley_table(klein);
    }
    Group loaded = load_cayley_table(path.string());
    CHECK(loaded.order == 4);
    CHECK(loaded.table == klein.table);
    CHECK(loaded.family.name() == "Cayley(cyclegraph_klein.tbl)");
    fs::remove(path);

    CHECK_THROWS_AS(load_cayley_table("/nonexistent/file.tbl"), std::runtime_error);
}

TEST_CASE("from_matrix_generators") {
    // Standard generators of SL_2(F_3).
    Group sl23 = from_matrix_generators(3, {Mat2{1, 1, 0, 1}, Mat2{0, -1, 1, 0}});
    CHECK(sl23.order == 24);
    require_group_axioms(sl23);
    auto subs = cyclic_subgroups(sl23);
    // Independent count from element orders: one subgroup per phi(d) generators.
    CHECK(static_cast<long long>(subs.size()) == cyclic_subgroup_count_by_orders(sl23));
    CHECK(subs.size() == 13);
    auto hist = order_histogram(subs);
    CHECK(hist[2] == 1);
    CHECK(hist[3] == 4);
    CHECK(hist[4] == 3);
    CHECK(hist[6] == 4);

    CHECK(from_matrix_generators(2, {Mat2{1, 0, 0, 1}}).order == 1);
    CHECK(from_matrix_generators(3, {Mat2{2, 0, 0, 2}}).order == 2);
    CHECK_THROWS_WITH_AS(from_matrix_generators(4, {Mat2{2, 0, 0, 2}}),
                         "matrix: generator is not invertible mod modulus", std::invalid_argument);
    CHECK_THROWS_WITH_AS(from_matrix_generators(3, {Mat2{1, 1, 0, 1}, Mat2{0, -1, 1, 0}}, 10),
                         "matrix: closure exceeds cap", std::invalid_argument);
}

TEST_CASE("cyclic_subgroups canonical ordering and witnesses") {
    Group g = make_dihedral(6);
    auto subs = cyclic_subgroups(g);
    for (size_t i = 1; i < subs.size(); ++i) {
        bool ordered = subs[i - 1].order < subs[i].order ||
                       (subs[i - 1].order == subs[i].order &&
                        subs[i - 1].elements < subs[i].elements);
        CHECK(ordered);
    }
    for (const auto& h : subs) {
        REQUIRE(h.generator.has_value());
        // Powers of the witness generate exactly the stored element set.
        std::vector<ElementId> powers{0};
        ElementId cur = *h.generator;
        while (cur != 0) {
            powers.push_back(cur);
            cur = g.mul(cur, *h.generator);
        }
        std::sort(powers.begin(), powers.end());
        CHECK(powers == h.elements);
        CHECK(h.order == static_cast<long long>(h.elements.size()));
        CHECK(g.order % h.order == 0);  // Lagrange
    }
}

TEST_CASE("all_subgroups lattice oracle") {
    CHECK(all_subgroups(make_cyclic(12)).size() == 6);
    CHECK(all_subgroups(make_minimal_noncyclic(2, 2, 3)).size() == 8);  // 2r+q+1
    CHECK(all_subgroups(make_dihedral(2)).size() == 5);                 // Klein four
    CHECK(all_subgroups(make_dihedral(6)).size() == 16);
    CHECK(all_subgroups(make_generalized_quaternion(3)).size() == 6);
    CHECK_THROWS_AS(all_subgroups(make_cyclic(201)), std::invalid_argument);

    // Subgroup orders divide the group order and the whole group is present.
    auto subs = all_subgroups(make_dicyclic(5));
    bool has_whole = false;
    for (const auto& h : subs) {
        CHECK(20 % h.order == 0);
        if (h.order == 20) has_whole = true;
    }
    CHECK(has_whole);
}

TEST_CASE("is_nilpotent") {
    CHECK(is_nilpotent(make_cyclic(12)));
    CHECK_FALSE(is_nilpotent(make_dihedral(6)));
    CHECK(is_nilpotent(make_generalized_quaternion(4)));
    CHECK(is_nilpotent(make_dihedral(4)));  // 2-group
    CHECK_FALSE(is_nilpotent(make_minimal_noncyclic(2, 2, 3)));
    CHECK(is_nilpotent(make_direct_product({make_cyclic(6), make_cyclic(2)})));
    CHECK_FALSE(is_nilpotent(from_matrix_generators(3, {Mat2{1, 1, 0, 1}, Mat2{0, -1, 1, 0}})));

    // Cross-check against Sylow counting through the full lattice.
    std::vector<Group> sample;
    sample.push_back(make_cyclic(36));
    sample.push_back(make_dihedral(9));
    sample.push_back(make_dicyclic(3));
    sample.push_back(make_dicyclic(4));
    sample.push_back(make_minimal_noncyclic(2, 1, 3));
    sample.push_back(make_direct_product({make_cyclic(4), make_cyclic(3), make_cyclic(3)}));
    for (const auto& g : sample) {
        bool all_unique = true;
        for (const auto& pp : factorize(g.order).factors)
            if (test_helpers::sylow_count_via_lattice(g, pp.prime) != 1) all_unique = false;
        CHECK(is_nilpotent(g) == all_unique);
    }
}

TEST_CASE("count_subgroups_of_order") {
    CHECK(count_subgroups_of_order(make_dihedral(6), 2) == 7);
    CHECK(count_subgroups_of_order(make_generalized_quaternion(3), 2) == 1);
    CHECK(count_subgroups_of_order(make_minimal_noncyclic(2, 2, 3), 3) == 1);
    CHECK(count_subgroups_of_order(make_cyclic(12), 5) == 0);
}

TEST_CASE("Frobenius congruence across a corpus sample") {
    std::vector<Group> corpus;
    for (long long n : {6, 12, 30, 36, 60}) corpus.push_back(make_cyclic(n));
    for (long long n : {3, 4, 6, 10}) corpus.push_back(make_dihedral(n));
    for (long long n : {2, 3, 5, 6}) corpus.push_back(make_dicyclic(n));
    corpus.push_back(make_minimal_noncyclic(2, 3, 3));
    corpus.push_back(from_matrix_generators(3, {Mat2{1, 1, 0, 1}, Mat2{0, -1, 1, 0}}));
    for (const auto& g : corpus)
        for (const auto& pp : factorize(g.order).factors)
            CHECK(count_subgroups_of_order(g, pp.prime) % pp.prime == 1);
}

TEST_CASE("subgroup_as_group reindexes correctly") {
    Group g = make_dihedral(6);
    for (const auto& h : all_subgroups(g)) {
        Group hg = subgroup_as_group(g, h);
        CHECK(hg.order == h.order);
        require_group_axioms(hg);
        for (size_t i = 0; i < h.elements.size(); ++i)
            CHECK(hg.element_orders[i] == g.element_orders[h.elements[i]]);
    }
}
