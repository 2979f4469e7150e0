#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclegraph/factorization.hpp"

namespace cyclegraph {

/// Index into a group's multiplication table. Index 0 is always the identity.
using ElementId = int;

/// 2x2 integer matrix, row-major.
using Mat2 = std::array<long long, 4>;

struct FamilyDescriptor;

namespace family {

struct Cyclic {
    long long n;
};
struct Dihedral {
    long long n;  // group order 2n
};
struct GeneralizedQuaternion {
    int n;  // group order 2^n, n >= 3
};
struct Dicyclic {
    long long n;  // group order 4n, n >= 2
};
struct DirectProduct {
    std::vector<FamilyDescriptor> parts;
};
struct MinimalNonCyclic {
    long long p;
    int r;
    long long q;
    long long s;  // conjugation exponent: b^-1 a b = a^s
};
struct MatrixGroup {
    long long modulus;
    std::vector<Mat2> generators;
};
struct Opaque {
    std::string label;  // e.g. the Cayley-table source
};

}  // namespace family

/// Tagged union identifying how a group was built. Closed-form predictions
/// dispatch on this; Opaque groups get only table-derived checks.
struct FamilyDescriptor {
    std::variant<family::Cyclic, family::Dihedral, family::GeneralizedQuaternion,
                 family::Dicyclic, family::DirectProduct, family::MinimalNonCyclic,
                 family::MatrixGroup, family::Opaque>
        value;

    template <class T>
    const T* as() const {
        return std::get_if<T>(&value);
    }

    /// Short display name, e.g. "Z_12", "D_12", "Q_16", "Dic_3".
    std::string name() const;
};

/// Cyclic-or-not subgroup, stored as its strictly sorted element-id set.
/// Always contains the identity (id 0). `generator` is present when the
/// subgroup is known to be cyclic.
struct Subgroup {
    std::vector<ElementId> elements;
    long long order = 0;
    std::optional<ElementId> generator;
};

inline bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }

/// Finite group as an identity-rooted multiplication table.
/// Immutable after construction; all operations are pure reads.
struct Group {
    long long order = 1;
    std::vector<int> table;  // row-major: table[g*order + h] = g*h
    std::vector<long long> element_orders;
    FamilyDescriptor family{family::Opaque{}};

    ElementId mul(ElementId a, ElementId b) const {
        return table[static_cast<size_t>(a) * order + b];
    }
};

// ---- builders ----

Group make_cyclic(long long n);
Group make_dihedral(long long n);
Group make_generalized_quaternion(int n);
Group make_dicyclic(long long n);
Group make_direct_product(const std::vector<Group>& parts);

/// Smallest s >= 2 with s^p = 1 (mod q) and s != 1 (mod q).
/// Exists exactly when p divides q-1.
long long find_conjugation_exponent(long long p, long long q);

/// <a,b | a^q = b^{p^r} = 1, b^-1 a b = a^s> of order p^r * q,
/// with s = find_conjugation_exponent(p, q).
Group make_minimal_noncyclic(long long p, int r, long long q);

/// Validates a raw table (range, identity at 0, Latin square, inverses,
/// full associativity) and wraps it as an Opaque group.
Group from_cayley_table(const std::vector<std::vector<int>>& raw);

/// Breadth-first closure of 2x2 matrices mod `modulus`. Identity gets id 0.
Group from_matrix_generators(long long modulus, const std::vector<Mat2>& gens,
                             int closure_cap = 5000);

// ---- Cayley-table text format: line 1 = n, then n rows of n ids ----

Group load_cayley_table(const std::string& path);
std::string format_cayley_table(const Group& g);

// ---- queries ----

long long element_order(const Group& g, ElementId x);

/// Sorted elements of <gens>: breadth-first closure under right multiplication.
std::vector<ElementId> closure_from_generators(const Group& g,
                                               const std::vector<ElementId>& gens);

/// All cyclic subgroups, sorted by (order, lexicographic element list).
/// Each carries the smallest generator found.
std::vector<Subgroup> cyclic_subgroups(const Group& g);

/// Full subgroup lattice via join closure of the cyclic subgroups.
/// Desk-scale oracle: rejects |G| > 200.
std::vector<Subgroup> all_subgroups(const Group& g);

inline constexpr long long kAllSubgroupsCap = 200;

/// True iff every Sylow subgroup is normal. Decided by counting p-elements:
/// the p-elements are the union of the Sylow p-subgroups, so their count
/// equals the full p-part of |G| exactly when the Sylow p-subgroup is unique.
bool is_nilpotent(const Group& g);

/// Number of cyclic subgroups of order m. For prime m this is the total
/// number of subgroups of that order, since groups of prime order are cyclic.
long long count_subgroups_of_order(const Group& g, long long m);

/// Re-index a subgroup as a standalone Group (family Opaque).
Group subgroup_as_group(const Group& g, const Subgroup& h);

/// Smallest element whose powers cover all of h, if the subgroup is cyclic.
std::optional<ElementId> cyclic_generator(const Group& g, const Subgroup& h);

}  // namespace cyclegraph
