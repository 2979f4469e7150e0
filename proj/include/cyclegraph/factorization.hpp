#pragma once

#include <vector>

namespace cyclegraph {

/// One (prime, exponent) term of a prime-power decomposition.
struct PrimePower {
    long long prime = 0;
    int exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

/// Ordered prime factorization of a positive integer.
/// Primes strictly increasing, exponents >= 1; the empty list is 1.
struct Factorization {
    std::vector<PrimePower> factors;

    long long value() const;
    int prime_count() const { return static_cast<int>(factors.size()); }
    int exponent_sum() const;
    long long divisor_count() const;
    bool square_free() const;
    int exponent_of(long long p) const;
    bool operator==(const Factorization&) const = default;
};

/// Trial-division factorization. Rejects n < 1.
Factorization factorize(long long n);

bool is_prime(long long n);

}  // namespace cyclegraph
