#include "cyclegraph/factorization.hpp"

#include <stdexcept>

namespace cyclegraph {

long long Factorization::value() const {
    long long v = 1;
    for (const auto& [p, a] : factors)
        for (int i = 0; i < a; ++i) v *= p;
    return v;
}

int Factorization::exponent_sum() const {
    int s = 0;
    for (const auto& f : factors) s += f.exponent;
    return s;
}

long long Factorization::divisor_count() const {
    long long t = 1;
    for (const auto& f : factors) t *= f.exponent + 1;
    return t;
}

bool Factorization::square_free() const {
    for (const auto& f : factors)
        if (f.exponent > 1) return false;
    return true;
}

int Factorization::exponent_of(long long p) const {
    for (const auto& f : factors)
        if (f.prime == p) return f.exponent;
    return 0;
}

Factorization factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int a = 0;
        while (n % p == 0) {
            n /= p;
            ++a;
        }
        out.factors.push_back({p, a});
    }
    if (n > 1) out.factors.push_back({n, 1});
    return out;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace cyclegraph
