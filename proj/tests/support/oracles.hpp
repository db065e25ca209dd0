#pragma once

// Brute-force reference computations used only by tests. Nothing here calls
// into the code paths it is used to check.

#include "trirec/binomials.hpp"
#include "trirec/numeric.hpp"
#include "trirec/polynomial.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace trirec::oracle {

/// Full trial-division factorization of |n| > 0 into (prime, exponent).
inline std::vector<std::pair<long, int>> factor(long n) {
    std::vector<std::pair<long, int>> out;
    n = n < 0 ? -n : n;
    for (long prime = 2; prime * prime <= n; ++prime) {
        int e = 0;
        while (n % prime == 0) {
            n /= prime;
            ++e;
        }
        if (e > 0) out.emplace_back(prime, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_squarefree(long n) {
    for (const auto& [prime, e] : factor(n)) {
        if (e > 1) return false;
    }
    return true;
}

/// prod_{i=m-k+1..m} (1 - z^i) / prod_{i=1..k} (1 - z^i) by long division.
inline UniPoly gaussian_quotient(long m, long k) {
    auto one_minus = [](long i) {
        std::vector<Integer> c(static_cast<std::size_t>(i) + 1, Integer(0));
        c.front() = 1;
        c.back() = -1;
        return UniPoly(std::move(c));
    };
    UniPoly num = UniPoly::constant(Integer(1));
    UniPoly den = UniPoly::constant(Integer(1));
    for (long i = m - k + 1; i <= m; ++i) num *= one_minus(i);
    for (long i = 1; i <= k; ++i) den *= one_minus(i);
    return divexact(num, den);
}

/// Homogeneous long division of bivariate polynomials (coefficient i on
/// x^(t-i) y^i), exact or throws.
inline HomogeneousBiPoly homogeneous_divexact(const HomogeneousBiPoly& num,
                                              const HomogeneousBiPoly& den) {
    const std::size_t t = num.total_degree() - den.total_degree();
    std::vector<Integer> rem = num.coefficients();
    std::vector<Integer> quot(t + 1, Integer(0));
    const auto& d = den.coefficients();
    for (std::size_t i = 0; i <= t; ++i) {
        if (rem[i] == 0) continue;
        if (rem[i] % d[0] != 0) throw InexactDivision("oracle: non-integral quotient");
        quot[i] = rem[i] / d[0];
        for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= quot[i] * d[j];
    }
    for (const auto& v : rem) {
        if (v != 0) throw InexactDivision("oracle: nonzero remainder");
    }
    return HomogeneousBiPoly(t, std::move(quot));
}

/// F(r,k,x,y) as the quotient prod f_{r-j} / prod f_j of
/// f_i = x^(i-1) + x^(i-2) y + ... + y^(i-1).
inline HomogeneousBiPoly bivariate_F_by_quotient(long r, long k) {
    auto f = [](long i) {
        return HomogeneousBiPoly(static_cast<std::size_t>(i - 1),
                                 std::vector<Integer>(static_cast<std::size_t>(i), Integer(1)));
    };
    HomogeneousBiPoly num(0, {Integer(1)});
    HomogeneousBiPoly den(0, {Integer(1)});
    for (long j = 0; j < k; ++j) num = num * f(r - j);
    for (long j = 1; j <= k; ++j) den = den * f(j);
    return homogeneous_divexact(num, den);
}

inline Integer binomial(long n, long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

inline Rational random_rational(std::mt19937_64& rng, long magnitude = 50, long max_den = 12) {
    std::uniform_int_distribution<long> num(-magnitude, magnitude);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

}  // namespace trirec::oracle
