#pragma once

/// Gaussian binomials, cyclotomic polynomials, the homogeneous polynomial
/// F(r, k, x, y) and the generalized binomial coefficient (r|k)_u.
///
/// Convention: gaussian_binomial(m, k) is the polynomial with top m and
/// bottom k,
///   prod_{i=m-k+1..m} (1 - z^i) / prod_{i=1..k} (1 - z^i).

#include "trirec/numeric.hpp"
#include "trirec/polynomial.hpp"
#include "trirec/quadfield.hpp"
#include "trirec/sequences.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace trirec {

/// Homogeneous polynomial of total degree t; coefficient i multiplies
/// x^(t-i) y^i.
class HomogeneousBiPoly {
public:
    HomogeneousBiPoly(std::size_t total_degree, std::vector<Integer> coefficients);

    std::size_t total_degree() const { return total_degree_; }
    const std::vector<Integer>& coefficients() const { return c_; }

    /// Value at (x, y) = (1, 1).
    Integer sum_of_coefficients() const;

    template <typename V>
    V evaluate(const V& x, const V& y, const V& one) const;

    Rational evaluate(const Rational& x, const Rational& y) const;

    friend HomogeneousBiPoly operator*(const HomogeneousBiPoly& lhs, const HomogeneousBiPoly& rhs);
    friend bool operator==(const HomogeneousBiPoly&, const HomogeneousBiPoly&) = default;

private:
    std::size_t total_degree_;
    std::vector<Integer> c_;
};

template <typename V>
V HomogeneousBiPoly::evaluate(const V& x, const V& y, const V& one) const {
    std::vector<V> x_pows{one};
    std::vector<V> y_pows{one};
    for (std::size_t i = 0; i < total_degree_; ++i) {
        x_pows.push_back(x_pows.back() * x);
        y_pows.push_back(y_pows.back() * y);
    }
    V acc = one * Rational(0);
    for (std::size_t i = 0; i <= total_degree_; ++i) {
        if (c_[i] == 0) continue;
        acc = acc + x_pows[total_degree_ - i] * y_pows[i] * Rational(c_[i]);
    }
    return acc;
}

/// q-Pascal: B(m,k) = B(m-1,k-1) + z^k B(m-1,k). DomainError unless
/// 0 <= k <= m.
UniPoly gaussian_binomial(long m, long k);

/// Phi_n(z) = (z^n - 1) / prod_{d | n, d < n} Phi_d(z). DomainError for n < 1.
UniPoly cyclotomic_poly(long n);

struct CyclotomicFactor {
    long d;
    long exponent;

    friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

/// Exponents e_d = floor(m/d) - floor(k/d) - floor((m-k)/d) for 2 <= d <= m;
/// only the nonzero ones are listed, in increasing d.
std::vector<CyclotomicFactor> gaussian_cyclotomic_factorization(long m, long k);

/// prod Phi_d^(e_d).
UniPoly expand_cyclotomic_product(const std::vector<CyclotomicFactor>& factors);

/// y^(k(r-k)) * gaussian_binomial(r, k)(x / y).
HomogeneousBiPoly bivariate_F(long r, long k);

/// f_i(x, y) = (x^i - y^i)/(x - y) = sum x^(i-1-j) y^j, i >= 1.
HomogeneousBiPoly bivariate_f(long i);

/// (r|k)_u = F(r, k, sigma, tau). Throws IrrationalValue if the evaluation
/// is not Galois-fixed, DomainError unless 0 <= k <= r.
Rational generalized_binomial(const RecurrenceParams& params, long r, long k);

/// u_r ... u_{r-k+1} / (u_k ... u_1), or nullopt if some u_i = 0, i <= k.
std::optional<Rational> generalized_binomial_quotient(SequenceTable& table, long r, long k);
std::optional<Rational> generalized_binomial_quotient(const RecurrenceParams& params, long r,
                                                      long k);

}  // namespace trirec
