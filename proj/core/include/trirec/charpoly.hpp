#pragma once

/// The characteristic polynomial Phi_n(p, q, x) of the n-th powers of u:
/// the monic degree n+1 polynomial with roots sigma^j tau^(n-j), 0 <= j <= n.

#include "trirec/numeric.hpp"
#include "trirec/polynomial.hpp"
#include "trirec/quadfield.hpp"
#include "trirec/sequences.hpp"

#include <string>
#include <vector>

namespace trirec {

/// Ascending coefficients over a single quadratic field.
class QuadPoly {
public:
    explicit QuadPoly(std::vector<QuadExt> coefficients);

    /// prod (x - root).
    static QuadPoly from_roots(const std::vector<QuadExt>& roots, const QuadContext& context);

    const std::vector<QuadExt>& coefficients() const { return c_; }
    QuadExt evaluate(const QuadExt& x) const;
    /// IrrationalValue if any coefficient has a sqrt(d) part.
    RationalPoly to_rational() const;

private:
    std::vector<QuadExt> c_;
};

/// sigma^j tau^(n-j) for j = 0..n.
std::vector<QuadExt> phi_roots(const RecurrenceParams& params, long n);

/// Definition: expand prod_{j=0..n} (x - sigma^j tau^(n-j)).
RationalPoly phi_product(const RecurrenceParams& params, long n);

/// Coefficient of x^(n+1-i) is (-1)^i q^(i(i-1)/2) ((n+1)|i)_u, 0 <= i <= n+1.
RationalPoly phi_coeff_formula(const RecurrenceParams& params, long n);

/// f_n(x) = x^2 - w_n x + q^n, n >= 1.
RationalPoly quadratic_factor(const RecurrenceParams& params, long n);

struct FibonacciFactorization {
    RationalPoly phi;        // Phi_n(1, -1, x)
    RationalPoly quadratic;  // x^2 - L_n x + (-1)^n
    RationalPoly tail;       // Phi_{n-2}(1, -1, -x)
    int sign;                // the one making phi == sign * quadratic * tail
};

/// Does Phi_n(1,-1,x) == sign * (x^2 - L_n x + (-1)^n) * Phi_{n-2}(1,-1,-x)?
bool fibonacci_factorization_holds(long n, int sign);

/// Determines the sign by exact comparison; ConsistencyError if neither
/// sign works. DomainError for n < 2.
FibonacciFactorization fibonacci_factorization(long n);

enum class GaloisVariant { Z2, Trivial, Degenerate };

std::string to_string(GaloisVariant variant);

struct GaloisClassification {
    GaloisVariant variant;
    Integer d;  // radicand of the splitting field; 1 unless Z2
};

GaloisClassification classify_galois(const RecurrenceParams& params);

RationalPoly poly_mul(const RationalPoly& lhs, const RationalPoly& rhs);
RationalPoly poly_divexact(const RationalPoly& num, const RationalPoly& den);
RationalPoly poly_compose_negate(const RationalPoly& poly);

}  // namespace trirec
