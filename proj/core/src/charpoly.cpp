#include "trirec/charpoly.hpp"

#include "trirec/binomials.hpp"
#include "trirec/errors.hpp"

namespace trirec {
namespace {

void require_nonnegative(long n, const char* what) {
    if (n < 0) throw DomainError(std::string(what) + " needs n >= 0, got " + std::to_string(n));
}

}  // namespace

QuadPoly::QuadPoly(std::vector<QuadExt> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw DomainError("QuadPoly needs at least one coefficient");
    for (const auto& v : c_) {
        if (!(v.context() == c_.front().context())) {
            throw ContextMismatch("QuadPoly coefficients from different fields");
        }
    }
}

QuadPoly QuadPoly::from_roots(const std::vector<QuadExt>& roots, const QuadContext& context) {
    std::vector<QuadExt> c{QuadExt::one(context)};
    c.reserve(roots.size() + 1);
    for (const auto& root : roots) {
        // (c_0 + c_1 x + ...)(x - root)
        c.push_back(QuadExt::zero(context));
        for (std::size_t i = c.size() - 1; i >= 1; --i) c[i] = c[i - 1] - root * c[i];
        c[0] = -(root * c[0]);
    }
    return QuadPoly(std::move(c));
}

QuadExt QuadPoly::evaluate(const QuadExt& x) const {
    QuadExt acc = QuadExt::zero(x.context());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPoly QuadPoly::to_rational() const {
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        auto value = c_[i].as_rational();
        if (!value) {
            throw IrrationalValue("coefficient of x^" + std::to_string(i) + " is irrational: " +
                                  c_[i].to_string());
        }
        out.push_back(std::move(*value));
    }
    return RationalPoly(std::move(out));
}

std::vector<QuadExt> phi_roots(const RecurrenceParams& params, long n) {
    require_nonnegative(n, "phi_roots");
    const RootPair roots = make_roots(params);
    const auto count = static_cast<std::size_t>(n) + 1;
    // sigma^j for j = 0..n and tau^(n-j) read backwards
    std::vector<QuadExt> sigma_pows{QuadExt::one(roots.sigma.context())};
    std::vector<QuadExt> tau_pows{QuadExt::one(roots.tau.context())};
    for (std::size_t j = 1; j < count; ++j) {
        sigma_pows.push_back(sigma_pows.back() * roots.sigma);
        tau_pows.push_back(tau_pows.back() * roots.tau);
    }
    std::vector<QuadExt> out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) out.push_back(sigma_pows[j] * tau_pows[count - 1 - j]);
    return out;
}

RationalPoly phi_product(const RecurrenceParams& params, long n) {
    require_nonnegative(n, "phi_product");
    const std::vector<QuadExt> roots = phi_roots(params, n);
    return QuadPoly::from_roots(roots, roots.front().context()).to_rational();
}

RationalPoly phi_coeff_formula(const RecurrenceParams& params, long n) {
    require_nonnegative(n, "phi_coeff_formula");
    const long degree = n + 1;
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
    for (long i = 0; i <= degree; ++i) {
        Rational term = pow(params.q, static_cast<std::uint64_t>(i * (i - 1) / 2)) *
                        generalized_binomial(params, degree, i);
        if (i % 2 == 1) term = -term;
        c[static_cast<std::size_t>(degree - i)] = std::move(term);
    }
    return RationalPoly(std::move(c));
}

RationalPoly quadratic_factor(const RecurrenceParams& params, long n) {
    if (n < 1) throw DomainError("quadratic_factor needs n >= 1, got " + std::to_string(n));
    const auto pair = fast_pair(params, static_cast<std::uint64_t>(n));
    return RationalPoly{pow(params.q, static_cast<std::uint64_t>(n)), Rational(-pair.w),
                        Rational(1)};
}

bool fibonacci_factorization_holds(long n, int sign) {
    if (n < 2) throw DomainError("fibonacci factorization needs n >= 2");
    const auto fib = RecurrenceParams::fibonacci();
    const RationalPoly phi = phi_product(fib, n);
    const RationalPoly rhs = quadratic_factor(fib, n) * phi_product(fib, n - 2).compose_negate();
    return phi == rhs * Rational(sign);
}

FibonacciFactorization fibonacci_factorization(long n) {
    if (n < 2) throw DomainError("fibonacci factorization needs n >= 2, got " + std::to_string(n));
    const auto fib = RecurrenceParams::fibonacci();
    FibonacciFactorization out{phi_product(fib, n), quadratic_factor(fib, n),
                               phi_product(fib, n - 2).compose_negate(), 0};
    const RationalPoly product = out.quadratic * out.tail;
    const bool plus = out.phi == product;
    const bool minus = out.phi == -product;
    if (plus == minus) {
        throw ConsistencyError("no unique sign factors Phi_" + std::to_string(n) + "(1,-1,x)");
    }
    out.sign = plus ? 1 : -1;
    return out;
}

std::string to_string(GaloisVariant variant) {
    switch (variant) {
        case GaloisVariant::Z2: return "Z2";
        case GaloisVariant::Trivial: return "Trivial";
        case GaloisVariant::Degenerate: return "Degenerate";
    }
    return "unknown";
}

GaloisClassification classify_galois(const RecurrenceParams& params) {
    const Rational disc = params.discriminant();
    if (disc == 0) return {GaloisVariant::Degenerate, Integer(1)};
    if (is_rational_square(disc)) return {GaloisVariant::Trivial, Integer(1)};
    return {GaloisVariant::Z2, squarefree_decompose(disc).d};
}

RationalPoly poly_mul(const RationalPoly& lhs, const RationalPoly& rhs) { return lhs * rhs; }

RationalPoly poly_divexact(const RationalPoly& num, const RationalPoly& den) {
    return divexact(num, den);
}

RationalPoly poly_compose_negate(const RationalPoly& poly) { return poly.compose_negate(); }

}  // namespace trirec
