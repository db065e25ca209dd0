#include "trirec/binomials.hpp"

#include "trirec/errors.hpp"

#include <map>
#include <string>

namespace trirec {
namespace {

void require_range(long top, long k, const char* what) {
    if (top < 0 || k < 0 || k > top) {
        throw DomainError(std::string(what) + ": need 0 <= k <= " + std::to_string(top) +
                          ", got k=" + std::to_string(k));
    }
}

UniPoly z_power_minus_one(long n) {
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
    c.front() = -1;
    c.back() = 1;
    return UniPoly(std::move(c));
}

}  // namespace

HomogeneousBiPoly::HomogeneousBiPoly(std::size_t total_degree, std::vector<Integer> coefficients)
    : total_degree_(total_degree), c_(std::move(coefficients)) {
    if (c_.size() != total_degree_ + 1) {
        throw DomainError("homogeneous polynomial of degree " + std::to_string(total_degree_) +
                          " needs " + std::to_string(total_degree_ + 1) + " coefficients");
    }
}

Integer HomogeneousBiPoly::sum_of_coefficients() const {
    Integer sum(0);
    for (const auto& v : c_) sum += v;
    return sum;
}

Rational HomogeneousBiPoly::evaluate(const Rational& x, const Rational& y) const {
    return evaluate<Rational>(x, y, Rational(1));
}

HomogeneousBiPoly operator*(const HomogeneousBiPoly& lhs, const HomogeneousBiPoly& rhs) {
    std::vector<Integer> out(lhs.c_.size() + rhs.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return HomogeneousBiPoly(lhs.total_degree_ + rhs.total_degree_, std::move(out));
}

UniPoly gaussian_binomial(long m, long k) {
    require_range(m, k, "gaussian_binomial");
    const auto kk = static_cast<std::size_t>(k);
    std::vector<UniPoly> row(kk + 1);
    row[0] = UniPoly::constant(Integer(1));
    for (long n = 1; n <= m; ++n) {
        const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(n), kk);
        for (std::size_t j = top; j >= 1; --j) {
            row[j] = row[j - 1] + UniPoly::monomial(Integer(1), j) * row[j];
        }
    }
    return row[kk];
}

UniPoly cyclotomic_poly(long n) {
    if (n < 1) throw DomainError("cyclotomic_poly needs n >= 1, got " + std::to_string(n));
    std::map<long, UniPoly> known;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        UniPoly value = z_power_minus_one(d);
        for (const auto& [e, phi] : known) {
            if (d % e == 0) value = divexact(value, phi);
        }
        known.emplace(d, std::move(value));
    }
    return known.at(n);
}

std::vector<CyclotomicFactor> gaussian_cyclotomic_factorization(long m, long k) {
    require_range(m, k, "gaussian_cyclotomic_factorization");
    std::vector<CyclotomicFactor> out;
    for (long d = 2; d <= m; ++d) {
        const long e = m / d - k / d - (m - k) / d;
        if (e != 0) out.push_back({d, e});
    }
    return out;
}

UniPoly expand_cyclotomic_product(const std::vector<CyclotomicFactor>& factors) {
    UniPoly product = UniPoly::constant(Integer(1));
    for (const auto& f : factors) {
        const UniPoly phi = cyclotomic_poly(f.d);
        for (long i = 0; i < f.exponent; ++i) product *= phi;
    }
    return product;
}

HomogeneousBiPoly bivariate_F(long r, long k) {
    require_range(r, k, "bivariate_F");
    const UniPoly gauss = gaussian_binomial(r, k);
    const auto t = static_cast<std::size_t>(k * (r - k));
    std::vector<Integer> c(t + 1, Integer(0));
    for (std::size_t i = 0; i <= t; ++i) c[i] = gauss.coefficient(t - i);
    return HomogeneousBiPoly(t, std::move(c));
}

HomogeneousBiPoly bivariate_f(long i) {
    if (i < 1) throw DomainError("f_i needs i >= 1");
    const auto t = static_cast<std::size_t>(i - 1);
    return HomogeneousBiPoly(t, std::vector<Integer>(t + 1, Integer(1)));
}

Rational generalized_binomial(const RecurrenceParams& params, long r, long k) {
    require_range(r, k, "generalized_binomial");
    const HomogeneousBiPoly F = bivariate_F(r, k);
    const RootPair roots = make_roots(params);
    const QuadExt value = F.evaluate(roots.sigma, roots.tau, QuadExt::one(roots.sigma.context()));
    if (auto rational = value.as_rational()) return *rational;
    throw IrrationalValue("(" + std::to_string(r) + "|" + std::to_string(k) +
                          ")_u evaluated to irrational " + value.to_string());
}

std::optional<Rational> generalized_binomial_quotient(SequenceTable& table, long r, long k) {
    require_range(r, k, "generalized_binomial_quotient");
    Rational num(1);
    Rational den(1);
    for (long j = 1; j <= k; ++j) {
        const Rational& uj = table.u(static_cast<std::size_t>(j));
        if (uj == 0) return std::nullopt;
        den *= uj;
        num *= table.u(static_cast<std::size_t>(r - j + 1));
    }
    return Rational(num / den);
}

std::optional<Rational> generalized_binomial_quotient(const RecurrenceParams& params, long r,
                                                      long k) {
    SequenceTable table(params);
    return generalized_binomial_quotient(table, r, k);
}

}  // namespace trirec
