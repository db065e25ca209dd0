#pragma once

/// Dense univariate polynomials over Integer or Rational.
///
/// Coefficients are stored in ascending degree and kept canonical: no
/// trailing zero, and the zero polynomial is the empty list.

#include "trirec/errors.hpp"
#include "trirec/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace trirec {

namespace detail {

inline std::optional<Integer> exact_quotient(const Integer& a, const Integer& b) {
    if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::optional<Rational> exact_quotient(const Rational& a, const Rational& b) {
    return Rational(a / b);
}

}  // namespace detail

template <typename T>
class Poly {
public:
    using value_type = T;

    Poly() = default;
    explicit Poly(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
    Poly(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }

    static Poly constant(T value) { return Poly(std::vector<T>{std::move(value)}); }

    static Poly monomial(T coefficient, std::size_t degree) {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = std::move(coefficient);
        return Poly(std::move(c));
    }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coefficients() const { return c_; }

    T coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator-() const {
        Poly out = *this;
        for (auto& v : out.c_) v = -v;
        return out;
    }

    Poly& operator+=(const Poly& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), T(0));
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), T(0));
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
        trim();
        return *this;
    }

    Poly& operator*=(const T& scalar) {
        for (auto& v : c_) v *= scalar;
        trim();
        return *this;
    }

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(Poly lhs, const T& rhs) { return lhs *= rhs; }
    friend Poly operator*(const T& lhs, Poly rhs) { return rhs *= lhs; }

    friend Poly operator*(const Poly& lhs, const Poly& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) return Poly();
        std::vector<T> out(lhs.c_.size() + rhs.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
            if (lhs.c_[i] == 0) continue;
            for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
        }
        return Poly(std::move(out));
    }

    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

    friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.c_ == rhs.c_; }

    /// p(-x): flips the sign of odd-degree coefficients.
    Poly compose_negate() const {
        Poly out = *this;
        for (std::size_t i = 1; i < out.c_.size(); i += 2) out.c_[i] = -out.c_[i];
        return out;
    }

    /// Horner evaluation in any ring V that accepts V * T and V + T.
    template <typename V>
    V evaluate(const V& x, V zero) const {
        V acc = std::move(zero);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + lift(*it, x);
        return acc;
    }

    T evaluate(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    std::string to_string(char var = 'x') const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const T& v = c_[k];
            if (v == 0) continue;
            const bool negative = v < 0;
            const T mag = negative ? T(-v) : v;
            if (first) os << (negative ? "-" : "");
            else os << (negative ? " - " : " + ");
            first = false;
            if (k == 0 || mag != 1) os << mag.get_str();
            if (k >= 1) os << var;
            if (k >= 2) os << '^' << k;
        }
        return os.str();
    }

private:
    template <typename V>
    static V lift(const T& coefficient, const V& like) {
        return V(Rational(coefficient), like.context());
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

template <typename T>
struct PolyDivision {
    Poly<T> quotient;
    Poly<T> remainder;
};

/// Long division. Over Integer every step must divide the leading
/// coefficient exactly, else InexactDivision.
template <typename T>
PolyDivision<T> divmod(const Poly<T>& num, const Poly<T>& den) {
    if (den.is_zero()) throw DegenerateError("polynomial division by zero");
    std::vector<T> rem = num.coefficients();
    const std::size_t dsize = den.coefficients().size();
    if (rem.size() < dsize) return {Poly<T>(), num};
    std::vector<T> quot(rem.size() - dsize + 1, T(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        const T& top = rem[k + dsize - 1];
        if (top == 0) continue;
        auto factor = detail::exact_quotient(top, den.leading());
        if (!factor) throw InexactDivision("leading coefficient does not divide over the integers");
        for (std::size_t j = 0; j < dsize; ++j) rem[k + j] -= *factor * den.coefficients()[j];
        quot[k] = std::move(*factor);
    }
    return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

/// num / den, throwing InexactDivision on a nonzero remainder.
template <typename T>
Poly<T> divexact(const Poly<T>& num, const Poly<T>& den) {
    auto [quotient, remainder] = divmod(num, den);
    if (!remainder.is_zero()) {
        throw InexactDivision("(" + num.to_string() + ") is not divisible by (" + den.to_string() +
                              ")");
    }
    return quotient;
}

using UniPoly = Poly<Integer>;
using RationalPoly = Poly<Rational>;

inline RationalPoly to_rational(const UniPoly& poly) {
    std::vector<Rational> c;
    c.reserve(poly.coefficients().size());
    for (const auto& v : poly.coefficients()) c.emplace_back(v);
    return RationalPoly(std::move(c));
}

}  // namespace trirec
