#pragma once

/// Exact arithmetic in Q(sqrt d) for a squarefree integer d.
///
/// Each element carries its radicand and every binary operation checks that
/// the radicands agree. d = 1 is the rational case: b is folded into a so an
/// element over d = 1 always has b = 0. d < 0 is handled formally; nothing
/// here embeds into the reals.

#include "trirec/numeric.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace trirec {

struct RecurrenceParams;

class QuadContext {
public:
    /// Throws DomainError unless d is nonzero and |d| squarefree.
    explicit QuadContext(Integer d);

    static QuadContext rational() { return QuadContext(Integer(1)); }

    const Integer& d() const { return d_; }
    bool is_rational_field() const { return d_ == 1; }

    friend bool operator==(const QuadContext&, const QuadContext&) = default;

private:
    Integer d_;
};

/// a + b*sqrt(d).
class QuadExt {
public:
    QuadExt(Rational a, Rational b, QuadContext context);
    /// Embeds a rational into the given field.
    QuadExt(Rational a, QuadContext context);

    static QuadExt zero(const QuadContext& context) { return QuadExt(Rational(0), context); }
    static QuadExt one(const QuadContext& context) { return QuadExt(Rational(1), context); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const QuadContext& context() const { return context_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadExt conjugate() const;
    Rational norm() const;
    Rational trace() const;
    /// Throws DegenerateError for zero.
    QuadExt inverse() const;
    std::optional<Rational> as_rational() const;

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& rhs);
    QuadExt& operator-=(const QuadExt& rhs);
    QuadExt& operator*=(const QuadExt& rhs);
    QuadExt& operator*=(const Rational& rhs);

    friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
    friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
    friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
    friend QuadExt operator*(QuadExt lhs, const Rational& rhs) { return lhs *= rhs; }
    friend QuadExt operator*(const Rational& lhs, QuadExt rhs) { return rhs *= lhs; }
    friend QuadExt operator/(const QuadExt& lhs, const QuadExt& rhs) { return lhs * rhs.inverse(); }

    /// Componentwise; throws ContextMismatch for different radicands.
    friend bool operator==(const QuadExt& lhs, const QuadExt& rhs);

    std::string to_string() const;

private:
    void require_same_context(const QuadExt& other) const;
    void normalize();

    Rational a_;
    Rational b_;
    QuadContext context_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

QuadExt conjugate(const QuadExt& x);
Rational norm(const QuadExt& x);
Rational trace(const QuadExt& x);
QuadExt inv(const QuadExt& x);
/// Square-and-multiply; pow(x, 0) is one.
QuadExt pow(const QuadExt& x, std::uint64_t exponent);
std::optional<Rational> is_rational(const QuadExt& x);

struct RootPair {
    QuadExt sigma;  // p/2 + (s/2) sqrt(d)
    QuadExt tau;    // p/2 - (s/2) sqrt(d)
};

/// Roots of x^2 - p x + q in Q(sqrt d), d the squarefree part of p^2 - 4q
/// (d = 1 when the discriminant is zero or a rational square).
RootPair make_roots(const RecurrenceParams& params);

}  // namespace trirec
