#include "trirec/quadfield.hpp"

#include "trirec/errors.hpp"
#include "trirec/sequences.hpp"

#include <sstream>

namespace trirec {

QuadContext::QuadContext(Integer d) : d_(std::move(d)) {
    if (d_ == 0) throw DomainError("quadratic field radicand must be nonzero");
    if (squarefree_decompose(Rational(d_)).d != d_) {
        throw DomainError("quadratic field radicand " + d_.get_str() + " is not squarefree");
    }
}

QuadExt::QuadExt(Rational a, Rational b, QuadContext context)
    : a_(std::move(a)), b_(std::move(b)), context_(std::move(context)) {
    normalize();
}

QuadExt::QuadExt(Rational a, QuadContext context)
    : a_(std::move(a)), b_(0), context_(std::move(context)) {}

void QuadExt::normalize() {
    if (context_.is_rational_field() && b_ != 0) {
        a_ += b_;
        b_ = 0;
    }
}

void QuadExt::require_same_context(const QuadExt& other) const {
    if (!(context_ == other.context_)) {
        throw ContextMismatch("Q(sqrt " + context_.d().get_str() + ") vs Q(sqrt " +
                              other.context_.d().get_str() + ")");
    }
}

QuadExt QuadExt::conjugate() const { return QuadExt(a_, -b_, context_); }

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * context_.d(); }

Rational QuadExt::trace() const { return 2 * a_; }

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw DegenerateError("inverse of zero in quadratic field");
    const Rational n = norm();
    return QuadExt(a_ / n, -b_ / n, context_);
}

std::optional<Rational> QuadExt::as_rational() const {
    if (b_ == 0) return a_;
    return std::nullopt;
}

QuadExt QuadExt::operator-() const { return QuadExt(-a_, -b_, context_); }

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
    require_same_context(rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
    require_same_context(rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
    require_same_context(rhs);
    // (a + b r)(a' + b' r) = (aa' + bb'd) + (ab' + a'b) r
    Rational a = a_ * rhs.a_ + b_ * rhs.b_ * context_.d();
    Rational b = a_ * rhs.b_ + rhs.a_ * b_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadExt& QuadExt::operator*=(const Rational& rhs) {
    a_ *= rhs;
    b_ *= rhs;
    return *this;
}

bool operator==(const QuadExt& lhs, const QuadExt& rhs) {
    lhs.require_same_context(rhs);
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
}

std::string QuadExt::to_string() const {
    if (b_ == 0) return a_.get_str();
    std::ostringstream os;
    if (a_ != 0) os << a_.get_str() << (sgn(b_) < 0 ? " - " : " + ");
    else if (sgn(b_) < 0) os << "-";
    os << Rational(abs(b_)).get_str() << "*sqrt(" << context_.d().get_str() << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

QuadExt conjugate(const QuadExt& x) { return x.conjugate(); }
Rational norm(const QuadExt& x) { return x.norm(); }
Rational trace(const QuadExt& x) { return x.trace(); }
QuadExt inv(const QuadExt& x) { return x.inverse(); }
std::optional<Rational> is_rational(const QuadExt& x) { return x.as_rational(); }

QuadExt pow(const QuadExt& x, std::uint64_t exponent) {
    QuadExt result = QuadExt::one(x.context());
    QuadExt base = x;
    while (exponent > 0) {
        if ((exponent & 1U) != 0) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

RootPair make_roots(const RecurrenceParams& params) {
    const Rational half_p = params.p / 2;
    const Rational disc = params.discriminant();
    if (disc == 0) {
        const QuadContext field = QuadContext::rational();
        return {QuadExt(half_p, field), QuadExt(half_p, field)};
    }
    const SquarefreeDecomposition dec = squarefree_decompose(disc);
    const QuadContext field(dec.d);
    const Rational half_s = dec.s / 2;
    return {QuadExt(half_p, half_s, field), QuadExt(half_p, -half_s, field)};
}

}  // namespace trirec
