#include "trirec/sequences.hpp"

#include "trirec/errors.hpp"
#include "trirec/quadfield.hpp"

#include <bit>

namespace trirec {
namespace {

Rational counted_mul(const Rational& a, const Rational& b, MulCounter* counter) {
    if (counter != nullptr) ++counter->multiplications;
    return a * b;
}

Rational require_rational(const QuadExt& value, const char* what) {
    if (auto r = value.as_rational()) return *r;
    throw IrrationalValue(std::string(what) + " evaluated to irrational " + value.to_string());
}

}  // namespace

std::string to_string(const RecurrenceParams& params) {
    return "p=" + params.p.get_str() + ", q=" + params.q.get_str();
}

SequenceTable::SequenceTable(RecurrenceParams params)
    : params_(std::move(params)), u_{Rational(0), Rational(1)}, w_{Rational(2), params_.p},
      q_powers_{Rational(1)} {}

void SequenceTable::extend_to(std::size_t n) {
    while (u_.size() <= n) {
        const std::size_t r = u_.size();
        u_.push_back(params_.p * u_[r - 1] - params_.q * u_[r - 2]);
        w_.push_back(params_.p * w_[r - 1] - params_.q * w_[r - 2]);
    }
}

const Rational& SequenceTable::u(std::size_t n) {
    extend_to(n);
    return u_[n];
}

const Rational& SequenceTable::w(std::size_t n) {
    extend_to(n);
    return w_[n];
}

const Rational& SequenceTable::q_power(std::size_t n) {
    while (q_powers_.size() <= n) q_powers_.push_back(q_powers_.back() * params_.q);
    return q_powers_[n];
}

Rational u_iter(const RecurrenceParams& params, std::uint64_t n, MulCounter* counter) {
    Rational prev(0);
    Rational cur(1);
    if (n == 0) return prev;
    for (std::uint64_t r = 2; r <= n; ++r) {
        Rational next = counted_mul(params.p, cur, counter) - counted_mul(params.q, prev, counter);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational w_iter(const RecurrenceParams& params, std::uint64_t n, MulCounter* counter) {
    Rational prev(2);
    Rational cur = params.p;
    if (n == 0) return prev;
    for (std::uint64_t r = 2; r <= n; ++r) {
        Rational next = counted_mul(params.p, cur, counter) - counted_mul(params.q, prev, counter);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

SequencePair iter_pair(const RecurrenceParams& params, std::uint64_t n, MulCounter* counter) {
    return {u_iter(params, n, counter), w_iter(params, n, counter)};
}

Rational u_binet(const RecurrenceParams& params, std::uint64_t n) {
    if (params.discriminant() == 0) {
        throw DegenerateError("Binet form of u needs p^2 - 4q != 0 (" + to_string(params) + ")");
    }
    const RootPair roots = make_roots(params);
    const QuadExt value = (pow(roots.sigma, n) - pow(roots.tau, n)) / (roots.sigma - roots.tau);
    return require_rational(value, "u_binet");
}

Rational w_binet(const RecurrenceParams& params, std::uint64_t n) {
    const RootPair roots = make_roots(params);
    return require_rational(pow(roots.sigma, n) + pow(roots.tau, n), "w_binet");
}

SequencePair fast_pair(const RecurrenceParams& params, std::uint64_t n, MulCounter* counter) {
    Rational u_k(0);
    Rational u_next(1);
    Rational q_k(1);
    const Rational two(2);

    const int bits = std::bit_width(n);
    for (int bit = bits - 1; bit >= 0; --bit) {
        const Rational w_k = counted_mul(two, u_next, counter) - counted_mul(params.p, u_k, counter);
        Rational u_even = counted_mul(u_k, w_k, counter);
        Rational u_odd = counted_mul(u_next, w_k, counter) - q_k;
        q_k = counted_mul(q_k, q_k, counter);
        if (((n >> bit) & 1U) != 0) {
            u_next = counted_mul(params.p, u_odd, counter) - counted_mul(params.q, u_even, counter);
            u_k = std::move(u_odd);
            q_k = counted_mul(q_k, params.q, counter);
        } else {
            u_k = std::move(u_even);
            u_next = std::move(u_odd);
        }
    }
    Rational w_n = counted_mul(two, u_next, counter) - counted_mul(params.p, u_k, counter);
    return {std::move(u_k), std::move(w_n)};
}

Rational w_from_u(SequenceTable& table, std::uint64_t r) {
    if (r < 1) throw DomainError("w_from_u needs r >= 1");
    const RecurrenceParams& prm = table.params();
    const Rational result = table.u(r + 1) - prm.q * table.u(r - 1);
    const Rational alt = prm.p * table.u(r) - 2 * prm.q * table.u(r - 1);
    if (result != alt) {
        throw ConsistencyError("u_{r+1} - q u_{r-1} != p u_r - 2q u_{r-1} at r=" +
                               std::to_string(r) + " (" + to_string(prm) + ")");
    }
    const Rational prev = r >= 2 ? Rational(table.u(r) - prm.q * table.u(r - 2)) : Rational(2);
    if (prev != 2 * table.u(r) - prm.p * table.u(r - 1)) {
        throw ConsistencyError("w_{r-1} != 2u_r - p u_{r-1} at r=" + std::to_string(r) + " (" +
                               to_string(prm) + ")");
    }
    return result;
}

Rational w_from_u(const RecurrenceParams& params, std::uint64_t r) {
    SequenceTable table(params);
    return w_from_u(table, r);
}

Rational u_from_w(SequenceTable& table, std::uint64_t r) {
    if (r < 1) throw DomainError("u_from_w needs r >= 1");
    const RecurrenceParams& prm = table.params();
    const Rational disc = prm.discriminant();
    if (disc == 0) {
        throw DegenerateError("u_from_w divides by p^2 - 4q = 0 (" + to_string(prm) + ")");
    }
    return (table.w(r + 1) - prm.q * table.w(r - 1)) / disc;
}

Rational u_from_w(const RecurrenceParams& params, std::uint64_t r) {
    SequenceTable table(params);
    return u_from_w(table, r);
}

std::string to_string(CubicKind kind) {
    switch (kind) {
        case CubicKind::u_squared: return "u_squared";
        case CubicKind::w_squared: return "w_squared";
        case CubicKind::q_power: return "q_power";
    }
    return "unknown";
}

CubicCoefficients cubic_coefficients(const RecurrenceParams& params) {
    const Rational p2 = params.p * params.p;
    const Rational& q = params.q;
    return {p2 - q, q * q - p2 * q, q * q * q};
}

bool check_cubic_recurrence(SequenceTable& table, CubicKind kind, std::uint64_t m_max) {
    const CubicCoefficients c = cubic_coefficients(table.params());
    auto term = [&](std::size_t m) -> Rational {
        switch (kind) {
            case CubicKind::u_squared: return table.u(m) * table.u(m);
            case CubicKind::w_squared: return table.w(m) * table.w(m);
            case CubicKind::q_power: return table.q_power(m);
        }
        return Rational(0);
    };
    for (std::uint64_t m = 0; m <= m_max; ++m) {
        const Rational rhs = c.c2 * term(m + 2) + c.c1 * term(m + 1) + c.c0 * term(m);
        if (term(m + 3) != rhs) return false;
    }
    return true;
}

bool check_cubic_recurrence(const RecurrenceParams& params, CubicKind kind, std::uint64_t m_max) {
    SequenceTable table(params);
    return check_cubic_recurrence(table, kind, m_max);
}

}  // namespace trirec
