#pragma once

/// The sequence u (u0 = 0, u1 = 1) and its companion w (w0 = 2, w1 = p),
/// both obeying X_r = p X_{r-1} - q X_{r-2}.

#include "trirec/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <utility>

namespace trirec {

struct RecurrenceParams {
    Rational p;
    Rational q;

    /// p^2 - 4q, recomputed on every call.
    Rational discriminant() const { return p * p - 4 * q; }

    static RecurrenceParams fibonacci() { return {Rational(1), Rational(-1)}; }

    friend bool operator==(const RecurrenceParams& lhs, const RecurrenceParams& rhs) {
        return lhs.p == rhs.p && lhs.q == rhs.q;
    }
};

std::string to_string(const RecurrenceParams& params);

/// Counts Rational multiplications performed by the sequence routines.
struct MulCounter {
    std::uint64_t multiplications = 0;
};

/// Memoized prefix of u and w. Grows on demand; returned references stay
/// valid across growth. Growth is single-writer, but a table that is no
/// longer grown may be read from any thread.
class SequenceTable {
public:
    explicit SequenceTable(RecurrenceParams params);

    const RecurrenceParams& params() const { return params_; }

    const Rational& u(std::size_t n);
    const Rational& w(std::size_t n);
    /// q^n, cached alongside the sequences.
    const Rational& q_power(std::size_t n);

    /// Ensures indices 0..n are available.
    void extend_to(std::size_t n);
    std::size_t size() const { return u_.size(); }

private:
    RecurrenceParams params_;
    std::deque<Rational> u_;
    std::deque<Rational> w_;
    std::deque<Rational> q_powers_;
};

Rational u_iter(const RecurrenceParams& params, std::uint64_t n, MulCounter* counter = nullptr);
Rational w_iter(const RecurrenceParams& params, std::uint64_t n, MulCounter* counter = nullptr);

/// (sigma^n - tau^n)/(sigma - tau) evaluated in Q(sqrt d). Throws
/// DegenerateError when p^2 - 4q = 0.
Rational u_binet(const RecurrenceParams& params, std::uint64_t n);
/// sigma^n + tau^n.
Rational w_binet(const RecurrenceParams& params, std::uint64_t n);

struct SequencePair {
    Rational u;
    Rational w;
};

/// (u_n, w_n) with O(log n) multiplications. Walks the bits of n keeping
/// (u_k, u_{k+1}, q^k) and uses
///   w_k      = 2 u_{k+1} - p u_k
///   u_{2k}   = u_k w_k
///   u_{2k+1} = u_{k+1} w_k - q^k
SequencePair fast_pair(const RecurrenceParams& params, std::uint64_t n,
                       MulCounter* counter = nullptr);

/// Iterates u and w side by side; the baseline fast_pair is measured against.
SequencePair iter_pair(const RecurrenceParams& params, std::uint64_t n,
                       MulCounter* counter = nullptr);

/// w_r = u_{r+1} - q u_{r-1}, r >= 1. Also checks w_r = p u_r - 2q u_{r-1}
/// and w_{r-1} = 2u_r - p u_{r-1}, throwing ConsistencyError on mismatch.
Rational w_from_u(SequenceTable& table, std::uint64_t r);
Rational w_from_u(const RecurrenceParams& params, std::uint64_t r);

/// u_r = (w_{r+1} - q w_{r-1}) / (p^2 - 4q), r >= 1. DegenerateError when
/// the discriminant vanishes.
Rational u_from_w(SequenceTable& table, std::uint64_t r);
Rational u_from_w(const RecurrenceParams& params, std::uint64_t r);

enum class CubicKind { u_squared, w_squared, q_power };

std::string to_string(CubicKind kind);

/// Coefficients (c2, c1, c0) of X(m+3) = c2 X(m+2) + c1 X(m+1) + c0 X(m):
/// (p^2 - q, q^2 - p^2 q, q^3).
struct CubicCoefficients {
    Rational c2;
    Rational c1;
    Rational c0;
};

CubicCoefficients cubic_coefficients(const RecurrenceParams& params);

/// True iff the selected sequence satisfies the cubic recurrence for every
/// 0 <= m <= m_max.
bool check_cubic_recurrence(SequenceTable& table, CubicKind kind, std::uint64_t m_max);
bool check_cubic_recurrence(const RecurrenceParams& params, CubicKind kind, std::uint64_t m_max);

}  // namespace trirec
