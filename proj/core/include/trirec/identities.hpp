#pragma once

/// Exact verification of the identities tying w_n, u_n and q^n together,
/// and grid sweeps that report the first counterexample per cell.

#include "trirec/numeric.hpp"
#include "trirec/sequences.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace trirec {

// --- single-index checks ---------------------------------------------------

/// w_n^2 - 4q^n == u_n^2 (p^2 - 4q).
bool check_prop34(const RecurrenceParams& params, std::uint64_t n);

/// The rational z >= 0 with w_n^2 - 4q^n = z^2 (p^2 - 4q); by the identity
/// above it is |u_n|. nullopt if no such z. DegenerateError when p^2 = 4q.
std::optional<Rational> check_eq35_shape(const RecurrenceParams& params, std::uint64_t n);

/// w_{2n} - 2q^n == u_n^2 (p^2 - 4q), together with w_n^2 == w_{2n} + 2q^n.
bool check_cor36(const RecurrenceParams& params, std::uint64_t n);

/// L_n^2 - 4(-1)^n == 5 F_n^2.
bool check_eq24(std::uint64_t n);

/// The A_n >= 0 with L_n^2 - 4(-1)^n = 5 A_n^2. ConsistencyError if the left
/// side is not five times a square.
Integer check_eq22(std::uint64_t n);

enum class Status { pass, fail, skipped };

std::string to_string(Status status);

struct IndexOutcome {
    Status status;
    std::string lhs;
    std::string rhs;
    std::string reason;  // set when skipped
};

/// (L_n^2 - (-1)^a L_{n+a}^2) / (F_n^2 - (-1)^a F_{n+a}^2) == 5, compared as
/// numerator == 5 * denominator. Skipped when the denominator vanishes.
IndexOutcome check_eq25_freitag(std::uint64_t n, std::uint64_t a);

/// (L_n^2 + L_{n+2a}^2 - 8(-1)^n) / (F_n^2 + F_{n+2a}^2) == 5.
IndexOutcome check_eq25_zeitlin(std::uint64_t n, std::uint64_t a);

/// Literal printed variants, kept as diagnostics: denominator
/// F_n - (-1)^a F_{n+a}^2, and +8(-1)^n in the second ratio.
IndexOutcome check_eq25_freitag_paper_form(std::uint64_t n, std::uint64_t a);
IndexOutcome check_eq25_zeitlin_paper_sign(std::uint64_t n, std::uint64_t a);

struct PythagoreanTriple {
    Integer x;
    Integer y;
    Integer z;
};

/// With q = 1: (w_n, 2u_n, p u_n), satisfying x^2 + y^2 - z^2 = 4 and
/// p y = 2 z. DomainError for n < 1.
PythagoreanTriple pythagorean_like(const Integer& p, std::uint64_t n);

// --- grid sweeps -----------------------------------------------------------

struct IndexRange {
    long min;
    long max;

    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct Counterexample {
    long n;
    std::optional<long> a;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string identity_id;
    /// nullopt for identities pinned to p = 1, q = -1.
    std::optional<RecurrenceParams> params;
    bool diagnostic = false;
    IndexRange n_range{0, 0};
    std::optional<IndexRange> a_range;
    Status status = Status::pass;
    std::optional<Counterexample> first_counterexample;
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    std::string note;
};

/// Inclusive lo..hi in increments of step (> 0).
struct RationalRange {
    Rational lo;
    Rational hi;
    Rational step{1};

    std::vector<Rational> values() const;
};

struct GridSpec {
    RationalRange p_range{Rational(-3), Rational(3)};
    RationalRange q_range{Rational(-3), Rational(3)};
    long n_max = 50;
    long a_max = 10;

    /// DomainError on empty ranges, nonpositive step, n_max < 1 or a_max < 1.
    void validate() const;
};

enum class IdentityScope { per_params, fibonacci };

struct IdentityInfo {
    std::string_view id;
    IdentityScope scope;
    std::string_view summary;
};

/// All identities known to run_grid, sorted by id.
const std::vector<IdentityInfo>& identity_catalog();
const IdentityInfo* find_identity(std::string_view id);

/// Ids ending in _paper_sign or _paper_form reproduce printed typos and are
/// expected to fail.
bool is_diagnostic(std::string_view id);

/// Evaluates one identity on one cell. `params` is ignored for fibonacci-scope
/// identities.
IdentityReport evaluate_identity(std::string_view id, const RecurrenceParams& params,
                                 const GridSpec& grid);

/// One report per (identity, params) cell, or one per identity for the
/// fibonacci scope, sorted by identity id then p then q. Cells run on up to
/// `jobs` threads; the result does not depend on `jobs`. DomainError for an
/// unknown id or invalid grid.
std::vector<IdentityReport> run_grid(const GridSpec& grid, const std::set<std::string>& identity_ids,
                                     unsigned jobs = 1);

}  // namespace trirec
