#include "trirec/identities.hpp"

#include "trirec/binomials.hpp"
#include "trirec/charpoly.hpp"
#include "trirec/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace trirec {
namespace {

// Charpoly and binomial sweeps grow cubically in n; their range is capped.
constexpr long kPolynomialSweepCap = 12;

Rational minus_one_pow(std::uint64_t n) { return Rational(n % 2 == 0 ? 1 : -1); }

IndexOutcome equality(const Rational& lhs, const Rational& rhs) {
    return {lhs == rhs ? Status::pass : Status::fail, to_string(lhs), to_string(rhs), {}};
}

IndexOutcome ratio_is_five(const Rational& num, const Rational& den) {
    if (den == 0) return {Status::skipped, {}, "5", "zero denominator"};
    const Rational ratio = num / den;
    return {num == 5 * den ? Status::pass : Status::fail, to_string(ratio), "5", {}};
}

Rational sq(const Rational& x) { return x * x; }

// --- index-level evaluations on a shared table -----------------------------

IndexOutcome prop34_at(SequenceTable& t, std::uint64_t n) {
    const auto& prm = t.params();
    return equality(sq(t.w(n)) - 4 * t.q_power(n), sq(t.u(n)) * prm.discriminant());
}

IndexOutcome cor36_at(SequenceTable& t, std::uint64_t n) {
    const auto& prm = t.params();
    const Rational w_double = t.w(2 * n);
    const IndexOutcome step = equality(sq(t.w(n)), w_double + 2 * t.q_power(n));
    if (step.status == Status::fail) return step;
    return equality(w_double - 2 * t.q_power(n), sq(t.u(n)) * prm.discriminant());
}

IndexOutcome freitag_at(SequenceTable& t, std::uint64_t n, std::uint64_t a, bool printed) {
    const Rational s = minus_one_pow(a);
    const Rational num = sq(t.w(n)) - s * sq(t.w(n + a));
    const Rational den = (printed ? t.u(n) : sq(t.u(n))) - s * sq(t.u(n + a));
    return ratio_is_five(num, den);
}

IndexOutcome zeitlin_at(SequenceTable& t, std::uint64_t n, std::uint64_t a, bool printed) {
    const Rational eight_sign = 8 * minus_one_pow(n);
    Rational num = sq(t.w(n)) + sq(t.w(n + 2 * a));
    num += printed ? eight_sign : Rational(-eight_sign);
    const Rational den = sq(t.u(n)) + sq(t.u(n + 2 * a));
    return ratio_is_five(num, den);
}

std::optional<Integer> five_times_square_root(const Rational& value) {
    if (!is_integer(value) || sgn(value) < 0) return std::nullopt;
    const Integer v = value.get_num();
    if (mpz_divisible_ui_p(v.get_mpz_t(), 5) == 0) return std::nullopt;
    const auto root = is_rational_square(Rational(v / 5));
    if (!root) return std::nullopt;
    return root->get_num();
}

// --- sweep bookkeeping ------------------------------------------------------

class Sweep {
public:
    explicit Sweep(IdentityReport& report) : report_(report) {}

    bool done() const { return done_; }

    /// Runs one index check; stops the sweep at the first failure.
    void check(long n, std::optional<long> a, const std::function<IndexOutcome()>& body) {
        if (done_) return;
        IndexOutcome outcome;
        try {
            outcome = body();
        } catch (const Error& e) {
            outcome = {Status::fail, "error", e.what(), {}};
        }
        switch (outcome.status) {
            case Status::pass: ++report_.checked; break;
            case Status::skipped:
                ++report_.skipped;
                if (skip_reason_.empty()) skip_reason_ = outcome.reason;
                break;
            case Status::fail:
                ++report_.checked;
                report_.status = Status::fail;
                report_.first_counterexample = Counterexample{n, a, outcome.lhs, outcome.rhs};
                done_ = true;
                break;
        }
    }

    void skip_cell(const std::string& reason) {
        report_.status = Status::skipped;
        append_note(reason);
        done_ = true;
        closed_ = true;
    }

    void finish() {
        if (closed_) return;
        if (report_.status != Status::fail && report_.checked == 0) {
            report_.status = Status::skipped;
            append_note(skip_reason_.empty() ? "empty index range"
                                             : skip_reason_ + " at every index");
        } else if (report_.skipped > 0) {
            append_note(std::to_string(report_.skipped) + " index(es) skipped: " + skip_reason_);
        }
    }

    void append_note(const std::string& text) {
        if (!report_.note.empty()) report_.note += "; ";
        report_.note += text;
    }

private:
    IdentityReport& report_;
    std::string skip_reason_;
    bool done_ = false;
    bool closed_ = false;
};

using CellBody = void (*)(Sweep&, IdentityReport&, SequenceTable&, const GridSpec&);

void sweep_n(Sweep& sweep, IdentityReport& report, long n_min, long n_max,
             const std::function<IndexOutcome(std::uint64_t)>& body) {
    report.n_range = {n_min, n_max};
    for (long n = n_min; n <= n_max && !sweep.done(); ++n) {
        sweep.check(n, std::nullopt, [&] { return body(static_cast<std::uint64_t>(n)); });
    }
}

void sweep_na(Sweep& sweep, IdentityReport& report, const GridSpec& grid,
              const std::function<IndexOutcome(std::uint64_t, std::uint64_t)>& body) {
    report.n_range = {1, grid.n_max};
    report.a_range = IndexRange{1, grid.a_max};
    for (long n = 1; n <= grid.n_max && !sweep.done(); ++n) {
        for (long a = 1; a <= grid.a_max && !sweep.done(); ++a) {
            sweep.check(n, a, [&] {
                return body(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(a));
            });
        }
    }
}

// --- per-params identities --------------------------------------------------

void run_prop34(Sweep& s, IdentityReport& r, SequenceTable& t, const GridSpec& g) {
    sweep_n(s, r, 0, g.n_max, [&](std::uint64_t n) { return prop34_at(t, n); });
}

void run_prop34_recurrence(Sweep& s, IdentityReport& r, SequenceTable& t, const GridSpec& g) {
    // Both sides obey the cubic recurrence and share their first three values.
    const CubicCoefficients c = cubic_coefficients(t.params());
    const Rational disc = t.params().discriminant();
    auto lhs = [&](std::uint64_t n) { return Rational(sq(t.w(n)) - 4 * t.q_power(n)); };
    auto rhs = [&](std::uint64_t n) { return Rational(sq(t.u(n)) * disc); };
    sweep_n(s, r, 0, g.n_max, [&](std::uint64_t n) {
        if (n < 3) return equality(lhs(n), rhs(n));
        const IndexOutcome left =
            equality(lhs(n), c.c2 * lhs(n - 1) + c.c1 * lhs(n - 2) + c.c0 * lhs(n - 3));
        if (left.status == Status::fail) return left;
        return equality(rhs(n), c.c2 * rhs(n - 1) + c.c1 * rhs(n - 2) + c.c0 * rhs(n - 3));
    });
}

void run_eq35(Sweep& s, IdentityReport& r, SequenceTable& t, const GridSpec& g) {
    r.n_range = {0, g.n_max};
    if (t.params().discriminant() == 0) return s.skip_cell("p^2 - 4q = 0");
    sweep_n(s, r, 0, g.n_max, [&](std::uint64_t n) -> IndexOutcome {
        const Rational z_squared = (sq(t.w(n)) - 4 * t.q_power(n)) / t.params().discriminant();
        const auto z = is_rational_square(z_squared);
        if (!z) return {Status::fail, to_string(z_squared), "a rational square", {}};
        return equality(*z, abs(t.u(n)));
    });
}

void run_cor36(Sweep& s, IdentityReport& r, SequenceTable& t, const GridSpec& g) {
    sweep_n(s, r, 0, g.n_max, [&](std::uint64_t n) { return cor36_at(t, n); });
}

void run_cor35(Sweep& s, IdentityReport& r, SequenceTable& t, const GridSpec& g) {
    r.n_range = {1, g.n_max};
    const auto& prm = t.params();
    if (prm.q != 1 || !is_integer(prm.p)) return s.skip_cell("requires q = 1 and integer p");
    sweep_n(s, r, 1, g.n_max, [&](std::uint64_t n) -> IndexOutcome {
        const Rational x = t.w(n);
        const Rational y = 2 * t.u(n);
        const Rational z = prm.p * t.u(n);
        const IndexOutcome sum = equality(sq(x) + sq(y) - sq(z), Rational(4));
        if (sum.status == Status::fail) return sum;
        return equality(prm.p * y, 2 * z);
    });
}

void run_lemma32(Sweep& s, IdentityReport& r, SequenceTable& t, const GridSpec& g) {
    const bool has_u_from_w = t.params().discriminant() != 0;
    if (!has_u_from_w) s.append_note("u-from-w direction not applicable (p^2 - 4q = 0)");
    sweep_n(s, r, 1, g.n_max, [&](std::uint64_t n) {
        const IndexOutcome w_side = equality(w_from_u(t, n), t.w(n));
        if (w_side.status == Status::fail || !has_u_from_w) return w_side;
        return equality(u_from_w(t, n), t.u(n));
    });
}

void run_lemma33(Sweep& s, IdentityReport& r, SequenceTable& t, const GridSpec& g) {
    if (t.params() == RecurrenceParams::fibonacci()) {
        s.append_note("specializes to X(n+3) = 2X(n+2) + 2X(n+1) - X(n)");
    }
    const CubicCoefficients c = cubic_coefficients(t.params());
    sweep_n(s, r, 0, g.n_max, [&](std::uint64_t m) -> IndexOutcome {
        for (const CubicKind kind : {CubicKind::u_squared, CubicKind::w_squared, CubicKind::q_power}) {
            auto x = [&](std::uint64_t i) -> Rational {
                switch (kind) {
                    case CubicKind::u_squared: return sq(t.u(i));
                    case CubicKind::w_squared: return sq(t.w(i));
                    case CubicKind::q_power: return t.q_power(i);
                }
                return Rational(0);
            };
            const Rational predicted = c.c2 * x(m + 2) + c.c1 * x(m + 1) + c.c0 * x(m);
            if (x(m + 3) != predicted) {
                return {Status::fail, to_string(kind) + ": " + to_string(x(m + 3)),
                        to_string(predicted), {}};
            }
        }
        return {Status::pass, {}, {}, {}};
    });
}

long capped(long n_max, Sweep& s) {
    if (n_max > kPolynomialSweepCap) {
        s.append_note("n capped at " + std::to_string(kPolynomialSweepCap));
        return kPolynomialSweepCap;
    }
    return n_max;
}

void run_phi_formula(Sweep& s, IdentityReport& r, SequenceTable& t, const GridSpec& g) {
    const long top = capped(g.n_max, s);
    sweep_n(s, r, 0, top, [&](std::uint64_t n) -> IndexOutcome {
        const RationalPoly product = phi_product(t.params(), static_cast<long>(n));
        const RationalPoly formula = phi_coeff_formula(t.params(), static_cast<long>(n));
        return {product == formula ? Status::pass : Status::fail, product.to_string(),
                formula.to_string(), {}};
    });
}

void run_phi_roots(Sweep& s, IdentityReport& r, SequenceTable& t, const GridSpec& g) {
    const long top = capped(g.n_max, s);
    sweep_n(s, r, 0, top, [&](std::uint64_t n) -> IndexOutcome {
        const RationalPoly phi = phi_product(t.params(), static_cast<long>(n));
        const std::vector<QuadExt> roots = phi_roots(t.params(), static_cast<long>(n));
        const QuadExt zero = QuadExt::zero(roots.front().context());
        for (std::size_t j = 0; j < roots.size(); ++j) {
            const QuadExt value = phi.evaluate(roots[j], zero);
            if (!value.is_zero()) {
                return {Status::fail, "Phi(root_" + std::to_string(j) + ") = " + value.to_string(),
                        "0", {}};
            }
        }
        return {Status::pass, {}, {}, {}};
    });
}

void run_phi_quadratic_factor(Sweep& s, IdentityReport& r, SequenceTable& t, const GridSpec& g) {
    const long top = capped(g.n_max, s);
    sweep_n(s, r, 1, top, [&](std::uint64_t n) -> IndexOutcome {
        // sigma^n = tau^n exactly when f_n has a double root
        if (sq(t.w(n)) == 4 * t.q_power(n)) {
            return {Status::skipped, {}, {}, "sigma^n = tau^n"};
        }
        const auto division = divmod(phi_product(t.params(), static_cast<long>(n)),
                                     quadratic_factor(t.params(), static_cast<long>(n)));
        return {division.remainder.is_zero() ? Status::pass : Status::fail,
                division.remainder.to_string(), "0", {}};
    });
}

void run_binomial_a3_a4(Sweep& s, IdentityReport& r, SequenceTable& t, const GridSpec& g) {
    const long top = capped(g.n_max, s);
    r.n_range = {0, top};
    r.a_range = IndexRange{0, top};
    for (long rr = 0; rr <= top && !s.done(); ++rr) {
        for (long k = 0; k <= rr && !s.done(); ++k) {
            s.check(rr, k, [&]() -> IndexOutcome {
                const auto quotient = generalized_binomial_quotient(t, rr, k);
                if (!quotient) return {Status::skipped, {}, {}, "some u_i = 0 with i <= k"};
                return equality(generalized_binomial(t.params(), rr, k), *quotient);
            });
        }
    }
}

// --- fibonacci-pinned identities -------------------------------------------

void run_eq21(Sweep& s, IdentityReport& r, SequenceTable&, const GridSpec& g) {
    s.append_note("printed prefactor (-1)^n; verified sign (-1)^(n-1)");
    sweep_n(s, r, 2, g.n_max, [&](std::uint64_t n) {
        const int sign = fibonacci_factorization(static_cast<long>(n)).sign;
        return equality(Rational(sign), minus_one_pow(n - 1));
    });
}

void run_eq21_paper_sign(Sweep& s, IdentityReport& r, SequenceTable&, const GridSpec& g) {
    s.append_note("printed prefactor (-1)^n");
    sweep_n(s, r, 2, g.n_max, [&](std::uint64_t n) -> IndexOutcome {
        const int printed = n % 2 == 0 ? 1 : -1;
        const bool holds = fibonacci_factorization_holds(static_cast<long>(n), printed);
        return {holds ? Status::pass : Status::fail,
                "Phi_" + std::to_string(n) + "(1,-1,x)",
                std::to_string(printed) + " * (x^2 - L_n x + (-1)^n) * Phi_(n-2)(1,-1,-x)", {}};
    });
}

void run_eq22(Sweep& s, IdentityReport& r, SequenceTable& t, const GridSpec& g) {
    sweep_n(s, r, 0, g.n_max, [&](std::uint64_t n) -> IndexOutcome {
        const Rational value = sq(t.w(n)) - 4 * minus_one_pow(n);
        const auto root = five_times_square_root(value);
        if (!root) return {Status::fail, to_string(value), "5 * A^2", {}};
        return equality(Rational(*root), t.u(n));
    });
}

void run_eq24(Sweep& s, IdentityReport& r, SequenceTable& t, const GridSpec& g) {
    sweep_n(s, r, 0, g.n_max, [&](std::uint64_t n) {
        return equality(sq(t.w(n)) - 4 * minus_one_pow(n), 5 * sq(t.u(n)));
    });
}

void run_eq25_freitag(Sweep& s, IdentityReport& r, SequenceTable& t, const GridSpec& g) {
    s.append_note("denominator read as F_n^2 - (-1)^a F_(n+a)^2 (printed F_n)");
    sweep_na(s, r, g, [&](std::uint64_t n, std::uint64_t a) { return freitag_at(t, n, a, false); });
}

void run_eq25_freitag_paper_form(Sweep& s, IdentityReport& r, SequenceTable& t,
                                 const GridSpec& g) {
    s.append_note("printed denominator F_n - (-1)^a F_(n+a)^2");
    sweep_na(s, r, g, [&](std::uint64_t n, std::uint64_t a) { return freitag_at(t, n, a, true); });
}

void run_eq25_zeitlin(Sweep& s, IdentityReport& r, SequenceTable& t, const GridSpec& g) {
    s.append_note("numerator term read as -8(-1)^n (printed +8(-1)^n)");
    sweep_na(s, r, g, [&](std::uint64_t n, std::uint64_t a) { return zeitlin_at(t, n, a, false); });
}

void run_eq25_zeitlin_paper_sign(Sweep& s, IdentityReport& r, SequenceTable& t,
                                 const GridSpec& g) {
    s.append_note("printed numerator term +8(-1)^n");
    sweep_na(s, r, g, [&](std::uint64_t n, std::uint64_t a) { return zeitlin_at(t, n, a, true); });
}

struct CatalogEntry {
    IdentityInfo info;
    CellBody body;
};

const std::vector<CatalogEntry>& catalog() {
    using enum IdentityScope;
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> e{
            {{"binomial_a3_a4", per_params, "F(r,k,sigma,tau) equals the u-quotient when defined"},
             run_binomial_a3_a4},
            {{"cor35", per_params, "q = 1: (w_n, 2u_n, p u_n) solves x^2 + y^2 - z^2 = 4, py = 2z"},
             run_cor35},
            {{"cor36", per_params, "w_2n - 2q^n = u_n^2 (p^2 - 4q) and w_n^2 = w_2n + 2q^n"},
             run_cor36},
            {{"eq21", fibonacci, "Phi_n(1,-1,x) = (-1)^(n-1) f_n(x) Phi_(n-2)(1,-1,-x)"}, run_eq21},
            {{"eq21_paper_sign", fibonacci, "printed (-1)^n prefactor (diagnostic)"},
             run_eq21_paper_sign},
            {{"eq22", fibonacci, "L_n^2 - 4(-1)^n = 5 A_n^2 with A_n = F_n"}, run_eq22},
            {{"eq24", fibonacci, "L_n^2 - 4(-1)^n = 5 F_n^2"}, run_eq24},
            {{"eq25_freitag", fibonacci, "(L_n^2 - (-1)^a L_(n+a)^2)/(F_n^2 - (-1)^a F_(n+a)^2) = 5"},
             run_eq25_freitag},
            {{"eq25_freitag_paper_form", fibonacci, "printed Freitag denominator (diagnostic)"},
             run_eq25_freitag_paper_form},
            {{"eq25_zeitlin", fibonacci, "(L_n^2 + L_(n+2a)^2 - 8(-1)^n)/(F_n^2 + F_(n+2a)^2) = 5"},
             run_eq25_zeitlin},
            {{"eq25_zeitlin_paper_sign", fibonacci, "printed +8(-1)^n sign (diagnostic)"},
             run_eq25_zeitlin_paper_sign},
            {{"eq35", per_params, "(w_n^2 - 4q^n)/(p^2 - 4q) is the square of |u_n|"}, run_eq35},
            {{"lemma32", per_params, "w_r = u_(r+1) - q u_(r-1) and u_r = (w_(r+1) - q w_(r-1))/D"},
             run_lemma32},
            {{"lemma33", per_params, "u_n^2, w_n^2, q^n obey the cubic recurrence"}, run_lemma33},
            {{"phi_formula", per_params, "root product equals the generalized-binomial formula"},
             run_phi_formula},
            {{"phi_quadratic_factor", per_params, "x^2 - w_n x + q^n divides Phi_n"},
             run_phi_quadratic_factor},
            {{"phi_roots", per_params, "every sigma^j tau^(n-j) is a root of Phi_n"}, run_phi_roots},
            {{"prop34", per_params, "w_n^2 - 4q^n = u_n^2 (p^2 - 4q)"}, run_prop34},
            {{"prop34_recurrence", per_params,
              "both sides of prop34 obey the cubic recurrence with equal initial values"},
             run_prop34_recurrence},
        };
        std::sort(e.begin(), e.end(),
                  [](const CatalogEntry& a, const CatalogEntry& b) { return a.info.id < b.info.id; });
        return e;
    }();
    return entries;
}

const CatalogEntry* find_entry(std::string_view id) {
    for (const auto& entry : catalog()) {
        if (entry.info.id == id) return &entry;
    }
    return nullptr;
}

struct Cell {
    const CatalogEntry* entry;
    RecurrenceParams params;
};

}  // namespace

bool check_prop34(const RecurrenceParams& params, std::uint64_t n) {
    SequenceTable table(params);
    return prop34_at(table, n).status == Status::pass;
}

std::optional<Rational> check_eq35_shape(const RecurrenceParams& params, std::uint64_t n) {
    const Rational disc = params.discriminant();
    if (disc == 0) throw DegenerateError("equation w_n^2 - 4q^n = z^2 (p^2 - 4q) needs p^2 != 4q");
    SequenceTable t(params);
    return is_rational_square((sq(t.w(n)) - 4 * t.q_power(n)) / disc);
}

bool check_cor36(const RecurrenceParams& params, std::uint64_t n) {
    SequenceTable table(params);
    return cor36_at(table, n).status == Status::pass;
}

bool check_eq24(std::uint64_t n) {
    SequenceTable t(RecurrenceParams::fibonacci());
    return sq(t.w(n)) - 4 * minus_one_pow(n) == 5 * sq(t.u(n));
}

Integer check_eq22(std::uint64_t n) {
    SequenceTable t(RecurrenceParams::fibonacci());
    const Rational value = sq(t.w(n)) - 4 * minus_one_pow(n);
    const auto root = five_times_square_root(value);
    if (!root) {
        throw ConsistencyError("L_" + std::to_string(n) + "^2 - 4(-1)^n = " + to_string(value) +
                               " is not five times a square");
    }
    return *root;
}

std::string to_string(Status status) {
    switch (status) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "unknown";
}

IndexOutcome check_eq25_freitag(std::uint64_t n, std::uint64_t a) {
    SequenceTable t(RecurrenceParams::fibonacci());
    return freitag_at(t, n, a, false);
}

IndexOutcome check_eq25_zeitlin(std::uint64_t n, std::uint64_t a) {
    SequenceTable t(RecurrenceParams::fibonacci());
    return zeitlin_at(t, n, a, false);
}

IndexOutcome check_eq25_freitag_paper_form(std::uint64_t n, std::uint64_t a) {
    SequenceTable t(RecurrenceParams::fibonacci());
    return freitag_at(t, n, a, true);
}

IndexOutcome check_eq25_zeitlin_paper_sign(std::uint64_t n, std::uint64_t a) {
    SequenceTable t(RecurrenceParams::fibonacci());
    return zeitlin_at(t, n, a, true);
}

PythagoreanTriple pythagorean_like(const Integer& p, std::uint64_t n) {
    if (n < 1) throw DomainError("pythagorean_like needs n >= 1");
    const auto pair = fast_pair({Rational(p), Rational(1)}, n);
    const Integer u = pair.u.get_num();
    return {pair.w.get_num(), 2 * u, p * u};
}

std::vector<Rational> RationalRange::values() const {
    if (sgn(step) <= 0) throw DomainError("range step must be positive");
    std::vector<Rational> out;
    for (Rational v = lo; v <= hi; v += step) out.push_back(v);
    return out;
}

void GridSpec::validate() const {
    for (const RationalRange* range : {&p_range, &q_range}) {
        if (sgn(range->step) <= 0) throw DomainError("range step must be positive");
        if (range->lo > range->hi) throw DomainError("empty parameter range");
    }
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    if (a_max < 1) throw DomainError("a_max must be >= 1");
}

const std::vector<IdentityInfo>& identity_catalog() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> out;
        for (const auto& entry : catalog()) out.push_back(entry.info);
        return out;
    }();
    return infos;
}

const IdentityInfo* find_identity(std::string_view id) {
    const CatalogEntry* entry = find_entry(id);
    return entry == nullptr ? nullptr : &entry->info;
}

bool is_diagnostic(std::string_view id) {
    return id.ends_with("_paper_sign") || id.ends_with("_paper_form");
}

IdentityReport evaluate_identity(std::string_view id, const RecurrenceParams& params,
                                 const GridSpec& grid) {
    const CatalogEntry* entry = find_entry(id);
    if (entry == nullptr) throw DomainError("unknown identity '" + std::string(id) + "'");
    const bool pinned = entry->info.scope == IdentityScope::fibonacci;

    IdentityReport report;
    report.identity_id = std::string(id);
    report.diagnostic = is_diagnostic(id);
    if (!pinned) report.params = params;

    SequenceTable table(pinned ? RecurrenceParams::fibonacci() : params);
    Sweep sweep(report);
    entry->body(sweep, report, table, grid);
    sweep.finish();
    return report;
}

std::vector<IdentityReport> run_grid(const GridSpec& grid, const std::set<std::string>& identity_ids,
                                     unsigned jobs) {
    grid.validate();
    std::vector<Cell> cells;
    const std::vector<Rational> ps = grid.p_range.values();
    const std::vector<Rational> qs = grid.q_range.values();
    // std::set iterates in sorted id order; p and q ranges ascend.
    for (const auto& id : identity_ids) {
        const CatalogEntry* entry = find_entry(id);
        if (entry == nullptr) throw DomainError("unknown identity '" + id + "'");
        if (entry->info.scope == IdentityScope::fibonacci) {
            cells.push_back({entry, RecurrenceParams::fibonacci()});
            continue;
        }
        for (const auto& p : ps) {
            for (const auto& q : qs) cells.push_back({entry, {p, q}});
        }
    }

    std::vector<IdentityReport> reports(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            reports[i] = evaluate_identity(cells[i].entry->info.id, cells[i].params, grid);
        }
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(jobs, cells.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    return reports;
}

}  // namespace trirec
