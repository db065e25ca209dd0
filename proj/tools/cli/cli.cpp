#include "cli.hpp"

#include "render.hpp"

#include "trirec/binomials.hpp"
#include "trirec/charpoly.hpp"
#include "trirec/errors.hpp"
#include "trirec/identities.hpp"
#include "trirec/sequences.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#ifndef TRIREC_VERSION
#define TRIREC_VERSION "unknown"
#endif

namespace trirec::cli {
namespace {

struct Options {
    std::string config;
    std::string format = "plain";
    bool timestamps = false;

    std::string p = "1";
    std::string q = "-1";
    long n = 10;
    long r = -1;
    long k = -1;
    long m = -1;
    bool factor = false;
    bool cyclotomic = false;

    std::string p_range = "-3:3";
    std::string q_range = "-3:3";
    long n_max = 50;
    long a_max = 10;
    std::string identities = "all";
    bool strict_diagnostics = false;
    unsigned jobs = 1;
};

struct Outcome {
    Document doc;
    int exit_code = kSuccess;
};

Json coefficients_json(const RationalPoly& poly) {
    Json out = Json::array();
    for (const auto& c : poly.coefficients()) out.push_back(to_string(c));
    return out;
}

Json coefficients_json(const UniPoly& poly) {
    Json out = Json::array();
    for (const auto& c : poly.coefficients()) out.push_back(to_string(c));
    return out;
}

RecurrenceParams read_params(const Options& o) {
    return {parse_rational(o.p), parse_rational(o.q)};
}

Json params_json(const RecurrenceParams& prm) {
    return Json{{"p", to_string(prm.p)}, {"q", to_string(prm.q)}};
}

RationalRange parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3) {
        throw ParseError("range must be lo:hi or lo:hi:step, got '" + text + "'");
    }
    RationalRange range{parse_rational(parts[0]), parse_rational(parts[1])};
    if (parts.size() == 3) range.step = parse_rational(parts[2]);
    if (sgn(range.step) <= 0) throw ParseError("range step must be positive in '" + text + "'");
    if (range.lo > range.hi) throw ParseError("empty range '" + text + "'");
    return range;
}

std::set<std::string> parse_identity_ids(const std::string& text) {
    std::set<std::string> ids;
    std::stringstream ss(text);
    for (std::string id; std::getline(ss, id, ',');) {
        if (id.empty()) continue;
        if (id == "all") {
            for (const auto& info : identity_catalog()) ids.emplace(info.id);
            continue;
        }
        if (find_identity(id) == nullptr) throw DomainError("unknown identity '" + id + "'");
        ids.insert(id);
    }
    return ids;
}

// --- commands ---------------------------------------------------------------

Outcome cmd_seq(const Options& o) {
    const RecurrenceParams prm = read_params(o);
    if (o.n < 0) throw DomainError("-n must be >= 0");
    const auto n_max = static_cast<std::size_t>(o.n);

    SequenceTable table(prm);
    table.extend_to(n_max);
    const SequencePair fast = fast_pair(prm, n_max);
    if (fast.u != table.u(n_max) || fast.w != table.w(n_max)) {
        throw ConsistencyError("fast doubling disagrees with iteration at n=" +
                               std::to_string(n_max));
    }

    Outcome out;
    out.doc.command = "seq";
    out.doc.params = params_json(prm);
    out.doc.params["n_max"] = o.n;
    out.doc.columns = {"n", "u", "w"};
    for (std::size_t n = 0; n <= n_max; ++n) {
        out.doc.records.push_back(
            Json{{"n", n}, {"u", to_string(table.u(n))}, {"w", to_string(table.w(n))}});
    }
    return out;
}

Json poly_record(std::string kind, const RationalPoly& poly) {
    return Json{{"kind", std::move(kind)},
                {"degree", poly.degree()},
                {"coefficients", coefficients_json(poly)},
                {"polynomial", poly.to_string()}};
}

Outcome cmd_phi(const Options& o) {
    const RecurrenceParams prm = read_params(o);
    if (o.n < 0) throw DomainError("-n must be >= 0");
    const RationalPoly product = phi_product(prm, o.n);
    const RationalPoly formula = phi_coeff_formula(prm, o.n);
    if (product != formula) {
        throw ConsistencyError("root product " + product.to_string() +
                               " disagrees with coefficient formula " + formula.to_string());
    }

    Outcome out;
    out.doc.command = "phi";
    out.doc.params = params_json(prm);
    out.doc.params["n"] = o.n;
    out.doc.params["factor"] = o.factor;
    out.doc.columns = {"kind", "degree", "coefficients", "polynomial", "sign", "note"};
    out.doc.records.push_back(poly_record("phi", product));
    if (!o.factor) return out;

    const GaloisClassification galois = classify_galois(prm);
    Json field{{"kind", "splitting_field"}};
    field["note"] = galois.variant == GaloisVariant::Z2
                        ? "Q(sqrt(" + to_string(galois.d) + ")), Galois group Z2"
                        : (galois.variant == GaloisVariant::Trivial
                               ? std::string("Q, Galois group trivial")
                               : std::string("Q, degenerate (p^2 - 4q = 0)"));
    out.doc.records.push_back(std::move(field));

    if (o.n >= 1) {
        const RationalPoly f = quadratic_factor(prm, o.n);
        Json record = poly_record("quadratic_factor", f);
        const Rational disc = f.coefficient(1) * f.coefficient(1) - 4 * f.coefficient(0);
        const bool divides = divmod(product, f).remainder.is_zero();
        if (disc == 0) {
            record["note"] = divides ? "sigma^n = tau^n; divides Phi_n"
                                     : "sigma^n = tau^n; does not divide Phi_n";
        } else if (divides) {
            record["note"] = "divides Phi_n";
        } else {
            throw ConsistencyError("x^2 - w_n x + q^n does not divide Phi_n");
        }
        out.doc.records.push_back(std::move(record));
    }

    if (prm == RecurrenceParams::fibonacci() && o.n >= 2) {
        const FibonacciFactorization fib = fibonacci_factorization(o.n);
        const int printed = o.n % 2 == 0 ? 1 : -1;
        const bool printed_holds = fibonacci_factorization_holds(o.n, printed);
        Json quad = poly_record("fibonacci_quadratic", fib.quadratic);
        Json tail = poly_record("fibonacci_tail", fib.tail);
        tail["sign"] = fib.sign;
        tail["note"] = "Phi_n(1,-1,x) = " + std::to_string(fib.sign) +
                       " * quadratic * Phi_(n-2)(1,-1,-x); printed prefactor (-1)^n = " +
                       std::to_string(printed) + (printed_holds ? " holds" : " does not hold");
        out.doc.records.push_back(std::move(quad));
        out.doc.records.push_back(std::move(tail));
    }
    return out;
}

Outcome cmd_binom(const Options& o) {
    const RecurrenceParams prm = read_params(o);
    if (o.r < 0 || o.k < 0 || o.k > o.r) {
        throw DomainError("binom needs 0 <= k <= r (got r=" + std::to_string(o.r) +
                          ", k=" + std::to_string(o.k) + ")");
    }
    const Rational value = generalized_binomial(prm, o.r, o.k);
    const auto quotient = generalized_binomial_quotient(prm, o.r, o.k);
    if (quotient && *quotient != value) {
        throw ConsistencyError("F(r,k,sigma,tau) = " + to_string(value) +
                               " disagrees with the u-quotient " + to_string(*quotient));
    }

    Outcome out;
    out.doc.command = "binom";
    out.doc.params = params_json(prm);
    out.doc.params["r"] = o.r;
    out.doc.params["k"] = o.k;
    out.doc.columns = {"r", "k", "value", "quotient"};
    out.doc.records.push_back(Json{{"r", o.r},
                                   {"k", o.k},
                                   {"value", to_string(value)},
                                   {"quotient", quotient ? Json(to_string(*quotient)) : Json()}});
    return out;
}

Outcome cmd_gauss(const Options& o) {
    if (o.m < 0 || o.k < 0 || o.k > o.m) {
        throw DomainError("gauss needs 0 <= k <= m (got m=" + std::to_string(o.m) +
                          ", k=" + std::to_string(o.k) + ")");
    }
    const UniPoly gauss = gaussian_binomial(o.m, o.k);

    Outcome out;
    out.doc.command = "gauss";
    out.doc.params = Json{{"m", o.m}, {"k", o.k}, {"cyclotomic", o.cyclotomic}};
    out.doc.columns = {"kind", "d", "exponent", "coefficients", "polynomial"};
    out.doc.records.push_back(Json{{"kind", "gaussian"},
                                   {"coefficients", coefficients_json(gauss)},
                                   {"polynomial", gauss.to_string('z')}});
    if (!o.cyclotomic) return out;

    const auto factors = gaussian_cyclotomic_factorization(o.m, o.k);
    if (expand_cyclotomic_product(factors) != gauss) {
        throw ConsistencyError("cyclotomic product does not reproduce the Gaussian binomial");
    }
    for (const auto& f : factors) {
        const UniPoly phi = cyclotomic_poly(f.d);
        out.doc.records.push_back(Json{{"kind", "cyclotomic_factor"},
                                       {"d", f.d},
                                       {"exponent", f.exponent},
                                       {"coefficients", coefficients_json(phi)},
                                       {"polynomial", phi.to_string('z')}});
    }
    return out;
}

Json range_json(const RationalRange& range) {
    return Json{{"lo", to_string(range.lo)}, {"hi", to_string(range.hi)},
                {"step", to_string(range.step)}};
}

Outcome cmd_verify(const Options& o) {
    GridSpec grid;
    grid.p_range = parse_range(o.p_range);
    grid.q_range = parse_range(o.q_range);
    grid.n_max = o.n_max;
    grid.a_max = o.a_max;
    grid.validate();
    const std::set<std::string> ids = parse_identity_ids(o.identities);

    const auto reports = run_grid(grid, ids, std::max(1U, o.jobs));

    Outcome out;
    out.doc.command = "verify";
    out.doc.params = Json{{"p_range", range_json(grid.p_range)},
                          {"q_range", range_json(grid.q_range)},
                          {"n_max", grid.n_max},
                          {"a_max", grid.a_max},
                          {"identities", Json(std::vector<std::string>(ids.begin(), ids.end()))},
                          {"strict_diagnostics", o.strict_diagnostics}};
    out.doc.columns = {"identity", "diagnostic",       "scope",            "p",
                       "q",        "n_min",            "n_max",            "a_min",
                       "a_max",    "status",           "checked",          "skipped",
                       "counterexample.n", "counterexample.a", "counterexample.lhs",
                       "counterexample.rhs", "note"};

    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
    std::size_t diagnostic_failures = 0;
    for (const auto& r : reports) {
        const RecurrenceParams prm = r.params.value_or(RecurrenceParams::fibonacci());
        Json record{{"identity", r.identity_id},
                    {"diagnostic", r.diagnostic},
                    {"scope", r.params ? "params" : "fibonacci"},
                    {"p", to_string(prm.p)},
                    {"q", to_string(prm.q)},
                    {"n_min", r.n_range.min},
                    {"n_max", r.n_range.max},
                    {"a_min", r.a_range ? Json(r.a_range->min) : Json()},
                    {"a_max", r.a_range ? Json(r.a_range->max) : Json()},
                    {"status", to_string(r.status)},
                    {"checked", r.checked},
                    {"skipped", r.skipped}};
        if (r.first_counterexample) {
            const auto& cx = *r.first_counterexample;
            record["counterexample"] = Json{{"n", cx.n},
                                            {"a", cx.a ? Json(*cx.a) : Json()},
                                            {"lhs", cx.lhs},
                                            {"rhs", cx.rhs}};
        } else {
            record["counterexample"] = nullptr;
        }
        record["note"] = r.note;
        out.doc.records.push_back(std::move(record));

        switch (r.status) {
            case Status::pass: ++pass; break;
            case Status::skipped: ++skipped; break;
            case Status::fail:
                if (r.diagnostic) ++diagnostic_failures;
                else ++fail;
                break;
        }
    }
    out.doc.summary = Json{{"cells", reports.size()},
                           {"pass", pass},
                           {"fail", fail},
                           {"diagnostic_failures", diagnostic_failures},
                           {"skipped", skipped}};
    if (fail > 0 || (o.strict_diagnostics && diagnostic_failures > 0)) {
        out.exit_code = kIdentityFailure;
    }
    return out;
}

Outcome cmd_list() {
    Outcome out;
    out.doc.command = "list";
    out.doc.columns = {"identity", "scope", "diagnostic", "summary"};
    for (const auto& info : identity_catalog()) {
        out.doc.records.push_back(
            Json{{"identity", info.id},
                 {"scope", info.scope == IdentityScope::fibonacci ? "fibonacci" : "params"},
                 {"diagnostic", is_diagnostic(info.id)},
                 {"summary", info.summary}});
    }
    return out;
}

Json run_metadata() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return Json{{"generated_at", stamp}, {"version", TRIREC_VERSION}};
}

// --- config file ------------------------------------------------------------

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    s = s.substr(first, last - first + 1);
    if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read config file '" + path + "'");
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        const std::string body = trim(line);
        if (body.empty() || body.front() == '#' || body.front() == ';') continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": expected key = value");
        }
        std::string key = trim(body.substr(0, eq));
        std::replace(key.begin(), key.end(), '_', '-');
        entries.emplace_back(std::move(key), trim(body.substr(eq + 1)));
    }
    return entries;
}

/// Extra tokens for config entries whose option was not given on the command
/// line.
std::vector<std::string> config_tokens(const std::string& path, CLI::App& sub) {
    std::vector<std::string> tokens;
    for (const auto& [key, value] : read_config(path)) {
        const std::string name = key.size() == 1 ? "-" + key : "--" + key;
        CLI::Option* opt = sub.get_option_no_throw(name);
        if (opt == nullptr) {
            throw ParseError("config key '" + key + "' is not an option of '" + sub.get_name() + "'");
        }
        if (opt->count() > 0) continue;
        if (opt->get_expected_min() == 0) {
            if (value == "true" || value == "1" || value == "yes") tokens.push_back(name);
            else if (value != "false" && value != "0" && value != "no") {
                throw ParseError("config flag '" + key + "' needs true or false");
            }
            continue;
        }
        tokens.push_back(name);
        tokens.push_back(value);
    }
    return tokens;
}

void add_output_options(CLI::App& sub, Options& o) {
    sub.add_option("--format", o.format, "Output format: plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    sub.add_flag("--timestamps", o.timestamps, "Add run metadata outside the data records");
}

void add_param_options(CLI::App& sub, Options& o) {
    sub.add_option("-p", o.p, "Recurrence parameter p (integer or a/b)");
    sub.add_option("-q", o.q, "Recurrence parameter q (integer or a/b)");
}

int parse_args(CLI::App& app, const std::vector<std::string>& args) {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact sequences, binomials and identity checks for u_r = p u_(r-1) - q u_(r-2)",
                 "trirec"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--config", o.config, "key = value file mirroring the flags (flags win)");
    app.set_version_flag("--version", TRIREC_VERSION);

    CLI::App* seq = app.add_subcommand("seq", "Table of n, u_n, w_n for 0 <= n <= N");
    add_param_options(*seq, o);
    seq->add_option("-n,--n-max", o.n, "Largest index N");
    add_output_options(*seq, o);

    CLI::App* phi = app.add_subcommand("phi", "Coefficients of Phi_n(p, q, x), ascending");
    add_param_options(*phi, o);
    phi->add_option("-n", o.n, "Power n (Phi_n has degree n + 1)");
    phi->add_flag("--factor", o.factor, "Also print f_n(x) and, for p=1 q=-1, the Fibonacci split");
    add_output_options(*phi, o);

    CLI::App* binom = app.add_subcommand("binom", "Generalized binomial coefficient (r|k)_u");
    add_param_options(*binom, o);
    binom->add_option("-r", o.r, "Top index r")->required();
    binom->add_option("-k", o.k, "Bottom index k")->required();
    add_output_options(*binom, o);

    CLI::App* gauss = app.add_subcommand("gauss", "Gaussian binomial polynomial [m choose k]_z");
    gauss->add_option("-m", o.m, "Top index m")->required();
    gauss->add_option("-k", o.k, "Bottom index k")->required();
    gauss->add_flag("--cyclotomic", o.cyclotomic, "Also list its cyclotomic factors (d, e_d)");
    add_output_options(*gauss, o);

    CLI::App* verify = app.add_subcommand("verify", "Sweep identities over a parameter grid");
    verify->add_option("--p-range", o.p_range, "lo:hi[:step] for p");
    verify->add_option("--q-range", o.q_range, "lo:hi[:step] for q");
    verify->add_option("--n-max", o.n_max, "Largest index n");
    verify->add_option("--a-max", o.a_max, "Largest shift a (two-index identities)");
    verify->add_option("--identities", o.identities, "Comma-separated ids, or 'all'");
    verify->add_flag("--strict-diagnostics", o.strict_diagnostics,
                     "Let failing *_paper_sign / *_paper_form diagnostics set exit code 1");
    verify->add_option("--jobs", o.jobs, "Worker threads");
    add_output_options(*verify, o);

    CLI::App* list = app.add_subcommand("list", "List identity ids");
    add_output_options(*list, o);

    try {
        parse_args(app, args);
        if (!o.config.empty()) {
            CLI::App* selected = app.get_subcommands().front();
            std::vector<std::string> merged = args;
            const auto extra = config_tokens(o.config, *selected);
            merged.insert(merged.end(), extra.begin(), extra.end());
            app.clear();
            o = Options{};
            parse_args(app, merged);
        }
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::CallForVersion& e) {
        out << TRIREC_VERSION << '\n';
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        const OutputFormat format = parse_format(o.format);
        Outcome outcome;
        if (seq->parsed()) outcome = cmd_seq(o);
        else if (phi->parsed()) outcome = cmd_phi(o);
        else if (binom->parsed()) outcome = cmd_binom(o);
        else if (gauss->parsed()) outcome = cmd_gauss(o);
        else if (verify->parsed()) outcome = cmd_verify(o);
        else outcome = cmd_list();
        if (o.timestamps) outcome.doc.meta = run_metadata();
        out << render(outcome.doc, format);
        return outcome.exit_code;
    } catch (const ConsistencyError& e) {
        err << "internal cross-check failed: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace trirec::cli
