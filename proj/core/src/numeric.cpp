#include "trirec/numeric.hpp"

#include "trirec/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

namespace trirec {
namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

struct SquareSplit {
    Integer root;        // product of p^(e/2)
    Integer squarefree;  // product of p with e odd
};

// n = root^2 * squarefree for n > 0.
SquareSplit split_square(Integer n, unsigned long bound) {
    SquareSplit out{1, 1};
    bound = std::min<unsigned long>(bound, std::numeric_limits<std::uint32_t>::max());

    auto strip = [&](unsigned long prime) {
        unsigned exponent = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), prime) != 0) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), prime);
            ++exponent;
        }
        if (exponent >= 2) {
            Integer factor;
            mpz_ui_pow_ui(factor.get_mpz_t(), prime, exponent / 2);
            out.root *= factor;
        }
        if (exponent % 2 == 1) out.squarefree *= prime;
    };

    bool exhausted = false;
    unsigned long prime = 2;
    while (true) {
        if (n == 1) {
            exhausted = true;
            break;
        }
        const unsigned long square = prime * prime;
        if (n < square) {
            exhausted = true;
            break;
        }
        if (prime > bound) break;
        strip(prime);
        prime += (prime == 2) ? 1 : 2;
    }

    if (n == 1) return out;
    if (exhausted) {
        out.squarefree *= n;  // n is prime
        return out;
    }

    // Every prime factor of n exceeds the bound.
    if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
        Integer root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        out.root *= root;
        return out;
    }
    Integer cube;
    mpz_ui_pow_ui(cube.get_mpz_t(), bound, 3);
    if (n < cube) {
        // At most two prime factors, and not a square, so squarefree.
        out.squarefree *= n;
        return out;
    }
    throw FactorizationIncomplete("squarefree part undetermined: cofactor " + n.get_str() +
                                  " has no prime factor <= " + std::to_string(bound));
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DegenerateError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw ParseError("not an exact rational (expected a or a/b): '" + std::string(text) + "'");
    }
    Integer num(std::string(num_text), 10);
    const Integer den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    if (negative) num = -num;
    return make_rational(num, den);
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer pow(const Integer& base, std::uint64_t exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return out;  // already canonical: powers of coprime parts stay coprime
}

SquarefreeDecomposition squarefree_decompose(const Rational& r, unsigned long trial_bound) {
    if (r == 0) throw DegenerateError("squarefree decomposition of zero");
    // num/den = num*den / den^2
    const Integer num = abs(r.get_num());
    const Integer& den = r.get_den();
    SquareSplit split = split_square(num * den, trial_bound);
    Integer d = sgn(r) < 0 ? Integer(-split.squarefree) : split.squarefree;
    return {std::move(d), make_rational(split.root, den)};
}

std::optional<Rational> is_rational_square(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0 ||
        mpz_perfect_square_p(r.get_den_mpz_t()) == 0) {
        return std::nullopt;
    }
    Rational root;
    mpz_sqrt(root.get_num_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(root.get_den_mpz_t(), r.get_den_mpz_t());
    return root;
}

}  // namespace trirec
