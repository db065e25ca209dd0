#include "trirec/charpoly.hpp"
#include "trirec/errors.hpp"

#include <gtest/gtest.h>

using namespace trirec;

namespace {

RationalPoly rpoly(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return RationalPoly(std::move(c));
}

RecurrenceParams params(long p, long q) { return {Rational(p), Rational(q)}; }

}  // namespace

TEST(PhiProduct, Examples) {
    for (long p = -3; p <= 3; ++p) {
        for (long q = -3; q <= 3; ++q) {
            EXPECT_EQ(phi_product(params(p, q), 1), rpoly({q, -p, 1}));
            EXPECT_EQ(phi_product(params(p, q), 0), rpoly({-1, 1}));
        }
    }
    // (x^2 - 3x + 1)(x + 1)
    EXPECT_EQ(phi_product(RecurrenceParams::fibonacci(), 2), rpoly({1, -2, -2, 1}));
    EXPECT_THROW(phi_product(RecurrenceParams::fibonacci(), -1), DomainError);
}

TEST(PhiCoeffFormula, Examples) {
    EXPECT_EQ(phi_coeff_formula(params(4, -7), 1), rpoly({-7, -4, 1}));
    EXPECT_EQ(phi_coeff_formula(RecurrenceParams::fibonacci(), 2), rpoly({1, -2, -2, 1}));
    EXPECT_EQ(phi_coeff_formula(params(2, 9), 0), rpoly({-1, 1}));
}

TEST(PhiCoeffFormula, EqualsProductOnGrid) {
    for (long p = -5; p <= 5; ++p) {
        for (long q = -5; q <= 5; ++q) {
            for (long n = 0; n <= 10; ++n) {
                const RationalPoly product = phi_product(params(p, q), n);
                ASSERT_EQ(product.degree(), n + 1);
                ASSERT_TRUE(product.is_monic());
                EXPECT_EQ(product, phi_coeff_formula(params(p, q), n)) << p << "," << q << " n=" << n;
            }
        }
    }
}

TEST(PhiCoeffFormula, RationalParams) {
    const RecurrenceParams prm{make_rational(2, 3), make_rational(-1, 4)};
    for (long n = 0; n <= 7; ++n) EXPECT_EQ(phi_product(prm, n), phi_coeff_formula(prm, n));
}

TEST(PhiProduct, RootsVanish) {
    for (long p = -4; p <= 4; ++p) {
        for (long q = -4; q <= 4; ++q) {
            for (long n = 0; n <= 8; ++n) {
                const RationalPoly phi = phi_product(params(p, q), n);
                for (const QuadExt& root : phi_roots(params(p, q), n)) {
                    EXPECT_TRUE(phi.evaluate(root, QuadExt::zero(root.context())).is_zero());
                }
            }
        }
    }
}

TEST(QuadraticFactor, Examples) {
    const auto fib = RecurrenceParams::fibonacci();
    const RationalPoly f2 = quadratic_factor(fib, 2);
    EXPECT_EQ(f2, rpoly({1, -3, 1}));
    EXPECT_EQ(poly_divexact(phi_product(fib, 2), f2), rpoly({1, 1}));
    EXPECT_EQ(quadratic_factor(params(5, 3), 1), phi_product(params(5, 3), 1));
    EXPECT_EQ(quadratic_factor(fib, 4), rpoly({1, -7, 1}));
    EXPECT_THROW(quadratic_factor(fib, 0), DomainError);
}

TEST(QuadraticFactor, DiscriminantIsUSquaredTimesD) {
    for (long p = -5; p <= 5; ++p) {
        for (long q = -5; q <= 5; ++q) {
            const RecurrenceParams prm = params(p, q);
            for (long n = 1; n <= 12; ++n) {
                const RationalPoly f = quadratic_factor(prm, n);
                const Rational disc = f.coefficient(1) * f.coefficient(1) - 4 * f.coefficient(0);
                const Rational u = u_iter(prm, static_cast<std::uint64_t>(n));
                EXPECT_EQ(disc, u * u * prm.discriminant());
            }
        }
    }
}

TEST(QuadraticFactor, DividesPhiWhenRootsDiffer) {
    for (long p = -5; p <= 5; ++p) {
        for (long q = -5; q <= 5; ++q) {
            const RecurrenceParams prm = params(p, q);
            const RootPair roots = make_roots(prm);
            for (long n = 1; n <= 10; ++n) {
                if (pow(roots.sigma, n) == pow(roots.tau, n)) continue;
                const auto division = divmod(phi_product(prm, n), quadratic_factor(prm, n));
                EXPECT_TRUE(division.remainder.is_zero()) << p << "," << q << " n=" << n;
            }
        }
    }
}

TEST(FibonacciFactorization, Examples) {
    const auto two = fibonacci_factorization(2);
    EXPECT_EQ(two.tail, rpoly({-1, -1}));
    EXPECT_EQ(two.sign, -1);

    const auto three = fibonacci_factorization(3);
    EXPECT_EQ(three.quadratic, rpoly({-1, -4, 1}));
    EXPECT_EQ(three.tail, rpoly({-1, 1, 1}));
    EXPECT_EQ(three.sign, 1);

    EXPECT_THROW(fibonacci_factorization(1), DomainError);
}

TEST(FibonacciFactorization, SignIsMinusOneToNMinusOne) {
    for (long n = 2; n <= 12; ++n) {
        const auto result = fibonacci_factorization(n);
        const int expected = (n - 1) % 2 == 0 ? 1 : -1;
        EXPECT_EQ(result.sign, expected) << n;
        // The tail's leading coefficient is (-1)^(n-1); monicity pins the sign.
        EXPECT_EQ(result.tail.leading(), expected);
        EXPECT_TRUE(fibonacci_factorization_holds(n, expected));
        EXPECT_FALSE(fibonacci_factorization_holds(n, -expected));
    }
}

TEST(Galois, Classification) {
    const auto fib = classify_galois(RecurrenceParams::fibonacci());
    EXPECT_EQ(fib.variant, GaloisVariant::Z2);
    EXPECT_EQ(fib.d, 5);
    EXPECT_EQ(classify_galois(params(3, 2)).variant, GaloisVariant::Trivial);
    EXPECT_EQ(classify_galois(params(2, 1)).variant, GaloisVariant::Degenerate);
    const auto negative = classify_galois(params(1, 1));
    EXPECT_EQ(negative.variant, GaloisVariant::Z2);
    EXPECT_EQ(negative.d, -3);
    EXPECT_EQ(classify_galois({make_rational(1, 2), make_rational(-3, 16)}).variant,
              GaloisVariant::Trivial);  // D = 1/4 + 3/4 = 1
}

TEST(Galois, Z2ImpliesIrreducibleQuadraticFactor) {
    for (long p = -5; p <= 5; ++p) {
        for (long q = -5; q <= 5; ++q) {
            const RecurrenceParams prm = params(p, q);
            if (classify_galois(prm).variant != GaloisVariant::Z2) continue;
            for (long n = 1; n <= 10; ++n) {
                const RationalPoly f = quadratic_factor(prm, n);
                const Rational disc = f.coefficient(1) * f.coefficient(1) - 4 * f.coefficient(0);
                if (disc == 0) continue;
                // A monic rational quadratic is irreducible iff its discriminant is not a square.
                EXPECT_FALSE(is_rational_square(disc).has_value()) << p << "," << q << " n=" << n;
                EXPECT_TRUE(divmod(phi_product(prm, n), f).remainder.is_zero());
            }
        }
    }
}

TEST(PolyOps, Examples) {
    EXPECT_EQ(poly_mul(rpoly({1, -3, 1}), rpoly({1, 1})), rpoly({1, -2, -2, 1}));
    EXPECT_EQ(poly_compose_negate(rpoly({-1, -1, 1})), rpoly({-1, 1, 1}));
    EXPECT_EQ(poly_divexact(rpoly({-1, 0, 1}), rpoly({-1, 1})), rpoly({1, 1}));
    EXPECT_THROW(poly_divexact(rpoly({1, 0, 1}), rpoly({-1, 1})), InexactDivision);
    EXPECT_EQ(rpoly({1, -2, -2, 1}).to_string(), "x^3 - 2x^2 - 2x + 1");
}
