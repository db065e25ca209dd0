#include "trirec/errors.hpp"
#include "trirec/quadfield.hpp"
#include "trirec/sequences.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace trirec;

namespace {

const QuadContext kSqrt5(Integer(5));

QuadExt q5(long a_num, long a_den, long b_num, long b_den) {
    return QuadExt(make_rational(a_num, a_den), make_rational(b_num, b_den), kSqrt5);
}

QuadExt random_element(std::mt19937_64& rng, const QuadContext& ctx) {
    return QuadExt(oracle::random_rational(rng, 20, 6), oracle::random_rational(rng, 20, 6), ctx);
}

}  // namespace

TEST(QuadExt, ArithmeticExamples) {
    EXPECT_EQ(q5(1, 1, 1, 1) * q5(1, 1, -1, 1), q5(-4, 1, 0, 1));
    EXPECT_EQ(pow(q5(0, 1, 1, 1), 2), q5(5, 1, 0, 1));
    EXPECT_EQ(q5(1, 2, 1, 2) + q5(1, 2, -1, 2), QuadExt::one(kSqrt5));
    EXPECT_EQ(q5(3, 1, 2, 1) - q5(3, 1, 2, 1), QuadExt::zero(kSqrt5));
    EXPECT_EQ(-q5(1, 1, 1, 1), q5(-1, 1, -1, 1));
}

TEST(QuadExt, ContextMismatchThrows) {
    const QuadExt a = q5(1, 1, 1, 1);
    const QuadExt b(Rational(1), Rational(1), QuadContext(Integer(2)));
    EXPECT_THROW(a + b, ContextMismatch);
    EXPECT_THROW(a * b, ContextMismatch);
    EXPECT_THROW((void)(a == b), ContextMismatch);
}

TEST(QuadContext, RejectsNonSquarefreeRadicand) {
    EXPECT_THROW(QuadContext(Integer(12)), DomainError);
    EXPECT_THROW(QuadContext(Integer(0)), DomainError);
    EXPECT_NO_THROW(QuadContext(Integer(-1)));
    EXPECT_NO_THROW(QuadContext(Integer(-15)));
}

TEST(QuadExt, RationalFieldFoldsRadical) {
    const QuadExt x(Rational(2), Rational(3), QuadContext::rational());
    EXPECT_EQ(x.a(), 5);
    EXPECT_EQ(x.b(), 0);
    EXPECT_EQ(is_rational(x), Rational(5));
}

TEST(QuadExt, ConjugateNormTrace) {
    const RootPair roots = make_roots(RecurrenceParams::fibonacci());
    EXPECT_EQ(conjugate(roots.sigma), roots.tau);
    EXPECT_EQ(norm(roots.sigma), -1);
    EXPECT_EQ(trace(roots.sigma), 1);
    const QuadExt x = q5(3, 7, -2, 9);
    EXPECT_EQ(conjugate(conjugate(x)), x);
}

TEST(QuadExt, PowEdgeCases) {
    const RootPair roots = make_roots(RecurrenceParams::fibonacci());
    // ((1 + sqrt5)/2)^2 = (1 + 2 sqrt5 + 5)/4 = (3 + sqrt5)/2
    EXPECT_EQ(pow(roots.sigma, 2), q5(3, 2, 1, 2));
    EXPECT_EQ(pow(roots.sigma, 0), QuadExt::one(kSqrt5));
    EXPECT_EQ(pow(roots.sigma, 1), roots.sigma);
}

TEST(QuadExt, Inverse) {
    EXPECT_EQ(inv(q5(0, 1, 1, 1)), q5(0, 1, 1, 5));
    EXPECT_EQ(inv(QuadExt::one(kSqrt5)), QuadExt::one(kSqrt5));
    const RootPair roots = make_roots(RecurrenceParams::fibonacci());
    EXPECT_EQ(inv(roots.sigma), -roots.tau);  // sigma tau = -1
    EXPECT_THROW(inv(QuadExt::zero(kSqrt5)), DegenerateError);
}

TEST(MakeRoots, Examples) {
    const RootPair fib = make_roots(RecurrenceParams::fibonacci());
    EXPECT_EQ(fib.sigma, q5(1, 2, 1, 2));
    EXPECT_EQ(fib.tau, q5(1, 2, -1, 2));

    const RootPair split = make_roots({Rational(3), Rational(2)});
    EXPECT_EQ(split.sigma.context().d(), 1);
    EXPECT_EQ(is_rational(split.sigma), Rational(2));
    EXPECT_EQ(is_rational(split.tau), Rational(1));

    const RootPair doubled = make_roots({Rational(2), Rational(1)});
    EXPECT_EQ(is_rational(doubled.sigma), Rational(1));
    EXPECT_EQ(is_rational(doubled.tau), Rational(1));
}

TEST(MakeRoots, IsRationalOnSymmetricExpressions) {
    const auto params = RecurrenceParams::fibonacci();
    const RootPair roots = make_roots(params);
    EXPECT_EQ(is_rational(roots.sigma + roots.tau), params.p);
    EXPECT_EQ(is_rational(roots.sigma * roots.tau), params.q);
    EXPECT_FALSE(is_rational(roots.sigma).has_value());
}

TEST(MakeRoots, RootsSatisfyCharacteristicEquationOnGrid) {
    for (long p = -6; p <= 6; ++p) {
        for (long q = -6; q <= 6; ++q) {
            const RecurrenceParams params{Rational(p), Rational(q)};
            const RootPair roots = make_roots(params);
            for (const QuadExt& r : {roots.sigma, roots.tau}) {
                EXPECT_TRUE((r * r - params.p * r + QuadExt(params.q, r.context())).is_zero())
                    << to_string(params);
            }
            EXPECT_EQ(is_rational(roots.sigma + roots.tau), params.p);
            EXPECT_EQ(is_rational(roots.sigma * roots.tau), params.q);
        }
    }
}

TEST(MakeRoots, RationalParameters) {
    const RecurrenceParams params{make_rational(1, 3), make_rational(-5, 7)};
    const RootPair roots = make_roots(params);
    EXPECT_EQ(is_rational(roots.sigma + roots.tau), params.p);
    EXPECT_EQ(is_rational(roots.sigma * roots.tau), params.q);
}

TEST(QuadExtProperties, NormMultiplicativeTraceAdditive) {
    std::mt19937_64 rng(42);
    for (long d : {5L, 2L, -1L, -7L, 30L}) {
        const QuadContext ctx{Integer(d)};
        for (int i = 0; i < 300; ++i) {
            const QuadExt x = random_element(rng, ctx);
            const QuadExt y = random_element(rng, ctx);
            EXPECT_EQ(norm(x * y), norm(x) * norm(y));
            EXPECT_EQ(trace(x + y), trace(x) + trace(y));
            EXPECT_EQ(conjugate(x * y), conjugate(x) * conjugate(y));
            EXPECT_EQ(conjugate(x + y), conjugate(x) + conjugate(y));
            if (!x.is_zero()) EXPECT_EQ(x * inv(x), QuadExt::one(ctx));
        }
    }
}

TEST(QuadExtProperties, PowerLaw) {
    std::mt19937_64 rng(5);
    const QuadContext ctx{Integer(13)};
    std::uniform_int_distribution<std::uint64_t> exp(0, 64);
    for (int i = 0; i < 60; ++i) {
        const QuadExt x = random_element(rng, ctx);
        const std::uint64_t m = exp(rng);
        const std::uint64_t n = exp(rng);
        EXPECT_EQ(pow(x, m + n), pow(x, m) * pow(x, n));
    }
}
