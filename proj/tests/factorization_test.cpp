#include <random>

#include <gtest/gtest.h>

#include "adjoint/errors.hpp"
#include "adjoint/factorization.hpp"
#include "adjoint/text.hpp"
#include "adjoint/verify/oracles.hpp"

using namespace adjoint;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

TruncatedPoly P(const std::string& text, int cap = 8, const PrimeField& f = F2)
{
    return parse_poly(text, f, cap);
}

// Π(1+h_i) == 1 + a + b, checked with the string-word oracle.
void expect_identity(const FactorizationTrace& t)
{
    using namespace verify;
    const auto& a = t.target;
    const NaivePoly rhs = naive_add(naive_add(naive_one(a.field().p(), a.cap()), naive_from(a)),
                                    naive_from(t.residual));
    EXPECT_EQ(naive_factor_product(t.factors, a.field().p(), a.cap()), rhs);
    for (const auto& h : t.factors)
        EXPECT_TRUE(h.is_homogeneous());
    EXPECT_EQ(t.residual_valuation, valuation(t.residual));
}

} // namespace

TEST(InitialFactorization, HomogeneousTargetIsExact)
{
    const auto t = initial_factorization(P("x"));
    ASSERT_EQ(t.factors.size(), 1U);
    EXPECT_EQ(t.factors[0], P("x"));
    EXPECT_TRUE(t.residual.is_zero());
    EXPECT_TRUE(t.residual_valuation.is_infinite());
}

TEST(InitialFactorization, SeedsOneFactorPerTerm)
{
    const auto t = initial_factorization(P("x + y"));
    ASSERT_EQ(t.factors.size(), 2U);
    EXPECT_EQ(t.factors[0], P("x"));
    EXPECT_EQ(t.factors[1], P("y"));
    EXPECT_EQ(t.residual, P("x*y"));
    EXPECT_EQ(t.residual_valuation, 2);
    expect_identity(t);
}

TEST(InitialFactorization, ZeroAndConstantInputs)
{
    const auto t = initial_factorization(TruncatedPoly(F2, 8));
    EXPECT_TRUE(t.factors.empty());
    EXPECT_TRUE(t.residual.is_zero());
    EXPECT_THROW(initial_factorization(P("1 + x")), UsageError);
}

TEST(CorrectionStep, FirstRoundForXPlusY)
{
    const auto t = correction_step(initial_factorization(P("x + y")));
    ASSERT_EQ(t.factors.size(), 3U);
    EXPECT_EQ(t.factors[2], P("x*y"));
    EXPECT_EQ(t.residual, P("x^2*y + y*x*y + x*y*x*y"));
    EXPECT_EQ(t.residual_valuation, 3);
    EXPECT_EQ(t.steps, 1);
    expect_identity(t);
}

TEST(CorrectionStep, PureResidualSquares)
{
    // a = 0 with residual b: the correction leaves -b^2.
    FactorizationTrace t = initial_factorization(TruncatedPoly(F3, 8));
    const auto b = P("x*y + 2*y*x", 8, F3);
    t.factors.push_back(b);
    t.residual = b;
    t.residual_valuation = valuation(b);
    const auto next = correction_step(t);
    EXPECT_EQ(next.residual, -(b * b));
    EXPECT_EQ(next.residual_valuation, 4);
}

TEST(CorrectionStep, ZeroResidualIsRejected)
{
    EXPECT_THROW(correction_step(initial_factorization(P("x"))), UsageError);
}

TEST(CorrectionStep, ValuationStrictlyIncreases)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const PrimeField& f = trial % 2 ? F3 : F2;
        std::vector<Term> terms;
        std::uniform_int_distribution<int> d(1, 3);
        std::uniform_int_distribution<Coeff> c(1, f.p() - 1);
        for (int k = 0; k < 4; ++k) {
            const int deg = d(rng);
            terms.push_back({Word::from_index(deg, rng() % (1U << deg)), c(rng)});
        }
        FactorizationTrace t =
            initial_factorization(TruncatedPoly::from_terms(f, 9, std::move(terms)));
        while (!t.residual.is_zero()) {
            const Valuation before = t.residual_valuation;
            t = correction_step(t);
            EXPECT_GT(t.residual_valuation, before);
        }
        expect_identity(t);
    }
}

TEST(FactorToValuation, ExactAtCapPlusOne)
{
    const auto t = factor_to_valuation(P("x + y", 6), 7);
    EXPECT_TRUE(t.residual.is_zero());
    EXPECT_EQ(t.steps, 5);
    EXPECT_EQ(factor_product(t), TruncatedPoly::constant(F2, 6, 1) + P("x + y", 6));
    expect_identity(t);
}

TEST(FactorToValuation, HomogeneousNeedsNoRounds)
{
    const auto t = factor_to_valuation(P("x"), 5);
    EXPECT_EQ(t.factors.size(), 1U);
    EXPECT_EQ(t.steps, 0);
}

TEST(FactorToValuation, XPlusXY)
{
    const auto t = factor_to_valuation(P("x + x*y"), 4);
    ASSERT_GE(t.factors.size(), 3U);
    EXPECT_EQ(t.factors[0], P("x"));
    EXPECT_EQ(t.factors[1], P("x*y"));
    EXPECT_EQ(t.factors[2], P("x^2*y"));
    EXPECT_GE(t.residual_valuation, 4);
    ASSERT_EQ(t.valuation_history.size(), 2U);
    EXPECT_EQ(t.valuation_history[0], 3);
    EXPECT_EQ(t.valuation_history[1], 4);
    expect_identity(t);
}

TEST(FactorToValuation, DegreeFourteenWindowAtCapSixteen)
{
    const auto t = factor_to_valuation(P("x + y", 16), 14);
    EXPECT_EQ(t.steps, 12);
    EXPECT_EQ(t.factors.size(), 84U);
    const auto parts = homogeneous_parts(t.residual);
    ASSERT_EQ(parts.size(), 3U);
    EXPECT_EQ(parts[0].degree, 14);
    EXPECT_EQ(parts[0].part.size(), 4096U);
    EXPECT_EQ(parts[1].part.size(), 2048U);
    EXPECT_EQ(parts[2].part.size(), 4096U);
    for (int k = 0; k < 13; ++k)
        EXPECT_EQ(t.valuation_history[static_cast<std::size_t>(k)], k + 2);
}

TEST(FactorToValuation, RejectsBadTargets)
{
    EXPECT_THROW(factor_to_valuation(P("x"), 0), UsageError);
    EXPECT_THROW(factor_to_valuation(P("x", 4), 6), UsageError);
    EXPECT_THROW(factor_to_valuation(P("1 + x"), 3), UsageError);
}

// (1+a+b)(1-b+c) expands to 1 + a + (c + ac + bc - ab - b^2): the correction
// identity behind each round, checked on random homogeneous pieces.
TEST(FactorToValuation, CorrectionIdentityClosedForm)
{
    std::mt19937_64 rng(23);
    const int cap = 8;
    for (int trial = 0; trial < 30; ++trial) {
        const PrimeField& f = trial % 2 ? F3 : F2;
        auto rand_hom = [&](int d) {
            std::vector<Term> terms;
            for (int k = 0; k < 3; ++k)
                terms.push_back({Word::from_index(d, rng() % (1U << d)),
                                 1 + Coeff(rng() % (f.p() - 1))});
            return TruncatedPoly::from_terms(f, cap, terms);
        };
        const auto one = TruncatedPoly::constant(f, cap, 1);
        const auto a = rand_hom(1);
        const auto b = rand_hom(2);
        const auto c = rand_hom(3);
        EXPECT_EQ((one + a + b) * (one - b + c),
                  one + a + (c + a * c + b * c - a * b - b * b));
        EXPECT_EQ((one + a + b) * (one - b), one + a - a * b - b * b);
    }
}
