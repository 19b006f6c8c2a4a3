#include <gtest/gtest.h>

#include "adjoint/errors.hpp"
#include "adjoint/gs_series.hpp"

using namespace adjoint;

TEST(Rational, ParseAndFormat)
{
    EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
    EXPECT_EQ(parse_rational("-2"), Rational(-2));
    EXPECT_EQ(format_rational(Rational(6, 8)), "3/4");
    EXPECT_EQ(format_rational(Rational(4, 2)), "2");
    EXPECT_THROW(parse_rational("1/0"), UsageError);
    EXPECT_THROW(parse_rational("0.75"), UsageError);
    EXPECT_THROW(parse_rational(""), UsageError);
    EXPECT_EQ(format_decimal(Rational(-1, 8), 2), "-0.13");
    EXPECT_EQ(format_decimal(Rational(2, 3), 4), "0.6667");
    EXPECT_EQ(format_decimal(Rational(5), 1), "5.0");
}

TEST(Census, CountsBelowDegreeTwoMustVanish)
{
    GeneratorCensus c;
    EXPECT_THROW(c.set_count(1, 1), UsageError);
    EXPECT_NO_THROW(c.set_count(1, 0));
    c.add_count(3, 2);
    c.add_count(3, 1);
    EXPECT_EQ(c.count(3), 3);
    c.add_tail(FromDegreeTail{1, 5});
    EXPECT_EQ(c.total_count(6), 1);
    EXPECT_EQ(c.total_count(3), 3);
}

TEST(FEval, Examples)
{
    EXPECT_EQ(f_eval(GeneratorCensus{}, Rational(1, 2)), 0);
    GeneratorCensus square;
    square.set_count(2, 1);
    for (const Rational& t : {Rational(1, 3), Rational(1, 2), Rational(9, 10)})
        EXPECT_EQ(f_eval(square, t), (1 - t) * (1 - t));
    EXPECT_THROW(f_eval(square, Rational(1)), DomainError);
    EXPECT_THROW(f_eval(square, Rational(0)), DomainError);
}

TEST(FEval, AnalyticCensusAtThreeQuarters)
{
    const GeneratorCensus census = paper_bound_census();
    const Rational tau(3, 4);
    EXPECT_EQ(tail_value(census.tails()[0], tau), Rational(2187, 6005));
    EXPECT_EQ(tail_value(census.tails()[1], tau), Rational(4782969, 67108864));
    const Rational f = f_eval(census, tau);
    EXPECT_EQ(f, Rational(BigInt(-26005549747LL), BigInt(402988728320LL)));
    EXPECT_LT(f, 0);
    EXPECT_EQ(format_decimal(f, 4), "-0.0645");
}

TEST(Tails, ConvergenceAndCounts)
{
    const GeometricTail j{1, 2, 7, 1};
    EXPECT_TRUE(tail_converges(j, Rational(3, 4)));
    // 2τ^7 >= 1 once τ >= 2^{-1/7} ≈ 0.9057.
    EXPECT_FALSE(tail_converges(j, Rational(19, 20)));
    EXPECT_THROW(tail_value(j, Rational(19, 20)), DomainError);
    EXPECT_EQ(tail_count(j, 14), 4);
    EXPECT_EQ(tail_count(j, 15), 0);
    EXPECT_EQ(tail_count(FromDegreeTail{1, 14}, 13), 0);
    EXPECT_EQ(tail_count(FromDegreeTail{1, 14}, 14), 1);

    GeneratorCensus c;
    c.add_tail(j);
    const GeneratorCensus expanded = expand_tails(c, 21);
    EXPECT_TRUE(expanded.tails().empty());
    EXPECT_EQ(expanded.count(7), 2);
    EXPECT_EQ(expanded.count(21), 8);
}

TEST(WitnessSearch, Examples)
{
    EXPECT_EQ(witness_search(paper_bound_census(), 4), Rational(3, 4));
    GeneratorCensus square;
    square.set_count(2, 1);
    EXPECT_FALSE(witness_search(square, 4).has_value());
    EXPECT_FALSE(witness_search(square, 97).has_value());
    EXPECT_EQ(witness_search(GeneratorCensus{}, 4), Rational(3, 4));
    EXPECT_EQ(witness_search(GeneratorCensus{}, 10), Rational(3, 5));
    EXPECT_THROW(witness_search(GeneratorCensus{}, 1), UsageError);
}

TEST(RecursionCheck, Examples)
{
    std::vector<std::uint64_t> free_dims;
    for (int n = 0; n <= 12; ++n)
        free_dims.push_back(std::uint64_t{1} << n);
    EXPECT_TRUE(gs_recursion_check(free_dims, GeneratorCensus{}).holds);

    const auto bad = gs_recursion_check({1, 2, 3}, GeneratorCensus{});
    EXPECT_FALSE(bad.holds);
    EXPECT_EQ(bad.first_violation, 2);
    EXPECT_EQ(bad.lower_bounds[2], 4);

    GeneratorCensus c;
    c.set_count(2, 1);
    // F<x,y>/(x^2) has Fibonacci dimensions, well above 2b_{n-1} - b_{n-2}.
    EXPECT_TRUE(gs_recursion_check({1, 2, 3, 5, 8, 13}, c).holds);

    GeneratorCensus beyond;
    beyond.set_count(9, 1);
    EXPECT_THROW(gs_recursion_check({1, 2, 4}, beyond), UsageError);
}
