#include <random>

#include <gtest/gtest.h>

#include "adjoint/construction.hpp"
#include "adjoint/errors.hpp"
#include "adjoint/graded_ideal.hpp"
#include "adjoint/text.hpp"
#include "adjoint/verify/oracles.hpp"

using namespace adjoint;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

GradedIdeal ideal_of(std::initializer_list<const char*> gens, int cap, const PrimeField& f = F2)
{
    GradedIdeal ideal(f, cap);
    for (const char* g : gens)
        ideal.add(parse_poly(g, f, cap));
    return ideal;
}

} // namespace

TEST(GradedIdeal, RejectsBadGenerators)
{
    GradedIdeal ideal(F2, 4);
    EXPECT_THROW(ideal.add(parse_poly("x + x*y", F2, 4)), UsageError);
    EXPECT_THROW(ideal.add(TruncatedPoly(F2, 4)), UsageError);
    EXPECT_THROW(ideal.add(parse_poly("1", F2, 4)), UsageError);
    EXPECT_THROW(ideal.add(parse_poly("x", F2, 5)), UsageError);
    EXPECT_THROW(ideal.add(parse_poly("x", F3, 4)), UsageError);
    ideal.add(parse_poly("x*y", F2, 4));
    ideal.add(parse_poly("y*x", F2, 4)); // equal degrees are allowed
    EXPECT_EQ(ideal.generators().size(), 2U);
}

TEST(IdealComponentBasis, Examples)
{
    const auto ideal = ideal_of({"x^2"}, 4);
    EXPECT_EQ(ideal_component_basis(ideal, 2).rank(), 1U);
    const auto deg3 = ideal_component_basis(ideal, 3);
    EXPECT_EQ(deg3.rank(), 3U);
    const auto rows = deg3.rows();
    ASSERT_EQ(rows.size(), 3U);
    // Spanned by x^3, x^2y and yx^2.
    for (const char* w : {"x^3", "x^2*y", "y*x^2"})
        EXPECT_TRUE(deg3.reduce(parse_poly(w, F2, 4)).is_zero()) << w;
    EXPECT_FALSE(deg3.reduce(parse_poly("x*y*x", F2, 4)).is_zero());
    EXPECT_EQ(ideal_component_basis(GradedIdeal(F2, 4), 3).rank(), 0U);
}

TEST(IdealComponentBasis, IsReducedAndIdempotent)
{
    auto basis = ideal_component_basis(ideal_of({"x*y + y*x", "y^3"}, 6, F3), 5);
    EXPECT_TRUE(basis.is_reduced());
    const auto rows = basis.rows();
    basis.make_reduced();
    EXPECT_EQ(basis.rows(), rows);
    DegreeBasis again(F3, 6, 5);
    for (const auto& r : rows)
        again.insert(r);
    again.make_reduced();
    EXPECT_EQ(again.rows(), rows);
}

TEST(QuotientDimensions, Examples)
{
    const auto free_dims = quotient_dimensions(GradedIdeal(F2, 6)).dims;
    for (int n = 0; n <= 6; ++n)
        EXPECT_EQ(free_dims[static_cast<std::size_t>(n)], std::uint64_t{1} << n);

    const auto killed = quotient_dimensions(ideal_of({"x^2", "x*y", "y*x", "y^2"}, 5));
    EXPECT_EQ(killed.dims[1], 2U);
    for (int n = 2; n <= 5; ++n)
        EXPECT_EQ(killed.dims[static_cast<std::size_t>(n)], 0U);
    EXPECT_EQ(killed.ideal_ranks[3], 8U);

    // Words avoiding xx are counted by Fibonacci numbers.
    const auto fib = quotient_dimensions(ideal_of({"x^2"}, 8)).dims;
    EXPECT_EQ(fib, (std::vector<std::uint64_t>{1, 2, 3, 5, 8, 13, 21, 34, 55}));

    // Commutative quotient over F_3: b_n = n + 1.
    const auto comm = quotient_dimensions(ideal_of({"x*y - y*x"}, 6, F3)).dims;
    for (int n = 0; n <= 6; ++n)
        EXPECT_EQ(comm[static_cast<std::size_t>(n)], static_cast<std::uint64_t>(n + 1));
}

TEST(QuotientDimensions, ConstructionIdealAtCapTen)
{
    const auto state = run_construction(F2, 10, 100);
    const auto dims = quotient_dimensions(state.ideal()).dims;
    for (int n = 1; n <= 7; ++n)
        EXPECT_EQ(dims[static_cast<std::size_t>(n)], std::uint64_t{1} << n);
    EXPECT_LT(dims[8], 256U);
}

TEST(QuotientDimensions, MatchesExhaustiveSpans)
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 8; ++trial) {
        GradedIdeal ideal(F2, 4);
        std::vector<Term> terms;
        const int d = 2 + trial % 2;
        for (int k = 0; k < 3; ++k)
            terms.push_back({Word::from_index(d, rng() % (1U << d)), 1});
        auto g = TruncatedPoly::from_terms(F2, 4, terms);
        if (g.is_zero())
            continue;
        ideal.add(g);
        const auto table = quotient_dimensions(ideal);
        for (int n = 1; n <= 4; ++n)
            EXPECT_EQ(table.dims[static_cast<std::size_t>(n)],
                      verify::brute_quotient_dimension(ideal, n).value())
                << format_poly(g) << " degree " << n;
    }
}

TEST(NormalForm, Examples)
{
    const auto ideal = ideal_of({"y"}, 4);
    EXPECT_TRUE(normal_form(parse_poly("y", F2, 4), ideal).is_zero());
    EXPECT_EQ(normal_form(parse_poly("x + y", F2, 4), ideal), parse_poly("x", F2, 4));
    const auto a = parse_poly("x*y + y^2*x + x", F2, 4);
    EXPECT_EQ(normal_form(a, GradedIdeal(F2, 4)), a);
}

TEST(NormalForm, LinearAndIdempotent)
{
    const auto ideal = ideal_of({"x*y - y*x", "x^3"}, 6, F3);
    const QuotientBases bases(ideal);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Term> ta, tb;
        for (int k = 0; k < 5; ++k) {
            const int d = 1 + static_cast<int>(rng() % 6);
            ta.push_back({Word::from_index(d, rng() % (1U << d)), Coeff(rng() % 3)});
            tb.push_back({Word::from_index(d, rng() % (1U << d)), Coeff(rng() % 3)});
        }
        const auto a = TruncatedPoly::from_terms(F3, 6, ta);
        const auto b = TruncatedPoly::from_terms(F3, 6, tb);
        const auto na = bases.normal_form(a);
        EXPECT_EQ(bases.normal_form(na), na);
        EXPECT_EQ(bases.normal_form(a + b.scaled(2)), na + bases.normal_form(b).scaled(2));
    }
}

TEST(QuotientBases, UnbuiltDegreesAreUsageErrors)
{
    const QuotientBases bases(ideal_of({"x^2"}, 6), 3);
    EXPECT_EQ(bases.built_degree(), 3);
    EXPECT_THROW(bases.basis(4), UsageError);
    EXPECT_THROW(bases.normal_form(parse_poly("x^4", F2, 6)), UsageError);
}

TEST(NilpotencyBound, Examples)
{
    EXPECT_EQ(nilpotency_bound(parse_poly("x", F2, 6), ideal_of({"x^2"}, 6)).index, 2);
    const auto trunc = nilpotency_bound(parse_poly("x", F2, 5), GradedIdeal(F2, 5));
    EXPECT_EQ(trunc.index, 6);
    EXPECT_TRUE(trunc.by_truncation);

    const auto state = run_construction(F2, 10, 100);
    const auto bound = nilpotency_bound(parse_poly("x + y", F2, 10), state.ideal());
    ASSERT_TRUE(bound.index.has_value());
    EXPECT_LE(*bound.index, 11);
    EXPECT_EQ(bound.index, 8); // (x+y)^8 is a J-generator
    EXPECT_FALSE(bound.by_truncation);
}
