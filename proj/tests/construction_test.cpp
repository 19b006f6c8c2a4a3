#include <map>
#include <set>

#include <gtest/gtest.h>

#include "adjoint/construction.hpp"
#include "adjoint/errors.hpp"
#include "adjoint/text.hpp"

using namespace adjoint;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

std::map<int, int> degree_counts(const std::vector<JGenerator>& gens)
{
    std::map<int, int> out;
    for (const auto& g : gens)
        ++out[g.degree];
    return out;
}

// Built once: the p = 2, cap 16 run and its quotient bases.
const ConstructionState& window16()
{
    static const ConstructionState state = run_construction(F2, 16, 1000);
    return state;
}

const QuotientBases& bases16()
{
    static const QuotientBases bases(window16().ideal());
    return bases;
}

} // namespace

TEST(Enumeration, FirstElementsOverF2)
{
    const EnumerationOrder order{F2};
    EXPECT_EQ(format_poly(enumerate_aplus(order, 1, 4)), "x");
    EXPECT_EQ(format_poly(enumerate_aplus(order, 2, 4)), "y");
    EXPECT_EQ(format_poly(enumerate_aplus(order, 3, 4)), "x + y");
    EXPECT_EQ(format_poly(enumerate_aplus(order, 4, 4)), "x^2");
    EXPECT_EQ(format_poly(enumerate_aplus(order, 8, 4)), "x + x^2");
    EXPECT_THROW(enumerate_aplus(order, 0, 4), UsageError);
}

TEST(Enumeration, InjectiveAndCoversSmallDegrees)
{
    for (const PrimeField& f : {F2, F3}) {
        const EnumerationOrder order{f};
        // Every element with max degree <= 1: p^2 - 1 of them, then degree 2 starts.
        const std::uint64_t deg1 = static_cast<std::uint64_t>(elements_of_max_degree(f, 1));
        EXPECT_EQ(deg1, std::uint64_t{f.p()} * f.p() - 1);
        std::set<std::string> seen;
        const std::uint64_t total = deg1 + 50;
        for (std::uint64_t i = 1; i <= total; ++i) {
            const auto a = enumerate_aplus(order, i, 3);
            EXPECT_TRUE(a.in_augmentation());
            EXPECT_FALSE(a.is_zero());
            EXPECT_EQ(a.max_degree(), i <= deg1 ? 1 : 2);
            EXPECT_TRUE(seen.insert(format_poly(a)).second) << i;
        }
    }
}

TEST(Enumeration, ExhaustsMaxDegreeTwoOverF2)
{
    const EnumerationOrder order{F2};
    const std::uint64_t upto2 = 3 + static_cast<std::uint64_t>(elements_of_max_degree(F2, 2));
    EXPECT_EQ(upto2, 63U); // 2^6 - 1 nonzero elements on the six words of degree 1..2
    std::set<std::string> seen;
    for (std::uint64_t i = 1; i <= upto2; ++i)
        seen.insert(format_poly(enumerate_aplus(order, i, 2)));
    EXPECT_EQ(seen.size(), 63U);
    EXPECT_THROW(enumerate_aplus(order, upto2 + 1, 2), UsageError);
}

TEST(Frobenius, AlphaAndClassCounts)
{
    EXPECT_EQ(frobenius_alpha(2), 3);
    EXPECT_EQ(frobenius_alpha(3), 2);
    EXPECT_EQ(frobenius_alpha(7), 1);
    EXPECT_EQ(frobenius_alpha(11), 1);
    EXPECT_EQ(projective_class_count(2, 1), 3);
    EXPECT_EQ(projective_class_count(2, 2), 15);
    EXPECT_EQ(projective_class_count(3, 1), 4);
    const auto reps = projective_representatives(F3, 4, 1);
    ASSERT_EQ(reps.size(), 4U);
    EXPECT_EQ(format_poly(reps[0]), "x");
    EXPECT_EQ(format_poly(reps[3]), "y");
}

TEST(JGenerators, Examples)
{
    const auto cap15 = build_J_generators(F2, 15);
    ASSERT_EQ(cap15.size(), 3U);
    EXPECT_EQ(cap15[0].generator, parse_poly("x^8", F2, 15));
    EXPECT_EQ(cap15[1].generator, power(parse_poly("x + y", F2, 15), 8));
    EXPECT_EQ(cap15[1].generator.size(), 256U);
    EXPECT_EQ(cap15[2].generator, parse_poly("y^8", F2, 15));

    EXPECT_EQ(degree_counts(build_J_generators(F2, 16)), (std::map<int, int>{{8, 3}, {16, 15}}));
    EXPECT_TRUE(build_J_generators(F3, 8).empty());
    EXPECT_EQ(degree_counts(build_J_generators(F3, 9)), (std::map<int, int>{{9, 4}}));
}

TEST(Construction, HomogeneousElementsYieldNothing)
{
    const auto state = run_construction(F2, 16, 1);
    EXPECT_EQ(state.processed, 1U);
    EXPECT_TRUE(state.I_generators.empty());
    EXPECT_EQ(state.last_degree, 13);
    EXPECT_TRUE(state.consumed[0].trace.residual.is_zero());
}

TEST(Construction, WindowAtCapSixteen)
{
    const auto& state = window16();
    EXPECT_EQ(state.processed, 3U);
    ASSERT_EQ(state.I_generators.size(), 3U);
    int last = 13;
    for (const auto& g : state.I_generators) {
        EXPECT_EQ(g.source, 3U);
        EXPECT_GT(g.degree, last);
        EXPECT_TRUE(g.poly.is_homogeneous());
        last = g.degree;
    }
    EXPECT_EQ(state.I_generators.front().degree, 14);
    EXPECT_EQ(state.I_generators.back().degree, 16);
    EXPECT_EQ(state.consumed[2].threshold, 14);
    EXPECT_EQ(state.alpha, 3);
}

TEST(Construction, CapBelowFourteenIsFlagged)
{
    const auto state = run_construction(F2, 12, 10);
    EXPECT_TRUE(state.cap_too_small);
    EXPECT_TRUE(state.I_generators.empty());
    EXPECT_EQ(state.J_generators.size(), 3U);
}

TEST(Construction, DegreesStrictlyIncreaseOverF3)
{
    const auto state = run_construction(F3, 15, 20);
    int last = 13;
    for (const auto& g : state.I_generators) {
        EXPECT_GT(g.degree, last);
        last = g.degree;
    }
    for (std::size_t l = 1; l < state.consumed.size(); ++l)
        EXPECT_GE(state.consumed[l].threshold, 14);
}

TEST(Construction, HilbertWindowAndRecursion)
{
    const HilbertTable table = bases16().hilbert();
    for (int n = 1; n <= 7; ++n)
        EXPECT_EQ(table.dims[static_cast<std::size_t>(n)], std::uint64_t{1} << n);
    EXPECT_EQ(table.dims[8], 253U);
    const auto census = census_from_state(window16());
    EXPECT_TRUE(gs_recursion_check(table.dims, census.actual).holds);
}

TEST(Torsion, DegreeOneClassesDivideEight)
{
    const QuotientBases& bases = bases16();
    for (const char* h : {"x", "y", "x + y"}) {
        const auto hp = parse_poly(h, F2, 16);
        EXPECT_TRUE(bases.normal_form(circle_pow(hp, 8)).is_zero()) << h;
    }
    EXPECT_EQ(adjoint_order(parse_poly("x", F2, 16), bases, 3), 8U);
    EXPECT_EQ(adjoint_order(TruncatedPoly(F2, 16), bases, 3), 1U);
}

TEST(Torsion, CertificateCoversBothDegrees)
{
    const auto cert = torsion_certificate(window16(), bases16());
    EXPECT_EQ(cert.exponent_bound, 8U);
    EXPECT_EQ(cert.entries.size(), 18U);
    EXPECT_TRUE(cert.all_divide);

    const QuotientBases partial(window16().ideal(), 10);
    EXPECT_THROW(torsion_certificate(window16(), partial), UsageError);
    const QuotientBases other(GradedIdeal(F2, 16), 16);
    EXPECT_THROW(torsion_certificate(window16(), other), UsageError);
}

TEST(Census, ReportAtCapFifteenAndSixteen)
{
    const auto state15 = run_construction(F2, 15, 1000);
    const auto report15 = census_from_state(state15);
    EXPECT_EQ(report15.actual.count(8), 3);
    EXPECT_EQ(report15.actual.count(14), 1);
    EXPECT_EQ(report15.actual.count(15), 1);
    EXPECT_TRUE(report15.i_within_bound);

    const auto report16 = census_from_state(window16());
    EXPECT_TRUE(report16.j_matches_classes);
    // 15 projective classes at degree 16 against 2^2 = 4 in the analytic count.
    EXPECT_FALSE(report16.j_within_paper_count);
    EXPECT_EQ(report16.actual.count(16), 16);

    ConstructionState empty{F2, 8, 0, 3, 0, 13, {}, {}, {}, true};
    EXPECT_TRUE(census_from_state(empty).actual.counts().empty());
}
