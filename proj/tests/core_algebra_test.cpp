#include <random>

#include <gtest/gtest.h>

#include "adjoint/errors.hpp"
#include "adjoint/poly.hpp"
#include "adjoint/text.hpp"
#include "adjoint/verify/oracles.hpp"

using namespace adjoint;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

TruncatedPoly P(const std::string& text, const PrimeField& f = F2, int cap = 6)
{
    return parse_poly(text, f, cap);
}

TruncatedPoly random_poly(std::mt19937_64& rng, const PrimeField& f, int cap, int max_degree,
                          bool augmented)
{
    std::uniform_int_distribution<int> count(0, 6), degree(augmented ? 1 : 0, max_degree);
    std::uniform_int_distribution<Coeff> coeff(0, f.p() - 1);
    std::vector<Term> terms;
    for (int k = count(rng); k > 0; --k) {
        const int d = degree(rng);
        std::uniform_int_distribution<std::uint64_t> idx(0, (std::uint64_t{1} << d) - 1);
        terms.push_back({Word::from_index(d, idx(rng)), coeff(rng)});
    }
    return TruncatedPoly::from_terms(f, cap, terms);
}

} // namespace

TEST(PrimeField, RejectsComposites)
{
    EXPECT_THROW(PrimeField(1), UsageError);
    EXPECT_THROW(PrimeField(4), UsageError);
    EXPECT_THROW(PrimeField(91), UsageError);
    EXPECT_NO_THROW(PrimeField(2147483647U));
}

TEST(PrimeField, InversesAndSignedReduction)
{
    const PrimeField f(7);
    for (Coeff a = 1; a < 7; ++a)
        EXPECT_EQ(f.mul(a, f.inv(a)), 1U);
    EXPECT_THROW(f.inv(0), std::exception);
    EXPECT_EQ(f.reduce_signed(-1), 6U);
    EXPECT_EQ(f.reduce_signed(-14), 0U);
    EXPECT_EQ(f.pow(3, 6), 1U);
    EXPECT_EQ(f.neg(0), 0U);
}

TEST(Word, KeyOrderIsDegreeThenLex)
{
    const Word x = Word::x(), y = Word::y();
    EXPECT_LT(x, y);
    EXPECT_LT(y, x * x);
    EXPECT_LT(x * y, y * x);
    EXPECT_EQ((x * y).letters(), "xy");
    EXPECT_EQ(Word::from_letters("yxx").index(), 4U);
    EXPECT_EQ(Word::from_letters("").degree(), 0);
    EXPECT_TRUE(Word().empty());
    EXPECT_THROW(Word::from_letters("xz"), UsageError);
}

TEST(Word, EmptyWordIsIdentityAndCountsArePowersOfTwo)
{
    const Word w = Word::from_letters("xyyx");
    EXPECT_EQ(Word() * w, w);
    EXPECT_EQ(w * Word(), w);
    for (int d = 0; d <= 10; ++d) {
        const Word first = Word::from_index(d, 0);
        const Word last = Word::from_index(d, (std::uint64_t{1} << d) - 1);
        EXPECT_EQ(last.key() - first.key() + 1, std::uint64_t{1} << d);
        EXPECT_EQ(first.degree(), d);
    }
}

TEST(TruncatedPoly, ProductIsNoncommutative)
{
    EXPECT_EQ(format_poly(P("x") * P("y")), "x*y");
    EXPECT_NE(P("x") * P("y"), P("y") * P("x"));
}

TEST(TruncatedPoly, ProductTruncatesAboveCap)
{
    EXPECT_TRUE((P("x+y", F2, 2) * P("xy", F2, 2)).is_zero());
}

TEST(TruncatedPoly, UnitProductExpansion)
{
    const auto one = TruncatedPoly::constant(F2, 6, 1);
    EXPECT_EQ((one + P("x")) * (one + P("y")) - one, P("x + y + x*y"));
}

TEST(TruncatedPoly, MismatchedCapOrFieldThrows)
{
    EXPECT_THROW(P("x", F2, 3) * P("x", F2, 4), UsageError);
    EXPECT_THROW(P("x", F2, 3) + P("x", F3, 3), UsageError);
}

TEST(TruncatedPoly, NoZeroCoefficientsAndNothingAboveCap)
{
    const auto a = TruncatedPoly::from_terms(F3, 3, {{Word::x(), 1}, {Word::x(), 2}, {Word::y(), 4}});
    EXPECT_EQ(a, P("y", F3, 3));
    EXPECT_THROW(TruncatedPoly::from_terms(F2, 2, {{Word::from_letters("xxx"), 1}}), UsageError);
    EXPECT_NO_THROW(TruncatedPoly::from_terms(F2, 2, {{Word::from_letters("xxx"), 2}}));
}

TEST(TruncatedPoly, GradingRecoversTheElement)
{
    const auto a = P("x + x*y + y*x + x^3*y");
    TruncatedPoly sum(F2, 6);
    for (const auto& part : homogeneous_parts(a)) {
        EXPECT_TRUE(part.part.is_homogeneous());
        EXPECT_EQ(part.part, a.component(part.degree));
        sum += part.part;
    }
    EXPECT_EQ(sum, a);
}

TEST(Valuation, Examples)
{
    EXPECT_EQ(valuation(P("x + x*y")), 1);
    EXPECT_EQ(valuation(P("x^2*y + y*x^2")), 3);
    EXPECT_TRUE(valuation(TruncatedPoly(F2, 6)).is_infinite());
    EXPECT_EQ(Valuation::infinity().to_string(), "inf");
    EXPECT_THROW(Valuation::infinity().value(), UsageError);
    EXPECT_GT(Valuation::infinity(), 1000);
}

TEST(HomogeneousParts, Examples)
{
    const auto parts = homogeneous_parts(P("x + x*y + y*x"));
    ASSERT_EQ(parts.size(), 2U);
    EXPECT_EQ(parts[0].degree, 1);
    EXPECT_EQ(parts[0].part, P("x"));
    EXPECT_EQ(parts[1].degree, 2);
    EXPECT_EQ(parts[1].part, P("x*y + y*x"));
    EXPECT_TRUE(homogeneous_parts(TruncatedPoly(F2, 6)).empty());
    ASSERT_EQ(homogeneous_parts(P("x+y")).size(), 1U);
}

TEST(Circle, MultiplicationExamples)
{
    EXPECT_EQ(circle_mul(P("x"), P("y")), P("x + y + x*y"));
    EXPECT_EQ(circle_mul(TruncatedPoly(F2, 6), P("x*y + y")), P("x*y + y"));
    EXPECT_EQ(circle_mul(P("x"), P("x")), P("x^2"));
    EXPECT_THROW(circle_mul(P("1 + x"), P("y")), UsageError);
}

TEST(Circle, InverseExamples)
{
    EXPECT_EQ(circle_inv(P("x", F3, 3)), P("-x + x^2 - x^3", F3, 3));
    EXPECT_EQ(circle_inv(P("x", F2, 3)), P("x + x^2 + x^3", F2, 3));
    EXPECT_TRUE(circle_inv(TruncatedPoly(F2, 3)).is_zero());
}

TEST(Circle, PowerExamples)
{
    EXPECT_EQ(circle_pow(P("x"), 2), P("x^2"));
    EXPECT_EQ(circle_pow(P("x"), 4), P("x^4"));
    EXPECT_TRUE(circle_pow(P("x + y*x"), 0).is_zero());
    EXPECT_EQ(circle_pow(P("x + y", F3, 5), -1), circle_inv(P("x + y", F3, 5)));
}

TEST(Circle, GroupAxiomsOnRandomElements)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const PrimeField& f = trial % 2 ? F3 : F2;
        const auto r = random_poly(rng, f, 5, 3, true);
        const auto s = random_poly(rng, f, 5, 3, true);
        const auto t = random_poly(rng, f, 5, 3, true);
        EXPECT_EQ(circle_mul(circle_mul(r, s), t), circle_mul(r, circle_mul(s, t)));
        EXPECT_TRUE(circle_mul(r, circle_inv(r)).is_zero());
        EXPECT_TRUE(circle_mul(circle_inv(r), r).is_zero());
        EXPECT_EQ(circle_pow(r, 5), circle_mul(circle_pow(r, 2), circle_pow(r, 3)));
        EXPECT_TRUE(circle_mul(circle_pow(r, 3), circle_pow(r, -3)).is_zero());
    }
}

TEST(Circle, FrobeniusIdentity)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const PrimeField& f = trial % 2 ? F3 : F2;
        const auto r = random_poly(rng, f, 10, 3, true);
        for (std::uint64_t q = f.p(); q <= 9; q *= f.p())
            EXPECT_EQ(circle_pow(r, static_cast<std::int64_t>(q)), power(r, q));
    }
}

TEST(TruncatedPoly, RingLawsAgainstStringOracle)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const PrimeField& f = trial % 2 ? F3 : F2;
        const auto a = random_poly(rng, f, 6, 4, false);
        const auto b = random_poly(rng, f, 6, 4, false);
        const auto c = random_poly(rng, f, 6, 4, false);
        EXPECT_EQ(a * b, verify::naive_to(verify::naive_mul(verify::naive_from(a),
                                                            verify::naive_from(b))));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(power(a, 3), a * a * a);
    }
}

TEST(Text, ParseExamples)
{
    EXPECT_EQ(P("x*y + y^2"), TruncatedPoly::from_terms(F2, 6, {{Word::from_letters("xy"), 1},
                                                               {Word::from_letters("yy"), 1}}));
    EXPECT_TRUE(P("0").is_zero());
    EXPECT_TRUE(P("3x", F3).is_zero());
    EXPECT_EQ(P("xy"), P("x*y"));
    EXPECT_EQ(P("-x", F3), P("2x", F3));
    EXPECT_EQ(P(" x ^ 2 y "), P("x*x*y"));
    EXPECT_EQ(P("1 + x", F3).constant_term(), 1U);
}

TEST(Text, ReportsPositionsAndOverflow)
{
    try {
        P("x + * y");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4U);
    }
    try {
        parse_poly("x + y^4", F2, 3);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("y^4"), std::string::npos);
    }
    EXPECT_THROW(P("x + z"), ParseError);
    EXPECT_THROW(P(""), ParseError);
    EXPECT_THROW(P("x^"), ParseError);
}

TEST(Text, FormatIsCanonicalAndRoundTrips)
{
    EXPECT_EQ(format_poly(P("y*x + 2*x + x*x*y", F3)), "2*x + y*x + x^2*y");
    EXPECT_EQ(format_poly(TruncatedPoly(F2, 4)), "0");
    EXPECT_EQ(format_poly(P("1 + x")), "1 + x");
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const PrimeField& f = trial % 2 ? F3 : F2;
        const auto a = random_poly(rng, f, 6, 6, false);
        EXPECT_EQ(parse_poly(format_poly(a), f, 6), a) << format_poly(a);
    }
}
