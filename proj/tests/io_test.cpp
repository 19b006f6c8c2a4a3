#include <gtest/gtest.h>

#include "adjoint/errors.hpp"
#include "adjoint/io.hpp"
#include "adjoint/text.hpp"

using namespace adjoint;
using adjoint::io::Json;

TEST(Io, TraceJsonShape)
{
    const auto t = factor_to_valuation(parse_poly("x + y", PrimeField(2), 6), 7);
    const Json j = io::trace_json(t);
    EXPECT_EQ(j["a"], "x + y");
    EXPECT_EQ(j["residual"], "0");
    EXPECT_EQ(j["valuation"], "inf");
    EXPECT_EQ(j["steps"], 5);
    EXPECT_EQ(j["factors"][0], "x");
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"a", "factors", "residual", "valuation", "steps"}));
    EXPECT_EQ(io::valuation_json(Valuation(3)), 3);
}

TEST(Io, IdealRoundTrip)
{
    const PrimeField f(3);
    GradedIdeal ideal(f, 5);
    ideal.add(parse_poly("x*y - y*x", f, 5));
    ideal.add(parse_poly("2*y^3", f, 5));
    const Json j = io::ideal_json(ideal);
    EXPECT_EQ(j.dump(), R"([[2,"x*y + 2*y*x"],[3,"2*y^3"]])");
    const GradedIdeal back = io::ideal_from_json(j, f, 5);
    ASSERT_EQ(back.generators().size(), 2U);
    EXPECT_EQ(back.generators()[1].poly, ideal.generators()[1].poly);
    EXPECT_THROW(io::ideal_from_json(Json::parse(R"([[2,"x + x*y"]])"), f, 5), UsageError);
    EXPECT_THROW(io::ideal_from_json(Json::parse(R"([[3,"x*y"]])"), f, 5), UsageError);
    EXPECT_THROW(io::ideal_from_json(Json::parse(R"({"a":1})"), f, 5), UsageError);
}

TEST(Io, HilbertCsv)
{
    const HilbertTable t{{1, 2, 3}, {0, 0, 1}};
    EXPECT_EQ(io::hilbert_csv(t), "n,dim,ideal_rank\n0,1,0\n1,2,0\n2,3,1\n");
    EXPECT_EQ(io::hilbert_json(t).dump(), R"({"dims":[1,2,3],"ideal_rank":[0,0,1]})");
}

TEST(Io, CensusRoundTrip)
{
    GeneratorCensus c = paper_bound_census();
    c.set_count(5, 2);
    c.set_count(40, BigInt(1) << 60);
    const Json j = io::census_json(c);
    EXPECT_EQ(j["counts"]["5"], 2);
    EXPECT_EQ(j["counts"]["40"], "1152921504606846976");
    EXPECT_EQ(j["tails"][0]["kind"], "geometric");
    const GeneratorCensus back = io::census_from_json(j);
    EXPECT_EQ(back.counts(), c.counts());
    EXPECT_EQ(back.tails(), c.tails());
    EXPECT_THROW(io::census_from_json(Json::parse(R"({"counts":{"x":1}})")), UsageError);
    EXPECT_THROW(io::census_from_json(Json::parse(R"({"tails":[{"kind":"other"}]})")), UsageError);
}

TEST(Io, GsReport)
{
    const Rational tau(3, 4);
    const Json j = io::gs_report_json(tau, f_eval(paper_bound_census(), tau));
    EXPECT_EQ(j["tau"], "3/4");
    EXPECT_EQ(j["f_value_exact"], "-26005549747/402988728320");
    EXPECT_EQ(j["f_value_decimal"], "-0.0645317050");
    EXPECT_EQ(j["negative"], true);
}

TEST(Io, AlgebraRoundTrip)
{
    const auto r = FiniteNilAlgebra::upper_triangular(PrimeField(3), 3);
    const Json j = io::algebra_json(r);
    EXPECT_EQ(j["p"], 3);
    EXPECT_EQ(j["dim"], 3);
    const auto back = io::algebra_from_json(j);
    EXPECT_EQ(back.structure(), r.structure());
    EXPECT_EQ(back.labels(), r.labels());

    // Signed coefficients reduce mod p; labels default to e1..ek.
    const auto signed_in = io::algebra_from_json(
        Json::parse(R"({"p":3,"dim":2,"mul":[[[0,-2],[0,0]],[[0,0],[0,0]]]})"));
    EXPECT_EQ(signed_in.structure(0, 0), (Vec{0, 1}));
    EXPECT_EQ(signed_in.labels()[1], "e2");
    EXPECT_THROW(io::algebra_from_json(Json::parse(R"({"p":2,"dim":1,"mul":[[[1]]]})")),
                 UsageError);
    EXPECT_THROW(io::algebra_from_json(Json::parse(R"({"p":2,"dim":1,"mul":"no"})")), UsageError);
}

TEST(Io, ExponentCsv)
{
    const auto report = exp_bound_check(FiniteNilAlgebra::truncated_polynomial(PrimeField(2), 3));
    EXPECT_EQ(io::exponent_csv(report),
              "n,dim_power,dim_quotient,index,exponent,bound,ok\n1,1,1,2,2,4,true\n2,0,2,4,4,6,true\n");
}
