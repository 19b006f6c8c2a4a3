#pragma once

#include <string>

#include <json.hpp>

#include "adjoint/construction.hpp"
#include "adjoint/factorization.hpp"
#include "adjoint/finite_adjoint.hpp"
#include "adjoint/graded_ideal.hpp"
#include "adjoint/gs_series.hpp"

namespace adjoint::io {

// Field order is fixed so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

/// Finite valuations as integers, infinity as the string "inf".
Json valuation_json(Valuation v);

/// {a, factors[], residual, valuation, steps}
Json trace_json(const FactorizationTrace& trace);

/// [[degree, "poly"], ...]
Json ideal_json(const GradedIdeal& ideal);
/// Throws UsageError on a malformed list or a non-homogeneous generator.
GradedIdeal ideal_from_json(const Json& j, PrimeField field, int cap);

/// {dims: [...], ideal_rank: [...]}
Json hilbert_json(const HilbertTable& table);
/// "n,dim,ideal_rank" header plus one line per degree.
std::string hilbert_csv(const HilbertTable& table);

/// {counts: {"n": r_n}, tails: [...]}. Counts are decimal strings when they
/// exceed 2^53, plain integers otherwise.
Json census_json(const GeneratorCensus& census);
GeneratorCensus census_from_json(const Json& j);

/// {tau, f_value_exact: "num/den", f_value_decimal, negative}
Json gs_report_json(const Rational& tau, const Rational& value);

/// {p, cap, max_elements, alpha, I: [...], J: [...], traces: [...], census: {...}}
Json manifest_json(const ConstructionState& state);

Json torsion_json(const TorsionCertificate& cert);

/// {p, dim, labels[], mul: [[[coeff,...],...],...]}
Json algebra_json(const FiniteNilAlgebra& r);
FiniteNilAlgebra algebra_from_json(const Json& j);

Json exponent_json(const ExponentReport& report);
/// "n,dim_power,dim_quotient,index,exponent,bound,ok"
std::string exponent_csv(const ExponentReport& report);

Json index_json(const IndexReport& report);

} // namespace adjoint::io
