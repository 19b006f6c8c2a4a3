#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adjoint/factorization.hpp"
#include "adjoint/graded_ideal.hpp"
#include "adjoint/gs_series.hpp"
#include "adjoint/poly.hpp"

namespace adjoint {

/// Fixed enumeration f_1, f_2, ... of A⁺: ascending max degree, then ascending
/// support size, then supports compared as sorted lists of words in canonical
/// order, then coefficient vectors (each in 1..p-1) lexicographically.
struct EnumerationOrder {
    PrimeField field;
};

/// Number of elements of A⁺ whose max degree is exactly `degree`: p^{W_D} - p^{W_{D-1}}
/// with W_D = 2^{D+1} - 2 words of degree 1..D.
BigInt elements_of_max_degree(const PrimeField& field, int degree);

/// The index-th element (index >= 1). Throws UsageError if it does not fit under cap.
TruncatedPoly enumerate_aplus(const EnumerationOrder& order, std::uint64_t index, int cap);

/// Smallest alpha with p^alpha >= 7.
int frobenius_alpha(std::uint32_t p);

/// (p^{2^d} - 1)/(p - 1): nonzero homogeneous elements of degree d up to scalars.
BigInt projective_class_count(std::uint32_t p, int d);

/// One representative per projective class of degree-d homogeneous elements
/// (first nonzero coefficient 1), in lexicographic coefficient order.
std::vector<TruncatedPoly> projective_representatives(const PrimeField& field, int cap, int d);

struct JGenerator {
    int degree;
    TruncatedPoly base;      // homogeneous h
    TruncatedPoly generator; // h^{p^alpha}
};

/// h^{p^alpha} for every projective class representative h with p^alpha·deg(h) <= cap.
std::vector<JGenerator> build_J_generators(const PrimeField& field, int cap);

struct IGenerator {
    int degree;
    TruncatedPoly poly;
    std::uint64_t source; // index l of the element whose residual produced it
};

struct ConsumedElement {
    std::uint64_t index;
    TruncatedPoly element;
    int threshold;
    FactorizationTrace trace;
};

struct ConstructionState {
    PrimeField field;
    int cap;
    std::uint64_t max_elements;
    int alpha;
    std::uint64_t processed = 0;
    /// Highest degree occupied by I so far; starts at 13 so the first threshold is 14.
    int last_degree = 13;
    std::vector<IGenerator> I_generators;
    std::vector<JGenerator> J_generators;
    std::vector<ConsumedElement> consumed;
    /// Set when cap < 14, so no I-generator can exist within the cap.
    bool cap_too_small = false;

    /// The ideal I + J.
    GradedIdeal ideal() const;
};

inline constexpr int kFirstThreshold = 14;

/// Consumes f_1, f_2, ... in enumeration order, factoring each to valuation
/// max(14, n_{l-1} + 1) and recording the residual's graded parts as
/// I-generators. Stops after max_elements or once the threshold exceeds cap.
ConstructionState run_construction(const PrimeField& field, int cap, std::uint64_t max_elements);

struct TorsionEntry {
    TruncatedPoly h;
    int degree;
    /// Least p^e (e <= alpha) with circle_pow(h, p^e) ≡ 0 mod I + J, if any.
    std::optional<std::uint64_t> order;
};

struct TorsionCertificate {
    int alpha;
    std::uint64_t exponent_bound; // p^alpha
    std::vector<TorsionEntry> entries;
    bool all_divide = true;
};

/// Least p^e with e <= max_exponent and circle_pow(h, p^e) ≡ 0 in the quotient.
std::optional<std::uint64_t> adjoint_order(const TruncatedPoly& h, const QuotientBases& bases,
                                           int max_exponent);

/// Adjoint order of 1 + h in A⁺/(I+J) for every projective class h with
/// deg(h)·p^alpha <= cap. Throws UsageError when `bases` is not the state's
/// quotient or is not built up to the cap.
TorsionCertificate torsion_certificate(const ConstructionState& state, const QuotientBases& bases);

struct CensusRow {
    int degree;
    BigInt i_count;
    BigInt j_count;
    BigInt i_bound;     // one relation per degree from 14
    BigInt j_paper;     // 2^d monomial count claimed for degree p^alpha·d
    BigInt j_classes;   // projective classes actually needed at degree p^alpha·d
};

struct CensusReport {
    GeneratorCensus actual;
    GeneratorCensus paper;
    std::vector<CensusRow> rows;
    bool i_within_bound = true;
    bool j_matches_classes = true;
    bool j_within_paper_count = true;
};

/// Exact per-degree counts of the state's generators, compared with the
/// analytic bound census.
CensusReport census_from_state(const ConstructionState& state);

} // namespace adjoint
