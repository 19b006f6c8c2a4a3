#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "adjoint/linalg.hpp"
#include "adjoint/poly.hpp"

namespace adjoint {

struct IdealGenerator {
    int degree;
    TruncatedPoly poly;
};

/// Two-sided ideal of A⁺ generated by homogeneous elements of degree in [1, cap].
class GradedIdeal {
public:
    GradedIdeal(PrimeField field, int cap) : field_(field), cap_(cap) {}
    /// Throws UsageError for a generator that is zero, inhomogeneous, constant
    /// or built over a different field or cap.
    GradedIdeal(PrimeField field, int cap, const std::vector<TruncatedPoly>& generators);

    void add(const TruncatedPoly& generator);

    const PrimeField& field() const noexcept { return field_; }
    int cap() const noexcept { return cap_; }
    const std::vector<IdealGenerator>& generators() const noexcept { return generators_; }

private:
    PrimeField field_;
    int cap_;
    std::vector<IdealGenerator> generators_;
};

/// The degree-n component of an ideal as a row space over the 2^n words of
/// degree n. GF(2) uses packed bit rows, other primes dense modular rows.
class DegreeBasis {
public:
    DegreeBasis(PrimeField field, int cap, int degree);

    int degree() const noexcept { return degree_; }
    std::size_t rank() const;
    std::uint64_t ambient_dimension() const noexcept { return std::uint64_t{1} << degree_; }

    /// Adds a homogeneous element of this degree; returns true if the rank grew.
    bool insert(const TruncatedPoly& element);
    /// Brings the stored rows to reduced row-echelon form.
    void make_reduced();
    bool is_reduced() const;
    /// Stored rows as homogeneous polynomials, in pivot order once reduced.
    std::vector<TruncatedPoly> rows() const;
    /// Canonical coset representative of a degree-n element (zero iff in the span).
    TruncatedPoly reduce(const TruncatedPoly& element) const;

private:
    friend DegreeBasis ideal_component_basis(const GradedIdeal&, int);

    PrimeField field_;
    int cap_;
    int degree_;
    std::variant<Gf2Echelon, ModpEchelon> echelon_;
};

/// Span of all products u·g·w of total degree n, in reduced row-echelon form.
DegreeBasis ideal_component_basis(const GradedIdeal& ideal, int n);

/// dims[n] = dimension of the degree-n part of A/ideal for 0 <= n <= cap
/// (dims[0] = 1), ideal_ranks[n] = 2^n - dims[n].
struct HilbertTable {
    std::vector<std::uint64_t> dims;
    std::vector<std::uint64_t> ideal_ranks;
};

/// Bases of every degree 1..built_degree, kept for repeated normal-form queries.
class QuotientBases {
public:
    explicit QuotientBases(const GradedIdeal& ideal);
    QuotientBases(const GradedIdeal& ideal, int up_to_degree);

    const GradedIdeal& ideal() const noexcept { return ideal_; }
    int built_degree() const noexcept { return static_cast<int>(bases_.size()); }
    /// Throws UsageError when degree n has not been built.
    const DegreeBasis& basis(int n) const;

    /// Reduces every graded component; throws UsageError if `a` has a nonzero
    /// component beyond the built degree.
    TruncatedPoly normal_form(const TruncatedPoly& a) const;
    HilbertTable hilbert() const;

private:
    GradedIdeal ideal_;
    std::vector<DegreeBasis> bases_;
};

HilbertTable quotient_dimensions(const GradedIdeal& ideal);

TruncatedPoly normal_form(const TruncatedPoly& a, const GradedIdeal& ideal);

/// Outcome of searching for the least k with a^k ≡ 0 modulo the ideal.
/// Only meaningful below the cap: `by_truncation` flags indices where a^k
/// vanishes because every term of a^k exceeds the cap, not because of the ideal.
struct NilpotencyBound {
    std::optional<int> index;
    bool by_truncation = false;
};

/// Searches k = 1..max_k (default cap + 1). Requires a ∈ A⁺.
NilpotencyBound nilpotency_bound(const TruncatedPoly& a, const QuotientBases& bases,
                                 int max_k = 0);
NilpotencyBound nilpotency_bound(const TruncatedPoly& a, const GradedIdeal& ideal,
                                 int max_k = 0);

} // namespace adjoint
