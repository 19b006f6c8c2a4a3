#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "adjoint/field.hpp"
#include "adjoint/word.hpp"

namespace adjoint {

struct Term {
    Word word;
    Coeff coeff = 0;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Least degree carrying a nonzero component; infinite for the zero polynomial.
class Valuation {
public:
    constexpr explicit Valuation(int value) noexcept : value_(value) {}
    static constexpr Valuation infinity() noexcept { return Valuation(kInfinite); }

    constexpr bool is_infinite() const noexcept { return value_ == kInfinite; }
    /// Finite value; throws UsageError on infinity.
    int value() const;
    std::string to_string() const;

    friend constexpr auto operator<=>(Valuation, Valuation) = default;
    friend constexpr bool operator==(Valuation, Valuation) = default;
    friend constexpr auto operator<=>(Valuation v, int n) noexcept { return v.value_ <=> n; }
    friend constexpr bool operator==(Valuation v, int n) noexcept { return v.value_ == n; }

private:
    static constexpr int kInfinite = std::numeric_limits<int>::max();
    int value_;
};

/// An element of F_p<x,y> modulo the ideal of words of degree > cap.
///
/// Terms are kept sorted in canonical (degree, then lexicographic) order with
/// nonzero coefficients. Every arithmetic operation requires both operands to
/// share the same field and cap; a mismatch throws UsageError.
class TruncatedPoly {
public:
    /// The zero polynomial.
    TruncatedPoly(PrimeField field, int cap);

    static TruncatedPoly constant(PrimeField field, int cap, Coeff c);
    static TruncatedPoly monomial(PrimeField field, int cap, Word w, Coeff c = 1);
    /// Sums the given terms (duplicates merge, coefficients reduce mod p).
    /// A term of degree > cap with a nonzero reduced coefficient throws UsageError.
    static TruncatedPoly from_terms(PrimeField field, int cap, std::vector<Term> terms);

    const PrimeField& field() const noexcept { return field_; }
    int cap() const noexcept { return cap_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Coeff coeff(Word w) const;
    Coeff constant_term() const;
    /// True when the constant term vanishes, i.e. the element lies in A⁺.
    bool in_augmentation() const { return constant_term() == 0; }
    /// Nonzero and concentrated in a single degree.
    bool is_homogeneous() const noexcept;
    /// Highest degree present, or -1 for zero.
    int max_degree() const noexcept;
    /// Degree-n component.
    TruncatedPoly component(int n) const;
    TruncatedPoly scaled(Coeff c) const;

    TruncatedPoly& operator+=(const TruncatedPoly& other);
    TruncatedPoly& operator-=(const TruncatedPoly& other);
    TruncatedPoly operator-() const;

    friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) { return a += b; }
    friend TruncatedPoly operator-(TruncatedPoly a, const TruncatedPoly& b) { return a -= b; }
    friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);

    friend bool operator==(const TruncatedPoly&, const TruncatedPoly&) = default;

private:
    TruncatedPoly(PrimeField field, int cap, std::vector<Term> sorted_terms);
    void check_compatible(const TruncatedPoly& other) const;
    template <class Op>
    TruncatedPoly& merge(const TruncatedPoly& other, Op op);

    PrimeField field_;
    int cap_;
    std::vector<Term> terms_;
};

struct HomogeneousPart {
    int degree;
    TruncatedPoly part;
};

TruncatedPoly poly_mul(const TruncatedPoly& a, const TruncatedPoly& b);

/// Ordinary k-th power (k >= 0); a^0 = 1.
TruncatedPoly power(const TruncatedPoly& a, std::uint64_t k);

Valuation valuation(const TruncatedPoly& a);

/// Nonzero graded components in ascending degree.
std::vector<HomogeneousPart> homogeneous_parts(const TruncatedPoly& a);

/// r∘s = r + s + rs on A⁺. Throws UsageError if either operand has a constant term.
TruncatedPoly circle_mul(const TruncatedPoly& r, const TruncatedPoly& s);

/// Inverse in the adjoint group: -r + r² - r³ + ... up to the cap.
TruncatedPoly circle_inv(const TruncatedPoly& r);

/// k-fold circle product, i.e. (1+r)^k - 1. Negative k uses circle_inv.
TruncatedPoly circle_pow(const TruncatedPoly& r, std::int64_t k);

} // namespace adjoint
