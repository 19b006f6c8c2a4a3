#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adjoint/gs_series.hpp"
#include "adjoint/linalg.hpp"

namespace adjoint {

/// Coordinates with respect to an algebra's basis.
using Vec = std::vector<Coeff>;

/// Subspace of F_p^k in reduced row-echelon form.
class Subspace {
public:
    Subspace(PrimeField field, std::size_t ambient);

    bool insert(const Vec& v);
    bool contains(const Vec& v) const;
    Vec reduce(const Vec& v) const;

    std::size_t dim() const { return echelon_.rank(); }
    std::size_t ambient() const { return ambient_; }
    std::vector<Vec> basis() const;
    /// Coordinates that are not pivots: vectors supported there represent R/S.
    std::vector<std::size_t> free_coordinates() const;

private:
    PrimeField field_;
    std::size_t ambient_;
    ModpEchelon echelon_;
};

/// Finite-dimensional nilpotent associative F_p-algebra given by structure
/// constants: e_i·e_j = Σ_t mul[i][j][t]·e_t.
class FiniteNilAlgebra {
public:
    /// Validates the shape, associativity on all basis triples and nilpotency;
    /// throws UsageError on failure.
    FiniteNilAlgebra(PrimeField field, std::vector<std::string> labels,
                     std::vector<std::vector<Vec>> mul);

    /// xF_p[x]/(x^n), basis x, x², ..., x^{n-1}.
    static FiniteNilAlgebra truncated_polynomial(PrimeField field, int n);
    /// Strictly upper-triangular n×n matrices, basis e_ij for i < j.
    static FiniteNilAlgebra upper_triangular(PrimeField field, int n);
    static FiniteNilAlgebra direct_sum(const FiniteNilAlgebra& a, const FiniteNilAlgebra& b);
    /// R/R^{n+1} on a basis of coset representatives.
    static FiniteNilAlgebra quotient_by_power(const FiniteNilAlgebra& r, int n);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const Vec& structure(std::size_t i, std::size_t j) const { return mul_[i][j]; }
    const std::vector<std::vector<Vec>>& structure() const noexcept { return mul_; }
    /// Least N with R^N = 0.
    int nilpotency_class() const noexcept { return static_cast<int>(powers_.size()); }

    Vec zero() const { return Vec(dim(), 0); }
    Vec basis_vector(std::size_t i) const;
    Vec add(const Vec& a, const Vec& b) const;
    Vec multiply(const Vec& a, const Vec& b) const;
    /// a + b + ab.
    Vec circle(const Vec& a, const Vec& b) const;

    /// R^n for n >= 1 (zero subspace from the class on).
    const Subspace& power(int n) const;

private:
    PrimeField field_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Vec>> mul_;
    std::vector<Subspace> powers_; // R^1, ..., R^N (the last is zero)
};

const Subspace& power_ideal(const FiniteNilAlgebra& r, int n);

/// R∘ with elements indexed by their base-p coordinate encoding.
class AdjointGroup {
public:
    /// Throws UsageError when p^dim exceeds 2^24.
    explicit AdjointGroup(FiniteNilAlgebra algebra);

    const FiniteNilAlgebra& algebra() const noexcept { return algebra_; }
    std::uint64_t order() const noexcept { return order_; }

    Vec element(std::uint64_t index) const;
    std::uint64_t index_of(const Vec& v) const;
    std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inverse(std::uint64_t a) const;
    std::uint64_t element_order(std::uint64_t a) const;
    bool is_abelian() const;

private:
    FiniteNilAlgebra algebra_;
    std::uint64_t order_;
};

/// exp(R∘/G_n) with G_n = (R^{n+1})∘, from element orders of coset representatives.
std::uint64_t quotient_exponent(const FiniteNilAlgebra& r, int n);

/// [R∘ : G_n] counted as the number of distinct cosets r∘G_n.
std::uint64_t coset_index(const AdjointGroup& g, int n);

struct ExponentRow {
    int n;
    std::size_t dim_power;    // dim R^{n+1}
    std::size_t dim_quotient; // dim R/R^{n+1}
    std::uint64_t index;      // counted cosets
    std::uint64_t exponent;
    std::uint64_t bound;      // p(n+1)
    bool index_matches;       // index == p^{dim_quotient}
    bool ok;                  // exponent <= bound
};

struct ExponentReport {
    std::vector<ExponentRow> rows;
    bool all_ok = true;
    bool chain_consistent = true;
    /// max exponent / bound over the rows.
    Rational sharpest_ratio = 0;
};

/// exp(R∘/G_n) <= p(n+1) for 1 <= n < class.
ExponentReport exp_bound_check(const FiniteNilAlgebra& r);

/// Least m <= limit such that G is a product H_1...H_m of cyclic subgroups, or
/// nullopt if none exists. The trivial group has width 1. Throws UsageError
/// when |G| > 4096.
std::optional<int> cyclic_width(const AdjointGroup& g, int limit);

inline constexpr std::uint64_t kWidthOrderLimit = 4096;

struct IndexRow {
    int n;
    std::uint64_t index;    // [G : G_n]
    std::uint64_t exponent; // exp(G/G_n)
    BigInt exponent_power;  // exp(G/G_n)^m
    BigInt chain_bound;     // (p(n+1))^m
    double log_bound;       // m(1 + log_p(n+1))
    std::size_t dim_quotient;
    bool index_ok;          // index <= exponent^m
    bool chain_ok;          // p^{dim_quotient} <= (p(n+1))^m
    bool log_ok;            // dim_quotient <= m(1 + log_p(n+1))
};

struct IndexReport {
    int width;
    std::vector<IndexRow> rows;
    bool all_ok = true;
};

/// [G:G_n] <= exp(G/G_n)^m and the aggregate chain bounds for 1 <= n < class.
IndexReport index_exponent_check(const AdjointGroup& g, int width);

} // namespace adjoint
