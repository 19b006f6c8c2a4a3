#pragma once

// Slow reference implementations used to cross-check the main engine. They
// share no arithmetic code with it: words are std::strings, spans are explicit
// element sets and group tables come straight from structure constants.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adjoint/finite_adjoint.hpp"
#include "adjoint/graded_ideal.hpp"
#include "adjoint/poly.hpp"

namespace adjoint::verify {

/// Polynomial over F_p with words as strings of 'x'/'y'; the empty string is 1.
struct NaivePoly {
    std::uint32_t p = 2;
    int cap = 0;
    std::map<std::string, std::uint32_t> terms;

    friend bool operator==(const NaivePoly&, const NaivePoly&) = default;
};

NaivePoly naive_one(std::uint32_t p, int cap);
NaivePoly naive_from(const TruncatedPoly& a);
TruncatedPoly naive_to(const NaivePoly& a);
NaivePoly naive_add(const NaivePoly& a, const NaivePoly& b);
NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b);
NaivePoly naive_pow(const NaivePoly& a, std::uint64_t k);
/// Π(1 + h_i) in the given order.
NaivePoly naive_factor_product(const std::vector<TruncatedPoly>& factors, std::uint32_t p, int cap);

/// Number of elements in the degree-n component of the ideal, by closing the
/// set {u·g·w} under addition and scalar multiples. Returns nullopt when the
/// set would exceed `budget` elements.
std::optional<std::uint64_t> span_size(const GradedIdeal& ideal, int n,
                                       std::uint64_t budget = std::uint64_t{1} << 22);

/// Quotient dimension of degree n derived from span_size (log_p of the index).
std::optional<std::uint64_t> brute_quotient_dimension(const GradedIdeal& ideal, int n,
                                                      std::uint64_t budget = std::uint64_t{1} << 22);

/// table[a][b] = index of a∘b, computed from the structure constants with
/// plain loops. Elements use the same base-p encoding as AdjointGroup.
std::vector<std::vector<std::uint64_t>> brute_circle_table(const FiniteNilAlgebra& r);

/// Least m <= limit such that some ordered m-tuple of cyclic subgroups has
/// product set equal to the whole group, by trying every tuple. Intended for
/// groups of order <= 32; nullopt when no m <= limit works.
std::optional<int> brute_cyclic_width(const FiniteNilAlgebra& r, int limit);

} // namespace adjoint::verify
