#pragma once

#include <vector>

#include "adjoint/poly.hpp"

namespace adjoint {

/// Record of rewriting 1 + a as (1 + h_1)...(1 + h_k) - residual.
///
/// Invariant: every factor is homogeneous and nonzero, and
/// Π(1 + h_i) == 1 + target + residual exactly in the truncated algebra.
struct FactorizationTrace {
    TruncatedPoly target;
    std::vector<TruncatedPoly> factors;
    TruncatedPoly residual;
    Valuation residual_valuation = Valuation::infinity();
    /// Correction rounds applied after seeding.
    int steps = 0;
    /// Residual valuation after seeding and after each round.
    std::vector<Valuation> valuation_history;
};

/// Seeds a trace with one factor per term of `a` (canonical order), so the
/// residual is Π(1 + c_i w_i) - 1 - a. Throws UsageError if a ∉ A⁺.
FactorizationTrace initial_factorization(const TruncatedPoly& a);

/// Right-multiplies by (1 - b_1)...(1 - b_m) for the graded components b_i of
/// the residual, appending each -b_i as a factor. The new residual is obtained
/// by direct truncated multiplication. Throws UsageError on a zero residual.
FactorizationTrace correction_step(const FactorizationTrace& trace);

/// Runs correction rounds until the residual has valuation >= m.
/// Requires a ∈ A⁺ and 1 <= m <= cap + 1.
FactorizationTrace factor_to_valuation(const TruncatedPoly& a, int m);

/// Π(1 + h_i) over the trace's factors, in order.
TruncatedPoly factor_product(const FactorizationTrace& trace);

} // namespace adjoint
