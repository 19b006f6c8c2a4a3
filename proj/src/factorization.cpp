#include "adjoint/factorization.hpp"

#include "adjoint/errors.hpp"

namespace adjoint {

namespace {

TruncatedPoly one_like(const TruncatedPoly& a)
{
    return TruncatedPoly::constant(a.field(), a.cap(), 1);
}

} // namespace

FactorizationTrace initial_factorization(const TruncatedPoly& a)
{
    if (!a.in_augmentation())
        throw UsageError("initial_factorization: target has a nonzero constant term");
    const TruncatedPoly one = one_like(a);
    FactorizationTrace trace{a, {}, TruncatedPoly(a.field(), a.cap()), Valuation::infinity(), 0, {}};
    TruncatedPoly product = one;
    for (const Term& t : a.terms()) {
        auto h = TruncatedPoly::monomial(a.field(), a.cap(), t.word, t.coeff);
        product = product * (one + h);
        trace.factors.push_back(std::move(h));
    }
    trace.residual = product - one - a;
    trace.residual_valuation = valuation(trace.residual);
    trace.valuation_history.push_back(trace.residual_valuation);
    return trace;
}

FactorizationTrace correction_step(const FactorizationTrace& trace)
{
    if (trace.residual.is_zero())
        throw UsageError("correction_step: residual is already zero");
    const TruncatedPoly one = one_like(trace.target);
    FactorizationTrace next = trace;
    // The trace invariant gives the current product without re-multiplying factors.
    TruncatedPoly product = one + trace.target + trace.residual;
    for (auto& [degree, part] : homogeneous_parts(trace.residual)) {
        TruncatedPoly h = -part;
        product = product * (one + h);
        next.factors.push_back(std::move(h));
    }
    next.residual = product - one - trace.target;
    next.residual_valuation = valuation(next.residual);
    next.valuation_history.push_back(next.residual_valuation);
    ++next.steps;
    return next;
}

FactorizationTrace factor_to_valuation(const TruncatedPoly& a, int m)
{
    if (m < 1 || m > a.cap() + 1)
        throw UsageError("factor_to_valuation: m must lie in [1, cap + 1], got " +
                         std::to_string(m));
    FactorizationTrace trace = initial_factorization(a);
    while (trace.residual_valuation < m)
        trace = correction_step(trace);
    return trace;
}

TruncatedPoly factor_product(const FactorizationTrace& trace)
{
    const TruncatedPoly one = one_like(trace.target);
    TruncatedPoly product = one;
    for (const TruncatedPoly& h : trace.factors)
        product = product * (one + h);
    return product;
}

} // namespace adjoint
