#include "adjoint/field.hpp"

#include <string>

#include "adjoint/errors.hpp"

namespace adjoint {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p >= (std::uint32_t{1} << 31) || !is_prime(p))
        throw UsageError("field modulus must be a prime below 2^31, got " + std::to_string(p));
}

Coeff PrimeField::reduce_signed(std::int64_t v) const noexcept
{
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept
{
    Coeff result = reduce(1);
    while (e != 0) {
        if (e & 1U)
            result = mul(result, a);
        a = mul(a, a);
        e >>= 1U;
    }
    return result;
}

Coeff PrimeField::inv(Coeff a) const
{
    if (reduce(a) == 0)
        throw UsageError("zero has no inverse in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

} // namespace adjoint
