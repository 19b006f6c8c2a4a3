#pragma once

#include <cstdint>

namespace adjoint {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// The prime field F_p. Elements are stored as representatives in [0, p).
class PrimeField {
public:
    /// Throws UsageError unless p is a prime below 2^31.
    explicit PrimeField(std::uint32_t p = 2);

    std::uint32_t p() const noexcept { return p_; }

    Coeff reduce(std::uint64_t v) const noexcept { return static_cast<Coeff>(v % p_); }
    Coeff reduce_signed(std::int64_t v) const noexcept;
    Coeff add(Coeff a, Coeff b) const noexcept { return reduce(std::uint64_t{a} + b); }
    Coeff sub(Coeff a, Coeff b) const noexcept { return reduce(std::uint64_t{a} + p_ - b); }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept { return reduce(std::uint64_t{a} * b); }
    Coeff pow(Coeff a, std::uint64_t e) const noexcept;
    /// Multiplicative inverse; a must be nonzero.
    Coeff inv(Coeff a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

} // namespace adjoint
