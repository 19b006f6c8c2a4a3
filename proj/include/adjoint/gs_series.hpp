#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace adjoint {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "n", "-n" or "n/d" into a reduced rational. Throws UsageError.
Rational parse_rational(std::string_view text);
/// "num/den" in lowest terms ("n" when the denominator is 1).
std::string format_rational(const Rational& r);
/// Decimal expansion rounded half away from zero to `digits` places.
std::string format_decimal(const Rational& r, int digits);

/// Σ_{d >= start} coefficient · base^d · τ^{step·d}, i.e. coefficient·base^d
/// relations in each degree step·d.
struct GeometricTail {
    BigInt coefficient = 1;
    BigInt base = 1;
    int step = 1;
    int start = 1;

    friend bool operator==(const GeometricTail&, const GeometricTail&) = default;
};

/// Σ_{n >= start} per_degree · τ^n.
struct FromDegreeTail {
    BigInt per_degree = 1;
    int start = 2;

    friend bool operator==(const FromDegreeTail&, const FromDegreeTail&) = default;
};

using SeriesTail = std::variant<GeometricTail, FromDegreeTail>;

bool tail_converges(const SeriesTail& tail, const Rational& tau);
/// Closed-form value; throws DomainError when the tail diverges at tau.
Rational tail_value(const SeriesTail& tail, const Rational& tau);
/// Number of relations the tail places in degree n.
BigInt tail_count(const SeriesTail& tail, int n);

/// Relation counts r_n per degree, optionally bounded above by closed-form tails.
class GeneratorCensus {
public:
    /// Sets r_n. Degrees <= 1 only accept zero (relations live in degree >= 2).
    void set_count(int n, BigInt r);
    void add_count(int n, const BigInt& r) { set_count(n, count(n) + r); }
    void add_tail(SeriesTail tail);
    void set_horizon(int horizon);

    /// Explicit count at degree n (tails excluded).
    BigInt count(int n) const;
    /// Explicit count plus every tail's contribution at degree n.
    BigInt total_count(int n) const;
    const std::map<int, BigInt>& counts() const noexcept { return counts_; }
    const std::vector<SeriesTail>& tails() const noexcept { return tails_; }
    int horizon() const noexcept { return horizon_; }
    bool empty() const noexcept { return counts_.empty() && tails_.empty(); }

    friend bool operator==(const GeneratorCensus&, const GeneratorCensus&) = default;

private:
    std::map<int, BigInt> counts_;
    std::vector<SeriesTail> tails_;
    int horizon_ = 0;
};

/// Replaces every tail by its explicit counts in degrees <= horizon.
GeneratorCensus expand_tails(const GeneratorCensus& census, int horizon);

/// f(τ) = 1 - 2τ + Σ r_n τ^n, tails in closed form. Requires 0 < τ < 1 and every
/// tail convergent at τ; otherwise throws DomainError.
Rational f_eval(const GeneratorCensus& census, const Rational& tau);

/// Upper-bound census with the relation counts of the torsion construction:
/// 2^d relations in degree 7d (d >= 1) and one relation per degree from 14.
GeneratorCensus paper_bound_census();

/// Smallest k/denominator in (0, 1) where every tail converges and f < 0.
std::optional<Rational> witness_search(const GeneratorCensus& census, int denominator);

struct RecursionCheck {
    bool holds = true;
    std::optional<int> first_violation;
    /// 2·b_{n-1} - Σ_{i>=2} r_i·b_{n-i} for each n >= 1 (index 0 unused).
    std::vector<BigInt> lower_bounds;
};

/// Checks b_n >= 2·b_{n-1} - Σ_{i=2}^{n} r_i·b_{n-i} for 1 <= n < dims.size(),
/// with b_0 taken as 1. Explicit counts beyond the table throw UsageError.
RecursionCheck gs_recursion_check(const std::vector<std::uint64_t>& dims,
                                  const GeneratorCensus& census);

} // namespace adjoint
