#include "adjoint/gs_series.hpp"

#include <cctype>

#include "adjoint/errors.hpp"

namespace adjoint {

namespace {

Rational rational_power(const Rational& base, int e)
{
    Rational result = 1;
    for (int i = 0; i < e; ++i)
        result *= base;
    return result;
}

BigInt parse_integer(std::string_view text)
{
    if (text.empty())
        throw UsageError("empty integer in rational");
    BigInt v = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw UsageError("malformed rational: unexpected '" + std::string(1, c) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

// Geometric ratio base·τ^step of a geometric tail.
Rational ratio(const GeometricTail& t, const Rational& tau)
{
    return Rational(t.base) * rational_power(tau, t.step);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = slash == std::string_view::npos ? BigInt(1) : parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw UsageError("rational with zero denominator");
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& r)
{
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string format_decimal(const Rational& r, int digits)
{
    BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    const bool negative = num < 0;
    if (negative)
        num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    const BigInt scaled = (2 * num * scale + den) / (2 * den);
    std::string s = scaled.str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits))
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return (negative && scaled != 0 ? "-" : "") + s;
}

bool tail_converges(const SeriesTail& tail, const Rational& tau)
{
    return std::visit(
        [&](const auto& t) {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, GeometricTail>)
                return ratio(t, tau) < 1;
            else
                return tau < 1;
        },
        tail);
}

Rational tail_value(const SeriesTail& tail, const Rational& tau)
{
    if (!tail_converges(tail, tau))
        throw DomainError("tail series diverges at tau = " + format_rational(tau));
    return std::visit(
        [&](const auto& t) -> Rational {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, GeometricTail>) {
                const Rational q = ratio(t, tau);
                return Rational(t.coefficient) * rational_power(q, t.start) / (1 - q);
            } else {
                return Rational(t.per_degree) * rational_power(tau, t.start) / (1 - tau);
            }
        },
        tail);
}

BigInt tail_count(const SeriesTail& tail, int n)
{
    return std::visit(
        [&](const auto& t) -> BigInt {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, GeometricTail>) {
                if (t.step <= 0 || n % t.step != 0 || n / t.step < t.start)
                    return 0;
                return t.coefficient * boost::multiprecision::pow(t.base,
                                                                  static_cast<unsigned>(n / t.step));
            } else {
                return n >= t.start ? t.per_degree : BigInt(0);
            }
        },
        tail);
}

void GeneratorCensus::set_count(int n, BigInt r)
{
    if (r < 0)
        throw UsageError("relation counts are non-negative");
    if (n <= 1 && r != 0)
        throw UsageError("relations of degree <= 1 are not allowed (degree " +
                         std::to_string(n) + ")");
    if (r == 0) {
        counts_.erase(n);
        return;
    }
    counts_[n] = std::move(r);
    horizon_ = std::max(horizon_, n);
}

void GeneratorCensus::add_tail(SeriesTail tail)
{
    const bool valid = std::visit(
        [](const auto& t) {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, GeometricTail>)
                return t.step >= 1 && t.start >= 1 && t.step * t.start >= 2 && t.base >= 0 &&
                       t.coefficient >= 0;
            else
                return t.start >= 2 && t.per_degree >= 0;
        },
        tail);
    if (!valid)
        throw UsageError("tail must place relations only in degrees >= 2 with non-negative counts");
    tails_.push_back(std::move(tail));
}

void GeneratorCensus::set_horizon(int horizon)
{
    if (!counts_.empty() && horizon < counts_.rbegin()->first)
        throw UsageError("horizon below the highest supported degree");
    horizon_ = horizon;
}

BigInt GeneratorCensus::count(int n) const
{
    auto it = counts_.find(n);
    return it == counts_.end() ? BigInt(0) : it->second;
}

BigInt GeneratorCensus::total_count(int n) const
{
    BigInt total = count(n);
    for (const SeriesTail& t : tails_)
        total += tail_count(t, n);
    return total;
}

GeneratorCensus expand_tails(const GeneratorCensus& census, int horizon)
{
    GeneratorCensus out;
    for (int n = 2; n <= horizon; ++n)
        out.set_count(n, census.total_count(n));
    for (const auto& [n, r] : census.counts())
        if (n > horizon)
            out.set_count(n, r);
    out.set_horizon(std::max(horizon, census.horizon()));
    return out;
}

Rational f_eval(const GeneratorCensus& census, const Rational& tau)
{
    if (tau <= 0 || tau >= 1)
        throw DomainError("tau must lie in (0, 1), got " + format_rational(tau));
    Rational value = 1 - 2 * tau;
    for (const auto& [n, r] : census.counts())
        value += Rational(r) * rational_power(tau, n);
    for (const SeriesTail& t : census.tails())
        value += tail_value(t, tau);
    return value;
}

GeneratorCensus paper_bound_census()
{
    GeneratorCensus census;
    census.add_tail(GeometricTail{1, 2, 7, 1});
    census.add_tail(FromDegreeTail{1, 14});
    return census;
}

std::optional<Rational> witness_search(const GeneratorCensus& census, int denominator)
{
    if (denominator < 2)
        throw UsageError("grid denominator must be at least 2");
    for (int k = 1; k < denominator; ++k) {
        const Rational tau(k, denominator);
        bool converges = true;
        for (const SeriesTail& t : census.tails())
            converges = converges && tail_converges(t, tau);
        if (converges && f_eval(census, tau) < 0)
            return tau;
    }
    return std::nullopt;
}

RecursionCheck gs_recursion_check(const std::vector<std::uint64_t>& dims,
                                  const GeneratorCensus& census)
{
    const int top = static_cast<int>(dims.size()) - 1;
    if (!census.counts().empty() && census.counts().rbegin()->first > top)
        throw UsageError("census has relations beyond the Hilbert table");
    RecursionCheck check;
    check.lower_bounds.assign(dims.size(), 0);
    auto b = [&](int n) { return n == 0 ? BigInt(1) : BigInt(dims[static_cast<std::size_t>(n)]); };
    for (int n = 1; n <= top; ++n) {
        BigInt bound = 2 * b(n - 1);
        for (int i = 2; i <= n; ++i) {
            const BigInt r = census.total_count(i);
            if (r != 0)
                bound -= r * b(n - i);
        }
        check.lower_bounds[static_cast<std::size_t>(n)] = bound;
        if (b(n) < bound && check.holds) {
            check.holds = false;
            check.first_violation = n;
        }
    }
    return check;
}

} // namespace adjoint
