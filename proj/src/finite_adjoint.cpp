#include "adjoint/finite_adjoint.hpp"

#include <cmath>
#include <numeric>
#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "adjoint/errors.hpp"

namespace adjoint {

namespace {

constexpr std::uint64_t kMaxEnumerated = std::uint64_t{1} << 24;

std::uint64_t checked_power(std::uint64_t p, std::size_t e)
{
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > kMaxEnumerated / p)
            throw UsageError("too many elements to enumerate (p^" + std::to_string(e) + ")");
        r *= p;
    }
    return r;
}

// Calls f(v) for every F_p-combination of the given vectors.
template <class F>
void for_each_combination(const PrimeField& field, std::size_t ambient,
                          const std::vector<Vec>& generators, F&& f)
{
    const std::uint64_t count = checked_power(field.p(), generators.size());
    std::vector<Coeff> digits(generators.size(), 0);
    for (std::uint64_t i = 0; i < count; ++i) {
        Vec v(ambient, 0);
        for (std::size_t k = 0; k < generators.size(); ++k)
            if (digits[k] != 0)
                for (std::size_t t = 0; t < ambient; ++t)
                    v[t] = field.add(v[t], field.mul(digits[k], generators[k][t]));
        f(v);
        for (std::size_t k = 0; k < digits.size(); ++k) {
            if (++digits[k] < field.p())
                break;
            digits[k] = 0;
        }
    }
}

// Span of {a·b : a ∈ left, b ∈ basis vectors}.
Subspace product_span(const FiniteNilAlgebra& r, const Subspace& left)
{
    Subspace out(r.field(), r.dim());
    for (const Vec& a : left.basis())
        for (std::size_t j = 0; j < r.dim(); ++j)
            out.insert(r.multiply(a, r.basis_vector(j)));
    return out;
}

using ElementSet = std::vector<std::uint64_t>;

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return boost::hash_range(s.begin(), s.end()); }
};

bool subset_of(const ElementSet& a, const ElementSet& b)
{
    for (std::size_t w = 0; w < a.size(); ++w)
        if ((a[w] & ~b[w]) != 0)
            return false;
    return true;
}

std::size_t popcount(const ElementSet& s)
{
    std::size_t n = 0;
    for (auto w : s)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

} // namespace

Subspace::Subspace(PrimeField field, std::size_t ambient)
    : field_(field), ambient_(ambient), echelon_(ambient)
{
}

bool Subspace::insert(const Vec& v)
{
    return echelon_.insert(ModRow(field_, v));
}

Vec Subspace::reduce(const Vec& v) const
{
    ModRow row(field_, v);
    echelon_.reduce(row);
    return row.entries();
}

bool Subspace::contains(const Vec& v) const
{
    return echelon_.contains(ModRow(field_, v));
}

std::vector<Vec> Subspace::basis() const
{
    ModpEchelon copy = echelon_;
    copy.make_reduced();
    std::vector<Vec> out;
    for (const ModRow& row : copy.rows())
        out.push_back(row.entries());
    return out;
}

std::vector<std::size_t> Subspace::free_coordinates() const
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ambient_; ++c)
        if (!echelon_.is_pivot(c))
            out.push_back(c);
    return out;
}

FiniteNilAlgebra::FiniteNilAlgebra(PrimeField field, std::vector<std::string> labels,
                                   std::vector<std::vector<Vec>> mul)
    : field_(field), labels_(std::move(labels)), mul_(std::move(mul))
{
    const std::size_t k = labels_.size();
    if (mul_.size() != k)
        throw UsageError("structure constants must be a dim x dim table");
    for (auto& row : mul_) {
        if (row.size() != k)
            throw UsageError("structure constants must be a dim x dim table");
        for (Vec& v : row) {
            if (v.size() != k)
                throw UsageError("each product must have dim coordinates");
            for (Coeff& c : v)
                c = field_.reduce(c);
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < k; ++t) {
                const Vec ei = basis_vector(i);
                const Vec ek = basis_vector(t);
                if (multiply(mul_[i][j], ek) != multiply(ei, mul_[j][t]))
                    throw UsageError("multiplication is not associative on (" + labels_[i] + ", " +
                                     labels_[j] + ", " + labels_[t] + ")");
            }

    Subspace current(field_, k);
    for (std::size_t i = 0; i < k; ++i)
        current.insert(basis_vector(i));
    powers_.push_back(current);
    while (current.dim() != 0) {
        Subspace next = product_span(*this, current);
        if (next.dim() == current.dim())
            throw UsageError("algebra is not nilpotent (R^n = R^{n+1} != 0)");
        powers_.push_back(next);
        current = std::move(next);
    }
}

FiniteNilAlgebra FiniteNilAlgebra::truncated_polynomial(PrimeField field, int n)
{
    if (n < 1)
        throw UsageError("truncated polynomial algebra needs n >= 1");
    const auto k = static_cast<std::size_t>(n - 1);
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= k; ++i)
        labels.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
    std::vector<std::vector<Vec>> mul(k, std::vector<Vec>(k, Vec(k, 0)));
    // basis index i stands for x^{i+1}
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i + j + 1 < k)
                mul[i][j][i + j + 1] = 1;
    return FiniteNilAlgebra(field, std::move(labels), std::move(mul));
}

FiniteNilAlgebra FiniteNilAlgebra::upper_triangular(PrimeField field, int n)
{
    if (n < 1)
        throw UsageError("matrix size must be >= 1");
    std::vector<std::pair<int, int>> cells;
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            cells.emplace_back(i, j);
            labels.push_back("e" + std::to_string(i) + std::to_string(j));
        }
    const std::size_t k = cells.size();
    std::vector<std::vector<Vec>> mul(k, std::vector<Vec>(k, Vec(k, 0)));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (cells[a].second == cells[b].first)
                for (std::size_t c = 0; c < k; ++c)
                    if (cells[c] == std::make_pair(cells[a].first, cells[b].second))
                        mul[a][b][c] = 1;
    return FiniteNilAlgebra(field, std::move(labels), std::move(mul));
}

FiniteNilAlgebra FiniteNilAlgebra::direct_sum(const FiniteNilAlgebra& a, const FiniteNilAlgebra& b)
{
    if (a.field() != b.field())
        throw UsageError("direct sum of algebras over different fields");
    const std::size_t ka = a.dim();
    const std::size_t k = ka + b.dim();
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::vector<std::vector<Vec>> mul(k, std::vector<Vec>(k, Vec(k, 0)));
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < ka; ++j)
            std::copy(a.mul_[i][j].begin(), a.mul_[i][j].end(), mul[i][j].begin());
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            std::copy(b.mul_[i][j].begin(), b.mul_[i][j].end(),
                      mul[ka + i][ka + j].begin() + static_cast<std::ptrdiff_t>(ka));
    return FiniteNilAlgebra(a.field(), std::move(labels), std::move(mul));
}

FiniteNilAlgebra FiniteNilAlgebra::quotient_by_power(const FiniteNilAlgebra& r, int n)
{
    const Subspace& ideal = r.power(n + 1);
    const std::vector<std::size_t> keep = ideal.free_coordinates();
    const std::size_t k = keep.size();
    std::vector<std::string> labels;
    for (std::size_t c : keep)
        labels.push_back(r.labels_[c]);
    std::vector<std::vector<Vec>> mul(k, std::vector<Vec>(k, Vec(k, 0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const Vec reduced = ideal.reduce(r.mul_[keep[i]][keep[j]]);
            for (std::size_t t = 0; t < k; ++t)
                mul[i][j][t] = reduced[keep[t]];
        }
    return FiniteNilAlgebra(r.field(), std::move(labels), std::move(mul));
}

Vec FiniteNilAlgebra::basis_vector(std::size_t i) const
{
    Vec v(dim(), 0);
    v[i] = 1;
    return v;
}

Vec FiniteNilAlgebra::add(const Vec& a, const Vec& b) const
{
    Vec out(dim());
    for (std::size_t t = 0; t < dim(); ++t)
        out[t] = field_.add(a[t], b[t]);
    return out;
}

Vec FiniteNilAlgebra::multiply(const Vec& a, const Vec& b) const
{
    Vec out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (b[j] == 0)
                continue;
            const Coeff s = field_.mul(a[i], b[j]);
            const Vec& e = mul_[i][j];
            for (std::size_t t = 0; t < dim(); ++t)
                if (e[t] != 0)
                    out[t] = field_.add(out[t], field_.mul(s, e[t]));
        }
    }
    return out;
}

Vec FiniteNilAlgebra::circle(const Vec& a, const Vec& b) const
{
    return add(add(a, b), multiply(a, b));
}

const Subspace& FiniteNilAlgebra::power(int n) const
{
    if (n < 1)
        throw UsageError("power ideals are indexed from 1");
    return powers_[std::min(static_cast<std::size_t>(n), powers_.size()) - 1];
}

const Subspace& power_ideal(const FiniteNilAlgebra& r, int n) { return r.power(n); }

AdjointGroup::AdjointGroup(FiniteNilAlgebra algebra)
    : algebra_(std::move(algebra)), order_(checked_power(algebra_.field().p(), algebra_.dim()))
{
}

Vec AdjointGroup::element(std::uint64_t index) const
{
    const std::uint32_t p = algebra_.field().p();
    Vec v(algebra_.dim());
    for (Coeff& c : v) {
        c = static_cast<Coeff>(index % p);
        index /= p;
    }
    return v;
}

std::uint64_t AdjointGroup::index_of(const Vec& v) const
{
    const std::uint32_t p = algebra_.field().p();
    std::uint64_t index = 0;
    for (std::size_t i = v.size(); i-- > 0;)
        index = index * p + v[i];
    return index;
}

std::uint64_t AdjointGroup::multiply(std::uint64_t a, std::uint64_t b) const
{
    return index_of(algebra_.circle(element(a), element(b)));
}

std::uint64_t AdjointGroup::element_order(std::uint64_t a) const
{
    const Vec r = element(a);
    Vec cur = r;
    std::uint64_t k = 1;
    while (index_of(cur) != 0) {
        cur = algebra_.circle(cur, r);
        ++k;
    }
    return k;
}

std::uint64_t AdjointGroup::inverse(std::uint64_t a) const
{
    const Vec r = element(a);
    Vec cur = algebra_.zero();
    for (std::uint64_t k = element_order(a); k > 1; --k)
        cur = algebra_.circle(cur, r);
    return index_of(cur);
}

bool AdjointGroup::is_abelian() const
{
    const auto k = algebra_.dim();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (algebra_.structure(i, j) != algebra_.structure(j, i))
                return false;
    return true;
}

std::uint64_t quotient_exponent(const FiniteNilAlgebra& r, int n)
{
    if (n < 1)
        throw UsageError("quotient_exponent needs n >= 1");
    const Subspace& ideal = r.power(n + 1);
    std::vector<Vec> reps;
    for (std::size_t c : ideal.free_coordinates())
        reps.push_back(r.basis_vector(c));
    std::uint64_t exponent = 1;
    for_each_combination(r.field(), r.dim(), reps, [&](const Vec& v) {
        Vec cur = v;
        std::uint64_t order = 1;
        while (!ideal.contains(cur)) {
            cur = r.circle(cur, v);
            ++order;
        }
        exponent = std::lcm(exponent, order);
    });
    return exponent;
}

std::uint64_t coset_index(const AdjointGroup& g, int n)
{
    const FiniteNilAlgebra& r = g.algebra();
    std::vector<std::uint64_t> normal;
    for_each_combination(r.field(), r.dim(), r.power(n + 1).basis(),
                         [&](const Vec& v) { normal.push_back(g.index_of(v)); });
    std::vector<bool> seen(g.order(), false);
    std::uint64_t cosets = 0;
    for (std::uint64_t a = 0; a < g.order(); ++a) {
        if (seen[a])
            continue;
        ++cosets;
        const Vec va = g.element(a);
        for (std::uint64_t h : normal) {
            const std::uint64_t b = g.index_of(r.circle(va, g.element(h)));
            if (seen[b])
                throw std::logic_error("cosets of G_n overlap: G_n is not a subgroup");
            seen[b] = true;
        }
    }
    return cosets;
}

ExponentReport exp_bound_check(const FiniteNilAlgebra& r)
{
    ExponentReport report;
    const AdjointGroup g(r);
    const std::uint32_t p = r.field().p();
    for (int n = 1; n < r.nilpotency_class(); ++n) {
        ExponentRow row{};
        row.n = n;
        row.dim_power = r.power(n + 1).dim();
        row.dim_quotient = r.dim() - row.dim_power;
        row.index = coset_index(g, n);
        row.exponent = quotient_exponent(r, n);
        row.bound = std::uint64_t{p} * static_cast<std::uint64_t>(n + 1);
        row.index_matches = row.index == checked_power(p, row.dim_quotient);
        row.ok = row.exponent <= row.bound;
        report.all_ok = report.all_ok && row.ok;
        report.chain_consistent = report.chain_consistent && row.index_matches;
        report.sharpest_ratio = std::max(report.sharpest_ratio, Rational(row.exponent, row.bound));
        report.rows.push_back(row);
    }
    return report;
}

std::optional<int> cyclic_width(const AdjointGroup& g, int limit)
{
    const std::uint64_t order = g.order();
    if (order > kWidthOrderLimit)
        throw UsageError("cyclic width search is limited to groups of order <= 4096, got " +
                         std::to_string(order));
    if (limit < 1)
        return std::nullopt;
    if (order == 1)
        return limit >= 1 ? std::optional<int>(1) : std::nullopt;

    const auto n = static_cast<std::size_t>(order);
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a * n + b] = static_cast<std::uint16_t>(g.multiply(a, b));

    const std::size_t words = (n + 63) / 64;
    ElementSet full(words, ~std::uint64_t{0});
    if (n % 64 != 0)
        full.back() = (std::uint64_t{1} << (n % 64)) - 1;

    // Distinct cyclic subgroups, listed as sorted element lists and as sets.
    std::vector<std::vector<std::uint16_t>> cyclic;
    std::vector<ElementSet> cyclic_sets;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> known;
    for (std::size_t a = 0; a < n; ++a) {
        ElementSet set(words, 0);
        std::vector<std::uint16_t> elems{0};
        set[0] |= 1;
        for (std::size_t cur = a; cur != 0; cur = table[cur * n + a]) {
            elems.push_back(static_cast<std::uint16_t>(cur));
            set[cur / 64] |= std::uint64_t{1} << (cur % 64);
        }
        if (known.emplace(set, cyclic.size()).second) {
            cyclic.push_back(std::move(elems));
            cyclic_sets.push_back(set);
        }
    }
    for (const ElementSet& s : cyclic_sets)
        if (s == full)
            return limit >= 1 ? std::optional<int>(1) : std::nullopt;

    // Products of abelian groups do not depend on the order of the factors, so
    // factor indices can be taken non-decreasing.
    const bool abelian = g.is_abelian();
    struct State {
        ElementSet set;
        std::size_t next;
    };
    std::vector<State> frontier;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> memo;
    for (std::size_t i = 0; i < cyclic.size(); ++i) {
        frontier.push_back({cyclic_sets[i], abelian ? i : 0});
        memo.emplace(cyclic_sets[i], abelian ? i : 0);
    }

    for (int m = 2; m <= limit; ++m) {
        std::unordered_map<ElementSet, std::size_t, ElementSetHash> next;
        for (const State& s : frontier) {
            std::vector<std::uint16_t> members;
            for (std::size_t e = 0; e < n; ++e)
                if ((s.set[e / 64] >> (e % 64)) & 1U)
                    members.push_back(static_cast<std::uint16_t>(e));
            for (std::size_t j = s.next; j < cyclic.size(); ++j) {
                ElementSet product(words, 0);
                for (std::uint16_t a : members)
                    for (std::uint16_t h : cyclic[j]) {
                        const std::uint16_t c = table[std::size_t{a} * n + h];
                        product[c / 64] |= std::uint64_t{1} << (c % 64);
                    }
                if (product == full)
                    return m;
                if (product == s.set)
                    continue;
                const std::size_t key = abelian ? j : 0;
                auto seen = memo.find(product);
                if (seen != memo.end() && seen->second <= key)
                    continue;
                memo[product] = key;
                auto [it, inserted] = next.emplace(product, key);
                if (!inserted)
                    it->second = std::min(it->second, key);
            }
        }
        // Drop states dominated by a superset that allows at least as many extensions.
        std::vector<State> candidates;
        for (auto& [set, key] : next)
            candidates.push_back({set, key});
        std::sort(candidates.begin(), candidates.end(), [](const State& a, const State& b) {
            const auto pa = popcount(a.set), pb = popcount(b.set);
            return pa != pb ? pa > pb : (a.next != b.next ? a.next < b.next : a.set < b.set);
        });
        frontier.clear();
        for (State& c : candidates) {
            bool dominated = false;
            for (const State& kept : frontier)
                if (kept.next <= c.next && subset_of(c.set, kept.set)) {
                    dominated = true;
                    break;
                }
            if (!dominated)
                frontier.push_back(std::move(c));
        }
        if (frontier.empty())
            break;
    }
    return std::nullopt;
}

IndexReport index_exponent_check(const AdjointGroup& g, int width)
{
    const FiniteNilAlgebra& r = g.algebra();
    const std::uint32_t p = r.field().p();
    IndexReport report{width, {}, true};
    const auto m = static_cast<unsigned>(std::max(width, 0));
    for (int n = 1; n < r.nilpotency_class(); ++n) {
        IndexRow row{};
        row.n = n;
        row.index = coset_index(g, n);
        row.exponent = quotient_exponent(r, n);
        row.dim_quotient = r.dim() - r.power(n + 1).dim();
        row.exponent_power = boost::multiprecision::pow(BigInt(row.exponent), m);
        row.chain_bound = boost::multiprecision::pow(BigInt(std::uint64_t{p} * (n + 1)), m);
        row.log_bound = m * (1.0 + std::log(static_cast<double>(n + 1)) / std::log(double(p)));
        row.index_ok = BigInt(row.index) <= row.exponent_power;
        row.chain_ok = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(row.dim_quotient)) <=
                       row.chain_bound;
        row.log_ok = static_cast<double>(row.dim_quotient) <= row.log_bound + 1e-9;
        report.all_ok = report.all_ok && row.index_ok && row.chain_ok && row.log_ok;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace adjoint
