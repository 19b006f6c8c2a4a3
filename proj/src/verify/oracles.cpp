#include "adjoint/verify/oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "adjoint/errors.hpp"

namespace adjoint::verify {

namespace {

std::string word_string(Word w) { return w.letters(); }

void accumulate(NaivePoly& a, const std::string& word, std::uint64_t c)
{
    const std::uint32_t v = static_cast<std::uint32_t>((a.terms[word] + c) % a.p);
    if (v == 0)
        a.terms.erase(word);
    else
        a.terms[word] = v;
}

// All words of the given length, in lexicographic order.
std::vector<std::string> all_words(int length)
{
    std::vector<std::string> out{""};
    for (int i = 0; i < length; ++i) {
        std::vector<std::string> longer;
        for (const std::string& w : out) {
            longer.push_back(w + 'x');
            longer.push_back(w + 'y');
        }
        out = std::move(longer);
    }
    return out;
}

std::size_t word_position(const std::string& w)
{
    std::size_t pos = 0;
    for (char c : w)
        pos = 2 * pos + (c == 'y' ? 1 : 0);
    return pos;
}

} // namespace

NaivePoly naive_one(std::uint32_t p, int cap)
{
    NaivePoly one{p, cap, {}};
    one.terms[""] = 1 % p;
    return one;
}

NaivePoly naive_from(const TruncatedPoly& a)
{
    NaivePoly out{a.field().p(), a.cap(), {}};
    for (const Term& t : a.terms())
        out.terms[word_string(t.word)] = t.coeff;
    return out;
}

TruncatedPoly naive_to(const NaivePoly& a)
{
    std::vector<Term> terms;
    for (const auto& [w, c] : a.terms)
        terms.push_back({Word::from_letters(w), c});
    return TruncatedPoly::from_terms(PrimeField(a.p), a.cap, std::move(terms));
}

NaivePoly naive_add(const NaivePoly& a, const NaivePoly& b)
{
    if (a.p != b.p || a.cap != b.cap)
        throw UsageError("naive_add: mismatched field or cap");
    NaivePoly out = a;
    for (const auto& [w, c] : b.terms)
        accumulate(out, w, c);
    return out;
}

NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b)
{
    if (a.p != b.p || a.cap != b.cap)
        throw UsageError("naive_mul: mismatched field or cap");
    NaivePoly out{a.p, a.cap, {}};
    for (const auto& [u, cu] : a.terms)
        for (const auto& [w, cw] : b.terms) {
            if (static_cast<int>(u.size() + w.size()) > a.cap)
                continue;
            accumulate(out, u + w, std::uint64_t{cu} * cw);
        }
    return out;
}

NaivePoly naive_pow(const NaivePoly& a, std::uint64_t k)
{
    NaivePoly out = naive_one(a.p, a.cap);
    for (std::uint64_t i = 0; i < k; ++i) {
        out = naive_mul(out, a);
        if (out.terms.empty())
            break;
    }
    return out;
}

NaivePoly naive_factor_product(const std::vector<TruncatedPoly>& factors, std::uint32_t p, int cap)
{
    NaivePoly out = naive_one(p, cap);
    for (const TruncatedPoly& h : factors)
        out = naive_add(out, naive_mul(out, naive_from(h)));
    return out;
}

std::optional<std::uint64_t> span_size(const GradedIdeal& ideal, int n, std::uint64_t budget)
{
    const std::uint32_t p = ideal.field().p();
    if (p > 255)
        throw UsageError("span_size stores coefficients in bytes; p must be below 256");
    if (n < 0 || n > 8)
        throw UsageError("span_size is limited to degrees 0..8");
    const std::size_t columns = std::size_t{1} << n;

    // Spanning set {u·g·w} as coefficient strings.
    std::vector<std::string> spanning;
    for (const IdealGenerator& g : ideal.generators()) {
        if (g.degree > n)
            continue;
        const NaivePoly gn = naive_from(g.poly);
        for (int left = 0; left <= n - g.degree; ++left) {
            const int right = n - g.degree - left;
            for (const std::string& u : all_words(left))
                for (const std::string& w : all_words(right)) {
                    std::string v(columns, '\0');
                    for (const auto& [word, c] : gn.terms)
                        v[word_position(u + word + w)] = static_cast<char>(c);
                    spanning.push_back(std::move(v));
                }
        }
    }

    if (p == 2 && columns <= 64) {
        // Same closure with each vector packed into one machine word.
        std::vector<std::uint64_t> elements{0};
        std::unordered_set<std::uint64_t> members{0};
        for (const std::string& v : spanning) {
            std::uint64_t packed = 0;
            for (std::size_t k = 0; k < columns; ++k)
                packed |= std::uint64_t{v[k] != 0} << k;
            if (members.count(packed))
                continue;
            if (elements.size() * 2 > budget)
                return std::nullopt;
            const std::size_t before = elements.size();
            for (std::size_t i = 0; i < before; ++i) {
                elements.push_back(elements[i] ^ packed);
                members.insert(elements.back());
            }
        }
        return elements.size();
    }

    std::vector<std::string> elements{std::string(columns, '\0')};
    std::unordered_set<std::string> members(elements.begin(), elements.end());
    for (const std::string& v : spanning) {
        if (members.count(v))
            continue;
        if (elements.size() * p > budget)
            return std::nullopt;
        const std::size_t before = elements.size();
        for (std::uint32_t c = 1; c < p; ++c)
            for (std::size_t i = 0; i < before; ++i) {
                std::string sum = elements[i];
                for (std::size_t k = 0; k < columns; ++k)
                    sum[k] = static_cast<char>(
                        (static_cast<unsigned char>(sum[k]) +
                         c * static_cast<unsigned char>(v[k])) % p);
                if (members.insert(sum).second)
                    elements.push_back(std::move(sum));
            }
    }
    return elements.size();
}

std::optional<std::uint64_t> brute_quotient_dimension(const GradedIdeal& ideal, int n,
                                                      std::uint64_t budget)
{
    const auto size = span_size(ideal, n, budget);
    if (!size)
        return std::nullopt;
    std::uint64_t rank = 0;
    for (std::uint64_t s = *size; s > 1; s /= ideal.field().p())
        ++rank;
    return (std::uint64_t{1} << n) - rank;
}

std::vector<std::vector<std::uint64_t>> brute_circle_table(const FiniteNilAlgebra& r)
{
    const std::uint32_t p = r.field().p();
    const std::size_t k = r.dim();
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < k; ++i) {
        order *= p;
        if (order > 4096)
            throw UsageError("brute_circle_table is limited to 4096 elements");
    }
    auto decode = [&](std::uint64_t idx) {
        std::vector<std::uint64_t> v(k);
        for (auto& c : v) {
            c = idx % p;
            idx /= p;
        }
        return v;
    };
    std::vector<std::vector<std::uint64_t>> table(order, std::vector<std::uint64_t>(order));
    for (std::uint64_t a = 0; a < order; ++a) {
        const auto va = decode(a);
        for (std::uint64_t b = 0; b < order; ++b) {
            const auto vb = decode(b);
            std::vector<std::uint64_t> out(k);
            for (std::size_t t = 0; t < k; ++t)
                out[t] = va[t] + vb[t];
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    for (std::size_t t = 0; t < k; ++t)
                        out[t] += va[i] * vb[j] * r.structure()[i][j][t];
            std::uint64_t idx = 0;
            for (std::size_t t = k; t-- > 0;)
                idx = idx * p + out[t] % p;
            table[a][b] = idx;
        }
    }
    return table;
}

std::optional<int> brute_cyclic_width(const FiniteNilAlgebra& r, int limit)
{
    const auto table = brute_circle_table(r);
    const std::size_t n = table.size();
    if (n > 32)
        throw UsageError("brute_cyclic_width is limited to groups of order <= 32");

    std::set<std::vector<bool>> distinct;
    for (std::size_t g = 0; g < n; ++g) {
        std::vector<bool> members(n, false);
        members[0] = true;
        for (std::size_t cur = g; cur != 0; cur = table[cur][g])
            members[cur] = true;
        distinct.insert(members);
    }
    const std::vector<std::vector<bool>> cyclic(distinct.begin(), distinct.end());

    for (int m = 1; m <= limit; ++m) {
        std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
        for (;;) {
            std::vector<bool> product(n, false);
            product[0] = true;
            for (std::size_t f : pick) {
                std::vector<bool> next(n, false);
                for (std::size_t a = 0; a < n; ++a)
                    if (product[a])
                        for (std::size_t h = 0; h < n; ++h)
                            if (cyclic[f][h])
                                next[table[a][h]] = true;
                product = std::move(next);
            }
            if (std::find(product.begin(), product.end(), false) == product.end())
                return m;
            std::size_t k = pick.size();
            while (k > 0 && pick[k - 1] + 1 == cyclic.size())
                pick[--k] = 0;
            if (k == 0)
                break;
            ++pick[k - 1];
        }
    }
    return std::nullopt;
}

} // namespace adjoint::verify
