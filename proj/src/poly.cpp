#include "adjoint/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "adjoint/errors.hpp"

namespace adjoint {

namespace {

// Caps up to this use a dense accumulator indexed by word key.
constexpr int kDenseCap = 20;

bool by_word(const Term& a, const Term& b) { return a.word < b.word; }

// Product of two sorted term lists with degree > cap dropped. Coefficients are
// reduced per product so the accumulator cannot overflow for p < 2^31.
std::vector<Term> multiply_terms(const PrimeField& field, int cap, std::span<const Term> a,
                                 std::span<const Term> b)
{
    std::vector<Term> out;
    if (a.empty() || b.empty())
        return out;

    auto for_each_product = [&](auto&& emit) {
        for (const Term& s : a) {
            const int room = cap - s.word.degree();
            if (room < 0)
                break;
            for (const Term& t : b) {
                if (t.word.degree() > room)
                    break;
                emit((s.word * t.word).key(), std::uint64_t{field.mul(s.coeff, t.coeff)});
            }
        }
    };

    if (cap <= kDenseCap) {
        thread_local std::vector<std::uint64_t> acc;
        thread_local std::vector<std::uint64_t> touched;
        const std::size_t slots = std::size_t{2} << cap;
        if (acc.size() < slots)
            acc.resize(slots, 0);
        touched.clear();
        for_each_product([&](std::uint64_t key, std::uint64_t c) {
            if (acc[key] == 0)
                touched.push_back(key);
            acc[key] += c;
        });
        std::sort(touched.begin(), touched.end());
        out.reserve(touched.size());
        for (std::uint64_t key : touched) {
            const Coeff c = field.reduce(acc[key]);
            acc[key] = 0;
            if (c != 0)
                out.push_back({Word::from_key(key), c});
        }
        return out;
    }

    std::unordered_map<std::uint64_t, std::uint64_t> acc;
    for_each_product([&](std::uint64_t key, std::uint64_t c) { acc[key] += c; });
    out.reserve(acc.size());
    for (auto [key, sum] : acc) {
        const Coeff c = field.reduce(sum);
        if (c != 0)
            out.push_back({Word::from_key(key), c});
    }
    std::sort(out.begin(), out.end(), by_word);
    return out;
}

void require_augmentation(const TruncatedPoly& r, const char* op)
{
    if (!r.in_augmentation())
        throw UsageError(std::string(op) + ": operand has a nonzero constant term (not in A+)");
}

} // namespace

int Valuation::value() const
{
    if (is_infinite())
        throw UsageError("valuation of zero is infinite");
    return value_;
}

std::string Valuation::to_string() const
{
    return is_infinite() ? "inf" : std::to_string(value_);
}

TruncatedPoly::TruncatedPoly(PrimeField field, int cap) : field_(field), cap_(cap)
{
    if (cap < 0 || cap > Word::kMaxDegree)
        throw UsageError("degree cap must lie in [0, " + std::to_string(Word::kMaxDegree) + "]");
}

TruncatedPoly::TruncatedPoly(PrimeField field, int cap, std::vector<Term> sorted_terms)
    : TruncatedPoly(field, cap)
{
    terms_ = std::move(sorted_terms);
}

TruncatedPoly TruncatedPoly::constant(PrimeField field, int cap, Coeff c)
{
    return monomial(field, cap, Word(), c);
}

TruncatedPoly TruncatedPoly::monomial(PrimeField field, int cap, Word w, Coeff c)
{
    return from_terms(field, cap, {{w, c}});
}

TruncatedPoly TruncatedPoly::from_terms(PrimeField field, int cap, std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), by_word);
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        const Word w = terms[i].word;
        std::uint64_t sum = 0;
        for (; i < terms.size() && terms[i].word == w; ++i)
            sum += field.reduce(terms[i].coeff);
        const Coeff c = field.reduce(sum);
        if (c == 0)
            continue;
        if (w.degree() > cap)
            throw UsageError("term " + (w.empty() ? std::string("1") : w.letters()) +
                             " has degree " + std::to_string(w.degree()) + " above cap " +
                             std::to_string(cap));
        merged.push_back({w, c});
    }
    return TruncatedPoly(field, cap, std::move(merged));
}

Coeff TruncatedPoly::coeff(Word w) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{w, 0}, by_word);
    return it != terms_.end() && it->word == w ? it->coeff : 0;
}

Coeff TruncatedPoly::constant_term() const
{
    return !terms_.empty() && terms_.front().word.empty() ? terms_.front().coeff : 0;
}

bool TruncatedPoly::is_homogeneous() const noexcept
{
    return !terms_.empty() && terms_.front().word.degree() == terms_.back().word.degree();
}

int TruncatedPoly::max_degree() const noexcept
{
    return terms_.empty() ? -1 : terms_.back().word.degree();
}

TruncatedPoly TruncatedPoly::component(int n) const
{
    auto lo = std::lower_bound(terms_.begin(), terms_.end(), n,
                               [](const Term& t, int d) { return t.word.degree() < d; });
    auto hi = std::find_if(lo, terms_.end(), [n](const Term& t) { return t.word.degree() > n; });
    return TruncatedPoly(field_, cap_, std::vector<Term>(lo, hi));
}

TruncatedPoly TruncatedPoly::scaled(Coeff c) const
{
    c = field_.reduce(c);
    if (c == 0)
        return TruncatedPoly(field_, cap_);
    std::vector<Term> out(terms_);
    for (Term& t : out)
        t.coeff = field_.mul(t.coeff, c);
    return TruncatedPoly(field_, cap_, std::move(out));
}

void TruncatedPoly::check_compatible(const TruncatedPoly& other) const
{
    if (cap_ != other.cap_)
        throw UsageError("degree cap mismatch: " + std::to_string(cap_) + " vs " +
                         std::to_string(other.cap_));
    if (field_ != other.field_)
        throw UsageError("field mismatch: F_" + std::to_string(field_.p()) + " vs F_" +
                         std::to_string(other.field_.p()));
}

template <class Op>
TruncatedPoly& TruncatedPoly::merge(const TruncatedPoly& other, Op op)
{
    check_compatible(other);
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto i = terms_.begin();
    auto j = other.terms_.begin();
    while (i != terms_.end() || j != other.terms_.end()) {
        if (j == other.terms_.end() || (i != terms_.end() && i->word < j->word)) {
            out.push_back(*i++);
        } else if (i == terms_.end() || j->word < i->word) {
            out.push_back({j->word, op(Coeff{0}, j->coeff)});
            ++j;
        } else {
            const Coeff c = op(i->coeff, j->coeff);
            if (c != 0)
                out.push_back({i->word, c});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& other)
{
    return merge(other, [this](Coeff a, Coeff b) { return field_.add(a, b); });
}

TruncatedPoly& TruncatedPoly::operator-=(const TruncatedPoly& other)
{
    return merge(other, [this](Coeff a, Coeff b) { return field_.sub(a, b); });
}

TruncatedPoly TruncatedPoly::operator-() const
{
    return scaled(field_.neg(field_.reduce(1)));
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b)
{
    a.check_compatible(b);
    return TruncatedPoly(a.field_, a.cap_, multiply_terms(a.field_, a.cap_, a.terms_, b.terms_));
}

TruncatedPoly poly_mul(const TruncatedPoly& a, const TruncatedPoly& b) { return a * b; }

TruncatedPoly power(const TruncatedPoly& a, std::uint64_t k)
{
    TruncatedPoly result = TruncatedPoly::constant(a.field(), a.cap(), 1);
    TruncatedPoly base = a;
    while (k != 0) {
        if (k & 1U)
            result = result * base;
        k >>= 1U;
        if (k != 0)
            base = base * base;
    }
    return result;
}

Valuation valuation(const TruncatedPoly& a)
{
    return a.is_zero() ? Valuation::infinity() : Valuation(a.terms().front().word.degree());
}

std::vector<HomogeneousPart> homogeneous_parts(const TruncatedPoly& a)
{
    std::vector<HomogeneousPart> parts;
    const auto terms = a.terms();
    for (std::size_t i = 0; i < terms.size();) {
        const int d = terms[i].word.degree();
        std::vector<Term> chunk;
        for (; i < terms.size() && terms[i].word.degree() == d; ++i)
            chunk.push_back(terms[i]);
        parts.push_back({d, TruncatedPoly::from_terms(a.field(), a.cap(), std::move(chunk))});
    }
    return parts;
}

TruncatedPoly circle_mul(const TruncatedPoly& r, const TruncatedPoly& s)
{
    require_augmentation(r, "circle_mul");
    require_augmentation(s, "circle_mul");
    return r + s + r * s;
}

TruncatedPoly circle_inv(const TruncatedPoly& r)
{
    require_augmentation(r, "circle_inv");
    const TruncatedPoly minus_r = -r;
    TruncatedPoly sum(r.field(), r.cap());
    // (-r)^i has valuation >= i, so the loop ends after at most cap rounds.
    for (TruncatedPoly term = minus_r; !term.is_zero(); term = term * minus_r)
        sum += term;
    return sum;
}

TruncatedPoly circle_pow(const TruncatedPoly& r, std::int64_t k)
{
    require_augmentation(r, "circle_pow");
    // Magnitude of k without overflowing on INT64_MIN.
    auto n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    TruncatedPoly result(r.field(), r.cap());
    TruncatedPoly base = k < 0 ? circle_inv(r) : r;
    while (n != 0) {
        if (n & 1U)
            result = circle_mul(result, base);
        n >>= 1U;
        if (n != 0)
            base = circle_mul(base, base);
    }
    return result;
}

} // namespace adjoint
