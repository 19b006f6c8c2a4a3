#include "adjoint/construction.hpp"

#include "adjoint/errors.hpp"

namespace adjoint {

namespace {

BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

BigInt big_pow(std::uint64_t base, std::uint64_t e)
{
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
}

// Words of degree 1..D.
std::uint64_t word_count(int degree) { return (std::uint64_t{2} << degree) - 2; }

// Word at position pos in canonical order over degrees >= 1.
Word word_at(std::uint64_t pos) { return Word::from_key(pos + 2); }

} // namespace

BigInt elements_of_max_degree(const PrimeField& field, int degree)
{
    if (degree < 1)
        return 0;
    return big_pow(field.p(), word_count(degree)) - big_pow(field.p(), word_count(degree - 1));
}

TruncatedPoly enumerate_aplus(const EnumerationOrder& order, std::uint64_t index, int cap)
{
    if (index == 0)
        throw UsageError("enumeration indices start at 1");
    const std::uint32_t p = order.field.p();
    BigInt rank = index - 1;

    int degree = 1;
    for (;; ++degree) {
        if (degree > cap)
            throw UsageError("element " + std::to_string(index) + " has degree above cap " +
                             std::to_string(cap));
        const BigInt block = elements_of_max_degree(order.field, degree);
        if (rank < block)
            break;
        rank -= block;
    }

    const std::uint64_t total = word_count(degree);
    const std::uint64_t low = word_count(degree - 1); // positions of degree < D
    std::uint64_t size = 1;
    BigInt per_support;
    for (;; ++size) {
        per_support = big_pow(p - 1, size);
        const BigInt block = (binomial(total, size) - binomial(low, size)) * per_support;
        if (rank < block)
            break;
        rank -= block;
    }
    BigInt support_rank = rank / per_support;
    BigInt coeff_rank = rank % per_support;

    // Lexicographic unranking of supports that include a top-degree word.
    std::vector<std::uint64_t> support;
    bool has_top = false;
    std::uint64_t next = 0;
    for (std::uint64_t k = 0; k < size; ++k) {
        const std::uint64_t rest = size - k - 1;
        for (std::uint64_t c = next;; ++c) {
            BigInt completions = binomial(total - c - 1, rest);
            if (!has_top && c < low)
                completions -= binomial(low - c - 1, rest);
            if (support_rank < completions) {
                support.push_back(c);
                has_top = has_top || c >= low;
                next = c + 1;
                break;
            }
            support_rank -= completions;
        }
    }

    std::vector<Term> terms(size);
    for (std::uint64_t k = size; k-- > 0;) {
        const auto digit = static_cast<Coeff>(coeff_rank % (p - 1));
        coeff_rank /= (p - 1);
        terms[k] = {word_at(support[k]), digit + 1};
    }
    return TruncatedPoly::from_terms(order.field, cap, std::move(terms));
}

int frobenius_alpha(std::uint32_t p)
{
    int alpha = 0;
    for (std::uint64_t q = 1; q < 7; q *= p)
        ++alpha;
    return alpha;
}

BigInt projective_class_count(std::uint32_t p, int d)
{
    return (big_pow(p, std::uint64_t{1} << d) - 1) / (p - 1);
}

std::vector<TruncatedPoly> projective_representatives(const PrimeField& field, int cap, int d)
{
    const BigInt count = projective_class_count(field.p(), d);
    if (count > (1U << 20))
        throw UsageError("too many projective classes in degree " + std::to_string(d));
    const std::uint64_t words = std::uint64_t{1} << d;
    const std::uint32_t p = field.p();
    std::vector<TruncatedPoly> reps;
    reps.reserve(static_cast<std::size_t>(count));
    // Leading word `lead` carries coefficient 1; later words range over F_p.
    for (std::uint64_t lead = 0; lead < words; ++lead) {
        const std::uint64_t tail = words - lead - 1;
        std::vector<Coeff> digits(tail, 0);
        for (;;) {
            std::vector<Term> terms{{Word::from_index(d, lead), 1}};
            for (std::uint64_t k = 0; k < tail; ++k)
                if (digits[k] != 0)
                    terms.push_back({Word::from_index(d, lead + 1 + k), digits[k]});
            reps.push_back(TruncatedPoly::from_terms(field, cap, std::move(terms)));
            std::uint64_t k = tail;
            while (k > 0 && digits[k - 1] == p - 1)
                digits[--k] = 0;
            if (k == 0)
                break;
            ++digits[k - 1];
        }
    }
    return reps;
}

std::vector<JGenerator> build_J_generators(const PrimeField& field, int cap)
{
    const int alpha = frobenius_alpha(field.p());
    std::uint64_t q = 1;
    for (int i = 0; i < alpha; ++i)
        q *= field.p();
    std::vector<JGenerator> out;
    for (int d = 1; static_cast<std::uint64_t>(d) * q <= static_cast<std::uint64_t>(cap); ++d)
        for (TruncatedPoly& h : projective_representatives(field, cap, d)) {
            TruncatedPoly g = power(h, q);
            out.push_back({static_cast<int>(d * q), std::move(h), std::move(g)});
        }
    return out;
}

GradedIdeal ConstructionState::ideal() const
{
    GradedIdeal ideal(field, cap);
    for (const IGenerator& g : I_generators)
        ideal.add(g.poly);
    for (const JGenerator& g : J_generators)
        ideal.add(g.generator);
    return ideal;
}

ConstructionState run_construction(const PrimeField& field, int cap, std::uint64_t max_elements)
{
    ConstructionState state{field, cap, max_elements, frobenius_alpha(field.p()), 0, kFirstThreshold - 1,
                            {}, {}, {}, false};
    state.J_generators = build_J_generators(field, cap);
    state.cap_too_small = cap < kFirstThreshold;
    if (state.cap_too_small)
        return state;

    const EnumerationOrder order{field};
    for (std::uint64_t l = 1; l <= max_elements; ++l) {
        const int threshold = std::max(kFirstThreshold, state.last_degree + 1);
        if (threshold > cap)
            break;
        TruncatedPoly f = enumerate_aplus(order, l, cap);
        FactorizationTrace trace = factor_to_valuation(f, threshold);
        for (auto& [degree, part] : homogeneous_parts(trace.residual)) {
            state.I_generators.push_back({degree, part, l});
            state.last_degree = degree;
        }
        state.consumed.push_back({l, std::move(f), threshold, std::move(trace)});
        state.processed = l;
    }
    return state;
}

std::optional<std::uint64_t> adjoint_order(const TruncatedPoly& h, const QuotientBases& bases,
                                           int max_exponent)
{
    std::uint64_t order = 1;
    for (int e = 0; e <= max_exponent; ++e) {
        if (bases.normal_form(circle_pow(h, static_cast<std::int64_t>(order))).is_zero())
            return order;
        order *= h.field().p();
    }
    return std::nullopt;
}

TorsionCertificate torsion_certificate(const ConstructionState& state, const QuotientBases& bases)
{
    const GradedIdeal& ideal = bases.ideal();
    if (ideal.field() != state.field || ideal.cap() != state.cap ||
        ideal.generators().size() != state.I_generators.size() + state.J_generators.size())
        throw UsageError("torsion_certificate: bases were not built for this state's I + J");
    if (bases.built_degree() < state.cap)
        throw UsageError("torsion_certificate: bases built only up to degree " +
                         std::to_string(bases.built_degree()) + ", need " +
                         std::to_string(state.cap));

    TorsionCertificate cert{state.alpha, 1, {}, true};
    for (int i = 0; i < state.alpha; ++i)
        cert.exponent_bound *= state.field.p();
    for (int d = 1; static_cast<std::uint64_t>(d) * cert.exponent_bound <=
                    static_cast<std::uint64_t>(state.cap);
         ++d) {
        for (TruncatedPoly& h : projective_representatives(state.field, state.cap, d)) {
            auto order = adjoint_order(h, bases, state.alpha);
            cert.all_divide = cert.all_divide && order.has_value();
            cert.entries.push_back({std::move(h), d, order});
        }
    }
    return cert;
}

CensusReport census_from_state(const ConstructionState& state)
{
    CensusReport report;
    report.paper = paper_bound_census();
    for (const IGenerator& g : state.I_generators)
        report.actual.add_count(g.degree, 1);
    for (const JGenerator& g : state.J_generators)
        report.actual.add_count(g.degree, 1);
    report.actual.set_horizon(state.cap);

    std::uint64_t q = 1;
    for (int i = 0; i < state.alpha; ++i)
        q *= state.field.p();
    for (int n = 2; n <= state.cap; ++n) {
        CensusRow row{n, 0, 0, tail_count(FromDegreeTail{1, kFirstThreshold}, n), 0, 0};
        for (const IGenerator& g : state.I_generators)
            row.i_count += g.degree == n ? 1 : 0;
        for (const JGenerator& g : state.J_generators)
            row.j_count += g.degree == n ? 1 : 0;
        if (n % static_cast<int>(q) == 0) {
            const int d = n / static_cast<int>(q);
            row.j_paper = BigInt(1) << d;
            row.j_classes = projective_class_count(state.field.p(), d);
        }
        report.i_within_bound = report.i_within_bound && row.i_count <= row.i_bound;
        report.j_matches_classes = report.j_matches_classes && row.j_count == row.j_classes;
        report.j_within_paper_count = report.j_within_paper_count && row.j_count <= row.j_paper;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace adjoint
