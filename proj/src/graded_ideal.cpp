#include "adjoint/graded_ideal.hpp"

#include <type_traits>

#include "adjoint/errors.hpp"

namespace adjoint {

namespace {

template <class Row>
Row make_row(const PrimeField& field, std::size_t columns)
{
    if constexpr (std::is_same_v<Row, BitRow>)
        return BitRow(columns);
    else
        return ModRow(field, columns);
}

template <class Row>
Row row_from(const PrimeField& field, int degree, const TruncatedPoly& element)
{
    Row row = make_row<Row>(field, std::size_t{1} << degree);
    for (const Term& t : element.terms()) {
        if (t.word.degree() != degree)
            throw UsageError("element has a term of degree " + std::to_string(t.word.degree()) +
                             ", expected " + std::to_string(degree));
        row.add(t.word.index(), t.coeff);
    }
    return row;
}

template <class Row>
TruncatedPoly poly_from(const PrimeField& field, int cap, int degree, const Row& row)
{
    std::vector<Term> terms;
    for (std::size_t c = row.find_next(0); c != npos; c = row.find_next(c + 1))
        terms.push_back({Word::from_index(degree, c), row.coeff(c)});
    return TruncatedPoly::from_terms(field, cap, std::move(terms));
}

// Feeds every product u·g·w of total degree n into the echelon, stopping early
// once the component is full.
template <class Row>
void span_products(const GradedIdeal& ideal, int n, Echelon<Row>& echelon)
{
    const std::size_t full = std::size_t{1} << n;
    for (const IdealGenerator& g : ideal.generators()) {
        if (g.degree > n)
            continue;
        const int free = n - g.degree;
        for (int left = 0; left <= free; ++left) {
            const int right = free - left;
            for (std::uint64_t u = 0; u < (std::uint64_t{1} << left); ++u) {
                for (std::uint64_t w = 0; w < (std::uint64_t{1} << right); ++w) {
                    Row row = make_row<Row>(ideal.field(), full);
                    for (const Term& t : g.poly.terms()) {
                        const std::uint64_t column =
                            (u << (n - left)) | (t.word.index() << right) | w;
                        row.add(column, t.coeff);
                    }
                    echelon.insert(std::move(row));
                    if (echelon.rank() == full)
                        return;
                }
            }
        }
    }
}

} // namespace

GradedIdeal::GradedIdeal(PrimeField field, int cap, const std::vector<TruncatedPoly>& generators)
    : GradedIdeal(field, cap)
{
    for (const TruncatedPoly& g : generators)
        add(g);
}

void GradedIdeal::add(const TruncatedPoly& generator)
{
    if (generator.cap() != cap_ || generator.field() != field_)
        throw UsageError("generator field or cap does not match the ideal");
    if (!generator.is_homogeneous())
        throw UsageError("ideal generators must be nonzero and homogeneous");
    const int degree = generator.terms().front().word.degree();
    if (degree < 1)
        throw UsageError("ideal generators must lie in A+ (degree >= 1)");
    generators_.push_back({degree, generator});
}

DegreeBasis::DegreeBasis(PrimeField field, int cap, int degree)
    : field_(field), cap_(cap), degree_(degree),
      echelon_(field.p() == 2 ? std::variant<Gf2Echelon, ModpEchelon>(
                                    std::in_place_type<Gf2Echelon>, std::size_t{1} << degree)
                              : std::variant<Gf2Echelon, ModpEchelon>(
                                    std::in_place_type<ModpEchelon>, std::size_t{1} << degree))
{
    if (degree < 0 || degree > cap)
        throw UsageError("basis degree " + std::to_string(degree) + " outside [0, cap]");
    if (degree > 30)
        throw UsageError("degree components above 30 are too large to materialize");
}

std::size_t DegreeBasis::rank() const
{
    return std::visit([](const auto& e) { return e.rank(); }, echelon_);
}

bool DegreeBasis::insert(const TruncatedPoly& element)
{
    return std::visit(
        [&](auto& e) {
            using Row = std::decay_t<decltype(e.rows().front())>;
            return e.insert(row_from<Row>(field_, degree_, element));
        },
        echelon_);
}

void DegreeBasis::make_reduced()
{
    std::visit([](auto& e) { e.make_reduced(); }, echelon_);
}

bool DegreeBasis::is_reduced() const
{
    return std::visit([](const auto& e) { return e.is_reduced(); }, echelon_);
}

std::vector<TruncatedPoly> DegreeBasis::rows() const
{
    return std::visit(
        [&](const auto& e) {
            std::vector<TruncatedPoly> out;
            out.reserve(e.rank());
            for (const auto& row : e.rows())
                out.push_back(poly_from(field_, cap_, degree_, row));
            return out;
        },
        echelon_);
}

TruncatedPoly DegreeBasis::reduce(const TruncatedPoly& element) const
{
    if (element.cap() != cap_ || element.field() != field_)
        throw UsageError("element field or cap does not match the basis");
    return std::visit(
        [&](const auto& e) {
            using Row = std::decay_t<decltype(e.rows().front())>;
            Row row = row_from<Row>(field_, degree_, element);
            e.reduce(row);
            return poly_from(field_, cap_, degree_, row);
        },
        echelon_);
}

DegreeBasis ideal_component_basis(const GradedIdeal& ideal, int n)
{
    DegreeBasis basis(ideal.field(), ideal.cap(), n);
    std::visit(
        [&](auto& e) {
            span_products(ideal, n, e);
            e.make_reduced();
        },
        basis.echelon_);
    return basis;
}

QuotientBases::QuotientBases(const GradedIdeal& ideal) : QuotientBases(ideal, ideal.cap()) {}

QuotientBases::QuotientBases(const GradedIdeal& ideal, int up_to_degree) : ideal_(ideal)
{
    if (up_to_degree > ideal.cap())
        throw UsageError("cannot build bases beyond the cap");
    bases_.reserve(static_cast<std::size_t>(std::max(up_to_degree, 0)));
    for (int n = 1; n <= up_to_degree; ++n)
        bases_.push_back(ideal_component_basis(ideal, n));
}

const DegreeBasis& QuotientBases::basis(int n) const
{
    if (n < 1 || n > built_degree())
        throw UsageError("no basis built for degree " + std::to_string(n) + " (built up to " +
                         std::to_string(built_degree()) + ")");
    return bases_[static_cast<std::size_t>(n - 1)];
}

TruncatedPoly QuotientBases::normal_form(const TruncatedPoly& a) const
{
    if (a.cap() != ideal_.cap() || a.field() != ideal_.field())
        throw UsageError("element field or cap does not match the ideal");
    TruncatedPoly result(a.field(), a.cap());
    for (auto& [degree, part] : homogeneous_parts(a))
        result += degree == 0 ? part : basis(degree).reduce(part);
    return result;
}

HilbertTable QuotientBases::hilbert() const
{
    HilbertTable table{{1}, {0}};
    for (const DegreeBasis& b : bases_) {
        table.ideal_ranks.push_back(b.rank());
        table.dims.push_back(b.ambient_dimension() - b.rank());
    }
    return table;
}

HilbertTable quotient_dimensions(const GradedIdeal& ideal)
{
    return QuotientBases(ideal).hilbert();
}

TruncatedPoly normal_form(const TruncatedPoly& a, const GradedIdeal& ideal)
{
    return QuotientBases(ideal, std::max(a.max_degree(), 0)).normal_form(a);
}

NilpotencyBound nilpotency_bound(const TruncatedPoly& a, const QuotientBases& bases, int max_k)
{
    if (!a.in_augmentation())
        throw UsageError("nilpotency_bound: element has a nonzero constant term");
    if (max_k <= 0)
        max_k = a.cap() + 1;
    TruncatedPoly power_k = a;
    for (int k = 1; k <= max_k; ++k) {
        if (k > 1)
            power_k = power_k * a;
        if (bases.normal_form(power_k).is_zero())
            return {k, power_k.is_zero()};
    }
    return {};
}

NilpotencyBound nilpotency_bound(const TruncatedPoly& a, const GradedIdeal& ideal, int max_k)
{
    return nilpotency_bound(a, QuotientBases(ideal), max_k);
}

} // namespace adjoint
