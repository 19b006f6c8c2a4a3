#include "adjoint/io.hpp"

#include <sstream>

#include "adjoint/errors.hpp"
#include "adjoint/text.hpp"

namespace adjoint::io {

namespace {

const BigInt kExactJsonLimit = BigInt(1) << 53;

Json big_json(const BigInt& v)
{
    if (v < kExactJsonLimit && v > -kExactJsonLimit)
        return static_cast<std::int64_t>(v);
    return v.str();
}

BigInt big_from_json(const Json& j, const char* what)
{
    if (j.is_number_integer())
        return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const bool digits = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) ==
                                              std::string::npos;
        if (digits && s != "-")
            return BigInt(s);
    }
    throw UsageError(std::string("expected an integer for ") + what);
}

int int_from_json(const Json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw UsageError(std::string("missing integer field '") + key + "'");
    return j.at(key).get<int>();
}

Json poly_list(const std::vector<TruncatedPoly>& polys)
{
    Json out = Json::array();
    for (const TruncatedPoly& p : polys)
        out.push_back(format_poly(p));
    return out;
}

Json tail_json(const SeriesTail& tail)
{
    if (const auto* g = std::get_if<GeometricTail>(&tail))
        return Json{{"kind", "geometric"},
                    {"coefficient", big_json(g->coefficient)},
                    {"base", big_json(g->base)},
                    {"step", g->step},
                    {"start", g->start}};
    const auto& f = std::get<FromDegreeTail>(tail);
    return Json{{"kind", "from_degree"}, {"per_degree", big_json(f.per_degree)}, {"start", f.start}};
}

SeriesTail tail_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw UsageError("tail entries need a string 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "geometric")
        return GeometricTail{big_from_json(j.value("coefficient", Json(1)), "coefficient"),
                             big_from_json(j.at("base"), "base"), int_from_json(j, "step"),
                             int_from_json(j, "start")};
    if (kind == "from_degree")
        return FromDegreeTail{big_from_json(j.value("per_degree", Json(1)), "per_degree"),
                              int_from_json(j, "start")};
    throw UsageError("unknown tail kind '" + kind + "'");
}

Json optional_json(const std::optional<std::uint64_t>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json valuation_json(Valuation v)
{
    if (v.is_infinite())
        return "inf";
    return v.value();
}

Json trace_json(const FactorizationTrace& trace)
{
    Json out;
    out["a"] = format_poly(trace.target);
    out["factors"] = poly_list(trace.factors);
    out["residual"] = format_poly(trace.residual);
    out["valuation"] = valuation_json(trace.residual_valuation);
    out["steps"] = trace.steps;
    return out;
}

Json ideal_json(const GradedIdeal& ideal)
{
    Json out = Json::array();
    for (const IdealGenerator& g : ideal.generators())
        out.push_back(Json::array({g.degree, format_poly(g.poly)}));
    return out;
}

GradedIdeal ideal_from_json(const Json& j, PrimeField field, int cap)
{
    if (!j.is_array())
        throw UsageError("ideal generators must be a JSON list");
    GradedIdeal ideal(field, cap);
    for (const Json& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_string())
            throw UsageError("each generator must be [degree, \"polynomial\"]");
        TruncatedPoly g = parse_poly(entry[1].get<std::string>(), field, cap);
        const int degree = entry[0].get<int>();
        if (!g.is_homogeneous() || g.is_zero() || g.max_degree() != degree)
            throw UsageError("generator '" + entry[1].get<std::string>() +
                             "' is not homogeneous of degree " + std::to_string(degree));
        ideal.add(g);
    }
    return ideal;
}

Json hilbert_json(const HilbertTable& table)
{
    return Json{{"dims", table.dims}, {"ideal_rank", table.ideal_ranks}};
}

std::string hilbert_csv(const HilbertTable& table)
{
    std::ostringstream out;
    out << "n,dim,ideal_rank\n";
    for (std::size_t n = 0; n < table.dims.size(); ++n)
        out << n << ',' << table.dims[n] << ',' << table.ideal_ranks[n] << '\n';
    return out.str();
}

Json census_json(const GeneratorCensus& census)
{
    Json counts = Json::object();
    for (const auto& [n, r] : census.counts())
        counts[std::to_string(n)] = big_json(r);
    Json tails = Json::array();
    for (const SeriesTail& t : census.tails())
        tails.push_back(tail_json(t));
    return Json{{"counts", counts}, {"tails", tails}};
}

GeneratorCensus census_from_json(const Json& j)
{
    if (!j.is_object())
        throw UsageError("census must be a JSON object");
    GeneratorCensus census;
    if (j.contains("counts")) {
        if (!j.at("counts").is_object())
            throw UsageError("census 'counts' must map degrees to counts");
        for (const auto& [key, value] : j.at("counts").items()) {
            int n = 0;
            try {
                std::size_t used = 0;
                n = std::stoi(key, &used);
                if (used != key.size())
                    throw UsageError("");
            } catch (const std::exception&) {
                throw UsageError("census degree '" + key + "' is not an integer");
            }
            census.set_count(n, big_from_json(value, "count"));
        }
    }
    if (j.contains("tails")) {
        if (!j.at("tails").is_array())
            throw UsageError("census 'tails' must be a list");
        for (const Json& t : j.at("tails"))
            census.add_tail(tail_from_json(t));
    }
    return census;
}

Json gs_report_json(const Rational& tau, const Rational& value)
{
    return Json{{"tau", format_rational(tau)},
                {"f_value_exact", format_rational(value)},
                {"f_value_decimal", format_decimal(value, 10)},
                {"negative", value < 0}};
}

Json manifest_json(const ConstructionState& state)
{
    Json I = Json::array();
    for (const IGenerator& g : state.I_generators)
        I.push_back(Json{{"degree", g.degree}, {"source", g.source}, {"terms", g.poly.size()},
                         {"poly", format_poly(g.poly)}});
    Json J = Json::array();
    for (const JGenerator& g : state.J_generators)
        J.push_back(Json{{"degree", g.degree}, {"base", format_poly(g.base)},
                         {"terms", g.generator.size()}});
    Json traces = Json::array();
    for (const ConsumedElement& c : state.consumed) {
        Json t = trace_json(c.trace);
        // Residuals near the cap run to thousands of terms; the I list already
        // carries them, so traces keep only the sizes.
        t["residual"] = Json{{"terms", c.trace.residual.size()}};
        t["factors"] = c.trace.factors.size();
        Json entry{{"index", c.index}, {"threshold", c.threshold}};
        entry.update(t);
        traces.push_back(std::move(entry));
    }
    Json out;
    out["p"] = state.field.p();
    out["cap"] = state.cap;
    out["max_elements"] = state.max_elements;
    out["alpha"] = state.alpha;
    out["processed"] = state.processed;
    out["cap_too_small"] = state.cap_too_small;
    out["I"] = std::move(I);
    out["J"] = std::move(J);
    out["traces"] = std::move(traces);
    out["census"] = census_json(census_from_state(state).actual);
    return out;
}

Json torsion_json(const TorsionCertificate& cert)
{
    Json entries = Json::array();
    for (const TorsionEntry& e : cert.entries)
        entries.push_back(Json{{"h", format_poly(e.h)}, {"degree", e.degree},
                               {"order", optional_json(e.order)}});
    return Json{{"alpha", cert.alpha},
                {"exponent_bound", cert.exponent_bound},
                {"all_divide", cert.all_divide},
                {"entries", std::move(entries)}};
}

Json algebra_json(const FiniteNilAlgebra& r)
{
    return Json{{"p", r.field().p()}, {"dim", r.dim()}, {"labels", r.labels()}, {"mul", r.structure()}};
}

FiniteNilAlgebra algebra_from_json(const Json& j)
{
    if (!j.is_object())
        throw UsageError("algebra file must be a JSON object");
    const int p = int_from_json(j, "p");
    const int dim = int_from_json(j, "dim");
    if (p < 2 || dim < 0)
        throw UsageError("algebra needs p >= 2 and dim >= 0");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<std::string>>();
    } else {
        for (int i = 0; i < dim; ++i)
            labels.push_back("e" + std::to_string(i + 1));
    }
    if (static_cast<int>(labels.size()) != dim)
        throw UsageError("labels length does not match dim");
    if (!j.contains("mul"))
        throw UsageError("algebra file lacks 'mul'");
    std::vector<std::vector<Vec>> mul;
    try {
        // Signed input is accepted and reduced mod p by the field below.
        const auto raw = j.at("mul").get<std::vector<std::vector<std::vector<std::int64_t>>>>();
        const PrimeField field(static_cast<std::uint32_t>(p));
        for (const auto& row : raw) {
            auto& out_row = mul.emplace_back();
            for (const auto& v : row) {
                Vec& out = out_row.emplace_back();
                for (std::int64_t c : v)
                    out.push_back(field.reduce_signed(c));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed 'mul': ") + e.what());
    }
    return FiniteNilAlgebra(PrimeField(static_cast<std::uint32_t>(p)), std::move(labels),
                            std::move(mul));
}

Json exponent_json(const ExponentReport& report)
{
    Json rows = Json::array();
    for (const ExponentRow& r : report.rows)
        rows.push_back(Json{{"n", r.n},
                            {"dim_power", r.dim_power},
                            {"dim_quotient", r.dim_quotient},
                            {"index", r.index},
                            {"exponent", r.exponent},
                            {"bound", r.bound},
                            {"index_matches", r.index_matches},
                            {"ok", r.ok}});
    return Json{{"all_ok", report.all_ok},
                {"chain_consistent", report.chain_consistent},
                {"sharpest_ratio", format_rational(report.sharpest_ratio)},
                {"rows", std::move(rows)}};
}

std::string exponent_csv(const ExponentReport& report)
{
    std::ostringstream out;
    out << "n,dim_power,dim_quotient,index,exponent,bound,ok\n";
    for (const ExponentRow& r : report.rows)
        out << r.n << ',' << r.dim_power << ',' << r.dim_quotient << ',' << r.index << ','
            << r.exponent << ',' << r.bound << ',' << (r.ok && r.index_matches ? "true" : "false")
            << '\n';
    return out.str();
}

Json index_json(const IndexReport& report)
{
    Json rows = Json::array();
    for (const IndexRow& r : report.rows)
        rows.push_back(Json{{"n", r.n},
                            {"index", r.index},
                            {"exponent", r.exponent},
                            {"exponent_power", big_json(r.exponent_power)},
                            {"chain_bound", big_json(r.chain_bound)},
                            {"dim_quotient", r.dim_quotient},
                            {"index_ok", r.index_ok},
                            {"chain_ok", r.chain_ok},
                            {"log_ok", r.log_ok}});
    return Json{{"width", report.width}, {"all_ok", report.all_ok}, {"rows", std::move(rows)}};
}

} // namespace adjoint::io
