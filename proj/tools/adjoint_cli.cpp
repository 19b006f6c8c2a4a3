// Command-line front-end for the adjoint library.
//
// Exit status: 0 success, 1 a verified property failed, 2 usage error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adjoint/construction.hpp"
#include "adjoint/errors.hpp"
#include "adjoint/factorization.hpp"
#include "adjoint/finite_adjoint.hpp"
#include "adjoint/graded_ideal.hpp"
#include "adjoint/gs_series.hpp"
#include "adjoint/io.hpp"
#include "adjoint/text.hpp"
#include "adjoint/verify/acceptance.hpp"
#include "adjoint/version.hpp"

namespace {

using adjoint::io::Json;
using namespace adjoint;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Config {
    std::uint32_t p = 2;
    int cap = 16;
    std::string tau = "3/4";
    std::string format = "text";
    std::uint64_t seed = 20240531;
    std::string out;
    bool no_timing = false;

    // factor
    std::string a;
    int m = 0;
    // construct / torsion
    std::uint64_t max_elements = 1000;
    // hilbert
    std::vector<std::string> generators;
    std::string ideal_file;
    bool from_construction = false;
    // gs-check
    bool paper = false;
    std::string census_file;
    int grid = 0;
    // exponent / width
    std::string algebra = "poly";
    int n = 3;
    std::vector<int> parts;
    std::string algebra_file;
    int limit = 12;
};

/// What a subcommand produced: a JSON document, the text rendering, an
/// optional CSV table, and whether every checked property held.
struct Report {
    Json json = Json::object();
    std::string text;
    std::string csv;
    bool ok = true;
};

Json config_json(const Config& c, const std::string& command)
{
    Json j;
    j["command"] = command;
    j["p"] = c.p;
    j["cap"] = c.cap;
    j["format"] = c.format;
    j["seed"] = c.seed;
    if (command == "factor") {
        j["a"] = c.a;
        j["m"] = c.m;
    } else if (command == "construct" || command == "torsion") {
        j["max_elements"] = c.max_elements;
    } else if (command == "hilbert") {
        j["generators"] = c.generators;
        j["ideal_file"] = c.ideal_file;
        j["construction"] = c.from_construction;
        j["max_elements"] = c.max_elements;
    } else if (command == "gs-check") {
        j["tau"] = c.tau;
        j["paper"] = c.paper;
        j["census_file"] = c.census_file;
        j["grid"] = c.grid;
    } else if (command == "exponent" || command == "width") {
        j["algebra"] = c.algebra;
        j["n"] = c.n;
        j["parts"] = c.parts;
        j["file"] = c.algebra_file;
        if (command == "width")
            j["limit"] = c.limit;
    }
    return j;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string summarize_poly(const TruncatedPoly& a, std::size_t max_terms = 12)
{
    if (a.size() <= max_terms)
        return format_poly(a);
    const auto parts = homogeneous_parts(a);
    std::ostringstream s;
    s << "<" << a.size() << " terms in degrees";
    for (const auto& part : parts)
        s << ' ' << part.degree;
    s << ">";
    return s.str();
}

// ---------------------------------------------------------------- factor

Report run_factor(const Config& c)
{
    const PrimeField field(c.p);
    const TruncatedPoly a = parse_poly(c.a, field, c.cap);
    const int m = c.m == 0 ? c.cap + 1 : c.m;
    const FactorizationTrace trace = factor_to_valuation(a, m);

    Report r;
    const TruncatedPoly expected = TruncatedPoly::constant(field, c.cap, 1) + a + trace.residual;
    const bool identity = factor_product(trace) == expected;
    bool homogeneous = true;
    for (const TruncatedPoly& h : trace.factors)
        homogeneous = homogeneous && h.is_homogeneous();
    const bool reached = valuation(trace.residual) >= m;
    r.ok = identity && homogeneous && reached;

    r.json = io::trace_json(trace);
    r.json["m"] = m;
    r.json["verified"] = {{"product_identity", identity},
                          {"factors_homogeneous", homogeneous},
                          {"valuation_reached", reached}};

    std::ostringstream t;
    t << "a: " << format_poly(a) << "\n";
    t << "factors (" << trace.factors.size() << "):\n";
    for (std::size_t i = 0; i < trace.factors.size(); ++i)
        t << "  h" << i + 1 << " = " << summarize_poly(trace.factors[i]) << "\n";
    t << "residual: " << summarize_poly(trace.residual) << "\n";
    t << "valuation: " << trace.residual_valuation.to_string() << "\n";
    t << "steps: " << trace.steps << "\n";
    t << "product identity: " << (identity ? "ok" : "FAILED") << "\n";
    r.text = t.str();

    std::ostringstream csv;
    csv << "index,degree,terms,factor\n";
    for (std::size_t i = 0; i < trace.factors.size(); ++i)
        csv << i + 1 << ',' << trace.factors[i].max_degree() << ',' << trace.factors[i].size()
            << ",\"" << format_poly(trace.factors[i]) << "\"\n";
    r.csv = csv.str();
    return r;
}

// ---------------------------------------------------------------- construct

Report run_construct(const Config& c)
{
    const ConstructionState state = run_construction(PrimeField(c.p), c.cap, c.max_elements);
    const CensusReport census = census_from_state(state);

    Report r;
    std::map<int, int> seen;
    for (const IGenerator& g : state.I_generators)
        ++seen[g.degree];
    bool distinct = true;
    for (const auto& [degree, count] : seen)
        distinct = distinct && count == 1 && degree >= kFirstThreshold;
    r.ok = distinct;

    r.json = io::manifest_json(state);
    r.json["verified"] = {{"I_degrees_distinct", distinct},
                          {"J_matches_classes", census.j_matches_classes},
                          {"J_within_paper_count", census.j_within_paper_count}};

    std::ostringstream t;
    t << "p: " << c.p << "  cap: " << c.cap << "  alpha: " << state.alpha << "\n";
    t << "elements consumed: " << state.processed << "\n";
    if (state.cap_too_small)
        t << "cap below " << kFirstThreshold << ": no I-generators fit\n";
    t << "I generators (" << state.I_generators.size() << "):\n";
    for (const IGenerator& g : state.I_generators)
        t << "  degree " << g.degree << " from f_" << g.source << ": "
          << summarize_poly(g.poly, 6) << "\n";
    std::map<int, int> j_counts;
    for (const JGenerator& g : state.J_generators)
        ++j_counts[g.degree];
    t << "J generators (" << state.J_generators.size() << "):";
    for (const auto& [degree, count] : j_counts)
        t << "  " << count << " at degree " << degree;
    t << "\n";
    t << "I degrees distinct: " << (distinct ? "yes" : "NO") << "\n";
    r.text = t.str();

    std::ostringstream csv;
    csv << "degree,i_count,j_count,i_bound,j_paper,j_classes\n";
    for (const CensusRow& row : census.rows)
        csv << row.degree << ',' << row.i_count << ',' << row.j_count << ',' << row.i_bound << ','
            << row.j_paper << ',' << row.j_classes << '\n';
    r.csv = csv.str();
    return r;
}

// ---------------------------------------------------------------- hilbert

Report run_hilbert(const Config& c)
{
    const PrimeField field(c.p);
    const int sources = (c.generators.empty() ? 0 : 1) + (c.ideal_file.empty() ? 0 : 1) +
                        (c.from_construction ? 1 : 0);
    if (sources != 1)
        throw UsageError("hilbert needs exactly one of --gen, --ideal or --construction");

    GradedIdeal ideal(field, c.cap);
    if (c.from_construction) {
        ideal = run_construction(field, c.cap, c.max_elements).ideal();
    } else if (!c.ideal_file.empty()) {
        ideal = io::ideal_from_json(read_json_file(c.ideal_file), field, c.cap);
    } else {
        for (const std::string& g : c.generators)
            ideal.add(parse_poly(g, field, c.cap));
    }
    const HilbertTable table = quotient_dimensions(ideal);

    GeneratorCensus census;
    for (const IdealGenerator& g : ideal.generators())
        census.add_count(g.degree, 1);
    const RecursionCheck rec = gs_recursion_check(table.dims, census);

    Report r;
    r.json["generators"] = io::ideal_json(ideal);
    r.json["hilbert"] = io::hilbert_json(table);
    r.json["gs_recursion"] = {{"holds", rec.holds},
                              {"first_violation", rec.first_violation
                                                      ? Json(*rec.first_violation)
                                                      : Json(nullptr)}};
    std::ostringstream t;
    t << "generators: " << ideal.generators().size() << "\n";
    t << "n  dim  ideal_rank\n";
    for (std::size_t n = 0; n < table.dims.size(); ++n)
        t << n << "  " << table.dims[n] << "  " << table.ideal_ranks[n] << "\n";
    t << "GS recursion: " << (rec.holds ? "holds" : "fails") << "\n";
    r.text = t.str();
    r.csv = io::hilbert_csv(table);
    return r;
}

// ---------------------------------------------------------------- gs-check

Report run_gs_check(const Config& c)
{
    if (c.paper == !c.census_file.empty())
        throw UsageError("gs-check needs exactly one of --paper or --census FILE");
    const Rational tau = parse_rational(c.tau);
    if (!(tau > 0 && tau < 1))
        throw UsageError("--tau must lie strictly between 0 and 1");
    const GeneratorCensus census =
        c.paper ? paper_bound_census() : io::census_from_json(read_json_file(c.census_file));

    Report r;
    std::ostringstream t;
    t << "tau: " << format_rational(tau) << "\n";
    try {
        const Rational f = f_eval(census, tau);
        r.json = io::gs_report_json(tau, f);
        r.ok = f < 0;
        t << "f_value_exact: " << format_rational(f) << "\n";
        t << "f_value_decimal: " << format_decimal(f, 10) << "\n";
        t << "negative: " << (f < 0 ? "true" : "false") << "\n";
    } catch (const DomainError& e) {
        r.ok = false;
        r.json = {{"tau", format_rational(tau)}, {"error", e.what()}, {"negative", false}};
        t << "not evaluable: " << e.what() << "\n";
    }
    if (c.grid > 0) {
        const auto witness = witness_search(census, c.grid);
        r.json["witness"] = witness ? Json(format_rational(*witness)) : Json(nullptr);
        t << "witness on 1/" << c.grid << " grid: "
          << (witness ? format_rational(*witness) : std::string("none")) << "\n";
    }
    r.json["census"] = io::census_json(census);
    r.text = t.str();

    std::ostringstream csv;
    csv << "tau,f_value_exact,f_value_decimal,negative\n";
    if (r.json.contains("f_value_exact"))
        csv << format_rational(tau) << ',' << r.json["f_value_exact"].get<std::string>() << ','
            << r.json["f_value_decimal"].get<std::string>() << ',' << (r.ok ? "true" : "false")
            << '\n';
    r.csv = csv.str();
    return r;
}

// ---------------------------------------------------------------- torsion

Report run_torsion(const Config& c)
{
    const ConstructionState state = run_construction(PrimeField(c.p), c.cap, c.max_elements);
    const QuotientBases bases(state.ideal());
    const TorsionCertificate cert = torsion_certificate(state, bases);

    Report r;
    r.ok = cert.all_divide;
    r.json = io::torsion_json(cert);
    std::ostringstream t;
    t << "p^alpha: " << cert.exponent_bound << "\n";
    for (const TorsionEntry& e : cert.entries)
        t << "  h = " << format_poly(e.h) << "  order "
          << (e.order ? std::to_string(*e.order) : std::string("> p^alpha")) << "\n";
    t << "classes: " << cert.entries.size() << "  all divide p^alpha: "
      << (cert.all_divide ? "yes" : "NO") << "\n";
    r.text = t.str();
    std::ostringstream csv;
    csv << "h,degree,order\n";
    for (const TorsionEntry& e : cert.entries)
        csv << '"' << format_poly(e.h) << "\"," << e.degree << ','
            << (e.order ? std::to_string(*e.order) : std::string()) << '\n';
    r.csv = csv.str();
    return r;
}

// ---------------------------------------------------------------- algebras

FiniteNilAlgebra build_algebra(const Config& c)
{
    const PrimeField field(c.p);
    if (c.algebra == "poly") {
        if (c.n < 2)
            throw UsageError("--n must be at least 2 for xF_p[x]/(x^n)");
        return FiniteNilAlgebra::truncated_polynomial(field, c.n);
    }
    if (c.algebra == "upper") {
        if (c.n < 2)
            throw UsageError("--n must be at least 2 for upper-triangular matrices");
        return FiniteNilAlgebra::upper_triangular(field, c.n);
    }
    if (c.algebra == "sum") {
        if (c.parts.empty())
            throw UsageError("--algebra sum needs --parts, e.g. --parts 2,2");
        std::optional<FiniteNilAlgebra> sum;
        for (int part : c.parts) {
            if (part < 2)
                throw UsageError("every part must be at least 2");
            auto next = FiniteNilAlgebra::truncated_polynomial(field, part);
            sum = sum ? FiniteNilAlgebra::direct_sum(*sum, next) : next;
        }
        return *sum;
    }
    if (c.algebra_file.empty())
        throw UsageError("--algebra file needs --file");
    return io::algebra_from_json(read_json_file(c.algebra_file));
}

Report run_exponent(const Config& c)
{
    const FiniteNilAlgebra algebra = build_algebra(c);
    const ExponentReport report = exp_bound_check(algebra);

    Report r;
    r.ok = report.all_ok && report.chain_consistent;
    r.json = io::exponent_json(report);
    r.json["algebra"] = io::algebra_json(algebra);
    std::ostringstream t;
    t << "n  dim_R^{n+1}  index  exponent  bound  ok\n";
    for (const ExponentRow& row : report.rows)
        t << row.n << "  " << row.dim_power << "  " << row.index << "  " << row.exponent << "  "
          << row.bound << "  " << (row.ok && row.index_matches ? "yes" : "NO") << "\n";
    t << "sharpest exponent/bound: " << format_rational(report.sharpest_ratio) << "\n";
    r.text = t.str();
    r.csv = io::exponent_csv(report);
    return r;
}

Report run_width(const Config& c)
{
    const AdjointGroup group(build_algebra(c));
    const auto width = cyclic_width(group, c.limit);

    Report r;
    std::ostringstream t;
    if (!width) {
        r.ok = false;
        r.json = {{"order", group.order()}, {"width", nullptr}, {"limit", c.limit}};
        t << "width: > " << c.limit << "\n";
        r.text = t.str();
        r.csv = "order,width\n" + std::to_string(group.order()) + ",\n";
        return r;
    }
    const IndexReport report = index_exponent_check(group, *width);
    r.ok = report.all_ok;
    r.json = {{"order", group.order()}, {"width", *width}};
    r.json["index_check"] = io::index_json(report);
    t << "width: " << *width << "\n";
    t << "order: " << group.order() << "\n";
    for (const IndexRow& row : report.rows)
        t << "  n=" << row.n << "  [G:G_n]=" << row.index << "  exp^m=" << row.exponent_power
          << "  " << (row.index_ok ? "ok" : "VIOLATED") << "\n";
    r.text = t.str();
    std::ostringstream csv;
    csv << "n,index,exponent,exponent_power,index_ok\n";
    for (const IndexRow& row : report.rows)
        csv << row.n << ',' << row.index << ',' << row.exponent << ',' << row.exponent_power << ','
            << (row.index_ok ? "true" : "false") << '\n';
    r.csv = csv.str();
    return r;
}

// ---------------------------------------------------------------- selftest

Report run_selftest(const Config& c)
{
    Report r;
    Json rows = Json::array();
    std::ostringstream t, csv;
    csv << "criterion,name,passed,seconds\n";
    for (const auto& res : verify::run_acceptance(c.seed)) {
        r.ok = r.ok && res.passed;
        t << verify::format_result(res) << "\n";
        Json row{{"criterion", res.id}, {"name", res.name}, {"passed", res.passed},
                 {"detail", res.detail}};
        if (!c.no_timing)
            row["seconds"] = res.seconds;
        rows.push_back(std::move(row));
        csv << res.id << ',' << res.name << ',' << (res.passed ? "true" : "false") << ','
            << (c.no_timing ? 0.0 : res.seconds) << '\n';
    }
    r.json = {{"passed", r.ok}, {"criteria", std::move(rows)}};
    r.text = t.str();
    r.csv = csv.str();
    return r;
}

// ---------------------------------------------------------------- output

std::string render(const Report& r, const Config& c, const std::string& command, double ms)
{
    Json provenance{{"tool", "adjoint"}, {"version", kVersion}, {"config", config_json(c, command)}};
    if (!c.no_timing)
        provenance["duration_ms"] = ms;

    if (c.format == "json") {
        Json out = r.json;
        out["ok"] = r.ok;
        out["provenance"] = std::move(provenance);
        return out.dump(2) + "\n";
    }
    std::ostringstream tail;
    tail << "# adjoint " << kVersion << " " << provenance["config"].dump();
    if (!c.no_timing)
        tail << " duration_ms=" << static_cast<long long>(ms);
    tail << "\n";
    if (c.format == "csv")
        return r.csv + tail.str();
    return r.text + tail.str();
}

} // namespace

int main(int argc, char** argv)
{
    Config c;
    CLI::App app{"Computations in truncated free algebras, adjoint groups and Golod-Shafarevich "
                 "certificates"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--p", c.p, "Prime characteristic")->capture_default_str();
    app.add_option("--cap", c.cap, "Degree cap of the truncated algebra")
        ->check(CLI::Range(1, Word::kMaxDegree))
        ->capture_default_str();
    app.add_option("--tau", c.tau, "Evaluation point as a rational")->capture_default_str();
    app.add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", c.seed, "Seed for randomized suites")->capture_default_str();
    app.add_option("--out", c.out, "Write the report to FILE instead of stdout");
    app.add_flag("--no-timing", c.no_timing, "Omit wall-clock durations (byte-stable output)");

    auto* factor = app.add_subcommand("factor", "Factor 1+a into homogeneous circle factors");
    factor->add_option("--a", c.a, "Element of A+ in polynomial text")->required();
    factor->add_option("--m", c.m, "Target residual valuation (default cap+1)");

    auto* construct = app.add_subcommand("construct", "Run the I/J construction up to the cap");
    construct->add_option("--max-elements", c.max_elements, "Elements of A+ to consume")
        ->capture_default_str();

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert table of A/ideal up to the cap");
    hilbert->add_option("--gen", c.generators, "Homogeneous generator (repeatable)");
    hilbert->add_option("--ideal", c.ideal_file, "JSON list of [degree, polynomial]");
    hilbert->add_flag("--construction", c.from_construction, "Use I + J from the construction");
    hilbert->add_option("--max-elements", c.max_elements, "Elements consumed with --construction");

    auto* gs = app.add_subcommand("gs-check", "Evaluate 1 - 2t + sum r_n t^n exactly");
    gs->add_flag("--paper", c.paper, "Use the analytic census of the construction");
    gs->add_option("--census", c.census_file, "Census JSON file");
    gs->add_option("--grid", c.grid, "Also search k/GRID for a negative value")
        ->check(CLI::Range(2, 1 << 20));

    auto* torsion = app.add_subcommand("torsion", "Adjoint orders of 1+h modulo I + J");
    torsion->add_option("--max-elements", c.max_elements, "Elements of A+ to consume")
        ->capture_default_str();

    for (auto* sub : {app.add_subcommand("exponent", "Check exp(R/G_n) <= p(n+1)"),
                      app.add_subcommand("width", "Least number of cyclic factors of R")}) {
        sub->add_option("--algebra", c.algebra, "poly | upper | sum | file")
            ->check(CLI::IsMember({"poly", "upper", "sum", "file"}))
            ->capture_default_str();
        sub->add_option("--n", c.n, "N for xF_p[x]/(x^N), or the matrix size")
            ->capture_default_str();
        sub->add_option("--parts", c.parts, "Comma-separated N_i for a direct sum")
            ->delimiter(',');
        sub->add_option("--file", c.algebra_file, "Structure-constant JSON file");
        if (sub->get_name() == "width")
            sub->add_option("--limit", c.limit, "Largest width to search")
                ->check(CLI::Range(1, 64))
                ->capture_default_str();
    }

    app.add_subcommand("selftest", "Run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Report report;
    const auto start = std::chrono::steady_clock::now();
    try {
        PrimeField check(c.p); // validates --p before any work
        (void)check;
        if (command == "factor")
            report = run_factor(c);
        else if (command == "construct")
            report = run_construct(c);
        else if (command == "hilbert")
            report = run_hilbert(c);
        else if (command == "gs-check")
            report = run_gs_check(c);
        else if (command == "torsion")
            report = run_torsion(c);
        else if (command == "exponent")
            report = run_exponent(c);
        else if (command == "width")
            report = run_width(c);
        else
            report = run_selftest(c);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const adjoint::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    const std::string text = render(report, c, command, ms);
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(c.out);
        if (!file) {
            std::cerr << "error: cannot write '" << c.out << "'\n";
            return kExitUsage;
        }
        file << text;
    }
    return report.ok ? kExitOk : kExitFailed;
}
