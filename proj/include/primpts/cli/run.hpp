#ifndef PRIMPTS_CLI_RUN_HPP
#define PRIMPTS_CLI_RUN_HPP

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "primpts/cli/json_io.hpp"
#include "primpts/cli/parse.hpp"

namespace primpts::cli {

enum ExitCode : int { Ok = 0, InvalidInputExit = 1, VerificationExit = 2, BudgetExit = 3 };

struct RunConfig {
    std::string subcommand;
    std::string curve_path;
    std::string output; // empty: standard output
    std::string divisor;
    std::string function;
    std::string poly;
    std::string policy = "auto";
    std::size_t t_count = 200;
    long t_height = 0; // when positive, every t of height <= t_height
    long coeff_height = 1;
    std::size_t samples = 0; // 0: exhaustive
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    bool paranoid = false;
    long degree = 0;
    std::size_t max_candidates = 5000;
    std::size_t t_per_candidate = 40;
};

inline int exit_code_for(ErrorKind k)
{
    switch (k) {
    case ErrorKind::VerificationFailure: return VerificationExit;
    case ErrorKind::SearchBudgetExhausted: return BudgetExit;
    default: return InvalidInputExit;
    }
}

inline HyperellipticCurve load_curve(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::InvalidInput, "cannot open curve file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidInput, "curve file '" + path + "': " + e.what());
    }
    return curve_from_json(j);
}

namespace detail {

inline json curve_info(const HyperellipticCurve& C)
{
    json ram = json::array();
    for (const auto& [u, m] : factor_over_rationals(C.h()).factors)
        for (const auto& p : places_over_x(C, u))
            ram.push_back(to_json(p));
    return json{{"h", to_json(C.h())}, {"text", "y^2 = " + format(C.h())}, {"genus", C.genus()},
                {"degree", C.h().degree()}, {"pole_order_of_y", C.y_pole()}, {"ramified_places", ram}};
}

inline json rr_basis(const HyperellipticCurve& C, const Divisor& D)
{
    RRSpace L = riemann_roch_basis(C, D);
    json basis = json::array();
    for (const auto& f : L.basis)
        basis.push_back(to_json(f));
    return json{{"divisor", to_json(D)}, {"dimension", L.dimension()}, {"basis", basis}};
}

inline json contr(const HyperellipticCurve& C, const Divisor& D, unsigned jobs)
{
    ContractionSet cs = enumerate_contr0(C, D, jobs);
    json list = json::array();
    for (const auto& c : cs.contractions) {
        json j = to_json(c);
        if (D.degree() > 2 * C.genus()) {
            DimensionCheck chk = dimension_comparison_check(C, D, c);
            j["dimension_check"] = json{{"dim_PD", chk.dim_pd}, {"dim_PDprime", chk.dim_pdprime}, {"holds", chk.holds}};
        }
        list.push_back(std::move(j));
    }
    return json{{"divisor", to_json(D)}, {"contractions", list}};
}

inline std::vector<Rational> t_values(const RunConfig& cfg)
{
    if (cfg.t_height <= 0)
        return HeightIterator::first(cfg.t_count);
    std::vector<Rational> ts;
    HeightIterator it;
    for (Rational t = it.next(); height(t) <= cfg.t_height; t = it.next())
        ts.push_back(t);
    return ts;
}

} // namespace detail

/// Executes a parsed configuration, writing the JSON report to `out` and a
/// one-line summary to `err`.
inline int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    json result;
    std::string summary;
    int code = Ok;
    const std::string& cmd = cfg.subcommand;
    if (cmd == "certify") {
        const RatPolynomial m = parse_polynomial(cfg.poly);
        const auto policy = cfg.policy == "general" ? PrimitivityPolicy::ForceGeneral : PrimitivityPolicy::Auto;
        PrimitivityCertificate cert = is_primitive_field(m, policy, cfg.seed);
        const bool ok = verify_certificate(cert);
        result = to_json(cert);
        result["verified"] = ok;
        summary = format(cert.modulus) + ": " + to_string(cert.verdict) + " (" + to_string(cert.method) + ")";
        if (cert.witness)
            summary += ", witness " + format(cert.witness->generator_minpoly);
        if (!ok)
            code = VerificationExit;
    } else {
        const HyperellipticCurve C = load_curve(cfg.curve_path);
        if (cmd == "curve-info") {
            result = detail::curve_info(C);
            summary = "genus " + std::to_string(C.genus()) + " curve y^2 = " + format(C.h());
        } else if (cmd == "rr-basis") {
            result = detail::rr_basis(C, parse_divisor(cfg.divisor, C));
            summary = "dimension " + result["dimension"].dump();
        } else if (cmd == "function-degree") {
            const CurveFunction f = parse_function_expr(cfg.function, C).function();
            const long d = function_degree(C, f);
            result = json{{"f", to_json(f)}, {"degree", d}, {"pole_divisor", to_json(pole_divisor(C, f))},
                          {"zero_divisor", to_json(zero_divisor(C, f))}};
            summary = "degree " + std::to_string(d);
        } else if (cmd == "contr") {
            result = detail::contr(C, parse_divisor(cfg.divisor, C), cfg.jobs);
            summary = std::to_string(result["contractions"].size()) + " contraction class(es)";
        } else if (cmd == "prospect") {
            const CurveFunction f = parse_function_expr(cfg.function, C).function();
            const auto ts = detail::t_values(cfg);
            ProspectOptions opt;
            opt.t_count = ts.size();
            opt.paranoid = cfg.paranoid;
            opt.jobs = cfg.jobs;
            opt.seed = cfg.seed;
            ProspectReport r = prospect(C, f, opt);
            for (const auto& s : r.specializations)
                if (s.cert && !verify_certificate(*s.cert))
                    code = VerificationExit;
            result = to_json(r);
            summary = std::to_string(r.primitive_points.size()) + " primitive points among " +
                      std::to_string(r.specializations.size()) + " specializations";
        } else if (cmd == "density") {
            DensityOptions opt;
            opt.mode = cfg.samples ? SampleMode::Seeded : SampleMode::Exhaustive;
            opt.samples = cfg.samples;
            opt.seed = cfg.seed;
            opt.jobs = cfg.jobs;
            DensityReport r = density_experiment(C, parse_divisor(cfg.divisor, C), cfg.coeff_height, opt);
            result = to_json(r);
            summary = "S " + to_string(r.fraction_s()) + ", T " + to_string(r.fraction_t()) + ", primitive " +
                      to_string(r.fraction_primitive());
        } else if (cmd == "find-function") {
            SearchOptions opt;
            opt.max_candidates = cfg.max_candidates;
            opt.t_per_candidate = cfg.t_per_candidate;
            opt.paranoid = cfg.paranoid;
            opt.seed = cfg.seed;
            FoundFunction r = find_primitive_function(C, cfg.degree, opt);
            if (!verify_generic_certificate(C, r.certificate))
                code = VerificationExit;
            result = to_json(r);
            summary = r.f.to_string() + " certified at t = " + to_string(r.certificate.t);
        } else {
            fail(ErrorKind::InvalidInput, "unknown subcommand '" + cmd + "'");
        }
    }
    const std::string text = wrap(cmd, std::move(result)).dump(2) + "\n";
    if (cfg.output.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.output);
        if (!f)
            fail(ErrorKind::InvalidInput, "cannot write '" + cfg.output + "'");
        f << text;
    }
    err << summary << (code == VerificationExit ? " [verification failed]" : "") << "\n";
    return code;
}

/// Parses the command line into a RunConfig and executes it.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    RunConfig cfg;
    CLI::App app{"Primitive points on hyperelliptic curves y^2 = h(x) over Q", "primpts"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto curve_cmd = [&](const std::string& name, const std::string& desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->add_option("curve", cfg.curve_path, "Curve file {\"h\": [c0, c1, ...]}")->required();
        s->add_option("-o,--output", cfg.output, "Write the JSON report here");
        return s;
    };
    auto jobs = [&](CLI::App* s) { s->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u)); };
    auto seed = [&](CLI::App* s) { s->add_option("--seed", cfg.seed, "Seed for randomized internals"); };

    curve_cmd("curve-info", "Genus and ramification of a curve");
    CLI::App* rr = curve_cmd("rr-basis", "Basis of L(D)");
    rr->add_option("--divisor", cfg.divisor, "Effective divisor, e.g. \"4*inf\"")->required();
    CLI::App* fd = curve_cmd("function-degree", "Degree and divisors of a function");
    fd->add_option("--f", cfg.function, "Function such as \"x^2 + y\"")->required();
    CLI::App* ct = curve_cmd("contr", "Genus-0 contractions of a multiplicity-one divisor");
    ct->add_option("--divisor", cfg.divisor, "Effective multiplicity-one divisor")->required();
    jobs(ct);

    CLI::App* cert = app.add_subcommand("certify", "Decide primitivity of Q[x]/(m)");
    cert->add_option("--poly", cfg.poly, "Irreducible polynomial in x")->required();
    cert->add_option("--policy", cfg.policy, "auto or general")->check(CLI::IsMember({"auto", "general"}));
    cert->add_option("-o,--output", cfg.output, "Write the JSON report here");
    seed(cert);

    CLI::App* pr = curve_cmd("prospect", "Specialize f along rationals ordered by height");
    pr->add_option("--f", cfg.function, "Function such as \"x^2 + y\"")->required();
    auto* tc = pr->add_option("--t-count", cfg.t_count, "Number of t values")->check(CLI::Range(1ul, 100000ul));
    pr->add_option("--t-height", cfg.t_height, "All t of height at most N")->check(CLI::Range(1l, 1000l))->excludes(tc);
    pr->add_flag("--paranoid", cfg.paranoid, "Re-derive fast certificates with the general method");
    jobs(pr);
    seed(pr);

    CLI::App* de = curve_cmd("density", "Classify L(D) coefficient vectors into S, T and primitive");
    de->add_option("--divisor", cfg.divisor, "Divisor D with deg D > 2g")->required();
    de->add_option("--coeff-height", cfg.coeff_height, "Coefficient bound H")->check(CLI::Range(1l, 1000l));
    de->add_option("--samples", cfg.samples, "Random samples (default: exhaustive)")->check(CLI::Range(1ul, 10000000ul));
    jobs(de);
    seed(de);

    CLI::App* ff = curve_cmd("find-function", "Search L(d*inf) for a certified primitive function");
    ff->add_option("--degree", cfg.degree, "Degree d > 2g")->required()->check(CLI::Range(1l, 64l));
    ff->add_option("--max-candidates", cfg.max_candidates, "Search budget")->check(CLI::Range(1ul, 10000000ul));
    ff->add_option("--t-per-candidate", cfg.t_per_candidate, "Specializations per candidate")
        ->check(CLI::Range(1ul, 100000ul));
    ff->add_flag("--paranoid", cfg.paranoid, "Re-derive fast certificates with the general method");
    seed(ff);

    std::vector<const char*> argv{"primpts"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return InvalidInputExit;
    }
    for (auto* s : app.get_subcommands())
        cfg.subcommand = s->get_name();
    try {
        return execute(cfg, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const json::exception& e) {
        err << "error: malformed JSON: " << e.what() << "\n";
        return InvalidInputExit;
    }
}

} // namespace primpts::cli

#endif // PRIMPTS_CLI_RUN_HPP
