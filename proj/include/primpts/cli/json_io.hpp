#ifndef PRIMPTS_CLI_JSON_IO_HPP
#define PRIMPTS_CLI_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "primpts/contract/locus.hpp"
#include "primpts/prospect/density.hpp"
#include "primpts/prospect/prospect.hpp"
#include "primpts/prospect/search.hpp"

namespace primpts::cli {

using nlohmann::json;

inline constexpr int schema_version = 1;

inline json wrap(const std::string& command, json result)
{
    return json{{"schema_version", schema_version}, {"command", command}, {"result", std::move(result)}};
}

inline json to_json(const Rational& r) { return r.get_str(); }
inline Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    return parse_rational(j.get<std::string>());
}

inline json to_json(const RatPolynomial& p) { return to_strings(p); }
inline RatPolynomial poly_from_json(const json& j)
{
    std::vector<Rational> c;
    for (const auto& v : j)
        c.push_back(rational_from_json(v));
    return RatPolynomial(std::move(c));
}

inline json to_json(const CurveFunction& f)
{
    return json{{"a", to_json(f.a)}, {"b", to_json(f.b)}, {"den", to_json(f.den)}, {"text", f.to_string()}};
}
inline CurveFunction function_from_json(const json& j)
{
    return CurveFunction(poly_from_json(j.at("a")), poly_from_json(j.at("b")), poly_from_json(j.at("den")));
}

inline json to_json(const Place& p)
{
    json j{{"kind", to_string(p.kind)}};
    if (p.kind != PlaceKind::Infinity)
        j["u"] = to_json(p.u);
    if (p.kind == PlaceKind::Split)
        j["v"] = to_json(p.v);
    return j;
}
inline Place place_from_json(const json& j)
{
    const std::string k = j.at("kind").get<std::string>();
    if (k == "Infinity")
        return Place::infinity();
    Place p;
    p.u = poly_from_json(j.at("u"));
    if (k == "Split") {
        p.kind = PlaceKind::Split;
        p.v = poly_from_json(j.at("v"));
    } else if (k == "Ramified") {
        p.kind = PlaceKind::Ramified;
    } else if (k == "Inert") {
        p.kind = PlaceKind::Inert;
    } else {
        fail(ErrorKind::InvalidInput, "unknown place kind '" + k + "'");
    }
    return p;
}

inline json to_json(const Divisor& D)
{
    json terms = json::array();
    for (const auto& [p, m] : D.entries())
        terms.push_back(json{{"place", to_json(p)}, {"multiplicity", m}});
    return json{{"terms", terms}, {"degree", D.degree()}, {"text", D.to_string()}};
}
inline Divisor divisor_from_json(const json& j)
{
    Divisor D;
    for (const auto& t : j.at("terms"))
        D.add(place_from_json(t.at("place")), t.at("multiplicity").get<long>());
    return D;
}

inline json to_json(const P1Point& p)
{
    return p.infinity ? json{{"infinity", true}} : json{{"infinity", false}, {"q", to_json(p.q)}};
}
inline P1Point p1_from_json(const json& j)
{
    if (j.at("infinity").get<bool>())
        return P1Point::at_infinity();
    P1Point p;
    p.q = poly_from_json(j.at("q"));
    return p;
}

inline json to_json(const Contraction& c)
{
    json target = json::array();
    for (const auto& [p, m] : c.target_divisor)
        target.push_back(json{{"point", to_json(p)}, {"multiplicity", m}});
    json blocks = json::array();
    for (const auto& b : c.blocks)
        blocks.push_back(to_json(b));
    return json{{"g", to_json(c.g)},         {"e", c.e},
                {"target_divisor", target}, {"zeros", to_json(c.zeros)},
                {"poles", to_json(c.poles)}, {"blocks", blocks},
                {"pullback_verified", c.pullback_verified}};
}
inline Contraction contraction_from_json(const json& j)
{
    Contraction c;
    c.g = function_from_json(j.at("g"));
    c.e = j.at("e").get<long>();
    for (const auto& t : j.at("target_divisor"))
        c.target_divisor.emplace_back(p1_from_json(t.at("point")), t.at("multiplicity").get<long>());
    c.zeros = divisor_from_json(j.at("zeros"));
    c.poles = divisor_from_json(j.at("poles"));
    for (const auto& b : j.at("blocks"))
        c.blocks.push_back(divisor_from_json(b));
    c.pullback_verified = j.at("pullback_verified").get<bool>();
    return c;
}

inline json to_json(const PrimitivityCertificate& c)
{
    json j{{"verdict", to_string(c.verdict)},
           {"method", to_string(c.method)},
           {"modulus", to_json(c.modulus)},
           {"subfield_degrees", c.subfield_degrees},
           {"trager_shift", c.trager_shift}};
    if (c.witness)
        j["witness"] = json{{"degree", c.witness->degree},
                            {"generator", to_json(c.witness->generator.rep())},
                            {"generator_minpoly", to_json(c.witness->generator_minpoly)}};
    return j;
}
inline PrimitivityCertificate certificate_from_json(const json& j)
{
    PrimitivityCertificate c;
    const std::string v = j.at("verdict").get<std::string>();
    if (v != "Primitive" && v != "Imprimitive")
        fail(ErrorKind::InvalidInput, "unknown verdict '" + v + "'");
    c.verdict = v == "Primitive" ? Verdict::Primitive : Verdict::Imprimitive;
    const std::string m = j.at("method").get<std::string>();
    bool known = false;
    for (auto k : {CertMethod::PrimeDegree, CertMethod::PrincipalSubfields, CertMethod::ResolventCubic,
                   CertMethod::GenericFromSpecialization})
        if (to_string(k) == m) {
            c.method = k;
            known = true;
        }
    if (!known)
        fail(ErrorKind::InvalidInput, "unknown certificate method '" + m + "'");
    c.modulus = poly_from_json(j.at("modulus"));
    c.subfield_degrees = j.at("subfield_degrees").get<std::vector<int>>();
    c.trager_shift = j.at("trager_shift").get<long>();
    if (j.contains("witness")) {
        const auto& w = j.at("witness");
        if (c.modulus.degree() < 1)
            fail(ErrorKind::InvalidInput, "witness without a modulus");
        NumberField L = NumberField::unchecked(c.modulus);
        c.witness = SubfieldWitness{w.at("degree").get<int>(), L.element(poly_from_json(w.at("generator"))),
                                    poly_from_json(w.at("generator_minpoly"))};
    }
    return c;
}

inline SpecializationStatus status_from_string(const std::string& s)
{
    for (auto k : {SpecializationStatus::Reducible, SpecializationStatus::BranchLike, SpecializationStatus::Irreducible,
                   SpecializationStatus::Degenerate})
        if (to_string(k) == s)
            return k;
    fail(ErrorKind::InvalidInput, "unknown specialization status '" + s + "'");
}

inline json to_json(const Specialization& s)
{
    json j{{"t", to_json(s.t)}, {"fiber_poly", to_json(s.fiber_poly)}, {"lambda", s.lambda},
           {"status", to_string(s.status)}};
    if (s.status == SpecializationStatus::Reducible) {
        json fs = json::array();
        for (const auto& f : s.factors)
            fs.push_back(to_json(f));
        j["factors"] = fs;
    }
    if (s.cert)
        j["certificate"] = to_json(*s.cert);
    return j;
}
inline Specialization specialization_from_json(const json& j)
{
    Specialization s;
    s.t = rational_from_json(j.at("t"));
    s.fiber_poly = poly_from_json(j.at("fiber_poly"));
    s.lambda = j.at("lambda").get<long>();
    s.status = status_from_string(j.at("status").get<std::string>());
    if (j.contains("factors"))
        for (const auto& f : j.at("factors"))
            s.factors.push_back(poly_from_json(f));
    if (j.contains("certificate"))
        s.cert = certificate_from_json(j.at("certificate"));
    return s;
}

inline json to_json(const ProspectReport& r)
{
    json specs = json::array();
    for (const auto& s : r.specializations)
        specs.push_back(to_json(s));
    json points = json::array();
    for (const auto& p : r.primitive_points)
        points.push_back(json{{"t", to_json(p.t)}, {"minpoly", to_json(p.minpoly)}, {"certificate", to_json(p.cert)}});
    return json{{"h", to_json(r.h)},           {"f", to_json(r.f)},
                {"d", r.d},                    {"specializations", specs},
                {"primitive_points", points},  {"counts", r.counts}};
}
inline ProspectReport prospect_from_json(const json& j)
{
    ProspectReport r;
    r.h = poly_from_json(j.at("h"));
    r.f = function_from_json(j.at("f"));
    r.d = j.at("d").get<long>();
    for (const auto& s : j.at("specializations"))
        r.specializations.push_back(specialization_from_json(s));
    for (const auto& p : j.at("primitive_points"))
        r.primitive_points.push_back({rational_from_json(p.at("t")), poly_from_json(p.at("minpoly")),
                                      certificate_from_json(p.at("certificate"))});
    r.counts = j.at("counts").get<std::map<std::string, long>>();
    return r;
}

inline json to_json(const DensityReport& r)
{
    json j{{"D", to_json(r.D)},
           {"coeff_height", r.H},
           {"mode", to_string(r.mode)},
           {"samples", r.samples},
           {"total", r.total},
           {"degree_deficient", r.degree_deficient},
           {"imprimitive", r.imprimitive},
           {"primitive", r.primitive},
           {"exact_degree", r.exact_degree}};
    if (r.mode == SampleMode::Seeded)
        j["seed"] = r.seed;
    if (r.total > 0)
        j["fractions"] = json{{"S", to_json(r.fraction_s())},
                              {"T", to_json(r.fraction_t())},
                              {"primitive", to_json(r.fraction_primitive())}};
    if (r.exact_degree > 0)
        j["imprimitive_among_exact_degree"] = to_json(r.imprimitive_among_exact_degree());
    return j;
}
inline DensityReport density_from_json(const json& j)
{
    DensityReport r;
    r.D = divisor_from_json(j.at("D"));
    r.H = j.at("coeff_height").get<long>();
    const std::string m = j.at("mode").get<std::string>();
    if (m != "Exhaustive" && m != "Seeded")
        fail(ErrorKind::InvalidInput, "unknown sample mode '" + m + "'");
    r.mode = m == "Exhaustive" ? SampleMode::Exhaustive : SampleMode::Seeded;
    r.samples = j.at("samples").get<std::size_t>();
    if (j.contains("seed"))
        r.seed = j.at("seed").get<std::uint64_t>();
    r.total = j.at("total").get<long>();
    r.degree_deficient = j.at("degree_deficient").get<long>();
    r.imprimitive = j.at("imprimitive").get<long>();
    r.primitive = j.at("primitive").get<long>();
    r.exact_degree = j.at("exact_degree").get<long>();
    return r;
}

inline json to_json(const GenericCertificate& c)
{
    return json{{"method", to_string(c.method)}, {"f", to_json(c.f)},           {"t", to_json(c.t)},
                {"fiber_poly", to_json(c.fiber_poly)}, {"lambda", c.lambda}, {"fiber_certificate", to_json(c.fiber_cert)}};
}
inline GenericCertificate generic_from_json(const json& j)
{
    GenericCertificate c;
    c.f = function_from_json(j.at("f"));
    c.t = rational_from_json(j.at("t"));
    c.fiber_poly = poly_from_json(j.at("fiber_poly"));
    c.lambda = j.at("lambda").get<long>();
    c.fiber_cert = certificate_from_json(j.at("fiber_certificate"));
    return c;
}

inline json to_json(const FoundFunction& r)
{
    return json{{"f", to_json(r.f)},
                {"certificate", to_json(r.certificate)},
                {"candidates_examined", r.candidates_examined},
                {"skipped_degree", r.skipped_degree},
                {"skipped_imprimitive", r.skipped_imprimitive}};
}
inline FoundFunction found_from_json(const json& j)
{
    FoundFunction r;
    r.f = function_from_json(j.at("f"));
    r.certificate = generic_from_json(j.at("certificate"));
    r.candidates_examined = j.at("candidates_examined").get<std::size_t>();
    r.skipped_degree = j.at("skipped_degree").get<std::size_t>();
    r.skipped_imprimitive = j.at("skipped_imprimitive").get<std::size_t>();
    return r;
}

/// {"h": [...]} with ascending coefficients as integers or rational strings.
inline HyperellipticCurve curve_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("h") || !j.at("h").is_array())
        fail(ErrorKind::InvalidInput, "curve file must be an object with an array 'h'");
    return curve_new(poly_from_json(j.at("h")));
}

} // namespace primpts::cli

#endif // PRIMPTS_CLI_JSON_IO_HPP
