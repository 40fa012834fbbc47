#ifndef PRIMPTS_NUMFIELD_PRIMITIVITY_HPP
#define PRIMPTS_NUMFIELD_PRIMITIVITY_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "primpts/exactalg/factor.hpp"
#include "primpts/exactalg/linalg.hpp"
#include "primpts/numfield/number_field.hpp"
#include "primpts/numfield/trager.hpp"

namespace primpts {

/// A subfield of L attached to one irreducible factor of m over L.
struct PrincipalSubfield {
    int degree = 0;
    std::vector<RatVector> basis; // Q-basis of the subfield, power-basis coordinates
    FieldElement generator;
    RatPolynomial generator_minpoly;
    NFPolynomial factor; // the factor of m over L it came from
};

struct SubfieldWitness {
    int degree = 0;
    FieldElement generator;
    RatPolynomial generator_minpoly;
};

enum class Verdict { Primitive, Imprimitive };
enum class CertMethod { PrimeDegree, PrincipalSubfields, ResolventCubic, GenericFromSpecialization };
enum class PrimitivityPolicy { Auto, ForceGeneral };

inline std::string to_string(Verdict v) { return v == Verdict::Primitive ? "Primitive" : "Imprimitive"; }
inline std::string to_string(CertMethod m)
{
    switch (m) {
    case CertMethod::PrimeDegree: return "PrimeDegree";
    case CertMethod::PrincipalSubfields: return "PrincipalSubfields";
    case CertMethod::ResolventCubic: return "ResolventCubic";
    case CertMethod::GenericFromSpecialization: return "GenericFromSpecialization";
    }
    return "Unknown";
}

struct PrimitivityCertificate {
    Verdict verdict = Verdict::Primitive;
    CertMethod method = CertMethod::PrimeDegree;
    std::optional<SubfieldWitness> witness; // present iff Imprimitive
    RatPolynomial modulus;
    std::vector<int> subfield_degrees; // PrincipalSubfields only
    long trager_shift = 0;             // PrincipalSubfields only
};

namespace detail {

/// Squarefree-free integer part: largest k with k^2 | n, n != 0, by trial division.
inline Integer square_divisor(const Integer& n0)
{
    Integer n = abs(n0);
    Integer k = 1;
    for (unsigned long p = 2; Integer(p) * p <= n && p < 100000; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p * p)) {
            n /= p * p;
            k *= p;
        }
        while (mpz_divisible_ui_p(n.get_mpz_t(), p))
            n /= p;
    }
    return k;
}

/// For a quadratic generator, replace it by sqrt(D) with D a squarefree integer.
inline void simplify_quadratic(FieldElement& gen, RatPolynomial& minpoly)
{
    // minpoly x^2 + b x + c; alpha' = 2 alpha + b has square D = b^2 - 4c
    Rational b = minpoly.coeff(1), c = minpoly.coeff(0);
    Rational D = b * b - 4 * c;
    FieldElement alpha = gen * Rational(2) + b;
    // scale to an integer radicand: sqrt(num/den) = sqrt(num*den)/den
    Integer num = D.get_num(), den = D.get_den();
    Integer radicand = num * den;
    alpha = alpha * Rational(den);
    Integer k = square_divisor(radicand);
    radicand /= k * k;
    alpha = alpha * make_rational(1, k);
    gen = alpha;
    minpoly = RatPolynomial{Rational(-radicand), Rational(0), Rational(1)};
}

inline bool minpoly_simpler(const RatPolynomial& a, const RatPolynomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    Integer ha = poly_height(a), hb = poly_height(b);
    if (ha != hb)
        return ha < hb;
    return poly_less(a, b);
}

inline FieldElement combination(const NumberField& L, const std::vector<RatVector>& basis, const std::vector<long>& w)
{
    RatVector v(static_cast<std::size_t>(L.degree()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] += basis[i][j] * w[i];
    return L.from_coeffs(v);
}

/// Primitive element of a subfield given by a Q-basis. Tries the basis
/// vectors first, then seeded small integer combinations; among the first few
/// successes keeps the one with the smallest minimal polynomial.
inline std::pair<FieldElement, RatPolynomial> subfield_generator(const NumberField& L,
                                                                  const std::vector<RatVector>& basis,
                                                                  std::uint64_t seed)
{
    const int e = static_cast<int>(basis.size());
    if (e == 1)
        return {L.one(), RatPolynomial{Rational(-1), Rational(1)}};
    if (e == L.degree())
        return {L.theta(), L.modulus()};
    std::optional<std::pair<FieldElement, RatPolynomial>> best;
    int successes = 0;
    auto consider = [&](const FieldElement& a) {
        RatPolynomial mp = minimal_polynomial(a);
        if (mp.degree() != e)
            return;
        FieldElement g = a;
        if (e == 2)
            simplify_quadratic(g, mp);
        ++successes;
        if (!best || minpoly_simpler(mp, best->second))
            best = std::make_pair(g, mp);
    };
    for (int i = 0; i < e; ++i) {
        std::vector<long> w(static_cast<std::size_t>(e), 0);
        w[static_cast<std::size_t>(i)] = 1;
        consider(combination(L, basis, w));
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; (successes < 4 && attempt < 64) || !best; ++attempt) {
        long range = 1 + attempt / 8;
        std::uniform_int_distribution<long> dist(-range, range);
        std::vector<long> w(static_cast<std::size_t>(e));
        for (auto& v : w)
            v = dist(rng);
        consider(combination(L, basis, w));
        if (attempt > 4096)
            fail(ErrorKind::InvalidInput, "no primitive element found for subfield");
    }
    return *best;
}

} // namespace detail

/// Principal subfields of L: for each irreducible factor g of m over L, the
/// kernel of alpha -> alpha(x) - alpha(theta) in L[x]/(g).
inline std::vector<PrincipalSubfield> principal_subfields(const NumberField& L, std::uint64_t seed = 0,
                                                          long* shift_out = nullptr)
{
    const int d = L.degree();
    NFFactorList fl = trager_factor(to_nf(L.modulus(), L), L, seed);
    if (shift_out)
        *shift_out = fl.shift;
    std::vector<PrincipalSubfield> out;
    const FieldElement theta = L.theta();
    for (const auto& [g, mult] : fl.factors) {
        const int r = g.degree();
        // columns: alpha = theta^j; entries: coordinates of (x^j mod g) - theta^j
        std::vector<RatVector> cols;
        NFPolynomial xj = NFPolynomial::constant(L.one());
        NFPolynomial xpoly = NFPolynomial::x();
        FieldElement thj = L.one();
        for (int j = 0; j < d; ++j) {
            NFPolynomial diff = attach((xj % g) - NFPolynomial::constant(thj), L);
            RatVector col;
            col.reserve(static_cast<std::size_t>(r * d));
            for (int i = 0; i < r; ++i) {
                FieldElement c = L.zero() + diff.coeff(static_cast<std::size_t>(i));
                auto cc = c.coeffs();
                col.insert(col.end(), cc.begin(), cc.end());
            }
            cols.push_back(std::move(col));
            xj = attach((xj * xpoly) % g, L);
            thj *= theta;
        }
        RatMatrix M = RatMatrix::from_columns(cols, static_cast<std::size_t>(r * d));
        std::vector<RatVector> ker = echelon_basis(kernel(M));
        PrincipalSubfield ps;
        ps.degree = static_cast<int>(ker.size());
        ps.basis = ker;
        auto [gen, mp] = detail::subfield_generator(L, ker, seed);
        ps.generator = gen;
        ps.generator_minpoly = mp;
        ps.factor = g;
        out.push_back(std::move(ps));
    }
    return out;
}

/// z^3 - q z^2 + (p r - 4 s) z - (p^2 s - 4 q s + r^2) for x^4 + p x^3 + q x^2 + r x + s.
inline RatPolynomial resolvent_cubic(const RatPolynomial& quartic)
{
    if (quartic.degree() != 4 || quartic.leading() != 1)
        fail(ErrorKind::InvalidInput, "resolvent cubic needs a monic quartic");
    const Rational& s = quartic[0];
    const Rational& r = quartic[1];
    const Rational& q = quartic[2];
    const Rational& p = quartic[3];
    Rational c0 = -(p * p * s - 4 * q * s + r * r);
    Rational c1 = p * r - 4 * s;
    Rational c2 = -q;
    return RatPolynomial{c0, c1, c2, Rational(1)};
}

/// Checks a witness on its own: minpoly irreducible of degree e, e | d,
/// 1 < e < d, and minpoly(generator) = 0 in L.
inline bool verify_witness(const SubfieldWitness& w, const RatPolynomial& modulus)
{
    const int d = modulus.degree();
    const int e = w.degree;
    if (e <= 1 || e >= d || d % e != 0)
        return false;
    if (w.generator_minpoly.degree() != e || !is_irreducible(w.generator_minpoly))
        return false;
    NumberField L = NumberField::unchecked(modulus);
    FieldElement g = L.zero() + w.generator;
    if (g.is_rational())
        return false;
    return w.generator_minpoly.evaluate(g).is_zero();
}

inline std::optional<SubfieldWitness> witness_from_subfields(const std::vector<PrincipalSubfield>& subs, int d)
{
    std::optional<SubfieldWitness> best;
    for (const auto& ps : subs) {
        if (ps.degree <= 1 || ps.degree >= d)
            continue;
        if (!best || detail::minpoly_simpler(ps.generator_minpoly, best->generator_minpoly))
            best = SubfieldWitness{ps.degree, ps.generator, ps.generator_minpoly};
    }
    return best;
}

/// Decides whether Q[x]/(m) has a proper intermediate field.
inline PrimitivityCertificate is_primitive_field(const RatPolynomial& m0,
                                                 PrimitivityPolicy policy = PrimitivityPolicy::Auto,
                                                 std::uint64_t seed = 0)
{
    if (m0.degree() < 1)
        fail(ErrorKind::NotAField, "constant polynomial does not define a field");
    const RatPolynomial m = m0.monic();
    NumberField L(m); // NotAField on reducible input
    const int d = m.degree();
    PrimitivityCertificate cert;
    cert.modulus = m;
    if (policy == PrimitivityPolicy::Auto && (d == 1 || is_prime(static_cast<std::uint64_t>(d)))) {
        cert.verdict = Verdict::Primitive;
        cert.method = CertMethod::PrimeDegree;
        return cert;
    }
    if (policy == PrimitivityPolicy::Auto && d == 4) {
        cert.method = CertMethod::ResolventCubic;
        if (rational_roots(resolvent_cubic(m)).empty()) {
            cert.verdict = Verdict::Primitive;
            return cert;
        }
        cert.verdict = Verdict::Imprimitive;
        auto subs = principal_subfields(L, seed, &cert.trager_shift);
        cert.witness = witness_from_subfields(subs, d);
        if (!cert.witness)
            fail(ErrorKind::VerificationFailure, "resolvent cubic and principal subfields disagree on " + format(m));
        return cert;
    }
    cert.method = CertMethod::PrincipalSubfields;
    auto subs = principal_subfields(L, seed, &cert.trager_shift);
    for (const auto& ps : subs)
        cert.subfield_degrees.push_back(ps.degree);
    std::sort(cert.subfield_degrees.begin(), cert.subfield_degrees.end());
    cert.witness = witness_from_subfields(subs, d);
    cert.verdict = cert.witness ? Verdict::Imprimitive : Verdict::Primitive;
    return cert;
}

/// Re-checks a certificate from scratch without trusting its contents.
inline bool verify_certificate(const PrimitivityCertificate& cert)
{
    const int d = cert.modulus.degree();
    if (d < 1 || !is_irreducible(cert.modulus))
        return false;
    if (cert.verdict == Verdict::Imprimitive)
        return cert.witness && verify_witness(*cert.witness, cert.modulus);
    if (cert.witness)
        return false;
    switch (cert.method) {
    case CertMethod::PrimeDegree: return d == 1 || is_prime(static_cast<std::uint64_t>(d));
    case CertMethod::ResolventCubic: return d == 4 && rational_roots(resolvent_cubic(cert.modulus)).empty();
    case CertMethod::PrincipalSubfields: {
        auto fresh = is_primitive_field(cert.modulus, PrimitivityPolicy::ForceGeneral);
        return fresh.verdict == Verdict::Primitive;
    }
    case CertMethod::GenericFromSpecialization: return false;
    }
    return false;
}

} // namespace primpts

#endif // PRIMPTS_NUMFIELD_PRIMITIVITY_HPP
