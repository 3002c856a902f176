#include "wt1/bounds.hpp"

#include <cmath>
#include <limits>

#include "wt1/quadform.hpp"

namespace wt1 {

namespace {

void add_tier(CountingScheme& s, int tier, i64 bound_on_n, int sign_mode)
{
    // primes p with p^tier <= bound_on_n, ascending
    for (i64 p = 2; ipow(p, tier) <= bound_on_n; ++p) {
        if (!is_prime(p) || p == s.q)
            continue;
        CountingScheme::Entry e;
        e.p = p;
        e.tier = tier;
        e.n = ipow(p, tier);
        e.c = (sign_mode == 0) ? 1 : (sign_mode == 1 ? -1 : -kronecker(p, s.q));
        s.support.push_back(e);
    }
}

} // namespace

CountingScheme scheme_oct(i64 q)
{
    validate_discriminant(q);
    CountingScheme s;
    s.q = q;
    s.N = q;
    s.type = StreamType::octahedral;
    // p^8 <= q, p^4 <= q^{1/2}, p^2 <= q^{1/4}: all reduce to p <= q^{1/8}
    add_tier(s, 8, q, 0);
    add_tier(s, 4, isqrt(q), 1);
    add_tier(s, 2, iroot(q, 4), 2);
    return s;
}

CountingScheme scheme_ico(i64 q)
{
    validate_discriminant(q);
    CountingScheme s;
    s.q = q;
    s.N = q;
    s.type = StreamType::icosahedral;
    // p^12 <= q, p^8 <= q^{2/3}, p^2 <= q^{1/6}: all reduce to p <= q^{1/12}
    add_tier(s, 12, q, 0);
    i64 q23 = iroot(q * q, 3);
    add_tier(s, 8, q23, 1);
    add_tier(s, 2, iroot(q, 6), 2);
    return s;
}

GoldenValue eval_scheme(const CountingScheme& s, const SyntheticStream& stream)
{
    GoldenValue acc = GoldenValue::integer(0);
    for (const auto& e : s.support) {
        if (!stream.has(e.n))
            throw MissingCoefficient();
        GoldenValue term = stream.a(e.n);
        if (e.c == -1)
            term = -term;
        else if (e.c != 1)
            term = term * GoldenValue::integer(e.c);
        acc = acc + term;
    }
    return acc;
}

double eval_scheme(const CountingScheme& s, const ThetaForm& f)
{
    double acc = 0.0;
    for (const auto& e : s.support) {
        if (e.n > f.N)
            throw MissingCoefficient();
        acc += static_cast<double>(e.c) * f.af(e.n);
    }
    return acc;
}

DimensionBound dimension_bound(i64 q, const BoundConstants& k)
{
    Discriminant D = validate_discriminant(q);

    DimensionBound out;
    out.q = q;
    out.constants = k;
    out.h = static_cast<i64>(enumerate_reduced(D).size());
    out.dihedral_dim = (out.h - 1) / 2;
    out.pi8 = prime_pi(iroot(q, 8));
    out.pi12 = prime_pi(iroot(q, 12));

    // From the counting pipeline with N = q: a scheme evaluates to
    // exactly pi(q^{1/t}) on its stream type while the bilinear bound is
    // K1 K2a (q + N) log^3 q * sum |c_n|^2, so
    //   #N <= 6 K1 K2a q log^3 q / pi(q^{1/t}).
    const double lq = std::log(static_cast<double>(q));
    const double common = 6.0 * k.k_prop1 * k.k_prop2a * static_cast<double>(q) * lq * lq * lq;
    const double inf = std::numeric_limits<double>::infinity();
    out.oct_bound = (out.pi8 > 0) ? common / static_cast<double>(out.pi8) : inf;
    out.ico_bound = (out.pi12 > 0) ? common / static_cast<double>(out.pi12) : inf;
    out.total = static_cast<double>(out.dihedral_dim) + out.oct_bound + out.ico_bound;
    return out;
}

FieldCountReport field_report(i64 q, const BoundConstants& k)
{
    Discriminant D = validate_discriminant(q);
    ClassGroup G(D);

    FieldCountReport rep;
    rep.q = q;
    rep.h = G.h();
    rep.h2 = G.torsion_count(2);
    rep.h3 = G.torsion_count(3);
    rep.rank3 = G.rank(3);
    if (rep.h3 != ipow(3, rep.rank3) - 1)
        throw std::logic_error("3-torsion count disagrees with the 3-rank");
    rep.cubic_count_standard = rep.h3 / 2;
    rep.cubic_count_paper = 3 * rep.h3 / 2;

    // PNT substitution pi(q^{1/8}) ~ 8 q^{1/8} / log q in the octahedral
    // count turns 6 K q log^3 q / pi8 into (3/4) K q^{7/8} log^4 q
    const double lq = std::log(static_cast<double>(q));
    rep.m4_bound = 0.75 * k.k_prop1 * k.k_prop2a * std::pow(static_cast<double>(q), 7.0 / 8.0) *
                   lq * lq * lq * lq;

    if ((q + 1) % 24 == 0) {
        i64 m = (q + 1) / 24;
        rep.m = m;
        rep.genus_x0_star = m - (rep.h - 1) / 2;
        DimensionBound bound = dimension_bound(q, k);
        rep.corollary_dim_bound = bound.total / 2.0 - static_cast<double>(rep.h - 1) / 4.0;
    }
    return rep;
}

} // namespace wt1
