#include "wt1/rankin.hpp"

#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wt1/quadform.hpp"

namespace wt1 {

namespace {

struct Weights {
    std::vector<double> flt;  // |a(m)|^2
    std::vector<i64> ints;    // exact values when integral
    bool exact = false;
};

Weights coefficient_weights(const ThetaForm& f, i64 X)
{
    if (X > f.N)
        throw InsufficientCoefficients();
    Weights w;
    w.flt.assign(static_cast<size_t>(X) + 1, 0.0);
    w.ints.assign(static_cast<size_t>(X) + 1, 0);
    w.exact = true;
    for (i64 m = 1; m <= X; ++m) {
        i64 n;
        if (w.exact && f.a(m).is_integer(&n)) {
            w.ints[static_cast<size_t>(m)] = checked_mul(n, n);
            w.flt[static_cast<size_t>(m)] = static_cast<double>(w.ints[static_cast<size_t>(m)]);
        } else {
            w.exact = false;
            double v = f.af(m);
            w.flt[static_cast<size_t>(m)] = v * v;
        }
    }
    if (!w.exact) {
        w.ints.clear();
        for (i64 m = 1; m <= X; ++m) {
            double v = f.af(m);
            w.flt[static_cast<size_t>(m)] = v * v;
        }
    }
    return w;
}

} // namespace

RankinSeries b_coeffs_serial(const ThetaForm& f, i64 X)
{
    const Weights w = coefficient_weights(f, X);
    const i64 q = f.disc.q;

    RankinSeries out;
    out.q = q;
    out.X = X;
    out.exact = w.exact;
    out.b.assign(static_cast<size_t>(X) + 1, 0.0);
    if (w.exact)
        out.b_exact.assign(static_cast<size_t>(X) + 1, 0);

    for (i64 d = 1; d * d <= X; ++d) {
        for (i64 e : {i64{1}, q}) {
            const i64 base = d * d * e;
            if (base > X)
                continue;
            for (i64 m = 1; base * m <= X; ++m) {
                out.b[static_cast<size_t>(base * m)] += w.flt[static_cast<size_t>(m)];
                if (w.exact)
                    out.b_exact[static_cast<size_t>(base * m)] += w.ints[static_cast<size_t>(m)];
            }
        }
    }
    return out;
}

RankinSeries b_coeffs(const ThetaForm& f, i64 X)
{
    const Weights w = coefficient_weights(f, X);
    const i64 q = f.disc.q;

    RankinSeries out;
    out.q = q;
    out.X = X;
    out.exact = w.exact;
    out.b.assign(static_cast<size_t>(X) + 1, 0.0);
    if (w.exact)
        out.b_exact.assign(static_cast<size_t>(X) + 1, 0);

    // gather per n-block: every write lands inside the block, and the
    // (d, e) contribution order per n matches the serial scatter
#ifdef _OPENMP
    const i64 threads = omp_get_max_threads();
#else
    const i64 threads = 1;
#endif
    const i64 block = std::max<i64>(8192, X / (4 * threads));
    const i64 nblocks = (X + block - 1) / block;
#pragma omp parallel for schedule(dynamic)
    for (i64 bi = 0; bi < nblocks; ++bi) {
        const i64 lo = bi * block + 1;
        const i64 hi = std::min(X, (bi + 1) * block);
        for (i64 d = 1; d * d <= hi; ++d) {
            for (i64 e : {i64{1}, q}) {
                const i64 base = d * d * e;
                if (base > hi)
                    continue;
                const i64 mlo = (lo + base - 1) / base;
                const i64 mhi = hi / base;
                for (i64 m = std::max<i64>(1, mlo); m <= mhi; ++m) {
                    out.b[static_cast<size_t>(base * m)] += w.flt[static_cast<size_t>(m)];
                    if (w.exact)
                        out.b_exact[static_cast<size_t>(base * m)] += w.ints[static_cast<size_t>(m)];
                }
            }
        }
    }
    return out;
}

PeterssonEstimate petersson_estimate(const RankinSeries& series)
{
    if (series.X < 1000)
        throw InsufficientCoefficients();

    auto cesaro = [&series](i64 x) {
        long double acc = 0.0L;
        for (i64 n = 1; n <= x; ++n)
            acc += (1.0L - static_cast<long double>(n) / static_cast<long double>(x)) *
                   static_cast<long double>(series.b[static_cast<size_t>(n)]);
        return 2.0L * acc / static_cast<long double>(x);
    };

    const double pi = std::numbers::pi;
    const long double r_full = cesaro(series.X);
    const long double r_half = cesaro(series.X / 2);
    const double scale = static_cast<double>(series.q) / (2.0 * pi * pi);

    PeterssonEstimate est;
    est.X = series.X;
    est.residue = static_cast<double>(r_full);
    est.value = scale * est.residue;
    const double half_value = scale * static_cast<double>(r_half);
    est.stability_gap = std::abs(est.value - half_value) / est.value;
    return est;
}

PeterssonEstimate petersson_estimate(const ThetaForm& f, i64 X)
{
    return petersson_estimate(b_coeffs(f, X));
}

Prop2aReport prop2a_check(const std::vector<i64>& qs, i64 X)
{
    Prop2aReport report;
    report.X = X;
    for (i64 q : qs) {
        Discriminant D = validate_discriminant(q);
        ClassGroup G(D);
        if (G.h() == 1)
            continue;
        std::vector<ThetaForm> basis = dihedral_basis(G, X);
        const double lq = std::log(static_cast<double>(q));
        for (const ThetaForm& f : basis) {
            PeterssonEstimate est = petersson_estimate(f, X);
            Prop2aReport::Entry e;
            e.q = q;
            e.char_index = f.char_index;
            e.petersson = est.value;
            e.ratio = est.value / (static_cast<double>(q) * lq * lq * lq);
            report.max_ratio = std::max(report.max_ratio, e.ratio);
            report.entries.push_back(e);
        }
    }
    return report;
}

} // namespace wt1
