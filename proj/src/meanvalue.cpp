#include "wt1/meanvalue.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <random>

namespace wt1 {

DualityInstance DualityInstance::from_vectors(const Eigen::MatrixXcd& V)
{
    DualityInstance inst;
    // <f_i, v_n> = v_n[i] against the standard basis, so that
    // sum_f <f,v_n> conj(<f,v_m>) = <v_n, v_m> = gram(n, m)
    inst.M = V;
    inst.gram = (V.adjoint() * V).transpose();
    return inst;
}

DualityInstance DualityInstance::random(int dim, int nvec, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd V(dim, nvec);
    for (int i = 0; i < dim; ++i)
        for (int n = 0; n < nvec; ++n)
            V(i, n) = std::complex<double>(gauss(rng), gauss(rng));
    return from_vectors(V);
}

std::pair<double, double> best_constants(const DualityInstance& inst)
{
    const double scale = std::max(1.0, inst.gram.cwiseAbs().maxCoeff());
    if ((inst.gram - inst.gram.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw NonHermitianGram();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_gram(inst.gram, Eigen::EigenvaluesOnly);
    const double delta2 = es_gram.eigenvalues().maxCoeff();

    Eigen::MatrixXcd mmh = inst.M * inst.M.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_m(mmh, Eigen::EigenvaluesOnly);
    const double delta3 = es_m.eigenvalues().maxCoeff();

    return {delta2, delta3};
}

double parseval_residual(const DualityInstance& inst, const Eigen::VectorXcd& c)
{
    if (c.size() != inst.gram.rows())
        throw DimensionMismatch();

    const double lhs = (inst.M * c).squaredNorm();
    std::complex<double> rhs = 0.0;
    for (Eigen::Index n = 0; n < c.size(); ++n)
        for (Eigen::Index m = 0; m < c.size(); ++m)
            rhs += c(n) * std::conj(c(m)) * inst.gram(n, m);

    const double scale = std::max(1.0, std::abs(lhs) + std::abs(rhs));
    return std::abs(lhs - rhs) / scale;
}

double exp_integral_E1(double x)
{
    if (!(x > 0.0))
        throw NonPositiveArgument();
    constexpr double euler = 0.57721566490153286060651209;
    if (x <= 1.0) {
        // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
        double sum = 0.0;
        double term = 1.0;
        for (int k = 1; k < 100; ++k) {
            term *= -x / k;
            double del = -term / k;
            sum += del;
            if (std::abs(del) < 1e-17 * std::max(1.0, std::abs(sum)))
                break;
        }
        return -euler - std::log(x) + sum;
    }
    // modified Lentz continued fraction
    double b = x + 1.0;
    double c = std::numeric_limits<double>::max();
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) <= 1e-15)
            break;
    }
    return h * std::exp(-x);
}

MeanValueReport lemma2_ratio(const ThetaForm& f, i64 N, double petersson)
{
    if (N > f.N)
        throw InputError("requested range exceeds computed coefficients");
    if (!(petersson > 0.0))
        throw InputError("Petersson norm must be positive");

    long double acc = 0.0L;
    for (i64 n = 1; n <= N; ++n) {
        long double v = f.af(n);
        acc += v * v;
    }
    MeanValueReport rep;
    rep.q = f.disc.q;
    rep.N = N;
    rep.coeff_sum_sq = static_cast<double>(acc);
    rep.petersson = petersson;
    rep.ratio = rep.coeff_sum_sq /
                ((1.0 + static_cast<double>(N) / static_cast<double>(rep.q)) * petersson);
    return rep;
}

double prop1_ratio(const std::vector<ThetaForm>& basis, const std::vector<double>& petersson,
                   i64 q, const std::vector<std::complex<double>>& c)
{
    if (basis.size() != petersson.size())
        throw DimensionMismatch();
    const i64 N = static_cast<i64>(c.size());
    for (const ThetaForm& f : basis) {
        if (N > f.N)
            throw InputError("requested range exceeds computed coefficients");
    }

    double csq = 0.0;
    for (const auto& v : c)
        csq += std::norm(v);
    double total = 0.0;
    for (size_t fi = 0; fi < basis.size(); ++fi) {
        const double norm = std::sqrt(petersson[fi]);
        std::complex<double> s = 0.0;
        for (i64 n = 1; n <= N; ++n)
            s += c[static_cast<size_t>(n - 1)] * (basis[fi].af(n) / norm);
        total += std::norm(s);
    }
    const double denom = (1.0 + static_cast<double>(N) / static_cast<double>(q)) * csq;
    return (denom > 0.0) ? total / denom : 0.0;
}

double prop1_check(const std::vector<ThetaForm>& basis, const std::vector<double>& petersson,
                   i64 q, i64 N, int trials, std::uint64_t seed)
{
    if (basis.size() != petersson.size())
        throw DimensionMismatch();

    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<std::complex<double>> c(static_cast<size_t>(N));
        for (auto& v : c)
            v = std::complex<double>(gauss(rng), gauss(rng));
        worst = std::max(worst, prop1_ratio(basis, petersson, q, c));
    }
    return worst;
}

} // namespace wt1
