#include "doctest.h"

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "wt1/meanvalue.hpp"
#include "wt1/rankin.hpp"

using namespace wt1;

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fb, double fm, double eps, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, fm, flm, eps / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, fb, frm, eps / 2.0, depth - 1);
}

// quadrature oracle for E1(x) = int_1^inf e^{-x t} / t dt
double e1_quadrature(double x)
{
    auto f = [x](double t) { return std::exp(-x * t) / t; };
    const double upper = 1.0 + 60.0 / x;
    return adaptive_simpson(f, 1.0, upper, f(1.0), f(upper), f(0.5 * (1.0 + upper)), 1e-14, 40);
}

} // namespace

TEST_CASE("duality constants on orthonormal vectors")
{
    Eigen::MatrixXcd V = Eigen::MatrixXcd::Identity(5, 5);
    auto inst = DualityInstance::from_vectors(V);
    auto [d2, d3] = best_constants(inst);
    CHECK(d2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d3 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("duality constants on a single vector")
{
    Eigen::MatrixXcd V(3, 1);
    V << std::complex<double>(1, 2), std::complex<double>(0, -1), std::complex<double>(2, 0);
    auto inst = DualityInstance::from_vectors(V);
    const double vv = V.col(0).squaredNorm();
    auto [d2, d3] = best_constants(inst);
    CHECK(d2 == doctest::Approx(vv).epsilon(1e-12));
    CHECK(d3 == doctest::Approx(vv).epsilon(1e-12));
}

TEST_CASE("dual constants agree on random instances")
{
    for (int t = 0; t < 30; ++t) {
        auto inst = DualityInstance::random(4, 7, 1000 + static_cast<std::uint64_t>(t));
        auto [d2, d3] = best_constants(inst);
        CHECK(std::abs(d2 - d3) <= 1e-9 * std::max(1.0, d2));
    }
}

TEST_CASE("nonzero spectra of the two Gram matrices coincide")
{
    for (int t = 0; t < 10; ++t) {
        auto inst = DualityInstance::random(6, 9, 77 + static_cast<std::uint64_t>(t));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> big(inst.gram, Eigen::EigenvaluesOnly);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> small(inst.M * inst.M.adjoint(),
                                                              Eigen::EigenvaluesOnly);
        // the 9x9 Gram has the 6 nonzero eigenvalues of M M^* plus zeros
        auto lb = big.eigenvalues();
        auto ls = small.eigenvalues();
        for (int k = 0; k < 6; ++k) {
            double a = lb(lb.size() - 1 - k);
            double b = ls(ls.size() - 1 - k);
            CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
        }
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(lb(k)) <= 1e-9 * std::max(1.0, lb(lb.size() - 1)));
    }
}

TEST_CASE("gram matrix validation")
{
    auto inst = DualityInstance::random(4, 6, 5);
    inst.gram(1, 2) += std::complex<double>(0.1, 0.3);
    CHECK_THROWS_AS(best_constants(inst), NonHermitianGram);
}

TEST_CASE("parseval residual")
{
    auto inst = DualityInstance::random(5, 8, 42);

    Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(8);
    CHECK(parseval_residual(inst, zero) == 0.0);

    Eigen::VectorXcd onehot = Eigen::VectorXcd::Zero(8);
    onehot(0) = 1.0;
    CHECK(parseval_residual(inst, onehot) < 1e-9);

    std::mt19937_64 rng(4242);
    std::normal_distribution<double> gauss;
    for (int t = 0; t < 20; ++t) {
        Eigen::VectorXcd c(8);
        for (int k = 0; k < 8; ++k)
            c(k) = std::complex<double>(gauss(rng), gauss(rng));
        CHECK(parseval_residual(inst, c) < 1e-9);
    }

    Eigen::VectorXcd bad = Eigen::VectorXcd::Zero(7);
    CHECK_THROWS_AS(parseval_residual(inst, bad), DimensionMismatch);
}

TEST_CASE("exponential integral E1")
{
    CHECK(exp_integral_E1(1.0) == doctest::Approx(0.2193839344).epsilon(1e-9));
    CHECK_THROWS_AS(exp_integral_E1(0.0), NonPositiveArgument);
    CHECK_THROWS_AS(exp_integral_E1(-2.0), NonPositiveArgument);

    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 20.0}) {
        double oracle = e1_quadrature(x);
        CHECK(exp_integral_E1(x) == doctest::Approx(oracle).epsilon(1e-8));
    }
    // bracketing e^{-x}/(x+1) <= E1(x) <= e^{-x}/x
    for (double x : {0.5, 1.0, 5.0, 20.0}) {
        double v = exp_integral_E1(x);
        CHECK(v >= std::exp(-x) / (x + 1.0));
        CHECK(v <= std::exp(-x) / x);
    }
    // strict monotone decrease
    double prev = exp_integral_E1(0.05);
    for (double x = 0.1; x < 30.0; x += 0.35) {
        double cur = exp_integral_E1(x);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("mean-value ratio bookkeeping")
{
    ClassGroup G(validate_discriminant(23));
    auto chars = characters(G);
    ThetaForm f = theta_lattice(G, chars, 1, 2000);

    MeanValueReport rep = lemma2_ratio(f, 1, 2.0);
    CHECK(rep.coeff_sum_sq == doctest::Approx(1.0)); // |a(1)|^2
    CHECK(rep.q == 23);
    CHECK(rep.ratio == doctest::Approx(1.0 / ((1.0 + 1.0 / 23.0) * 2.0)));

    PeterssonEstimate pet = petersson_estimate(f, 2000);
    MeanValueReport full = lemma2_ratio(f, 2000, pet.value);
    CHECK(full.ratio > 0.0);
    CHECK(full.ratio < 100.0);

    CHECK_THROWS_AS(lemma2_ratio(f, 5000, 1.0), InputError);
    CHECK_THROWS_AS(lemma2_ratio(f, 10, 0.0), InputError);
}

TEST_CASE("mean-value numerator is nondecreasing in N")
{
    ClassGroup G(validate_discriminant(31));
    auto chars = characters(G);
    ThetaForm f = theta_lattice(G, chars, 1, 1000);
    double prev = 0.0;
    for (i64 N = 1; N <= 1000; N += 7) {
        double cur = lemma2_ratio(f, N, 1.0).coeff_sum_sq;
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("random-vector mean-value ratios")
{
    // no dihedral forms at q = 7: empty sum
    {
        ClassGroup G(validate_discriminant(7));
        auto basis = dihedral_basis(G, 50);
        CHECK(prop1_check(basis, {}, 7, 20, 5, 1) == 0.0);
    }

    ClassGroup G(validate_discriminant(47));
    const i64 N = 470;
    auto basis = dihedral_basis(G, 2000);
    std::vector<double> pets;
    for (const auto& f : basis)
        pets.push_back(petersson_estimate(f, 2000).value);

    // one-hot c at n = 1: ratio reduces to sum_f 1/<f,f> over (1 + N/q)
    std::vector<std::complex<double>> onehot(static_cast<size_t>(N), 0.0);
    onehot[0] = 1.0;
    double expect = 0.0;
    for (double p : pets)
        expect += 1.0 / p;
    expect /= (1.0 + static_cast<double>(N) / 47.0);
    CHECK(prop1_ratio(basis, pets, 47, onehot) == doctest::Approx(expect).epsilon(1e-12));

    double worst = prop1_check(basis, pets, 47, N, 25, 2024);
    CHECK(worst > 0.0);
    CHECK(worst < 100.0);
}
