#include "doctest.h"

#include <cmath>

#include "wt1/rankin.hpp"

using namespace wt1;

namespace {

// brute-force oracle: enumerate every factorization n = d^2 e m directly
double b_oracle(const ThetaForm& f, i64 n)
{
    double acc = 0.0;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % (d * d) != 0)
            continue;
        for (i64 e : {i64{1}, f.disc.q}) {
            i64 rest = n / (d * d);
            if (rest % e != 0)
                continue;
            double a = f.af(rest / e);
            acc += a * a;
        }
    }
    return acc;
}

} // namespace

TEST_CASE("rankin coefficients on the worked examples")
{
    ClassGroup G(validate_discriminant(23));
    auto chars = characters(G);
    ThetaForm f = theta_lattice(G, chars, 1, 2500);

    RankinSeries series = b_coeffs(f, 2500);
    REQUIRE(series.exact); // q = 23 coefficients are rational integers
    CHECK(series.b_exact[1] == 1);
    CHECK(series.b_exact[4] == 1);  // |a(4)|^2 + |a(1)|^2 = 0 + 1
    CHECK(series.b_exact[23] == 2); // |a(23)|^2 + |a(1)|^2

    CHECK_THROWS_AS(b_coeffs(f, 5000), InsufficientCoefficients);
}

TEST_CASE("convolution against the brute-force oracle")
{
    for (i64 q : {i64{23}, i64{47}}) {
        ClassGroup G(validate_discriminant(q));
        auto chars = characters(G);
        ThetaForm f = theta_lattice(G, chars, 1, 2000);
        RankinSeries series = b_coeffs(f, 2000);
        for (i64 n = 1; n <= 300; ++n)
            CHECK(series.b[static_cast<size_t>(n)] == doctest::Approx(b_oracle(f, n)).epsilon(1e-12));
        // spot checks at n = p^2 and n = q*m
        for (i64 n : {i64{289}, i64{361}, i64{961}, q * 13, q * 40, q * 42})
            CHECK(series.b[static_cast<size_t>(n)] == doctest::Approx(b_oracle(f, n)).epsilon(1e-12));
    }
}

TEST_CASE("rankin coefficients are nonnegative and divisor-bounded")
{
    auto d4 = divisor4_count_table(2000);
    for (i64 q : {i64{23}, i64{31}, i64{47}}) {
        ClassGroup G(validate_discriminant(q));
        auto basis = dihedral_basis(G, 2000);
        for (const auto& f : basis) {
            RankinSeries series = b_coeffs(f, 2000);
            for (i64 n = 1; n <= 2000; ++n) {
                CHECK(series.b[static_cast<size_t>(n)] >= 0.0);
                CHECK(series.b[static_cast<size_t>(n)] <=
                      2.0 * static_cast<double>(d4[static_cast<size_t>(n)]) + 1e-9);
            }
        }
    }
}

TEST_CASE("exact and float views agree when coefficients are integers")
{
    ClassGroup G(validate_discriminant(31));
    auto chars = characters(G);
    ThetaForm f = theta_lattice(G, chars, 1, 1500);
    RankinSeries series = b_coeffs(f, 1500);
    REQUIRE(series.exact);
    for (i64 n = 1; n <= 1500; ++n)
        CHECK(series.b[static_cast<size_t>(n)] ==
              static_cast<double>(series.b_exact[static_cast<size_t>(n)]));
}

TEST_CASE("petersson estimator basics")
{
    ClassGroup G(validate_discriminant(23));
    auto chars = characters(G);
    ThetaForm f = theta_lattice(G, chars, 1, 10000);

    PeterssonEstimate est = petersson_estimate(f, 10000);
    CHECK(est.value > 0.0);
    CHECK(est.residue > 0.0);
    CHECK(est.stability_gap >= 0.0);
    CHECK(est.stability_gap < 0.5);

    // doubling every a(n) quadruples the estimate
    ThetaForm doubled = f;
    for (auto& c : doubled.coeffs)
        c = c.scaled(2);
    for (auto& v : doubled.floats)
        v *= 2.0;
    PeterssonEstimate est2 = petersson_estimate(doubled, 10000);
    CHECK(est2.value == doctest::Approx(4.0 * est.value).epsilon(1e-12));

    CHECK_THROWS_AS(petersson_estimate(f, 500), InsufficientCoefficients);
}

TEST_CASE("petersson ratio grid")
{
    Prop2aReport rep = prop2a_check({7, 23, 31}, 2000);
    // q = 7 contributes no dihedral forms
    for (const auto& e : rep.entries)
        CHECK(e.q != 7);
    REQUIRE(rep.entries.size() == 2);
    for (const auto& e : rep.entries) {
        CHECK(e.petersson > 0.0);
        CHECK(std::isfinite(e.ratio));
        CHECK(e.ratio > 0.0);
    }
    CHECK(rep.max_ratio < 10.0);

    // estimator stability under doubling X
    Prop2aReport rep2 = prop2a_check({23}, 4000);
    Prop2aReport rep1 = prop2a_check({23}, 2000);
    CHECK(rep2.max_ratio < 2.0 * rep1.max_ratio);
    CHECK(rep1.max_ratio < 2.0 * rep2.max_ratio);
}
