#include "doctest.h"

#include <cmath>
#include <complex>
#include <numeric>

#include "wt1/hecke_poly.hpp"
#include "wt1/theta.hpp"

using namespace wt1;

TEST_CASE("ideal counts on the worked examples")
{
    Discriminant D = validate_discriminant(23);
    QuadForm principal{1, 1, 6}, g{2, 1, 3}, gi{2, -1, 3};

    CHECK(ideal_count(D, principal, 1) == 1);
    CHECK(ideal_count(D, g, 1) == 0);
    CHECK(ideal_count(D, g, 2) == 1);
    // 5 is inert: no ideals of norm 5 in any class
    CHECK(ideal_count(D, principal, 5) == 0);
    CHECK(ideal_count(D, g, 5) == 0);
    CHECK(ideal_count(D, gi, 5) == 0);
    // exactly one ideal of norm q, in the principal class
    CHECK(ideal_count(D, principal, 23) == 1);
    CHECK(ideal_count(D, g, 23) == 0);
}

TEST_CASE("theta rejects the trivial character")
{
    ClassGroup G(validate_discriminant(23));
    auto chars = characters(G);
    CHECK_THROWS_AS(theta_lattice(G, chars, 0, 50), TrivialCharacter);
    CHECK_THROWS_AS(theta_hecke(G, chars, 0, 50), TrivialCharacter);
}

TEST_CASE("first coefficients at q = 23")
{
    ClassGroup G(validate_discriminant(23));
    auto chars = characters(G);
    ThetaForm f = theta_lattice(G, chars, 1, 100);
    auto ring = f.ring;

    CHECK(f.a(1) == CycInt::integer(ring, 1));
    CHECK(f.a(2) == CycInt::integer(ring, -1)); // zeta_3 + zeta_3^2
    CHECK(f.a(4) == CycInt::integer(ring, 0));
    CHECK(f.a(25) == CycInt::integer(ring, 1));
    CHECK(std::abs(std::abs(f.a(23).embed()) - 1.0) < 1e-12);
}

TEST_CASE("eta product oracle at q = 23")
{
    ClassGroup G(validate_discriminant(23));
    auto chars = characters(G);
    const i64 N = 500;
    ThetaForm f = theta_lattice(G, chars, 1, N);
    auto eta = eta23_coefficients(N);
    for (i64 n = 1; n <= N; ++n) {
        i64 an = 0;
        REQUIRE(f.a(n).is_integer(&an));
        CHECK(an == eta[static_cast<size_t>(n - 1)]);
    }
}

TEST_CASE("lattice and Hecke constructions agree exactly")
{
    for (i64 q : {i64{23}, i64{31}, i64{47}}) {
        ClassGroup G(validate_discriminant(q));
        auto chars = characters(G);
        const i64 N = 1000;
        IdealCountTable counts = ideal_count_table(G, N);
        for (int ci = 1; ci < static_cast<int>(chars.size()); ++ci) {
            ThetaForm lat = theta_lattice(G, chars, ci, N, counts);
            ThetaForm hec = theta_hecke(G, chars, ci, N);
            for (i64 n = 1; n <= N; ++n)
                REQUIRE(lat.a(n) == hec.a(n));
        }
    }
}

TEST_CASE("coefficients are real and conjugation-invariant")
{
    ClassGroup G(validate_discriminant(47));
    auto chars = characters(G);
    const i64 N = 300;
    IdealCountTable counts = ideal_count_table(G, N);
    for (int ci = 1; ci < static_cast<int>(chars.size()); ++ci) {
        ThetaForm f = theta_lattice(G, chars, ci, N, counts);
        for (i64 n = 1; n <= N; ++n) {
            CHECK(f.a(n).conj() == f.a(n));
            CHECK(std::abs(f.a(n).embed().imag()) < 1e-10);
        }
    }
    // theta of chi and of conj(chi) coincide coefficientwise
    auto reps = conjugate_pair_representatives(chars);
    for (int rep : reps) {
        int mate = -1;
        for (int cj = 1; cj < static_cast<int>(chars.size()); ++cj) {
            if (cj != rep && is_conjugate_pair(chars[static_cast<size_t>(rep)],
                                               chars[static_cast<size_t>(cj)]))
                mate = cj;
        }
        REQUIRE(mate >= 0);
        ThetaForm a = theta_lattice(G, chars, rep, N, counts);
        ThetaForm b = theta_lattice(G, chars, mate, N, counts);
        for (i64 n = 1; n <= N; ++n)
            CHECK(a.a(n) == b.a(n));
    }
}

TEST_CASE("Ramanujan bound with the divisor function")
{
    auto d = divisor_count_table(500);
    for (i64 q : {i64{23}, i64{31}, i64{47}}) {
        ClassGroup G(validate_discriminant(q));
        auto basis = dihedral_basis(G, 500);
        for (const auto& f : basis)
            for (i64 n = 1; n <= 500; ++n)
                CHECK(std::abs(f.af(n)) <= static_cast<double>(d[static_cast<size_t>(n)]) + 1e-9);
    }
}

TEST_CASE("multiplicativity and the Hecke recursion hold on lattice coefficients")
{
    ClassGroup G(validate_discriminant(31));
    auto chars = characters(G);
    const i64 N = 1000;
    ThetaForm f = theta_lattice(G, chars, 1, N);

    for (i64 m : {i64{2}, i64{3}, i64{4}, i64{9}, i64{25}}) {
        for (i64 n = 1; m * n <= N; ++n) {
            if (std::gcd(m, n) != 1)
                continue;
            CHECK(f.a(m * n) == f.a(m) * f.a(n));
        }
    }
    for (i64 p : {i64{2}, i64{3}, i64{5}, i64{7}, i64{31}}) {
        i64 eps = kronecker(p, 31);
        for (i64 pk = p; pk * p * p <= N; pk *= p) {
            // a(p^{k+2}) = a(p) a(p^{k+1}) - eps(p) a(p^k)
            CHECK(f.a(pk * p * p) == f.a(p) * f.a(pk * p) - f.a(pk).scaled(eps));
        }
    }
}

TEST_CASE("even prime-power coefficients follow the Hecke polynomials")
{
    // eps^n(p) a(p^{2n}) = P_n(eps(p) a(p^2)) for p != q
    for (i64 q : {i64{23}, i64{47}}) {
        ClassGroup G(validate_discriminant(q));
        const i64 N = 10000;
        auto basis = dihedral_basis(G, N);
        for (const auto& f : basis) {
            auto ring = f.ring;
            auto from_int = [&ring](i64 v) { return CycInt::integer(ring, v); };
            for (i64 p : {i64{2}, i64{3}, i64{5}, i64{7}, i64{11}, i64{13}}) {
                if (p == q)
                    continue;
                const i64 eps = kronecker(p, q);
                CycInt x = f.a(p * p).scaled(eps);
                for (int n = 1;; ++n) {
                    i64 p2n = 1;
                    bool fits = true;
                    for (int t = 0; t < 2 * n && fits; ++t) {
                        p2n *= p;
                        fits = p2n <= N;
                    }
                    if (!fits)
                        break;
                    CycInt lhs = f.a(p2n).scaled((eps < 0 && n % 2 == 1) ? -1 : 1);
                    CHECK(lhs == eval_poly(hecke_P(n), x, from_int));
                }
            }
        }
    }
}

TEST_CASE("dihedral basis sizes")
{
    ClassGroup g7(validate_discriminant(7));
    CHECK(dihedral_basis(g7, 50).empty());

    ClassGroup g23(validate_discriminant(23));
    CHECK(dihedral_basis(g23, 50).size() == 1);

    ClassGroup g47(validate_discriminant(47));
    auto basis = dihedral_basis(g47, 200);
    REQUIRE(basis.size() == 2);
    bool distinct = false;
    for (i64 n = 1; n <= 200; ++n)
        distinct = distinct || !(basis[0].a(n) == basis[1].a(n));
    CHECK(distinct);
}
