#include "doctest.h"

#include <complex>

#include "wt1/characters.hpp"

using namespace wt1;

TEST_CASE("character counts and ordering")
{
    ClassGroup g7(validate_discriminant(7));
    auto c7 = characters(g7);
    REQUIRE(c7.size() == 1);
    CHECK(c7[0].is_trivial());

    ClassGroup g23(validate_discriminant(23));
    auto c23 = characters(g23);
    REQUIRE(c23.size() == 3);
    CHECK(c23[0].is_trivial());
    CHECK_FALSE(c23[1].is_trivial());
    CHECK(is_conjugate_pair(c23[1], c23[2]));
}

TEST_CASE("all nontrivial characters are non-real")
{
    for (i64 q : {i64{23}, i64{31}, i64{47}, i64{71}}) {
        ClassGroup G(validate_discriminant(q));
        auto chars = characters(G);
        CHECK(static_cast<i64>(chars.size()) == G.h());
        i64 nonreal = 0;
        for (const auto& chi : chars) {
            // real character = equal to its own conjugate
            if (!is_conjugate_pair(chi, chi))
                ++nonreal;
            else
                CHECK(chi.is_trivial());
        }
        CHECK(nonreal == G.h() - 1);
    }
}

TEST_CASE("evaluation on the q = 23 worked example")
{
    ClassGroup G(validate_discriminant(23));
    auto chars = characters(G);
    auto ring = chars[1].ring();
    const CycInt one = CycInt::integer(ring, 1);

    for (int i = 0; i < 3; ++i)
        CHECK(chars[0].evaluate(i) == one);

    int idx = G.index_of(QuadForm{2, 1, 3});
    REQUIRE(idx >= 0);
    CycInt val = chars[1].evaluate(idx);
    CHECK(val != one);
    CHECK(val * val * val == one); // primitive cube root

    // orthogonality: sum of chi over classes vanishes for nontrivial chi
    for (size_t ci = 1; ci < chars.size(); ++ci) {
        CycInt sum = CycInt::zero(ring);
        for (int i = 0; i < 3; ++i)
            sum += chars[ci].evaluate(i);
        CHECK(sum.is_zero());
    }

    CHECK_THROWS_AS(chars[1].evaluate(3), IndexOutOfRange);
    CHECK_THROWS_AS(chars[1].evaluate(-1), IndexOutOfRange);
}

TEST_CASE("characters are multiplicative on the composition table")
{
    for (i64 q : {i64{23}, i64{31}, i64{47}, i64{59}}) {
        ClassGroup G(validate_discriminant(q));
        auto chars = characters(G);
        const int h = static_cast<int>(G.h());
        for (const auto& chi : chars) {
            CHECK(chi.evaluate(G.principal_index()) == CycInt::integer(chi.ring(), 1));
            for (int x = 0; x < h; ++x)
                for (int y = 0; y < h; ++y)
                    CHECK(chi.evaluate(G.mul(x, y)) == chi.evaluate(x) * chi.evaluate(y));
        }
    }
}

TEST_CASE("character table row orthogonality")
{
    for (i64 q : {i64{23}, i64{47}, i64{71}}) {
        ClassGroup G(validate_discriminant(q));
        auto chars = characters(G);
        const int h = static_cast<int>(G.h());
        auto ring = chars[0].ring();
        for (size_t i = 0; i < chars.size(); ++i) {
            for (size_t j = 0; j < chars.size(); ++j) {
                CycInt sum = CycInt::zero(ring);
                std::complex<double> fsum = 0.0;
                for (int x = 0; x < h; ++x) {
                    CycInt term = chars[i].evaluate(x) * chars[j].evaluate(x).conj();
                    fsum += term.embed();
                    sum += term;
                }
                CycInt expect = CycInt::integer(ring, i == j ? G.h() : 0);
                CHECK(sum == expect);
                CHECK(std::abs(fsum - expect.embed()) < 1e-10);
            }
        }
    }
}

TEST_CASE("conjugate pairing")
{
    ClassGroup G(validate_discriminant(23));
    auto chars = characters(G);
    CHECK(is_conjugate_pair(chars[0], chars[0]));
    CHECK(is_conjugate_pair(chars[1], chars[2]));
    CHECK_FALSE(is_conjugate_pair(chars[1], chars[0]));

    ClassGroup other(validate_discriminant(31));
    auto ochars = characters(other);
    CHECK_THROWS_AS(is_conjugate_pair(chars[1], ochars[1]), GroupMismatch);

    for (i64 q : {i64{23}, i64{31}, i64{47}, i64{71}, i64{79}}) {
        ClassGroup H(validate_discriminant(q));
        auto cs = characters(H);
        auto reps = conjugate_pair_representatives(cs);
        CHECK(static_cast<i64>(reps.size()) == (H.h() - 1) / 2);
    }
}
