#ifndef WT1_MEANVALUE_HPP
#define WT1_MEANVALUE_HPP

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "wt1/theta.hpp"

namespace wt1 {

struct NonHermitianGram : InputError {
    NonHermitianGram() : InputError("Gram matrix is not Hermitian") {}
};
struct DimensionMismatch : InputError {
    DimensionMismatch() : InputError("coefficient vector length does not match the test vectors") {}
};
struct NonPositiveArgument : InputError {
    NonPositiveArgument() : InputError("E1 requires a positive argument") {}
};

// finite-dimensional duality setup: an orthonormal basis {f_i} of C^dim,
// test vectors {v_n}, M(i,n) = <f_i, v_n> and gram(n,m) = <v_n, v_m>
struct DualityInstance {
    Eigen::MatrixXcd M;
    Eigen::MatrixXcd gram;

    // columns of V are the test vectors against the standard basis
    static DualityInstance from_vectors(const Eigen::MatrixXcd& V);
    static DualityInstance random(int dim, int nvec, std::uint64_t seed);
};

// smallest admissible constants of the two dual bilinear inequalities:
// first from the spectrum of the Gram matrix, second as the squared
// operator norm of M; they agree up to roundoff
std::pair<double, double> best_constants(const DualityInstance& inst);

// relative residual between the two sides of Parseval's identity
double parseval_residual(const DualityInstance& inst, const Eigen::VectorXcd& c);

// E1(x) = int_1^inf e^{-x t} / t dt; series for x <= 1, continued
// fraction for x > 1
double exp_integral_E1(double x);

struct MeanValueReport {
    i64 q = 0;
    i64 N = 0;
    double coeff_sum_sq = 0.0;
    double petersson = 0.0;
    double ratio = 0.0;
};

// sum_{n<=N} |a(n)|^2 against (1 + N/q) <f,f>
MeanValueReport lemma2_ratio(const ThetaForm& f, i64 N, double petersson);

// normalized bilinear ratio for one coefficient vector c of length N:
// sum_f |sum_n c_n a_f(n)/||f|| |^2 / ((1 + N/q) sum |c_n|^2)
double prop1_ratio(const std::vector<ThetaForm>& basis, const std::vector<double>& petersson,
                   i64 q, const std::vector<std::complex<double>>& c);

// max of prop1_ratio over random coefficient vectors; forms are
// normalized by their Petersson estimates
double prop1_check(const std::vector<ThetaForm>& basis, const std::vector<double>& petersson,
                   i64 q, i64 N, int trials, std::uint64_t seed);

} // namespace wt1

#endif
