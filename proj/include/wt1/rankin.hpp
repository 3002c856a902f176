#ifndef WT1_RANKIN_HPP
#define WT1_RANKIN_HPP

#include <vector>

#include "wt1/theta.hpp"

namespace wt1 {

struct InsufficientCoefficients : InputError {
    InsufficientCoefficients() : InputError("not enough theta coefficients for the requested range") {}
};

// coefficients of the Rankin-Selberg convolution
// b(n) = sum over n = d^2 e m, e in {1, q}, of |a(m)|^2
struct RankinSeries {
    i64 q = 0;
    i64 X = 0;
    std::vector<double> b;      // b[n], index 0 unused
    bool exact = false;         // all a(n) rational integers
    std::vector<i64> b_exact;   // integer values when exact
};

RankinSeries b_coeffs(const ThetaForm& f, i64 X);        // OpenMP, gathered by n-blocks
RankinSeries b_coeffs_serial(const ThetaForm& f, i64 X); // scatter-order reference

struct PeterssonEstimate {
    double value = 0.0;        // estimated <f,f>
    double residue = 0.0;      // Cesaro estimate of Res_{s=1} phi(s)
    i64 X = 0;
    double stability_gap = 0.0; // |est(X) - est(X/2)| / est(X)
};

// residue at s = 1 by the Cesaro-weighted mean (2/X) sum (1 - n/X) b(n),
// then <f,f> = q R / (2 pi^2)
PeterssonEstimate petersson_estimate(const ThetaForm& f, i64 X);
PeterssonEstimate petersson_estimate(const RankinSeries& series);

struct Prop2aReport {
    struct Entry {
        i64 q = 0;
        int char_index = -1;
        double petersson = 0.0;
        double ratio = 0.0; // <f,f>_est / (q log^3 q)
    };
    std::vector<Entry> entries;
    double max_ratio = 0.0;
    i64 X = 0;
};

// grid evaluation of <f,f> / (q log^3 q) over all dihedral forms
Prop2aReport prop2a_check(const std::vector<i64>& qs, i64 X);

} // namespace wt1

#endif
