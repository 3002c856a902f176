#ifndef WT1_THETA_HPP
#define WT1_THETA_HPP

#include <vector>

#include "wt1/characters.hpp"
#include "wt1/cyclotomic.hpp"
#include "wt1/quadform.hpp"

namespace wt1 {

struct TrivialCharacter : InputError {
    TrivialCharacter() : InputError("trivial character gives an Eisenstein series, not a cusp form") {}
};

// number of integral ideals of norm n in the class of Q, as r_Q(n)/2;
// per-n lattice solver, also the reference for the sieve kernels
i64 ideal_count(const Discriminant& D, const QuadForm& Q, i64 n);

// counts[class][n] for 1 <= n <= N (index 0 unused); one sieve pass over
// the lattice points of each class ellipse
using IdealCountTable = std::vector<std::vector<i64>>;
IdealCountTable ideal_count_table(const ClassGroup& G, i64 N);        // OpenMP over y-rows
IdealCountTable ideal_count_table_serial(const ClassGroup& G, i64 N); // plain loop reference

// Fourier coefficients a(1..N) of the dihedral newform attached to a
// nontrivial class character; exact values plus a float view
struct ThetaForm {
    Discriminant disc;
    int char_index = -1;
    std::vector<i64> char_exponents;
    i64 N = 0;
    CycRingPtr ring;
    std::vector<CycInt> coeffs; // coeffs[n-1] = a(n)
    std::vector<double> floats; // real embeddings

    const CycInt& a(i64 n) const { return coeffs[static_cast<size_t>(n - 1)]; }
    double af(i64 n) const { return floats[static_cast<size_t>(n - 1)]; }
};

// a(n) = sum over classes of chi(class) * ideal_count(class, n)
ThetaForm theta_lattice(const ClassGroup& G, const std::vector<ClassCharacter>& chars, int chi_index,
                        i64 N);
ThetaForm theta_lattice(const ClassGroup& G, const std::vector<ClassCharacter>& chars, int chi_index,
                        i64 N, const IdealCountTable& counts);

// a(p) from splitting data, prime powers by the Hecke recursion
// a(p^{k+1}) = a(p) a(p^k) - eps(p) a(p^{k-1}), then multiplicativity
ThetaForm theta_hecke(const ClassGroup& G, const std::vector<ClassCharacter>& chars, int chi_index,
                      i64 N);

// one form per conjugate pair of nontrivial characters, (h-1)/2 total
std::vector<ThetaForm> dihedral_basis(const ClassGroup& G, i64 N);

// q-expansion of eta(z) eta(23 z): out[i] = coefficient of x^{i+1} in
// x * prod_{k>=1} (1 - x^k)(1 - x^{23k}); closed-form oracle for q = 23
std::vector<i64> eta23_coefficients(i64 N);

} // namespace wt1

#endif
