#ifndef WT1_QUADFORM_HPP
#define WT1_QUADFORM_HPP

#include <compare>
#include <string>
#include <vector>

#include "wt1/arith.hpp"

namespace wt1 {

struct NotPrime : InputError {
    NotPrime() : InputError("q is not prime") {}
};
struct WrongResidueClass : InputError {
    WrongResidueClass() : InputError("q is not congruent to 3 mod 4") {}
};
struct TooSmall : InputError {
    TooSmall() : InputError("q = 3 has extra units and is rejected") {}
};
struct NonNegativeDiscriminant : InputError {
    NonNegativeDiscriminant() : InputError("form has nonnegative discriminant") {}
};
struct DiscriminantMismatch : InputError {
    DiscriminantMismatch() : InputError("forms have different discriminants") {}
};

// D = -q for an odd prime q = 3 (mod 4), q >= 7
struct Discriminant {
    i64 q = 0;
    i64 D = 0;
};

Discriminant validate_discriminant(i64 q);

// primitive integral binary quadratic form a x^2 + b x y + c y^2
struct QuadForm {
    i64 a = 0, b = 0, c = 0;

    i64 disc() const { return b * b - 4 * a * c; }
    QuadForm opposite() const { return {a, -b, c}; }
    bool is_reduced() const;
    i64 eval(i64 x, i64 y) const { return a * x * x + b * x * y + c * y * y; }

    friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

std::string to_string(const QuadForm& f);

// Gauss reduction to the unique reduced representative of the class of f
QuadForm reduce(QuadForm f);

// all reduced forms of discriminant D, lex-sorted on (a, b); length = h
std::vector<QuadForm> enumerate_reduced(const Discriminant& D);

// Gauss/Dirichlet composition, result reduced
QuadForm compose(const QuadForm& f, const QuadForm& g, const Discriminant& D);

// Enumerated class group with composition table and invariant-factor
// decomposition.  Forms are indexed by their position in `forms`; `dlog`
// maps a form index to its exponent vector on `generators`, component i
// taken mod invariant_factors[i].
class ClassGroup {
public:
    explicit ClassGroup(const Discriminant& D);

    const Discriminant& disc() const { return disc_; }
    const std::vector<QuadForm>& forms() const { return forms_; }
    i64 h() const { return static_cast<i64>(forms_.size()); }
    int principal_index() const { return principal_; }

    int index_of(const QuadForm& reduced_form) const; // -1 if absent
    int mul(int i, int j) const { return table_[static_cast<size_t>(i) * forms_.size() + j]; }
    int inv(int i) const;
    int pow(int i, i64 e) const;
    i64 order_of(int i) const;

    // d_1 | d_2 | ... | d_r with product h; empty for trivial group
    const std::vector<i64>& invariant_factors() const { return invariant_factors_; }
    // form index of the generator matching each invariant factor
    const std::vector<int>& generators() const { return generators_; }
    const std::vector<std::vector<i64>>& dlog() const { return dlog_; }
    // exponent of the group: lcm of the invariant factors (1 for h = 1)
    i64 exponent() const { return invariant_factors_.empty() ? 1 : invariant_factors_.back(); }

    // classes of exact order ell
    i64 torsion_count(i64 ell) const;
    // ell-rank: number of invariant factors divisible by ell
    int rank(i64 ell) const;

private:
    Discriminant disc_;
    std::vector<QuadForm> forms_;
    int principal_ = -1;
    std::vector<int> table_;
    std::vector<i64> invariant_factors_;
    std::vector<int> generators_;
    std::vector<std::vector<i64>> dlog_;

    void build_table();
    void build_structure();
};

} // namespace wt1

#endif
