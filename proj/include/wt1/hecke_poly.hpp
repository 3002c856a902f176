#ifndef WT1_HECKE_POLY_HPP
#define WT1_HECKE_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wt1/arith.hpp"

namespace wt1 {

struct IllegalValue : InputError {
    IllegalValue() : InputError("value outside the legal a(p^2) value set") {}
};

// dense integer polynomial, ascending coefficients, no trailing zeros
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<i64> ascending);
    static IntPoly constant(i64 c);
    static IntPoly x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    i64 coeff(int k) const
    {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : 0;
    }
    const std::vector<i64>& coeffs() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    i64 eval(i64 x) const;
    std::string to_string() const;

private:
    void trim();
    std::vector<i64> c_;
};

// Horner evaluation over any commutative ring with an integer embedding
template <typename T, typename FromInt>
T eval_poly(const IntPoly& P, const T& x, FromInt from_int)
{
    T acc = from_int(P.coeff(P.degree() < 0 ? 0 : P.degree()));
    for (int k = (P.degree() < 0 ? 0 : P.degree()) - 1; k >= 0; --k)
        acc = acc * x + from_int(P.coeff(k));
    return acc;
}

// P_0 = 1, P_1 = x, P_{n+1}(x) = (x - 1) P_n(x) - P_{n-1}(x)
IntPoly hecke_P(int n);

// x(x+1)(x-1)(x-3) + 1 == P_4 - P_2 - P_1, exact coefficient comparison
bool verify_oct_identity();
// x(x+1)(x-2)(x-3)(x^2-x-1) + 1 == P_6 - P_4 - P_1
bool verify_ico_identity();

// (u + v sqrt(5)) / 2 with u = v (mod 2); exact ring containing the
// golden-ratio values of the icosahedral set
struct GoldenValue {
    i64 u = 0, v = 0;

    GoldenValue() = default;
    GoldenValue(i64 uu, i64 vv);
    static GoldenValue integer(i64 n) { return GoldenValue(2 * n, 0); }
    static GoldenValue golden_plus() { return GoldenValue(1, 1); }   // (1+sqrt5)/2
    static GoldenValue golden_minus() { return GoldenValue(1, -1); } // (1-sqrt5)/2

    GoldenValue operator+(const GoldenValue& o) const;
    GoldenValue operator-(const GoldenValue& o) const;
    GoldenValue operator-() const { return GoldenValue(-u, -v); }
    GoldenValue operator*(const GoldenValue& o) const;
    bool operator==(const GoldenValue& o) const { return u == o.u && v == o.v; }
    bool operator!=(const GoldenValue& o) const { return !(*this == o); }

    bool is_integer(i64* n = nullptr) const;
    double to_double() const;
    std::string to_string() const;
};

enum class StreamType { octahedral, icosahedral };

// a(p^2) value sets of the two non-dihedral types
std::vector<GoldenValue> legal_values(StreamType type);

// synthetic coefficient stream on even prime-power support:
// a(p^{2n}) = eps(p)^n P_n(x_p) for the assigned x_p
class SyntheticStream {
public:
    SyntheticStream(StreamType type, i64 q, std::vector<std::pair<i64, GoldenValue>> assignment,
                    i64 N);

    StreamType type() const { return type_; }
    i64 q() const { return q_; }
    i64 limit() const { return N_; }

    bool has(i64 n) const { return n == 1 || a_.count(n) > 0; }
    GoldenValue a(i64 n) const;

private:
    StreamType type_;
    i64 q_;
    i64 N_;
    std::map<i64, GoldenValue> a_;
};

SyntheticStream synth_stream(StreamType type, i64 q,
                             const std::vector<std::pair<i64, GoldenValue>>& assignment, i64 N);

} // namespace wt1

#endif
