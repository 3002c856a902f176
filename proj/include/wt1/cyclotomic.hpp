#ifndef WT1_CYCLOTOMIC_HPP
#define WT1_CYCLOTOMIC_HPP

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "wt1/arith.hpp"

namespace wt1 {

// Z[zeta_m] in the power basis 1, z, ..., z^{phi(m)-1} reduced mod the
// m-th cyclotomic polynomial.  One ring instance is shared by all values
// of a given order.
class CycRing {
public:
    explicit CycRing(i64 m);

    i64 order() const { return m_; }
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    const std::vector<i64>& modulus() const { return modulus_; }

    // x^j mod Phi_m, any j >= 0 (periodic in m)
    const std::vector<i64>& xpow(i64 j) const { return xpow_[static_cast<size_t>(j % m_)]; }

private:
    i64 m_;
    std::vector<i64> modulus_; // Phi_m, ascending, monic
    std::vector<std::vector<i64>> xpow_;
};

using CycRingPtr = std::shared_ptr<const CycRing>;

CycRingPtr make_cyc_ring(i64 m);

// coefficients of Phi_m, ascending degree
std::vector<i64> cyclotomic_polynomial(i64 m);

class CycInt {
public:
    CycInt() = default;

    static CycInt zero(const CycRingPtr& ring);
    static CycInt integer(const CycRingPtr& ring, i64 n);
    static CycInt zeta_pow(const CycRingPtr& ring, i64 k);

    const CycRingPtr& ring() const { return ring_; }
    const std::vector<i64>& coeffs() const { return c_; }

    bool is_zero() const;
    // true iff the value is a rational integer; fills *n when given
    bool is_integer(i64* n = nullptr) const;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
    CycInt& operator-=(const CycInt& o) { return *this = *this - o; }
    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

    CycInt conj() const;
    CycInt scaled(i64 k) const;

    bool operator==(const CycInt& o) const;
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    // image under zeta_m -> exp(2 pi i / m)
    std::complex<double> embed() const;

    std::string to_string() const;

private:
    CycInt(CycRingPtr ring, std::vector<i64> c) : ring_(std::move(ring)), c_(std::move(c)) {}

    CycRingPtr ring_;
    std::vector<i64> c_;
};

} // namespace wt1

#endif
