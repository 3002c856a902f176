#include "wt1/cyclotomic.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wt1 {

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<i64> poly_divide_exact(std::vector<i64> num, const std::vector<i64>& den)
{
    assert(!den.empty() && den.back() != 0);
    std::vector<i64> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    for (size_t k = quot.size(); k-- > 0;) {
        i64 lead = num[k + den.size() - 1];
        if (lead % den.back() != 0)
            throw std::logic_error("inexact polynomial division");
        i64 f = lead / den.back();
        quot[k] = f;
        for (size_t j = 0; j < den.size(); ++j)
            num[k + j] = checked_add(num[k + j], -checked_mul(f, den[j]));
    }
    for (i64 v : num) {
        if (v != 0)
            throw std::logic_error("nonzero remainder in exact polynomial division");
    }
    return quot;
}

} // namespace

std::vector<i64> cyclotomic_polynomial(i64 m)
{
    if (m < 1)
        throw InputError("cyclotomic order must be positive");
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<i64> num(static_cast<size_t>(m) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(m)] = 1;
    for (i64 d = 1; d < m; ++d) {
        if (m % d == 0)
            num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

CycRing::CycRing(i64 m) : m_(m), modulus_(cyclotomic_polynomial(m))
{
    const int deg = degree();
    const i64 count = std::max<i64>(m_, 2 * deg);
    xpow_.reserve(static_cast<size_t>(count));
    for (i64 j = 0; j < count; ++j) {
        if (j < deg) {
            std::vector<i64> unit(static_cast<size_t>(deg), 0);
            unit[static_cast<size_t>(j)] = 1;
            xpow_.push_back(std::move(unit));
        } else {
            // x * xpow[j-1], reduced by the monic modulus
            const std::vector<i64>& prev = xpow_[static_cast<size_t>(j - 1)];
            std::vector<i64> cur(static_cast<size_t>(deg), 0);
            i64 lead = prev[static_cast<size_t>(deg - 1)];
            for (int k = deg - 1; k > 0; --k)
                cur[static_cast<size_t>(k)] = prev[static_cast<size_t>(k - 1)];
            cur[0] = 0;
            for (int k = 0; k < deg; ++k)
                cur[static_cast<size_t>(k)] =
                    checked_add(cur[static_cast<size_t>(k)], -checked_mul(lead, modulus_[static_cast<size_t>(k)]));
            xpow_.push_back(std::move(cur));
        }
    }
    // xpow is indexed mod m; the tail beyond m is only needed during
    // multiplication, fold it back here so lookups can reduce mod m
    if (count > m_) {
        for (i64 j = m_; j < count; ++j) {
            if (xpow_[static_cast<size_t>(j)] != xpow_[static_cast<size_t>(j % m_)])
                throw std::logic_error("x^m != 1 in cyclotomic ring");
        }
        xpow_.resize(static_cast<size_t>(m_));
    }
}

CycRingPtr make_cyc_ring(i64 m)
{
    return std::make_shared<CycRing>(m);
}

CycInt CycInt::zero(const CycRingPtr& ring)
{
    return CycInt(ring, std::vector<i64>(static_cast<size_t>(ring->degree()), 0));
}

CycInt CycInt::integer(const CycRingPtr& ring, i64 n)
{
    std::vector<i64> c(static_cast<size_t>(ring->degree()), 0);
    c[0] = n;
    return CycInt(ring, std::move(c));
}

CycInt CycInt::zeta_pow(const CycRingPtr& ring, i64 k)
{
    i64 m = ring->order();
    i64 j = ((k % m) + m) % m;
    return CycInt(ring, ring->xpow(j));
}

bool CycInt::is_zero() const
{
    for (i64 v : c_)
        if (v != 0)
            return false;
    return true;
}

bool CycInt::is_integer(i64* n) const
{
    for (size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0)
            return false;
    if (n)
        *n = c_.empty() ? 0 : c_[0];
    return true;
}

CycInt CycInt::operator+(const CycInt& o) const
{
    assert(ring_ == o.ring_);
    std::vector<i64> c(c_.size());
    for (size_t k = 0; k < c_.size(); ++k)
        c[k] = checked_add(c_[k], o.c_[k]);
    return CycInt(ring_, std::move(c));
}

CycInt CycInt::operator-(const CycInt& o) const
{
    assert(ring_ == o.ring_);
    std::vector<i64> c(c_.size());
    for (size_t k = 0; k < c_.size(); ++k)
        c[k] = checked_add(c_[k], -o.c_[k]);
    return CycInt(ring_, std::move(c));
}

CycInt CycInt::operator-() const
{
    std::vector<i64> c(c_.size());
    for (size_t k = 0; k < c_.size(); ++k)
        c[k] = -c_[k];
    return CycInt(ring_, std::move(c));
}

CycInt CycInt::operator*(const CycInt& o) const
{
    assert(ring_ == o.ring_);
    const int deg = ring_->degree();
    std::vector<i128> wide(static_cast<size_t>(2 * deg - 1), 0);
    for (int i = 0; i < deg; ++i) {
        if (c_[static_cast<size_t>(i)] == 0)
            continue;
        for (int j = 0; j < deg; ++j)
            wide[static_cast<size_t>(i + j)] +=
                static_cast<i128>(c_[static_cast<size_t>(i)]) * o.c_[static_cast<size_t>(j)];
    }
    std::vector<i128> acc(static_cast<size_t>(deg), 0);
    for (int k = 0; k < 2 * deg - 1; ++k) {
        if (wide[static_cast<size_t>(k)] == 0)
            continue;
        if (k < deg) {
            acc[static_cast<size_t>(k)] += wide[static_cast<size_t>(k)];
        } else {
            const std::vector<i64>& red = ring_->xpow(k);
            for (int t = 0; t < deg; ++t)
                acc[static_cast<size_t>(t)] += wide[static_cast<size_t>(k)] * red[static_cast<size_t>(t)];
        }
    }
    std::vector<i64> c(static_cast<size_t>(deg));
    for (int k = 0; k < deg; ++k)
        c[static_cast<size_t>(k)] = narrow(acc[static_cast<size_t>(k)]);
    return CycInt(ring_, std::move(c));
}

CycInt CycInt::conj() const
{
    // zeta -> zeta^{-1}
    const int deg = ring_->degree();
    const i64 m = ring_->order();
    std::vector<i64> acc(static_cast<size_t>(deg), 0);
    for (int k = 0; k < deg; ++k) {
        if (c_[static_cast<size_t>(k)] == 0)
            continue;
        const std::vector<i64>& red = ring_->xpow((m - k) % m);
        for (int t = 0; t < deg; ++t)
            acc[static_cast<size_t>(t)] =
                checked_add(acc[static_cast<size_t>(t)], checked_mul(c_[static_cast<size_t>(k)], red[static_cast<size_t>(t)]));
    }
    return CycInt(ring_, std::move(acc));
}

CycInt CycInt::scaled(i64 k) const
{
    std::vector<i64> c(c_.size());
    for (size_t j = 0; j < c_.size(); ++j)
        c[j] = checked_mul(c_[j], k);
    return CycInt(ring_, std::move(c));
}

bool CycInt::operator==(const CycInt& o) const
{
    assert(ring_ == o.ring_);
    return c_ == o.c_;
}

std::complex<double> CycInt::embed() const
{
    const double m = static_cast<double>(ring_->order());
    std::complex<double> out = 0.0;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0)
            continue;
        double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / m;
        out += static_cast<double>(c_[k]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return out;
}

std::string CycInt::to_string() const
{
    i64 n;
    if (is_integer(&n))
        return std::to_string(n);
    std::string out;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0)
            continue;
        if (!out.empty())
            out += (c_[k] > 0) ? " + " : " - ";
        else if (c_[k] < 0)
            out += "-";
        i64 mag = std::abs(c_[k]);
        if (k == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1)
                out += std::to_string(mag) + "*";
            out += "z";
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    if (out.empty())
        out = "0";
    return out;
}

} // namespace wt1
