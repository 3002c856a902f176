#include "wt1/hecke_poly.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace wt1 {

IntPoly::IntPoly(std::initializer_list<i64> ascending) : c_(ascending)
{
    trim();
}

IntPoly IntPoly::constant(i64 c)
{
    IntPoly p;
    if (c != 0)
        p.c_ = {c};
    return p;
}

IntPoly IntPoly::x()
{
    IntPoly p;
    p.c_ = {0, 1};
    return p;
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const
{
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t k = 0; k < r.c_.size(); ++k)
        r.c_[k] = checked_add(coeff(static_cast<int>(k)), o.coeff(static_cast<int>(k)));
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const
{
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t k = 0; k < r.c_.size(); ++k)
        r.c_[k] = checked_add(coeff(static_cast<int>(k)), -o.coeff(static_cast<int>(k)));
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const
{
    IntPoly r;
    if (c_.empty() || o.c_.empty())
        return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(c_[i], o.c_[j]));
    r.trim();
    return r;
}

i64 IntPoly::eval(i64 x) const
{
    i64 acc = 0;
    for (int k = degree(); k >= 0; --k)
        acc = checked_add(checked_mul(acc, x), coeff(k));
    return acc;
}

std::string IntPoly::to_string() const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        i64 v = coeff(k);
        if (v == 0)
            continue;
        if (!out.empty())
            out += (v > 0) ? " + " : " - ";
        else if (v < 0)
            out += "-";
        i64 mag = std::abs(v);
        if (k == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1)
                out += std::to_string(mag);
            out += "x";
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPoly hecke_P(int n)
{
    if (n < 0)
        throw InputError("hecke_P index must be nonnegative");
    IntPoly prev = IntPoly::constant(1);
    if (n == 0)
        return prev;
    IntPoly cur = IntPoly::x();
    const IntPoly step = IntPoly{-1, 1}; // x - 1
    for (int k = 1; k < n; ++k) {
        IntPoly next = step * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool verify_oct_identity()
{
    const IntPoly x = IntPoly::x();
    IntPoly lhs = x * (x + IntPoly::constant(1)) * (x - IntPoly::constant(1)) *
                      (x - IntPoly::constant(3)) +
                  IntPoly::constant(1);
    IntPoly rhs = hecke_P(4) - hecke_P(2) - hecke_P(1);
    return lhs == rhs;
}

bool verify_ico_identity()
{
    const IntPoly x = IntPoly::x();
    IntPoly lhs = x * (x + IntPoly::constant(1)) * (x - IntPoly::constant(2)) *
                      (x - IntPoly::constant(3)) * IntPoly{-1, -1, 1} +
                  IntPoly::constant(1);
    IntPoly rhs = hecke_P(6) - hecke_P(4) - hecke_P(1);
    return lhs == rhs;
}

GoldenValue::GoldenValue(i64 uu, i64 vv) : u(uu), v(vv)
{
    if (((u % 2) + 2) % 2 != ((v % 2) + 2) % 2)
        throw std::domain_error("golden value parts must have equal parity");
}

GoldenValue GoldenValue::operator+(const GoldenValue& o) const
{
    return GoldenValue(checked_add(u, o.u), checked_add(v, o.v));
}

GoldenValue GoldenValue::operator-(const GoldenValue& o) const
{
    return GoldenValue(checked_add(u, -o.u), checked_add(v, -o.v));
}

GoldenValue GoldenValue::operator*(const GoldenValue& o) const
{
    // ((u1 + v1 s)/2)((u2 + v2 s)/2) with s^2 = 5
    i64 uu = checked_add(checked_mul(u, o.u), checked_mul(5, checked_mul(v, o.v)));
    i64 vv = checked_add(checked_mul(u, o.v), checked_mul(o.u, v));
    assert(uu % 2 == 0 && vv % 2 == 0);
    return GoldenValue(uu / 2, vv / 2);
}

bool GoldenValue::is_integer(i64* n) const
{
    if (v != 0 || u % 2 != 0)
        return false;
    if (n)
        *n = u / 2;
    return true;
}

double GoldenValue::to_double() const
{
    return (static_cast<double>(u) + static_cast<double>(v) * std::sqrt(5.0)) / 2.0;
}

std::string GoldenValue::to_string() const
{
    i64 n;
    if (is_integer(&n))
        return std::to_string(n);
    return "(" + std::to_string(u) + (v >= 0 ? "+" : "-") + std::to_string(std::abs(v)) +
           "*sqrt5)/2";
}

std::vector<GoldenValue> legal_values(StreamType type)
{
    if (type == StreamType::octahedral)
        return {GoldenValue::integer(-1), GoldenValue::integer(0), GoldenValue::integer(1),
                GoldenValue::integer(3)};
    return {GoldenValue::integer(-1), GoldenValue::integer(0), GoldenValue::integer(3),
            GoldenValue::golden_plus(), GoldenValue::golden_minus()};
}

SyntheticStream::SyntheticStream(StreamType type, i64 q,
                                 std::vector<std::pair<i64, GoldenValue>> assignment, i64 N)
    : type_(type), q_(q), N_(N)
{
    const std::vector<GoldenValue> legal = legal_values(type);
    const GoldenValue one = GoldenValue::integer(1);

    for (const auto& [p, xp] : assignment) {
        if (!is_prime(p) || p == q)
            throw InputError("stream assignment must use primes p != q");
        bool ok = false;
        for (const GoldenValue& lv : legal)
            ok = ok || (lv == xp);
        if (!ok)
            throw IllegalValue();

        const int eps = kronecker(p, q);
        assert(eps == kronecker(-q, p));
        for (int k = 1;; ++k) {
            i128 pk = 1;
            for (int t = 0; t < 2 * k; ++t)
                pk *= p;
            if (pk > N_)
                break;
            GoldenValue val = eval_poly(hecke_P(k), xp, &GoldenValue::integer);
            if (eps < 0 && (k % 2) == 1)
                val = -val;
            a_[static_cast<i64>(pk)] = val;
        }

        // the defining identities hold exactly on every assigned prime
        GoldenValue lhs;
        if (type_ == StreamType::octahedral) {
            GoldenValue p1 = eval_poly(hecke_P(1), xp, &GoldenValue::integer);
            GoldenValue p2 = eval_poly(hecke_P(2), xp, &GoldenValue::integer);
            GoldenValue p4 = eval_poly(hecke_P(4), xp, &GoldenValue::integer);
            lhs = p4 - p2 - p1; // eps factors cancel pairwise
        } else {
            GoldenValue p1 = eval_poly(hecke_P(1), xp, &GoldenValue::integer);
            GoldenValue p4 = eval_poly(hecke_P(4), xp, &GoldenValue::integer);
            GoldenValue p6 = eval_poly(hecke_P(6), xp, &GoldenValue::integer);
            lhs = p6 - p4 - p1;
        }
        if (!(lhs == one))
            throw std::logic_error("stream violates its defining identity");
    }
}

GoldenValue SyntheticStream::a(i64 n) const
{
    if (n == 1)
        return GoldenValue::integer(1);
    auto it = a_.find(n);
    if (it == a_.end())
        throw InputError("coefficient outside the stream support");
    return it->second;
}

SyntheticStream synth_stream(StreamType type, i64 q,
                             const std::vector<std::pair<i64, GoldenValue>>& assignment, i64 N)
{
    return SyntheticStream(type, q, assignment, N);
}

} // namespace wt1
