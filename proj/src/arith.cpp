#include "wt1/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wt1 {

i64 isqrt(i64 n)
{
    if (n < 0)
        throw std::domain_error("isqrt of negative number");
    if (n == 0)
        return 0;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

i64 iroot(i64 n, int k)
{
    if (n < 0 || k < 1)
        throw std::domain_error("iroot arguments out of range");
    if (k == 1 || n <= 1)
        return n;
    i64 r = static_cast<i64>(std::pow(static_cast<double>(n), 1.0 / k));
    auto pow_le = [n](i64 base, int e) {
        i128 acc = 1;
        for (int i = 0; i < e; ++i) {
            acc *= base;
            if (acc > n)
                return false;
        }
        return true;
    };
    while (r > 0 && !pow_le(r, k))
        --r;
    while (pow_le(r + 1, k))
        ++r;
    return r;
}

i64 ipow(i64 base, int exp)
{
    i64 acc = 1;
    for (int i = 0; i < exp; ++i)
        acc = checked_mul(acc, base);
    return acc;
}

namespace {

i64 mulmod(i64 a, i64 b, i64 m)
{
    return static_cast<i64>(static_cast<i128>(a) * b % m);
}

i64 powmod(i64 a, i64 e, i64 m)
{
    i64 r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(i64 n)
{
    if (n < 2)
        return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this base set is deterministic for all n < 2^64
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

i128 ext_gcd(i128 a, i128 b, i128& u, i128& v)
{
    i128 old_r = a, r = b;
    i128 old_u = 1, cur_u = 0;
    i128 old_v = 0, cur_v = 1;
    while (r != 0) {
        i128 quot = old_r / r;
        i128 t = old_r - quot * r;
        old_r = r;
        r = t;
        t = old_u - quot * cur_u;
        old_u = cur_u;
        cur_u = t;
        t = old_v - quot * cur_v;
        old_v = cur_v;
        cur_v = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    u = old_u;
    v = old_v;
    return old_r;
}

int kronecker(i64 a, i64 n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            sign = -sign;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0)
            return 0;
        int twos = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++twos;
        }
        i64 am8 = ((a % 8) + 8) % 8;
        if (twos % 2 == 1 && (am8 == 3 || am8 == 5))
            sign = -sign;
    }
    a %= n;
    if (a < 0)
        a += n;
    // Jacobi symbol on odd n > 0 by reciprocity
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5)
                sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

std::vector<i64> primes_up_to(i64 n)
{
    std::vector<i64> out;
    if (n < 2)
        return out;
    std::vector<bool> comp(static_cast<size_t>(n) + 1, false);
    for (i64 i = 2; i <= n; ++i) {
        if (!comp[static_cast<size_t>(i)]) {
            out.push_back(i);
            for (i64 j = i * i; j <= n; j += i)
                comp[static_cast<size_t>(j)] = true;
        }
    }
    return out;
}

i64 prime_pi(i64 x)
{
    if (x < 2)
        return 0;
    return static_cast<i64>(primes_up_to(x).size());
}

std::vector<i64> spf_sieve(i64 n)
{
    std::vector<i64> spf(static_cast<size_t>(n) + 1, 0);
    for (i64 i = 2; i <= n; ++i) {
        if (spf[static_cast<size_t>(i)] == 0) {
            for (i64 j = i; j <= n; j += i) {
                if (spf[static_cast<size_t>(j)] == 0)
                    spf[static_cast<size_t>(j)] = i;
            }
        }
    }
    return spf;
}

std::vector<i64> divisor_count_table(i64 n)
{
    std::vector<i64> d(static_cast<size_t>(n) + 1, 0);
    for (i64 i = 1; i <= n; ++i)
        for (i64 j = i; j <= n; j += i)
            ++d[static_cast<size_t>(j)];
    return d;
}

std::vector<i64> divisor4_count_table(i64 n)
{
    // d4 = d * d under Dirichlet convolution
    std::vector<i64> d = divisor_count_table(n);
    std::vector<i64> d4(static_cast<size_t>(n) + 1, 0);
    for (i64 i = 1; i <= n; ++i)
        for (i64 j = i; j <= n; j += i)
            d4[static_cast<size_t>(j)] += d[static_cast<size_t>(i)] * d[static_cast<size_t>(j / i)];
    return d4;
}

} // namespace wt1
