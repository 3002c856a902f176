#ifndef WT1_ARITH_HPP
#define WT1_ARITH_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace wt1 {

using i64 = std::int64_t;
using i128 = __int128;

struct OverflowError : std::overflow_error {
    OverflowError() : std::overflow_error("integer overflow in exact arithmetic") {}
};

// base for all rejected-input conditions; the CLI maps these to exit code 2
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline i64 checked_mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError();
    return r;
}

inline i64 checked_add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError();
    return r;
}

inline i128 checked_mul(i128 a, i128 b)
{
    i128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError();
    return r;
}

inline i128 checked_add(i128 a, i128 b)
{
    i128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError();
    return r;
}

// narrow with a range check; class-group coefficients must fit in 64 bits
inline i64 narrow(i128 x)
{
    i64 r = static_cast<i64>(x);
    if (static_cast<i128>(r) != x)
        throw OverflowError();
    return r;
}

// floor of sqrt(n), exact for n >= 0
i64 isqrt(i64 n);

// largest r with r^k <= n (n >= 0, k >= 1)
i64 iroot(i64 n, int k);

// exact integer power with overflow check
i64 ipow(i64 base, int exp);

// deterministic Miller-Rabin, valid for all 64-bit inputs
bool is_prime(i64 n);

// extended gcd over 128-bit integers: g = gcd(a,b) >= 0, g = u*a + v*b
i128 ext_gcd(i128 a, i128 b, i128& u, i128& v);

// Kronecker symbol (a|n), full generalization of Jacobi/Legendre
int kronecker(i64 a, i64 n);

// primes <= n in increasing order
std::vector<i64> primes_up_to(i64 n);

// pi(x) = number of primes <= x
i64 prime_pi(i64 x);

// spf[i] = smallest prime factor of i, for 0 <= i <= n (spf[0] = spf[1] = 0)
std::vector<i64> spf_sieve(i64 n);

// d[i] = number of divisors of i, for 0 <= i <= n (d[0] = 0)
std::vector<i64> divisor_count_table(i64 n);

// d4[i] = number of ordered factorizations of i into 4 factors
std::vector<i64> divisor4_count_table(i64 n);

} // namespace wt1

#endif
