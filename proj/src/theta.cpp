#include "wt1/theta.hpp"

#include <cassert>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wt1 {

i64 ideal_count(const Discriminant& D, const QuadForm& Q, i64 n)
{
    if (n < 1)
        return 0;
    // 4a Q(x,y) = (2ax + by)^2 + q y^2
    const i64 a = Q.a, b = Q.b, q = D.q;
    const i64 rhs = 4 * a * n;
    const i64 ymax = isqrt(rhs / q);
    i64 solutions = 0;
    for (i64 y = -ymax; y <= ymax; ++y) {
        i64 rem = rhs - q * y * y;
        i64 t = isqrt(rem);
        if (t * t != rem)
            continue;
        // 2ax + by = t or -t, each giving at most one x
        if ((t - b * y) % (2 * a) == 0)
            ++solutions;
        if (t != 0 && (-t - b * y) % (2 * a) == 0)
            ++solutions;
    }
    assert(solutions % 2 == 0);
    return solutions / 2;
}

namespace {

// scan the lattice points with Q(x,y) <= N on rows y in [ylo, yhi]
void sieve_rows(const QuadForm& Q, i64 q, i64 N, i64 ylo, i64 yhi, std::vector<i64>& cnt)
{
    const i64 a = Q.a, b = Q.b, c = Q.c;
    for (i64 y = ylo; y <= yhi; ++y) {
        const i64 rem = 4 * a * N - q * y * y;
        if (rem < 0)
            continue;
        const i64 t = isqrt(rem);
        // |2ax + by| <= t
        i64 xlo = -(t + b * y);
        xlo = (xlo >= 0) ? (xlo + 2 * a - 1) / (2 * a) : -((-xlo) / (2 * a));
        i64 xhi = t - b * y;
        xhi = (xhi >= 0) ? xhi / (2 * a) : -(((-xhi) + 2 * a - 1) / (2 * a));
        for (i64 x = xlo; x <= xhi; ++x) {
            const i64 n = a * x * x + b * x * y + c * y * y;
            if (n >= 1 && n <= N)
                ++cnt[static_cast<size_t>(n)];
        }
    }
}

} // namespace

IdealCountTable ideal_count_table(const ClassGroup& G, i64 N)
{
    const i64 q = G.disc().q;
    const int h = static_cast<int>(G.h());
    IdealCountTable counts(static_cast<size_t>(h));

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    if (h >= 2 * threads) {
        // one class per task: rows are disjoint, no merging needed
        for (int ci = 0; ci < h; ++ci)
            counts[static_cast<size_t>(ci)].assign(static_cast<size_t>(N) + 1, 0);
#pragma omp parallel for schedule(dynamic)
        for (int ci = 0; ci < h; ++ci) {
            const QuadForm& Q = G.forms()[static_cast<size_t>(ci)];
            const i64 ymax = isqrt(4 * Q.a * N / q);
            sieve_rows(Q, q, N, -ymax, ymax, counts[static_cast<size_t>(ci)]);
        }
    } else {
        // few classes: split the y-range instead, summing integer rows
        for (int ci = 0; ci < h; ++ci) {
            const QuadForm& Q = G.forms()[static_cast<size_t>(ci)];
            std::vector<i64>& cnt = counts[static_cast<size_t>(ci)];
            cnt.assign(static_cast<size_t>(N) + 1, 0);
            const i64 ymax = isqrt(4 * Q.a * N / q);
#ifdef _OPENMP
#pragma omp parallel
            {
                std::vector<i64> local(static_cast<size_t>(N) + 1, 0);
#pragma omp for schedule(static)
                for (i64 y = -ymax; y <= ymax; ++y)
                    sieve_rows(Q, q, N, y, y, local);
#pragma omp critical
                {
                    for (size_t n = 1; n <= static_cast<size_t>(N); ++n)
                        cnt[n] += local[n];
                }
            }
#else
            sieve_rows(Q, q, N, -ymax, ymax, cnt);
#endif
        }
    }

    for (int ci = 0; ci < h; ++ci) {
        std::vector<i64>& cnt = counts[static_cast<size_t>(ci)];
        for (size_t n = 1; n <= static_cast<size_t>(N); ++n) {
            assert(cnt[n] % 2 == 0);
            cnt[n] /= 2;
        }
    }
    return counts;
}

IdealCountTable ideal_count_table_serial(const ClassGroup& G, i64 N)
{
    const i64 q = G.disc().q;
    const int h = static_cast<int>(G.h());
    IdealCountTable counts(static_cast<size_t>(h));
    for (int ci = 0; ci < h; ++ci) {
        const QuadForm& Q = G.forms()[static_cast<size_t>(ci)];
        std::vector<i64>& cnt = counts[static_cast<size_t>(ci)];
        cnt.assign(static_cast<size_t>(N) + 1, 0);
        const i64 ymax = isqrt(4 * Q.a * N / q);
        sieve_rows(Q, q, N, -ymax, ymax, cnt);
        for (size_t n = 1; n <= static_cast<size_t>(N); ++n) {
            assert(cnt[n] % 2 == 0);
            cnt[n] /= 2;
        }
    }
    return counts;
}

namespace {

ThetaForm assemble_from_counts(const ClassGroup& G, const std::vector<ClassCharacter>& chars,
                               int chi_index, i64 N, const IdealCountTable& counts)
{
    const ClassCharacter& chi = chars[static_cast<size_t>(chi_index)];
    const int h = static_cast<int>(G.h());

    std::vector<CycInt> chi_vals;
    chi_vals.reserve(static_cast<size_t>(h));
    for (int ci = 0; ci < h; ++ci)
        chi_vals.push_back(chi.evaluate(ci));

    ThetaForm f;
    f.disc = G.disc();
    f.char_index = chi_index;
    f.char_exponents = chi.exponents();
    f.N = N;
    f.ring = chi.ring();
    f.coeffs.reserve(static_cast<size_t>(N));
    f.floats.reserve(static_cast<size_t>(N));
    for (i64 n = 1; n <= N; ++n) {
        CycInt an = CycInt::zero(f.ring);
        for (int ci = 0; ci < h; ++ci) {
            i64 cnt = counts[static_cast<size_t>(ci)][static_cast<size_t>(n)];
            if (cnt != 0)
                an += chi_vals[static_cast<size_t>(ci)].scaled(cnt);
        }
        f.floats.push_back(an.embed().real());
        f.coeffs.push_back(std::move(an));
    }
    return f;
}

} // namespace

ThetaForm theta_lattice(const ClassGroup& G, const std::vector<ClassCharacter>& chars, int chi_index,
                        i64 N, const IdealCountTable& counts)
{
    if (chi_index < 0 || chi_index >= static_cast<int>(chars.size()))
        throw IndexOutOfRange();
    if (chars[static_cast<size_t>(chi_index)].is_trivial())
        throw TrivialCharacter();
    if (counts.empty() || counts[0].size() < static_cast<size_t>(N) + 1)
        throw InputError("ideal count table shorter than requested truncation");
    return assemble_from_counts(G, chars, chi_index, N, counts);
}

ThetaForm theta_lattice(const ClassGroup& G, const std::vector<ClassCharacter>& chars, int chi_index,
                        i64 N)
{
    if (chi_index < 0 || chi_index >= static_cast<int>(chars.size()))
        throw IndexOutOfRange();
    if (chars[static_cast<size_t>(chi_index)].is_trivial())
        throw TrivialCharacter();
    IdealCountTable counts = ideal_count_table(G, N);
    return assemble_from_counts(G, chars, chi_index, N, counts);
}

ThetaForm theta_hecke(const ClassGroup& G, const std::vector<ClassCharacter>& chars, int chi_index,
                      i64 N)
{
    if (chi_index < 0 || chi_index >= static_cast<int>(chars.size()))
        throw IndexOutOfRange();
    const ClassCharacter& chi = chars[static_cast<size_t>(chi_index)];
    if (chi.is_trivial())
        throw TrivialCharacter();

    const Discriminant& D = G.disc();
    const i64 q = D.q;
    const CycRingPtr& ring = chi.ring();
    const CycInt one = CycInt::integer(ring, 1);

    std::vector<i64> spf = spf_sieve(N);
    std::vector<CycInt> coeffs(static_cast<size_t>(N), CycInt::zero(ring));
    coeffs[0] = one;

    // local coefficients at every prime power <= N
    for (i64 p = 2; p <= N; ++p) {
        if (spf[static_cast<size_t>(p)] != p)
            continue;
        const i64 eps = kronecker(p, q);
        if (p != q && kronecker(-q, p) != eps)
            throw std::logic_error("nebentypus and splitting symbol disagree");

        CycInt ap = CycInt::zero(ring);
        if (p == q || eps == 1) {
            // a prime ideal of norm p exists; locate its class
            int cls = -1;
            i64 total = 0;
            for (int ci = 0; ci < static_cast<int>(G.h()); ++ci) {
                i64 cnt = ideal_count(D, G.forms()[static_cast<size_t>(ci)], p);
                total += cnt;
                if (cnt > 0 && cls < 0)
                    cls = ci;
            }
            if (p == q) {
                assert(total == 1);
                ap = chi.evaluate(cls); // chi at the class of the ramified prime
            } else {
                assert(total == 2);
                CycInt v = chi.evaluate(cls);
                ap = v + v.conj();
            }
        }
        // inert p: ap stays 0

        CycInt prev = one;  // a(p^0)
        CycInt cur = ap;    // a(p^1)
        for (i128 pk = p; pk <= N; pk *= p) {
            coeffs[static_cast<size_t>(static_cast<i64>(pk) - 1)] = cur;
            CycInt next = ap * cur - prev.scaled(eps);
            prev = cur;
            cur = next;
        }
    }

    // multiplicativity at coprime arguments
    for (i64 n = 2; n <= N; ++n) {
        i64 p = spf[static_cast<size_t>(n)];
        i64 pk = 1;
        i64 rest = n;
        while (rest % p == 0) {
            pk *= p;
            rest /= p;
        }
        if (rest > 1)
            coeffs[static_cast<size_t>(n - 1)] =
                coeffs[static_cast<size_t>(pk - 1)] * coeffs[static_cast<size_t>(rest - 1)];
    }

    ThetaForm f;
    f.disc = D;
    f.char_index = chi_index;
    f.char_exponents = chi.exponents();
    f.N = N;
    f.ring = ring;
    f.coeffs = std::move(coeffs);
    f.floats.reserve(static_cast<size_t>(N));
    for (const CycInt& an : f.coeffs)
        f.floats.push_back(an.embed().real());
    return f;
}

std::vector<ThetaForm> dihedral_basis(const ClassGroup& G, i64 N)
{
    std::vector<ClassCharacter> chars = characters(G);
    std::vector<int> reps = conjugate_pair_representatives(chars);
    std::vector<ThetaForm> basis;
    if (reps.empty())
        return basis;
    IdealCountTable counts = ideal_count_table(G, N);
    basis.reserve(reps.size());
    for (int rep : reps)
        basis.push_back(theta_lattice(G, chars, rep, N, counts));
    return basis;
}

std::vector<i64> eta23_coefficients(i64 N)
{
    // product series before the leading x shift
    std::vector<i64> f(static_cast<size_t>(N), 0);
    f[0] = 1;
    for (i64 k = 1; k < N; ++k)
        for (i64 j = N - 1; j >= k; --j)
            f[static_cast<size_t>(j)] -= f[static_cast<size_t>(j - k)];
    for (i64 k = 23; k < N; k += 23)
        for (i64 j = N - 1; j >= k; --j)
            f[static_cast<size_t>(j)] -= f[static_cast<size_t>(j - k)];
    return f; // f[i] = a(i+1)
}

} // namespace wt1
