#include "wt1/quadform.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wt1 {

Discriminant validate_discriminant(i64 q)
{
    if (!is_prime(q))
        throw NotPrime();
    if (q % 4 != 3)
        throw WrongResidueClass();
    if (q < 7)
        throw TooSmall();
    return Discriminant{q, -q};
}

bool QuadForm::is_reduced() const
{
    i64 ab = b < 0 ? -b : b;
    if (!(ab <= a && a <= c))
        return false;
    if ((ab == a || a == c) && b < 0)
        return false;
    return true;
}

std::string to_string(const QuadForm& f)
{
    return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
}

namespace {

struct WideForm {
    i128 a, b, c;
};

i128 floor_div(i128 num, i128 den)
{
    i128 quot = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --quot;
    return quot;
}

// translate x -> x + k*y so that b lands in (-a, a]
void normalize(WideForm& f)
{
    i128 k = floor_div(f.a - f.b, checked_mul(i128{2}, f.a));
    if (k != 0) {
        f.c = checked_add(f.c, checked_add(checked_mul(checked_mul(f.a, k), k), checked_mul(f.b, k)));
        f.b = checked_add(f.b, checked_mul(i128{2}, checked_mul(f.a, k)));
    }
}

void reduce_wide(WideForm& f)
{
    normalize(f);
    while (f.a > f.c) {
        std::swap(f.a, f.c);
        f.b = -f.b;
        normalize(f);
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
}

} // namespace

QuadForm reduce(QuadForm f)
{
    if (f.disc() >= 0)
        throw NonNegativeDiscriminant();
    if (f.a <= 0)
        throw InputError("form is not positive definite");
    WideForm w{f.a, f.b, f.c};
    reduce_wide(w);
    return QuadForm{narrow(w.a), narrow(w.b), narrow(w.c)};
}

std::vector<QuadForm> enumerate_reduced(const Discriminant& D)
{
    const i64 q = D.q;
    const i64 a_max = isqrt(q / 3);
    std::vector<std::vector<QuadForm>> per_a(static_cast<size_t>(a_max) + 1);

#pragma omp parallel for schedule(dynamic)
    for (i64 a = 1; a <= a_max; ++a) {
        if (3 * a * a > q)
            continue;
        std::vector<QuadForm> local;
        // b odd since D = 1 (mod 4); reduced needs b in (-a, a]
        const i64 b_start = (a % 2 == 0) ? (-a + 1) : (-a + 2);
        for (i64 b = b_start; b <= a; b += 2) {
            i64 num = b * b + q;
            if (num % (4 * a) != 0)
                continue;
            i64 c = num / (4 * a);
            if (c < a)
                continue;
            if ((b < 0) && (-b == a || a == c))
                continue;
            if (std::gcd(a, std::gcd(b, c)) != 1)
                continue; // cannot happen for prime q, kept as a guard
            local.push_back(QuadForm{a, b, c});
        }
        per_a[static_cast<size_t>(a)] = std::move(local);
    }

    std::vector<QuadForm> out;
    for (auto& chunk : per_a)
        for (auto& f : chunk)
            out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

QuadForm compose(const QuadForm& f, const QuadForm& g, const Discriminant& D)
{
    if (f.disc() != D.D || g.disc() != D.D)
        throw DiscriminantMismatch();

    const i128 a1 = f.a, b1 = f.b;
    const i128 a2 = g.a, b2 = g.b, c2 = g.c;

    // Dirichlet composition: d = gcd(a1, a2, (b1+b2)/2)
    const i128 s = (b1 + b2) / 2;
    i128 u0, v0, v1, w;
    const i128 gg = ext_gcd(a1, a2, u0, v0);
    const i128 d = ext_gcd(gg, s, v1, w);
    const i128 v = checked_mul(v0, v1);
    const i128 a2d = a2 / d;

    WideForm r;
    r.a = checked_mul(a1 / d, a2d);
    i128 t = checked_mul(s - b2, v);
    t = checked_add(t, -checked_mul(w, c2));
    t = checked_mul(t, a2d);
    r.b = checked_add(b2, checked_mul(i128{2}, t));
    i128 num = checked_add(checked_mul(r.b, r.b), i128{D.q});
    assert(num % (4 * r.a) == 0);
    r.c = num / (4 * r.a);

    reduce_wide(r);
    return QuadForm{narrow(r.a), narrow(r.b), narrow(r.c)};
}

ClassGroup::ClassGroup(const Discriminant& D) : disc_(D)
{
    forms_ = enumerate_reduced(D);
    for (size_t i = 0; i < forms_.size(); ++i) {
        if (forms_[i].a == 1)
            principal_ = static_cast<int>(i);
    }
    if (principal_ < 0)
        throw std::logic_error("principal form missing from enumeration");
    build_table();
    build_structure();
}

int ClassGroup::index_of(const QuadForm& f) const
{
    auto it = std::lower_bound(forms_.begin(), forms_.end(), f);
    if (it != forms_.end() && *it == f)
        return static_cast<int>(it - forms_.begin());
    return -1;
}

void ClassGroup::build_table()
{
    const int n = static_cast<int>(forms_.size());
    table_.assign(static_cast<size_t>(n) * n, -1);

    bool bad = false;
#pragma omp parallel for schedule(dynamic) reduction(|| : bad)
    for (int i = 0; i < n; ++i) {
        try {
            for (int j = i; j < n; ++j) {
                QuadForm p = compose(forms_[i], forms_[j], disc_);
                int k = index_of(p);
                if (k < 0) {
                    bad = true;
                    continue;
                }
                table_[static_cast<size_t>(i) * n + j] = k;
                table_[static_cast<size_t>(j) * n + i] = k;
            }
        } catch (const std::exception&) {
            bad = true;
        }
    }
    if (bad)
        throw std::logic_error("composition left the reduced-form set");
}

int ClassGroup::inv(int i) const
{
    QuadForm opp = reduce(forms_[i].opposite());
    int k = index_of(opp);
    assert(k >= 0);
    return k;
}

int ClassGroup::pow(int i, i64 e) const
{
    if (e < 0)
        return pow(inv(i), -e);
    int acc = principal_;
    int base = i;
    while (e > 0) {
        if (e & 1)
            acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

i64 ClassGroup::order_of(int i) const
{
    i64 ord = 1;
    int x = i;
    while (x != principal_) {
        x = mul(x, i);
        ++ord;
    }
    return ord;
}

void ClassGroup::build_structure()
{
    const int n = static_cast<int>(forms_.size());
    dlog_.assign(static_cast<size_t>(n), {});
    if (n == 1)
        return;

    // greedy basis: peel generators of maximal order modulo the subgroup
    // built so far, adjusting each so its true order equals its quotient
    // order; the quotient orders are the invariant factors, largest first
    std::vector<int> gens_desc;
    std::vector<i64> ords_desc;
    std::vector<int> elem_of_tuple;            // enumeration of <gens_desc>
    std::vector<std::vector<i64>> tuple_of;    // element -> tuple, -1 slots empty
    std::vector<char> in_sub(static_cast<size_t>(n), 0);

    auto rebuild_subgroup = [&]() {
        elem_of_tuple.clear();
        tuple_of.assign(static_cast<size_t>(n), {});
        std::fill(in_sub.begin(), in_sub.end(), 0);
        std::vector<i64> e(gens_desc.size(), 0);
        while (true) {
            int x = principal_;
            for (size_t j = 0; j < gens_desc.size(); ++j)
                x = mul(x, pow(gens_desc[j], e[j]));
            if (in_sub[static_cast<size_t>(x)])
                throw std::logic_error("generator tuples do not enumerate the subgroup freely");
            in_sub[static_cast<size_t>(x)] = 1;
            tuple_of[static_cast<size_t>(x)] = e;
            elem_of_tuple.push_back(x);
            size_t j = 0;
            for (; j < e.size(); ++j) {
                if (++e[j] < ords_desc[j])
                    break;
                e[j] = 0;
            }
            if (j == e.size())
                break;
        }
    };

    rebuild_subgroup();
    while (static_cast<int>(elem_of_tuple.size()) < n) {
        int best = -1;
        i64 best_qord = 0;
        for (int x = 0; x < n; ++x) {
            if (in_sub[static_cast<size_t>(x)])
                continue;
            i64 k = 1;
            int y = x;
            while (!in_sub[static_cast<size_t>(y)]) {
                y = mul(y, x);
                ++k;
            }
            if (k > best_qord) {
                best_qord = k;
                best = x;
            }
        }
        const i64 m = best_qord;
        // best^m lies in the subgroup; divide it out so the new generator
        // has true order m and the sum stays direct
        const std::vector<i64>& t = tuple_of[static_cast<size_t>(pow(best, m))];
        int y = best;
        for (size_t j = 0; j < gens_desc.size(); ++j) {
            if (t[j] % m != 0)
                throw std::logic_error("invariant-factor adjustment failed");
            y = mul(y, pow(gens_desc[j], -(t[j] / m)));
        }
        if (order_of(y) != m)
            throw std::logic_error("adjusted generator has wrong order");
        gens_desc.push_back(y);
        ords_desc.push_back(m);
        rebuild_subgroup();
    }

    for (size_t j = 1; j < ords_desc.size(); ++j) {
        if (ords_desc[j - 1] % ords_desc[j] != 0)
            throw std::logic_error("invariant factors do not form a divisibility chain");
    }

    const size_t r = gens_desc.size();
    invariant_factors_.assign(r, 0);
    generators_.assign(r, 0);
    for (size_t j = 0; j < r; ++j) {
        invariant_factors_[j] = ords_desc[r - 1 - j];
        generators_[j] = gens_desc[r - 1 - j];
    }
    for (int x = 0; x < n; ++x) {
        const std::vector<i64>& t = tuple_of[static_cast<size_t>(x)];
        std::vector<i64> asc(r);
        for (size_t j = 0; j < r; ++j)
            asc[j] = t[r - 1 - j];
        dlog_[static_cast<size_t>(x)] = std::move(asc);
    }

    i64 prod = 1;
    for (i64 d : invariant_factors_)
        prod = checked_mul(prod, d);
    if (prod != h())
        throw std::logic_error("invariant factor product differs from class number");
}

i64 ClassGroup::torsion_count(i64 ell) const
{
    if (ell < 2)
        throw InputError("torsion order must be at least 2");
    i64 count = 0;
    for (const auto& e : dlog_) {
        i64 ord = 1;
        for (size_t j = 0; j < e.size(); ++j) {
            i64 d = invariant_factors_[j];
            i64 component = d / std::gcd(d, e[j]);
            ord = std::lcm(ord, component);
        }
        if (ord == ell)
            ++count;
    }
    return count;
}

int ClassGroup::rank(i64 ell) const
{
    int r = 0;
    for (i64 d : invariant_factors_)
        if (d % ell == 0)
            ++r;
    return r;
}

} // namespace wt1
