#include "wt1/characters.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace wt1 {

ClassCharacter::ClassCharacter(const ClassGroup& G, CycRingPtr ring, std::vector<i64> exponents)
    : group_(&G), ring_(std::move(ring)), exponents_(std::move(exponents))
{
    const auto& d = G.invariant_factors();
    assert(exponents_.size() == d.size());
    order_ = 1;
    for (size_t i = 0; i < d.size(); ++i)
        order_ = std::lcm(order_, d[i] / std::gcd(d[i], exponents_[i]));
}

bool ClassCharacter::is_trivial() const
{
    for (i64 e : exponents_)
        if (e != 0)
            return false;
    return true;
}

CycInt ClassCharacter::evaluate(int class_index) const
{
    if (class_index < 0 || class_index >= group_->h())
        throw IndexOutOfRange();
    const i64 m = ring_->order();
    const auto& d = group_->invariant_factors();
    const auto& x = group_->dlog()[static_cast<size_t>(class_index)];
    i64 k = 0;
    for (size_t i = 0; i < d.size(); ++i) {
        // chi(g_i) = zeta_m^{e_i * m / d_i}
        i64 term = (exponents_[i] * (m / d[i])) % m;
        k = (k + term * (x[i] % d[i])) % m;
    }
    return CycInt::zeta_pow(ring_, k);
}

std::vector<ClassCharacter> characters(const ClassGroup& G)
{
    const auto& d = G.invariant_factors();
    CycRingPtr ring = make_cyc_ring(G.exponent());

    std::vector<ClassCharacter> out;
    out.reserve(static_cast<size_t>(G.h()));
    std::vector<i64> e(d.size(), 0);
    while (true) {
        out.emplace_back(G, ring, e);
        size_t j = 0;
        for (; j < e.size(); ++j) {
            if (++e[j] < d[j])
                break;
            e[j] = 0;
        }
        if (j == e.size())
            break;
    }
    assert(static_cast<i64>(out.size()) == G.h());
    return out;
}

bool is_conjugate_pair(const ClassCharacter& c1, const ClassCharacter& c2)
{
    if (&c1.group() != &c2.group())
        throw GroupMismatch();
    const auto& d = c1.group().invariant_factors();
    for (size_t i = 0; i < d.size(); ++i) {
        if ((c1.exponents()[i] + c2.exponents()[i]) % d[i] != 0)
            return false;
    }
    return true;
}

std::vector<int> conjugate_pair_representatives(const std::vector<ClassCharacter>& chars)
{
    std::vector<int> reps;
    std::vector<char> used(chars.size(), 0);
    for (size_t i = 0; i < chars.size(); ++i) {
        if (used[i] || chars[i].is_trivial())
            continue;
        size_t mate = i;
        for (size_t j = i + 1; j < chars.size(); ++j) {
            if (!used[j] && is_conjugate_pair(chars[i], chars[j])) {
                mate = j;
                break;
            }
        }
        if (mate == i)
            throw std::logic_error("nontrivial character without a distinct conjugate");
        used[i] = used[mate] = 1;
        reps.push_back(static_cast<int>(i));
    }
    return reps;
}

} // namespace wt1
