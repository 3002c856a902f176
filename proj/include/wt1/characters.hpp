#ifndef WT1_CHARACTERS_HPP
#define WT1_CHARACTERS_HPP

#include <utility>
#include <vector>

#include "wt1/cyclotomic.hpp"
#include "wt1/quadform.hpp"

namespace wt1 {

struct GroupMismatch : InputError {
    GroupMismatch() : InputError("characters belong to different class groups") {}
};
struct IndexOutOfRange : InputError {
    IndexOutOfRange() : InputError("class index out of range") {}
};

// character of the class group given by an exponent vector against the
// invariant-factor generators; values are exact roots of unity in the
// ring of order m = exponent of the group
class ClassCharacter {
public:
    ClassCharacter(const ClassGroup& G, CycRingPtr ring, std::vector<i64> exponents);

    const ClassGroup& group() const { return *group_; }
    const CycRingPtr& ring() const { return ring_; }
    const std::vector<i64>& exponents() const { return exponents_; }

    bool is_trivial() const;
    i64 order() const { return order_; }

    CycInt evaluate(int class_index) const;

private:
    const ClassGroup* group_;
    CycRingPtr ring_;
    std::vector<i64> exponents_;
    i64 order_;
};

// all h characters, deterministic order, trivial character first
std::vector<ClassCharacter> characters(const ClassGroup& G);

// true iff the exponent vectors are negatives mod the invariant factors
bool is_conjugate_pair(const ClassCharacter& c1, const ClassCharacter& c2);

// indices into characters(G): one canonical representative per conjugate
// pair of nontrivial characters, (h-1)/2 entries
std::vector<int> conjugate_pair_representatives(const std::vector<ClassCharacter>& chars);

} // namespace wt1

#endif
