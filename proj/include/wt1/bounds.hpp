#ifndef WT1_BOUNDS_HPP
#define WT1_BOUNDS_HPP

#include <optional>
#include <vector>

#include "wt1/hecke_poly.hpp"
#include "wt1/theta.hpp"

namespace wt1 {

struct MissingCoefficient : InputError {
    MissingCoefficient() : InputError("stream does not provide a coefficient on the scheme support") {}
};

// sparse coefficient vector supported on prime powers; evaluated against
// an octahedral stream every prime p with p^8 <= q contributes exactly 1
// (p^12 for icosahedral)
struct CountingScheme {
    struct Entry {
        i64 n = 0;   // p^tier
        i64 p = 0;
        int tier = 0;
        int c = 0;   // +1, -1 or -(p|q)
    };

    i64 q = 0;
    i64 N = 0;
    StreamType type = StreamType::octahedral;
    std::vector<Entry> support;

    i64 sum_c_sq() const { return static_cast<i64>(support.size()); }
};

CountingScheme scheme_oct(i64 q); // tiers p^8 <= q, p^4 <= q^{1/2}, p^2 <= q^{1/4}
CountingScheme scheme_ico(i64 q); // tiers p^12 <= q, p^8 <= q^{2/3}, p^2 <= q^{1/6}

// exact evaluation against a synthetic stream
GoldenValue eval_scheme(const CountingScheme& s, const SyntheticStream& stream);
// float evaluation against a dihedral form
double eval_scheme(const CountingScheme& s, const ThetaForm& f);

// Defaults are the observed grid ceilings from the meanvalue and rankin
// suites (worst lemma2_ratio 10.96, worst prop2a ratio 0.0015 over
// q <= 83), rounded up.  Override from the CLI to explore other regimes.
struct BoundConstants {
    double k_prop1 = 12.0;
    double k_prop2a = 0.002;
};

struct DimensionBound {
    i64 q = 0;
    i64 h = 0;
    i64 dihedral_dim = 0;   // (h-1)/2, exact
    i64 pi8 = 0;            // pi(floor(q^{1/8}))
    i64 pi12 = 0;           // pi(floor(q^{1/12}))
    double oct_bound = 0.0; // infinite when the scheme is empty
    double ico_bound = 0.0;
    double total = 0.0;
    BoundConstants constants;
};

DimensionBound dimension_bound(i64 q, const BoundConstants& k = {});

struct FieldCountReport {
    i64 q = 0;
    i64 h = 0;
    i64 h2 = 0;
    i64 h3 = 0;
    int rank3 = 0;
    i64 cubic_count_standard = 0; // h3 / 2
    i64 cubic_count_paper = 0;    // (3/2) h3, reported as stated but flagged
    double m4_bound = 0.0;        // K q^{7/8} log^4 q
    // present only when q = 24m - 1
    std::optional<i64> m;
    std::optional<i64> genus_x0_star;          // m - (h-1)/2
    std::optional<double> corollary_dim_bound; // total/2 - (h-1)/4
};

FieldCountReport field_report(i64 q, const BoundConstants& k = {});

} // namespace wt1

#endif
