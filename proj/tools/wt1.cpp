// Command-line front end: class-group reports, theta coefficient tables,
// verification suites, and the dimension/field bound calculators.

#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wt1/bounds.hpp"
#include "wt1/meanvalue.hpp"
#include "wt1/rankin.hpp"
#include "wt1/theta.hpp"

using json = nlohmann::json;
using namespace wt1;

namespace {

std::string fmt12(double x)
{
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// round a double to 12 significant digits so JSON numbers obey the
// output contract
json jnum(double x)
{
    if (std::isinf(x) || std::isnan(x))
        return json(fmt12(x));
    return json(std::stod(fmt12(x)));
}

const std::vector<i64> kDefaultGrid = {23, 31, 47, 59, 71, 79, 83};

json classgroup_json(const ClassGroup& G)
{
    json out;
    out["q"] = G.disc().q;
    out["disc"] = G.disc().D;
    out["h"] = G.h();
    json forms = json::array();
    for (const QuadForm& f : G.forms())
        forms.push_back({f.a, f.b, f.c});
    out["forms"] = forms;
    out["invariant_factors"] = G.invariant_factors();
    out["generators"] = G.generators();
    json dlog = json::array();
    for (const auto& e : G.dlog())
        dlog.push_back(e);
    out["dlog"] = dlog;
    json torsion;
    torsion["2"] = G.torsion_count(2);
    torsion["3"] = G.torsion_count(3);
    for (i64 ell = 2; ell <= G.h(); ++ell)
        if (G.h() % ell == 0)
            torsion[std::to_string(ell)] = G.torsion_count(ell);
    out["torsion"] = torsion;
    json chars = json::array();
    for (const ClassCharacter& chi : characters(G))
        chars.push_back(chi.exponents());
    out["characters"] = chars;
    return out;
}

int cmd_classgroup(i64 q, bool as_json, bool as_csv)
{
    ClassGroup G(validate_discriminant(q));
    if (as_csv) {
        std::printf("a,b,c\n");
        for (const QuadForm& f : G.forms())
            std::printf("%lld,%lld,%lld\n", static_cast<long long>(f.a),
                        static_cast<long long>(f.b), static_cast<long long>(f.c));
        return 0;
    }
    if (as_json) {
        std::printf("%s\n", classgroup_json(G).dump(2).c_str());
        return 0;
    }
    std::printf("q = %lld, D = %lld, h = %lld\n", static_cast<long long>(q),
                static_cast<long long>(G.disc().D), static_cast<long long>(G.h()));
    std::printf("reduced forms:\n");
    for (const QuadForm& f : G.forms())
        std::printf("  %s\n", to_string(f).c_str());
    std::printf("invariant factors:");
    for (i64 d : G.invariant_factors())
        std::printf(" %lld", static_cast<long long>(d));
    std::printf("%s\n", G.invariant_factors().empty() ? " (trivial group)" : "");
    std::printf("torsion: h_2 = %lld, h_3 = %lld\n", static_cast<long long>(G.torsion_count(2)),
                static_cast<long long>(G.torsion_count(3)));
    return 0;
}

int cmd_theta(i64 q, int chi, i64 limit, bool as_csv)
{
    ClassGroup G(validate_discriminant(q));
    auto chars = characters(G);
    if (chi < 0 || chi >= static_cast<int>(chars.size()))
        throw IndexOutOfRange();
    ThetaForm f = theta_lattice(G, chars, chi, limit);
    if (as_csv) {
        std::printf("n,a_exact,a_float\n");
        for (i64 n = 1; n <= limit; ++n)
            std::printf("%lld,%s,%s\n", static_cast<long long>(n), f.a(n).to_string().c_str(),
                        fmt12(f.af(n)).c_str());
        return 0;
    }
    json out;
    out["q"] = q;
    out["chi"] = chi;
    out["chi_exponents"] = f.char_exponents;
    out["limit"] = limit;
    out["zeta_order"] = f.ring->order();
    json coeffs = json::array();
    for (i64 n = 1; n <= limit; ++n)
        coeffs.push_back({{"n", n}, {"exact", f.a(n).to_string()}, {"float", jnum(f.af(n))}});
    out["coefficients"] = coeffs;
    std::printf("%s\n", out.dump(2).c_str());
    return 0;
}

struct SuiteResult {
    int checks = 0;
    int failures = 0;
    bool quiet = false;
    json report = json::object();

    void expect(bool ok, const std::string& label)
    {
        ++checks;
        if (!ok)
            ++failures;
        if (!quiet)
            std::printf("  [%s] %s\n", ok ? "ok" : "FAIL", label.c_str());
    }

    void note(const char* fmt, ...)
    {
        if (quiet)
            return;
        va_list args;
        va_start(args, fmt);
        std::vprintf(fmt, args);
        va_end(args);
    }
};

void suite_identities(SuiteResult& r)
{
    IntPoly oct = hecke_P(4) - hecke_P(2) - hecke_P(1);
    IntPoly ico = hecke_P(6) - hecke_P(4) - hecke_P(1);
    r.note("P_4 - P_2 - P_1      = %s\n", oct.to_string().c_str());
    r.note("oct product + 1      = x(x+1)(x-1)(x-3) + 1\n");
    r.note("P_6 - P_4 - P_1      = %s\n", ico.to_string().c_str());
    r.note("ico product + 1      = x(x+1)(x-2)(x-3)(x^2-x-1) + 1\n");
    r.report["oct_poly_coeffs"] = oct.coeffs();
    r.report["ico_poly_coeffs"] = ico.coeffs();
    r.expect(verify_oct_identity(), "octahedral identity, exact coefficients");
    r.expect(verify_ico_identity(), "icosahedral identity, exact coefficients");

    json evals = json::array();
    for (const GoldenValue& x : legal_values(StreamType::octahedral)) {
        GoldenValue v = eval_poly(oct, x, &GoldenValue::integer);
        evals.push_back({{"type", "oct"}, {"x", x.to_string()}, {"value", v.to_string()}});
        r.expect(v == GoldenValue::integer(1),
                 "oct value x = " + x.to_string() + " -> " + v.to_string());
    }
    for (const GoldenValue& x : legal_values(StreamType::icosahedral)) {
        GoldenValue v = eval_poly(ico, x, &GoldenValue::integer);
        evals.push_back({{"type", "ico"}, {"x", x.to_string()}, {"value", v.to_string()}});
        r.expect(v == GoldenValue::integer(1),
                 "ico value x = " + x.to_string() + " -> " + v.to_string());
    }
    r.report["value_evaluations"] = evals;
}

void suite_duality(SuiteResult& r)
{
    std::mt19937_64 dims(20250810);
    double worst_gap = 0.0, worst_res = 0.0;
    for (int t = 0; t < 100; ++t) {
        int dim = 2 + static_cast<int>(dims() % 19);
        int nvec = 2 + static_cast<int>(dims() % 49);
        auto inst = DualityInstance::random(dim, nvec, 9000 + static_cast<std::uint64_t>(t));
        auto [d2, d3] = best_constants(inst);
        worst_gap = std::max(worst_gap, std::abs(d2 - d3) / std::max(1.0, d2));
        std::mt19937_64 rng(31337 + static_cast<std::uint64_t>(t));
        std::normal_distribution<double> gauss;
        Eigen::VectorXcd c(nvec);
        for (int k = 0; k < nvec; ++k)
            c(k) = std::complex<double>(gauss(rng), gauss(rng));
        worst_res = std::max(worst_res, parseval_residual(inst, c));
    }
    r.note("worst relative gap |D2 - D3| = %s, worst Parseval residual = %s\n",
           fmt12(worst_gap).c_str(), fmt12(worst_res).c_str());
    r.report["instances"] = 100;
    r.report["worst_constant_gap"] = jnum(worst_gap);
    r.report["worst_parseval_residual"] = jnum(worst_res);
    r.expect(worst_gap <= 1e-9, "duality constants agree within 1e-9 on 100 instances");
    r.expect(worst_res <= 1e-9, "Parseval residual below 1e-9 on 100 instances");
}

void suite_meanvalue(SuiteResult& r, const std::vector<i64>& grid, double ceiling)
{
    r.expect(std::abs(exp_integral_E1(1.0) - 0.2193839344) < 1e-9, "E1(1) reference value");
    bool bracket = true;
    for (double x : {0.5, 1.0, 5.0, 20.0}) {
        double v = exp_integral_E1(x);
        bracket = bracket && v >= std::exp(-x) / (x + 1.0) && v <= std::exp(-x) / x;
    }
    r.expect(bracket, "E1 bracketing bounds");

    r.report["ceiling"] = jnum(ceiling);
    json rows = json::array();
    for (i64 q : grid) {
        ClassGroup G(validate_discriminant(q));
        const i64 X = std::max<i64>(10 * q, 1000);
        auto basis = dihedral_basis(G, X);
        if (basis.empty()) {
            r.note("  q = %lld: no dihedral forms (h = 1)\n", static_cast<long long>(q));
            rows.push_back({{"q", q}, {"forms", 0}});
            continue;
        }
        std::vector<double> pets;
        for (const auto& f : basis)
            pets.push_back(petersson_estimate(f, X).value);
        double worst_l2 = 0.0, worst_p1 = 0.0;
        for (size_t fi = 0; fi < basis.size(); ++fi)
            for (i64 N : {q, 10 * q})
                worst_l2 = std::max(worst_l2, lemma2_ratio(basis[fi], N, pets[fi]).ratio);
        for (i64 N : {q, 10 * q})
            worst_p1 = std::max(worst_p1,
                                prop1_check(basis, pets, q, N, 100,
                                            0xC0FFEE + static_cast<std::uint64_t>(q)));
        r.note("  q = %lld: worst single-form ratio %s, worst random-vector ratio %s\n",
               static_cast<long long>(q), fmt12(worst_l2).c_str(), fmt12(worst_p1).c_str());
        rows.push_back({{"q", q},
                        {"forms", basis.size()},
                        {"worst_lemma2_ratio", jnum(worst_l2)},
                        {"worst_prop1_ratio", jnum(worst_p1)}});
        r.expect(worst_l2 < ceiling, "single-form ratio below ceiling at q = " + std::to_string(q));
        r.expect(worst_p1 < ceiling, "random-vector ratio below ceiling at q = " + std::to_string(q));
    }
    r.report["grid"] = rows;
}

void suite_rankin(SuiteResult& r, const std::vector<i64>& grid)
{
    const i64 X = 4000;
    auto d4 = divisor4_count_table(X);
    for (i64 q : grid) {
        ClassGroup G(validate_discriminant(q));
        auto basis = dihedral_basis(G, X);
        for (const auto& f : basis) {
            RankinSeries s = b_coeffs(f, X);
            bool ok = true;
            for (i64 n = 1; n <= X; ++n) {
                ok = ok && s.b[static_cast<size_t>(n)] >= 0.0 &&
                     s.b[static_cast<size_t>(n)] <=
                         2.0 * static_cast<double>(d4[static_cast<size_t>(n)]) + 1e-9;
            }
            r.expect(ok, "0 <= b(n) <= 2 d4(n) at q = " + std::to_string(q) + ", chi = " +
                             std::to_string(f.char_index));
        }
    }
    Prop2aReport rep1 = prop2a_check(grid, X);
    Prop2aReport rep2 = prop2a_check(grid, 2 * X);
    r.note("  max petersson/(q log^3 q): %s at X = %lld, %s at X = %lld\n", fmt12(rep1.max_ratio).c_str(),
           static_cast<long long>(X), fmt12(rep2.max_ratio).c_str(),
           static_cast<long long>(2 * X));
    json entries = json::array();
    for (const auto& e : rep1.entries)
        entries.push_back({{"q", e.q},
                           {"chi", e.char_index},
                           {"petersson", jnum(e.petersson)},
                           {"ratio", jnum(e.ratio)}});
    r.report["X"] = X;
    r.report["entries"] = entries;
    r.report["max_ratio"] = jnum(rep1.max_ratio);
    r.report["max_ratio_2X"] = jnum(rep2.max_ratio);
    bool finite = true;
    for (const auto& e : rep1.entries)
        finite = finite && std::isfinite(e.ratio) && e.ratio > 0.0;
    r.expect(finite, "petersson/(q log^3 q) ratios finite and positive");
    r.expect(rep2.max_ratio < 2.0 * rep1.max_ratio && rep1.max_ratio < 2.0 * rep2.max_ratio,
             "petersson ratio stable under doubling X");
}

void suite_scheme(SuiteResult& r, i64 q)
{
    CountingScheme oct = scheme_oct(q);
    CountingScheme ico = scheme_ico(q);
    const i64 pi8 = prime_pi(iroot(q, 8));
    const i64 pi12 = prime_pi(iroot(q, 12));
    r.note("  q = %lld: oct support %zu entries, ico support %zu entries\n",
           static_cast<long long>(q), oct.support.size(), ico.support.size());
    r.report["q"] = q;
    r.report["oct_support"] = oct.support.size();
    r.report["ico_support"] = ico.support.size();
    r.report["pi8"] = pi8;
    r.report["pi12"] = pi12;
    r.expect(oct.sum_c_sq() == 3 * pi8, "sum |c_n|^2 = 3 pi(q^{1/8}) for the oct scheme");
    r.expect(ico.sum_c_sq() == 3 * pi12, "sum |c_n|^2 = 3 pi(q^{1/12}) for the ico scheme");

    std::vector<i64> oct_primes, ico_primes;
    for (const auto& e : oct.support)
        if (e.tier == 8)
            oct_primes.push_back(e.p);
    for (const auto& e : ico.support)
        if (e.tier == 12)
            ico_primes.push_back(e.p);

    bool oct_ok = true;
    const auto oct_values = legal_values(StreamType::octahedral);
    std::vector<size_t> pick(oct_primes.size(), 0);
    while (true) {
        std::vector<std::pair<i64, GoldenValue>> assign;
        for (size_t i = 0; i < oct_primes.size(); ++i)
            assign.push_back({oct_primes[i], oct_values[pick[i]]});
        SyntheticStream s = synth_stream(StreamType::octahedral, q, assign, q);
        oct_ok = oct_ok && (eval_scheme(oct, s) == GoldenValue::integer(pi8));
        size_t j = 0;
        for (; j < pick.size(); ++j) {
            if (++pick[j] < oct_values.size())
                break;
            pick[j] = 0;
        }
        if (j == pick.size())
            break;
    }
    r.expect(oct_ok, "every octahedral assignment sums to pi(q^{1/8}) exactly");

    bool ico_ok = true;
    const auto ico_values = legal_values(StreamType::icosahedral);
    std::vector<size_t> ipick(ico_primes.size(), 0);
    while (true) {
        std::vector<std::pair<i64, GoldenValue>> assign;
        for (size_t i = 0; i < ico_primes.size(); ++i)
            assign.push_back({ico_primes[i], ico_values[ipick[i]]});
        SyntheticStream s = synth_stream(StreamType::icosahedral, q, assign, q);
        ico_ok = ico_ok && (eval_scheme(ico, s) == GoldenValue::integer(pi12));
        size_t j = 0;
        for (; j < ipick.size(); ++j) {
            if (++ipick[j] < ico_values.size())
                break;
            ipick[j] = 0;
        }
        if (j == ipick.size())
            break;
    }
    r.expect(ico_ok, "every icosahedral assignment sums to pi(q^{1/12}) exactly");
}

int cmd_verify(const std::string& suite, const std::vector<i64>& grid, double ceiling, i64 scheme_q,
               bool as_json)
{
    SuiteResult r;
    r.quiet = as_json;
    if (!as_json)
        std::printf("suite: %s\n", suite.c_str());
    if (suite == "identities")
        suite_identities(r);
    else if (suite == "duality")
        suite_duality(r);
    else if (suite == "meanvalue")
        suite_meanvalue(r, grid, ceiling);
    else if (suite == "rankin")
        suite_rankin(r, grid);
    else if (suite == "scheme")
        suite_scheme(r, scheme_q);
    else
        throw InputError("unknown suite (expected identities|duality|meanvalue|rankin|scheme)");
    if (as_json) {
        r.report["suite"] = suite;
        r.report["checks"] = r.checks;
        r.report["failures"] = r.failures;
        std::printf("%s\n", r.report.dump(2).c_str());
    } else {
        std::printf("%d checks, %d failures\n", r.checks, r.failures);
    }
    return r.failures == 0 ? 0 : 1;
}

json bound_json(const DimensionBound& b)
{
    json out;
    out["q"] = b.q;
    out["h"] = b.h;
    out["dihedral_dim"] = b.dihedral_dim;
    out["pi8"] = b.pi8;
    out["pi12"] = b.pi12;
    out["oct_bound"] = jnum(b.oct_bound);
    out["ico_bound"] = jnum(b.ico_bound);
    out["total"] = jnum(b.total);
    out["k_prop1"] = jnum(b.constants.k_prop1);
    out["k_prop2a"] = jnum(b.constants.k_prop2a);
    return out;
}

int cmd_bound(i64 q, const BoundConstants& k, bool as_json)
{
    DimensionBound b = dimension_bound(q, k);
    if (as_json) {
        std::printf("%s\n", bound_json(b).dump(2).c_str());
        return 0;
    }
    std::printf("q = %lld, h = %lld\n", static_cast<long long>(b.q), static_cast<long long>(b.h));
    std::printf("dihedral dimension (h-1)/2       = %lld\n", static_cast<long long>(b.dihedral_dim));
    std::printf("pi(q^{1/8}) = %lld, pi(q^{1/12}) = %lld\n", static_cast<long long>(b.pi8),
                static_cast<long long>(b.pi12));
    std::printf("octahedral count bound           = %s\n", fmt12(b.oct_bound).c_str());
    std::printf("icosahedral count bound          = %s\n", fmt12(b.ico_bound).c_str());
    std::printf("total dimension bound            = %s\n", fmt12(b.total).c_str());
    std::printf("constants: k_prop1 = %s, k_prop2a = %s\n", fmt12(k.k_prop1).c_str(),
                fmt12(k.k_prop2a).c_str());
    return 0;
}

int cmd_fields(i64 q, bool as_json)
{
    FieldCountReport rep = field_report(q);
    if (as_json) {
        json out;
        out["q"] = rep.q;
        out["h"] = rep.h;
        out["h2"] = rep.h2;
        out["h3"] = rep.h3;
        out["rank3"] = rep.rank3;
        out["cubic_count_standard"] = rep.cubic_count_standard;
        out["cubic_count_paper"] = rep.cubic_count_paper;
        out["cubic_count_convention_note"] =
            "standard count is (3^r3 - 1)/2; the (3/2) h3 variant is reported unmodified";
        out["m4_bound"] = jnum(rep.m4_bound);
        if (rep.m) {
            out["m"] = *rep.m;
            out["genus_x0_star"] = *rep.genus_x0_star;
            out["corollary_dim_bound"] = jnum(*rep.corollary_dim_bound);
        }
        std::printf("%s\n", out.dump(2).c_str());
        return 0;
    }
    std::printf("q = %lld: h = %lld, h_2 = %lld, h_3 = %lld (3-rank %d)\n",
                static_cast<long long>(rep.q), static_cast<long long>(rep.h),
                static_cast<long long>(rep.h2), static_cast<long long>(rep.h3), rep.rank3);
    std::printf("cubic fields of disc -q: %lld (standard h3/2), %lld ((3/2) h3 as stated)\n",
                static_cast<long long>(rep.cubic_count_standard),
                static_cast<long long>(rep.cubic_count_paper));
    std::printf("quartic field count bound: %s\n", fmt12(rep.m4_bound).c_str());
    if (rep.m) {
        std::printf("q = 24m - 1 with m = %lld: genus of X0*(q) = %lld\n",
                    static_cast<long long>(*rep.m), static_cast<long long>(*rep.genus_x0_star));
        std::printf("differential-space dimension bound: %s\n",
                    fmt12(*rep.corollary_dim_bound).c_str());
    }
    return 0;
}

int cmd_rankin(i64 q, i64 X, int chi, bool as_csv)
{
    ClassGroup G(validate_discriminant(q));
    auto chars = characters(G);
    if (chi < 0 || chi >= static_cast<int>(chars.size()))
        throw IndexOutOfRange();
    ThetaForm f = theta_lattice(G, chars, chi, X);
    RankinSeries series = b_coeffs(f, X);
    if (as_csv) {
        std::printf("n,b\n");
        for (i64 n = 1; n <= X; ++n)
            std::printf("%lld,%s\n", static_cast<long long>(n),
                        fmt12(series.b[static_cast<size_t>(n)]).c_str());
        return 0;
    }
    PeterssonEstimate est = petersson_estimate(series);
    json out;
    out["q"] = q;
    out["chi"] = chi;
    out["X"] = X;
    out["exact_rational"] = series.exact;
    out["residue"] = jnum(est.residue);
    out["petersson"] = jnum(est.value);
    out["stability_gap"] = jnum(est.stability_gap);
    std::printf("%s\n", out.dump(2).c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"dihedral weight-one cusp forms: exact constructions, mean-value checks, "
                 "and dimension/field-count bounds"};
    app.require_subcommand(1);

    i64 q = 23;
    int chi = 1;
    i64 limit = 100;
    i64 X = 10000;
    bool flag_json = false, flag_csv = false;
    std::string suite = "identities";
    std::vector<i64> grid = kDefaultGrid;
    double ceiling = 100.0;
    i64 scheme_q = 65539;
    BoundConstants consts;

    auto* cg = app.add_subcommand("classgroup", "reduced forms, class number, group structure");
    cg->add_option("--q", q, "odd prime q = 3 mod 4, q >= 7")->required();
    cg->add_flag("--json", flag_json, "emit JSON");
    cg->add_flag("--csv", flag_csv, "emit CSV of the reduced forms");

    auto* th = app.add_subcommand("theta", "Fourier coefficients of a dihedral form");
    th->add_option("--q", q, "odd prime q = 3 mod 4")->required();
    th->add_option("--chi", chi, "character index (0 is trivial and rejected)")->required();
    th->add_option("--limit", limit, "number of coefficients")->required();
    th->add_flag("--csv", flag_csv, "emit CSV instead of JSON");

    auto* vf = app.add_subcommand("verify", "run an invariant suite, exit 0/1");
    vf->add_option("--suite", suite, "identities|duality|meanvalue|rankin|scheme")->required();
    vf->add_option("--grid", grid, "comma-separated q grid")->delimiter(',');
    vf->add_option("--ceiling", ceiling, "ratio ceiling for the meanvalue suite");
    vf->add_option("--scheme-q", scheme_q, "q for the scheme suite");
    vf->add_flag("--json", flag_json, "emit a JSON report instead of text");

    auto* bd = app.add_subcommand("bound", "dimension bound report");
    bd->add_option("--q", q, "odd prime q = 3 mod 4")->required();
    bd->add_option("--k-prop1", consts.k_prop1, "Prop 1 constant");
    bd->add_option("--k-prop2a", consts.k_prop2a, "Prop 2a constant");
    bd->add_flag("--json", flag_json, "emit JSON");

    auto* fd = app.add_subcommand("fields", "torsion and field-count report");
    fd->add_option("--q", q, "odd prime q = 3 mod 4")->required();
    fd->add_flag("--json", flag_json, "emit JSON");

    auto* rk = app.add_subcommand("rankin", "Rankin-Selberg coefficients and Petersson estimate");
    rk->add_option("--q", q, "odd prime q = 3 mod 4")->required();
    rk->add_option("--x", X, "coefficient range")->required();
    rk->add_option("--chi", chi, "character index");
    rk->add_flag("--csv", flag_csv, "emit the (n, b(n)) table as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cg->parsed())
            return cmd_classgroup(q, flag_json, flag_csv);
        if (th->parsed())
            return cmd_theta(q, chi, limit, flag_csv);
        if (vf->parsed())
            return cmd_verify(suite, grid, ceiling, scheme_q, flag_json);
        if (bd->parsed())
            return cmd_bound(q, consts, flag_json);
        if (fd->parsed())
            return cmd_fields(q, flag_json);
        if (rk->parsed())
            return cmd_rankin(q, X, chi, flag_csv);
    } catch (const InputError& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
