// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "heightlab/galois.hpp"
#include "heightlab/height.hpp"
#include "heightlab/json_io.hpp"
#include "heightlab/paperlab.hpp"
#include "heightlab/quadfield.hpp"
#include "test_support.hpp"

using namespace heightlab;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok) ++g_failures;
}

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string num(double x) {
    char buf[64];
    snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string ms(double x) {
    char buf[64];
    snprintf(buf, sizeof buf, "%.3f ms", x);
    return buf;
}

// 1. disc(x^5+x^3+1) = 3233, not a perfect square, under 10 ms.
void criterion_1() {
    const IntPoly f{1, 0, 0, 1, 0, 1};
    auto start = Clock::now();
    Int d = discriminant(f);
    bool square = is_perfect_square(d);
    double elapsed = ms_since(start);
    bool ok = (d == 3233) && !square && elapsed < 10.0;
    report(1, ok,
           "disc(x^5+x^3+1) = " + to_string(d) + ", perfect square: " + (square ? "yes" : "no") +
               ", " + ms(elapsed));
}

// 2. One real root, double-transposition pairing, centralizer order 4,
//    fixed cosets 2, under 1 s.
void criterion_2() {
    auto start = Clock::now();
    const IntPoly f{1, 0, 0, 1, 0, 1};
    const int r = sturm_count(f);
    RootBag bag = isolate_roots(f);
    Perm pairing = conjugation_pairing(bag);
    GroupTable a5 = generate({Perm::from_cycles("(0 1 2 3 4)", 5), Perm::from_cycles("(0 1 2)", 5)});
    Perm c = Perm::from_cycles("(0 1)(2 3)", 5);
    GroupTable cent = centralizer(a5, c);
    int fixed = fixed_cosets(a5, generate({c}), c);
    double elapsed = ms_since(start);
    bool ok = r == 1 && pairing.cycle_type() == std::vector<int>{1, 2, 2} && cent.order() == 4 &&
              fixed == 2 && elapsed < 1000.0;
    report(2, ok,
           "sturm = " + std::to_string(r) + ", pairing " + pairing.to_cycle_string() +
               ", |centralizer| = " + std::to_string(cent.order()) + ", fixed cosets = " +
               std::to_string(fixed) + ", " + ms(elapsed));
}

// 3. theorem_constant((30, 2, 1/15), imaginary) strictly inside
//    (1/2000000, 1/1900000), enclosure width <= 1e-12.
void criterion_3() {
    EmbeddingStats stats;
    stats.degree = 30;
    stats.real_count = 2;
    stats.ratio = make_rat(Int(1), Int(15));
    BoundCert cert = theorem_constant(stats, true);
    const bool above = rat_from_double(cert.final_c.lo) > make_rat(Int(1), Int(2000000));
    const bool below = rat_from_double(cert.final_c.hi) < make_rat(Int(1), Int(1900000));
    const bool tight = (cert.final_c.hi - cert.final_c.lo) <= 1e-12;
    report(3, above && below && tight,
           "final_c = [" + num(cert.final_c.lo) + ", " + num(cert.final_c.hi) +
               "], width = " + num(cert.final_c.hi - cert.final_c.lo));
}

// 4. garza_bound(1) contains the Schinzel constant within 1e-12.
void criterion_4() {
    Enclosure g = garza_bound(Rat(1));
    Ival s = schinzel_constant();
    Enclosure se = s.enclosure();
    const bool contains = (g.lo - 1e-12 <= se.lo) && (se.hi <= g.hi + 1e-12);
    const bool tight = (g.hi - g.lo) <= 1e-12 && (se.hi - se.lo) <= 1e-12;
    report(4, contains && tight,
           "garza(1) = [" + num(g.lo) + ", " + num(g.hi) + "], schinzel = [" + num(se.lo) + ", " +
               num(se.hi) + "]");
}

// 5. Heights of 5x^(2n) - 6x^n + 5 equal log(5)/(2n) within 1e-9 with exact
//    circle verdicts, n = 1..12, under 5 s total.
void criterion_5() {
    auto start = Clock::now();
    bool ok = true;
    std::string fail;
    for (int n = 1; n <= 12; ++n) {
        IntPoly f = IntPoly::monomial(Int(5), 2 * n) - IntPoly::monomial(Int(6), n) + IntPoly{5};
        CircleVerdict circle = all_on_unit_circle(f);
        HeightReport h = weil_height(f);
        Ival target = log_rat(Rat(5), 192).mul_rat(make_rat(Int(1), Int(2 * n)));
        const double gap =
            std::max({h.lo - target.hi_d(), target.lo_d() - h.hi, 0.0});
        if (!circle.on_circle || gap > 1e-9) {
            ok = false;
            fail = " first failure at n = " + std::to_string(n);
        }
    }
    double elapsed = ms_since(start);
    if (elapsed >= 5000.0) ok = false;
    report(5, ok, "12 heights match log(5)/(2n) within 1e-9, " + ms(elapsed) + fail);
}

// 6. power_sums(x^5+x^3+1, 2) = (0, -2) exactly.
void criterion_6() {
    auto p = power_sums(IntPoly{1, 0, 0, 1, 0, 1}, 2);
    bool ok = p.size() == 2 && p[0] == 0 && p[1] == -2;
    report(6, ok,
           "p_1 = " + to_string(p[0]) + ", p_2 = " + to_string(p[1]) +
               " (sum of (alpha_j/sqrt2)^2 = " + to_string(p[1] / Rat(2)) + ")");
}

// 7. classify_quintic_galois: S_5 for x^5+x^3+1, Inconclusive for x^5-2.
void criterion_7() {
    QuinticVerdict v1 = classify_quintic_galois(gather_quintic_evidence(IntPoly{1, 0, 0, 1, 0, 1}));
    QuinticVerdict v2 = classify_quintic_galois(gather_quintic_evidence(IntPoly{-2, 0, 0, 0, 0, 1}));
    bool ok = v1.provably_s5 && !v2.provably_s5;
    report(7, ok,
           std::string("x^5+x^3+1: ") + (v1.provably_s5 ? "ProvablyS5" : "Inconclusive") +
               ", x^5-2: " + (v2.provably_s5 ? "ProvablyS5" : "Inconclusive"));
}

// 8. Example 3.1 pipeline for p in {2, 3, 5}.
void criterion_8() {
    bool ok = true;
    std::string detail;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        Transcript tr = run_example2_pipeline(p);
        QuadFactorization fac = quadratic_field_factor(
            IntPoly::monomial(Int(1), 4) - IntPoly(std::vector<Int>{Int(static_cast<unsigned long>(p))}),
            static_cast<long long>(p));
        QuadPoly prod(static_cast<long long>(p), {QuadCoeff{fac.lead, Rat(0)}});
        for (const auto& qf : fac.factors) prod = prod * qf.poly;
        const bool multiply_back =
            prod == QuadPoly::from_int_poly(
                        IntPoly::monomial(Int(1), 4) -
                            IntPoly(std::vector<Int>{Int(static_cast<unsigned long>(p))}),
                        static_cast<long long>(p));
        if (!(tr.pass() && multiply_back && fac.factors.size() == 2)) {
            ok = false;
            detail += " p=" + std::to_string(p) + " failed;";
        }
    }
    report(8, ok, detail.empty() ? "pipelines pass for p = 2, 3, 5" : detail);
}

// 9. Property suites, >= 500 cases each, fixed seeds, zero failures.
void criterion_9() {
    int fails = 0;
    std::string detail;

    {  // (a) Sturm vs certified numeric root count
        oracle::PolyGen gen(101);
        for (int i = 0; i < 500; ++i) {
            IntPoly f = gen.random_squarefree(6);
            if (real_root_count_numeric(isolate_roots(f)) != sturm_count(f)) ++fails;
        }
        detail += "sturm/numeric 500;";
    }
    {  // (b) inversion symmetry
        oracle::PolyGen gen(102);
        int done = 0;
        while (done < 500) {
            IntPoly f = gen.random_squarefree(5);
            if (f.coeff(0) == 0) continue;
            ++done;
            HeightReport a = weil_height(f);
            HeightReport b = weil_height(f.reversed());
            if (!(a.lo <= b.hi && b.lo <= a.hi)) ++fails;
        }
        detail += " inversion 500;";
    }
    {  // (c) power rule within enclosures
        oracle::PolyGen gen(103);
        int done = 0;
        while (done < 500) {
            IntPoly f = gen.random_squarefree(4, 4);
            if (f.coeff(0) == 0 || !irreducible_witness(f)) continue;
            std::uniform_int_distribution<int> kd(2, 4);
            int k = kd(gen.rng);
            IntPoly g = power_min_poly(f, k);
            if (g.degree() < 1 || !irreducible_witness(g)) continue;
            ++done;
            HeightReport hf = weil_height(f);
            HeightReport hg = weil_height(g);
            if (!(hg.lo - 1e-9 <= k * hf.hi && k * hf.lo <= hg.hi + 1e-9)) ++fails;
        }
        detail += " power 500;";
    }
    {  // (d) Mahler multiplicativity within eps
        oracle::PolyGen gen(104);
        for (int i = 0; i < 500; ++i) {
            IntPoly f = gen.random_poly(5, 5);
            IntPoly g = gen.random_poly(5, 5);
            HeightReport mf = mahler_measure(f);
            HeightReport mg = mahler_measure(g);
            HeightReport mfg = mahler_measure(f * g);
            const double lo = mf.lo * mg.lo * (1 - 1e-8);
            const double hi = mf.hi * mg.hi * (1 + 1e-8);
            if (!(mfg.lo <= hi && lo <= mfg.hi)) ++fails;
        }
        detail += " mahler-mult 500;";
    }
    {  // (e) orbit-stabilizer in S_5 and A_5
        GroupTable s5 =
            generate({Perm::from_cycles("(0 1 2 3 4)", 5), Perm::from_cycles("(0 1)", 5)});
        GroupTable a5 =
            generate({Perm::from_cycles("(0 1 2 3 4)", 5), Perm::from_cycles("(0 1 2)", 5)});
        std::mt19937_64 rng(105);
        for (int i = 0; i < 500; ++i) {
            const GroupTable& g = (i % 2 == 0) ? s5 : a5;
            std::uniform_int_distribution<size_t> pick(0, static_cast<size_t>(g.order() - 1));
            const Perm& x = g.elements()[pick(rng)];
            GroupTable cent = centralizer(g, x);
            size_t class_size = 0;
            {
                std::set<Perm> cls;
                for (const Perm& s : g.elements()) cls.insert(s.compose(x).compose(s.inverse()));
                class_size = cls.size();
            }
            if (cent.order() * static_cast<int>(class_size) != g.order()) ++fails;
        }
        detail += " orbit-stabilizer 500;";
    }
    {  // (f) fixed_cosets with identity = index
        GroupTable s4 = generate({Perm::from_cycles("(0 1 2 3)", 4), Perm::from_cycles("(0 1)", 4)});
        GroupTable s5 = generate({Perm::from_cycles("(0 1 2 3 4)", 5), Perm::from_cycles("(0 1)", 5)});
        std::mt19937_64 rng(106);
        for (int i = 0; i < 500; ++i) {
            const GroupTable& g = (i % 2 == 0) ? s4 : s5;
            std::uniform_int_distribution<size_t> pick(0, static_cast<size_t>(g.order() - 1));
            GroupTable h = generate({g.elements()[pick(rng)], g.elements()[pick(rng)]});
            if (fixed_cosets(g, h, Perm::identity(g.points())) != g.order() / h.order()) ++fails;
        }
        detail += " coset-index 500";
    }
    report(9, fails == 0, detail + (fails ? " -> " + std::to_string(fails) + " failures" : ""));
}

// 10. `paper example1 --json` is byte-identical across runs.
void criterion_10() {
#ifdef HEIGHTLAB_CLI_PATH
    auto run_once = [](std::string& out) -> bool {
        std::string cmd = std::string(HEIGHTLAB_CLI_PATH) + " paper example1 --json 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) return false;
        char buf[4096];
        size_t n;
        out.clear();
        while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
        return pclose(pipe) == 0;
    };
    std::string first, second;
    bool ran = run_once(first) && run_once(second);
    bool ok = ran && !first.empty() && first == second;
    report(10, ok,
           ran ? ("two CLI runs, " + std::to_string(first.size()) + " bytes each, byte-identical: " +
                  (first == second ? "yes" : "no"))
               : "failed to invoke the CLI");
#else
    report(10, false, "CLI path not configured");
#endif
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0) std::printf("acceptance: all 10 criteria PASS\n");
    else std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
