#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <mpfr.h>
#include <cmath>
#include <thread>

#include "heightlab/height.hpp"
#include "test_support.hpp"

using namespace heightlab;

namespace {

bool enclosures_overlap(double alo, double ahi, double blo, double bhi) {
    return alo <= bhi && blo <= ahi;
}

constexpr double kSchinzel = 0.24060591252980172;  // (1/2)log((1+sqrt5)/2)

}  // namespace

TEST_CASE("mahler_measure: fixed values") {
    HeightReport m = mahler_measure(IntPoly{5, -6, 5});
    REQUIRE(m.exact_log_arg.has_value());
    CHECK(*m.exact_log_arg == 5);

    HeightReport m2 = mahler_measure(IntPoly{-2, 1});
    REQUIRE(m2.exact_log_arg.has_value());
    CHECK(*m2.exact_log_arg == 2);

    HeightReport m3 = mahler_measure(IntPoly{-1, -1, 1});  // golden ratio
    CHECK_FALSE(m3.exact_log_arg.has_value());
    CHECK(m3.lo <= 1.618033988749894848);
    CHECK(m3.hi >= 1.618033988749894848);
    CHECK(m3.hi - m3.lo < 1e-9 * m3.hi);

    // content and multiplicity: M(2(x-2)^2) = 2*4 = 8
    HeightReport m4 = mahler_measure(IntPoly{-2, 1} * IntPoly{-2, 1} * IntPoly{2});
    REQUIRE(m4.exact_log_arg.has_value());
    CHECK(*m4.exact_log_arg == 8);

    // zero root contributes max(1, 0) = 1
    HeightReport m5 = mahler_measure(IntPoly{0, 1, 1});  // x(x+1)
    REQUIRE(m5.exact_log_arg.has_value());
    CHECK(*m5.exact_log_arg == 1);

    CHECK_THROWS_AS(mahler_measure(IntPoly{}), std::invalid_argument);
}

TEST_CASE("mahler_measure: Lehmer's polynomial") {
    // Smallest known measure above 1; a Salem polynomial, so the exact
    // self-inversive route reports off-circle with a certified witness.
    const IntPoly lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
    HeightReport m = mahler_measure(lehmer);
    CHECK(m.lo <= 1.1762808182599175);
    CHECK(m.hi >= 1.1762808182599175);
    CHECK(m.hi - m.lo < 1e-9 * m.hi);
    CircleVerdict v = all_on_unit_circle(lehmer);
    CHECK_FALSE(v.on_circle);
    CHECK(v.method == CircleVerdict::Method::ExactSelfInversive);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->separation > 0);
}

TEST_CASE("mahler_measure: multiplicativity within tolerance") {
    oracle::PolyGen gen(51);
    for (int i = 0; i < 80; ++i) {
        IntPoly f = gen.random_poly(5, 5);
        IntPoly g = gen.random_poly(5, 5);
        HeightReport mf = mahler_measure(f);
        HeightReport mg = mahler_measure(g);
        HeightReport mfg = mahler_measure(f * g);
        CHECK(enclosures_overlap(mfg.lo * (1 - 1e-8), mfg.hi * (1 + 1e-8), mf.lo * mg.lo,
                                 mf.hi * mg.hi));
    }
}

TEST_CASE("weil_height: fixed values") {
    HeightReport h = weil_height(cyclotomic(7));
    CHECK(h.lo == 0.0);
    CHECK(h.hi == 0.0);

    HeightReport h2 = weil_height(IntPoly{-2, 1});
    CHECK(std::abs(h2.lo - 0.69314718055994531) < 1e-12);
    CHECK(h2.hi - h2.lo < 1e-12);

    HeightReport h3 = weil_height(IntPoly{0, 1});  // alpha = 0
    CHECK(h3.lo == 0.0);
    CHECK(h3.hi == 0.0);

    HeightReport h4 = weil_height(IntPoly{-1, -1, 1});
    CHECK(std::abs(h4.lo - kSchinzel) < 1e-12);
}

TEST_CASE("weil_height: small-height family h = log(5)/(2n)") {
    for (int n = 1; n <= 6; ++n) {
        IntPoly f = IntPoly::monomial(Int(5), 2 * n) - IntPoly::monomial(Int(6), n) + IntPoly{5};
        HeightReport h = weil_height(f);
        REQUIRE(h.exact_log_arg.has_value());
        CHECK(*h.exact_log_arg == 5);
        const double expect = std::log(5.0) / (2.0 * n);
        CHECK(std::abs(h.lo - expect) < 1e-9);
        CHECK(std::abs(h.hi - expect) < 1e-9);
    }
    // brute-force irreducibility cross-check for n <= 4
    for (int n = 1; n <= 4; ++n) {
        IntPoly f = IntPoly::monomial(Int(5), 2 * n) - IntPoly::monomial(Int(6), n) + IntPoly{5};
        CHECK(oracle::brute_force_irreducible(f));
    }
    CHECK_FALSE(oracle::brute_force_irreducible(IntPoly{-1, 0, 0, 0, 1}));  // x^4 - 1
}

TEST_CASE("weil_height: h >= 0 and h = 0 exactly for roots of unity") {
    for (int n = 1; n <= 12; ++n) {
        HeightReport h = weil_height(cyclotomic(n));
        CHECK(h.lo == 0.0);
        CHECK(h.hi == 0.0);
        REQUIRE(h.exact_log_arg.has_value());
        CHECK(*h.exact_log_arg == 1);
    }
    oracle::PolyGen gen(52);
    for (int i = 0; i < 60; ++i) {
        IntPoly f = gen.random_squarefree(5);
        if (f.coeff(0) == 0) continue;
        HeightReport h = weil_height(f);
        CHECK(h.lo >= 0.0);
        if (h.lo == 0.0 && h.hi == 0.0) {
            // Kronecker: measure 1 forces all roots onto the unit circle
            CHECK(all_on_unit_circle(normalize(f)).on_circle);
        } else {
            CHECK(h.lo > 0.0);
        }
    }
}

TEST_CASE("weil_height: inversion symmetry h(1/alpha) = h(alpha)") {
    oracle::PolyGen gen(53);
    int tested = 0;
    for (int i = 0; i < 250 && tested < 120; ++i) {
        IntPoly f = gen.random_squarefree(5);
        if (f.coeff(0) == 0) continue;
        ++tested;
        HeightReport a = weil_height(f);
        HeightReport b = weil_height(f.reversed());
        CHECK(enclosures_overlap(a.lo, a.hi, b.lo, b.hi));
        if (a.exact_log_arg && b.exact_log_arg) CHECK(*a.exact_log_arg == *b.exact_log_arg);
    }
    CHECK(tested >= 100);
}

TEST_CASE("weil_height: power rule h(alpha^k) = k h(alpha)") {
    oracle::PolyGen gen(54);
    int tested = 0;
    for (int i = 0; i < 400 && tested < 60; ++i) {
        IntPoly f = gen.random_squarefree(4, 4);
        if (f.coeff(0) == 0 || !irreducible_witness(f)) continue;
        for (int k = 2; k <= 4; ++k) {
            IntPoly g = power_min_poly(f, k);
            if (g.degree() < 1 || !irreducible_witness(g)) continue;
            ++tested;
            HeightReport hf = weil_height(f);
            HeightReport hg = weil_height(g);
            CHECK(enclosures_overlap(hg.lo - 1e-9, hg.hi + 1e-9, k * hf.lo, k * hf.hi));
        }
    }
    CHECK(tested >= 40);
}

TEST_CASE("embedding_stats") {
    EmbeddingStats s = embedding_stats(IntPoly{1, 0, 0, 1, 0, 1});
    CHECK(s.degree == 5);
    CHECK(s.real_count == 1);
    CHECK(s.ratio == make_rat(Int(1), Int(5)));

    EmbeddingStats s2 = embedding_stats(IntPoly{-2, 0, 1});
    CHECK(s2.degree == 2);
    CHECK(s2.real_count == 2);
    CHECK(s2.ratio == 1);

    EmbeddingStats s3 = embedding_stats(IntPoly{1, 0, 1});
    CHECK(s3.real_count == 0);
    CHECK(s3.ratio == 0);

    CHECK_THROWS_AS(embedding_stats(IntPoly{1, -2, 1}), std::invalid_argument);
}

TEST_CASE("garza_bound: fixed values") {
    Enclosure g1 = garza_bound(Rat(1));
    CHECK(g1.lo <= kSchinzel);
    CHECK(g1.hi >= kSchinzel);
    CHECK(g1.hi - g1.lo < 1e-15);

    Enclosure ghalf = garza_bound(make_rat(Int(1), Int(2)));
    CHECK(std::abs(ghalf.lo - 0.061866615386815863) < 1e-12);

    Enclosure gfifth = garza_bound(make_rat(Int(1), Int(5)));
    CHECK(std::abs(gfifth.lo - 0.0031244915970854930) < 1e-12);

    Enclosure g15 = garza_bound(make_rat(Int(1), Int(15)));
    CHECK(std::abs(g15.lo - 1.0172526040087683e-06) < 1e-15);

    CHECK_THROWS_AS(garza_bound(Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(garza_bound(Rat(2)), std::invalid_argument);
    CHECK_THROWS_AS(garza_bound(Rat(-1)), std::invalid_argument);
}

TEST_CASE("garza_bound: positive everywhere, increasing on the k/20 grid") {
    Enclosure prev{0.0, 0.0};
    for (int k = 1; k <= 20; ++k) {
        Enclosure g = garza_bound(make_rat(Int(k), Int(20)));
        CHECK(g.lo > 0.0);
        CHECK(g.lo > prev.hi);  // strict increase, certified
        prev = g;
    }
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<long> num(1, 400), den(400, 4000);
    for (int i = 0; i < 120; ++i) {
        Rat c = make_rat(Int(num(rng)), Int(den(rng)));
        if (c > 1) continue;
        // the certified interval is strictly positive even when the value is
        // far below the double subnormal range
        CHECK(garza_bound_ival(c).strictly_positive());
        if (c >= make_rat(Int(1), Int(500))) CHECK(garza_bound(c).lo > 0.0);
    }
}

TEST_CASE("theorem_constant") {
    EmbeddingStats fprime;
    fprime.degree = 30;
    fprime.real_count = 2;
    fprime.ratio = make_rat(Int(1), Int(15));
    BoundCert cert = theorem_constant(fprime, true);
    CHECK(cert.halved);
    CHECK(cert.final_c.lo == cert.garza_value.lo / 2);
    CHECK(cert.final_c.hi == cert.garza_value.hi / 2);
    CHECK(rat_from_double(cert.final_c.lo) > make_rat(Int(1), Int(2000000)));
    CHECK(rat_from_double(cert.final_c.hi) < make_rat(Int(1), Int(1900000)));
    CHECK(cert.final_c.hi - cert.final_c.lo <= 1e-12);

    EmbeddingStats unit;
    unit.degree = 1;
    unit.real_count = 1;
    unit.ratio = Rat(1);
    BoundCert schinzel_case = theorem_constant(unit, false);
    CHECK_FALSE(schinzel_case.halved);
    CHECK(schinzel_case.final_c.lo <= kSchinzel);
    CHECK(schinzel_case.final_c.hi >= kSchinzel);

    EmbeddingStats imaginary_quadratic;
    imaginary_quadratic.degree = 2;
    imaginary_quadratic.real_count = 0;
    imaginary_quadratic.ratio = Rat(0);
    CHECK_THROWS_AS(theorem_constant(imaginary_quadratic, false), std::invalid_argument);
}

TEST_CASE("theorem_constant halving is exact on random ratios") {
    std::mt19937_64 rng(56);
    std::uniform_int_distribution<int> d_dist(1, 24);
    for (int i = 0; i < 80; ++i) {
        int d = d_dist(rng);
        std::uniform_int_distribution<int> r_dist(1, d);
        int r = r_dist(rng);
        EmbeddingStats s;
        s.degree = d;
        s.real_count = r;
        s.ratio = make_rat(Int(r), Int(d));
        BoundCert flagged = theorem_constant(s, true);
        BoundCert plain = theorem_constant(s, false);
        CHECK(flagged.final_c.lo == plain.final_c.lo / 2);
        CHECK(flagged.final_c.hi == plain.final_c.hi / 2);
    }
}

TEST_CASE("schinzel_gap_check") {
    SchinzelCheck golden = schinzel_gap_check(IntPoly{-1, -1, 1});
    CHECK(golden.off_circle);
    CHECK(golden.satisfies);
    CHECK(golden.certificate == SchinzelCheck::Certificate::TotallyReal);
    CHECK(std::abs(golden.height.lo - kSchinzel) < 1e-12);

    SchinzelCheck circle = schinzel_gap_check(IntPoly{5, -6, 5});
    CHECK_FALSE(circle.off_circle);
    CHECK(circle.satisfies);
    CHECK(circle.certificate == SchinzelCheck::Certificate::OnCircle);
    CHECK(std::abs(circle.height.lo - 0.80471895621705025) < 1e-12);

    SchinzelCheck sqrt2 = schinzel_gap_check(IntPoly{-2, 0, 1});
    CHECK(sqrt2.off_circle);
    CHECK(sqrt2.satisfies);
    CHECK(std::abs(sqrt2.height.lo - 0.34657359027997264) < 1e-12);

    CHECK_THROWS_AS(schinzel_gap_check(IntPoly{0, 1}), std::invalid_argument);
}

TEST_CASE("concurrent invocation is safe and deterministic") {
    const IntPoly f{1, 0, 0, 1, 0, 1};
    HeightReport expected = weil_height(f);
    std::atomic<int> mismatches{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&] {
            for (int i = 0; i < 25; ++i) {
                HeightReport h = weil_height(f);
                if (h.lo != expected.lo || h.hi != expected.hi) ++mismatches;
                if (sturm_count(f) != 1) ++mismatches;
                if (real_root_count_numeric(isolate_roots(f)) != 1) ++mismatches;
            }
            mpfr_free_cache();  // drop this thread's mpfr constant cache
        });
    }
    for (auto& w : workers) w.join();
    CHECK(mismatches == 0);
}

TEST_CASE("eq1_chain_check") {
    Eq1Chain c1 = eq1_chain_check(IntPoly{-2, 0, 0, 0, 1}, 2);
    CHECK(c1.lhs == 1);
    CHECK(c1.mid == 1);
    CHECK(c1.rhs == 1);
    CHECK(c1.holds);
    CHECK(c1.relative_degree == 2);
    CHECK(c1.real_count_k == 2);

    Eq1Chain c2 = eq1_chain_check(IntPoly{1, 0, 1}, 2);
    CHECK(c2.lhs == 0);
    CHECK(c2.rhs == 0);
    CHECK(c2.holds);

    Eq1Chain c3 = eq1_chain_check(IntPoly{-3, 0, 1}, 2);
    CHECK(c3.lhs == 2);
    CHECK(c3.mid == 2);
    CHECK(c3.rhs == 1);
    CHECK(c3.holds);
    CHECK(c3.relative_degree == 2);
}
