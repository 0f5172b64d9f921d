#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heightlab/galois.hpp"
#include "test_support.hpp"

using namespace heightlab;

namespace {

GroupTable make_s5() {
    return generate({Perm::from_cycles("(0 1 2 3 4)", 5), Perm::from_cycles("(0 1)", 5)});
}

GroupTable make_a5() {
    return generate({Perm::from_cycles("(0 1 2 3 4)", 5), Perm::from_cycles("(0 1 2)", 5)});
}

}  // namespace

TEST_CASE("Perm basics") {
    Perm p = Perm::from_cycles("(0 1)(2 3)", 5);
    CHECK(p.is_involution());
    CHECK(p.fixed_point_count() == 1);
    CHECK(p.cycle_type() == std::vector<int>{1, 2, 2});
    CHECK(p.to_cycle_string() == "(0 1)(2 3)");
    CHECK(Perm::from_cycles("()", 4).is_identity());
    CHECK(Perm::from_cycles(p.to_cycle_string(), 5) == p);
    CHECK_THROWS_AS(Perm::from_cycles("(0 7)", 5), std::invalid_argument);

    std::mt19937_64 rng(31);
    GroupTable s5 = make_s5();
    std::uniform_int_distribution<size_t> pick(0, static_cast<size_t>(s5.order() - 1));
    for (int i = 0; i < 100; ++i) {
        const Perm& a = s5.elements()[pick(rng)];
        const Perm& b = s5.elements()[pick(rng)];
        CHECK(a.compose(a.inverse()).is_identity());
        CHECK(a.compose(b).inverse() == b.inverse().compose(a.inverse()));
        CHECK(Perm::from_cycles(a.to_cycle_string(), 5) == a);
    }
}

TEST_CASE("generate") {
    CHECK(make_s5().order() == 120);
    CHECK(make_a5().order() == 60);
    CHECK(generate({Perm::identity(5)}).order() == 1);
    CHECK(generate({Perm::from_cycles("(0 1 2 3)", 4)}).order() == 4);
    // closure: full pairwise products stay inside
    GroupTable a5 = make_a5();
    for (const Perm& a : a5.elements())
        for (const Perm& b : a5.elements()) REQUIRE(a5.contains(a.compose(b)));
}

TEST_CASE("centralizer") {
    GroupTable a5 = make_a5();
    GroupTable s5 = make_s5();
    CHECK(centralizer(a5, Perm::from_cycles("(0 1)(2 3)", 5)).order() == 4);
    CHECK(centralizer(s5, Perm::identity(5)).order() == 120);
    CHECK(centralizer(a5, Perm::from_cycles("(0 1 2 3 4)", 5)).order() == 5);
    CHECK_THROWS_AS(centralizer(a5, Perm::from_cycles("(0 1)", 5)), std::invalid_argument);
}

TEST_CASE("orbit-stabilizer identity in S_5 and A_5") {
    for (GroupTable g : {make_s5(), make_a5()}) {
        auto classes = conjugacy_classes(g);
        size_t total = 0;
        for (const auto& cls : classes) {
            total += cls.size();
            GroupTable cent = centralizer(g, cls.front());
            CHECK(cent.order() * static_cast<int>(cls.size()) == g.order());
        }
        CHECK(total == static_cast<size_t>(g.order()));
    }
}

TEST_CASE("fixed_cosets") {
    GroupTable a5 = make_a5();
    Perm c = Perm::from_cycles("(0 1)(2 3)", 5);
    GroupTable h = generate({c});
    CHECK(fixed_cosets(a5, h, c) == 2);
    CHECK(fixed_cosets(a5, h, Perm::identity(5)) == 30);

    GroupTable s3 = generate({Perm::from_cycles("(0 1 2)", 3), Perm::from_cycles("(0 1)", 3)});
    GroupTable h2 = generate({Perm::from_cycles("(0 1)", 3)});
    CHECK(fixed_cosets(s3, h2, Perm::from_cycles("(0 1)", 3)) == 1);

    // H not a subgroup of G
    CHECK_THROWS_AS(fixed_cosets(a5, generate({Perm::from_cycles("(0 1)", 5)}), c),
                    std::invalid_argument);
}

TEST_CASE("fixed_cosets(G, H, id) = [G:H] for random subgroups") {
    std::mt19937_64 rng(32);
    GroupTable s4 = generate({Perm::from_cycles("(0 1 2 3)", 4), Perm::from_cycles("(0 1)", 4)});
    GroupTable s5 = make_s5();
    for (const GroupTable& g : {s4, s5}) {
        std::uniform_int_distribution<size_t> pick(0, static_cast<size_t>(g.order() - 1));
        for (int i = 0; i < 60; ++i) {
            GroupTable h = generate({g.elements()[pick(rng)], g.elements()[pick(rng)]});
            CHECK(fixed_cosets(g, h, Perm::identity(g.points())) == g.order() / h.order());
        }
    }
}

TEST_CASE("fixed_cosets(G, <c>, c) = |centralizer|/2 for involutions in A_5") {
    GroupTable a5 = make_a5();
    int involutions = 0;
    for (const Perm& c : a5.elements()) {
        if (!c.is_involution()) continue;
        ++involutions;
        GroupTable h = generate({c});
        CHECK(h.order() == 2);
        CHECK(fixed_cosets(a5, h, c) == centralizer(a5, c).order() / 2);
    }
    CHECK(involutions == 15);
}

TEST_CASE("is_simple") {
    CHECK(is_simple(make_a5()));
    CHECK_FALSE(is_simple(make_s5()));
    CHECK_FALSE(is_simple(generate({Perm::from_cycles("(0 1 2 3)", 4)})));  // C_4
    CHECK(is_simple(generate({Perm::from_cycles("(0 1 2 3 4)", 5)})));      // C_5
    CHECK_FALSE(is_simple(generate({Perm::identity(3)})));
}

TEST_CASE("normal_subgroups") {
    auto s5_normals = normal_subgroups(make_s5());
    REQUIRE(s5_normals.size() == 3);
    CHECK(s5_normals[0].order() == 1);
    CHECK(s5_normals[1].order() == 60);
    CHECK(s5_normals[2].order() == 120);

    auto a5_normals = normal_subgroups(make_a5());
    REQUIRE(a5_normals.size() == 2);
    CHECK(a5_normals[0].order() == 1);
    CHECK(a5_normals[1].order() == 60);

    GroupTable s4 = generate({Perm::from_cycles("(0 1 2 3)", 4), Perm::from_cycles("(0 1)", 4)});
    auto s4_normals = normal_subgroups(s4);
    REQUIRE(s4_normals.size() == 4);  // 1, V_4, A_4, S_4
    CHECK(s4_normals[1].order() == 4);
    CHECK(s4_normals[2].order() == 12);
}

TEST_CASE("classify_quintic_galois") {
    const IntPoly f{1, 0, 0, 1, 0, 1};
    QuinticEvidence ev = gather_quintic_evidence(f);
    REQUIRE(ev.irreducible_prime.has_value());
    CHECK(*ev.irreducible_prime == 2);
    QuinticVerdict v = classify_quintic_galois(ev);
    CHECK(v.provably_s5);
    REQUIRE(v.transposition_prime.has_value());
    CHECK(*v.transposition_prime == 5);

    // x^5 - 2: Frobenius types live in F_20, never a transposition pattern
    const IntPoly g{-2, 0, 0, 0, 0, 1};
    QuinticEvidence evg = gather_quintic_evidence(g);
    REQUIRE(evg.irreducible_prime.has_value());
    QuinticVerdict vg = classify_quintic_galois(evg);
    CHECK_FALSE(vg.provably_s5);
    for (const auto& [p, pat] : evg.patterns) {
        CHECK(pat != DegreePattern{1, 1, 1, 2});
        CHECK(pat != DegreePattern{2, 3});
    }

    // no irreducibility witness -> precondition fails
    QuinticEvidence bad;
    bad.patterns = {{7, {5}}};
    CHECK_THROWS_AS(classify_quintic_galois(bad), std::invalid_argument);

    // only {5} patterns is inconclusive
    QuinticEvidence only5;
    only5.irreducible_prime = 7;
    only5.patterns = {{7, {5}}, {11, {5}}};
    CHECK_FALSE(classify_quintic_galois(only5).provably_s5);

    // reducible input: x^5 - 1 has no witness, gather-then-classify throws
    QuinticEvidence evr = gather_quintic_evidence(IntPoly{-1, 0, 0, 0, 0, 1});
    CHECK_FALSE(evr.irreducible_prime.has_value());
    CHECK_THROWS_AS(classify_quintic_galois(evr), std::invalid_argument);
}
