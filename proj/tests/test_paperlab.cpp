#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "heightlab/json_io.hpp"
#include "heightlab/paperlab.hpp"
#include "test_support.hpp"

using namespace heightlab;

namespace {

const TranscriptStep* find_step(const Transcript& tr, const std::string& id) {
    for (const auto& s : tr.steps)
        if (s.id == id) return &s;
    return nullptr;
}

}  // namespace

TEST_CASE("small-height sequence transcript") {
    Transcript tr = run_small_height_sequence(12);
    CHECK(tr.pass());
    CHECK(tr.asserted_count() == 0);
    REQUIRE(tr.table.size() == 12);
    CHECK(std::abs(std::stod(tr.table[0][2]) - 0.80471895621705025) < 1e-9);
    CHECK(std::abs(std::stod(tr.table[4][2]) - 0.16094379124341004) < 1e-9);
    CHECK(std::abs(std::stod(tr.table[11][2]) - 0.067059913018087516) < 1e-9);
    const TranscriptStep* below = find_step(tr, "below-gap");
    REQUIRE(below != nullptr);
    CHECK(below->ok);
    CHECK(below->evidence.find("n = 4") != std::string::npos);

    CHECK_THROWS_AS(run_small_height_sequence(0), std::invalid_argument);
    CHECK_THROWS_AS(run_small_height_sequence(13), std::invalid_argument);
}

TEST_CASE("example1 pipeline passes with exactly two asserted steps") {
    Transcript tr = run_example1_pipeline();
    CHECK(tr.pass());
    CHECK(tr.asserted_count() == 2);

    const TranscriptStep* disc = find_step(tr, "discriminant");
    REQUIRE(disc != nullptr);
    CHECK(disc->ok);
    CHECK(disc->evidence.find("3233") != std::string::npos);

    const TranscriptStep* cosets = find_step(tr, "fixed-cosets");
    REQUIRE(cosets != nullptr);
    CHECK(cosets->ok);

    const TranscriptStep* bound = find_step(tr, "height-bound");
    REQUIRE(bound != nullptr);
    CHECK(bound->ok);
    CHECK(bound->status == StepStatus::VerifiedNumeric);

    // the two asserted steps are the normality inference and the embedding model
    const TranscriptStep* normality = find_step(tr, "normality-inference");
    const TranscriptStep* model = find_step(tr, "embedding-model");
    REQUIRE(normality != nullptr);
    REQUIRE(model != nullptr);
    CHECK(normality->status == StepStatus::AssertedFromPaper);
    CHECK(model->status == StepStatus::AssertedFromPaper);
}

TEST_CASE("example1 JSON is deterministic") {
    std::string a = transcript_json(run_example1_pipeline()).dump(2);
    std::string b = transcript_json(run_example1_pipeline()).dump(2);
    CHECK(a == b);
    CHECK(a.find("heightlab/1") != std::string::npos);
}

TEST_CASE("example2 pipeline for p = 2, 3, 5") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        Transcript tr = run_example2_pipeline(p);
        CHECK(tr.pass());
        CHECK(tr.asserted_count() == 0);
    }
    CHECK_THROWS_AS(run_example2_pipeline(4), std::invalid_argument);
}

TEST_CASE("schinzel suite over the default corpus") {
    std::vector<IntPoly> corpus = default_schinzel_corpus();
    CHECK(corpus.size() > 50);
    // the corpus contains the golden-ratio polynomial and the cyclotomics
    bool has_golden = false;
    for (const IntPoly& f : corpus)
        if (f == IntPoly{-1, -1, 1}) has_golden = true;
    CHECK(has_golden);

    Transcript tr = run_schinzel_suite(corpus);
    CHECK(tr.pass());
    CHECK(tr.table.size() == corpus.size());
}

TEST_CASE("bound report") {
    Transcript tr = run_bound_report(IntPoly{-2, 0, 1}, false);
    CHECK(tr.pass());
    const TranscriptStep* bound = find_step(tr, "height-bound");
    REQUIRE(bound != nullptr);
    CHECK(bound->claim.find("C = 1") != std::string::npos);

    Transcript tr2 = run_bound_report(IntPoly{1, 0, 0, 1, 0, 1}, false);
    CHECK(tr2.pass());
    const TranscriptStep* b2 = find_step(tr2, "height-bound");
    REQUIRE(b2 != nullptr);
    CHECK(b2->claim.find("C = 1/5") != std::string::npos);

    CHECK_THROWS_AS(run_bound_report(IntPoly{1, 0, 1}, false), std::invalid_argument);
}

TEST_CASE("transcript JSON shape") {
    Transcript tr = run_example2_pipeline(2);
    auto j = transcript_json(tr);
    CHECK(j["schema"] == "heightlab/1");
    CHECK(j["scenario"] == "example2");
    CHECK(j["verdict"] == "pass");
    CHECK(j["steps"].is_array());
    CHECK(j["asserted_steps"] == 0);
    std::string text = render_transcript_text(tr);
    CHECK(text.find("verdict: pass") != std::string::npos);
}
