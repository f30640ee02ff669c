// test_evaluate.cpp : precision/recall, divergence, usage shift

#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "subcat/errors.hpp"
#include "subcat/evaluate.hpp"

using namespace subcat;

namespace {

FrameLexicon lexicon_of(const std::vector<std::tuple<std::string, Frame, double>>& rows) {
    FrameLexicon lexicon(WeightMode::Integer, Provenance::Treebank, "test");
    for (const auto& [stem, frame, count] : rows) lexicon.add(stem, frame, count);
    return lexicon;
}

std::map<std::string, double> stem_weights(const FrameLexicon& lexicon) {
    std::map<std::string, double> weights;
    for (const auto& [stem, frames] : lexicon.entries()) weights[stem] = lexicon.total(stem);
    return weights;
}

}  // namespace

TEST_SUITE("evaluate") {

TEST_CASE("identical lexica score 1 in every mode") {
    FrameLexicon lexicon = lexicon_of({{"v", Frame{"A"}, 3},
                                       {"v", Frame{"B"}, 1},
                                       {"w", Frame{"A", "B"}, 2}});
    for (EvalMode mode : {EvalMode::StemCoverage, EvalMode::FrameType, EvalMode::TokenWeighted}) {
        EvalReport report = precision_recall(lexicon, lexicon, mode);
        CHECK(report.precision == 1.0);
        CHECK(report.recall == 1.0);
        CHECK(report.f1 == 1.0);
    }
}

TEST_CASE("disjoint stems score 0") {
    FrameLexicon candidate = lexicon_of({{"only-mine", Frame{"A"}, 1}});
    FrameLexicon gold = lexicon_of({{"only-gold", Frame{"A"}, 1}});
    for (EvalMode mode : {EvalMode::StemCoverage, EvalMode::FrameType, EvalMode::TokenWeighted}) {
        EvalReport report = precision_recall(candidate, gold, mode);
        CHECK(report.precision == 0.0);
        CHECK(report.recall == 0.0);
        CHECK(report.f1 == 0.0);
    }
}

TEST_CASE("two-by-two partial overlap gives one half everywhere") {
    FrameLexicon candidate = lexicon_of({{"v", Frame{"F1"}, 1}, {"v", Frame{"F2"}, 1}});
    FrameLexicon gold = lexicon_of({{"v", Frame{"F1"}, 1}, {"v", Frame{"F3"}, 1}});
    EvalReport report = precision_recall(candidate, gold, EvalMode::FrameType);
    CHECK(report.precision == 0.5);
    CHECK(report.recall == 0.5);
    CHECK(report.f1 == 0.5);
    CHECK(report.true_positives == 1.0);
    CHECK(report.candidate_size == 2.0);
    CHECK(report.gold_size == 2.0);
    CHECK(report.per_stem.at("v").precision == 0.5);
    CHECK(report.per_stem.at("v").recall == 0.5);
}

TEST_CASE("token-weighted mode uses count mass") {
    FrameLexicon candidate = lexicon_of({{"v", Frame{"A"}, 4}, {"v", Frame{"B"}, 4}});
    FrameLexicon gold = lexicon_of({{"v", Frame{"A"}, 6}, {"v", Frame{"C"}, 2}});
    EvalReport report = precision_recall(candidate, gold, EvalMode::TokenWeighted);
    // shared mass = min(4,6) = 4, candidate total 8, gold total 8
    CHECK(report.precision == 0.5);
    CHECK(report.recall == 0.5);
}

TEST_CASE("empty sides are reported absent, not zero") {
    FrameLexicon empty;
    FrameLexicon gold = lexicon_of({{"v", Frame{"A"}, 1}});

    EvalReport report = precision_recall(empty, gold, EvalMode::FrameType);
    CHECK(!report.precision.has_value());  // 0/0 on the candidate side
    CHECK(report.recall == 0.0);
    CHECK(!report.f1.has_value());

    EvalReport reversed = precision_recall(gold, empty, EvalMode::FrameType);
    CHECK(reversed.precision == 0.0);
    CHECK(!reversed.recall.has_value());  // empty gold: recall is absent

    EvalReport both = precision_recall(empty, empty, EvalMode::FrameType);
    CHECK(both.precision == 1.0);
    CHECK(both.recall == 1.0);
    CHECK(both.f1 == 1.0);

    nlohmann::ordered_json obj = eval_json(report, 2);
    CHECK(obj["precision"].is_null());
    CHECK(obj["recall"] == 0.0);
}

TEST_CASE("swapping candidate and gold swaps precision and recall") {
    std::mt19937 rng(7777);
    for (int round = 0; round < 50; ++round) {
        FrameLexicon a = gen::random_lexicon(rng);
        FrameLexicon b = gen::random_lexicon(rng);
        for (EvalMode mode :
             {EvalMode::StemCoverage, EvalMode::FrameType, EvalMode::TokenWeighted}) {
            EvalReport forward = precision_recall(a, b, mode);
            EvalReport backward = precision_recall(b, a, mode);
            CHECK(forward.precision == backward.recall);
            CHECK(forward.recall == backward.precision);
        }
    }
}

TEST_CASE("divergence identities") {
    FrameLexicon lexicon = lexicon_of({{"v", Frame{"A"}, 3}, {"w", Frame{"B"}, 1}});
    DivergenceReport same = stem_distribution_divergence(lexicon, lexicon);
    CHECK(same.js_divergence == 0.0);
    CHECK(same.support_overlap == 1.0);
    CHECK(same.top_k_overlap.at(10) == 1.0);

    FrameLexicon other = lexicon_of({{"x", Frame{"A"}, 2}, {"y", Frame{"B"}, 2}});
    DivergenceReport disjoint = stem_distribution_divergence(lexicon, other);
    CHECK(disjoint.js_divergence == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(disjoint.support_overlap == 0.0);
    CHECK(disjoint.top_k_overlap.at(10) == 0.0);

    CHECK_THROWS_AS(stem_distribution_divergence(FrameLexicon{}, lexicon), EmptyLexicon);
    CHECK_THROWS_AS(stem_distribution_divergence(lexicon, FrameLexicon{}), EmptyLexicon);
}

TEST_CASE("three-to-one against one-to-three matches the direct formula") {
    FrameLexicon a = lexicon_of({{"x", Frame{"F"}, 3}, {"y", Frame{"F"}, 1}});
    FrameLexicon b = lexicon_of({{"x", Frame{"F"}, 1}, {"y", Frame{"F"}, 3}});
    DivergenceReport report = stem_distribution_divergence(a, b);
    double want = oracle::js_divergence(stem_weights(a), stem_weights(b));
    CHECK(report.js_divergence == doctest::Approx(want).epsilon(1e-9));
    CHECK(report.js_divergence > 0.0);
    CHECK(report.js_divergence < 1.0);
}

TEST_CASE("divergence is symmetric, bounded and matches the oracle on random lexica") {
    std::mt19937 rng(8888);
    for (int round = 0; round < 100; ++round) {
        FrameLexicon a = gen::random_lexicon(rng);
        FrameLexicon b = gen::random_lexicon(rng);
        DivergenceReport forward = stem_distribution_divergence(a, b);
        DivergenceReport backward = stem_distribution_divergence(b, a);
        CHECK(std::abs(forward.js_divergence - backward.js_divergence) <= 1e-12);
        CHECK(forward.js_divergence >= 0.0);
        CHECK(forward.js_divergence <= 1.0);
        double want = oracle::js_divergence(stem_weights(a), stem_weights(b));
        CHECK(forward.js_divergence == doctest::Approx(want).epsilon(1e-9));

        DivergenceReport self = stem_distribution_divergence(a, a);
        CHECK(std::abs(self.js_divergence) <= 1e-12);
    }
}

TEST_CASE("usage shift: frames absent from one side get zero frequency") {
    FrameLexicon full = lexicon_of({{"qAl", Frame{"SBAR"}, 6},
                                    {"qAl", Frame{"NP-OBJ"}, 2},
                                    {"qAl", Frame{"NP-OBJ", "NP-SBJ"}, 2}});
    FrameLexicon filtered = lexicon_of({{"qAl", Frame{"NP-OBJ"}, 3},
                                        {"qAl", Frame{"NP-OBJ", "NP-SBJ"}, 1}});

    std::map<Frame, FrameShift> shifts = usage_shift("qAl", full, filtered);
    REQUIRE(shifts.size() == 3);
    const FrameShift& sbar = shifts.at(Frame{"SBAR"});
    CHECK(sbar.full_freq == 0.6);
    CHECK(sbar.filtered_freq == 0.0);
    CHECK(sbar.delta == 0.6);  // delta equals the full-side frequency

    double delta_sum = 0.0;
    for (const auto& [frame, shift] : shifts) delta_sum += shift.delta;
    CHECK(std::abs(delta_sum) <= 1e-12);
}

TEST_CASE("usage shift: stem on one side only, identical sides, unknown stem") {
    FrameLexicon full = lexicon_of({{"v", Frame{"A"}, 2}, {"v", Frame{"B"}, 2}});
    FrameLexicon filtered = lexicon_of({{"w", Frame{"A"}, 1}});

    std::map<Frame, FrameShift> only_full = usage_shift("v", full, filtered);
    for (const auto& [frame, shift] : only_full) {
        CHECK(shift.filtered_freq == 0.0);
        CHECK(shift.delta == shift.full_freq);
    }

    std::map<Frame, FrameShift> identical = usage_shift("v", full, full);
    for (const auto& [frame, shift] : identical) CHECK(shift.delta == 0.0);

    CHECK_THROWS_AS(usage_shift("nowhere", full, filtered), UnknownStemBoth);
}

TEST_CASE("per-stem table is sorted by gold frequency") {
    FrameLexicon candidate = lexicon_of({{"rare", Frame{"A"}, 1}, {"common", Frame{"A"}, 1}});
    FrameLexicon gold = lexicon_of({{"rare", Frame{"A"}, 1},
                                    {"common", Frame{"A"}, 10},
                                    {"middling", Frame{"B"}, 5}});
    EvalReport report = precision_recall(candidate, gold, EvalMode::FrameType);
    std::ostringstream out;
    write_eval_table(out, report, gold, 2);
    std::string text = out.str();
    CHECK(text.find("common") < text.find("middling"));
    CHECK(text.find("middling") < text.find("rare"));
    CHECK(text.find("stem\tgold_total\tprecision\trecall\n") == 0);
}

TEST_CASE("divergence and shift JSON shapes") {
    FrameLexicon a = lexicon_of({{"x", Frame{"F"}, 3}, {"y", Frame{"F"}, 1}});
    FrameLexicon b = lexicon_of({{"x", Frame{"F"}, 1}, {"y", Frame{"F"}, 3}});
    nlohmann::ordered_json divergence = divergence_json(stem_distribution_divergence(a, b), 2);
    CHECK(divergence.contains("js_divergence"));
    CHECK(divergence.contains("js_divergence_exact"));
    CHECK(divergence["top_k_overlap"]["10"] == 1.0);  // same stems, same top set

    nlohmann::ordered_json shift = usage_shift_json("x", usage_shift("x", a, b));
    CHECK(shift["stem"] == "x");
    CHECK(shift["frames"]["F"]["delta"] == 0.0);  // x has only frame F on both sides
}

}  // TEST_SUITE
