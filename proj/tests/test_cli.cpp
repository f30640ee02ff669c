// test_cli.cpp : end-to-end runs of the command-line front end

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "subcat/cli.hpp"
#include "subcat/tree.hpp"
#include "subcat/util.hpp"

using namespace subcat;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = SUBCAT_FIXTURE_DIR;

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("subcat_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) { return read_file(path); }

nlohmann::json slurp_json(const std::string& path) {
    return nlohmann::json::parse(read_file(path));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("extract-treebank matches the oracle-built golden file byte for byte") {
    TempDir tmp;
    std::string out = tmp.file("lex.tsv");
    int code = run({"extract-treebank", "--in", (kFixtures / "mini.tb").string(), "--out", out});
    REQUIRE(code == 0);

    std::string golden = slurp((kFixtures / "golden" / "mini_lex.tsv").string());
    CHECK(slurp(out) == golden);

    // the checked-in golden file itself must match the brute-force oracle
    std::vector<TreeNode> trees = read_treebank_file(kFixtures / "mini.tb");
    oracle::Extraction want = oracle::extract(trees, ExtractionConfig{});
    CHECK(oracle::lexicon_tsv(want, "mini.tb") == golden);
}

TEST_CASE("extract-treebank census and instances") {
    TempDir tmp;
    int code = run({"extract-treebank", "--in", (kFixtures / "mini.tb").string(),
                    "--out", tmp.file("lex.tsv"), "--census", tmp.file("census.json"),
                    "--instances", tmp.file("inst.tsv")});
    REQUIRE(code == 0);

    nlohmann::json census = slurp_json(tmp.file("census.json"));
    CHECK(census["sentences"] == 5);
    CHECK(census["verb_phrases"] == 6);
    CHECK(census["verb_phrases_with_verb"] == 5);
    CHECK(census["skipped_verb_phrases"] == 1);
    CHECK(census["coverage"] == 0.83);
    CHECK(census["unique_stems"] == 3);

    std::string instances = slurp(tmp.file("inst.tsv"));
    CHECK(instances.find("0\tqAl\tPV\tSBAR\t1\n") != std::string::npos);
    CHECK(instances.find("3\tkatab\tIV_PASS\tNP-SBJ\t-\n") != std::string::npos);
}

TEST_CASE("extract-treebank restricted to single-VP sentences") {
    TempDir tmp;
    int code = run({"extract-treebank", "--in", (kFixtures / "mini.tb").string(),
                    "--out", tmp.file("single.tsv"), "--single-vp-only", "--filter-stats",
                    tmp.file("fs.json"), "--source", "mini.tb"});
    REQUIRE(code == 0);

    // the nested-VP sentence drops out, so its qAl+Eamil instances go too
    CHECK(slurp(tmp.file("single.tsv")) ==
          "# subcat-lexicon\tmode=INTEGER\tprovenance=TREEBANK\tsource=mini.tb\n"
          "katab\tNP-OBJ+NP-SBJ\t1\t0.500000\n"
          "katab\tNP-SBJ\t1\t0.500000\n"
          "qAl\tSBAR\t1\t1.000000\n");

    nlohmann::json stats = slurp_json(tmp.file("fs.json"));
    CHECK(stats["total_sentences"] == 5);
    CHECK(stats["single_verb_sentences"] == 4);
    CHECK(stats["unique_stems_total"] == 3);
    CHECK(stats["unique_stems_single"] == 2);

    // without the flag, requesting filter stats is a usage error
    CHECK(run({"extract-treebank", "--in", (kFixtures / "mini.tb").string(), "--out",
               tmp.file("x.tsv"), "--filter-stats", tmp.file("y.json")}) == 1);
}

TEST_CASE("missing subcommand is a usage error") {
    CHECK(run(std::vector<std::string>{}) == 1);
    CHECK(run({"no-such-subcommand"}) == 1);
    CHECK(run({"extract-treebank"}) == 1);  // missing required options
}

TEST_CASE("parse failures exit with the data-error code and leave no output") {
    TempDir tmp;
    std::string bad = tmp.file("bad.tb");
    std::ofstream(bad) << "((S\n";
    std::string out = tmp.file("never.tsv");
    CHECK(run({"extract-treebank", "--in", bad, "--out", out}) == 2);
    CHECK(!fs::exists(out));
    CHECK(!fs::exists(out + ".tmp"));

    CHECK(run({"extract-treebank", "--in", tmp.file("enoent.tb"), "--out", out}) == 2);
}

TEST_CASE("filter reports the fixture fractions") {
    TempDir tmp;
    int code = run({"filter", "--in", (kFixtures / "corpus10.txt").string(), "--lexicon",
                    (kFixtures / "analyzer.tsv").string(), "--out", tmp.file("retained.txt"),
                    "--stats", tmp.file("stats.json")});
    REQUIRE(code == 0);

    nlohmann::json stats = slurp_json(tmp.file("stats.json"));
    CHECK(stats["total_sentences"] == 10);
    CHECK(stats["single_verb_sentences"] == 3);
    CHECK(stats["fraction_single"] == 0.30);
    CHECK(stats["unique_stems_total"] == 4);
    CHECK(stats["unique_stems_single"] == 3);
    CHECK(stats["fraction_stems"] == 0.75);

    CHECK(slurp(tmp.file("retained.txt")) ==
          "Alwaladu qAla kitAbAF\nyaktubu Alwaladu kitAbAF\nwaqaychu Alwaladu\n");
}

TEST_CASE("filter in noise mode applies the binomial test") {
    TempDir tmp;
    std::string lex = tmp.file("lex.tsv");
    {
        std::ofstream out(lex);
        out << "# subcat-lexicon\tmode=INTEGER\tprovenance=TREEBANK\tsource=x\n";
        out << "v\tMAIN\t89\t0.890000\n";
        out << "v\tRARE\t1\t0.010000\n";
        out << "v\tREAL\t10\t0.100000\n";
    }
    std::string out = tmp.file("filtered.tsv");
    REQUIRE(run({"filter", "--in-lexicon", lex, "--out", out, "--eps", "0.02", "--alpha",
                 "0.05"}) == 0);
    std::string text = slurp(out);
    CHECK(text.find("RARE") == std::string::npos);
    CHECK(text.find("MAIN") != std::string::npos);
    CHECK(text.find("REAL") != std::string::npos);

    CHECK(run({"filter", "--in", "x", "--in-lexicon", lex, "--out", out}) == 1);
    CHECK(run({"filter", "--out", out}) == 1);
}

TEST_CASE("extract-raw builds the case lexicon") {
    TempDir tmp;
    std::string out = tmp.file("raw.tsv");
    int code = run({"extract-raw", "--in", (kFixtures / "corpus10.txt").string(), "--lexicon",
                    (kFixtures / "analyzer.tsv").string(), "--out", out, "--filter-stats",
                    tmp.file("fs.json"), "--retained", tmp.file("kept.txt"), "--source",
                    "corpus10.txt"});
    REQUIRE(code == 0);

    CHECK(slurp(out) ==
          "# subcat-lexicon\tmode=INTEGER\tprovenance=RAW_CASE\tsource=corpus10.txt\n"
          "katab\tOBJ+SUBJ\t1\t1.000000\n"
          "qAl\tOBJ+SUBJ\t1\t1.000000\n"
          "waqa\tSUBJ\t1\t1.000000\n");

    nlohmann::json stats = slurp_json(tmp.file("fs.json"));
    CHECK(stats["fraction_single"] == 0.30);
    CHECK(stats["ambiguous_case_frames"] == 0);
}

TEST_CASE("ambiguity-stats over the fixture corpus") {
    TempDir tmp;
    std::string out = tmp.file("amb.json");
    int code = run({"ambiguity-stats", "--in", (kFixtures / "corpus10.txt").string(),
                    "--lexicon", (kFixtures / "analyzer.tsv").string(), "--out", out,
                    "--hist", tmp.file("amb.txt")});
    REQUIRE(code == 0);
    nlohmann::json report = slurp_json(out);
    CHECK(report["token_count"] == 26);
    CHECK(report["max"] == 2);
    // waqaychu is the only two-analysis surface in the corpus
    CHECK(report["max_tokens"] == nlohmann::json::array({"waqaychu"}));
    std::string hist = slurp(tmp.file("amb.txt"));
    CHECK(hist.find("analyses\ttokens\n") == 0);
}

TEST_CASE("compare scores candidate against gold and writes the shift") {
    TempDir tmp;
    std::string cand = tmp.file("cand.tsv");
    std::string gold = tmp.file("gold.tsv");
    {
        std::ofstream out(cand);
        out << "# subcat-lexicon\tmode=INTEGER\tprovenance=TREEBANK\tsource=c\n";
        out << "v\tF1\t1\t0.500000\n";
        out << "v\tF2\t1\t0.500000\n";
    }
    {
        std::ofstream out(gold);
        out << "# subcat-lexicon\tmode=INTEGER\tprovenance=TREEBANK\tsource=g\n";
        out << "v\tF1\t1\t0.500000\n";
        out << "v\tF3\t1\t0.500000\n";
    }
    int code = run({"compare", "--candidate", cand, "--gold", gold, "--out",
                    tmp.file("eval.json"), "--table", tmp.file("eval.txt"), "--divergence",
                    tmp.file("div.json"), "--shift-stem", "v", "--shift-out",
                    tmp.file("shift.json")});
    REQUIRE(code == 0);

    nlohmann::json eval = slurp_json(tmp.file("eval.json"));
    CHECK(eval["mode"] == "FRAME_TYPE");
    CHECK(eval["precision"] == 0.5);
    CHECK(eval["recall"] == 0.5);
    CHECK(eval["f1"] == 0.5);

    nlohmann::json divergence = slurp_json(tmp.file("div.json"));
    CHECK(divergence["js_divergence"] == 0.0);  // same single stem on both sides

    nlohmann::json shift = slurp_json(tmp.file("shift.json"));
    CHECK(shift["stem"] == "v");
    CHECK(shift["frames"]["F3"]["delta"] == 0.5);  // gold-only usage

    CHECK(run({"compare", "--candidate", cand, "--gold", gold, "--out",
               tmp.file("e2.json"), "--shift-stem", "v"}) == 1);  // --shift-out required
}

TEST_CASE("report renders whatever inputs it is given") {
    TempDir tmp;
    std::string lex = tmp.file("lex.tsv");
    REQUIRE(run({"extract-treebank", "--in", (kFixtures / "mini.tb").string(), "--out", lex,
                 "--census", tmp.file("census.json")}) == 0);
    REQUIRE(run({"filter", "--in", (kFixtures / "corpus10.txt").string(), "--lexicon",
                 (kFixtures / "analyzer.tsv").string(), "--stats", tmp.file("fs.json")}) == 0);

    int code = run({"report", "--census", tmp.file("census.json"), "--filter-stats",
                    tmp.file("fs.json"), "--lexicon", lex, "--top-k", "3", "--out",
                    tmp.file("report.md")});
    REQUIRE(code == 0);
    std::string text = slurp(tmp.file("report.md"));
    CHECK(text.find("# Verb subcategorization report") == 0);
    CHECK(text.find("| sentences | 5 |") != std::string::npos);
    CHECK(text.find("0.3") != std::string::npos);
    CHECK(text.find("qAl") != std::string::npos);
}

TEST_CASE("filter with --split-sentences segments unsegmented text") {
    TempDir tmp;
    std::string corpus = tmp.file("blob.txt");
    std::ofstream(corpus) << "Alwaladu qAla kitAbAF. qAla kataba. yaktubu Alwaladu kitAbAF.\n";
    REQUIRE(run({"filter", "--in", corpus, "--lexicon",
                 (kFixtures / "analyzer.tsv").string(), "--split-sentences", "--stats",
                 tmp.file("stats.json")}) == 0);
    nlohmann::json stats = slurp_json(tmp.file("stats.json"));
    CHECK(stats["total_sentences"] == 3);
    CHECK(stats["single_verb_sentences"] == 2);
}

TEST_CASE("config file supplies subcommand options") {
    TempDir tmp;
    std::string config = tmp.file("run.ini");
    {
        std::ofstream out(config);
        out << "[filter]\n";
        out << "in = \"" << (kFixtures / "corpus10.txt").string() << "\"\n";
        out << "lexicon = \"" << (kFixtures / "analyzer.tsv").string() << "\"\n";
        out << "stats = \"" << tmp.file("stats.json") << "\"\n";
    }
    REQUIRE(run({"--config", config, "filter"}) == 0);
    CHECK(slurp_json(tmp.file("stats.json"))["single_verb_sentences"] == 3);
}

TEST_CASE("reruns are byte-identical and workers do not change output") {
    TempDir tmp;
    auto run_once = [&](const std::string& suffix, const char* workers) {
        ::setenv("SUBCAT_WORKERS", workers, 1);
        std::string out = tmp.file("lex_" + suffix + ".tsv");
        REQUIRE(run({"extract-treebank", "--in", (kFixtures / "synthetic.tb").string(),
                     "--out", out, "--census", tmp.file("census_" + suffix + ".json"),
                     "--source", "synthetic.tb"}) == 0);
        ::unsetenv("SUBCAT_WORKERS");
        return slurp(out) + slurp(tmp.file("census_" + suffix + ".json"));
    };
    std::string one_a = run_once("one_a", "1");
    std::string one_b = run_once("one_b", "1");
    std::string eight = run_once("eight", "8");
    CHECK(one_a == one_b);
    CHECK(one_a == eight);
}

}  // TEST_SUITE
