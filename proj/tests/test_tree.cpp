// test_tree.cpp : bracketed tree parsing and serialization

#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "subcat/errors.hpp"
#include "subcat/tree.hpp"
#include "subcat/util.hpp"

using namespace subcat;

namespace {
const std::filesystem::path kFixtures = SUBCAT_FIXTURE_DIR;
}

TEST_SUITE("tree") {

TEST_CASE("minimal well-formed tree") {
    std::vector<TreeNode> trees = parse_bracketed("(S (NP (NN dog)))");
    REQUIRE(trees.size() == 1);
    const TreeNode& root = trees[0];
    CHECK(root.label == "S");
    REQUIRE(root.children.size() == 1);
    const TreeNode& np = root.children[0];
    CHECK(np.label == "NP");
    REQUIRE(np.children.size() == 1);
    const TreeNode& leaf = np.children[0];
    CHECK(leaf.label == "NN");
    CHECK(leaf.is_leaf());
    CHECK(leaf.token == "dog");
    CHECK(root.node_count() == 3);
    CHECK(root.depth() == 3);
}

TEST_CASE("unbalanced input reports the offset") {
    try {
        parse_bracketed("((S");
        FAIL("expected UnbalancedBrackets");
    } catch (const UnbalancedBrackets& e) {
        CHECK(e.offset == 3);
        CHECK(e.line == 1);
    }
    CHECK_THROWS_AS(parse_bracketed("(A (B b)))"), UnbalancedBrackets);
    CHECK_THROWS_AS(parse_bracketed(")"), UnbalancedBrackets);
}

TEST_CASE("structure errors carry line and column") {
    CHECK_THROWS_AS(parse_bracketed("()"), EmptyTree);
    CHECK_THROWS_AS(parse_bracketed("(NP)"), EmptyTree);
    CHECK_THROWS_AS(parse_bracketed("((S (NN x)))"), EmptyTree);  // node without a label
    CHECK_THROWS_AS(parse_bracketed("(NN dog cat)"), LeafWithoutTag);
    CHECK_THROWS_AS(parse_bracketed("(NP dog (NN cat))"), LeafWithoutTag);
    CHECK_THROWS_AS(parse_bracketed("stray"), LeafWithoutTag);

    try {
        parse_bracketed("(S\n  (NN dog cat))");
        FAIL("expected LeafWithoutTag");
    } catch (const LeafWithoutTag& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 1);
    }
}

TEST_CASE("blank lines and comments between trees") {
    std::string doc =
        "; a comment\n"
        "(S (NN a))\n"
        "\n"
        "(S (NP (NN b)) (VP (PV c)))\n"
        "; trailing comment\n"
        "(VP (IV d))\n";
    std::vector<TreeNode> trees = parse_bracketed(doc);
    REQUIRE(trees.size() == 3);
    CHECK(trees[0].node_count() == 2);
    CHECK(trees[1].node_count() == 5);
    CHECK(trees[2].node_count() == 2);
}

TEST_CASE("empty document parses to no trees") {
    CHECK(parse_bracketed("").empty());
    CHECK(parse_bracketed("  \n ; only a comment\n").empty());
}

TEST_CASE("escaped parentheses round-trip") {
    std::vector<TreeNode> trees = parse_bracketed("(S (PUNC \\() (NN x) (PUNC \\)))");
    REQUIRE(trees.size() == 1);
    CHECK(trees[0].children[0].token == "(");
    CHECK(trees[0].children[2].token == ")");
    std::string text = serialize(trees[0]);
    CHECK(text == "(S (PUNC \\() (NN x) (PUNC \\)))");
    CHECK(parse_bracketed(text).at(0) == trees[0]);
}

TEST_CASE("fixture file of three trees matches hand counts") {
    std::string doc =
        "(S (NP (NN a)) (VP (PV b)))\n"
        "\n"
        "(S (VP (PV x) (NP (NN y)) (PP (IN z) (NP (NN w)))))\n"
        "\n"
        "(NN q)\n";
    std::vector<TreeNode> trees = parse_bracketed(doc);
    REQUIRE(trees.size() == 3);
    CHECK(trees[0].node_count() == 5);
    CHECK(trees[1].node_count() == 9);
    CHECK(trees[2].node_count() == 1);
}

TEST_CASE("serialize then parse is the identity on random trees") {
    std::mt19937 rng(20260809);
    for (int i = 0; i < 200; ++i) {
        TreeNode tree = gen::random_tree(rng);
        std::string once = serialize(tree);
        std::vector<TreeNode> reparsed = parse_bracketed(once);
        REQUIRE(reparsed.size() == 1);
        CHECK(reparsed[0] == tree);
        CHECK(serialize(reparsed[0]) == once);  // fixpoint after one normalization
    }
}

TEST_CASE("whitespace normalization is idempotent") {
    std::string messy = "(S(NP (NN dog)  )\n (VP (PV barks)))";
    std::vector<TreeNode> first = parse_bracketed(messy);
    std::string canon = serialize(first.at(0));
    CHECK(canon == "(S (NP (NN dog)) (VP (PV barks)))");
    CHECK(serialize(parse_bracketed(canon).at(0)) == canon);
}

TEST_CASE("fixture treebanks round-trip") {
    for (const char* name : {"mini.tb", "synthetic.tb"}) {
        std::vector<TreeNode> trees = read_treebank_file(kFixtures / name);
        REQUIRE(!trees.empty());
        std::string canon = serialize(trees);
        std::vector<TreeNode> reparsed = parse_bracketed(canon);
        CHECK(reparsed == trees);
        CHECK(serialize(reparsed) == canon);
    }
}

TEST_CASE("lemma convention on leaf tokens") {
    CHECK(surface_part("qAla|qAl") == "qAla");
    CHECK(lemma_part("qAla|qAl") == "qAl");
    CHECK(surface_part("qAla") == "qAla");
    CHECK(!lemma_part("qAla").has_value());
    CHECK(!lemma_part("qAla|").has_value());
}

}  // TEST_SUITE
