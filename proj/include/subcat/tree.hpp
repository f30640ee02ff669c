// tree.hpp : bracketed constituency trees and their text form

#ifndef SUBCAT_TREE_HPP
#define SUBCAT_TREE_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subcat {

// One node of a constituency parse. A leaf is a tagged token: its label is
// the POS tag and token holds the surface string. token is present iff
// children is empty.
struct TreeNode {
    std::string label;
    std::vector<TreeNode> children;
    std::optional<std::string> token;

    bool is_leaf() const { return children.empty(); }
    std::size_t node_count() const;
    std::size_t depth() const;

    friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

// Parses a document of parenthesized trees, one or more per document.
// Blank lines and ';'-prefixed comments between trees are skipped. Atoms
// may escape '(' ')' '\' and ';' with a backslash. Throws
// UnbalancedBrackets / EmptyTree / LeafWithoutTag with positions.
std::vector<TreeNode> parse_bracketed(std::string_view text);

// Canonical single-line form: "(LABEL child ...)" with single spaces.
// serialize(parse(x)) is a fixpoint for any well-formed x.
std::string serialize(const TreeNode& node);
std::string serialize(const std::vector<TreeNode>& trees);  // one tree per line

std::vector<TreeNode> read_treebank_file(const std::filesystem::path& path);

// A leaf token may carry a lemma after '|' ("qAla|qAl"). These accessors
// split that convention; tokens without '|' have no lemma part.
std::string surface_part(const std::string& token);
std::optional<std::string> lemma_part(const std::string& token);

}  // namespace subcat

#endif  // SUBCAT_TREE_HPP
