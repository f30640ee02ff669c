// tree.cpp : parsing and serializing bracketed trees

#include "subcat/tree.hpp"

#include <fstream>
#include <sstream>

#include "subcat/errors.hpp"

namespace subcat {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t column = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }
};

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

void skip_ws(Cursor& c) {
    while (!c.eof() && is_space(c.peek())) c.advance();
}

// At bracket depth 0 a ';' starts a comment running to end of line.
void skip_between_trees(Cursor& c) {
    for (;;) {
        skip_ws(c);
        if (c.eof() || c.peek() != ';') return;
        while (!c.eof() && c.peek() != '\n') c.advance();
    }
}

// Bracket balance is checked before structure so that a truncated or
// over-closed document is reported as UnbalancedBrackets no matter what
// else is wrong. Escapes and top-level comments follow the same lexical
// rules as the parser proper.
void check_balance(std::string_view text) {
    Cursor c{text};
    long depth = 0;
    while (!c.eof()) {
        char ch = c.peek();
        if (ch == '\\') {
            c.advance();
            if (!c.eof()) c.advance();
            continue;
        }
        if (depth == 0 && ch == ';') {
            while (!c.eof() && c.peek() != '\n') c.advance();
            continue;
        }
        if (ch == '(') {
            ++depth;
        } else if (ch == ')') {
            --depth;
            if (depth < 0)
                throw UnbalancedBrackets("unmatched ')'", c.pos, c.line, c.column);
        }
        c.advance();
    }
    if (depth > 0)
        throw UnbalancedBrackets("unclosed '(' at end of input", c.pos, c.line, c.column);
}

struct Atom {
    std::string text;
    std::size_t offset;
    std::size_t line;
    std::size_t column;
};

Atom read_atom(Cursor& c) {
    Atom atom{{}, c.pos, c.line, c.column};
    while (!c.eof()) {
        char ch = c.peek();
        if (ch == '\\') {
            c.advance();
            if (c.eof()) break;
            atom.text += c.peek();
            c.advance();
            continue;
        }
        if (is_space(ch) || ch == '(' || ch == ')') break;
        atom.text += ch;
        c.advance();
    }
    return atom;
}

TreeNode parse_node(Cursor& c) {
    const std::size_t open_off = c.pos;
    const std::size_t open_line = c.line;
    const std::size_t open_col = c.column;
    c.advance();  // consume '('
    skip_ws(c);
    if (c.eof())
        throw UnbalancedBrackets("unclosed '('", c.pos, c.line, c.column);
    if (c.peek() == ')')
        throw EmptyTree("empty node '()'", open_off, open_line, open_col);
    if (c.peek() == '(')
        throw EmptyTree("node has no label", c.pos, c.line, c.column);

    TreeNode node;
    node.label = read_atom(c).text;

    std::vector<Atom> tokens;
    for (;;) {
        skip_ws(c);
        if (c.eof())
            throw UnbalancedBrackets("unclosed '('", c.pos, c.line, c.column);
        char ch = c.peek();
        if (ch == ')') {
            c.advance();
            break;
        }
        if (ch == '(') {
            node.children.push_back(parse_node(c));
        } else {
            tokens.push_back(read_atom(c));
        }
    }

    if (node.children.empty()) {
        if (tokens.empty())
            throw EmptyTree("node '" + node.label + "' has no content", open_off, open_line,
                            open_col);
        if (tokens.size() > 1)
            throw LeafWithoutTag("bare token '" + tokens[1].text + "' needs its own tag",
                                 tokens[1].offset, tokens[1].line, tokens[1].column);
        node.token = std::move(tokens.front().text);
    } else if (!tokens.empty()) {
        throw LeafWithoutTag("bare token '" + tokens[0].text + "' needs its own tag",
                             tokens[0].offset, tokens[0].line, tokens[0].column);
    }
    return node;
}

void escape_atom(const std::string& atom, std::string& out) {
    for (char ch : atom) {
        if (ch == '(' || ch == ')' || ch == '\\' || ch == ';') out += '\\';
        out += ch;
    }
}

void serialize_node(const TreeNode& node, std::string& out) {
    out += '(';
    escape_atom(node.label, out);
    if (node.is_leaf()) {
        out += ' ';
        escape_atom(node.token.value_or(""), out);
    } else {
        for (const TreeNode& child : node.children) {
            out += ' ';
            serialize_node(child, out);
        }
    }
    out += ')';
}

}  // namespace

std::size_t TreeNode::node_count() const {
    std::size_t n = 1;
    for (const TreeNode& child : children) n += child.node_count();
    return n;
}

std::size_t TreeNode::depth() const {
    std::size_t deepest = 0;
    for (const TreeNode& child : children) deepest = std::max(deepest, child.depth());
    return deepest + 1;
}

std::vector<TreeNode> parse_bracketed(std::string_view text) {
    check_balance(text);
    Cursor c{text};
    std::vector<TreeNode> trees;
    for (;;) {
        skip_between_trees(c);
        if (c.eof()) break;
        char ch = c.peek();
        if (ch == ')')
            throw UnbalancedBrackets("unmatched ')'", c.pos, c.line, c.column);
        if (ch != '(') {
            Atom stray = read_atom(c);
            throw LeafWithoutTag("token '" + stray.text + "' outside any tree", stray.offset,
                                 stray.line, stray.column);
        }
        trees.push_back(parse_node(c));
    }
    return trees;
}

std::string serialize(const TreeNode& node) {
    std::string out;
    serialize_node(node, out);
    return out;
}

std::string serialize(const std::vector<TreeNode>& trees) {
    std::string out;
    for (const TreeNode& tree : trees) {
        serialize_node(tree, out);
        out += '\n';
    }
    return out;
}

std::vector<TreeNode> read_treebank_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open treebank file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_bracketed(buffer.str());
}

std::string surface_part(const std::string& token) {
    std::size_t pos = token.find('|');
    return pos == std::string::npos ? token : token.substr(0, pos);
}

std::optional<std::string> lemma_part(const std::string& token) {
    std::size_t pos = token.find('|');
    if (pos == std::string::npos || pos + 1 >= token.size()) return std::nullopt;
    return token.substr(pos + 1);
}

}  // namespace subcat
