#include "rgc/newick.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rgc/errors.hpp"

namespace rgc {

namespace {

bool is_delimiter(char c) {
    return c == '(' || c == ')' || c == ',' || c == ':' || c == ';' ||
           c == '[' || c == ']' || c == ' ' || c == '\t' || c == '\r' ||
           c == '\n' || c == '\0';
}

struct Node {
    std::string name;
    int parent = -1;
    int label = -1;  // label of the edge to the parent
    std::vector<int> children;
    int line = 0, col = 0;
};

struct Parser {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;
    std::optional<bool> marker = std::nullopt;
    std::vector<Node> nodes = {};

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    void advance() {
        if (pos >= text.size()) return;
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(line, col, "expected " + expected);
    }

    void skip_blanks() {
        while (true) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '[') {
                advance();
                std::string body;
                while (peek() != ']') {
                    if (peek() == '\0') fail("']'");
                    body += peek();
                    advance();
                }
                advance();
                if (body == "&R") marker = true;
                if (body == "&U") marker = false;
            } else {
                return;
            }
        }
    }

    std::string name_token() {
        std::string out;
        while (!is_delimiter(peek())) {
            out += peek();
            advance();
        }
        return out;
    }

    int parse_subtree(int parent) {
        skip_blanks();
        int self = static_cast<int>(nodes.size());
        nodes.push_back({});
        nodes[self].parent = parent;
        nodes[self].line = line;
        nodes[self].col = col;
        if (peek() == '(') {
            advance();
            while (true) {
                int child = parse_subtree(self);
                nodes[self].children.push_back(child);
                skip_blanks();
                if (peek() == ',') {
                    advance();
                    continue;
                }
                if (peek() == ')') {
                    advance();
                    break;
                }
                fail("',' or ')'");
            }
            skip_blanks();
            nodes[self].name = name_token();
        } else {
            nodes[self].name = name_token();
            if (nodes[self].name.empty()) fail("a taxon name or '('");
        }
        if (parent >= 0) {
            skip_blanks();
            if (peek() != ':')
                throw LabelError("line " + std::to_string(line) + ": vertex " +
                                 (nodes[self].name.empty() ? "(unnamed)"
                                                          : nodes[self].name) +
                                 " is missing its edge label");
            advance();
            int vl = line, vc = col;
            std::string value = name_token();
            if (value == "0" || value == "1") {
                nodes[self].label = value[0] - '0';
            } else {
                throw LabelError("line " + std::to_string(vl) + " col " +
                                 std::to_string(vc) + ": edge label '" + value +
                                 "' is not 0 or 1");
            }
        }
        return self;
    }

    void parse_tree() {
        skip_blanks();
        if (peek() == '\0') fail("a tree");
        parse_subtree(-1);
        skip_blanks();
        if (peek() != ';') fail("';'");
        advance();
        skip_blanks();
        if (peek() != '\0') fail("end of input after ';'");
    }
};

}  // namespace

LabeledTree parse_newick(const std::string& text, const ParseOptions& opts) {
    Parser p{text};
    p.parse_tree();
    const bool rooted = opts.rooted.value_or(p.marker.value_or(false));
    const int n = static_cast<int>(p.nodes.size());

    std::set<std::string> used;
    for (const Node& node : p.nodes)
        if (!node.name.empty() && !used.insert(node.name).second)
            throw ParseError(node.line, node.col,
                             "a fresh name, " + node.name + " is already taken");
    int counter = 0;
    for (Node& node : p.nodes) {
        if (node.children.empty()) {
            if (node.name.empty())
                throw ParseError(node.line, node.col, "a name for this leaf");
            if (has_inner_prefix(node.name))
                throw ParseError(node.line, node.col,
                                 "a taxon name without the reserved prefix " +
                                     kInnerPrefix);
            continue;
        }
        while (node.name.empty()) {
            std::string candidate = kInnerPrefix + std::to_string(++counter);
            if (used.insert(candidate).second) node.name = candidate;
        }
    }

    for (int v = 0; v < n; ++v) {
        const Node& node = p.nodes[v];
        if (node.children.empty()) continue;
        int degree = static_cast<int>(node.children.size()) + (v == 0 ? 0 : 1);
        if (v == 0 && rooted && n > 1 && degree < 2)
            throw DegreeError("the root needs at least two children");
        if (degree == 2 && !(v == 0 && n > 2))
            throw DegreeError("inner vertex " + node.name + " has degree 2");
    }

    PhyloTree::Init init;
    for (const Node& node : p.nodes) init.ids.push_back(node.name);
    std::vector<std::int8_t> labels;
    for (int v = 1; v < n; ++v) {
        init.edges.emplace_back(p.nodes[v].parent, v);
        labels.push_back(static_cast<std::int8_t>(p.nodes[v].label));
    }

    const bool suppress_top =
        !rooted && n > 2 && p.nodes[0].children.size() == 2;
    if (rooted || suppress_top) init.root = 0;
    LabeledTree out = make_labeled(std::move(init), std::move(labels));
    if (suppress_top) out = unroot(out);
    return out;
}

namespace {

std::string write_vertex(const LabeledTree& t, int v, int parent) {
    std::vector<std::pair<std::string, int>> order;
    for (int w : t.tree.neighbors(v)) {
        if (w == parent) continue;
        order.emplace_back(static_cast<char>('0' + t.label(v, w)) +
                               subtree_encoding(t, w, v),
                           w);
    }
    if (order.empty()) return t.tree.id(v);
    std::sort(order.begin(), order.end());
    std::string out = "(";
    bool first = true;
    for (const auto& [key, w] : order) {
        if (!first) out += ",";
        first = false;
        out += write_vertex(t, w, v);
        out += ":";
        out += static_cast<char>('0' + t.label(v, w));
    }
    out += ")";
    out += t.tree.id(v);
    return out;
}

std::string quoted(const std::string& id) {
    std::string out = "\"";
    for (char c : id) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string serialize_newick(const LabeledTree& t) {
    std::string out = write_vertex(t, canonical_root_vertex(t), -1);
    if (t.tree.rooted()) out += "[&R]";
    return out + ";";
}

std::string serialize_dot(const LabeledTree& t) {
    std::string out = "graph tree {\n";
    for (int v = 0; v < t.tree.vertex_count(); ++v) {
        out += "  " + quoted(t.tree.id(v));
        if (t.tree.rooted() && t.tree.root() == v)
            out += " [shape=doublecircle]";
        else if (t.tree.is_leaf(v))
            out += " [shape=none]";
        else
            out += " [shape=point]";
        out += ";\n";
    }
    for (int e = 0; e < t.tree.edge_count(); ++e) {
        const Edge& ed = t.tree.edges()[e];
        out += "  " + quoted(t.tree.id(ed.u)) + " -- " + quoted(t.tree.id(ed.v));
        out += t.label_at(e) == 1 ? " [style=solid]" : " [style=dashed]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace rgc
