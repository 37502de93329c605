#include "rgc/relation_io.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rgc/errors.hpp"
#include "rgc/tree.hpp"

namespace rgc {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    for (char c : line) {
        if (c == '\t') {
            out.push_back(field);
            field.clear();
        } else {
            field += c;
        }
    }
    out.push_back(field);
    return out;
}

[[noreturn]] void semantic_error(int line, const std::string& what) {
    throw InvariantError("line " + std::to_string(line) + ": " + what);
}

struct Entry {
    TaxonPair pair;
    int line;
};

}  // namespace

RelationGraph parse_relation(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    std::optional<RelationMode> mode;
    std::set<std::string> taxa;
    std::vector<Entry> zero, sym, dir;

    auto check_name = [](const std::string& name, int line) {
        if (has_inner_prefix(name))
            semantic_error(line, "taxon " + name + " uses the reserved prefix " +
                                     kInnerPrefix);
    };

    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty()) continue;
        if (!mode) {
            const std::string prefix = "#mode=";
            if (raw.rfind(prefix, 0) != 0)
                throw ParseError(lineno, 0,
                                 "expected header #mode=undirected|directed|mixed");
            const std::string name = raw.substr(prefix.size());
            if (name == "undirected")
                mode = RelationMode::undirected;
            else if (name == "directed")
                mode = RelationMode::directed;
            else if (name == "mixed")
                mode = RelationMode::mixed;
            else
                throw ParseError(lineno, 0, "a mode out of undirected|directed|mixed,"
                                            " not '" + name + "'");
            continue;
        }
        if (raw[0] == '#') continue;

        auto fields = split_tabs(raw);
        if (fields.size() == 1) {
            if (fields[0].empty()) throw ParseError(lineno, 0, "a taxon name");
            check_name(fields[0], lineno);
            taxa.insert(fields[0]);
            continue;
        }
        if (fields.size() != 3)
            throw ParseError(lineno, 0,
                             "either a lone taxon or a<TAB>b<TAB>sym|dir|zero");
        const std::string& a = fields[0];
        const std::string& b = fields[1];
        const std::string& kind = fields[2];
        if (a.empty() || b.empty()) throw ParseError(lineno, 0, "nonempty taxa");
        check_name(a, lineno);
        check_name(b, lineno);
        if (a == b) semantic_error(lineno, "pair joins " + a + " with itself");
        taxa.insert(a);
        taxa.insert(b);
        if (kind == "zero")
            zero.push_back({{a, b}, lineno});
        else if (kind == "sym")
            sym.push_back({{a, b}, lineno});
        else if (kind == "dir")
            dir.push_back({{a, b}, lineno});
        else
            throw ParseError(lineno, 0, "a kind out of sym|dir|zero, not '" +
                                            kind + "'");
    }
    if (!mode) throw ParseError(lineno + 1, 0, "the header #mode=...");

    if (*mode == RelationMode::undirected && !dir.empty())
        semantic_error(dir.front().line, "dir pair in undirected mode");
    if (*mode == RelationMode::directed && !sym.empty())
        semantic_error(sym.front().line, "sym pair in directed mode");

    // merge the zero pairs transitively into classes
    std::map<std::string, std::string> up;
    for (const auto& t : taxa) up[t] = t;
    std::function<std::string(const std::string&)> find =
        [&](const std::string& x) {
            return up.at(x) == x ? x : up[x] = find(up.at(x));
        };
    for (const auto& e : zero) up[find(e.pair.first)] = find(e.pair.second);

    std::set<TaxonPair> sym_seen, dir_seen;
    for (const auto& e : sym) {
        if (find(e.pair.first) == find(e.pair.second))
            semantic_error(e.line, "sym pair inside a zero-class");
        sym_seen.insert({std::min(e.pair.first, e.pair.second),
                         std::max(e.pair.first, e.pair.second)});
    }
    for (const auto& e : dir) {
        if (find(e.pair.first) == find(e.pair.second))
            semantic_error(e.line, "dir pair inside a zero-class");
        if (dir_seen.count({e.pair.second, e.pair.first}))
            semantic_error(e.line, "both directions of " + e.pair.first + ", " +
                                       e.pair.second + " are declared");
        if (sym_seen.count({std::min(e.pair.first, e.pair.second),
                            std::max(e.pair.first, e.pair.second)}))
            semantic_error(e.line, "pair declared both sym and dir");
        dir_seen.insert(e.pair);
    }
    for (const auto& e : sym)
        if (dir_seen.count(e.pair) ||
            dir_seen.count({e.pair.second, e.pair.first}))
            semantic_error(e.line, "pair declared both sym and dir");

    std::map<std::string, std::vector<std::string>> classes;
    for (const auto& t : taxa) classes[find(t)].push_back(t);
    std::vector<std::vector<std::string>> class_list;
    for (auto& [rep, members] : classes) class_list.push_back(std::move(members));

    return {*mode, std::vector<std::string>(taxa.begin(), taxa.end()),
            std::move(class_list),
            std::vector<TaxonPair>(sym_seen.begin(), sym_seen.end()),
            std::vector<TaxonPair>(dir_seen.begin(), dir_seen.end())};
}

std::string serialize_relation(const RelationGraph& rel) {
    std::string out = "#mode=" + to_string(rel.mode()) + "\n";
    for (const auto& t : rel.taxa()) out += t + "\n";
    for (const auto& members : rel.zero_classes())
        for (size_t i = 1; i < members.size(); ++i)
            out += members.front() + "\t" + members[i] + "\tzero\n";
    for (const auto& [a, b] : rel.sym_pairs()) out += a + "\t" + b + "\tsym\n";
    for (const auto& [a, b] : rel.dir_pairs()) out += a + "\t" + b + "\tdir\n";
    return out;
}

}  // namespace rgc
