#include "restree/tree.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace restree {

namespace {

// Union-find over vertex indices, used to reject cycles during edge insertion.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#') {
            ++i;
        }
        tokens.push_back(Token{line.substr(start, i - start), start + 1});
    }
    return tokens;
}

bool looks_like_integer(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string format_tree_error(TreeErrorKind kind, const std::string& message, std::size_t line,
                              std::size_t column) {
    std::ostringstream os;
    os << tree_error_kind_name(kind) << ": " << message;
    if (line != 0) os << " (line " << line << ", column " << column << ")";
    return os.str();
}

}  // namespace

namespace detail {

// Shared vertex/edge validation for make() and parse_tree(). Positions are
// (line, column) pairs; make() passes zeros.
class TreeBuilder {
public:
    void add_vertex(const std::string& name, std::int64_t weight, std::size_t line,
                    std::size_t column) {
        if (name.empty()) {
            throw TreeError(TreeErrorKind::Syntax, "empty vertex name", line, column);
        }
        for (char c : name) {
            if (std::isspace(static_cast<unsigned char>(c)) || c == '#') {
                throw TreeError(TreeErrorKind::Syntax,
                                "vertex name '" + name + "' cannot round-trip the file format",
                                line, column);
            }
        }
        if (index_.count(name)) {
            throw TreeError(TreeErrorKind::DuplicateVertex, "duplicate vertex '" + name + "'",
                            line, column);
        }
        index_[name] = names_.size();
        names_.push_back(name);
        weights_.push_back(weight);
    }

    void add_edge(const std::string& a, const std::string& b, std::size_t line,
                  std::size_t column) {
        auto ia = index_.find(a);
        if (ia == index_.end()) {
            throw TreeError(TreeErrorKind::UnknownVertex, "unknown vertex '" + a + "'", line,
                            column);
        }
        auto ib = index_.find(b);
        if (ib == index_.end()) {
            throw TreeError(TreeErrorKind::UnknownVertex, "unknown vertex '" + b + "'", line,
                            column);
        }
        std::size_t u = ia->second, v = ib->second;
        if (u == v) {
            throw TreeError(TreeErrorKind::SelfLoop, "self-loop at vertex '" + a + "'", line,
                            column);
        }
        if (u > v) std::swap(u, v);
        if (edge_set_.count({u, v})) {
            throw TreeError(TreeErrorKind::MultiEdge,
                            "repeated edge between '" + a + "' and '" + b + "'", line, column);
        }
        ensure_sets();
        if (sets_->find(u) == sets_->find(v)) {
            throw TreeError(TreeErrorKind::CycleDetected,
                            "edge between '" + a + "' and '" + b + "' closes a cycle", line,
                            column);
        }
        sets_->unite(u, v);
        edge_set_.insert({u, v});
        edges_.emplace_back(u, v);
    }

    LabelledTree finish() {
        if (names_.empty()) {
            throw TreeError(TreeErrorKind::EmptyInput, "no vertices declared");
        }
        if (edges_.size() + 1 != names_.size()) {
            throw TreeError(TreeErrorKind::Disconnected, "graph is not connected");
        }
        LabelledTree t;
        t.names_ = std::move(names_);
        t.weights_ = std::move(weights_);
        t.edges_ = std::move(edges_);
        t.index_ = std::move(index_);
        t.adjacency_.assign(t.names_.size(), {});
        for (auto [u, v] : t.edges_) {
            t.adjacency_[u].push_back(v);
            t.adjacency_[v].push_back(u);
        }
        for (auto& adj : t.adjacency_) std::sort(adj.begin(), adj.end());
        return t;
    }

private:
    // The union-find structure is sized lazily: vertices may still be added
    // between edges when constructing via make().
    void ensure_sets() {
        if (!sets_ || sets_size_ != names_.size()) {
            sets_.emplace(names_.size());
            sets_size_ = names_.size();
            for (auto [u, v] : edges_) sets_->unite(u, v);
        }
    }

    std::vector<std::string> names_;
    std::vector<std::int64_t> weights_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::set<std::pair<std::size_t, std::size_t>> edge_set_;
    std::map<std::string, std::size_t> index_;
    std::optional<DisjointSets> sets_;
    std::size_t sets_size_ = 0;
};

}  // namespace detail

const char* tree_error_kind_name(TreeErrorKind kind) {
    switch (kind) {
        case TreeErrorKind::Syntax: return "syntax";
        case TreeErrorKind::DuplicateVertex: return "duplicate vertex";
        case TreeErrorKind::MissingWeight: return "missing weight";
        case TreeErrorKind::UnknownVertex: return "unknown vertex";
        case TreeErrorKind::SelfLoop: return "self-loop";
        case TreeErrorKind::MultiEdge: return "multi-edge";
        case TreeErrorKind::CycleDetected: return "cycle detected";
        case TreeErrorKind::Disconnected: return "disconnected";
        case TreeErrorKind::EmptyInput: return "empty input";
    }
    return "unknown";
}

TreeError::TreeError(TreeErrorKind kind, const std::string& message, std::size_t line,
                     std::size_t column)
    : Error(format_tree_error(kind, message, line, column)),
      kind_(kind),
      line_(line),
      column_(column) {}

LabelledTree LabelledTree::make(std::vector<std::pair<std::string, std::int64_t>> vertices,
                                std::vector<std::pair<std::string, std::string>> edges) {
    detail::TreeBuilder builder;
    for (const auto& [name, weight] : vertices) builder.add_vertex(name, weight, 0, 0);
    for (const auto& [a, b] : edges) builder.add_edge(a, b, 0, 0);
    return builder.finish();
}

std::optional<std::size_t> LabelledTree::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t LabelledTree::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
        throw TreeError(TreeErrorKind::UnknownVertex, "unknown vertex '" + name + "'");
    }
    return it->second;
}

bool LabelledTree::structurally_equal(const LabelledTree& other) const {
    if (names_ != other.names_ || weights_ != other.weights_) return false;
    std::set<std::pair<std::size_t, std::size_t>> a(edges_.begin(), edges_.end());
    std::set<std::pair<std::size_t, std::size_t>> b(other.edges_.begin(), other.edges_.end());
    return a == b;
}

LabelledTree parse_tree(const std::string& text) {
    detail::TreeBuilder builder;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const Token& head = tokens[0];
        if (head.text == "vertex") {
            if (tokens.size() < 2) {
                throw TreeError(TreeErrorKind::Syntax, "vertex line needs a name", lineno,
                                head.column);
            }
            if (tokens.size() == 2) {
                throw TreeError(TreeErrorKind::MissingWeight,
                                "vertex '" + tokens[1].text + "' has no weight", lineno,
                                tokens[1].column);
            }
            if (tokens.size() > 3) {
                throw TreeError(TreeErrorKind::Syntax, "trailing tokens on vertex line", lineno,
                                tokens[3].column);
            }
            if (!looks_like_integer(tokens[2].text)) {
                throw TreeError(TreeErrorKind::Syntax,
                                "weight '" + tokens[2].text + "' is not an integer", lineno,
                                tokens[2].column);
            }
            std::int64_t weight = 0;
            try {
                weight = std::stoll(tokens[2].text);
            } catch (const std::exception&) {
                throw TreeError(TreeErrorKind::Syntax,
                                "weight '" + tokens[2].text + "' is out of range", lineno,
                                tokens[2].column);
            }
            builder.add_vertex(tokens[1].text, weight, lineno, tokens[1].column);
        } else if (head.text == "edge") {
            if (tokens.size() != 3) {
                throw TreeError(TreeErrorKind::Syntax, "edge line needs exactly two names",
                                lineno, head.column);
            }
            builder.add_edge(tokens[1].text, tokens[2].text, lineno, tokens[1].column);
        } else {
            throw TreeError(TreeErrorKind::Syntax, "unknown directive '" + head.text + "'",
                            lineno, head.column);
        }
    }
    return builder.finish();
}

std::string serialize_tree(const LabelledTree& t) {
    std::ostringstream os;
    for (std::size_t v = 0; v < t.size(); ++v) {
        os << "vertex " << t.name(v) << " " << t.weight(v) << "\n";
    }
    std::vector<std::pair<std::string, std::string>> lines;
    lines.reserve(t.edges().size());
    for (auto [u, v] : t.edges()) {
        std::string a = t.name(u), b = t.name(v);
        if (b < a) std::swap(a, b);
        lines.emplace_back(std::move(a), std::move(b));
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, b] : lines) os << "edge " << a << " " << b << "\n";
    return os.str();
}

std::map<std::size_t, std::size_t> degree_census(const LabelledTree& t) {
    std::map<std::size_t, std::size_t> census;
    for (std::size_t v = 0; v < t.size(); ++v) ++census[t.degree(v)];
    return census;
}

}  // namespace restree
