#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace restree {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid arguments to an operation (bad parameters, unknown curves, ...).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

enum class TreeErrorKind {
    Syntax,
    DuplicateVertex,
    MissingWeight,
    UnknownVertex,
    SelfLoop,
    MultiEdge,
    CycleDetected,
    Disconnected,
    EmptyInput,
};

const char* tree_error_kind_name(TreeErrorKind kind);

namespace detail {
class TreeBuilder;
}

// Malformed tree input. line/column are 1-based; 0 means "not tied to a document
// position" (e.g. trees built programmatically).
class TreeError : public Error {
public:
    TreeError(TreeErrorKind kind, const std::string& message, std::size_t line = 0,
              std::size_t column = 0);

    TreeErrorKind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    TreeErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

// A finite weighted tree of exceptional curves: one vertex per curve, labelled
// with its self-intersection number, one edge per intersection point.
// Immutable after construction; vertex iteration order is the declared order.
class LabelledTree {
public:
    // Validates everything the file parser does apart from syntax: unique names,
    // known endpoints, simplicity, acyclicity, connectedness.
    static LabelledTree make(std::vector<std::pair<std::string, std::int64_t>> vertices,
                             std::vector<std::pair<std::string, std::string>> edges);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t v) const { return names_[v]; }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    std::int64_t weight(std::size_t v) const { return weights_[v]; }

    // Edges as index pairs with u < v, in insertion order.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    const std::vector<std::size_t>& neighbours(std::size_t v) const { return adjacency_[v]; }
    std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }

    std::optional<std::size_t> find(const std::string& name) const;
    // Throws TreeError(UnknownVertex) if absent.
    std::size_t index_of(const std::string& name) const;

    // Same vertex sequence (names and weights, in order) and same edge set.
    bool structurally_equal(const LabelledTree& other) const;

private:
    LabelledTree() = default;

    std::vector<std::string> names_;
    std::vector<std::int64_t> weights_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::map<std::string, std::size_t> index_;

    friend class detail::TreeBuilder;
};

// An integer cycle sum a_i E_i, stored densely in the tree's vertex order.
struct Cycle {
    std::vector<std::int64_t> coeffs;

    static Cycle zero(std::size_t n) { return Cycle{std::vector<std::int64_t>(n, 0)}; }
    // The reduced cycle sum E_i (all coefficients 1).
    static Cycle reduced(std::size_t n) { return Cycle{std::vector<std::int64_t>(n, 1)}; }

    bool operator==(const Cycle&) const = default;
};

// Line-oriented format: "vertex <name> <weight>", "edge <name> <name>",
// '#' starts a comment, blank lines ignored. Vertices must be declared before
// they are used in an edge; vertex order is first-mention order.
LabelledTree parse_tree(const std::string& text);

// Canonical text: vertex lines in declared order, then edge lines with the two
// endpoints sorted within each line and the lines sorted lexicographically.
// parse_tree(serialize_tree(t)) is structurally equal to t.
std::string serialize_tree(const LabelledTree& t);

// Histogram degree -> number of vertices of that degree.
std::map<std::size_t, std::size_t> degree_census(const LabelledTree& t);

}  // namespace restree
