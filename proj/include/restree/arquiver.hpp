#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "restree/tree.hpp"

namespace restree {

// A weighted simple undirected graph; unlike LabelledTree it may be empty or
// disconnected (induced subgraphs of trees usually are).
struct WeightedGraph {
    std::vector<std::string> vertices;
    std::vector<std::int64_t> weights;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v
};

// The dual graph of the morphism Y -> X^S: one vertex per contracted curve,
// joined iff the curves meet, keeping the self-intersection labels. This is
// the subgraph induced on s.
WeightedGraph dual_graph_of_morphism(const LabelledTree& t,
                                     const std::vector<std::string>& s);

// The whole dual graph (s = I), i.e. the dual graph of Y -> Spec R.
WeightedGraph whole_graph(const LabelledTree& t);

struct QuiverArrow {
    std::string from;
    std::string to;
    std::string label;

    bool operator==(const QuiverArrow&) const = default;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;
};

// The double of a graph: same vertices; each edge {u, v} is replaced by the
// two arrows u -> v and v -> u. No loops are added.
Quiver double_quiver(const WeightedGraph& g);

// Deterministic Graphviz output: nodes in declared order, arrows sorted by
// (source, target). Node identifiers are sanitised vertex names; the original
// names are kept as labels.
std::string emit_dot(const Quiver& q);

nlohmann::ordered_json quiver_to_json(const Quiver& q);

// Connected components of the underlying undirected graph, each in declared
// vertex order, ordered by first vertex.
std::vector<std::vector<std::string>> quiver_components(const Quiver& q);

}  // namespace restree
