#pragma once

#include <random>
#include <string>
#include <vector>

#include "restree/tree.hpp"

namespace restree::testing {

inline std::string ename(std::size_t i) { return "E" + std::to_string(i); }

inline LabelledTree chain_tree(const std::vector<std::int64_t>& weights) {
    std::vector<std::pair<std::string, std::int64_t>> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        vertices.emplace_back(ename(i + 1), weights[i]);
        if (i > 0) edges.emplace_back(ename(i), ename(i + 1));
    }
    return LabelledTree::make(std::move(vertices), std::move(edges));
}

inline LabelledTree star_tree(std::int64_t center, const std::vector<std::int64_t>& leaves) {
    std::vector<std::pair<std::string, std::int64_t>> vertices{{"E1", center}};
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        vertices.emplace_back(ename(i + 2), leaves[i]);
        edges.emplace_back("E1", ename(i + 2));
    }
    return LabelledTree::make(std::move(vertices), std::move(edges));
}

// The affine D4 configuration: a (-2) center with four (-2) leaves. Its form is
// negative semidefinite but not definite.
inline LabelledTree affine_d4_star() { return star_tree(-2, {-2, -2, -2, -2}); }

// Random attachment tree with weights drawn uniformly from `weight_choices`.
inline LabelledTree random_tree(std::mt19937_64& rng, std::size_t n,
                                const std::vector<std::int64_t>& weight_choices) {
    std::vector<std::pair<std::string, std::int64_t>> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::uniform_int_distribution<std::size_t> weight_pick(0, weight_choices.size() - 1);
    for (std::size_t i = 0; i < n; ++i) {
        vertices.emplace_back(ename(i + 1), weight_choices[weight_pick(rng)]);
        if (i > 0) {
            std::uniform_int_distribution<std::size_t> parent(1, i);
            edges.emplace_back(ename(parent(rng)), ename(i + 1));
        }
    }
    return LabelledTree::make(std::move(vertices), std::move(edges));
}

}  // namespace restree::testing
