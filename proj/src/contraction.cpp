#include "restree/contraction.hpp"

#include <algorithm>
#include <set>

namespace restree {

namespace {

std::vector<std::size_t> resolve_indices(const LabelledTree& t,
                                         const std::vector<std::string>& names) {
    std::vector<std::size_t> indices;
    std::set<std::size_t> seen;
    indices.reserve(names.size());
    for (const auto& name : names) {
        auto v = t.find(name);
        if (!v) throw InvalidInputError("unknown curve '" + name + "'");
        if (!seen.insert(*v).second) throw InvalidInputError("curve '" + name + "' repeated");
        indices.push_back(*v);
    }
    std::sort(indices.begin(), indices.end());
    return indices;
}

void require_weights_at_most_minus_two(const LabelledTree& t) {
    for (std::size_t v = 0; v < t.size(); ++v) {
        if (t.weight(v) > -2) {
            throw InvalidInputError("curve '" + t.name(v) + "' has self-intersection " +
                                    std::to_string(t.weight(v)) + " > -2");
        }
    }
}

// Connected components of the subgraph induced on `in_set`, each listed in
// declared vertex order; components ordered by their smallest vertex.
std::vector<std::vector<std::size_t>> induced_components(const LabelledTree& t,
                                                         const std::vector<bool>& in_set) {
    std::vector<std::vector<std::size_t>> components;
    std::vector<bool> visited(t.size(), false);
    for (std::size_t start = 0; start < t.size(); ++start) {
        if (!in_set[start] || visited[start]) continue;
        std::vector<std::size_t> component;
        std::vector<std::size_t> stack{start};
        visited[start] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (std::size_t w : t.neighbours(v)) {
                if (in_set[w] && !visited[w]) {
                    visited[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

std::string oplus_join(const std::vector<std::string>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i != 0) out += " ⊕ ";
        out += terms[i];
    }
    return out;
}

}  // namespace

CurvePartition partition_curves(const LabelledTree& t) {
    require_weights_at_most_minus_two(t);
    CurvePartition partition;
    std::vector<std::string> d_terms{"R"};
    for (std::size_t v = 0; v < t.size(); ++v) {
        partition.module_labels[t.name(v)] = "M_" + t.name(v);
        if (t.weight(v) == -2) {
            partition.crepant.push_back(t.name(v));
        } else {
            partition.discrepant.push_back(t.name(v));
            d_terms.push_back("M_" + t.name(v));
        }
    }
    partition.d_module_label = "D = " + oplus_join(d_terms);
    return partition;
}

std::optional<AdeType> ade_type(const LabelledTree& t,
                                const std::vector<std::string>& component) {
    if (component.empty()) throw InvalidInputError("empty component");
    std::vector<std::size_t> indices = resolve_indices(t, component);
    std::vector<bool> in_set(t.size(), false);
    for (std::size_t v : indices) {
        if (t.weight(v) != -2) {
            throw InvalidInputError("component contains the non-(-2) curve '" + t.name(v) +
                                    "'");
        }
        in_set[v] = true;
    }
    auto components = induced_components(t, in_set);
    if (components.size() != 1) throw InvalidInputError("component is not connected");

    const std::int64_t rank = static_cast<std::int64_t>(indices.size());

    // Degrees within the induced subgraph.
    std::vector<std::size_t> degree(t.size(), 0);
    std::vector<std::size_t> forks;
    for (std::size_t v : indices) {
        for (std::size_t w : t.neighbours(v)) {
            if (in_set[w]) ++degree[v];
        }
        if (degree[v] >= 4) return std::nullopt;
    }
    for (std::size_t v : indices) {
        if (degree[v] == 3) forks.push_back(v);
    }
    if (forks.empty()) return AdeType{'A', rank};  // a path
    if (forks.size() > 1) return std::nullopt;

    // One fork: measure the three arm lengths.
    std::size_t fork = forks[0];
    std::vector<std::int64_t> arms;
    for (std::size_t first : t.neighbours(fork)) {
        if (!in_set[first]) continue;
        std::int64_t length = 0;
        std::size_t prev = fork, cur = first;
        while (true) {
            ++length;
            std::size_t next = t.size();
            for (std::size_t w : t.neighbours(cur)) {
                if (in_set[w] && w != prev) next = w;
            }
            if (next == t.size()) break;
            prev = cur;
            cur = next;
        }
        arms.push_back(length);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return AdeType{'D', arms[2] + 3};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        return AdeType{'E', arms[2] + 4};
    }
    return std::nullopt;
}

std::optional<std::string> cyclic_quotient_name(const AdeType& type) {
    if (type.series != 'A') return std::nullopt;
    return "1/" + std::to_string(type.rank + 1) + "(1," + std::to_string(type.rank) + ")";
}

ContractionResult contract(const LabelledTree& t, const std::vector<std::string>& s) {
    require_weights_at_most_minus_two(t);
    std::vector<std::size_t> indices = resolve_indices(t, s);
    std::vector<bool> in_s(t.size(), false);
    for (std::size_t v : indices) in_s[v] = true;

    ContractionResult result;
    for (std::size_t v : indices) result.contracted.push_back(t.name(v));
    result.s_subset_of_c = true;
    for (std::size_t v : indices) {
        if (t.weight(v) != -2) result.s_subset_of_c = false;
    }

    auto components = induced_components(t, in_s);
    for (const auto& component : components) {
        ContractionComponent out;
        for (std::size_t v : component) out.curves.push_back(t.name(v));
        if (result.s_subset_of_c) out.ade = ade_type(t, out.curves);
        result.components.push_back(std::move(out));
    }

    for (std::size_t v = 0; v < t.size(); ++v) {
        if (!in_s[v]) result.quotient_vertices.push_back(t.name(v));
    }

    // Surviving edges, plus one edge for every pair of survivors that meet a
    // common contracted component.
    std::set<std::pair<std::size_t, std::size_t>> quotient_edges;
    for (auto [u, v] : t.edges()) {
        if (!in_s[u] && !in_s[v]) quotient_edges.insert({u, v});
    }
    for (std::size_t c = 0; c < components.size(); ++c) {
        std::set<std::size_t> touching;
        for (std::size_t v : components[c]) {
            for (std::size_t w : t.neighbours(v)) {
                if (!in_s[w]) touching.insert(w);
            }
        }
        SingularPoint point;
        point.component_index = c;
        for (std::size_t w : touching) point.on_curves.push_back(t.name(w));
        result.singular_points.push_back(std::move(point));
        for (auto a = touching.begin(); a != touching.end(); ++a) {
            for (auto b = std::next(a); b != touching.end(); ++b) {
                quotient_edges.insert({*a, *b});
            }
        }
    }
    for (auto [u, v] : quotient_edges) {
        result.quotient_edges.emplace_back(t.name(u), t.name(v));
    }

    std::vector<std::string> n_terms{"R"};
    for (const auto& name : result.quotient_vertices) n_terms.push_back("M_" + name);
    result.n_module_label = "N^S = " + oplus_join(n_terms);

    CurvePartition partition = partition_curves(t);
    result.inj_dim_prediction = partition.discrepant.empty() ? 2 : 3;
    if (result.s_subset_of_c) {
        result.stable_object_count = static_cast<std::int64_t>(indices.size());
    }
    return result;
}

std::map<std::string, Rat> contraction_discrepancy(const LabelledTree& t,
                                                   const std::vector<std::string>& s) {
    if (!IntersectionForm::of(t).is_negative_definite()) {
        throw NotNegativeDefiniteError("contraction discrepancies need a negative definite tree");
    }
    std::vector<std::size_t> indices = resolve_indices(t, s);
    const std::size_t k = indices.size();
    if (k == 0) return {};

    // Induced subform on s. It inherits negative definiteness, so the solve
    // cannot hit a singular matrix.
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = 0;
        m[i][i] = to_rat(t.weight(indices[i]));
        m[i][k] = to_rat(-2 - t.weight(indices[i]));
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            for (std::size_t w : t.neighbours(indices[i])) {
                if (w == indices[j]) {
                    m[i][j] = 1;
                    m[j][i] = 1;
                }
            }
        }
    }

    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && m[pivot][col] == 0) ++pivot;
        if (pivot == k) throw SingularMatrixError("induced subform is singular");
        if (pivot != col) std::swap(m[pivot], m[col]);
        for (std::size_t row = col + 1; row < k; ++row) {
            if (m[row][col] == 0) continue;
            Rat factor = m[row][col] / m[col][col];
            for (std::size_t j = col; j <= k; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    std::vector<Rat> x(k);
    for (std::size_t i = k; i-- > 0;) {
        Rat acc = m[i][k];
        for (std::size_t j = i + 1; j < k; ++j) acc -= m[i][j] * x[j];
        x[i] = acc / m[i][i];
    }

    std::map<std::string, Rat> out;
    for (std::size_t i = 0; i < k; ++i) out[t.name(indices[i])] = x[i];
    return out;
}

nlohmann::ordered_json contraction_to_json(const ContractionResult& result) {
    nlohmann::ordered_json j;
    j["contracted"] = result.contracted;
    j["components"] = nlohmann::ordered_json::array();
    for (const auto& component : result.components) {
        nlohmann::ordered_json c;
        c["curves"] = component.curves;
        if (component.ade) {
            c["ade"] = {{"series", std::string(1, component.ade->series)},
                        {"rank", component.ade->rank}};
        } else {
            c["ade"] = nullptr;
        }
        j["components"].push_back(std::move(c));
    }
    j["quotient"]["vertices"] = result.quotient_vertices;
    j["quotient"]["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : result.quotient_edges) {
        j["quotient"]["edges"].push_back({u, v});
    }
    j["singular_points"] = nlohmann::ordered_json::array();
    for (const auto& point : result.singular_points) {
        j["singular_points"].push_back(
            {{"component_index", point.component_index}, {"on_curves", point.on_curves}});
    }
    j["n_module_label"] = result.n_module_label;
    j["inj_dim_prediction"] = result.inj_dim_prediction;
    j["stable_object_count"] = result.stable_object_count
                                   ? nlohmann::ordered_json(*result.stable_object_count)
                                   : nlohmann::ordered_json(nullptr);
    j["s_subset_of_C"] = result.s_subset_of_c;
    return j;
}

}  // namespace restree
