#include "restree/arquiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace restree {

WeightedGraph dual_graph_of_morphism(const LabelledTree& t,
                                     const std::vector<std::string>& s) {
    std::set<std::size_t> chosen;
    for (const auto& name : s) {
        auto v = t.find(name);
        if (!v) throw InvalidInputError("unknown curve '" + name + "'");
        chosen.insert(*v);
    }
    WeightedGraph g;
    std::map<std::size_t, std::size_t> local;
    for (std::size_t v : chosen) {
        local[v] = g.vertices.size();
        g.vertices.push_back(t.name(v));
        g.weights.push_back(t.weight(v));
    }
    for (auto [u, v] : t.edges()) {
        if (chosen.count(u) && chosen.count(v)) g.edges.emplace_back(local[u], local[v]);
    }
    for (auto& [u, v] : g.edges) {
        if (u > v) std::swap(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

WeightedGraph whole_graph(const LabelledTree& t) {
    return dual_graph_of_morphism(t, t.names());
}

Quiver double_quiver(const WeightedGraph& g) {
    Quiver q;
    q.vertices = g.vertices;
    for (auto [u, v] : g.edges) {
        const std::string& a = g.vertices[u];
        const std::string& b = g.vertices[v];
        q.arrows.push_back(QuiverArrow{a, b, a + "->" + b});
        q.arrows.push_back(QuiverArrow{b, a, b + "->" + a});
    }
    return q;
}

namespace {

std::string sanitize(const std::string& name) {
    std::string out;
    for (char c : name) {
        out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    }
    if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) out = "n" + out;
    return out;
}

}  // namespace

std::string emit_dot(const Quiver& q) {
    // Sanitised names can collide; disambiguate with the vertex position.
    std::map<std::string, std::string> id_of;
    std::set<std::string> used;
    for (std::size_t i = 0; i < q.vertices.size(); ++i) {
        std::string id = sanitize(q.vertices[i]);
        if (!used.insert(id).second) {
            id += "_" + std::to_string(i);
            used.insert(id);
        }
        id_of[q.vertices[i]] = id;
    }

    std::ostringstream os;
    os << "digraph AR {\n";
    for (const auto& name : q.vertices) {
        os << "  " << id_of[name] << " [label=\"" << name << "\"];\n";
    }
    std::vector<std::pair<std::string, std::string>> endpoints;
    endpoints.reserve(q.arrows.size());
    for (const auto& arrow : q.arrows) endpoints.emplace_back(arrow.from, arrow.to);
    std::sort(endpoints.begin(), endpoints.end());
    for (const auto& [from, to] : endpoints) {
        os << "  " << id_of[from] << " -> " << id_of[to] << ";\n";
    }
    os << "}\n";
    return os.str();
}

nlohmann::ordered_json quiver_to_json(const Quiver& q) {
    nlohmann::ordered_json j;
    j["vertices"] = q.vertices;
    j["arrows"] = nlohmann::ordered_json::array();
    for (const auto& arrow : q.arrows) {
        j["arrows"].push_back(
            {{"from", arrow.from}, {"to", arrow.to}, {"label", arrow.label}});
    }
    return j;
}

std::vector<std::vector<std::string>> quiver_components(const Quiver& q) {
    const std::size_t n = q.vertices.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[q.vertices[i]] = i;

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& arrow : q.arrows) {
        auto it = index.find(arrow.from);
        auto jt = index.find(arrow.to);
        if (it == index.end() || jt == index.end()) {
            throw InvalidInputError("arrow endpoint is not a quiver vertex");
        }
        parent[find(it->second)] = find(jt->second);
    }

    std::map<std::size_t, std::vector<std::string>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(q.vertices[i]);
    std::vector<std::vector<std::string>> components;
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (first index, root)
    for (auto& [root, members] : groups) {
        order.emplace_back(index[members.front()], root);
    }
    std::sort(order.begin(), order.end());
    components.reserve(order.size());
    for (auto& [_, root] : order) components.push_back(std::move(groups[root]));
    return components;
}

}  // namespace restree
