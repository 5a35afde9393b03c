#include "restree/families.hpp"

#include <numeric>

namespace restree {

namespace {

std::string ename(std::int64_t i) { return "E" + std::to_string(i); }

struct HubBuilder {
    std::vector<std::pair<std::string, std::int64_t>> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::int64_t next = 1;

    std::string vertex(std::int64_t weight) {
        std::string name = ename(next++);
        vertices.emplace_back(name, weight);
        return name;
    }
    void edge(const std::string& a, const std::string& b) { edges.emplace_back(a, b); }

    // The (-6) hub with its nine (-3)-curves, attached to `anchor`.
    void attach_hub(const std::string& anchor) {
        std::string hub = vertex(-6);
        edge(anchor, hub);
        std::vector<std::string> mids;
        for (int i = 0; i < 3; ++i) mids.push_back(vertex(-3));
        for (const auto& mid : mids) edge(hub, mid);
        for (const auto& mid : mids) {
            edge(mid, vertex(-3));
            edge(mid, vertex(-3));
        }
    }

    LabelledTree finish() { return LabelledTree::make(std::move(vertices), std::move(edges)); }
};

}  // namespace

LabelledTree type_a_tree(std::int64_t n) {
    if (n < 1) throw InvalidInputError("typeA needs chain length n >= 1");
    HubBuilder b;
    std::string prev = b.vertex(-2);
    for (std::int64_t i = 2; i <= n; ++i) {
        std::string cur = b.vertex(-2);
        b.edge(prev, cur);
        prev = cur;
    }
    b.attach_hub(prev);
    return b.finish();
}

LabelledTree type_d_tree(std::int64_t n) {
    if (n < 1) throw InvalidInputError("typeD needs chain length n >= 1");
    HubBuilder b;
    std::string leaf1 = b.vertex(-2);
    std::string leaf2 = b.vertex(-2);
    std::string prev = b.vertex(-2);  // E3
    b.edge(leaf1, prev);
    b.edge(leaf2, prev);
    for (std::int64_t i = 2; i <= n; ++i) {
        std::string cur = b.vertex(-2);
        b.edge(prev, cur);
        prev = cur;
    }
    b.attach_hub(prev);
    return b.finish();
}

LabelledTree type_e6_tree() {
    HubBuilder b;
    std::vector<std::string> chain;
    for (int i = 0; i < 5; ++i) chain.push_back(b.vertex(-2));
    for (int i = 0; i + 1 < 5; ++i) b.edge(chain[i], chain[i + 1]);
    std::string branch = b.vertex(-2);
    b.edge(chain[2], branch);
    b.attach_hub(chain[4]);
    return b.finish();
}

LabelledTree type_e7_tree() {
    HubBuilder b;
    std::vector<std::string> chain;
    for (int i = 0; i < 6; ++i) chain.push_back(b.vertex(-2));
    for (int i = 0; i + 1 < 6; ++i) b.edge(chain[i], chain[i + 1]);
    std::string branch = b.vertex(-2);
    b.edge(chain[2], branch);
    b.attach_hub(chain[5]);
    return b.finish();
}

LabelledTree t9_tree() {
    return LabelledTree::make(
        {{"E1", -3}, {"E2", -3}, {"E3", -2}, {"E4", -2}, {"E5", -2}},
        {{"E1", "E2"}, {"E2", "E3"}, {"E3", "E4"}, {"E2", "E5"}});
}

LabelledTree ade_tree(char series, std::int64_t rank) {
    std::vector<std::pair<std::string, std::int64_t>> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    auto chain = [&](std::int64_t k) {
        for (std::int64_t i = 1; i <= k; ++i) {
            vertices.emplace_back(ename(i), -2);
            if (i > 1) edges.emplace_back(ename(i - 1), ename(i));
        }
    };
    switch (series) {
        case 'A':
            if (rank < 1) throw InvalidInputError("A-series needs rank >= 1");
            chain(rank);
            break;
        case 'D':
            if (rank < 4) throw InvalidInputError("D-series needs rank >= 4");
            chain(rank - 1);
            vertices.emplace_back(ename(rank), -2);
            edges.emplace_back("E2", ename(rank));
            break;
        case 'E':
            if (rank < 6 || rank > 8) throw InvalidInputError("E-series rank must be 6, 7 or 8");
            chain(rank - 1);
            vertices.emplace_back(ename(rank), -2);
            edges.emplace_back("E3", ename(rank));
            break;
        default:
            throw InvalidInputError("unknown series; expected A, D or E");
    }
    return LabelledTree::make(std::move(vertices), std::move(edges));
}

LabelledTree cyclic_tree(std::int64_t m, std::int64_t q) {
    std::vector<std::int64_t> weights = hj_chain(m, q);
    std::vector<std::pair<std::string, std::int64_t>> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        vertices.emplace_back(ename(static_cast<std::int64_t>(i) + 1), weights[i]);
        if (i > 0) {
            edges.emplace_back(ename(static_cast<std::int64_t>(i)),
                               ename(static_cast<std::int64_t>(i) + 1));
        }
    }
    return LabelledTree::make(std::move(vertices), std::move(edges));
}

std::vector<std::int64_t> hj_chain(std::int64_t m, std::int64_t q) {
    if (!(0 < q && q < m)) throw InvalidInputError("hj_chain needs 0 < q < m");
    if (std::gcd(m, q) != 1) throw InvalidInputError("hj_chain needs gcd(m, q) = 1");
    std::vector<std::int64_t> weights;
    while (q > 0) {
        std::int64_t b = (m + q - 1) / q;  // ceil(m/q)
        weights.push_back(-b);
        std::int64_t next_q = b * q - m;
        m = q;
        q = next_q;
    }
    return weights;
}

LabelledTree generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::TypeA: return type_a_tree(spec.n);
        case FamilyKind::TypeD: return type_d_tree(spec.n);
        case FamilyKind::TypeE6: return type_e6_tree();
        case FamilyKind::TypeE7: return type_e7_tree();
        case FamilyKind::T9: return t9_tree();
        case FamilyKind::Ade: return ade_tree(spec.series, spec.rank);
        case FamilyKind::Cyclic: return cyclic_tree(spec.m, spec.q);
    }
    throw InvalidInputError("unknown family kind");
}

TautCensus taut_census(const LabelledTree& t) {
    TautCensus census;
    for (std::size_t v = 0; v < t.size(); ++v) {
        if (t.degree(v) == 3) ++census.deg3_count;
        if (t.degree(v) == 4 && !census.deg4plus_witness) {
            census.deg4plus_witness = t.name(v);
        }
    }
    census.not_pseudo_taut = census.deg3_count > 1;
    census.not_taut = census.deg4plus_witness.has_value();
    return census;
}

nlohmann::ordered_json census_to_json(const TautCensus& census) {
    nlohmann::ordered_json j;
    j["deg3_count"] = census.deg3_count;
    j["deg4plus_witness"] = census.deg4plus_witness
                                ? nlohmann::ordered_json(*census.deg4plus_witness)
                                : nlohmann::ordered_json(nullptr);
    j["not_pseudo_taut"] = census.not_pseudo_taut;
    j["not_taut"] = census.not_taut;
    return j;
}

}  // namespace restree
