#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "restree/lattice.hpp"
#include "restree/tree.hpp"

namespace restree {

// The partition I = C u D of the exceptional curves into crepant (-2)-curves
// and discrepant curves, together with the Wunram labels: R for the ring, M_i
// for the special module of curve E_i, and D = R + sum of discrepant M_d.
struct CurvePartition {
    std::vector<std::string> crepant;     // declared order
    std::vector<std::string> discrepant;  // declared order
    std::map<std::string, std::string> module_labels;  // vertex -> "M_<name>"
    std::string d_module_label;                        // e.g. "D = R (+) M_E1 (+) M_E2"
};

// Requires every weight <= -2 (throws InvalidInputError otherwise).
CurvePartition partition_curves(const LabelledTree& t);

// A simply-laced Dynkin type. rank is the number of vertices; D-rank >= 4,
// E-rank in {6, 7, 8}.
struct AdeType {
    char series = 'A';
    std::int64_t rank = 0;

    bool operator==(const AdeType&) const = default;
    std::string label() const { return series + std::to_string(rank); }
};

// Classifies a connected all-(-2) component: a path is A_k; a unique degree-3
// vertex with sorted arm lengths (1,1,m) is D_{m+3}, (1,2,2) is E6, (1,2,3) is
// E7, (1,2,4) is E8; anything else is unclassified (nullopt). Throws
// InvalidInputError when the component is empty, disconnected, or has a
// non-(-2) weight.
std::optional<AdeType> ade_type(const LabelledTree& t,
                                const std::vector<std::string>& component);

// The cyclic-quotient name of an ADE type, shipped for the A-series only:
// A_k is 1/(k+1)(1,k). Other series return nullopt.
std::optional<std::string> cyclic_quotient_name(const AdeType& type);

struct ContractionComponent {
    std::vector<std::string> curves;  // declared order
    std::optional<AdeType> ade;       // set only when the contracted set lies in C
};

// A singular point of the partial resolution: the image of one contracted
// component, lying on the surviving curves adjacent to that component.
struct SingularPoint {
    std::size_t component_index = 0;
    std::vector<std::string> on_curves;  // declared order; empty only when S = I
};

struct ContractionResult {
    std::vector<std::string> contracted;  // S, declared order
    std::vector<ContractionComponent> components;
    std::vector<std::string> quotient_vertices;  // I \ S, declared order
    std::vector<std::pair<std::string, std::string>> quotient_edges;
    std::vector<SingularPoint> singular_points;  // one per component
    std::string n_module_label;                  // N^S = R (+) M_i over i in I \ S
    int inj_dim_prediction = 0;   // 2 when D is empty (Gorenstein), 3 otherwise
    std::optional<std::int64_t> stable_object_count;  // |S| when S lies in C
    bool s_subset_of_c = false;
};

// Contracts the curves in s. Components are the connected components of the
// induced subgraph; the quotient graph joins two survivors iff they are
// adjacent in t or both meet a common contracted component. Requires every
// weight <= -2 and s a set of known curves.
ContractionResult contract(const LabelledTree& t, const std::vector<std::string>& s);

// Discrepancies of the contraction Y -> X^S: solves M_S d = b_S on the subform
// induced by s (b_i = -2 - w_i). The map f^S is crepant iff d = 0, iff every
// weight in s is -2. Requires a negative definite tree.
std::map<std::string, Rat> contraction_discrepancy(const LabelledTree& t,
                                                   const std::vector<std::string>& s);

nlohmann::ordered_json contraction_to_json(const ContractionResult& result);

}  // namespace restree
