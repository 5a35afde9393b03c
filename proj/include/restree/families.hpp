#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "restree/tree.hpp"

namespace restree {

// Parametric generators for the rational trees used throughout: the four
// (-6)-hub families, the T9 dual graph, plain ADE diagrams and cyclic-quotient
// chains. All vertices are named E1, E2, ... in declared order.
//
// Common to the four hub families: a (-6) hub carrying three (-3) vertices,
// each of which carries two more (-3) leaves. The families differ in the
// all-(-2) configuration attached to the hub:
//   typeA(n): a chain of n (-2)-curves E1..En, En meeting the hub.
//   typeD(n): E1, E2 are (-2) leaves on E3; E3..E_{n+2} is a (-2) chain;
//             the hub is E_{n+3}; mid vertices E_{n+4}..E_{n+6}; leaves
//             E_{n+7}..E_{n+12} (two per mid, in order). This matches the
//             vertex-labelled figure exactly.
//   typeE6: a (-2) chain E1..E5 with E6 attached to E3 (the E6 diagram),
//           hub E7 on E5, mids E8..E10, leaves E11..E16.
//   typeE7: a (-2) chain E1..E6 with E7 attached to E3 (the E7 diagram),
//           hub E8 on E6, mids E9..E11, leaves E12..E17.
// typeA reuses typeD's naming scheme with the fork removed; typeE6/typeE7
// have no chain parameter (their figures show none).
//
// T9: vertices E1(-3), E2(-3), E3(-2), E4(-2), E5(-2) with edges E1E2, E2E3,
// E3E4, E2E5. The published figure draws E5 crossing E2 without an edge list;
// the attachment E5-E2 is forced by the contraction pictures (contracting
// {E3, E5} must leave singular points on E2 and at E2 n E4).
enum class FamilyKind { TypeA, TypeD, TypeE6, TypeE7, T9, Ade, Cyclic };

struct FamilySpec {
    FamilyKind kind = FamilyKind::T9;
    std::int64_t n = 0;      // typeA/typeD chain length (>= 1); ignored by typeE6/typeE7
    char series = 'A';       // Ade
    std::int64_t rank = 0;   // Ade
    std::int64_t m = 0;      // Cyclic
    std::int64_t q = 0;      // Cyclic
};

LabelledTree generate(const FamilySpec& spec);

LabelledTree type_a_tree(std::int64_t n);
LabelledTree type_d_tree(std::int64_t n);
LabelledTree type_e6_tree();
LabelledTree type_e7_tree();
LabelledTree t9_tree();

// All-(-2) Dynkin trees: A_k is the chain E1..Ek; D_k (k >= 4) attaches Ek to
// E2 of the chain E1..E_{k-1}; E6/E7/E8 attach Ek to E3.
LabelledTree ade_tree(char series, std::int64_t rank);

// The resolution chain of the cyclic quotient 1/m(1,q): vertices E1..Ek in a
// chain, weights from hj_chain(m, q).
LabelledTree cyclic_tree(std::int64_t m, std::int64_t q);

// Hirzebruch-Jung expansion m/q = b_1 - 1/(b_2 - 1/(...)) with all b_i >= 2;
// returns (-b_1, ..., -b_k). Requires 0 < q < m and gcd(m, q) = 1.
std::vector<std::int64_t> hj_chain(std::int64_t m, std::int64_t q);

// The two degree obstructions extracted from Laufer's classification: more
// than one vertex meeting exactly three edges rules out pseudo-tautness, and a
// vertex meeting exactly four edges rules out tautness. A false flag means the
// obstruction was not detected, never that the tree is taut.
struct TautCensus {
    std::size_t deg3_count = 0;
    std::optional<std::string> deg4plus_witness;  // first vertex meeting exactly four edges
    bool not_pseudo_taut = false;
    bool not_taut = false;
};

TautCensus taut_census(const LabelledTree& t);

nlohmann::ordered_json census_to_json(const TautCensus& census);

}  // namespace restree
