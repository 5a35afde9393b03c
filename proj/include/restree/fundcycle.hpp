#pragma once

#include <functional>
#include <optional>

#include "json.hpp"
#include "restree/lattice.hpp"
#include "restree/tree.hpp"

namespace restree {

// Membership in Z_top: z != 0, all coefficients >= 0, and z . E_i <= 0 for
// every vertex i.
bool in_ztop(const LabelledTree& t, const Cycle& z);

// Given the vertices whose pairing with the current cycle is positive (in
// increasing index order), picks the one to bump. Only the choice of
// representative may vary; the resulting fixed point never does.
using TieBreak = std::function<std::size_t(const std::vector<std::size_t>& violating)>;

// Laufer's algorithm for the fundamental cycle, started from the reduced cycle
// sum E_i (valid because the tree is connected, so every member of Z_top has
// all coefficients >= 1): while some z . E_i > 0, replace z by z + E_i.
// Requires a negative definite tree; that guarantees termination, but a
// defensive cap of 10^6 iterations aborts with a logic error.
Cycle laufer(const LabelledTree& t);
Cycle laufer(const LabelledTree& t, const TieBreak& pick);

// Verdict and evidence for Artin's combinatorial rationality criterion:
// (1) all w_i <= -2, (2) the form is negative definite (equivalently there is
// some Z in Z_top with Z.Z < 0), (3) Z_f.Z_f + sum a_i(-w_i - 2) = -2.
struct RationalityReport {
    bool weights_ok = false;
    bool negative_definite = false;
    std::optional<Cycle> fundamental_cycle;  // present iff negative_definite
    std::optional<std::int64_t> self_pairing;   // Z_f . Z_f
    std::optional<std::int64_t> correction;     // sum a_i(-w_i - 2)
    std::optional<std::int64_t> artin_sum;      // self_pairing + correction
    bool is_rational = false;
};

// Never throws on a valid tree; failed conditions are reported, not raised.
RationalityReport artin_check(const LabelledTree& t);

nlohmann::ordered_json report_to_json(const RationalityReport& report, const LabelledTree& t);

}  // namespace restree
