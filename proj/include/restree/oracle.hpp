#pragma once

#include <optional>

#include "restree/lattice.hpp"
#include "restree/tree.hpp"

namespace restree {

// Raised when an oracle run contradicts something it was built to witness
// (currently: a non-unique coordinatewise minimum of Z_top in range).
class OracleError : public Error {
public:
    using Error::Error;
};

struct OracleConfig {
    std::int64_t coeff_bound = 8;   // enough for every ADE fundamental cycle (max 6, in E8)
    std::int64_t sample_bound = 3;  // entries of definiteness sample vectors lie in [-3, 3]
    std::size_t max_vertices = 8;
};

// Exhaustive search for the fundamental cycle: enumerate all cycles with
// 1 <= a_i <= coeff_bound, collect the members of Z_top, and return the
// coordinatewise-minimal member. Returns nullopt when no member exists in
// range; throws OracleError when the members admit no unique minimum.
// Independent of the Laufer implementation by construction.
std::optional<Cycle> brute_force_zmin(const LabelledTree& t, const OracleConfig& cfg = {});

// Definiteness by sampling: false iff some nonzero integer vector with entries
// in [-sample_bound, sample_bound] pairs to >= 0 with itself. Exhaustive for up
// to 6 vertices, 10^5 seeded-random samples above that. One-sided: a false
// verdict refutes negative definiteness; a true verdict proves nothing.
bool sample_definiteness(const IntersectionForm& f, const OracleConfig& cfg = {});

// Evaluates b_1 - 1/(b_2 - 1/(...)) for a chain of weights (-b_1, ..., -b_k),
// reconstructing the fraction a Hirzebruch-Jung expansion came from.
Rat evaluate_hj_chain(const std::vector<std::int64_t>& weights);

}  // namespace restree
