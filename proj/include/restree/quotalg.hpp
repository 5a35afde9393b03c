#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "restree/numeric.hpp"
#include "restree/tree.hpp"

namespace restree {

// A rational multiple of x^(xexp) y^(yexp).
struct Monomial {
    std::int64_t xexp = 0;
    std::int64_t yexp = 0;
    Rat coeff = 1;
};

// Invariance of a monomial under the diagonal action of 1/m(1,2), i.e. the
// congruence xexp + 2*yexp = 0 (mod m). Roots of unity never appear; the
// congruence IS the action on monomials. Requires m >= 2 and nonnegative
// exponents.
bool is_invariant(const Monomial& mono, std::int64_t m);

// The n+1 invariant generators of 1/m(1,2) with m = 2n-1:
// index 0 is a = x^m, index i in 1..n-1 is b_i = x^(m-2i) y^i, index n is
// c = y^m.
Monomial invariant_generator(std::int64_t index, std::int64_t n);

struct MinorReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::size_t minors_checked = 0;  // one per column pair of the 2 x n matrix
    bool all_zero = false;
    std::vector<std::string> failures;  // "minor(j,k)" entries, empty when all_zero
};

// Substitutes a, b_i, c into every 2x2 minor of the 2 x n relation matrix
//   ( a   b_1  ...  b_{n-2}  b_{n-1}^2 )
//   ( b_1 b_2  ...  b_{n-1}  c         )
// and checks each is the zero polynomial. Requires n >= 3.
MinorReport verify_minor_relations(std::int64_t n);

// A composable sequence of arrows, read left to right (the composition
// convention: fg means f then g). display renders squares as "(u v)^2".
struct PathWord {
    std::vector<std::string> arrows;
    std::string display;

    bool operator==(const PathWord& other) const { return arrows == other.arrows; }
};

struct PathRelation {
    PathWord lhs;
    PathWord rhs;
};

struct PresentationArrow {
    std::string name;
    std::string from;
    std::string to;
};

// A quiver with relations; every relation has parallel composable sides
// (validated on construction).
struct QuiverPresentation {
    std::vector<std::string> vertices;
    std::vector<PresentationArrow> arrows;
    std::vector<PathRelation> relations;
};

// The presentation of the algebra attached to 1/(2n-1)(1,2): two vertices,
// arrows a, b from vertex 1 to vertex 2 and s_1..s_n back, subject to
//   s_{n-1} b s_n = s_n b s_{n-1}
//   a s_n = (b s_{n-1})^2,  s_n a = (s_{n-1} b)^2
//   a s_{i+1} = b s_i,      s_{i+1} a = s_i b      (1 <= i <= n-2).
// Requires n >= 3. Relation count is 3 + 2(n-2); arrow count is n + 2.
QuiverPresentation lambda_presentation(std::int64_t n);

// The larger presentation the reduction starts from: adds a s_i b = b s_i a
// (all i) and s_i a s_j = s_j a s_i (i < j) to the square and ladder
// relations. Emitted verbatim; the reduction to the minimal list is not
// machine-checked here.
QuiverPresentation lambda_presentation_nonminimal(std::int64_t n);

// True iff every relation's two sides are composable paths with equal source
// and equal target.
bool relations_parallel_composable(const QuiverPresentation& p);

struct HilbertPiece {
    std::string name;        // "e1_e1", "e1_e2", "e2_e1", "e2_e2"
    std::int64_t weight_class = 0;  // residue r: the piece is spanned by monomials
                                    // with xexp + 2*yexp = r (mod m)
    std::vector<std::int64_t> dims;  // dims[d] = # monomials of the class with
                                     // total degree <= d, for d = 0..cap
    std::vector<std::string> generators;  // minimal module generators found up to the cap
};

struct HilbertReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t cap = 0;
    std::vector<HilbertPiece> pieces;  // the four Hom summands of End(R + (a, b_1))
};

// Desk-scale shadow of the Hilbert-series step: graded dimension counts for
// the four Hom summands of End_R(R + (a,b_1)), with monomial models R (class
// 0), (a,b_1) = S_2 (class 2) and its dual (class m-2). Requires n >= 3 and
// 0 <= degree_cap <= 8.
HilbertReport hilbert_consistency(std::int64_t n, std::int64_t degree_cap);

nlohmann::ordered_json presentation_to_json(const QuiverPresentation& p);
nlohmann::ordered_json minor_report_to_json(const MinorReport& report);
nlohmann::ordered_json hilbert_report_to_json(const HilbertReport& report);

}  // namespace restree
