#pragma once

#include <vector>

#include "restree/numeric.hpp"
#include "restree/tree.hpp"

namespace restree {

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

class NotNegativeDefiniteError : public Error {
public:
    using Error::Error;
};

// The symmetric matrix M_T of a labelled tree: diagonal entries are the
// self-intersection numbers, off-diagonal entries are 1 exactly on edges.
// Row/column order equals the tree's vertex order.
class IntersectionForm {
public:
    static IntersectionForm of(const LabelledTree& t);

    std::size_t size() const { return names_.size(); }
    std::int64_t at(std::size_t i, std::size_t j) const { return matrix_[i][j]; }
    const std::vector<std::string>& names() const { return names_; }

    // The bilinear pairing y . z = y^T M z, computed exactly.
    Int pair(const Cycle& y, const Cycle& z) const;

    // Sylvester test: (-1)^k det(leading k x k minor) > 0 for every k, with the
    // minors obtained by fraction-free Bareiss elimination.
    bool is_negative_definite() const;

    // Exact solution of M x = b; the result is back-substituted before returning.
    std::vector<Rat> solve(const std::vector<Rat>& b) const;

    // Rows of signed integers, one line per row. Debugging only; this module
    // owns no file format.
    std::string to_debug_string() const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::int64_t>> matrix_;
};

inline IntersectionForm intersection_matrix(const LabelledTree& t) {
    return IntersectionForm::of(t);
}

// Exact rational d_i, one per vertex, solving M d = b with b_i = -2 - w_i.
// By adjunction d_i is the discrepancy of E_i over Spec R; d = 0 iff every
// weight is -2 (the crepant case).
struct DiscrepancyVector {
    std::vector<Rat> values;  // tree vertex order
};

// Requires a negative definite tree (throws NotNegativeDefiniteError otherwise).
DiscrepancyVector discrepancies(const LabelledTree& t);

}  // namespace restree
