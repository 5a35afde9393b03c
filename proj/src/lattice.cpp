#include "restree/lattice.hpp"

namespace restree {

IntersectionForm IntersectionForm::of(const LabelledTree& t) {
    IntersectionForm f;
    f.names_ = t.names();
    f.matrix_.assign(t.size(), std::vector<std::int64_t>(t.size(), 0));
    for (std::size_t v = 0; v < t.size(); ++v) f.matrix_[v][v] = t.weight(v);
    for (auto [u, v] : t.edges()) {
        f.matrix_[u][v] = 1;
        f.matrix_[v][u] = 1;
    }
    return f;
}

Int IntersectionForm::pair(const Cycle& y, const Cycle& z) const {
    if (y.coeffs.size() != size() || z.coeffs.size() != size()) {
        throw DimensionMismatchError("cycle length does not match the form");
    }
    Int acc = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        if (y.coeffs[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < size(); ++j) {
            if (matrix_[i][j] == 0 || z.coeffs[j] == 0) continue;
            row += to_int(matrix_[i][j]) * to_int(z.coeffs[j]);
        }
        acc += to_int(y.coeffs[i]) * row;
    }
    return acc;
}

bool IntersectionForm::is_negative_definite() const {
    const std::size_t n = size();
    if (n == 0) return true;  // vacuous
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = to_int(matrix_[i][j]);

    // After k elimination steps the pivot a[k][k] equals the determinant of the
    // leading (k+1) x (k+1) minor.
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const Int& pivot = a[k][k];
        int want = (k % 2 == 0) ? -1 : 1;  // sign of (-1)^(k+1) det > 0
        if (sgn(pivot) != want) return false;
        if (k + 1 == n) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = pivot * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = pivot;
    }
    return true;
}

std::vector<Rat> IntersectionForm::solve(const std::vector<Rat>& b) const {
    const std::size_t n = size();
    if (b.size() != n) throw DimensionMismatchError("right-hand side length mismatch");
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = to_rat(matrix_[i][j]);
        m[i][n] = b[i];
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw SingularMatrixError("intersection form is singular");
        if (pivot != col) std::swap(m[pivot], m[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rat factor = m[row][col] / m[col][col];
            for (std::size_t j = col; j <= n; ++j) m[row][j] -= factor * m[col][j];
        }
    }

    std::vector<Rat> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat acc = m[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * x[j];
        x[i] = acc / m[i][i];
    }

    for (std::size_t i = 0; i < n; ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += to_rat(matrix_[i][j]) * x[j];
        if (acc != b[i]) throw Error("internal error: solution failed back-substitution");
    }
    return x;
}

std::string IntersectionForm::to_debug_string() const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            if (j != 0) out += " ";
            out += std::to_string(matrix_[i][j]);
        }
        out += "\n";
    }
    return out;
}

DiscrepancyVector discrepancies(const LabelledTree& t) {
    IntersectionForm f = IntersectionForm::of(t);
    if (!f.is_negative_definite()) {
        throw NotNegativeDefiniteError("discrepancies need a negative definite tree");
    }
    std::vector<Rat> b(t.size());
    for (std::size_t v = 0; v < t.size(); ++v) b[v] = to_rat(-2 - t.weight(v));
    return DiscrepancyVector{f.solve(b)};
}

}  // namespace restree
