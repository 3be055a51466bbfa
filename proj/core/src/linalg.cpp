#include "exalg/linalg.hpp"

namespace exalg {

std::vector<std::size_t> rref(ScalarMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t p = row;
        while (p < m.rows && m.at(p, col).is_zero()) ++p;
        if (p == m.rows) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
        Scalar inv = Scalar(1) / m.at(row, col);
        for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (std::size_t c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::optional<std::vector<Scalar>> solve(const ScalarMatrix& A, const std::vector<Scalar>& b) {
    if (b.size() != A.rows) throw StructuralError("solve: rhs size mismatch");
    ScalarMatrix aug(A.rows, A.cols + 1);
    for (std::size_t r = 0; r < A.rows; ++r) {
        for (std::size_t c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols) = b[r];
    }
    auto pivots = rref(aug);
    // Inconsistent iff a pivot lands in the rhs column.
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
    std::vector<Scalar> x(A.cols, Scalar(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, A.cols);
    return x;
}

std::vector<std::vector<Scalar>> kernel(const ScalarMatrix& A) {
    ScalarMatrix m = A;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(A.cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t freec = 0; freec < A.cols; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<Scalar> v(A.cols, Scalar(0));
        v[freec] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

GradedMap invert_unipotent(const GradedMap& m) {
    if (!m.source()->same(*m.target()))
        throw StructuralError("invert_unipotent: endomorphism required");
    GradedMap id = GradedMap::identity(m.source(), m.ring());
    GradedMap n = m - id;
    if (n.transform([](const Series& s) { return s.truncated(0); }).is_zero() == false)
        throw StructuralError("invert_unipotent: matrix is not identity at order zero");
    GradedMap result = id;
    GradedMap power = id;
    for (int k = 1; k <= m.ring()->max_total(); ++k) {
        power = compose(n, power);
        if (power.is_zero()) break;
        if (k % 2 == 1)
            result -= power;
        else
            result += power;
    }
    return result;
}

} // namespace exalg
