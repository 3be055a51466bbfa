#pragma once

#include "exalg/graded.hpp"
#include "exalg/scalar.hpp"

#include <optional>
#include <vector>

namespace exalg {

/// Dense exact matrix over Q(i) for plain (ungraded) linear algebra.
struct ScalarMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> a; // row-major

    ScalarMatrix() = default;
    ScalarMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Row-reduce in place; returns pivot column of each pivot row.
std::vector<std::size_t> rref(ScalarMatrix& m);

/// One solution of Ax = b with all free variables set to zero (the
/// lexicographically minimal choice under the column order), or nullopt.
std::optional<std::vector<Scalar>> solve(const ScalarMatrix& A, const std::vector<Scalar>& b);

/// Basis of the null space, deterministic order.
std::vector<std::vector<Scalar>> kernel(const ScalarMatrix& A);

/// Inverse of a unipotent matrix over Series (identity plus terms of positive
/// bounded order), by the Neumann series to the ring truncation.
GradedMap invert_unipotent(const GradedMap& m);

} // namespace exalg
