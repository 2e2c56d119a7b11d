#pragma once

#include "apolar/rational.hpp"

#include <optional>
#include <vector>

namespace apolar {

// Dense row-major matrix of exact rationals.
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> entries;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

    Rational& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const RatMatrix&) const = default;
};

struct RrefResult {
    RatMatrix mat;
    std::vector<int> pivot_cols;  // increasing; these are the lexicographically-first
                                  // maximal independent column set
    int rank = 0;
};

// Reduced row echelon form by exact Gaussian elimination, pivoting on the
// first nonzero entry of each column.
RrefResult rref(RatMatrix m);

// Canonical basis of the right null space: one vector per free column, with
// that free variable set to 1 (free columns taken in increasing order).
// Empty iff m has full column rank.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

// One exact solution of m x = b with all free variables set to zero, or
// nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b);

int rank(const RatMatrix& m);

std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& v);

RatMatrix transpose(const RatMatrix& m);

// Determinant of a square matrix.
Rational determinant(RatMatrix m);

}  // namespace apolar
