#include "apolar/matrix.hpp"

#include "apolar/errors.hpp"

#include <utility>

namespace apolar {

RrefResult rref(RatMatrix m) {
    RrefResult res;
    int pivot_row = 0;
    for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        int sel = -1;
        for (int i = pivot_row; i < m.rows; ++i) {
            if (m.at(i, col) != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pivot_row) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
        }
        Rational inv = Rational(1) / m.at(pivot_row, col);
        for (int j = col; j < m.cols; ++j) m.at(pivot_row, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == pivot_row || m.at(i, col) == 0) continue;
            Rational factor = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= factor * m.at(pivot_row, j);
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    res.mat = std::move(m);
    return res;
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols);
        v[free_col] = 1;
        for (size_t p = 0; p < r.pivot_cols.size(); ++p) {
            v[r.pivot_cols[p]] = -r.mat.at(static_cast<int>(p), free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw MathError("solve: rhs length != row count");
    RatMatrix aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    RrefResult r = rref(std::move(aug));
    // a pivot in the augmented column marks inconsistency
    for (int c : r.pivot_cols) {
        if (c == m.cols) return std::nullopt;
    }
    std::vector<Rational> x(m.cols);
    for (size_t p = 0; p < r.pivot_cols.size(); ++p) {
        x[r.pivot_cols[p]] = r.mat.at(static_cast<int>(p), m.cols);
    }
    return x;
}

int rank(const RatMatrix& m) {
    return rref(m).rank;
}

std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != m.cols) throw MathError("mat_vec: size mismatch");
    std::vector<Rational> out(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        Rational acc = 0;
        for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

RatMatrix transpose(const RatMatrix& m) {
    RatMatrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

Rational determinant(RatMatrix m) {
    if (m.rows != m.cols) throw MathError("determinant: matrix not square");
    Rational det = 1;
    for (int col = 0; col < m.cols; ++col) {
        int sel = -1;
        for (int i = col; i < m.rows; ++i) {
            if (m.at(i, col) != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) return 0;
        if (sel != col) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        Rational inv = Rational(1) / m.at(col, col);
        for (int i = col + 1; i < m.rows; ++i) {
            if (m.at(i, col) == 0) continue;
            Rational factor = m.at(i, col) * inv;
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= factor * m.at(col, j);
        }
    }
    return det;
}

}  // namespace apolar
