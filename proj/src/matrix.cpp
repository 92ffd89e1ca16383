#include "mfact/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfact/digraph.hpp"
#include "mfact/kernels.hpp"
#include "mfact/numerics.hpp"

namespace mfact {

MMatrix MMatrix::identity(int n, double zero_tol) {
    MMatrix m(n, zero_tol);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

MMatrix MMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows,
                           double zero_tol) {
    const int n = static_cast<int>(rows.size());
    MMatrix m(n, zero_tol);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw DimensionMismatchError("row " + std::to_string(i + 1) + " has wrong length");
        int j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

double MMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

double MMatrix::inf_norm() const {
    double norm = 0.0;
    for (int i = 0; i < n_; ++i) {
        double row = 0.0;
        for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
        norm = std::max(norm, row);
    }
    return norm;
}

double MMatrix::zero_threshold() const {
    return zero_tol_ * std::max(1.0, max_abs());
}

bool MMatrix::is_structural_zero(int i, int j) const {
    return std::abs((*this)(i, j)) <= zero_threshold();
}

MMatrix MMatrix::transpose() const {
    MMatrix t(n_, zero_tol_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

MMatrix MMatrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
    for (int r : rows)
        if (r < 0 || r >= n_) throw IndexOutOfRangeError("row index out of range");
    for (int c : cols)
        if (c < 0 || c >= n_) throw IndexOutOfRangeError("column index out of range");
    if (rows.size() != cols.size())
        throw DimensionMismatchError("submatrix must be square");
    MMatrix s(static_cast<int>(rows.size()), zero_tol_);
    for (int i = 0; i < s.size(); ++i)
        for (int j = 0; j < s.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    return s;
}

bool is_z_matrix(const MMatrix& a) {
    const double thr = a.zero_threshold();
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (i != j && a(i, j) > thr) return false;
    return true;
}

bool is_m_matrix(const MMatrix& a, double m_tol) {
    if (!is_z_matrix(a)) return false;
    const int n = a.size();
    if (n == 0) return true;
    double alpha = 0.0;
    for (int i = 0; i < n; ++i) alpha = std::max(alpha, a(i, i));
    MMatrix p(n, a.zero_tol());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double v = (i == j ? alpha - a(i, i) : -a(i, j));
            p(i, j) = std::max(0.0, v);  // clamp roundoff-positive off-diagonals
        }
    const double rho = spectral_radius_nonneg(p);
    return alpha >= rho - m_tol * (1.0 + alpha);
}

MMatrix schur_step(const MMatrix& a, int pivot) {
    const int n = a.size();
    if (pivot < 0 || pivot >= n) throw IndexOutOfRangeError("pivot out of range");
    if (a.is_structural_zero(pivot, pivot))
        throw ZeroPivotError(pivot, "structurally zero pivot at position " +
                                        std::to_string(pivot + 1));
    const double d = a(pivot, pivot);
    MMatrix b(n - 1, a.zero_tol());
    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int i = 0; i < n; ++i)
        if (i != pivot) rest.push_back(i);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j)
            b(i, j) = a(rest[i], rest[j]) - a(rest[i], pivot) * a(pivot, rest[j]) / d;
    return b;
}

MMatrix multiply(const MMatrix& a, const MMatrix& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("product of unequal orders");
    MMatrix c(a.size(), a.zero_tol());
    kernels::matmul(a.data().data(), b.data().data(), c.data().data(), a.size());
    return c;
}

double max_abs_diff(const MMatrix& a, const MMatrix& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("comparing unequal orders");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

MMatrix invert_lower_triangular(const MMatrix& l) {
    const int n = l.size();
    for (int i = 0; i < n; ++i)
        if (l.is_structural_zero(i, i))
            throw ZeroPivotError(i, "singular triangular factor: zero diagonal at position " +
                                        std::to_string(i + 1));
    MMatrix x(n, l.zero_tol());
    for (int c = 0; c < n; ++c) {
        x(c, c) = 1.0 / l(c, c);
        for (int i = c + 1; i < n; ++i) {
            double s = 0.0;
            for (int k = c; k < i; ++k) s += l(i, k) * x(k, c);
            x(i, c) = -s / l(i, i);
        }
    }
    return x;
}

}  // namespace mfact
