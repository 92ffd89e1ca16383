#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "mfact/errors.hpp"

namespace mfact {

inline constexpr double kDefaultZeroTol = 1e-9;  // structural-zero threshold (relative)
inline constexpr double kDefaultMTol = 1e-8;     // spectral-radius slack for is_m_matrix
inline constexpr double kDefaultSingTol = 1e-8;  // sigma_min threshold for class singularity
inline constexpr double kDefaultProductTol = 1e-10;

// Dense square real matrix, row major.  Carries the structural-zero
// tolerance used by every graph/pattern computation: an entry e is
// structurally zero iff |e| <= zero_tol * max(1, max_ij |a_ij|).
class MMatrix {
public:
    MMatrix() = default;

    explicit MMatrix(int n, double zero_tol = kDefaultZeroTol)
        : n_(check_order(n)), zero_tol_(check_tol(zero_tol)),
          a_(static_cast<std::size_t>(n) * n, 0.0) {}

    MMatrix(int n, std::vector<double> entries, double zero_tol = kDefaultZeroTol)
        : n_(check_order(n)), zero_tol_(check_tol(zero_tol)), a_(std::move(entries)) {
        if (a_.size() != static_cast<std::size_t>(n_) * n_)
            throw DimensionMismatchError("entry count does not match order");
    }

    static MMatrix identity(int n, double zero_tol = kDefaultZeroTol);

    // Row-by-row construction, mainly for fixtures and tests.
    static MMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows,
                             double zero_tol = kDefaultZeroTol);

    int size() const { return n_; }
    double zero_tol() const { return zero_tol_; }
    void set_zero_tol(double t) { zero_tol_ = check_tol(t); }

    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    std::span<const double> data() const { return a_; }
    std::span<double> data() { return a_; }

    double max_abs() const;
    double inf_norm() const;  // max row sum of |a_ij|

    // zero_tol * max(1, max_abs())
    double zero_threshold() const;
    bool is_structural_zero(int i, int j) const;

    MMatrix transpose() const;
    MMatrix submatrix(std::span<const int> rows, std::span<const int> cols) const;
    MMatrix principal_submatrix(std::span<const int> indices) const {
        return submatrix(indices, indices);
    }

    // Value equality: same order, bitwise-equal entries.  The tolerance is
    // interpretation, not value, and stays out of the comparison.
    bool operator==(const MMatrix& other) const {
        return n_ == other.n_ && a_ == other.a_;
    }

private:
    static int check_order(int n) {
        if (n < 0) throw DimensionMismatchError("matrix order must be nonnegative");
        return n;
    }
    static double check_tol(double t) {
        if (t < 0) throw Error("zero_tol must be nonnegative");
        return t;
    }

    int n_ = 0;
    double zero_tol_ = kDefaultZeroTol;
    std::vector<double> a_;
};

// Z-matrix: every off-diagonal entry is <= the structural-zero threshold
// above zero.  The diagonal is unconstrained.
bool is_z_matrix(const MMatrix& a);

// M-matrix: Z-pattern, and with alpha = max(0, max_i a_ii) and
// P = clamp(alpha*I - A, >= 0), alpha >= rho(P) - m_tol*(1+alpha).
bool is_m_matrix(const MMatrix& a, double m_tol = kDefaultMTol);

// One step of Gaussian elimination on the pivot diagonal entry (0-based):
// returns the (n-1)x(n-1) Schur complement on the remaining indices.
// Throws ZeroPivotError if a(pivot,pivot) is structurally zero.
MMatrix schur_step(const MMatrix& a, int pivot);

MMatrix multiply(const MMatrix& a, const MMatrix& b);

// max_ij |a_ij - b_ij|
double max_abs_diff(const MMatrix& a, const MMatrix& b);

// Inverse of a lower triangular matrix by forward substitution.
// Throws ZeroPivotError on a structurally zero diagonal entry.
MMatrix invert_lower_triangular(const MMatrix& l);

}  // namespace mfact
