#pragma once

#include <optional>
#include <vector>

#include "mfact/digraph.hpp"
#include "mfact/matrix.hpp"

namespace mfact {

// Closed interval of integers [lo, hi].  The T_i/F_i sets are downward
// closed above mu_i, so an interval is all they ever need.
struct IndexInterval {
    int lo = 0;
    int hi = -1;

    bool empty() const { return hi < lo; }
    int count() const { return empty() ? 0 : hi - lo + 1; }
    bool is_singleton() const { return lo == hi; }
    bool contains(int v) const { return lo <= v && v <= hi; }
    bool subset_of(const IndexInterval& o) const {
        return empty() || (o.lo <= lo && hi <= o.hi);
    }
    std::vector<int> to_vector() const;

    bool operator==(const IndexInterval&) const = default;
};

// The singular classes S_1..S_m of an M-matrix, ordered by max(S_i), with
// mu_i = max(S_i) and the access intervals
//   T_i = { l >= mu_i : some j >= l has access to S_i }
//   F_i = { l >= mu_i : some j >= l is accessed from S_i }.
struct SingularStructure {
    int n = 0;
    std::vector<std::vector<int>> classes;  // S_i, vertices ascending
    std::vector<int> mu;                    // mu[i] = classes[i].back()
    std::vector<IndexInterval> T;
    std::vector<IndexInterval> F;
    AccessClosure closure;                  // closure of G(A), kept for the strategies
    ClassList all_classes;                  // every class of G(A), with singular flags

    int count() const { return static_cast<int>(mu.size()); }
};

SingularStructure singular_structure(const MMatrix& a, bool check_m = true,
                                     double m_tol = kDefaultMTol,
                                     double sing_tol = kDefaultSingTol);

// Varga-Cai: T_i = {mu_i} for every i.  Equivalent to the existence of a
// triangular LU into M-matrices with L nonsingular.
bool varga_cai_condition(const SingularStructure& s);

// For every i, T_i = {mu_i} or F_i = {mu_i}.  Equivalent to the existence of
// a triangular LU into M-matrices with both factors allowed to be singular.
bool lu_existence_condition(const SingularStructure& s);

struct SubdiagonalBounds {
    int lower = 0;  // |union R_i|: forced subdiagonal nonzeros of any U in U(A)
    int upper = 0;  // sum |R_i|: worst case realized by the spur factorization

    bool operator==(const SubdiagonalBounds&) const = default;
};

// R_i = { j > mu_i : j has access to mu_i }.
SubdiagonalBounds subdiagonal_bounds(const SingularStructure& s);

// Smallest class Q of X with Q contained in `within` and X_QQ singular,
// if one exists.  Used for the class-placement checks.
std::optional<std::vector<int>> singular_subclass(const MMatrix& x,
                                                  std::span<const int> within,
                                                  double sing_tol = kDefaultSingTol);

}  // namespace mfact
