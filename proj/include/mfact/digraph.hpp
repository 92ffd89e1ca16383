#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mfact/matrix.hpp"

namespace mfact {

// Directed graph on vertices 0..n-1, self-loops allowed.
struct DiGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // adjacency lists, targets ascending

    static DiGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    bool has_edge(int i, int j) const;
    std::vector<std::pair<int, int>> edges() const;  // lexicographic
    DiGraph reversed() const;
};

// Boolean reachability matrix of the closure; reach(i,i) is always true
// (the empty path links every vertex to itself).
struct AccessClosure {
    int n = 0;
    std::vector<std::uint8_t> reach;  // row major n*n

    bool reaches(int i, int j) const {
        return reach[static_cast<std::size_t>(i) * n + j] != 0;
    }
};

// Strongly connected classes.  Vertices within a class ascend; the list is
// ordered by smallest vertex.  `singular` is empty until the classes have
// been marked against a matrix.
struct ClassList {
    std::vector<std::vector<int>> classes;
    std::vector<bool> singular;

    int count() const { return static_cast<int>(classes.size()); }
};

// Edge (i,j) iff a_ij is not structurally zero.
DiGraph digraph_of(const MMatrix& a);

ClassList classes_of(const DiGraph& g);

AccessClosure closure_of(const DiGraph& g);

// Flags class J singular iff sigma_min(A_JJ) <= sing_tol * max(1, ||A_JJ||_inf).
// Requires A to be an M-matrix (the test exploits that an irreducible
// M-matrix block is at worst rank-1 deficient).
ClassList mark_singular_classes(const MMatrix& a, ClassList c,
                                double sing_tol = kDefaultSingTol);

// sigma_min test on one index set, shared by the class marker and the verifier.
bool is_block_singular(const MMatrix& a, std::span<const int> block,
                       double sing_tol = kDefaultSingTol);

// Spectral radius of an entrywise nonnegative matrix, taken as the max of
// the Perron roots of its irreducible diagonal blocks.  A dense eigensolve
// on the whole matrix loses ~eps^(1/h) of accuracy when h coupled classes
// share the radius (the eigenvalue turns defective); per-class Perron roots
// are simple and stay well-conditioned.
double spectral_radius_nonneg(const MMatrix& p);

}  // namespace mfact
