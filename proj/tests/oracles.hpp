#pragma once

// Independent oracles for the property suites.  Everything here recomputes
// from first principles (BFS, exhaustive search) and stays off the library's
// code paths for the quantity it checks.

#include <random>
#include <vector>

#include "mfact/digraph.hpp"
#include "mfact/matrix.hpp"
#include "mfact/partitions.hpp"

namespace oracles {

// Reachability by BFS from every vertex (vs. the Floyd-Warshall kernel).
mfact::AccessClosure closure_bfs(const mfact::DiGraph& g);

// Classes as equivalence sets of mutual reachability over the BFS closure,
// reported like the library does (vertices ascending, list by smallest).
std::vector<std::vector<int>> classes_bruteforce(const mfact::DiGraph& g);

// Definition-level check: A_{block_i, above-block_i} structurally zero.
bool is_block_lower_wrt(const mfact::MMatrix& a, const mfact::OrderedPartition& p);

// Every partition for which A is block lower triangular, by exhaustive
// boundary subsets.  Only sensible for small n.
std::vector<mfact::OrderedPartition> all_block_lower_partitions(const mfact::MMatrix& a);

mfact::DiGraph random_digraph(std::mt19937_64& rng, int n, double density);

// Random M-matrix alpha*I - P built from irreducible diagonal blocks with a
// random acyclic coupling pattern.  With `singular`, at least one block is
// normalized to spectral radius alpha (several with luck), so the singular
// classes are known by construction and recorded in `singular_blocks`.
struct GeneratedM {
    mfact::MMatrix a;
    std::vector<std::vector<int>> blocks;  // classes by construction (ascending sets)
    std::vector<bool> block_singular;
};
GeneratedM random_m_matrix(std::mt19937_64& rng, int n, bool singular);

}  // namespace oracles
