#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mfact/matrix.hpp"
#include "mfact/partitions.hpp"
#include "mfact/singular_structure.hpp"

namespace mfact {

// Partition (J, K) of the singular-class indices {0..m-1}: classes in J are
// absorbed into L's block structure, classes in K into U's.
struct SplitJK {
    std::vector<int> J;
    std::vector<int> K;

    bool operator==(const SplitJK&) const = default;
};

// Admissible off-triangle positions.  For the spur factorization these are
// the (j, mu_i) below the diagonal; for the LBU middle factor also the
// (mu_i, j) to the right and the non-mu diagonal.
struct SpurPattern {
    std::vector<std::pair<int, int>> positions;  // sorted

    bool contains(int j, int k) const;
    int count() const { return static_cast<int>(positions.size()); }

    bool operator==(const SpurPattern&) const = default;
};

enum class FactorKind { BlockLU, SpurLU, Lbu };

const char* to_string(FactorKind k);

struct FactorizationResult {
    FactorKind kind = FactorKind::BlockLU;
    MMatrix L;
    MMatrix U;
    std::optional<MMatrix> B;              // LBU only
    std::optional<SpurPattern> chi;        // SpurLU and LBU
    std::optional<SplitJK> requested_split;
    std::optional<SplitJK> realized_split; // where the singular classes actually landed
    OrderedPartition psi;                  // claimed bound for L's lower self-partition
    OrderedPartition upsilon;              // claimed bound for U's upper self-partition
};

// Recursive block LU: A = L*U with L,U M-matrices, the block lower
// triangular self-partition of L refining psi = finest_encompassing{F_i: i in J}
// and the block upper triangular self-partition of U refining
// upsilon = finest_encompassing{T_i: i in K}.
FactorizationResult factor_lu_partitioned(const MMatrix& a, const SplitJK& split);

// Strategy that greedily assigns each singular class to the smaller of its
// two candidate blocks, sweeping up nested sets along the way.
SplitJK strategy_min_blocks(const SingularStructure& s);

// Permutation (as the vertex order: order[p] = original vertex at position p)
// moving the mu_i to the tail, accessors after accessed, so that the
// permuted matrix has F_i = {mu_i} for every i.
std::vector<int> strategy_permutation(const SingularStructure& s);

// PAP^T for the given order: result(i,j) = a(order[i], order[j]).
MMatrix apply_symmetric_permutation(const MMatrix& a, std::span<const int> order);

// The 0/1 matrix P realizing the order, P(i, order[i]) = 1.
MMatrix permutation_matrix(std::span<const int> order);

// Admissible subdiagonal positions (j, mu_i) for j with access to mu_i.
SpurPattern spur_pattern(const SingularStructure& s);

// Three-part LBU pattern: non-mu diagonal, mu columns below, mu rows right.
SpurPattern lbu_pattern(const SingularStructure& s);

// Upper self-partition bound implied by the spur columns' spans.
OrderedPartition spur_span_partition(const SingularStructure& s);

// Gaussian elimination that never pivots on a mu column: L is unit lower
// triangular and nonsingular, U is upper triangular except for spurs in the
// mu columns (subdiagonal support inside chi), u_jj = 0 iff j is a mu.
FactorizationResult factor_lu_spurs(const MMatrix& a);

// A = L*B*U with L,U nonsingular triangular M-matrices and B an M-matrix
// supported on the three-part pattern (non-mu diagonal, mu columns below,
// mu rows to the right).
FactorizationResult factor_lbu(const MMatrix& a);

}  // namespace mfact
