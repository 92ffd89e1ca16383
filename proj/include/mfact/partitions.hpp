#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mfact/matrix.hpp"

namespace mfact {

// Order-preserving partition of {0..n-1}.  Blocks are contiguous intervals,
// so the partition is just the set of boundaries: cut_after(k) means a block
// ends at position k.  Lattice operations become bitwise set operations.
class OrderedPartition {
public:
    OrderedPartition() = default;

    static OrderedPartition finest(int n);    // every boundary cut
    static OrderedPartition coarsest(int n);  // single block
    static OrderedPartition from_cuts(int n, std::vector<bool> cuts);
    // Validates that the blocks are a contiguous ascending cover of {0..n-1}.
    static OrderedPartition from_blocks(const std::vector<std::vector<int>>& blocks);

    int size() const { return n_; }
    int block_count() const;
    bool cut_after(int k) const { return cuts_[k]; }

    std::vector<std::pair<int, int>> intervals() const;  // [begin, end) per block
    std::vector<std::vector<int>> blocks() const;

    // The whole index set lies inside one block.
    bool encompasses(std::span<const int> set) const;

    bool operator==(const OrderedPartition& other) const = default;

private:
    OrderedPartition(int n, std::vector<bool> cuts) : n_(n), cuts_(std::move(cuts)) {}

    int n_ = 0;
    std::vector<bool> cuts_;  // size max(0, n-1)
};

// Greatest lower bound in the refinement lattice: blockwise intersections.
OrderedPartition glb(const OrderedPartition& p1, const OrderedPartition& p2);

// True iff every block of p1 is contained in some block of p2.
bool is_refinement(const OrderedPartition& p1, const OrderedPartition& p2);

// Finest order-preserving partition under which the matrix is block lower
// (resp. upper) triangular; determined purely by the structural-zero pattern.
OrderedPartition block_lower_self_partition(const MMatrix& a);
OrderedPartition block_upper_self_partition(const MMatrix& a);

// Finest order-preserving partition in which each given set lies inside one
// block.  Sets use 0-based indices into {0..n-1}.
OrderedPartition finest_encompassing(const std::vector<std::vector<int>>& sets, int n);

}  // namespace mfact
