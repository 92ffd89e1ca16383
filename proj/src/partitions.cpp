#include "mfact/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mfact {

OrderedPartition OrderedPartition::finest(int n) {
    return OrderedPartition(n, std::vector<bool>(n > 0 ? n - 1 : 0, true));
}

OrderedPartition OrderedPartition::coarsest(int n) {
    return OrderedPartition(n, std::vector<bool>(n > 0 ? n - 1 : 0, false));
}

OrderedPartition OrderedPartition::from_cuts(int n, std::vector<bool> cuts) {
    if (static_cast<int>(cuts.size()) != (n > 0 ? n - 1 : 0))
        throw DimensionMismatchError("cut vector has wrong length");
    return OrderedPartition(n, std::move(cuts));
}

OrderedPartition OrderedPartition::from_blocks(const std::vector<std::vector<int>>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    std::vector<bool> cuts(n > 0 ? n - 1 : 0, false);
    int next = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw Error("partition blocks must be nonempty");
        for (int v : b) {
            if (v != next)
                throw Error("blocks must be contiguous ascending intervals covering 0..n-1");
            ++next;
        }
        if (next < n) cuts[next - 1] = true;
    }
    return OrderedPartition(n, std::move(cuts));
}

int OrderedPartition::block_count() const {
    if (n_ == 0) return 0;
    int c = 1;
    for (bool cut : cuts_)
        if (cut) ++c;
    return c;
}

std::vector<std::pair<int, int>> OrderedPartition::intervals() const {
    std::vector<std::pair<int, int>> out;
    int begin = 0;
    for (int k = 0; k < n_; ++k) {
        const bool last = (k == n_ - 1) || cuts_[k];
        if (last) {
            out.emplace_back(begin, k + 1);
            begin = k + 1;
        }
    }
    return out;
}

std::vector<std::vector<int>> OrderedPartition::blocks() const {
    std::vector<std::vector<int>> out;
    for (auto [b, e] : intervals()) {
        std::vector<int> block(e - b);
        for (int i = b; i < e; ++i) block[i - b] = i;
        out.push_back(std::move(block));
    }
    return out;
}

bool OrderedPartition::encompasses(std::span<const int> set) const {
    if (set.empty()) return true;
    auto [lo, hi] = std::minmax_element(set.begin(), set.end());
    if (*lo < 0 || *hi >= n_) throw IndexOutOfRangeError("set index out of range");
    for (int k = *lo; k < *hi; ++k)
        if (cuts_[k]) return false;
    return true;
}

OrderedPartition glb(const OrderedPartition& p1, const OrderedPartition& p2) {
    if (p1.size() != p2.size())
        throw DimensionMismatchError("glb of partitions of different orders");
    const int n = p1.size();
    std::vector<bool> cuts(n > 0 ? n - 1 : 0);
    for (int k = 0; k + 1 < n; ++k) cuts[k] = p1.cut_after(k) || p2.cut_after(k);
    return OrderedPartition::from_cuts(n, std::move(cuts));
}

bool is_refinement(const OrderedPartition& p1, const OrderedPartition& p2) {
    if (p1.size() != p2.size())
        throw DimensionMismatchError("refinement test on partitions of different orders");
    for (int k = 0; k + 1 < p1.size(); ++k)
        if (p2.cut_after(k) && !p1.cut_after(k)) return false;
    return true;
}

namespace {

// cuts[k] = true iff the rectangle rows 0..k, cols k+1..n-1 of |A| (or of
// |A^T| for the upper variant) is structurally zero.
std::vector<bool> self_partition_cuts(const MMatrix& a, bool upper) {
    const int n = a.size();
    const double thr = a.zero_threshold();
    std::vector<bool> cuts(n > 0 ? n - 1 : 0, false);
    // suffix[i][j] = max over j' >= j of |a(i,j')| (transposed for `upper`)
    std::vector<double> suffix(static_cast<std::size_t>(n) * (n + 1), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= 0; --j) {
            const double v = std::abs(upper ? a(j, i) : a(i, j));
            suffix[static_cast<std::size_t>(i) * (n + 1) + j] =
                std::max(v, suffix[static_cast<std::size_t>(i) * (n + 1) + j + 1]);
        }
    for (int k = 0; k + 1 < n; ++k) {
        double rect = 0.0;
        for (int i = 0; i <= k; ++i)
            rect = std::max(rect, suffix[static_cast<std::size_t>(i) * (n + 1) + k + 1]);
        cuts[k] = rect <= thr;
    }
    return cuts;
}

}  // namespace

OrderedPartition block_lower_self_partition(const MMatrix& a) {
    return OrderedPartition::from_cuts(a.size(), self_partition_cuts(a, false));
}

OrderedPartition block_upper_self_partition(const MMatrix& a) {
    return OrderedPartition::from_cuts(a.size(), self_partition_cuts(a, true));
}

OrderedPartition finest_encompassing(const std::vector<std::vector<int>>& sets, int n) {
    std::vector<bool> cuts(n > 0 ? n - 1 : 0, true);
    for (const auto& set : sets) {
        if (set.empty()) throw Error("encompassed sets must be nonempty");
        auto [lo, hi] = std::minmax_element(set.begin(), set.end());
        if (*lo < 0 || *hi >= n) throw IndexOutOfRangeError("set index out of range");
        for (int k = *lo; k < *hi; ++k) cuts[k] = false;
    }
    return OrderedPartition::from_cuts(n, std::move(cuts));
}

}  // namespace mfact
