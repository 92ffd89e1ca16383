#include "mfact/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

namespace mfact {

bool SpurPattern::contains(int j, int k) const {
    return std::binary_search(positions.begin(), positions.end(), std::make_pair(j, k));
}

const char* to_string(FactorKind k) {
    switch (k) {
        case FactorKind::BlockLU: return "lu";
        case FactorKind::SpurLU: return "lu-spurs";
        case FactorKind::Lbu: return "lbu";
    }
    return "?";
}

namespace {

struct BlockLuContext {
    // original vertex -> index of the singular class of A containing it, or -1
    std::vector<int> class_of_vertex;
};

struct LuPair {
    MMatrix L, U;
};

// Recursive construction of the block factorization.  `idx` maps the current
// matrix's positions to original vertices; `in_j` says, per original
// singular class, whether it currently belongs to the L side (transpose
// steps flip it).
LuPair block_lu_worker(const MMatrix& m, const std::vector<int>& idx,
                       const std::vector<bool>& in_j, const BlockLuContext& ctx) {
    const int k = m.size();
    const double tol = m.zero_tol();
    if (k == 0) return {MMatrix(0, tol), MMatrix(0, tol)};

    if (!m.is_structural_zero(0, 0)) {
        // Ordinary elimination step on the leading pivot.
        const MMatrix b = schur_step(m, 0);
        const std::vector<int> sub_idx(idx.begin() + 1, idx.end());
        LuPair inner = block_lu_worker(b, sub_idx, in_j, ctx);
        MMatrix l(k, tol), u(k, tol);
        l(0, 0) = 1.0;
        u(0, 0) = m(0, 0);
        for (int j = 1; j < k; ++j) {
            l(j, 0) = m(j, 0) / m(0, 0);
            u(0, j) = m(0, j);
        }
        for (int i = 1; i < k; ++i)
            for (int j = 1; j < k; ++j) {
                l(i, j) = inner.L(i - 1, j - 1);
                u(i, j) = inner.U(i - 1, j - 1);
            }
        return {std::move(l), std::move(u)};
    }

    // Zero leading diagonal: position 0 is the end of a singular class.
    const int v = idx[0];
    const int ci = ctx.class_of_vertex[v];
    if (ci < 0)
        throw InternalError("zero leading pivot at vertex " + std::to_string(v + 1) +
                            " outside every singular class");

    if (!in_j[ci]) {
        // The class goes to U: run on the transpose with sides swapped.
        std::vector<bool> flipped(in_j.size());
        for (std::size_t i = 0; i < in_j.size(); ++i) flipped[i] = !in_j[i];
        LuPair t = block_lu_worker(m.transpose(), idx, flipped, ctx);
        return {t.U.transpose(), t.L.transpose()};
    }

    // The class goes to L: split off everything the leading vertex accesses.
    const AccessClosure cl = closure_of(digraph_of(m));
    std::vector<int> vset, wset;
    for (int p = 0; p < k; ++p) (cl.reaches(0, p) ? vset : wset).push_back(p);

    std::vector<int> w_idx;
    w_idx.reserve(wset.size());
    for (int p : wset) w_idx.push_back(idx[p]);
    LuPair inner = block_lu_worker(m.principal_submatrix(wset), w_idx, in_j, ctx);

    // L = P [[M_VV, 0], [M_WV, Lhat]] P^-1,  U = P [[I, 0], [0, Uhat]] P^-1
    // with P listing V then W, both ascending.
    std::vector<int> order = vset;
    order.insert(order.end(), wset.begin(), wset.end());
    const int p = static_cast<int>(vset.size());
    MMatrix l(k, tol), u(k, tol);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            double lv = 0.0, uv = 0.0;
            if (r < p && c < p) {
                lv = m(vset[r], vset[c]);
                uv = (r == c) ? 1.0 : 0.0;
            } else if (r >= p && c < p) {
                lv = m(wset[r - p], vset[c]);
            } else if (r >= p && c >= p) {
                lv = inner.L(r - p, c - p);
                uv = inner.U(r - p, c - p);
            }
            l(order[r], order[c]) = lv;
            u(order[r], order[c]) = uv;
        }
    return {std::move(l), std::move(u)};
}

SplitJK normalized_split(const SplitJK& split, int m) {
    std::vector<int> seen(m, 0);
    for (int i : split.J) {
        if (i < 0 || i >= m) throw BadSplitError("J contains an invalid class index");
        ++seen[i];
    }
    for (int i : split.K) {
        if (i < 0 || i >= m) throw BadSplitError("K contains an invalid class index");
        ++seen[i];
    }
    for (int i = 0; i < m; ++i)
        if (seen[i] != 1)
            throw BadSplitError("(J,K) must partition the singular-class indices");
    SplitJK out = split;
    std::sort(out.J.begin(), out.J.end());
    std::sort(out.K.begin(), out.K.end());
    return out;
}

SplitJK realized_placement(const MMatrix& l, const SingularStructure& s) {
    SplitJK realized;
    for (int i = 0; i < s.count(); ++i) {
        if (singular_subclass(l, s.classes[i]))
            realized.J.push_back(i);
        else
            realized.K.push_back(i);
    }
    return realized;
}

}  // namespace

FactorizationResult factor_lu_partitioned(const MMatrix& a, const SplitJK& split) {
    const SingularStructure s = singular_structure(a);
    const SplitJK req = normalized_split(split, s.count());

    std::vector<std::vector<int>> f_sets, t_sets;
    for (int i : req.J) f_sets.push_back(s.F[i].to_vector());
    for (int i : req.K) t_sets.push_back(s.T[i].to_vector());

    BlockLuContext ctx;
    ctx.class_of_vertex.assign(a.size(), -1);
    for (int i = 0; i < s.count(); ++i)
        for (int v : s.classes[i]) ctx.class_of_vertex[v] = i;
    std::vector<bool> in_j(s.count(), false);
    for (int i : req.J) in_j[i] = true;

    std::vector<int> idx(a.size());
    std::iota(idx.begin(), idx.end(), 0);
    LuPair lu = block_lu_worker(a, idx, in_j, ctx);

    FactorizationResult r;
    r.kind = FactorKind::BlockLU;
    r.L = std::move(lu.L);
    r.U = std::move(lu.U);
    r.requested_split = req;
    r.realized_split = realized_placement(r.L, s);
    r.psi = finest_encompassing(f_sets, a.size());
    r.upsilon = finest_encompassing(t_sets, a.size());
    return r;
}

SplitJK strategy_min_blocks(const SingularStructure& s) {
    const int m = s.count();
    std::vector<bool> remaining(m, true);
    SplitJK out;
    for (int left = m; left > 0;) {
        int i = 0;
        while (!remaining[i]) ++i;
        const bool to_j = s.F[i].count() < s.T[i].count();
        (to_j ? out.J : out.K).push_back(i);
        remaining[i] = false;
        --left;
        for (int j = i + 1; j < m; ++j) {
            if (!remaining[j]) continue;
            if (to_j && s.F[j].subset_of(s.F[i])) {
                out.J.push_back(j);
                remaining[j] = false;
                --left;
            } else if (!to_j && s.T[j].subset_of(s.T[i])) {
                out.K.push_back(j);
                remaining[j] = false;
                --left;
            }
        }
    }
    std::sort(out.J.begin(), out.J.end());
    std::sort(out.K.begin(), out.K.end());
    return out;
}

std::vector<int> strategy_permutation(const SingularStructure& s) {
    const int m = s.count();
    // Topological order of the access relation among the mu_i: whoever has
    // access goes later; ties broken by ascending vertex.
    std::vector<bool> placed(m, false);
    std::vector<int> tail;
    for (int step = 0; step < m; ++step) {
        int pick = -1;
        for (int i = 0; i < m && pick < 0; ++i) {
            if (placed[i]) continue;
            bool ready = true;
            for (int j = 0; j < m && ready; ++j)
                if (j != i && !placed[j] && s.closure.reaches(s.mu[i], s.mu[j]))
                    ready = false;
            if (ready) pick = i;
        }
        if (pick < 0)
            throw InternalError("cyclic access among singular-class representatives");
        placed[pick] = true;
        tail.push_back(s.mu[pick]);
    }
    std::vector<bool> is_mu(s.n, false);
    for (int mu : s.mu) is_mu[mu] = true;
    std::vector<int> order;
    order.reserve(s.n);
    for (int v = 0; v < s.n; ++v)
        if (!is_mu[v]) order.push_back(v);
    order.insert(order.end(), tail.begin(), tail.end());
    return order;
}

MMatrix apply_symmetric_permutation(const MMatrix& a, std::span<const int> order) {
    const int n = a.size();
    if (static_cast<int>(order.size()) != n)
        throw DimensionMismatchError("permutation length does not match order");
    MMatrix p(n, a.zero_tol());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = a(order[i], order[j]);
    return p;
}

MMatrix permutation_matrix(std::span<const int> order) {
    const int n = static_cast<int>(order.size());
    MMatrix p(n);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n)
            throw IndexOutOfRangeError("permutation entry out of range");
        p(i, order[i]) = 1.0;
    }
    return p;
}

SpurPattern spur_pattern(const SingularStructure& s) {
    SpurPattern chi;
    for (int i = 0; i < s.count(); ++i)
        for (int j = s.mu[i] + 1; j < s.n; ++j)
            if (s.closure.reaches(j, s.mu[i])) chi.positions.emplace_back(j, s.mu[i]);
    std::sort(chi.positions.begin(), chi.positions.end());
    return chi;
}

SpurPattern lbu_pattern(const SingularStructure& s) {
    SpurPattern chi;
    std::vector<bool> is_mu(s.n, false);
    for (int mu : s.mu) is_mu[mu] = true;
    for (int j = 0; j < s.n; ++j)
        if (!is_mu[j]) chi.positions.emplace_back(j, j);
    for (int i = 0; i < s.count(); ++i)
        for (int j = s.mu[i] + 1; j < s.n; ++j) {
            if (s.closure.reaches(j, s.mu[i])) chi.positions.emplace_back(j, s.mu[i]);
            if (s.closure.reaches(s.mu[i], j)) chi.positions.emplace_back(s.mu[i], j);
        }
    std::sort(chi.positions.begin(), chi.positions.end());
    return chi;
}

OrderedPartition spur_span_partition(const SingularStructure& s) {
    std::vector<std::vector<int>> spans;
    for (int i = 0; i < s.count(); ++i) {
        int max_j = -1;
        for (int j = s.mu[i] + 1; j < s.n; ++j)
            if (s.closure.reaches(j, s.mu[i])) max_j = j;
        if (max_j >= 0) spans.push_back({s.mu[i], max_j});
    }
    return finest_encompassing(spans, s.n);
}

FactorizationResult factor_lu_spurs(const MMatrix& a) {
    const SingularStructure s = singular_structure(a);
    const int n = a.size();
    std::vector<bool> is_mu(n, false);
    for (int mu : s.mu) is_mu[mu] = true;

    // Eliminates the singular matrix directly: a mu row is never a pivot
    // row, so every multiplier equals the one a positive perturbation of the
    // mu diagonals would produce, and the non-mu pivots stay positive.
    MMatrix u = a;
    MMatrix l = MMatrix::identity(n, a.zero_tol());
    for (int c = 0; c < n; ++c) {
        if (is_mu[c]) continue;
        const double thr = u.zero_threshold();
        const double pivot = u(c, c);
        if (std::abs(pivot) <= thr)
            throw ZeroPivotError(c, "structurally zero pivot at non-mu column " +
                                        std::to_string(c + 1));
        for (int j = c + 1; j < n; ++j) {
            if (std::abs(u(j, c)) <= thr) continue;
            const double mult = u(j, c) / pivot;
            l(j, c) = mult;
            for (int col = 0; col < n; ++col) u(j, col) -= mult * u(c, col);
            u(j, c) = 0.0;
        }
    }

    FactorizationResult r;
    r.kind = FactorKind::SpurLU;
    r.L = std::move(l);
    r.U = std::move(u);
    r.chi = spur_pattern(s);
    r.realized_split = SplitJK{};
    for (int i = 0; i < s.count(); ++i) r.realized_split->K.push_back(i);
    r.psi = OrderedPartition::finest(n);
    r.upsilon = spur_span_partition(s);
    return r;
}

FactorizationResult factor_lbu(const MMatrix& a) {
    const SingularStructure s = singular_structure(a);
    FactorizationResult first = factor_lu_spurs(a);           // A = L * V
    FactorizationResult second = factor_lu_spurs(first.U.transpose());  // V^T = X * Y

    // The second pass must see exactly the singletons {mu_i}.
    {
        const SingularStructure sv = singular_structure(first.U.transpose());
        if (sv.mu != s.mu)
            throw InternalError("spur factor changed the singular-class representatives");
    }

    FactorizationResult r;
    r.kind = FactorKind::Lbu;
    r.L = std::move(first.L);
    r.B = second.U.transpose();
    r.U = second.L.transpose();
    r.chi = lbu_pattern(s);
    r.psi = OrderedPartition::finest(s.n);
    r.upsilon = OrderedPartition::finest(s.n);
    return r;
}

}  // namespace mfact
