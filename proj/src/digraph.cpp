#include "mfact/digraph.hpp"

#include <algorithm>

#include "mfact/kernels.hpp"
#include "mfact/numerics.hpp"

namespace mfact {

DiGraph DiGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    DiGraph g;
    g.n = n;
    g.adj.resize(n);
    for (auto [i, j] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw IndexOutOfRangeError("edge endpoint out of range");
        g.adj[i].push_back(j);
    }
    for (auto& targets : g.adj) {
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    }
    return g;
}

bool DiGraph::has_edge(int i, int j) const {
    return std::binary_search(adj[i].begin(), adj[i].end(), j);
}

std::vector<std::pair<int, int>> DiGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j : adj[i]) out.emplace_back(i, j);
    return out;
}

DiGraph DiGraph::reversed() const {
    DiGraph r;
    r.n = n;
    r.adj.resize(n);
    for (int i = 0; i < n; ++i)
        for (int j : adj[i]) r.adj[j].push_back(i);
    for (auto& targets : r.adj) std::sort(targets.begin(), targets.end());
    return r;
}

DiGraph digraph_of(const MMatrix& a) {
    const int n = a.size();
    const double thr = a.zero_threshold();
    DiGraph g;
    g.n = n;
    g.adj.resize(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(a(i, j)) > thr) g.adj[i].push_back(j);
    return g;
}

namespace {

// Tarjan's algorithm.  Components come out in reverse topological order;
// we re-sort to the reporting order (ascending, by smallest vertex).
struct TarjanState {
    const DiGraph& g;
    std::vector<int> index, low, stack;
    std::vector<bool> on_stack;
    std::vector<std::vector<int>> components;
    int next_index = 0;

    explicit TarjanState(const DiGraph& g_)
        : g(g_), index(g_.n, -1), low(g_.n, 0), on_stack(g_.n, false) {}

    void visit(int v) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : g.adj[v]) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> comp;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            components.push_back(std::move(comp));
        }
    }
};

}  // namespace

ClassList classes_of(const DiGraph& g) {
    TarjanState state(g);
    for (int v = 0; v < g.n; ++v)
        if (state.index[v] < 0) state.visit(v);
    std::sort(state.components.begin(), state.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    ClassList c;
    c.classes = std::move(state.components);
    return c;
}

AccessClosure closure_of(const DiGraph& g) {
    AccessClosure c;
    c.n = g.n;
    c.reach.assign(static_cast<std::size_t>(g.n) * g.n, 0);
    for (int i = 0; i < g.n; ++i) {
        c.reach[static_cast<std::size_t>(i) * g.n + i] = 1;
        for (int j : g.adj[i]) c.reach[static_cast<std::size_t>(i) * g.n + j] = 1;
    }
    kernels::closure(c.reach.data(), g.n);
    return c;
}

bool is_block_singular(const MMatrix& a, std::span<const int> block, double sing_tol) {
    const MMatrix sub = a.principal_submatrix(block);
    return numerics::sigma_min(sub) <= sing_tol * std::max(1.0, sub.inf_norm());
}

double spectral_radius_nonneg(const MMatrix& p) {
    const ClassList classes = classes_of(digraph_of(p));
    double rho = 0.0;
    for (const auto& cls : classes.classes)
        rho = std::max(rho, numerics::spectral_radius(p.principal_submatrix(cls)));
    return rho;
}

ClassList mark_singular_classes(const MMatrix& a, ClassList c, double sing_tol) {
    if (!is_m_matrix(a))
        throw NotMMatrixError("singular-class marking requires an M-matrix");
    c.singular.resize(c.count());
    for (int i = 0; i < c.count(); ++i)
        c.singular[i] = is_block_singular(a, c.classes[i], sing_tol);
    return c;
}

}  // namespace mfact
