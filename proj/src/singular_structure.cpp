#include "mfact/singular_structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mfact {

std::vector<int> IndexInterval::to_vector() const {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

SingularStructure singular_structure(const MMatrix& a, bool check_m, double m_tol,
                                     double sing_tol) {
    if (check_m && !is_m_matrix(a, m_tol))
        throw NotMMatrixError("singular structure requires an M-matrix");

    const DiGraph g = digraph_of(a);
    ClassList all = classes_of(g);
    all.singular.resize(all.count());
    for (int i = 0; i < all.count(); ++i)
        all.singular[i] = is_block_singular(a, all.classes[i], sing_tol);

    SingularStructure s;
    s.n = a.size();
    s.closure = closure_of(g);
    s.all_classes = all;

    for (int i = 0; i < all.count(); ++i)
        if (all.singular[i]) s.classes.push_back(all.classes[i]);
    std::sort(s.classes.begin(), s.classes.end(),
              [](const auto& x, const auto& y) { return x.back() < y.back(); });

    for (const auto& cls : s.classes) {
        const int mu = cls.back();
        s.mu.push_back(mu);
        // Access to/from the class is access to/from any of its vertices;
        // mu serves as the representative.
        int max_to = mu, max_from = mu;
        for (int j = 0; j < s.n; ++j) {
            if (s.closure.reaches(j, mu)) max_to = std::max(max_to, j);
            if (s.closure.reaches(mu, j)) max_from = std::max(max_from, j);
        }
        s.T.push_back({mu, max_to});
        s.F.push_back({mu, max_from});
    }
    return s;
}

bool varga_cai_condition(const SingularStructure& s) {
    return std::all_of(s.T.begin(), s.T.end(),
                       [](const IndexInterval& t) { return t.is_singleton(); });
}

bool lu_existence_condition(const SingularStructure& s) {
    for (int i = 0; i < s.count(); ++i)
        if (!s.T[i].is_singleton() && !s.F[i].is_singleton()) return false;
    return true;
}

SubdiagonalBounds subdiagonal_bounds(const SingularStructure& s) {
    SubdiagonalBounds b;
    std::set<int> all;
    for (int i = 0; i < s.count(); ++i) {
        for (int j = s.mu[i] + 1; j < s.n; ++j) {
            if (s.closure.reaches(j, s.mu[i])) {
                ++b.upper;
                all.insert(j);
            }
        }
    }
    b.lower = static_cast<int>(all.size());
    return b;
}

std::optional<std::vector<int>> singular_subclass(const MMatrix& x,
                                                  std::span<const int> within,
                                                  double sing_tol) {
    const ClassList classes = classes_of(digraph_of(x));
    const std::set<int> scope(within.begin(), within.end());
    for (const auto& q : classes.classes) {
        const bool contained = std::all_of(q.begin(), q.end(),
                                           [&](int v) { return scope.count(v) > 0; });
        if (contained && is_block_singular(x, q, sing_tol)) return q;
    }
    return std::nullopt;
}

}  // namespace mfact
