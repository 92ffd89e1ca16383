#pragma once

// Shared fixture matrices for the unit and acceptance suites.

#include "mfact/matrix.hpp"

namespace fixtures {

using mfact::MMatrix;

// 3x3 with three singleton singular classes; admits only all-singular
// triangular factorizations.
inline MMatrix a_allsing3() {
    return MMatrix::from_rows({{0, -1, 0},
                               {0, 0, 0},
                               {0, -1, 0}});
}

inline MMatrix l_allsing3() {
    return MMatrix::from_rows({{1, 0, 0},
                               {0, 0, 0},
                               {0, -1, 0}});
}

inline MMatrix u_allsing3() {
    return MMatrix::from_rows({{0, -1, 0},
                               {0, 1, 0},
                               {0, 0, 0}});
}

// Same matrix factored with the J={1} request; the second class lands in L
// on its own.
inline MMatrix l_nested3() {
    return MMatrix::from_rows({{0, -1, 0},
                               {0, 0, 0},
                               {0, -1, 1}});
}

inline MMatrix u_nested3() {
    return MMatrix::from_rows({{1, 0, 0},
                               {0, 1, 0},
                               {0, 0, 0}});
}

// 2x2 whose singular classes cannot be split L/U to order.
inline MMatrix a_two() {
    return MMatrix::from_rows({{0, -1},
                               {0, 0}});
}

// 4x4 running example for the structure tables.
inline MMatrix a_tables4() {
    return MMatrix::from_rows({{0, -1, 0, 0},
                               {0, 0, 0, -1},
                               {0, -1, 0, 0},
                               {0, 0, 0, 1}});
}

// 8x8 zero-pattern illustration for the self-partitions (values are any
// nonzeros with the Z sign pattern).
inline MMatrix x_pattern() {
    return MMatrix::from_rows({{1, -1, -1, 0, 0, 0, 0, 0},
                               {0, 1, 0, 0, 0, 0, 0, 0},
                               {0, 0, 1, 0, 0, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0, -1, 0},
                               {0, 0, 0, 0, 0, -1, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, -1, 0, 1, 0},
                               {0, 0, 0, 0, 0, 0, 0, 1}});
}

// 7x7 with singular classes {1,2}, {3,4}, {6}.
inline MMatrix a_blocks7() {
    return MMatrix::from_rows({{1, -1, 0, 0, -1, 0, 0},
                               {-1, 1, 0, 0, -2, 0, 0},
                               {0, 0, 2, -2, 0, 0, 0},
                               {0, 0, -2, 2, 0, 0, 0},
                               {0, 0, 0, 0, 1, 0, 0},
                               {0, 0, -1, -1, 0, 0, 0},
                               {0, 0, 0, 0, 0, -1, 1}});
}

inline MMatrix l_blocks7() {
    return MMatrix::from_rows({{1, 0, 0, 0, 0, 0, 0},
                               {-1, 1, 0, 0, 0, 0, 0},
                               {0, 0, 2, 0, 0, 0, 0},
                               {0, 0, -2, 0, 0, 0, 0},
                               {0, 0, 0, 0, 1, 0, 0},
                               {0, 0, -1, -2, 0, 0, 0},
                               {0, 0, 0, 0, 0, -1, 1}});
}

inline MMatrix u_blocks7() {
    return MMatrix::from_rows({{1, -1, 0, 0, -1, 0, 0},
                               {0, 0, 0, 0, -3, 0, 0},
                               {0, 0, 1, -1, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 0, 1, 0, 0},
                               {0, 0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, 0, 1}});
}

// 8x8 with five singular classes; used by the block, permuted and LBU runs.
inline MMatrix a_mixed8() {
    return MMatrix::from_rows({{1, -1, 0, 0, 0, 0, 0, 0},
                               {0, 0, -1, 0, 0, 0, 0, 0},
                               {0, 0, 1, 0, -1, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0, 0, 0},
                               {0, 0, -1, 0, 1, -1, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, -1},
                               {-1, 0, 0, 0, 0, 0, 0, 0}});
}

inline MMatrix l_mixed8() {
    return MMatrix::from_rows({{1, 0, 0, 0, 0, 0, 0, 0},
                               {0, 0, -1, 0, 0, 0, 0, 0},
                               {0, 0, 1, 0, -1, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0, 0, 0},
                               {0, 0, -1, 0, 1, -1, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0, 1, 0},
                               {-1, -1, 0, 0, 0, 0, 0, 1}});
}

inline MMatrix u_mixed8() {
    return MMatrix::from_rows({{1, -1, 0, 0, 0, 0, 0, 0},
                               {0, 1, 0, 0, 0, 0, 0, 0},
                               {0, 0, 1, 0, 0, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0, 0, 0},
                               {0, 0, 0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, 1, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, -1},
                               {0, 0, 0, 0, 0, 0, 0, 0}});
}

// Order placing the class terminals at the tail: positions take original vertices
// 1,3,4,6,5,2,8,7 (1-based).
inline std::vector<int> order_mixed8() { return {0, 2, 3, 5, 4, 1, 7, 6}; }

inline MMatrix permuted_mixed8() {
    return MMatrix::from_rows({{1, 0, 0, 0, 0, -1, 0, 0},
                               {0, 1, 0, 0, -1, 0, 0, 0},
                               {0, 0, 1, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0},
                               {0, -1, 0, -1, 1, 0, 0, 0},
                               {0, -1, 0, 0, 0, 0, 0, 0},
                               {-1, 0, 0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0, -1, 0}});
}

inline MMatrix l_permuted_mixed8() {
    return MMatrix::from_rows({{1, 0, 0, 0, 0, 0, 0, 0},
                               {0, 1, 0, 0, 0, 0, 0, 0},
                               {0, 0, 1, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0},
                               {0, -1, 0, -1, 0, 0, 0, 0},
                               {0, -1, 0, 0, -1, 0, 0, 0},
                               {-1, 0, 0, 0, 0, -1, 0, 0},
                               {0, 0, 0, 0, 0, 0, -1, 0}});
}

inline MMatrix u_permuted_mixed8() {
    return MMatrix::from_rows({{1, 0, 0, 0, 0, -1, 0, 0},
                               {0, 1, 0, 0, -1, 0, 0, 0},
                               {0, 0, 1, 0, 0, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0, 0, 0},
                               {0, 0, 0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, 1, 0, 0},
                               {0, 0, 0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, 0, 0, 1}});
}

// 8x8 spur-elimination example.
inline MMatrix a_spurs8() {
    return MMatrix::from_rows({{1, -1, 0, 0, 0, 0, 0, 0},
                               {-1, 1, 0, 0, 0, -1, 0, 0},
                               {-1, 0, 2, -2, 0, 0, -1, 0},
                               {0, -1, -1, 1, 0, 0, -2, -1},
                               {0, 0, 0, -1, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, -1, 1, 0},
                               {0, 0, 0, 0, 0, -1, -1, 1}});
}

inline MMatrix l_spurs8() {
    return MMatrix::from_rows({{1, 0, 0, 0, 0, 0, 0, 0},
                               {-1, 1, 0, 0, 0, 0, 0, 0},
                               {-1, 0, 1, 0, 0, 0, 0, 0},
                               {0, 0, -0.5, 1, 0, 0, 0, 0},
                               {0, 0, 0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, 1, 0, 0},
                               {0, 0, 0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, 0, -1, 1}});
}

inline MMatrix u_spurs8() {
    return MMatrix::from_rows({{1, -1, 0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, -1, 0, 0},
                               {0, -1, 2, -2, 0, 0, -1, 0},
                               {0, -1.5, 0, 0, 0, 0, -2.5, -1},
                               {0, 0, 0, -1, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, -1, 1, 0},
                               {0, 0, 0, 0, 0, -2, 0, 1}});
}

// 3x3 pair for the subdiagonal bounds; same R sets, different attainable counts.
inline MMatrix a_bounds3() {
    return MMatrix::from_rows({{0, 0, 0},
                               {-1, 0, 0},
                               {0, -1, 1}});
}

inline MMatrix b_bounds3() {
    return MMatrix::from_rows({{0, 0, 0},
                               {-1, 0, 0},
                               {-1, -1, 1}});
}

// Printed LBU factors of a_mixed8.
inline MMatrix l_allsing34() {
    return MMatrix::from_rows({{1, 0, 0, 0, 0, 0, 0, 0},
                               {0, 1, 0, 0, 0, 0, 0, 0},
                               {0, 0, 1, 0, 0, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0, 0, 0},
                               {0, 0, -1, 0, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, 1, 0, 0},
                               {0, 0, 0, 0, 0, 0, 1, 0},
                               {-1, 0, 0, 0, 0, 0, 0, 1}});
}

inline MMatrix b_lbu8() {
    return MMatrix::from_rows({{1, 0, 0, 0, 0, 0, 0, 0},
                               {0, 0, -1, 0, -1, 0, 0, 0},
                               {0, 0, 1, 0, 0, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, -1, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, -1},
                               {0, -1, 0, 0, 0, 0, 0, 0}});
}

inline MMatrix u_allsing34() {
    return MMatrix::from_rows({{1, -1, 0, 0, 0, 0, 0, 0},
                               {0, 1, 0, 0, 0, 0, 0, 0},
                               {0, 0, 1, 0, -1, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0, 0, 0},
                               {0, 0, 0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, 1, 0, 0},
                               {0, 0, 0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, 0, 0, 1}});
}

// Boxed off-diagonal positions that accompany b_lbu8 (0-based pairs).  The
// box in row 2 spans columns 3..6 even though (2,4) cannot actually be hit.
inline std::vector<std::pair<int, int>> boxed_lbu8() {
    return {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {6, 1}, {7, 1},
            {4, 5}, {6, 4}, {7, 4}, {6, 5}, {7, 5}, {6, 7}};
}

}  // namespace fixtures
