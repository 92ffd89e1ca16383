#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "mfact/matrix.hpp"
#include "mfact/numerics.hpp"
#include "oracles.hpp"

using namespace mfact;

TEST_SUITE_BEGIN("matrix");

TEST_CASE("z-matrix predicate") {
    CHECK(is_z_matrix(fixtures::a_allsing3()));
    CHECK(is_z_matrix(MMatrix::identity(4)));
    CHECK_FALSE(is_z_matrix(MMatrix::from_rows({{1, 0.5}, {0, 1}})));
    // positive diagonal never disqualifies
    CHECK(is_z_matrix(MMatrix::from_rows({{5, -1}, {0, 7}})));
    // off-diagonal noise below the threshold still counts as Z
    MMatrix noisy = MMatrix::from_rows({{1, 1e-12}, {-1, 1}});
    CHECK(is_z_matrix(noisy));
}

TEST_CASE("m-matrix predicate") {
    CHECK(is_m_matrix(fixtures::a_allsing3()));
    CHECK(is_m_matrix(fixtures::a_two()));
    // alpha = 0, rho = 2
    CHECK_FALSE(is_m_matrix(MMatrix::from_rows({{0, -2}, {-2, 0}})));
    CHECK(is_m_matrix(MMatrix::identity(3)));
    CHECK(is_m_matrix(MMatrix(1)));  // 1x1 zero
    CHECK(is_m_matrix(fixtures::a_blocks7()));
    CHECK(is_m_matrix(fixtures::a_mixed8()));
    CHECK(is_m_matrix(fixtures::a_spurs8()));
    CHECK_FALSE(is_m_matrix(MMatrix::from_rows({{1, 0.5}, {0, 1}})));
}

TEST_CASE("schur step on the 7x7 example") {
    const MMatrix b = schur_step(fixtures::a_blocks7(), 0);
    REQUIRE(b.size() == 6);
    // row for original index 2 over columns 2..7
    const double expect[6] = {0, 0, 0, -3, 0, 0};
    for (int j = 0; j < 6; ++j) CHECK(b(0, j) == expect[j]);
}

TEST_CASE("schur step basics") {
    CHECK(schur_step(MMatrix::identity(3), 0) == MMatrix::identity(2));
    const MMatrix r = schur_step(MMatrix::from_rows({{2, -1}, {-1, 2}}), 0);
    REQUIRE(r.size() == 1);
    CHECK(r(0, 0) == 1.5);
    CHECK_THROWS_AS(schur_step(fixtures::a_allsing3(), 0), ZeroPivotError);
    CHECK_THROWS_AS(schur_step(MMatrix::identity(2), 5), IndexOutOfRangeError);
}

TEST_CASE("generator agreement: alpha = rho(P)*(1+u) is always an M-matrix") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> entry(0.0, 1.0);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        MMatrix p(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) p(i, j) = entry(rng);
        const double rho = numerics::spectral_radius(p);
        const double u = (trial % 3 == 0) ? 0.0 : (trial % 3 == 1 ? 0.05 : 1.0);
        const double alpha = rho * (1.0 + u);
        MMatrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = (i == j ? alpha : 0.0) - p(i, j);
        CHECK(is_m_matrix(a));
        // pushing alpha below rho must flip the verdict
        if (rho > 0.1) {
            MMatrix bad = a;
            for (int i = 0; i < n; ++i) bad(i, i) -= (u + 0.05) * rho;
            CHECK_FALSE(is_m_matrix(bad));
        }
    }
}

TEST_CASE("schur step preserves the M-matrix class") {
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 200) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const auto gen = oracles::random_m_matrix(rng, n, /*singular=*/false);
        REQUIRE(is_m_matrix(gen.a));
        if (gen.a.is_structural_zero(0, 0)) continue;
        CHECK(is_m_matrix(schur_step(gen.a, 0)));
        ++done;
    }
}

TEST_CASE("Z(A) and Z(-A) force a structurally diagonal matrix") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        MMatrix a(n);
        std::uniform_real_distribution<double> entry(-1.0, 1.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
        MMatrix neg = a;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) neg(i, j) = -a(i, j);
        if (!is_z_matrix(a) || !is_z_matrix(neg)) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) CHECK(a.is_structural_zero(i, j));
    }
    // and a direct witness
    MMatrix d = MMatrix::from_rows({{2, 0}, {0, -3}});
    MMatrix nd = MMatrix::from_rows({{-2, 0}, {0, 3}});
    CHECK(is_z_matrix(d));
    CHECK(is_z_matrix(nd));
}

TEST_CASE("construction guards and equality semantics") {
    CHECK_THROWS_AS(MMatrix(-1), DimensionMismatchError);
    CHECK_THROWS_AS(MMatrix(2, std::vector<double>{1, 2, 3}), DimensionMismatchError);
    CHECK_THROWS_AS(MMatrix(2, -0.5), Error);
    CHECK_THROWS_AS(MMatrix::from_rows({{1, 2}, {3}}), DimensionMismatchError);
    // tolerance does not participate in value equality
    MMatrix a = MMatrix::identity(2);
    MMatrix b = MMatrix::identity(2, 1e-6);
    CHECK(a == b);
    b(0, 1) = 1e-9;
    CHECK_FALSE(a == b);
}

TEST_CASE("transpose, submatrix, inverse") {
    const MMatrix a = fixtures::a_tables4();
    CHECK(a.transpose().transpose() == a);
    const std::vector<int> idx{1, 3};
    const MMatrix s = a.principal_submatrix(idx);
    CHECK(s(0, 1) == -1);
    CHECK(s(1, 1) == 1);

    const MMatrix l = fixtures::l_spurs8();
    const MMatrix linv = invert_lower_triangular(l);
    CHECK(max_abs_diff(multiply(l, linv), MMatrix::identity(8)) < 1e-14);
    CHECK_THROWS_AS(invert_lower_triangular(fixtures::l_allsing3()), ZeroPivotError);
}

TEST_SUITE_END();
