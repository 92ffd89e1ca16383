#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "mfact/factorization.hpp"
#include "mfact/verification.hpp"
#include "oracles.hpp"

using namespace mfact;

namespace {

FactorizationResult block_result(const MMatrix& a, MMatrix l, MMatrix u,
                                 const SplitJK& split) {
    const SingularStructure s = singular_structure(a);
    std::vector<std::vector<int>> f_sets, t_sets;
    for (int i : split.J) f_sets.push_back(s.F[i].to_vector());
    for (int i : split.K) t_sets.push_back(s.T[i].to_vector());
    FactorizationResult r;
    r.kind = FactorKind::BlockLU;
    r.L = std::move(l);
    r.U = std::move(u);
    r.requested_split = split;
    r.psi = finest_encompassing(f_sets, a.size());
    r.upsilon = finest_encompassing(t_sets, a.size());
    return r;
}

}  // namespace

TEST_SUITE_BEGIN("verification");

TEST_CASE("the reference all-singular 3x3 factorization verifies") {
    // L and U both carry a zero diagonal entry; every check must pass and the
    // report must say so.
    const auto r = block_result(fixtures::a_allsing3(), fixtures::l_allsing3(), fixtures::u_allsing3(),
                                SplitJK{{1, 2}, {0}});
    const VerificationReport rep = verify(fixtures::a_allsing3(), r);
    CHECK(rep.overall);
    REQUIRE(rep.find("factor_singularity") != nullptr);
    CHECK(rep.find("factor_singularity")->detail == "L singular; U singular");
}

TEST_CASE("spur output of the 8x8 example verifies with count 5") {
    const FactorizationResult r = factor_lu_spurs(fixtures::a_spurs8());
    const VerificationReport rep = verify(fixtures::a_spurs8(), r);
    CHECK(rep.overall);
    REQUIRE(rep.find("U_subdiagonal_support_in_chi") != nullptr);
    CHECK(rep.find("U_subdiagonal_support_in_chi")->detail == "5 subdiagonal nonzeros");
    REQUIRE(rep.find("spur_count_within_upper") != nullptr);
    CHECK(rep.find("spur_count_within_upper")->detail == "5 <= 6");
    CHECK(rep.find("spur_count_vs_lower")->pass);  // 5 >= 5 here
}

TEST_CASE("identity factorization of the identity verifies") {
    FactorizationResult r;
    r.kind = FactorKind::BlockLU;
    r.L = MMatrix::identity(3);
    r.U = MMatrix::identity(3);
    r.psi = OrderedPartition::finest(3);
    r.upsilon = OrderedPartition::finest(3);
    CHECK(verify(MMatrix::identity(3), r).overall);
    r.U = MMatrix::identity(4);
    CHECK_THROWS_AS(verify(MMatrix::identity(3), r), DimensionMismatchError);
}

TEST_CASE("lbu output of the 8x8 example verifies") {
    const FactorizationResult r = factor_lbu(fixtures::a_mixed8());
    const VerificationReport rep = verify(fixtures::a_mixed8(), r);
    CHECK(rep.overall);
    REQUIRE(rep.find("B_support_in_chi") != nullptr);
    CHECK(rep.find("B_support_in_chi")->detail == "5 off-diagonal nonzeros");
}

TEST_CASE("class nonsingularity certificate") {
    const ClassList c43 = classes_of(digraph_of(fixtures::a_spurs8()));
    CHECK(is_class_nonsingular(MMatrix::identity(8), c43));
    const MMatrix linv = invert_lower_triangular(factor_lu_spurs(fixtures::a_spurs8()).L);
    CHECK(is_class_nonsingular(linv, c43));
    // a zero block on a singleton class fails
    MMatrix x = MMatrix::identity(8);
    x(5, 5) = 0.0;
    CHECK_FALSE(is_class_nonsingular(x, c43));
}

TEST_CASE("mutation of a valid factorization is caught") {
    const MMatrix a = fixtures::a_blocks7();
    const double bump = 10 * kDefaultProductTol * a.inf_norm();

    FactorizationResult r = factor_lu_partitioned(a, SplitJK{{1, 2}, {0}});
    REQUIRE(verify(a, r).overall);

    SUBCASE("product identity breaks") {
        r.L(2, 2) += 2 * bump;
        const VerificationReport rep = verify(a, r);
        CHECK_FALSE(rep.overall);
        CHECK_FALSE(rep.find("product_identity")->pass);
    }
    SUBCASE("Z pattern breaks") {
        r.L(3, 2) = +0.5;
        r.U(2, 3) = -4.5;  // keep the product exact
        const VerificationReport rep = verify(a, r);
        CHECK_FALSE(rep.overall);
    }
    SUBCASE("refinement claim breaks") {
        // an off-pattern fill above L's diagonal coarsens its self-partition
        r.L(0, 6) = -2 * bump;
        const VerificationReport rep = verify(a, r);
        CHECK_FALSE(rep.overall);
    }

    FactorizationResult sp = factor_lu_spurs(fixtures::a_spurs8());
    REQUIRE(verify(fixtures::a_spurs8(), sp).overall);
    SUBCASE("spur support violation is caught") {
        sp.U(6, 0) = -1.0;  // subdiagonal position outside chi
        const VerificationReport rep = verify(fixtures::a_spurs8(), sp);
        CHECK_FALSE(rep.overall);
        CHECK_FALSE(rep.find("U_subdiagonal_support_in_chi")->pass);
    }
    SUBCASE("mu diagonal violation is caught") {
        sp.U(1, 1) = 1.0;
        const VerificationReport rep = verify(fixtures::a_spurs8(), sp);
        CHECK_FALSE(rep.find("U_diagonal_zero_iff_mu")->pass);
    }
}

TEST_CASE("verify passes on every mode across a random corpus") {
    std::mt19937_64 rng(987654321);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const auto gen = oracles::random_m_matrix(rng, n, trial % 4 != 0);
        const SingularStructure s = singular_structure(gen.a);
        CAPTURE(trial);
        CHECK(verify(gen.a, factor_lu_partitioned(gen.a, strategy_min_blocks(s))).overall);
        CHECK(verify(gen.a, factor_lu_spurs(gen.a)).overall);
        CHECK(verify(gen.a, factor_lbu(gen.a)).overall);
    }
}

TEST_SUITE_END();
