#pragma once

#include <string>
#include <vector>

#include "mfact/digraph.hpp"
#include "mfact/factorization.hpp"
#include "mfact/matrix.hpp"

namespace mfact {

struct VerificationCheck {
    std::string name;
    bool pass = false;
    bool informational = false;  // reported but not part of `overall`
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool overall = false;

    const VerificationCheck* find(const std::string& name) const;
};

// Independent checker: takes A and candidate factors and validates every
// structural claim about the factors.  Pure observation; never repairs anything.
VerificationReport verify(const MMatrix& a, const FactorizationResult& r,
                          double p_tol = kDefaultProductTol,
                          double sing_tol = kDefaultSingTol,
                          double m_tol = kDefaultMTol);

// X_KK nonsingular for every class K of A (classes come from A, not X).
bool is_class_nonsingular(const MMatrix& x, const ClassList& classes_of_a,
                          double sing_tol = kDefaultSingTol);

}  // namespace mfact
