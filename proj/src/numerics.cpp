#include "mfact/numerics.hpp"

#include <Eigen/Dense>

namespace mfact::numerics {

namespace {

using RowMajorMap =
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

}  // namespace

double spectral_radius(const MMatrix& a) {
    const int n = a.size();
    if (n == 0) return 0.0;
    if (n == 1) return std::abs(a(0, 0));
    RowMajorMap m(a.data().data(), n, n);
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw InternalError("eigensolver failed to converge");
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double sigma_min(const MMatrix& a) {
    const int n = a.size();
    if (n == 0) return 0.0;
    if (n == 1) return std::abs(a(0, 0));
    RowMajorMap m(a.data().data(), n, n);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues().minCoeff();
}

}  // namespace mfact::numerics
