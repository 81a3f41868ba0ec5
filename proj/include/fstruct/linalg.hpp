#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace fstruct {

/// Numerical rank with a relative singular-value threshold.
inline int numerical_rank(const Eigen::MatrixXd& a, double rtol = 1e-9) {
    if (a.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    double thresh = rtol * sv(0);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++r;
    return r;
}

/// Orthonormal basis of the (right) null space, as columns.
inline Eigen::MatrixXd nullspace_basis(const Eigen::MatrixXd& a, double rtol = 1e-9) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double thresh = sv.size() ? rtol * sv(0) : 0.0;
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++r;
    return svd.matrixV().rightCols(a.cols() - r);
}

inline int nullspace_dimension(const Eigen::MatrixXd& a, double rtol = 1e-9) {
    return static_cast<int>(a.cols()) - numerical_rank(a, rtol);
}

inline double min_eigenvalue_sym(const Eigen::MatrixXd& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    return es.eigenvalues().minCoeff();
}

inline double max_abs(const Eigen::MatrixXd& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }
inline double max_abs(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace fstruct
