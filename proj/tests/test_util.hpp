#pragma once

#include <random>

#include "fstruct/reductive_space.hpp"

namespace fstruct::testutil {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0xC0FFEE);
    return gen;
}

inline double uniform(double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng());
}

template <class S>
MVector<S> random_vector(const ReductiveSpace<S>& sp) {
    Eigen::VectorXd v(sp.dim_m());
    for (int i = 0; i < sp.dim_m(); ++i) v(i) = uniform();
    return {sp, v};
}

inline Metric random_metric() { return {uniform(0.5, 4.0), uniform(0.5, 4.0), uniform(0.5, 4.0)}; }

inline Quaternion random_quaternion() {
    return {uniform(), uniform(), uniform(), uniform()};
}

inline Quaternion random_pure_unit() {
    Quaternion q(0.0, uniform(), uniform(), uniform());
    while (q.norm() < 1e-3) q = Quaternion(0.0, uniform(), uniform(), uniform());
    return q * (1.0 / q.norm());
}

inline Mat<double> random_skew(int n) {
    Mat<double> a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            a(i, j) = uniform();
            a(j, i) = -a(i, j);
        }
    return a;
}

inline Mat<Quaternion> random_anti_hermitian_quat(int n) {
    Mat<Quaternion> a(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = Quaternion(0.0, uniform(), uniform(), uniform());
        for (int j = 0; j < i; ++j) {
            a(i, j) = random_quaternion();
            a(j, i) = -conj(a(i, j));
        }
    }
    return a;
}

}  // namespace fstruct::testutil
