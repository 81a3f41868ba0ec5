#pragma once

#include "f_operator.hpp"
#include "metric.hpp"
#include "reductive_space.hpp"

namespace fstruct {

/// Coefficients of the closed-form symmetric bilinear correction U for a
/// metric (a1,a2,a3): group g pairs the two modules other than g and divides
/// by the module the bracket lands in.
inline std::array<double, 3> u_coefficients(const Metric& g) {
    return {(g.a3 - g.a2) / (2.0 * g.a1), (g.a3 - g.a1) / (2.0 * g.a2), (g.a2 - g.a1) / (2.0 * g.a3)};
}

/// Closed-form U(X,Y): naturally reductive metrics (a1 = a2 = a3) give zero.
template <class S>
MVector<S> u_closed(const MVector<S>& x, const MVector<S>& y, const Metric& g) {
    const ReductiveSpace<S>& sp = *x.space;
    x.require_same_space(y);
    auto c = u_coefficients(g);
    std::array<MVector<S>, 3> xp = {sp.project(x, 0), sp.project(x, 1), sp.project(x, 2)};
    std::array<MVector<S>, 3> yp = {sp.project(y, 0), sp.project(y, 1), sp.project(y, 2)};
    MVector<S> out = sp.zero_vector();
    // group 0: modules (2,3); group 1: (1,3); group 2: (1,2)  [1-based]
    const int pair_a[3] = {1, 0, 0};
    const int pair_b[3] = {2, 2, 1};
    for (int gidx = 0; gidx < 3; ++gidx) {
        if (c[static_cast<size_t>(gidx)] == 0.0) continue;
        MVector<S> term = sp.bracket_m(xp[static_cast<size_t>(pair_a[gidx])], yp[static_cast<size_t>(pair_b[gidx])]).m_part +
                          sp.bracket_m(yp[static_cast<size_t>(pair_a[gidx])], xp[static_cast<size_t>(pair_b[gidx])]).m_part;
        out += c[static_cast<size_t>(gidx)] * term;
    }
    return out;
}

/// Independent route for U: solve the defining linear system
/// 2 g(U(X,Y), Z) = g(X, [Z,Y]_m) + g([Z,X]_m, Y) over the m-basis of Z.
template <class S>
MVector<S> u_oracle(const MVector<S>& x, const MVector<S>& y, const Metric& g) {
    const ReductiveSpace<S>& sp = *x.space;
    x.require_same_space(y);
    const int N = sp.dim_m();
    Eigen::VectorXd rhs(N);
    for (int k = 0; k < N; ++k) {
        MVector<S> zk = sp.basis_vector(k);
        MVector<S> zy = sp.bracket_m(zk, y).m_part;
        MVector<S> zx = sp.bracket_m(zk, x).m_part;
        rhs(k) = sp.metric_inner(x, zy, g) + sp.metric_inner(zx, y, g);
    }
    Eigen::MatrixXd G = 2.0 * sp.metric_gram(g);
    Eigen::VectorXd u = G.ldlt().solve(rhs);
    return {sp, u};
}

/// Levi-Civita connection at the base point: (1/2)[X,Y]_m + U(X,Y).
template <class S>
MVector<S> nabla(const MVector<S>& x, const MVector<S>& y, const Metric& g) {
    return 0.5 * x.space->bracket_m(x, y).m_part + u_closed(x, y, g);
}

/// Covariant derivative of f: (nabla_A f)(B) = nabla_A(fB) - f(nabla_A B).
template <class S>
MVector<S> nabla_f(const FOperator<S>& f, const MVector<S>& a, const MVector<S>& b, const Metric& g) {
    return nabla(a, f.apply(b), g) - f.apply(nabla(a, b, g));
}

/// Composition tensor T(X,Y) = (1/4) f( (nabla_{fX} f) fY - (nabla_{f^2X} f) f^2Y ).
template <class S>
MVector<S> composition_tensor(const FOperator<S>& f, const MVector<S>& x, const MVector<S>& y,
                              const Metric& g) {
    MVector<S> fx = f.apply(x), f2x = f.apply(fx);
    MVector<S> fy = f.apply(y), f2y = f.apply(fy);
    MVector<S> inner = nabla_f(f, fx, fy, g) - nabla_f(f, f2x, f2y, g);
    return 0.25 * f.apply(inner);
}

}  // namespace fstruct
