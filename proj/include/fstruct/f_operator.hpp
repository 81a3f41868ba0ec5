#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "metric.hpp"
#include "reductive_space.hpp"

namespace fstruct {

struct ShapeTag {
    enum class Kind { ImageIs, KernelIs, AlmostComplex, Other };
    Kind kind = Kind::Other;
    int index = -1;  // module index for ImageIs / KernelIs

    bool operator==(const ShapeTag& o) const { return kind == o.kind && index == o.index; }

    std::string str() const {
        switch (kind) {
            case Kind::ImageIs: return "image_is(" + std::to_string(index + 1) + ")";
            case Kind::KernelIs: return "kernel_is(" + std::to_string(index + 1) + ")";
            case Kind::AlmostComplex: return "almost_complex";
            case Kind::Other: return "other";
        }
        return "other";
    }
};

/// Invariant affinor candidate acting on m-coordinates; the algebraic gates
/// (f^3 + f = 0, isotropy commutation, metric skewness) are checked against
/// it rather than assumed.
template <class S>
struct FOperator {
    const ReductiveSpace<S>* space = nullptr;
    Eigen::MatrixXd matrix;

    FOperator() = default;
    FOperator(const ReductiveSpace<S>& sp, Eigen::MatrixXd m) : space(&sp), matrix(std::move(m)) {
        if (matrix.rows() != sp.dim_m() || matrix.cols() != sp.dim_m())
            throw std::invalid_argument("FOperator: matrix size must equal dim m");
    }

    MVector<S> apply(const MVector<S>& x) const {
        if (x.space != space) throw std::invalid_argument("FOperator: vector from a different space");
        return {*space, matrix * x.c};
    }
};

template <class S>
double check_f_cubed(const FOperator<S>& f) {
    const Eigen::MatrixXd& M = f.matrix;
    return max_abs(Eigen::MatrixXd(M * M * M + M));
}

/// Commutation defect against the infinitesimal isotropy action on m.
template <class S>
double check_invariance(const FOperator<S>& f) {
    double r = 0.0;
    for (int w = 0; w < f.space->dim_h(); ++w) {
        const Eigen::MatrixXd& a = f.space->ad_h_on_m(w);
        r = std::max(r, max_abs(Eigen::MatrixXd(f.matrix * a - a * f.matrix)));
    }
    return r;
}

/// Skewness defect of f with respect to the metric with the given
/// characteristic numbers: max |g(fX,Y) + g(X,fY)| over basis pairs.
template <class S>
double check_compatibility(const FOperator<S>& f, const Metric& g) {
    Eigen::MatrixXd G = f.space->metric_gram(g);
    return max_abs(Eigen::MatrixXd(f.matrix.transpose() * G + G * f.matrix));
}

/// Rank/kernel based shape classification at relative tolerance rtol.
template <class S>
ShapeTag classify_shape(const FOperator<S>& f, double rtol = 1e-9) {
    const ReductiveSpace<S>& sp = *f.space;
    const Eigen::MatrixXd& M = f.matrix;
    const int N = sp.dim_m();
    const double tol = std::max(1e-12, rtol * (1.0 + max_abs(M)));
    const int r = numerical_rank(M, rtol);
    if (r == 0) return {ShapeTag::Kind::Other, -1};
    if (r == N) return {ShapeTag::Kind::AlmostComplex, -1};
    for (int i = 0; i < 3; ++i) {
        if (r != sp.module_dim(i)) continue;
        double outside = 0.0;
        for (int row = 0; row < N; ++row)
            if (sp.module_of(row) != i) outside = std::max(outside, max_abs(Eigen::VectorXd(M.row(row))));
        if (outside < tol) return {ShapeTag::Kind::ImageIs, i};
    }
    for (int i = 0; i < 3; ++i) {
        if (N - r != sp.module_dim(i)) continue;
        double inside = 0.0;
        for (int col = 0; col < N; ++col)
            if (sp.module_of(col) == i) inside = std::max(inside, max_abs(Eigen::VectorXd(M.col(col))));
        if (inside < tol) return {ShapeTag::Kind::KernelIs, i};
    }
    return {ShapeTag::Kind::Other, -1};
}

/// Rotation prescription for one module: either a signed plane pairing that
/// covers the module coordinates exactly once, or left multiplication by a
/// pure unit quaternion (for 4-dimensional slots whose basis is ordered as
/// the quaternion units 1, i, j, k).
struct PlanePairing {
    struct Pair {
        int p, q;
        int sign;  // +1: e_p -> +e_q;  -1: e_p -> -e_q
    };
    std::vector<Pair> pairs;
};

struct QuaternionRotation {
    Quaternion h;
};

using ModuleRotation = std::variant<PlanePairing, QuaternionRotation>;

inline Eigen::MatrixXd rotation_matrix(int dim, const ModuleRotation& spec) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(dim, dim);
    if (std::holds_alternative<PlanePairing>(spec)) {
        const auto& pp = std::get<PlanePairing>(spec);
        std::vector<bool> used(static_cast<size_t>(dim), false);
        for (const auto& pr : pp.pairs) {
            if (pr.p < 0 || pr.q < 0 || pr.p >= dim || pr.q >= dim || pr.p == pr.q)
                throw std::invalid_argument("rotation pairing: indices out of range");
            if (pr.sign != 1 && pr.sign != -1) throw std::invalid_argument("rotation pairing: sign must be +-1");
            if (used[static_cast<size_t>(pr.p)] || used[static_cast<size_t>(pr.q)])
                throw std::invalid_argument("rotation pairing: coordinate used twice");
            used[static_cast<size_t>(pr.p)] = used[static_cast<size_t>(pr.q)] = true;
            J(pr.q, pr.p) = pr.sign;
            J(pr.p, pr.q) = -pr.sign;
        }
        for (bool u : used)
            if (!u)
                throw std::invalid_argument(
                    "rotation pairing must cover every module coordinate (no complex structure on an "
                    "odd-dimensional or partially paired module)");
    } else {
        const auto& qr = std::get<QuaternionRotation>(spec);
        if (dim != 4) throw std::invalid_argument("quaternion rotation requires a 4-dimensional slot");
        if (!qr.h.is_pure(1e-12) || !qr.h.is_unit(1e-12))
            throw std::invalid_argument("quaternion rotation requires a pure unit quaternion");
        const Quaternion units[4] = {Quaternion(1.0), Quaternion::unit_i(), Quaternion::unit_j(),
                                     Quaternion::unit_k()};
        for (int c = 0; c < 4; ++c) {
            Quaternion out = qr.h * units[c];
            J(0, c) = out.w;
            J(1, c) = out.x;
            J(2, c) = out.y;
            J(3, c) = out.z;
        }
    }
    return J;
}

/// Block operator that applies the given rotation on each listed module and
/// vanishes elsewhere; f^3 + f = 0 holds by construction.
template <class S>
FOperator<S> block_f(const ReductiveSpace<S>& sp, const std::map<int, ModuleRotation>& image_rotations) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(sp.dim_m(), sp.dim_m());
    for (const auto& [mod, spec] : image_rotations) {
        if (mod < 0 || mod > 2) throw std::out_of_range("block_f: module index");
        int d = sp.module_dim(mod), o = sp.module_offset(mod);
        Eigen::MatrixXd J = rotation_matrix(d, spec);
        double dev = max_abs(Eigen::MatrixXd(J * J + Eigen::MatrixXd::Identity(d, d)));
        if (dev > 1e-9) throw std::invalid_argument("block_f: rotation does not square to -identity");
        M.block(o, o, d, d) = J;
    }
    return FOperator<S>(sp, std::move(M));
}

}  // namespace fstruct
