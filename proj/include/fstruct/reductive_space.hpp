#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "matrix.hpp"
#include "metric.hpp"

namespace fstruct {

template <class S>
class ReductiveSpace;

/// Element of the reductive complement m, stored as real coordinates in the
/// concatenated basis of m1, m2, m3.
template <class S>
struct MVector {
    const ReductiveSpace<S>* space = nullptr;
    Eigen::VectorXd c;

    MVector() = default;
    MVector(const ReductiveSpace<S>& sp, Eigen::VectorXd coords) : space(&sp), c(std::move(coords)) {}

    double norm_inf() const { return c.size() ? c.cwiseAbs().maxCoeff() : 0.0; }

    MVector& operator+=(const MVector& o) {
        require_same_space(o);
        c += o.c;
        return *this;
    }
    MVector& operator-=(const MVector& o) {
        require_same_space(o);
        c -= o.c;
        return *this;
    }
    MVector& operator*=(double s) {
        c *= s;
        return *this;
    }
    MVector operator-() const { return {*space, -c}; }

    friend MVector operator+(MVector a, const MVector& b) { return a += b; }
    friend MVector operator-(MVector a, const MVector& b) { return a -= b; }
    friend MVector operator*(MVector a, double s) { return a *= s; }
    friend MVector operator*(double s, MVector a) { return a *= s; }

    void require_same_space(const MVector& o) const {
        if (space != o.space) throw std::invalid_argument("MVector: operands live on different spaces");
    }
};

/// Bracket of two m-vectors split along g = h (+) m.
template <class S>
struct BracketParts {
    MVector<S> m_part;
    Eigen::VectorXd h_coords;

    Mat<S> h_part() const { return m_part.space->embed_h(h_coords); }
};

/// A homogeneous reductive space presented by explicit bases: the isotropy
/// algebra h and three modules m1, m2, m3 inside a matrix Lie algebra, with
/// the inner product g0 = -scale * Re tr(XY).
///
/// Construction precomputes the Gram matrix of the full basis, the structure
/// coefficients of all basis brackets and the isotropy action on m; the worst
/// reconstruction residual over basis pairs is kept as evidence that the
/// given span closes under the bracket.
template <class S>
class ReductiveSpace {
public:
    ReductiveSpace(std::string name, int ambient, double g0_scale, std::vector<Mat<S>> h_basis,
                   std::array<std::vector<Mat<S>>, 3> m_basis)
        : name_(std::move(name)),
          ambient_(ambient),
          g0_scale_(g0_scale),
          h_basis_(std::move(h_basis)),
          m_basis_(std::move(m_basis)) {
        precompute();
    }

    const std::string& name() const { return name_; }
    int ambient_size() const { return ambient_; }
    double g0_scale() const { return g0_scale_; }
    static std::string ring_label() { return ring_traits<S>::label; }

    int dim_h() const { return static_cast<int>(h_basis_.size()); }
    int dim_m() const { return dim_m_; }
    int module_dim(int i) const { return static_cast<int>(m_basis_[check_index(i)].size()); }
    int module_offset(int i) const { return moff_[check_index(i)]; }
    /// Index of the module containing coordinate slot c.
    int module_of(int c) const {
        for (int i = 0; i < 3; ++i)
            if (c >= moff_[i] && c < moff_[i] + module_dim(i)) return i;
        throw std::out_of_range("module_of: coordinate index");
    }

    const std::vector<Mat<S>>& h_basis() const { return h_basis_; }
    const std::vector<Mat<S>>& module_basis(int i) const { return m_basis_[check_index(i)]; }
    const Mat<S>& m_basis_element(int c) const { return m_flat_[static_cast<size_t>(c)]; }

    const Eigen::MatrixXd& gram_m() const { return gram_m_; }
    const Eigen::MatrixXd& gram_full() const { return gram_full_; }
    double build_residual() const { return build_residual_; }

    /// Isotropy action of the w-th h generator on m coordinates.
    const Eigen::MatrixXd& ad_h_on_m(int w) const { return ad_m_[static_cast<size_t>(w)]; }

    MVector<S> zero_vector() const { return {*this, Eigen::VectorXd::Zero(dim_m_)}; }
    MVector<S> basis_vector(int c) const {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(dim_m_);
        v(c) = 1.0;
        return {*this, v};
    }
    MVector<S> vector(Eigen::VectorXd coords) const {
        if (coords.size() != dim_m_) throw std::invalid_argument("vector: coordinate length mismatch");
        return {*this, std::move(coords)};
    }

    /// Projection onto the i-th module; the family is g0-orthogonal,
    /// idempotent and sums to the identity on m.
    MVector<S> project(const MVector<S>& x, int i) const {
        require_mine(x);
        check_index(i);
        Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_m_);
        out.segment(moff_[i], module_dim(i)) = x.c.segment(moff_[i], module_dim(i));
        return {*this, out};
    }

    Mat<S> embed(const MVector<S>& x) const {
        require_mine(x);
        Mat<S> out(ambient_, ambient_);
        for (int c = 0; c < dim_m_; ++c)
            if (x.c(c) != 0.0) out += m_flat_[static_cast<size_t>(c)] * x.c(c);
        return out;
    }

    Mat<S> embed_h(const Eigen::VectorXd& hc) const {
        Mat<S> out(ambient_, ambient_);
        for (int w = 0; w < dim_h(); ++w)
            if (hc(w) != 0.0) out += h_basis_[static_cast<size_t>(w)] * hc(w);
        return out;
    }

    /// Decompose an ambient algebra element over the full h ++ m basis.
    /// The returned residual measures how far the element is from the span.
    struct Split {
        Eigen::VectorXd h_coords;
        Eigen::VectorXd m_coords;
        double residual;
    };

    Split split(const Mat<S>& a) const {
        int H = dim_h(), N = dim_m_;
        Eigen::VectorXd rhs(H + N);
        for (int w = 0; w < H; ++w) rhs(w) = trace_form(h_basis_[static_cast<size_t>(w)], a, g0_scale_);
        for (int c = 0; c < N; ++c) rhs(H + c) = trace_form(m_flat_[static_cast<size_t>(c)], a, g0_scale_);
        Eigen::VectorXd coef = gram_lu_.solve(rhs);
        Mat<S> recon = embed_h(coef.head(H)) + embed({*this, coef.tail(N)});
        return {coef.head(H), coef.tail(N), (recon - a).max_abs()};
    }

    /// [X,Y] split into m- and h-components, via the precomputed structure
    /// coefficients of the basis brackets.
    BracketParts<S> bracket_m(const MVector<S>& x, const MVector<S>& y) const {
        require_mine(x);
        require_mine(y);
        x.require_same_space(y);
        Eigen::VectorXd m = Eigen::VectorXd::Zero(dim_m_);
        Eigen::VectorXd h = Eigen::VectorXd::Zero(dim_h());
        for (int i = 0; i < dim_m_; ++i) {
            double xi = x.c(i);
            if (xi == 0.0) continue;
            for (int j = 0; j < dim_m_; ++j) {
                double f = xi * y.c(j);
                if (f == 0.0) continue;
                m += f * cm_[idx(i, j)];
                h += f * ch_[idx(i, j)];
            }
        }
        return {MVector<S>{*this, std::move(m)}, std::move(h)};
    }

    /// Reference route for bracket_m: bracket the embedded matrices and split.
    BracketParts<S> bracket_m_ambient(const MVector<S>& x, const MVector<S>& y) const {
        Mat<S> b = bracket(embed(x), embed(y));
        Split s = split(b);
        if (s.residual > 1e-6)
            throw std::runtime_error("bracket_m: bracket leaves the algebra span (corrupted basis?)");
        return {MVector<S>{*this, std::move(s.m_coords)}, std::move(s.h_coords)};
    }

    double g0(const MVector<S>& x, const MVector<S>& y) const {
        require_mine(x);
        require_mine(y);
        return x.c.dot(gram_m_ * y.c);
    }

    /// Gram matrix of the invariant metric with the given characteristic numbers.
    Eigen::MatrixXd metric_gram(const Metric& g) const {
        Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim_m_, dim_m_);
        for (int i = 0; i < 3; ++i) {
            int o = moff_[i], d = module_dim(i);
            out.block(o, o, d, d) = g[i] * gram_m_.block(o, o, d, d);
        }
        return out;
    }

    double metric_inner(const MVector<S>& x, const MVector<S>& y, const Metric& g) const {
        double total = 0.0;
        for (int i = 0; i < 3; ++i) {
            int o = moff_[i], d = module_dim(i);
            total += g[i] * x.c.segment(o, d).dot(gram_m_.block(o, o, d, d) * y.c.segment(o, d));
        }
        return total;
    }

private:
    static int check_index(int i) {
        if (i < 0 || i > 2) throw std::out_of_range("module index must be 0, 1 or 2");
        return i;
    }

    void require_mine(const MVector<S>& x) const {
        if (x.space != this) throw std::invalid_argument("MVector belongs to a different space");
    }

    size_t idx(int i, int j) const { return static_cast<size_t>(i) * dim_m_ + j; }

    void precompute() {
        for (int i = 0; i < 3; ++i) {
            moff_[i] = dim_m_;
            dim_m_ += static_cast<int>(m_basis_[static_cast<size_t>(i)].size());
            for (const auto& b : m_basis_[static_cast<size_t>(i)]) m_flat_.push_back(b);
        }
        const int H = dim_h(), N = dim_m_;
        if (N == 0) throw std::invalid_argument("ReductiveSpace: empty reductive complement");

        gram_full_.resize(H + N, H + N);
        auto elem = [&](int k) -> const Mat<S>& {
            return k < H ? h_basis_[static_cast<size_t>(k)] : m_flat_[static_cast<size_t>(k - H)];
        };
        for (int i = 0; i < H + N; ++i)
            for (int j = 0; j <= i; ++j)
                gram_full_(i, j) = gram_full_(j, i) = trace_form(elem(i), elem(j), g0_scale_);
        gram_m_ = gram_full_.bottomRightCorner(N, N);
        gram_lu_.compute(gram_full_);
        if (!gram_lu_.isInvertible())
            throw std::invalid_argument("ReductiveSpace: basis is linearly dependent or g0 is degenerate on it");

        // Structure coefficients over all basis pairs; the residual records the
        // worst defect of closure under the bracket.
        cm_.assign(static_cast<size_t>(N) * N, Eigen::VectorXd::Zero(N));
        ch_.assign(static_cast<size_t>(N) * N, Eigen::VectorXd::Zero(H));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < i; ++j) {
                Mat<S> b = bracket(m_flat_[static_cast<size_t>(i)], m_flat_[static_cast<size_t>(j)]);
                Split s = split(b);
                build_residual_ = std::max(build_residual_, s.residual);
                cm_[idx(i, j)] = s.m_coords;
                ch_[idx(i, j)] = s.h_coords;
                cm_[idx(j, i)] = -s.m_coords;
                ch_[idx(j, i)] = -s.h_coords;
            }

        ad_m_.assign(static_cast<size_t>(H), Eigen::MatrixXd::Zero(N, N));
        for (int w = 0; w < H; ++w)
            for (int j = 0; j < N; ++j) {
                Mat<S> b = bracket(h_basis_[static_cast<size_t>(w)], m_flat_[static_cast<size_t>(j)]);
                Split s = split(b);
                build_residual_ = std::max(build_residual_, s.residual);
                ad_m_[static_cast<size_t>(w)].col(j) = s.m_coords;
            }
        for (int w = 0; w < H; ++w)
            for (int v = 0; v < w; ++v) {
                Split s = split(bracket(h_basis_[static_cast<size_t>(w)], h_basis_[static_cast<size_t>(v)]));
                build_residual_ = std::max(build_residual_, s.residual);
            }
    }

    std::string name_;
    int ambient_;
    double g0_scale_;
    std::vector<Mat<S>> h_basis_;
    std::array<std::vector<Mat<S>>, 3> m_basis_;

    std::vector<Mat<S>> m_flat_;
    int dim_m_ = 0;
    std::array<int, 3> moff_{};
    Eigen::MatrixXd gram_full_, gram_m_;
    Eigen::FullPivLU<Eigen::MatrixXd> gram_lu_;
    std::vector<Eigen::VectorXd> cm_, ch_;
    std::vector<Eigen::MatrixXd> ad_m_;
    double build_residual_ = 0.0;
};

}  // namespace fstruct
