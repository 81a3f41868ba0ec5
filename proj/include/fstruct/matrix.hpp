#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "quaternion.hpp"

namespace fstruct {

/// Dense row-major matrix over one of the division rings R, C, H.
///
/// Carrier for ambient Lie algebra elements; every space in the registry is
/// at most 7x7, so no attention is paid to blocking or sparsity.
template <class S>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows * cols)) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("Mat: dimensions must be positive");
    }

    static Mat zero(int n) { return Mat(n, n); }
    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1.0);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    Mat& operator+=(const Mat& o) {
        check_same_shape(o);
        for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same_shape(o);
        for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    Mat& operator*=(double s) {
        for (auto& v : e_) v *= s;
        return *this;
    }
    Mat operator-() const {
        Mat r = *this;
        for (auto& v : r.e_) v = -v;
        return r;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, double s) { return a *= s; }
    friend Mat operator*(double s, Mat a) { return a *= s; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: inner dimensions differ");
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (norm2(aik) == 0.0) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    Mat conj_transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = conj((*this)(i, j));
        return r;
    }

    S trace() const {
        require_square();
        S t{};
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : e_) m = std::max(m, scalar_abs(v));
        return m;
    }

    /// Deviation from X* = -X; zero for honest algebra elements.
    double anti_hermitian_residual() const {
        require_square();
        double m = 0.0;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                S d = (*this)(i, j) + conj((*this)(j, i));
                m = std::max(m, scalar_abs(d));
            }
        return m;
    }

    void require_square() const {
        if (rows_ != cols_) throw std::invalid_argument("Mat: square matrix required");
    }

private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<S> e_;
};

template <class S>
Mat<S> bracket(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("bracket: square matrices of equal size required");
    return a * b - b * a;
}

/// -scale * Re tr(A B).  With a positive scale this is positive definite on
/// skew / anti-Hermitian matrices and reproduces the negative Killing form of
/// each registered algebra for the right scale.
template <class S>
double trace_form(const Mat<S>& a, const Mat<S>& b, double scale) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("trace_form: square matrices of equal size required");
    double re = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) re += real_part(a(i, k) * b(k, i));
    return -scale * re;
}

}  // namespace fstruct
