#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <string>

namespace fstruct {

/// Hamilton quaternion w + x i + y j + z k over doubles.
///
/// Multiplication follows i^2 = j^2 = k^2 = ijk = -1, so ij = k and ji = -k.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_) : w(w_) {}
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion unit_i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion unit_j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion unit_k() { return {0, 0, 0, 1}; }

    Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    Quaternion operator-() const { return {-w, -x, -y, -z}; }

    double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    bool is_pure(double tol = 1e-12) const { return std::abs(w) <= tol; }
    bool is_unit(double tol = 1e-12) const { return std::abs(norm() - 1.0) <= tol; }
};

inline Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
inline Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
inline Quaternion operator*(Quaternion a, double s) { return a *= s; }
inline Quaternion operator*(double s, Quaternion a) { return a *= s; }

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.w << "," << q.x << "," << q.y << "," << q.z << ")";
}

// Uniform scalar access for the three division rings used as matrix entries.

inline double conj(double s) { return s; }
inline double real_part(double s) { return s; }
inline double real_part(const std::complex<double>& s) { return s.real(); }
inline double real_part(const Quaternion& q) { return q.w; }

inline double norm2(double s) { return s * s; }
inline double norm2(const std::complex<double>& s) { return std::norm(s); }
inline double norm2(const Quaternion& q) { return q.norm2(); }

inline double scalar_abs(double s) { return std::abs(s); }
inline double scalar_abs(const std::complex<double>& s) { return std::abs(s); }
inline double scalar_abs(const Quaternion& q) { return q.norm(); }

template <class S>
struct ring_traits;

template <>
struct ring_traits<double> {
    static constexpr const char* label = "R";
    static constexpr int real_dim = 1;
};
template <>
struct ring_traits<std::complex<double>> {
    static constexpr const char* label = "C";
    static constexpr int real_dim = 2;
};
template <>
struct ring_traits<Quaternion> {
    static constexpr const char* label = "H";
    static constexpr int real_dim = 4;
};

}  // namespace fstruct
