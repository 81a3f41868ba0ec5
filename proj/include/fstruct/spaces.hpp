#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reductive_space.hpp"

namespace fstruct {

using Cplx = std::complex<double>;

using SpaceR = ReductiveSpace<double>;
using SpaceC = ReductiveSpace<Cplx>;
using SpaceH = ReductiveSpace<Quaternion>;
using SpaceVariant = std::variant<SpaceR, SpaceC, SpaceH>;

namespace detail {

template <class S>
Mat<S> slot_pair(int n, int p, int q, S v) {
    // v at (p,q) and -conj(v) at (q,p): the generic anti-Hermitian slot element.
    Mat<S> m(n, n);
    m(p, q) = v;
    m(q, p) = -conj(v);
    return m;
}

inline Mat<double> skew_pair(int n, int p, int q) { return slot_pair<double>(n, p, q, 1.0); }

}  // namespace detail

/// Stiefel manifold realized in so(4): h is the rotation plane of the last two
/// coordinates, m splits into the a-slot, the b-row and the c-row.
inline SpaceR make_stiefel_so4_so2() {
    using detail::skew_pair;
    const int n = 4;
    std::vector<Mat<double>> h = {skew_pair(n, 2, 3)};
    std::vector<Mat<double>> m1 = {skew_pair(n, 0, 1)};
    std::vector<Mat<double>> m2 = {skew_pair(n, 0, 2), skew_pair(n, 0, 3)};
    std::vector<Mat<double>> m3 = {skew_pair(n, 1, 2), skew_pair(n, 1, 3)};
    return SpaceR("stiefel_so4_so2", n, 2.0, std::move(h), {std::move(m1), std::move(m2), std::move(m3)});
}

/// su(3) modulo its maximal torus: three complex off-diagonal 2-planes.
inline SpaceC make_su3_tmax() {
    const int n = 3;
    const Cplx I(0.0, 1.0);
    std::vector<Mat<Cplx>> h;
    {
        Mat<Cplx> t1(n, n), t2(n, n);
        t1(0, 0) = I;
        t1(1, 1) = -I;
        t2(1, 1) = I;
        t2(2, 2) = -I;
        h = {t1, t2};
    }
    auto slot = [&](int p, int q) {
        return std::vector<Mat<Cplx>>{detail::slot_pair<Cplx>(n, p, q, Cplx(1.0, 0.0)),
                                      detail::slot_pair<Cplx>(n, p, q, I)};
    };
    return SpaceC("su3_tmax", n, 6.0, std::move(h), {slot(0, 1), slot(0, 2), slot(1, 2)});
}

/// sp(3) modulo three diagonal sp(1) blocks: quaternionic off-diagonal slots.
inline SpaceH make_sp3_flags() {
    const int n = 3;
    const Quaternion units[3] = {Quaternion::unit_i(), Quaternion::unit_j(), Quaternion::unit_k()};
    std::vector<Mat<Quaternion>> h;
    for (int p = 0; p < n; ++p)
        for (const auto& u : units) {
            Mat<Quaternion> d(n, n);
            d(p, p) = u;
            h.push_back(d);
        }
    auto slot = [&](int p, int q) {
        std::vector<Mat<Quaternion>> out;
        out.push_back(detail::slot_pair<Quaternion>(n, p, q, Quaternion(1.0)));
        for (const auto& u : units) out.push_back(detail::slot_pair<Quaternion>(n, p, q, u));
        return out;
    };
    return SpaceH("sp3_flags", n, 8.0, std::move(h), {slot(0, 1), slot(0, 2), slot(1, 2)});
}

/// Oriented flags in so(n), n >= 4, for the index partition {0} | {1,2} | {3..n-1}:
/// h = so(2) (+) so(n-3); m1 pairs the 2-plane with the tail block, m2 is the
/// first-row 2-slot, m3 the first-row tail slot.  Module basis ordering inside
/// m1 keeps the two rows of each tail column adjacent.
inline SpaceR make_oriented_flags(int n) {
    using detail::skew_pair;
    if (n < 4) throw std::invalid_argument("oriented_flags: n must be at least 4");
    std::vector<Mat<double>> h = {skew_pair(n, 1, 2)};
    for (int p = 3; p < n; ++p)
        for (int q = p + 1; q < n; ++q) h.push_back(skew_pair(n, p, q));
    std::vector<Mat<double>> m1, m2, m3;
    for (int g = 3; g < n; ++g) {
        m1.push_back(skew_pair(n, 1, g));
        m1.push_back(skew_pair(n, 2, g));
    }
    m2 = {skew_pair(n, 0, 1), skew_pair(n, 0, 2)};
    for (int g = 3; g < n; ++g) m3.push_back(skew_pair(n, 0, g));
    return SpaceR("oriented_flags_" + std::to_string(n), n, static_cast<double>(n - 2), std::move(h),
                  {std::move(m1), std::move(m2), std::move(m3)});
}

struct SpaceInfo {
    std::string name;
    std::string alias;
    std::string ring;
    bool parametrized;
    std::string description;
};

inline std::vector<SpaceInfo> registered_spaces() {
    return {
        {"stiefel_so4_so2", "stiefel", "R", false, "Stiefel manifold SO(4)/SO(2)"},
        {"su3_tmax", "su3", "C", false, "complex flag manifold SU(3)/T_max"},
        {"sp3_flags", "sp3", "H", false, "quaternionic flag manifold Sp(3)/SU(2)^3"},
        {"oriented_flags", "flags", "R", true, "oriented flag manifolds SO(n)/SO(2)xSO(n-3), n >= 4"},
    };
}

/// Build a registered space by (canonical or alias) name; oriented flags take
/// the single parameter n.
inline SpaceVariant build_space(const std::string& name, std::optional<int> param = std::nullopt) {
    if (name == "stiefel_so4_so2" || name == "stiefel") return make_stiefel_so4_so2();
    if (name == "su3_tmax" || name == "su3") return make_su3_tmax();
    if (name == "sp3_flags" || name == "sp3") return make_sp3_flags();
    if (name == "oriented_flags" || name == "flags") {
        if (!param) throw std::invalid_argument("oriented_flags requires the parameter n (n >= 4)");
        return make_oriented_flags(*param);
    }
    // oriented_flags_7 style compact names
    const std::string prefix = "oriented_flags_";
    if (name.rfind(prefix, 0) == 0) {
        int n = std::stoi(name.substr(prefix.size()));
        return make_oriented_flags(n);
    }
    throw std::invalid_argument("unknown space: " + name);
}

}  // namespace fstruct
