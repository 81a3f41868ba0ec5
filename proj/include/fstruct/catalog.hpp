#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f_operator.hpp"
#include "spaces.hpp"

namespace fstruct {

/// Optional quaternion parameters for the sp3 structures (h for the one-block
/// operators, (h1,h2) for the two-block families).
struct QuatParams {
    std::optional<Quaternion> h1;
    std::optional<Quaternion> h2;
};

template <class S>
struct CatalogEntry {
    std::string id;
    std::string summary;
    FOperator<S> op;
};

inline PlanePairing single_plane(int sign) { return PlanePairing{{{0, 1, sign}}}; }

inline PlanePairing adjacent_pairs(int dim, int sign) {
    if (dim % 2 != 0) throw std::invalid_argument("adjacent_pairs: module dimension must be even");
    PlanePairing pp;
    for (int t = 0; t < dim / 2; ++t) pp.pairs.push_back({2 * t, 2 * t + 1, sign});
    return pp;
}

/// Named operators for each registered space.  Rotation orientations follow
/// the isotropy rotation (sign -1 pairing matches ad of the so(2) generator);
/// the kernel-shape entries come in aligned / opposite orientation variants,
/// which is exactly what separates their nearly Kaehler behaviour.
template <class S>
std::vector<CatalogEntry<S>> builtin_catalog(const ReductiveSpace<S>& sp, const QuatParams& qp = {}) {
    std::vector<CatalogEntry<S>> out;
    const std::string& name = sp.name();

    if constexpr (std::is_same_v<S, double>) {
        if (name == "stiefel_so4_so2") {
            out.push_back({"f1", "rotation of the b-plane (image m2)",
                           block_f(sp, {{1, single_plane(-1)}})});
            out.push_back({"f2", "rotation of the c-plane (image m3)",
                           block_f(sp, {{2, single_plane(-1)}})});
            out.push_back({"f3", "aligned rotations of b and c (kernel m1)",
                           block_f(sp, {{1, single_plane(-1)}, {2, single_plane(-1)}})});
            out.push_back({"f4", "opposite rotations of b and c (kernel m1)",
                           block_f(sp, {{1, single_plane(-1)}, {2, single_plane(+1)}})});
            return out;
        }
        if (name.rfind("oriented_flags", 0) == 0) {
            int d1 = sp.module_dim(0);
            out.push_back({"f1", "opposite rotations of m1 and m2 (kernel m3)",
                           block_f(sp, {{0, adjacent_pairs(d1, +1)}, {1, single_plane(-1)}})});
            out.push_back({"f2", "rotation of m2 (image m2)", block_f(sp, {{1, single_plane(-1)}})});
            out.push_back({"f3", "rotation of m1 (image m1)",
                           block_f(sp, {{0, adjacent_pairs(d1, -1)}})});
            out.push_back({"f4", "aligned rotations of m1 and m2 (kernel m3)",
                           block_f(sp, {{0, adjacent_pairs(d1, -1)}, {1, single_plane(-1)}})});
            return out;
        }
    }
    if constexpr (std::is_same_v<S, Cplx>) {
        if (name == "su3_tmax") {
            for (int p = 0; p < 3; ++p)
                out.push_back({"im" + std::to_string(p + 1),
                               "multiplication by i on m" + std::to_string(p + 1),
                               block_f(sp, {{p, single_plane(+1)}})});
            for (int p = 0; p < 3; ++p) {
                int q = (p + 1) % 3, r = (p + 2) % 3;
                if (q > r) std::swap(q, r);
                out.push_back({"ker" + std::to_string(p + 1) + "_anti",
                               "i and -i on the two modules besides m" + std::to_string(p + 1),
                               block_f(sp, {{q, single_plane(+1)}, {r, single_plane(-1)}})});
                out.push_back({"ker" + std::to_string(p + 1) + "_aligned",
                               "i on both modules besides m" + std::to_string(p + 1),
                               block_f(sp, {{q, single_plane(+1)}, {r, single_plane(+1)}})});
            }
            return out;
        }
    }
    if constexpr (std::is_same_v<S, Quaternion>) {
        if (name == "sp3_flags") {
            Quaternion h1 = qp.h1.value_or(Quaternion::unit_i());
            Quaternion h2 = qp.h2.value_or(-Quaternion::unit_i());
            for (int p = 0; p < 3; ++p)
                out.push_back({"ob" + std::to_string(p + 1),
                               "left multiplication by h on m" + std::to_string(p + 1),
                               block_f(sp, {{p, QuaternionRotation{qp.h1.value_or(Quaternion::unit_i())}}})});
            out.push_back({"f1", "h1 x on m1, h2 y on m2 (kernel m3)",
                           block_f(sp, {{0, QuaternionRotation{h1}}, {1, QuaternionRotation{h2}}})});
            out.push_back({"f2", "h1 x on m1, h2 z on m3 (kernel m2)",
                           block_f(sp, {{0, QuaternionRotation{h1}}, {2, QuaternionRotation{h2}}})});
            out.push_back({"f3", "h1 y on m2, h2 z on m3 (kernel m1)",
                           block_f(sp, {{1, QuaternionRotation{h1}}, {2, QuaternionRotation{h2}}})});
            return out;
        }
    }
    throw std::invalid_argument("no builtin catalog for space " + name);
}

template <class S>
FOperator<S> make_builtin_f(const ReductiveSpace<S>& sp, const std::string& id, const QuatParams& qp = {}) {
    for (auto& e : builtin_catalog(sp, qp))
        if (e.id == id) return e.op;
    throw std::invalid_argument("space " + sp.name() + " has no builtin f-structure '" + id + "'");
}

}  // namespace fstruct
