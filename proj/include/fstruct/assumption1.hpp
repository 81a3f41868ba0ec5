#pragma once

#include <array>
#include <string>
#include <vector>

#include "reductive_space.hpp"

namespace fstruct {

/// Dimension of the space of real-linear maps m_i -> m_j commuting with the
/// infinitesimal isotropy action, computed as the nullity of the stacked
/// intertwining system.  i == j gives the commutant of the module.
template <class S>
int equivariant_map_dimension(const ReductiveSpace<S>& sp, int i, int j, double rtol = 1e-9) {
    const int di = sp.module_dim(i), dj = sp.module_dim(j);
    if (di == 0 || dj == 0) return 0;
    const int oi = sp.module_offset(i), oj = sp.module_offset(j);
    const int H = sp.dim_h();
    Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(H) * di * dj, di * dj);
    // unknown L is dj x di, stored column-major: u(r,k) = k*dj + r
    Eigen::Index row = 0;
    for (int w = 0; w < H; ++w) {
        Eigen::MatrixXd ai = sp.ad_h_on_m(w).block(oi, oi, di, di);
        Eigen::MatrixXd aj = sp.ad_h_on_m(w).block(oj, oj, dj, dj);
        for (int c = 0; c < di; ++c)
            for (int r = 0; r < dj; ++r, ++row) {
                for (int k = 0; k < di; ++k) sys(row, k * dj + r) += ai(k, c);
                for (int k = 0; k < dj; ++k) sys(row, c * dj + k) -= aj(r, k);
            }
    }
    return nullspace_dimension(sys, rtol);
}

/// Commutant of the isotropy action on module i as a list of dj x di matrices.
template <class S>
std::vector<Eigen::MatrixXd> commutant_basis(const ReductiveSpace<S>& sp, int i, double rtol = 1e-9) {
    const int d = sp.module_dim(i), o = sp.module_offset(i), H = sp.dim_h();
    if (d == 0) return {};
    Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(H) * d * d, d * d);
    Eigen::Index row = 0;
    for (int w = 0; w < H; ++w) {
        Eigen::MatrixXd a = sp.ad_h_on_m(w).block(o, o, d, d);
        for (int c = 0; c < d; ++c)
            for (int r = 0; r < d; ++r, ++row) {
                for (int k = 0; k < d; ++k) sys(row, k * d + r) += a(k, c);
                for (int k = 0; k < d; ++k) sys(row, c * d + k) -= a(r, k);
            }
    }
    Eigen::MatrixXd ns = nullspace_basis(sys, rtol);
    std::vector<Eigen::MatrixXd> out;
    for (int c = 0; c < ns.cols(); ++c) {
        Eigen::MatrixXd L(d, d);
        for (int k = 0; k < d; ++k) L.col(k) = ns.col(c).segment(static_cast<Eigen::Index>(k) * d, d);
        out.push_back(L);
    }
    return out;
}

struct ModuleEvidence {
    int dim = 0;
    int commutant_dim = 0;
    bool irreducible = false;
    double sym_deviation = 0.0;  // largest non-scalar symmetric part found in the commutant
};

struct ClauseResult {
    std::string id;
    std::string description;
    double residual = 0.0;
    bool pass = false;
    std::string witness;
};

struct Assumption1Report {
    std::string space;
    std::string ring;
    int dim_h = 0;
    std::array<int, 3> dims{};
    double tolerance = 1e-9;

    std::vector<ClauseResult> clauses;
    std::array<ModuleEvidence, 3> modules;
    std::array<std::array<int, 3>, 3> cross_dims{};
    double gram_min_eigenvalue = 0.0;
    double closure_residual = 0.0;
    bool evidence_clean = false;
    std::vector<std::string> notes;

    bool pass() const {
        for (const auto& c : clauses)
            if (!c.pass) return false;
        return true;
    }
};

/// Checks the four structural clauses of the admissibility assumption against
/// the space's explicit bases: orthogonality of the decomposition, isotropy
/// invariance of each module, the cyclic bracket relation with nonzero
/// witnesses, and the bracket of each module with itself landing in h.
/// Representation-theoretic evidence (commutants, intertwiner dimensions, an
/// irreducibility certificate) is attached to the report without gating it.
template <class S>
Assumption1Report verify_assumption1(const ReductiveSpace<S>& sp, double tol = 1e-9) {
    Assumption1Report rep;
    rep.space = sp.name();
    rep.ring = sp.ring_label();
    rep.dim_h = sp.dim_h();
    for (int i = 0; i < 3; ++i) rep.dims[static_cast<size_t>(i)] = sp.module_dim(i);
    rep.tolerance = tol;
    rep.closure_residual = sp.build_residual();
    rep.gram_min_eigenvalue = min_eigenvalue_sym(sp.gram_full());

    const int H = sp.dim_h(), N = sp.dim_m();

    // (a) g0-orthogonality of h, m1, m2, m3 against each other.
    double orth = 0.0;
    const Eigen::MatrixXd& G = sp.gram_full();
    auto block_of = [&](int k) { return k < H ? -1 : sp.module_of(k - H); };
    for (int a = 0; a < H + N; ++a)
        for (int b = 0; b < a; ++b)
            if (block_of(a) != block_of(b)) orth = std::max(orth, std::abs(G(a, b)));
    rep.clauses.push_back({"A2.orthogonality", "decomposition g = h + m1 + m2 + m3 is g0-orthogonal", orth,
                           orth < tol, ""});

    // (b) [h, m_i] stays inside m_i.
    double inv = 0.0;
    for (int w = 0; w < H; ++w)
        for (int c = 0; c < N; ++c) {
            auto s = sp.split(bracket(sp.h_basis()[static_cast<size_t>(w)], sp.m_basis_element(c)));
            inv = std::max(inv, s.residual);
            inv = std::max(inv, max_abs(s.h_coords));
            int mod = sp.module_of(c);
            for (int k = 0; k < N; ++k)
                if (sp.module_of(k) != mod) inv = std::max(inv, std::abs(s.m_coords(k)));
        }
    rep.clauses.push_back(
        {"A2.invariance", "[h, m_i] contained in m_i for each module", inv, inv < tol, ""});

    // (c) cyclic relation [m_i, m_{i+1}] contained in m_{i+2}, with nonzero witnesses.
    double a3 = 0.0, worst_witness = std::numeric_limits<double>::infinity();
    std::string witness_desc;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        double best = 0.0;
        std::string best_pair;
        for (int a = 0; a < sp.module_dim(i); ++a)
            for (int b = 0; b < sp.module_dim(j); ++b) {
                int ca = sp.module_offset(i) + a, cb = sp.module_offset(j) + b;
                Mat<S> br = bracket(sp.m_basis_element(ca), sp.m_basis_element(cb));
                auto s = sp.split(br);
                a3 = std::max(a3, s.residual);
                a3 = std::max(a3, max_abs(s.h_coords));
                for (int c = 0; c < N; ++c)
                    if (sp.module_of(c) != k) a3 = std::max(a3, std::abs(s.m_coords(c)));
                double norm = br.max_abs();
                if (norm > best) {
                    best = norm;
                    best_pair = "[m" + std::to_string(i + 1) + "#" + std::to_string(a) + ", m" +
                                std::to_string(j + 1) + "#" + std::to_string(b) + "]";
                }
            }
        if (best < worst_witness) worst_witness = best;
        witness_desc += (i ? "; " : "") + best_pair + " norm " + std::to_string(best);
    }
    rep.clauses.push_back({"A3.containment", "[m_i, m_{i+1}] contained in m_{i+2} (cyclic)", a3, a3 < tol, ""});
    rep.clauses.push_back({"A3.existence", "each cyclic bracket [m_i, m_{i+1}] is nonzero",
                           worst_witness, worst_witness > tol, witness_desc});

    // (d) [m_i, m_i] contained in h.
    double a4 = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int a = 0; a < sp.module_dim(i); ++a)
            for (int b = 0; b < a; ++b) {
                int ca = sp.module_offset(i) + a, cb = sp.module_offset(i) + b;
                auto s = sp.split(bracket(sp.m_basis_element(ca), sp.m_basis_element(cb)));
                a4 = std::max(a4, s.residual);
                a4 = std::max(a4, max_abs(s.m_coords));
            }
    rep.clauses.push_back({"A4.containment", "[m_i, m_i] contained in h", a4, a4 < tol, ""});

    // (e) evidence: intertwiner dimensions and an irreducibility certificate.
    // The commutant is closed under the g0-adjoint, so the module is
    // irreducible exactly when every symmetric element of the commutant is a
    // multiple of the identity (a non-scalar one exhibits invariant subspaces
    // as its eigenspaces).
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            rep.cross_dims[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                i == j ? 0 : equivariant_map_dimension(sp, i, j);
    for (int i = 0; i < 3; ++i) {
        ModuleEvidence ev;
        const int d = sp.module_dim(i), o = sp.module_offset(i);
        ev.dim = d;
        if (d == 0) {
            rep.modules[static_cast<size_t>(i)] = ev;
            rep.notes.push_back("module m" + std::to_string(i + 1) + " is empty");
            continue;
        }
        auto comm = commutant_basis(sp, i);
        ev.commutant_dim = static_cast<int>(comm.size());
        rep.cross_dims[static_cast<size_t>(i)][static_cast<size_t>(i)] = ev.commutant_dim;
        Eigen::LLT<Eigen::MatrixXd> llt(sp.gram_m().block(o, o, d, d));
        Eigen::MatrixXd L = llt.matrixL();
        double dev = 0.0;
        for (const auto& C : comm) {
            Eigen::MatrixXd Cn = L.transpose() * C * L.transpose().fullPivLu().inverse();
            Eigen::MatrixXd sym = 0.5 * (Cn + Cn.transpose());
            sym -= (sym.trace() / d) * Eigen::MatrixXd::Identity(d, d);
            dev = std::max(dev, max_abs(sym));
        }
        ev.sym_deviation = dev;
        ev.irreducible = dev < 1e-7;
        rep.modules[static_cast<size_t>(i)] = ev;
    }

    rep.evidence_clean = true;
    for (int i = 0; i < 3; ++i) {
        if (!rep.modules[static_cast<size_t>(i)].irreducible) {
            rep.evidence_clean = false;
            if (rep.modules[static_cast<size_t>(i)].dim > 0)
                rep.notes.push_back("module m" + std::to_string(i + 1) +
                                    " admits proper invariant subspaces (commutant dimension " +
                                    std::to_string(rep.modules[static_cast<size_t>(i)].commutant_dim) + ")");
        }
        for (int j = 0; j < 3; ++j)
            if (i != j && rep.cross_dims[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                rep.evidence_clean = false;
                if (i < j)
                    rep.notes.push_back(
                        "modules m" + std::to_string(i + 1) + " and m" + std::to_string(j + 1) +
                        " are equivalent as isotropy modules (" +
                        std::to_string(rep.cross_dims[static_cast<size_t>(i)][static_cast<size_t>(j)]) +
                        "-dimensional intertwiner space); invariant metrics are not exhausted by "
                        "characteristic triples");
            }
    }
    if (rep.gram_min_eigenvalue <= 0.0)
        rep.notes.push_back("g0 is not positive definite on the supplied basis");

    return rep;
}

}  // namespace fstruct
