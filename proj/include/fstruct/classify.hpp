#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "connection.hpp"
#include "f_operator.hpp"

namespace fstruct {

enum class StructureClass { G1f, NKf, Killf };

inline const char* class_name(StructureClass c) {
    switch (c) {
        case StructureClass::G1f: return "G1f";
        case StructureClass::NKf: return "NKf";
        case StructureClass::Killf: return "Killf";
    }
    return "?";
}

/// Metric region in characteristic-number space.  The kernel index i carries
/// the 4/3 ratio against the equal pair (j,k) in the Killing case.
struct RegionSpec {
    enum class Kind { All, None, EqualPair, KillingRatio };
    Kind kind = Kind::None;
    int i = -1, j = -1, k = -1;

    static RegionSpec all() { return {Kind::All, -1, -1, -1}; }
    static RegionSpec none() { return {Kind::None, -1, -1, -1}; }
    static RegionSpec equal_pair(int kernel, int ja, int ka) { return {Kind::EqualPair, kernel, ja, ka}; }
    static RegionSpec killing_ratio(int kernel, int ja, int ka) { return {Kind::KillingRatio, kernel, ja, ka}; }

    bool contains(const Metric& g, double rtol = 1e-9) const {
        auto a = g.values();
        double scale = std::max({a[0], a[1], a[2]});
        switch (kind) {
            case Kind::All: return true;
            case Kind::None: return false;
            case Kind::EqualPair: return std::abs(a[static_cast<size_t>(j)] - a[static_cast<size_t>(k)]) <= rtol * scale;
            case Kind::KillingRatio:
                return std::abs(a[static_cast<size_t>(j)] - a[static_cast<size_t>(k)]) <= rtol * scale &&
                       std::abs(a[static_cast<size_t>(i)] - (4.0 / 3.0) * a[static_cast<size_t>(j)]) <= rtol * scale;
        }
        return false;
    }

    bool operator==(const RegionSpec& o) const {
        if (kind != o.kind) return false;
        if (kind == Kind::All || kind == Kind::None) return true;
        return i == o.i && ((j == o.j && k == o.k) || (j == o.k && k == o.j));
    }

    std::string str() const {
        switch (kind) {
            case Kind::All: return "all metrics";
            case Kind::None: return "no metric";
            case Kind::EqualPair:
                return "a" + std::to_string(j + 1) + " = a" + std::to_string(k + 1);
            case Kind::KillingRatio:
                return "a" + std::to_string(j + 1) + " = a" + std::to_string(k + 1) + ", a" +
                       std::to_string(i + 1) + " = (4/3) a" + std::to_string(j + 1);
        }
        return "?";
    }

    /// Characteristic-number pattern, e.g. "(s,t,t)" or "(4s,3s,3s)".
    std::string pattern() const {
        if (kind == Kind::All) return "any (a1,a2,a3)";
        if (kind == Kind::None) return "empty";
        std::array<std::string, 3> slot;
        if (kind == Kind::EqualPair) {
            slot[static_cast<size_t>(i)] = "t";
            slot[static_cast<size_t>(j)] = slot[static_cast<size_t>(k)] = "s";
            return "(" + slot[0] + "," + slot[1] + "," + slot[2] + "), s,t > 0";
        }
        slot[static_cast<size_t>(i)] = "4s";
        slot[static_cast<size_t>(j)] = slot[static_cast<size_t>(k)] = "3s";
        return "(" + slot[0] + "," + slot[1] + "," + slot[2] + "), s > 0";
    }
};

/// Direct evaluator of the three defining conditions, polarized over a basis.
///
/// Each condition is a quadratic vector identity in X; it vanishes for all X
/// exactly when it vanishes on every basis vector and on every sum of two
/// basis vectors.  Those probes (plus a few random vectors as redundancy) are
/// precomputed into metric-independent bracket combinations, so evaluating a
/// metric costs three short linear combinations per probe.
template <class S>
class DirectClassifier {
public:
    DirectClassifier(const ReductiveSpace<S>& sp, const FOperator<S>& f, int random_probes = 50,
                     uint64_t seed = 0x5eedf57c)
        : sp_(&sp), f_(&f) {
        const int N = sp.dim_m();
        for (int i = 0; i < N; ++i) {
            add_probe(sp.basis_vector(i), "e" + std::to_string(i + 1));
        }
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                Eigen::VectorXd v = Eigen::VectorXd::Zero(N);
                v(i) = 1.0;
                v(j) = 1.0;
                add_probe({sp, v}, "e" + std::to_string(i + 1) + "+e" + std::to_string(j + 1));
            }
        std::mt19937_64 rng(seed + static_cast<uint64_t>(N));
        for (int r = 0; r < random_probes; ++r) {
            Eigen::VectorXd v(N);
            for (int i = 0; i < N; ++i)
                v(i) = 2.0 * (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 1.0;
            add_probe({sp, v}, "random#" + std::to_string(r));
        }
    }

    struct Eval {
        double residual = 0.0;
        int witness = -1;
    };

    Eval evaluate(StructureClass cls, const Metric& g) const {
        auto c = u_coefficients(g);
        Eval out;
        for (size_t p = 0; p < probes_.size(); ++p) {
            const ProbeData& pd = probes_[p];
            Eigen::VectorXd q;
            switch (cls) {
                case StructureClass::Killf:
                    q = 0.5 * pd.kill_bracket;
                    for (int gidx = 0; gidx < 3; ++gidx) q += c[static_cast<size_t>(gidx)] * pd.kill_u[static_cast<size_t>(gidx)];
                    break;
                case StructureClass::NKf:
                    q = 0.5 * pd.nk_bracket;
                    for (int gidx = 0; gidx < 3; ++gidx) q += c[static_cast<size_t>(gidx)] * pd.nk_u[static_cast<size_t>(gidx)];
                    break;
                case StructureClass::G1f:
                    q = Eigen::VectorXd::Zero(sp_->dim_m());
                    for (int gidx = 0; gidx < 3; ++gidx) q += c[static_cast<size_t>(gidx)] * pd.g1_u[static_cast<size_t>(gidx)];
                    break;
            }
            double r = max_abs(q);
            if (r > out.residual) {
                out.residual = r;
                out.witness = static_cast<int>(p);
            }
        }
        return out;
    }

    bool holds(StructureClass cls, const Metric& g, double tol = 1e-9) const {
        return evaluate(cls, g).residual < tol;
    }

    const std::string& probe_label(int idx) const { return probes_[static_cast<size_t>(idx)].label; }
    Eigen::VectorXd probe_coords(int idx) const { return probes_[static_cast<size_t>(idx)].x; }
    int probe_count() const { return static_cast<int>(probes_.size()); }

private:
    struct ProbeData {
        std::string label;
        Eigen::VectorXd x;
        Eigen::VectorXd kill_bracket, nk_bracket;
        std::array<Eigen::VectorXd, 3> kill_u, nk_u, g1_u;
    };

    // group g of U pairs the two modules other than g
    static constexpr int pair_a[3] = {1, 0, 0};
    static constexpr int pair_b[3] = {2, 2, 1};

    Eigen::VectorXd group_term(const MVector<S>& a, const MVector<S>& b, int gidx) const {
        const ReductiveSpace<S>& sp = *sp_;
        MVector<S> t = sp.bracket_m(sp.project(a, pair_a[gidx]), sp.project(b, pair_b[gidx])).m_part +
                       sp.bracket_m(sp.project(b, pair_a[gidx]), sp.project(a, pair_b[gidx])).m_part;
        return t.c;
    }

    void add_probe(const MVector<S>& x, std::string label) {
        const ReductiveSpace<S>& sp = *sp_;
        const FOperator<S>& f = *f_;
        ProbeData pd;
        pd.label = std::move(label);
        pd.x = x.c;
        MVector<S> fx = f.apply(x);
        MVector<S> f2x = f.apply(fx);
        pd.kill_bracket = sp.bracket_m(x, fx).m_part.c;
        pd.nk_bracket = sp.bracket_m(fx, f2x).m_part.c;
        for (int gidx = 0; gidx < 3; ++gidx) {
            Eigen::VectorXd v_x_fx = group_term(x, fx, gidx);
            Eigen::VectorXd v_x_x = group_term(x, x, gidx);
            Eigen::VectorXd v_fx_f2x = group_term(fx, f2x, gidx);
            Eigen::VectorXd v_fx_fx = group_term(fx, fx, gidx);
            Eigen::VectorXd v_f2x_f2x = group_term(f2x, f2x, gidx);
            pd.kill_u[static_cast<size_t>(gidx)] = v_x_fx - f.matrix * v_x_x;
            pd.nk_u[static_cast<size_t>(gidx)] = v_fx_f2x - f.matrix * v_fx_fx;
            pd.g1_u[static_cast<size_t>(gidx)] =
                f.matrix * (2.0 * v_fx_f2x - f.matrix * v_fx_fx + f.matrix * v_f2x_f2x);
        }
        probes_.push_back(std::move(pd));
    }

    const ReductiveSpace<S>* sp_;
    const FOperator<S>* f_;
    std::vector<ProbeData> probes_;
};

struct PredicateResult {
    bool verdict = false;
    double max_residual = 0.0;
    std::string witness_label;
    Eigen::VectorXd witness;
};

/// One-shot direct predicate for a single (class, f, metric) query.
template <class S>
PredicateResult predicate_direct(StructureClass cls, const FOperator<S>& f, const Metric& g,
                                 double tol = 1e-9) {
    DirectClassifier<S> dc(*f.space, f);
    auto ev = dc.evaluate(cls, g);
    PredicateResult out;
    out.verdict = ev.residual < tol;
    out.max_residual = ev.residual;
    if (ev.witness >= 0) {
        out.witness_label = dc.probe_label(ev.witness);
        out.witness = dc.probe_coords(ev.witness);
    }
    return out;
}

/// Shape-rule classification: image-shape operators are nearly Kaehler (hence
/// G1f) for every metric and Killing for none; kernel-shape operators are G1f
/// for every metric, nearly Kaehler on the equal-pair region when the
/// image bracket condition [fX, f^2X]_m = 0 holds, and Killing on the 4/3
/// ratio region when additionally f anticommutes with ad(kernel) on the image.
struct StructuralAnalysis {
    ShapeTag shape;
    bool applicable = false;
    std::string reason;
    double nkfnr_residual = 0.0;
    double antieq_residual = 0.0;
    bool nkfnr = false;
    bool antieq = false;
    RegionSpec g1 = RegionSpec::none();
    RegionSpec nk = RegionSpec::none();
    RegionSpec kill = RegionSpec::none();
};

template <class S>
StructuralAnalysis structural_classify(const ReductiveSpace<S>& sp, const FOperator<S>& f,
                                       double tol = 1e-9) {
    StructuralAnalysis an;
    an.shape = classify_shape(f);
    if (an.shape.kind == ShapeTag::Kind::ImageIs) {
        an.applicable = true;
        an.g1 = RegionSpec::all();
        an.nk = RegionSpec::all();
        an.kill = RegionSpec::none();
        return an;
    }
    if (an.shape.kind != ShapeTag::Kind::KernelIs) {
        an.reason = "shape " + an.shape.str() + " is outside the region rules";
        return an;
    }
    const int i = an.shape.index;
    const int j = (i + 1) % 3, k = (i + 2) % 3;

    // Region rules assume the rotation preserves each image module.
    double mixing = 0.0;
    const Eigen::MatrixXd& M = f.matrix;
    mixing = std::max(mixing, max_abs(Eigen::MatrixXd(M.block(sp.module_offset(j), sp.module_offset(k),
                                                              sp.module_dim(j), sp.module_dim(k)))));
    mixing = std::max(mixing, max_abs(Eigen::MatrixXd(M.block(sp.module_offset(k), sp.module_offset(j),
                                                              sp.module_dim(k), sp.module_dim(j)))));
    if (mixing > tol) {
        an.reason = "image rotation mixes the two image modules; only the direct route applies";
        return an;
    }
    an.applicable = true;

    // [fX, f^2X]_m = 0, decided by polarization over the basis.
    const int N = sp.dim_m();
    auto q_of = [&](const MVector<S>& x) {
        MVector<S> fx = f.apply(x);
        return sp.bracket_m(fx, f.apply(fx)).m_part.c;
    };
    std::vector<Eigen::VectorXd> q_basis;
    for (int a = 0; a < N; ++a) {
        q_basis.push_back(q_of(sp.basis_vector(a)));
        an.nkfnr_residual = std::max(an.nkfnr_residual, max_abs(q_basis.back()));
    }
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            Eigen::VectorXd v = Eigen::VectorXd::Zero(N);
            v(a) = 1.0;
            v(b) = 1.0;
            Eigen::VectorXd pol = q_of({sp, v}) - q_basis[static_cast<size_t>(a)] - q_basis[static_cast<size_t>(b)];
            an.nkfnr_residual = std::max(an.nkfnr_residual, max_abs(pol));
        }
    an.nkfnr = an.nkfnr_residual < tol;

    // [Y, fZ] + f([Y, Z]) = 0 for Y in the kernel module, Z in the image;
    // bilinear, so basis pairs decide it.
    for (int a = 0; a < sp.module_dim(i); ++a) {
        MVector<S> y = sp.basis_vector(sp.module_offset(i) + a);
        for (int c = 0; c < N; ++c) {
            if (sp.module_of(c) == i) continue;
            MVector<S> z = sp.basis_vector(c);
            auto byfz = sp.bracket_m(y, f.apply(z));
            auto byz = sp.bracket_m(y, z);
            Eigen::VectorXd cond = byfz.m_part.c + (f.matrix * byz.m_part.c);
            an.antieq_residual = std::max(an.antieq_residual, max_abs(cond));
            an.antieq_residual = std::max(an.antieq_residual, max_abs(byfz.h_coords));
        }
    }
    an.antieq = an.antieq_residual < tol;

    an.g1 = RegionSpec::all();
    an.nk = an.nkfnr ? RegionSpec::equal_pair(i, j, k) : RegionSpec::none();
    an.kill = (an.nkfnr && an.antieq) ? RegionSpec::killing_ratio(i, j, k) : RegionSpec::none();
    return an;
}

inline std::vector<Metric> default_metric_grid() {
    const double vals[] = {0.5, 1.0, 4.0 / 3.0, 2.0, 3.0, 4.0};
    std::vector<Metric> grid;
    grid.reserve(216);
    for (double a : vals)
        for (double b : vals)
            for (double c : vals) grid.emplace_back(a, b, c);
    return grid;
}

/// Deterministic sample of pure unit quaternions: the six axis units plus 20
/// golden-angle sphere points.
inline std::vector<Quaternion> quat_sample_set() {
    std::vector<Quaternion> s = {{0, 1, 0, 0},  {0, -1, 0, 0}, {0, 0, 1, 0},
                                 {0, 0, -1, 0}, {0, 0, 0, 1},  {0, 0, 0, -1}};
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < 20; ++k) {
        double z = 1.0 - 2.0 * (k + 0.5) / 20.0;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = golden * k;
        Quaternion q(0.0, r * std::cos(phi), r * std::sin(phi), z);
        s.push_back(q * (1.0 / q.norm()));
    }
    return s;
}

/// 26 deterministic (h1, h2) pairs drawn from the sample set; the first is
/// the anti-aligned axis pair.
inline std::vector<std::pair<Quaternion, Quaternion>> quat_sample_pairs() {
    auto s = quat_sample_set();
    std::vector<std::pair<Quaternion, Quaternion>> out;
    out.emplace_back(s[0], s[1]);  // (i, -i)
    for (size_t k = 1; k < s.size(); ++k) out.emplace_back(s[k], s[(7 * k + 3) % s.size()]);
    return out;
}

struct Disagreement {
    Metric metric;
    StructureClass cls;
    bool direct_verdict;
    bool structural_verdict;
    double direct_residual;
};

struct CrossValidation {
    int metrics = 0;
    int comparisons = 0;
    std::vector<Disagreement> disagreements;
    int chain_checked = 0;
    int chain_violations = 0;
    bool structural_applicable = true;
    bool ok() const { return disagreements.empty() && chain_violations == 0; }
};

/// Runs both classification routes over a metric grid and records every
/// disagreement plus any violation of the class chain Killf -> NKf -> G1f.
template <class S>
CrossValidation cross_validate(const ReductiveSpace<S>& sp, const FOperator<S>& f,
                               const std::vector<Metric>& grid, double tol = 1e-9) {
    CrossValidation cv;
    DirectClassifier<S> dc(sp, f);
    StructuralAnalysis an = structural_classify(sp, f, tol);
    cv.structural_applicable = an.applicable;
    const StructureClass classes[3] = {StructureClass::G1f, StructureClass::NKf, StructureClass::Killf};
    for (const Metric& g : grid) {
        ++cv.metrics;
        bool direct_v[3];
        for (int ci = 0; ci < 3; ++ci) {
            direct_v[ci] = dc.holds(classes[ci], g, tol);
            if (an.applicable) {
                const RegionSpec& region = ci == 0 ? an.g1 : (ci == 1 ? an.nk : an.kill);
                bool structural_v = region.contains(g);
                ++cv.comparisons;
                if (structural_v != direct_v[ci])
                    cv.disagreements.push_back({g, classes[ci], direct_v[ci], structural_v,
                                                dc.evaluate(classes[ci], g).residual});
            }
        }
        ++cv.chain_checked;
        if ((direct_v[2] && !direct_v[1]) || (direct_v[1] && !direct_v[0])) ++cv.chain_violations;
    }
    return cv;
}

}  // namespace fstruct
