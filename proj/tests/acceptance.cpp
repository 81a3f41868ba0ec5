// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// Criteria 5 and 9 assert the bundled reference sentences verbatim.  Two of
// those sentences are inconsistent with the classification criteria they
// cite (see README, "Known discrepancies"); the corresponding checks are
// expected to fail and the failure lines point at the witnesses.

#include <cstdio>
#include <functional>
#include <random>

#include "fstruct/report.hpp"

using namespace fstruct;

namespace {

struct Chain {
    long checked = 0;
    long violations = 0;
    void add(bool g1, bool nk, bool kill) {
        ++checked;
        if ((kill && !nk) || (nk && !g1)) ++violations;
    }
};

Chain chain_audit;

struct Criterion {
    bool pass = true;
    std::vector<std::string> details;
    void fail(const std::string& msg) {
        pass = false;
        details.push_back(msg);
    }
    void info(const std::string& msg) { details.push_back(msg); }
};

template <class F>
void for_each_registered_space(F&& fn) {
    fn(make_stiefel_so4_so2());
    fn(make_su3_tmax());
    fn(make_sp3_flags());
    for (int n = 4; n <= 7; ++n) fn(make_oriented_flags(n));
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string metric_str(const Metric& g) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%g,%g,%g)", g.a1, g.a2, g.a3);
    return buf;
}

// 1. every clause of the admissibility audit passes on every registered space
Criterion criterion1() {
    Criterion c;
    for_each_registered_space([&](const auto& sp) {
        auto rep = verify_assumption1(sp, 1e-9);
        for (const auto& cl : rep.clauses)
            if (!cl.pass)
                c.fail(sp.name() + ": clause " + cl.id + " residual " + fmt(cl.residual));
        if (rep.pass()) c.info(sp.name() + ": all clauses pass");
    });
    return c;
}

// 2. closed-form U agrees with the defining linear system
Criterion criterion2() {
    Criterion c;
    std::mt19937_64 rng(0xACCE07);
    auto uni = [&] { return 2.0 * (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 1.0; };
    for_each_registered_space([&](const auto& sp) {
        double worst = 0.0;
        for (int m = 0; m < 5; ++m) {
            Metric g(0.5 + 3.5 * std::abs(uni()), 0.5 + 3.5 * std::abs(uni()), 0.5 + 3.5 * std::abs(uni()));
            for (int t = 0; t < 100; ++t) {
                Eigen::VectorXd xv(sp.dim_m()), yv(sp.dim_m());
                for (int i = 0; i < sp.dim_m(); ++i) {
                    xv(i) = uni();
                    yv(i) = uni();
                }
                auto x = sp.vector(xv), y = sp.vector(yv);
                worst = std::max(worst, (u_closed(x, y, g) - u_oracle(x, y, g)).norm_inf());
            }
        }
        if (worst >= 1e-8)
            c.fail(sp.name() + ": closed-form vs defining-system deviation " + fmt(worst));
        else
            c.info(sp.name() + ": max deviation " + fmt(worst) + " over 500 samples");
    });
    return c;
}

// 3. image-shape structures: NKf and G1f on the whole grid, Killf nowhere
Criterion criterion3() {
    Criterion c;
    auto grid = default_metric_grid();
    for_each_registered_space([&](const auto& sp) {
        for (const auto& e : builtin_catalog(sp)) {
            if (classify_shape(e.op).kind != ShapeTag::Kind::ImageIs) continue;
            DirectClassifier dc(sp, e.op);
            int bad = 0;
            for (const auto& g : grid) {
                bool g1 = dc.holds(StructureClass::G1f, g), nk = dc.holds(StructureClass::NKf, g),
                     kill = dc.holds(StructureClass::Killf, g);
                chain_audit.add(g1, nk, kill);
                if (!g1 || !nk || kill) {
                    ++bad;
                    if (bad == 1)
                        c.fail(sp.name() + "/" + e.id + " at " + metric_str(g) + ": G1f " +
                               (g1 ? "yes" : "NO") + ", NKf " + (nk ? "yes" : "NO") + ", Killf " +
                               (kill ? "YES" : "no"));
                }
            }
            if (bad == 0) c.info(sp.name() + "/" + e.id + ": NKf+G1f on 216/216, Killf on 0/216");
        }
    });
    return c;
}

// 4. Killing points of the two kernel-shape benchmark structures
Criterion criterion4() {
    Criterion c;
    auto grid = default_metric_grid();
    auto check_killing_set = [&](const auto& sp, const char* id, const RegionSpec& region,
                                 const std::vector<Metric>& must_fail) {
        auto f = make_builtin_f(sp, id);
        DirectClassifier dc(sp, f);
        int passing = 0;
        for (const auto& g : grid) {
            bool direct = dc.holds(StructureClass::Killf, g);
            bool expected = region.contains(g);
            if (direct) ++passing;
            if (direct != expected)
                c.fail(sp.name() + "/" + id + " at " + metric_str(g) + ": Killf " +
                       (direct ? "passes" : "fails") + " but proportionality says " +
                       (expected ? "pass" : "fail"));
        }
        for (const auto& g : must_fail)
            if (dc.holds(StructureClass::Killf, g))
                c.fail(sp.name() + "/" + id + " unexpectedly Killing at " + metric_str(g));
        c.info(sp.name() + "/" + id + ": Killf on " + std::to_string(passing) +
               " grid metrics, exactly the " + region.pattern() + " points");
    };
    check_killing_set(make_stiefel_so4_so2(), "f4", RegionSpec::killing_ratio(0, 1, 2),
                      {Metric(1, 1, 1), Metric(3, 3, 4)});
    check_killing_set(make_oriented_flags(5), "f1", RegionSpec::killing_ratio(2, 0, 1),
                      {Metric(1, 1, 1)});
    return c;
}

// 5. the quaternionic family claims, asserted as stated in the reference
Criterion criterion5() {
    Criterion c;
    auto grid = default_metric_grid();
    auto sp3 = make_sp3_flags();

    // f1 with h2 = -h1: NKf exactly on the a1 = a2 grid metrics, Killf on none (as claimed)
    for (const Quaternion& h : {quat_sample_set()[0], quat_sample_set()[8]}) {
        auto f1 = make_builtin_f(sp3, "f1", {h, -h});
        DirectClassifier dc(sp3, f1);
        for (const auto& g : grid) {
            bool nk = dc.holds(StructureClass::NKf, g);
            bool kill = dc.holds(StructureClass::Killf, g);
            chain_audit.add(dc.holds(StructureClass::G1f, g), nk, kill);
            bool lam = std::abs(g.a1 - g.a2) < 1e-12;
            if (nk != lam)
                c.fail("f1 anti-pair: NKf " + std::string(nk ? "holds" : "fails") + " at " +
                       metric_str(g) + " against the (s,s,t) pattern");
            if (kill)
                c.fail("f1 anti-pair: Killf asserted empty but holds at " + metric_str(g) +
                       " (residual " + fmt(dc.evaluate(StructureClass::Killf, g).residual) +
                       "; documented discrepancy, see README)");
        }
    }

    // f2, f3: never NKf, for every sampled (h1, h2) pair and every grid metric
    for (const char* id : {"f2", "f3"}) {
        int checked = 0;
        bool ok = true;
        for (const auto& [h1, h2] : quat_sample_pairs()) {
            auto f = make_builtin_f(sp3, id, {h1, h2});
            DirectClassifier dc(sp3, f);
            for (const auto& g : grid) {
                ++checked;
                bool nk = dc.holds(StructureClass::NKf, g);
                chain_audit.add(dc.holds(StructureClass::G1f, g), nk,
                                dc.holds(StructureClass::Killf, g));
                if (nk) {
                    ok = false;
                    c.fail(std::string(id) + " NKf unexpectedly holds at " + metric_str(g));
                }
            }
        }
        if (ok)
            c.info(std::string(id) + ": NKf fails on all " + std::to_string(checked) +
                   " (pair, metric) combinations");
    }

    // one-block structures: NKf on the whole grid
    for (int p = 1; p <= 3; ++p) {
        auto f = make_builtin_f(sp3, "ob" + std::to_string(p), {quat_sample_set()[10], std::nullopt});
        DirectClassifier dc(sp3, f);
        bool ok = true;
        for (const auto& g : grid) {
            bool nk = dc.holds(StructureClass::NKf, g);
            chain_audit.add(dc.holds(StructureClass::G1f, g), nk, dc.holds(StructureClass::Killf, g));
            if (!nk) {
                ok = false;
                c.fail("ob" + std::to_string(p) + " NKf fails at " + metric_str(g));
            }
        }
        if (ok) c.info("ob" + std::to_string(p) + ": NKf on 216/216 grid metrics");
    }
    return c;
}

// 6. both classification routes agree over the grid for every catalog pair
Criterion criterion6() {
    Criterion c;
    auto grid = default_metric_grid();
    int pairs = 0;
    for_each_registered_space([&](const auto& sp) {
        for (const auto& e : builtin_catalog(sp)) {
            ++pairs;
            auto cv = cross_validate(sp, e.op, grid, 1e-9);
            chain_audit.checked += cv.chain_checked;
            chain_audit.violations += cv.chain_violations;
            if (!cv.disagreements.empty()) {
                const auto& d = cv.disagreements.front();
                c.fail(sp.name() + "/" + e.id + ": " + std::to_string(cv.disagreements.size()) +
                       " disagreements, first " + std::string(class_name(d.cls)) + " at " +
                       metric_str(d.metric) + " direct=" + (d.direct_verdict ? "yes" : "no") +
                       " structural=" + (d.structural_verdict ? "yes" : "no"));
            }
        }
    });
    c.info(std::to_string(pairs) + " (space, structure) pairs x 216 metrics: full agreement");
    return c;
}

// 7. the class chain holds across everything this suite evaluated
Criterion criterion7() {
    Criterion c;
    if (chain_audit.violations > 0)
        c.fail(std::to_string(chain_audit.violations) + " chain violations in " +
               std::to_string(chain_audit.checked) + " audited verdict triples");
    else
        c.info("0 violations in " + std::to_string(chain_audit.checked) + " audited verdict triples");
    return c;
}

// 8. structural identities over full basis enumerations
Criterion criterion8() {
    Criterion c;
    const Metric metrics[] = {Metric(1, 1, 1), Metric(1, 2, 3), Metric(0.5, 4, 4.0 / 3.0)};
    for_each_registered_space([&](const auto& sp) {
        using MatT = std::decay_t<decltype(sp.m_basis_element(0))>;
        std::vector<MatT> basis;
        for (const auto& b : sp.h_basis()) basis.push_back(b);
        for (int i = 0; i < sp.dim_m(); ++i) basis.push_back(sp.m_basis_element(i));

        double jac = 0.0, adinv = 0.0;
        for (size_t a = 0; a < basis.size(); ++a)
            for (size_t b = 0; b < basis.size(); ++b) {
                for (size_t d = 0; d < basis.size(); ++d) {
                    jac = std::max(jac, (bracket(basis[a], bracket(basis[b], basis[d])) +
                                         bracket(basis[b], bracket(basis[d], basis[a])) +
                                         bracket(basis[d], bracket(basis[a], basis[b])))
                                            .max_abs());
                    adinv = std::max(adinv,
                                     std::abs(trace_form(bracket(basis[d], basis[a]), basis[b], sp.g0_scale()) +
                                              trace_form(basis[a], bracket(basis[d], basis[b]), sp.g0_scale())));
                }
            }
        if (jac >= 1e-9) c.fail(sp.name() + ": Jacobi residual " + fmt(jac));
        if (adinv >= 1e-9) c.fail(sp.name() + ": g0 ad-invariance residual " + fmt(adinv));

        double proj = 0.0;
        for (int i = 0; i < sp.dim_m(); ++i) {
            auto e = sp.basis_vector(i);
            auto sum = sp.project(e, 0) + sp.project(e, 1) + sp.project(e, 2);
            proj = std::max(proj, (sum - e).norm_inf());
            for (int mi = 0; mi < 3; ++mi) {
                auto p = sp.project(e, mi);
                proj = std::max(proj, (sp.project(p, mi) - p).norm_inf());
                for (int mj = 0; mj < 3; ++mj)
                    if (mi != mj) proj = std::max(proj, std::abs(sp.g0(p, sp.project(e, mj))));
            }
        }
        if (proj >= 1e-9) c.fail(sp.name() + ": projection family residual " + fmt(proj));

        double torsion = 0.0, defining = 0.0;
        for (const Metric& g : metrics) {
            for (int a = 0; a < sp.dim_m(); ++a)
                for (int b = 0; b < sp.dim_m(); ++b) {
                    auto x = sp.basis_vector(a), y = sp.basis_vector(b);
                    torsion = std::max(torsion, (nabla(x, y, g) - nabla(y, x, g) -
                                                 sp.bracket_m(x, y).m_part)
                                                    .norm_inf());
                    auto u = u_closed(x, y, g);
                    for (int d = 0; d < sp.dim_m(); ++d) {
                        auto z = sp.basis_vector(d);
                        defining = std::max(
                            defining,
                            std::abs(2.0 * sp.metric_inner(u, z, g) -
                                     sp.metric_inner(x, sp.bracket_m(z, y).m_part, g) -
                                     sp.metric_inner(sp.bracket_m(z, x).m_part, y, g)));
                    }
                }
        }
        if (torsion >= 1e-9) c.fail(sp.name() + ": torsion residual " + fmt(torsion));
        if (defining >= 1e-9) c.fail(sp.name() + ": defining-identity residual " + fmt(defining));
        if (c.pass)
            c.info(sp.name() + ": jacobi " + fmt(jac) + ", ad-inv " + fmt(adinv) + ", proj " + fmt(proj) +
                   ", torsion " + fmt(torsion) + ", defining " + fmt(defining));
    });
    return c;
}

// 9. the reference-claims table reproduces with exit 0
Criterion criterion9() {
    Criterion c;
    auto suite = run_reference_suite(1e-9);
    c.info(std::to_string(suite.matched) + "/" + std::to_string(suite.rows.size()) +
           " reference claims reproduced");
    if (!suite.all_match) {
        for (const auto& row : suite.rows)
            if (!row.match())
                c.fail(row.claim.space + "/" + row.claim.f_id + ": computed Killf '" +
                       row.computed_kill.pattern() + "' vs claimed '" +
                       (row.claim.kill.kind == RegionSpec::Kind::None ? "never" : row.claim.kill.pattern()) +
                       "' " + (row.note.empty() ? "" : "-- " + row.note));
    }
    return c;
}

}  // namespace

int main() {
    struct Entry {
        const char* label;
        std::function<Criterion()> run;
    };
    const Entry entries[] = {
        {"1 admissibility audit (7 spaces, all clauses < 1e-9)", criterion1},
        {"2 closed-form U vs defining system (500 samples/space, 1e-8)", criterion2},
        {"3 image-shape structures: NKf+G1f always, Killf never", criterion3},
        {"4 Killing points (4s,3s,3s) / (3s,3s,4s)", criterion4},
        {"5 quaternionic family claims as stated", criterion5},
        {"6 route agreement over every catalog pair x 216 metrics", criterion6},
        {"7 class chain Killf => NKf => G1f across all runs", criterion7},
        {"8 structural identities over full basis enumerations", criterion8},
        {"9 reference table reproduces (14 claims, exit 0)", criterion9},
    };
    int failures = 0;
    for (const auto& e : entries) {
        Criterion c = e.run();
        std::printf("[%s] criterion %s\n", c.pass ? "PASS" : "FAIL", e.label);
        for (const auto& d : c.details) std::printf("        %s\n", d.c_str());
        if (!c.pass) ++failures;
    }
    std::printf("%d/9 criteria pass\n", 9 - failures);
    if (failures)
        std::printf(
            "failing checks assert reference sentences that contradict the reference's own criteria; "
            "see README 'Known discrepancies' and the computed witnesses above\n");
    return failures;
}
