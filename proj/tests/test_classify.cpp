#include <doctest.h>

#include "fstruct/catalog.hpp"
#include "fstruct/classify.hpp"
#include "test_util.hpp"

using namespace fstruct;
using namespace fstruct::testutil;

TEST_CASE("direct predicates reproduce the frozen classification points") {
    auto st = make_stiefel_so4_so2();
    auto f1 = make_builtin_f(st, "f1");
    auto r = predicate_direct(StructureClass::Killf, f1, Metric(1, 2, 3));
    CHECK_FALSE(r.verdict);
    CHECK(r.max_residual > 1e-3);
    CHECK_FALSE(r.witness_label.empty());
    CHECK(predicate_direct(StructureClass::NKf, f1, Metric(1, 2, 3)).verdict);
    CHECK(predicate_direct(StructureClass::G1f, f1, Metric(1, 2, 3)).verdict);

    auto f4 = make_builtin_f(st, "f4");
    CHECK(predicate_direct(StructureClass::Killf, f4, Metric(4, 3, 3)).verdict);
    CHECK_FALSE(predicate_direct(StructureClass::Killf, f4, Metric(1, 1, 1)).verdict);
    CHECK_FALSE(predicate_direct(StructureClass::Killf, f4, Metric(3, 3, 4)).verdict);
    CHECK(predicate_direct(StructureClass::NKf, f4, Metric(1, 5, 5)).verdict);
    CHECK_FALSE(predicate_direct(StructureClass::NKf, f4, Metric(1, 5, 4)).verdict);

    auto fl = make_oriented_flags(5);
    auto ff1 = make_builtin_f(fl, "f1");
    CHECK(predicate_direct(StructureClass::Killf, ff1, Metric(3, 3, 4)).verdict);
    CHECK_FALSE(predicate_direct(StructureClass::Killf, ff1, Metric(1, 1, 1)).verdict);
    CHECK(predicate_direct(StructureClass::NKf, ff1, Metric(2, 2, 0.7)).verdict);
}

TEST_CASE("structural route: shapes, bracket conditions and regions") {
    auto st = make_stiefel_so4_so2();
    auto an1 = structural_classify(st, make_builtin_f(st, "f1"));
    CHECK(an1.applicable);
    CHECK(an1.nk.kind == RegionSpec::Kind::All);
    CHECK(an1.kill.kind == RegionSpec::Kind::None);

    auto an3 = structural_classify(st, make_builtin_f(st, "f3"));
    CHECK(an3.applicable);
    CHECK_FALSE(an3.nkfnr);
    CHECK(an3.nk.kind == RegionSpec::Kind::None);

    auto an4 = structural_classify(st, make_builtin_f(st, "f4"));
    CHECK(an4.nkfnr);
    CHECK(an4.antieq);
    CHECK(an4.nk == RegionSpec::equal_pair(0, 1, 2));
    CHECK(an4.kill == RegionSpec::killing_ratio(0, 1, 2));
    CHECK(an4.kill.contains(Metric(4, 3, 3)));
    CHECK(an4.kill.contains(Metric(4.0 / 3.0, 1, 1)));
    CHECK_FALSE(an4.kill.contains(Metric(3, 3, 4)));
    CHECK(an4.kill.pattern() == "(4s,3s,3s), s > 0");

    auto su3 = make_su3_tmax();
    auto anti = structural_classify(su3, make_builtin_f(su3, "ker3_anti"));
    CHECK(anti.nkfnr);
    CHECK(anti.antieq);
    CHECK(anti.kill == RegionSpec::killing_ratio(2, 0, 1));
    auto aligned = structural_classify(su3, make_builtin_f(su3, "ker3_aligned"));
    CHECK_FALSE(aligned.nkfnr);
    CHECK(aligned.nk.kind == RegionSpec::Kind::None);
}

TEST_CASE("anti-aligned quaternion pair satisfies both kernel bracket conditions") {
    // For h2 = -h1 the image bracket condition and the kernel
    // anticommutation identity hold exactly, so the Killing region
    // a1 = a2, a3 = (4/3) a1 is nonempty; the direct route confirms it.
    auto sp3 = make_sp3_flags();
    for (const Quaternion& h : {Quaternion::unit_i(), random_pure_unit()}) {
        auto f1 = make_builtin_f(sp3, "f1", {h, -h});
        auto an = structural_classify(sp3, f1);
        CHECK(an.nkfnr);
        CHECK(an.antieq);
        CHECK(an.nk == RegionSpec::equal_pair(2, 0, 1));
        CHECK(an.kill == RegionSpec::killing_ratio(2, 0, 1));
        CHECK(predicate_direct(StructureClass::Killf, f1, Metric(3, 3, 4)).verdict);
        CHECK(predicate_direct(StructureClass::Killf, f1, Metric(1, 1, 4.0 / 3.0)).verdict);
        CHECK_FALSE(predicate_direct(StructureClass::Killf, f1, Metric(1, 1, 1)).verdict);
        CHECK_FALSE(predicate_direct(StructureClass::NKf, f1, Metric(1, 2, 1)).verdict);
    }
    // any misaligned pair loses the image bracket condition entirely
    auto mis = make_builtin_f(sp3, "f1", {Quaternion::unit_i(), Quaternion::unit_j()});
    auto an = structural_classify(sp3, mis);
    CHECK_FALSE(an.nkfnr);
    CHECK(an.nk.kind == RegionSpec::Kind::None);
}

TEST_CASE("sp3 f2 and f3 are never nearly Kaehler, for any sampled parameter pair") {
    auto sp3 = make_sp3_flags();
    for (const auto& [h1, h2] : quat_sample_pairs()) {
        for (const char* id : {"f2", "f3"}) {
            auto f = make_builtin_f(sp3, id, {h1, h2});
            auto an = structural_classify(sp3, f);
            CHECK_FALSE(an.nkfnr);
            CHECK(an.nk.kind == RegionSpec::Kind::None);
            CHECK(an.g1.kind == RegionSpec::Kind::All);
        }
    }
}

TEST_CASE("routes agree over the metric grid") {
    auto grid = default_metric_grid();
    CHECK(grid.size() == 216);
    auto st = make_stiefel_so4_so2();
    for (const auto& e : builtin_catalog(st)) {
        auto cv = cross_validate(st, e.op, grid);
        CHECK(cv.ok());
        CHECK(cv.chain_violations == 0);
    }
    auto fl = make_oriented_flags(4);
    for (const auto& e : builtin_catalog(fl)) CHECK(cross_validate(fl, e.op, grid).ok());
    auto sp3 = make_sp3_flags();
    auto f1 = make_builtin_f(sp3, "f1");
    CHECK(cross_validate(sp3, f1, grid).ok());
}

TEST_CASE("verdicts are invariant under a global metric rescaling") {
    auto st = make_stiefel_so4_so2();
    auto f4 = make_builtin_f(st, "f4");
    DirectClassifier<double> dc(st, f4);
    const StructureClass classes[] = {StructureClass::G1f, StructureClass::NKf, StructureClass::Killf};
    for (int t = 0; t < 10; ++t) {
        auto g = random_metric();
        double s = uniform(0.1, 9.0);
        Metric gs(s * g.a1, s * g.a2, s * g.a3);
        for (auto cls : classes) CHECK(dc.holds(cls, g) == dc.holds(cls, gs));
    }
}

TEST_CASE("degenerate metrics are rejected at construction") {
    CHECK_THROWS_AS(Metric(0.0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Metric(1, -2, 1), std::invalid_argument);
}

TEST_CASE("quaternion samples: 26 pure units, deterministic pair list") {
    auto s = quat_sample_set();
    CHECK(s.size() == 26);
    for (const auto& q : s) {
        CHECK(q.is_pure(1e-12));
        CHECK(q.is_unit(1e-12));
    }
    auto pairs = quat_sample_pairs();
    CHECK(pairs.size() == 26);
    CHECK((pairs[0].first - Quaternion::unit_i()).norm() == doctest::Approx(0.0));
    CHECK((pairs[0].second + Quaternion::unit_i()).norm() == doctest::Approx(0.0));
}

TEST_CASE("defining conditions match their covariant-derivative forms") {
    auto st = make_stiefel_so4_so2();
    for (const char* id : {"f1", "f4"}) {
        auto f = make_builtin_f(st, id);
        for (int t = 0; t < 8; ++t) {
            auto x = random_vector(st);
            auto g = random_metric();
            auto fx = f.apply(x);
            auto kill_cond =
                0.5 * st.bracket_m(x, fx).m_part + u_closed(x, fx, g) - f.apply(u_closed(x, x, g));
            CHECK((nabla_f(f, x, x, g) - kill_cond).norm_inf() < 1e-12);
            auto f2x = f.apply(fx);
            auto nk_cond = 0.5 * st.bracket_m(fx, f2x).m_part + u_closed(fx, f2x, g) -
                           f.apply(u_closed(fx, fx, g));
            CHECK((nabla_f(f, fx, fx, g) - nk_cond).norm_inf() < 1e-12);
        }
    }
}

TEST_CASE("region rules refuse module-mixing rotations") {
    // On the Stiefel space the two rotation planes are equivalent isotropy
    // modules, so a cross-plane almost complex structure with kernel m1 is
    // invariant; the region rules step aside and the direct route still works.
    auto st = make_stiefel_so4_so2();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(5, 5);
    m.block(3, 1, 2, 2) = Eigen::Matrix2d::Identity();
    m.block(1, 3, 2, 2) = -Eigen::Matrix2d::Identity();
    FOperator<double> mixing(st, m);
    CHECK(check_f_cubed(mixing) < 1e-12);
    CHECK(check_invariance(mixing) < 1e-12);
    CHECK(classify_shape(mixing) == ShapeTag{ShapeTag::Kind::KernelIs, 0});
    auto an = structural_classify(st, mixing);
    CHECK_FALSE(an.applicable);
    // compatible only where the two plane weights match
    CHECK(check_compatibility(mixing, Metric(1, 2, 2)) < 1e-12);
    CHECK(check_compatibility(mixing, Metric(1, 2, 3)) > 1e-9);
    CHECK(predicate_direct(StructureClass::G1f, mixing, Metric(1, 2, 2)).verdict);
}
