#pragma once

#include <json.hpp>
#include <sstream>

#include "classify.hpp"
#include "reference_suite.hpp"

namespace fstruct {

using Json = nlohmann::ordered_json;

template <class S>
Json json_space_info(const ReductiveSpace<S>& sp) {
    Json j;
    j["name"] = sp.name();
    j["ring"] = sp.ring_label();
    j["ambient"] = sp.ambient_size();
    j["dim_h"] = sp.dim_h();
    j["dim_m"] = Json::array({sp.module_dim(0), sp.module_dim(1), sp.module_dim(2)});
    j["g0_scale"] = sp.g0_scale();
    return j;
}

inline Json json_verify_report(const Assumption1Report& rep) {
    Json j;
    j["schema"] = "fstruct.verify/1";
    j["space"] = rep.space;
    j["ring"] = rep.ring;
    j["dim_h"] = rep.dim_h;
    j["dim_m"] = Json::array({rep.dims[0], rep.dims[1], rep.dims[2]});
    j["tolerance"] = rep.tolerance;
    j["pass"] = rep.pass();
    Json clauses = Json::array();
    for (const auto& c : rep.clauses) {
        Json cj;
        cj["id"] = c.id;
        cj["description"] = c.description;
        cj["residual"] = c.residual;
        cj["pass"] = c.pass;
        if (!c.witness.empty()) cj["witness"] = c.witness;
        clauses.push_back(cj);
    }
    j["clauses"] = clauses;
    Json mods = Json::array();
    for (int i = 0; i < 3; ++i) {
        const auto& m = rep.modules[static_cast<size_t>(i)];
        Json mj;
        mj["module"] = "m" + std::to_string(i + 1);
        mj["dim"] = m.dim;
        mj["commutant_dim"] = m.commutant_dim;
        mj["irreducible"] = m.irreducible;
        mods.push_back(mj);
    }
    j["evidence"]["modules"] = mods;
    Json cross = Json::array();
    for (int i = 0; i < 3; ++i)
        cross.push_back(Json::array({rep.cross_dims[static_cast<size_t>(i)][0],
                                     rep.cross_dims[static_cast<size_t>(i)][1],
                                     rep.cross_dims[static_cast<size_t>(i)][2]}));
    j["evidence"]["equivariant_dims"] = cross;
    j["evidence"]["gram_min_eigenvalue"] = rep.gram_min_eigenvalue;
    j["evidence"]["closure_residual"] = rep.closure_residual;
    j["evidence"]["clean"] = rep.evidence_clean;
    j["notes"] = rep.notes;
    return j;
}

inline std::string render_verify_human(const Assumption1Report& rep) {
    std::ostringstream os;
    os << "space " << rep.space << "  (ring " << rep.ring << ", dim h = " << rep.dim_h << ", dim m = ("
       << rep.dims[0] << "," << rep.dims[1] << "," << rep.dims[2] << "))\n";
    for (const auto& c : rep.clauses) {
        const char* figure = c.id == "A3.existence" ? "smallest witness norm " : "residual ";
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << "  " << figure << c.residual
           << "  -- " << c.description << "\n";
        if (!c.witness.empty()) os << "         witness: " << c.witness << "\n";
    }
    os << "  evidence: commutant dims (";
    for (int i = 0; i < 3; ++i) os << (i ? "," : "") << rep.modules[static_cast<size_t>(i)].commutant_dim;
    os << "), intertwiner dims";
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            if (i != k && rep.cross_dims[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0)
                os << " m" << i + 1 << "<->m" << k + 1 << ":"
                   << rep.cross_dims[static_cast<size_t>(i)][static_cast<size_t>(k)];
    os << (rep.evidence_clean ? " (clean)" : " (anomalies, see notes)") << "\n";
    for (const auto& n : rep.notes) os << "  note: " << n << "\n";
    os << "result: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

enum class QueryKind { AtMetric, Grid, Region };

struct ClassifyRun {
    Json doc;
    std::string human;
    bool gate_failed = false;
    bool routes_agree = true;
};

namespace detail {

inline Json json_metric(const Metric& g) { return Json::array({g.a1, g.a2, g.a3}); }

inline Json json_region(const RegionSpec& r) {
    Json j;
    switch (r.kind) {
        case RegionSpec::Kind::All: j["verdict"] = "always"; break;
        case RegionSpec::Kind::None: j["verdict"] = "never"; break;
        default:
            j["verdict"] = "region";
            j["condition"] = r.str();
            j["pattern"] = r.pattern();
    }
    return j;
}

}  // namespace detail

/// Full classification run used by the CLI: gates, both routes, agreement.
template <class S>
ClassifyRun run_classify(const ReductiveSpace<S>& sp, const FOperator<S>& f, const std::string& f_id,
                         QueryKind kind, std::optional<Metric> metric, double tol = 1e-9) {
    ClassifyRun out;
    Json& j = out.doc;
    j["schema"] = "fstruct.classify/1";
    j["tolerance"] = tol;
    j["space"] = json_space_info(sp);

    double f3 = check_f_cubed(f);
    double inv = check_invariance(f);
    ShapeTag shape = classify_shape(f);
    j["f"]["id"] = f_id;
    j["f"]["shape"] = shape.str();
    j["f"]["f_cubed_residual"] = f3;
    j["f"]["invariance_residual"] = inv;
    j["f"]["invariant"] = inv < tol;

    Metric probe = metric.value_or(Metric(1, 1, 1));
    double compat = check_compatibility(f, probe);
    j["gates"]["f_cubed_pass"] = f3 < tol;
    j["gates"]["compatibility_residual"] = compat;
    j["gates"]["compatibility_pass"] = compat < tol;
    j["gates"]["invariance_warning"] = inv >= tol;
    if (f3 >= tol || compat >= tol) {
        out.gate_failed = true;
        j["error"] = f3 >= tol ? "operator fails f^3 + f = 0" : "operator is not skew for the metric";
        out.human = "gate failure: " + j["error"].get<std::string>() + "\n";
        return out;
    }

    DirectClassifier<S> dc(sp, f);
    StructuralAnalysis an = structural_classify(sp, f, tol);
    const StructureClass classes[3] = {StructureClass::G1f, StructureClass::NKf, StructureClass::Killf};

    j["query"]["type"] = kind == QueryKind::AtMetric ? "metric" : (kind == QueryKind::Grid ? "grid" : "region");
    if (metric) j["query"]["metric"] = detail::json_metric(*metric);

    Json structural;
    structural["applicable"] = an.applicable;
    if (!an.reason.empty()) structural["reason"] = an.reason;
    if (an.applicable) {
        structural["G1f"] = detail::json_region(an.g1);
        structural["NKf"] = detail::json_region(an.nk);
        structural["Killf"] = detail::json_region(an.kill);
        structural["image_bracket_residual"] = an.nkfnr_residual;
        structural["kernel_anticommutation_residual"] = an.antieq_residual;
    }
    j["structural"] = structural;

    std::ostringstream os;
    os << "space " << sp.name() << ", structure " << f_id << " (shape " << shape.str() << ")\n";
    if (inv >= tol)
        os << "warning: operator does not commute with the isotropy action (residual " << inv << ")\n";

    if (kind == QueryKind::AtMetric) {
        Json direct;
        bool verdicts[3];
        for (int ci = 0; ci < 3; ++ci) {
            auto ev = dc.evaluate(classes[ci], *metric);
            verdicts[ci] = ev.residual < tol;
            Json cj;
            cj["verdict"] = verdicts[ci] ? "yes" : "no";
            cj["max_residual"] = ev.residual;
            if (!verdicts[ci] && ev.witness >= 0) {
                cj["witness"] = dc.probe_label(ev.witness);
                Eigen::VectorXd w = dc.probe_coords(ev.witness);
                Json wc = Json::array();
                for (int wi = 0; wi < w.size(); ++wi) wc.push_back(w(wi));
                cj["witness_coords"] = wc;
            }
            direct[class_name(classes[ci])] = cj;
            os << "  " << class_name(classes[ci]) << ": " << (verdicts[ci] ? "yes" : "no") << "  (residual "
               << ev.residual << ")\n";
        }
        j["direct"] = direct;
        bool agree = true;
        if (an.applicable) {
            const RegionSpec* regs[3] = {&an.g1, &an.nk, &an.kill};
            for (int ci = 0; ci < 3; ++ci) agree &= regs[ci]->contains(*metric) == verdicts[ci];
        }
        out.routes_agree = agree;
        j["agreement"]["routes_agree"] = agree;
        j["agreement"]["route"] = an.applicable ? (agree ? "both-agree" : "disagree") : "direct";
        if (!agree) os << "  ROUTE DISAGREEMENT (structural rules vs direct conditions)\n";
        j["chain_ok"] = !(verdicts[2] && !verdicts[1]) && !(verdicts[1] && !verdicts[0]);
    } else {
        auto grid = default_metric_grid();
        auto cv = cross_validate(sp, f, grid, tol);
        out.routes_agree = cv.ok();
        Json direct;
        for (int ci = 0; ci < 3; ++ci) {
            int yes = 0;
            Json pass_list = Json::array();
            for (const auto& g : grid)
                if (dc.holds(classes[ci], g, tol)) {
                    ++yes;
                    if (pass_list.size() < 12) pass_list.push_back(detail::json_metric(g));
                }
            Json cj;
            cj["grid_pass_count"] = yes;
            cj["grid_size"] = static_cast<int>(grid.size());
            if (yes && yes <= 12) cj["passing_metrics"] = pass_list;
            direct[class_name(classes[ci])] = cj;
        }
        j["direct"] = direct;
        j["agreement"]["metrics_checked"] = cv.metrics;
        j["agreement"]["disagreements"] = static_cast<int>(cv.disagreements.size());
        j["agreement"]["chain_violations"] = cv.chain_violations;
        j["agreement"]["routes_agree"] = cv.ok();
        j["samples"]["metric_grid_values"] = Json::array({0.5, 1.0, 4.0 / 3.0, 2.0, 3.0, 4.0});
        if (an.applicable) {
            const char* labels[3] = {"G1f", "NKf", "Killf"};
            const RegionSpec* regs[3] = {&an.g1, &an.nk, &an.kill};
            for (int ci = 0; ci < 3; ++ci) {
                os << "  " << labels[ci] << ": ";
                switch (regs[ci]->kind) {
                    case RegionSpec::Kind::All: os << "always (all metrics)"; break;
                    case RegionSpec::Kind::None: os << "never"; break;
                    default: os << "exactly on " << regs[ci]->str() << ", i.e. " << regs[ci]->pattern();
                }
                os << "\n";
            }
        } else {
            os << "  structural rules not applicable (" << an.reason << "); direct grid summary:\n";
            for (int ci = 0; ci < 3; ++ci)
                os << "    " << class_name(classes[ci]) << ": "
                   << j["direct"][class_name(classes[ci])]["grid_pass_count"].get<int>() << "/"
                   << grid.size() << " grid metrics\n";
        }
        os << "  route agreement over " << cv.metrics << " grid metrics: "
           << (cv.ok() ? "full" : std::to_string(cv.disagreements.size()) + " DISAGREEMENTS") << "\n";
    }
    out.human = os.str();
    return out;
}

inline Json json_reference_suite(const ReferenceSuite& suite) {
    Json j;
    j["schema"] = "fstruct.reproduce/1";
    j["claims"] = static_cast<int>(suite.rows.size());
    j["matched"] = suite.matched;
    j["all_match"] = suite.all_match;
    Json rows = Json::array();
    for (const auto& r : suite.rows) {
        Json rj;
        rj["space"] = r.claim.space;
        rj["f"] = r.claim.f_id;
        rj["claim"] = r.claim.sentence;
        rj["expected"]["G1f"] = detail::json_region(r.claim.g1);
        rj["expected"]["NKf"] = detail::json_region(r.claim.nk);
        rj["expected"]["Killf"] = detail::json_region(r.claim.kill);
        rj["computed"]["G1f"] = detail::json_region(r.computed_g1);
        rj["computed"]["NKf"] = detail::json_region(r.computed_nk);
        rj["computed"]["Killf"] = detail::json_region(r.computed_kill);
        rj["route_agreement"] = r.route_agreement;
        rj["match"] = r.match();
        if (!r.note.empty()) rj["note"] = r.note;
        rows.push_back(rj);
    }
    j["rows"] = rows;
    return j;
}

inline std::string render_reference_suite_human(const ReferenceSuite& suite) {
    std::ostringstream os;
    auto region_str = [](const RegionSpec& r) {
        switch (r.kind) {
            case RegionSpec::Kind::All: return std::string("always");
            case RegionSpec::Kind::None: return std::string("never");
            default: return r.pattern();
        }
    };
    for (const auto& r : suite.rows) {
        os << (r.match() ? "[ OK ] " : "[FAIL] ") << r.claim.space << " " << r.claim.f_id << "\n";
        os << "        claim:    " << r.claim.sentence << "\n";
        os << "        computed: G1f " << region_str(r.computed_g1) << "; NKf " << region_str(r.computed_nk)
           << "; Killf " << region_str(r.computed_kill)
           << (r.route_agreement ? "  (routes agree)" : "  (ROUTE DISAGREEMENT)") << "\n";
        if (!r.note.empty()) os << "        note:     " << r.note << "\n";
    }
    os << suite.matched << "/" << suite.rows.size() << " claims reproduced\n";
    return os.str();
}

}  // namespace fstruct
