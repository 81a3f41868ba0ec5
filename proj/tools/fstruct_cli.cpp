// Command-line front end: space registry, admissibility audits, f-structure
// classification and the bundled reference-claims table.
//
// Exit codes: 0 success / all checks pass, 1 verification or classification
// mismatch, 2 input error.

#include <CLI11.hpp>
#include <iostream>

#include "fstruct/report.hpp"
#include "fstruct/space_io.hpp"

using namespace fstruct;

namespace {

struct GlobalOpts {
    std::string format = "human";
    double tolerance = 1e-9;
};

void emit(const GlobalOpts& go, const Json& doc, const std::string& human) {
    if (go.format == "structured")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << human;
}

SpaceVariant resolve_space(const std::string& name, std::optional<int> n, const std::string& space_file) {
    if (!space_file.empty()) return load_space_file(space_file);
    return build_space(name, n);
}

int cmd_list_spaces(const GlobalOpts& go) {
    Json j;
    j["schema"] = "fstruct.spaces/1";
    Json arr = Json::array();
    std::ostringstream os;
    os << "registered spaces:\n";
    for (const auto& info : registered_spaces()) {
        Json e;
        e["name"] = info.name;
        e["alias"] = info.alias;
        e["ring"] = info.ring;
        e["description"] = info.description;
        std::string dims, fs;
        if (!info.parametrized) {
            std::visit(
                [&](const auto& sp) {
                    e["dims"] = json_space_info(sp)["dim_m"];
                    e["dim_h"] = sp.dim_h();
                    dims = "dim h = " + std::to_string(sp.dim_h()) + ", dim m = (" +
                           std::to_string(sp.module_dim(0)) + "," + std::to_string(sp.module_dim(1)) + "," +
                           std::to_string(sp.module_dim(2)) + ")";
                    Json cat = Json::array();
                    for (const auto& c : builtin_catalog(sp)) {
                        cat.push_back(c.id);
                        fs += (fs.empty() ? "" : ", ") + c.id;
                    }
                    e["f_structures"] = cat;
                },
                build_space(info.name));
        } else {
            e["parameter"] = "n >= 4";
            e["f_structures"] = Json::array({"f1", "f2", "f3", "f4"});
            dims = "parametrized by n (use --n); dim m = (2(n-3), 2, n-3)";
            fs = "f1, f2, f3, f4";
        }
        arr.push_back(e);
        os << "  " << info.name << " (alias " << info.alias << ", ring " << info.ring << ")\n"
           << "      " << info.description << "\n      " << dims << "\n      structures: " << fs << "\n";
    }
    j["spaces"] = arr;
    emit(go, j, os.str());
    return 0;
}

int cmd_verify(const GlobalOpts& go, const std::string& name, std::optional<int> n,
               const std::string& space_file) {
    SpaceVariant sv = space_file.empty() ? build_space(name, n) : parse_space_file(space_file);
    Assumption1Report rep;
    std::visit([&](const auto& sp) { rep = verify_assumption1(sp, go.tolerance); }, sv);
    emit(go, json_verify_report(rep), render_verify_human(rep));
    return rep.pass() ? 0 : 1;
}

int cmd_classify(const GlobalOpts& go, const std::string& name, std::optional<int> n,
                 const std::string& space_file, const std::string& f_id, const std::string& f_file,
                 const std::string& metric_str, bool grid, bool region, const std::string& quat_str) {
    SpaceVariant sv = resolve_space(name, n, space_file);
    QueryKind kind = QueryKind::Region;
    std::optional<Metric> metric;
    if (!metric_str.empty()) {
        std::istringstream ms(metric_str);
        std::string part;
        double a[3];
        for (double& v : a) {
            if (!std::getline(ms, part, ',')) throw ParseError("--metric expects a1,a2,a3");
            v = std::stod(part);
        }
        metric = Metric(a[0], a[1], a[2]);
        kind = QueryKind::AtMetric;
    } else if (grid) {
        kind = QueryKind::Grid;
    } else if (!region) {
        throw ParseError("choose one of --metric, --grid, --region");
    }
    QuatParams qp;
    if (!quat_str.empty()) qp = parse_quat_params(quat_str);

    ClassifyRun run;
    std::visit(
        [&](const auto& sp) {
            if (!f_file.empty()) {
                auto f = parse_f_file(f_file, sp);
                run = run_classify(sp, f, "file:" + f_file, kind, metric, go.tolerance);
            } else {
                auto f = make_builtin_f(sp, f_id, qp);
                run = run_classify(sp, f, f_id, kind, metric, go.tolerance);
            }
        },
        sv);
    emit(go, run.doc, run.human);
    if (run.gate_failed) return 2;
    return run.routes_agree ? 0 : 1;
}

int cmd_reproduce(const GlobalOpts& go) {
    ReferenceSuite suite = run_reference_suite(go.tolerance);
    emit(go, json_reference_suite(suite), render_reference_suite_human(suite));
    return suite.all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant metric f-structure classification on three-module reductive spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts go;
    app.add_option("--format", go.format, "output format: human | structured")
        ->check(CLI::IsMember({"human", "structured"}));
    app.add_option("--tolerance", go.tolerance, "numeric tolerance for zero tests (default 1e-9)");

    auto* list = app.add_subcommand("list-spaces", "list the registered spaces and their structures");

    std::string v_name, v_file;
    int v_n = 0;
    auto* verify = app.add_subcommand("verify", "audit the admissibility assumptions for a space");
    verify->add_option("space", v_name, "space name or alias (omit when using --space-file)");
    verify->add_option("--n", v_n, "parameter n for oriented_flags");
    verify->add_option("--space-file", v_file, "declarative space definition file");

    std::string c_name, c_fid, c_ffile, c_metric, c_quat, c_sfile;
    int c_n = 0;
    bool c_grid = false, c_region = false;
    auto* classify = app.add_subcommand("classify", "classify a metric f-structure");
    classify->add_option("space", c_name, "space name or alias");
    classify->add_option("f", c_fid, "builtin f-structure id (see list-spaces)");
    classify->add_option("--n", c_n, "parameter n for oriented_flags");
    classify->add_option("--space-file", c_sfile, "declarative space definition file");
    classify->add_option("--f-file", c_ffile, "f-structure definition file");
    classify->add_option("--metric", c_metric, "characteristic numbers a1,a2,a3");
    classify->add_flag("--grid", c_grid, "evaluate over the default metric grid");
    classify->add_flag("--region", c_region, "report admissible metric regions per class");
    classify->add_option("--quat", c_quat, "quaternion parameters, e.g. h1=i,h2=-i or h=j");

    auto* repro = app.add_subcommand("reproduce-paper",
                                     "re-derive the bundled reference classification table and compare");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(list)) return cmd_list_spaces(go);
        if (app.got_subcommand(verify))
            return cmd_verify(go, v_name, v_n > 0 ? std::optional<int>(v_n) : std::nullopt, v_file);
        if (app.got_subcommand(classify))
            return cmd_classify(go, c_name, c_n > 0 ? std::optional<int>(c_n) : std::nullopt, c_sfile,
                                c_fid, c_ffile, c_metric, c_grid, c_region, c_quat);
        if (app.got_subcommand(repro)) return cmd_reproduce(go);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
