// Command-line surface: parse algebra/complex files, dispatch computations,
// manage the cache, emit DOT/JSON artifacts.  Kept in a header so tests can
// drive the exact same code path in process.
#pragma once

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cnproj/driver.hpp"

namespace cnproj {

namespace cli_detail {

struct Common {
    std::string algebra_file;
    uint32_t field_p = 0;  // 0 = take from the file
    EnumerationCaps caps;
    uint64_t budget = 0;  // sets both scan budgets when nonzero
    size_t max_n = 12;
    bool no_recheck = false;
    std::string cache_dir;
    bool no_cache = false;
    std::string format = "json";
    std::string out_file;
    size_t n = 0;
    int window = 1;

    void add_algebra(CLI::App* cmd) {
        cmd->add_option("algebra", algebra_file, "algebra input file (JSON)")->required();
        cmd->add_option("--field-p", field_p, "override the field characteristic");
    }
    void add_caps(CLI::App* cmd) {
        cmd->add_option("--mult-cap", caps.mult_cap, "max multiplicity per (cell, vertex)");
        cmd->add_option("--cell-dim-cap", caps.cell_dim_cap, "max K-dimension per cell");
        cmd->add_option("--budget", budget, "exhaustive-search budget (iso and idempotent scans)");
        cmd->add_option("--cache-dir", cache_dir, "result cache directory");
        cmd->add_flag("--no-cache", no_cache, "disable the result cache");
    }
    void add_out(CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: json or dot")
            ->check(CLI::IsMember({"json", "dot", "text"}));
        cmd->add_option("--out", out_file, "write the artifact to a file instead of stdout");
    }

    EnumerationCaps final_caps() const {
        EnumerationCaps c = caps;
        if (budget) {
            c.iso_budget = budget;
            c.idem_budget = budget;
        }
        return c;
    }
    CacheConfig cache() const {
        CacheConfig cfg;
        cfg.dir = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);
        cfg.enabled = !no_cache;
        return cfg;
    }
    PathAlgebra algebra() const {
        AlgebraSpec spec = read_algebra_file(algebra_file);
        if (field_p) spec.p = field_p;
        return load_algebra(spec);
    }
};

inline void emit(const Common& c, std::ostream& out, const std::string& artifact) {
    if (c.out_file.empty()) {
        out << artifact;
        if (artifact.empty() || artifact.back() != '\n') out << "\n";
    } else {
        std::ofstream f(c.out_file, std::ios::binary);
        if (!f) throw Error(ErrKind::MalformedInput, "cannot write " + c.out_file);
        f << artifact;
    }
}

inline int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrKind::BudgetExceeded:
        case ErrKind::MaxNExceeded:
            return 2;
        default:
            return 1;
    }
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using cli_detail::Common;
    using cli_detail::emit;

    CLI::App app{"strong global dimension and Auslander-Reiten quivers of complexes of projectives"};
    app.require_subcommand(1);

    Common c_info, c_enum, c_ar, c_gb, c_dw, c_sg, c_check, c_hom;
    bool sweep = false;
    std::string hom_x, hom_y;
    std::vector<std::string> which;

    CLI::App* cmd_info = app.add_subcommand("info", "algebra summary: dimension, basis, projectives");
    c_info.add_algebra(cmd_info);
    c_info.add_out(cmd_info);

    CLI::App* cmd_enum = app.add_subcommand("enumerate", "indecomposables of C_n(proj)");
    c_enum.add_algebra(cmd_enum);
    c_enum.add_caps(cmd_enum);
    c_enum.add_out(cmd_enum);
    cmd_enum->add_option("--n", c_enum.n, "complex size")->required();
    cmd_enum->add_flag("--sweep", sweep, "re-run with loosened caps and report stability");

    CLI::App* cmd_ar = app.add_subcommand("ar-quiver", "Auslander-Reiten quiver of C_n(proj)");
    c_ar.add_algebra(cmd_ar);
    c_ar.add_caps(cmd_ar);
    c_ar.add_out(cmd_ar);
    cmd_ar->add_option("--n", c_ar.n, "complex size")->required();

    CLI::App* cmd_gb = app.add_subcommand(
        "gamma-bar", "distinguished subquiver at size eta+1 (contractibles removed)");
    c_gb.add_algebra(cmd_gb);
    c_gb.add_caps(cmd_gb);
    c_gb.add_out(cmd_gb);
    cmd_gb->add_option("--max-n", c_gb.max_n, "bound for the size iteration");

    CLI::App* cmd_dw = app.add_subcommand("derived-quiver", "derived AR-quiver window");
    c_dw.add_algebra(cmd_dw);
    c_dw.add_caps(cmd_dw);
    c_dw.add_out(cmd_dw);
    cmd_dw->add_option("--window", c_dw.window, "window radius (copies -w..w)");
    cmd_dw->add_option("--max-n", c_dw.max_n, "bound for the size iteration");

    CLI::App* cmd_sg = app.add_subcommand("sgldim", "strong global dimension");
    c_sg.add_algebra(cmd_sg);
    c_sg.add_caps(cmd_sg);
    c_sg.add_out(cmd_sg);
    cmd_sg->add_option("--max-n", c_sg.max_n, "bound for the size iteration");
    cmd_sg->add_flag("--no-recheck", c_sg.no_recheck, "skip the sanity re-check one size up");

    CLI::App* cmd_check = app.add_subcommand("check", "run the structural property suites");
    c_check.add_algebra(cmd_check);
    c_check.add_caps(cmd_check);
    c_check.add_out(cmd_check);
    cmd_check->add_option("--max-n", c_check.max_n, "bound for the size iteration");
    cmd_check->add_option("--which", which, "subset of property names (default: all)");

    CLI::App* cmd_hom = app.add_subcommand("hom", "chain-map space between two complexes");
    c_hom.add_algebra(cmd_hom);
    c_hom.add_out(cmd_hom);
    cmd_hom->add_option("X", hom_x, "first complex file")->required();
    cmd_hom->add_option("Y", hom_y, "second complex file")->required();

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "cnproj");
    for (std::string& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cmd_info) {
            PathAlgebra A = c_info.algebra();
            if (c_info.format == "text") {
                std::ostringstream os;
                os << "dim " << A.dim() << "\n";
                os << "basis:";
                for (size_t i = 0; i < A.dim(); ++i) os << " " << A.path_name(int(i));
                os << "\n";
                for (size_t v = 0; v < A.num_vertices(); ++v)
                    os << "P_" << A.quiver().vertices[v] << ": dim " << A.proj_dim(int(v)) << "\n";
                emit(c_info, out, os.str());
            } else {
                json basis = json::array();
                for (size_t i = 0; i < A.dim(); ++i) basis.push_back(A.path_name(int(i)));
                json projs = json::object();
                for (size_t v = 0; v < A.num_vertices(); ++v)
                    projs[A.quiver().vertices[v]] = A.proj_dim(int(v));
                emit(c_info, out,
                     json{{"dim", A.dim()},
                          {"p", A.field().p()},
                          {"basis", basis},
                          {"projective_dims", projs},
                          {"algebra_sha256", A.sha256()}}
                         .dump());
            }
            return 0;
        }
        if (*cmd_enum) {
            PathAlgebra A = c_enum.algebra();
            if (sweep) {
                SweepResult r = stability_sweep(A, c_enum.n, c_enum.final_caps());
                emit(c_enum, out,
                     json{{"stable", r.stable}, {"new_reps", r.new_rep_ids}}.dump());
                return 0;
            }
            CachedEnumerator ce(A, c_enum.final_caps(), c_enum.cache());
            EnumerationResult res = ce.enumerate(c_enum.n);
            emit(c_enum, out, res.bytes);
            return 0;
        }
        if (*cmd_ar) {
            PathAlgebra A = c_ar.algebra();
            CachedEnumerator ce(A, c_ar.final_caps(), c_ar.cache());
            IndecomposableSet set = ce.enumerate(c_ar.n).set;
            RadCache rc(A, set);
            ARQuiver q = build_ar_quiver(rc);
            emit(c_ar, out, c_ar.format == "dot" ? export_dot(q) : quiver_to_json(q).dump());
            return 0;
        }
        if (*cmd_gb || *cmd_dw) {
            Common& c = *cmd_gb ? c_gb : c_dw;
            PathAlgebra A = c.algebra();
            DriverConfig cfg;
            cfg.max_n = c.max_n;
            cfg.cache = c.cache();
            SgldimReport rep = sgldim(A, c.final_caps(), cfg);
            if (!rep.found)
                throw Error(ErrKind::MaxNExceeded,
                            "no verdict within max_n = " + std::to_string(c.max_n));
            if (*cmd_dw && rep.eta == 0) {
                DerivedWindow w = semisimple_window(A, c.window);
                emit(c, out, c.format == "dot" ? export_dot(w) : window_to_json(w).dump());
                return 0;
            }
            CachedEnumerator ce(A, c.final_caps(), c.cache());
            IndecomposableSet set = ce.enumerate(size_t(rep.eta) + 1).set;
            RadCache rc(A, set);
            ARQuiver q = build_ar_quiver(rc);
            ARQuiver gb = gamma_bar(q, size_t(rep.eta));
            if (*cmd_gb) {
                emit(c, out, c.format == "dot" ? export_dot(gb) : quiver_to_json(gb).dump());
            } else {
                DerivedWindow w = derived_window(A, set, gb, c.window);
                emit(c, out, c.format == "dot" ? export_dot(w) : window_to_json(w).dump());
            }
            return 0;
        }
        if (*cmd_sg) {
            PathAlgebra A = c_sg.algebra();
            DriverConfig cfg;
            cfg.max_n = c_sg.max_n;
            cfg.recheck = !c_sg.no_recheck;
            cfg.cache = c_sg.cache();
            SgldimReport rep = sgldim(A, c_sg.final_caps(), cfg);
            emit(c_sg, out, report_to_json(A, rep).dump());
            return rep.found ? 0 : 2;
        }
        if (*cmd_check) {
            PathAlgebra A = c_check.algebra();
            DriverConfig cfg;
            cfg.max_n = c_check.max_n;
            cfg.cache = c_check.cache();
            SgldimReport rep = sgldim(A, c_check.final_caps(), cfg);
            if (!rep.found)
                throw Error(ErrKind::MaxNExceeded,
                            "no verdict within max_n = " + std::to_string(c_check.max_n));
            std::vector<PropertyReport> reports =
                check_properties(A, size_t(rep.eta), c_check.final_caps(), which, c_check.cache());
            emit(c_check, out, property_reports_to_json(reports).dump());
            return 0;
        }
        if (*cmd_hom) {
            PathAlgebra A = c_hom.algebra();
            ProjComplex X = read_complex_file(A, hom_x);
            ProjComplex Y = read_complex_file(A, hom_y);
            HomSpace H = hom_space(A, X, Y);
            // component entries use the same term format as differentials
            json basis = json::array();
            for (const ChainMap& f : H.basis) {
                json fj = json::array();
                for (size_t i = 0; i < f.comp.size(); ++i) {
                    const BlockMat& b = f.comp[i];
                    json rows = json::array();
                    for (size_t r = 0; r < b.rows; ++r) {
                        json row = json::array();
                        for (size_t cc = 0; cc < b.cols; ++cc) {
                            json entry = json::array();
                            for (const auto& [pi, coeff] : b.at(r, cc)) {
                                json ids = json::array();
                                for (int a : A.path(pi).arrows)
                                    ids.push_back(A.quiver().arrows[size_t(a)].id);
                                entry.push_back({{"path", ids}, {"coeff", coeff}});
                            }
                            row.push_back(entry);
                        }
                        rows.push_back(row);
                    }
                    fj.push_back(rows);
                }
                basis.push_back(fj);
            }
            emit(c_hom, out, json{{"dim", H.dim()}, {"basis", basis}}.dump());
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return cli_detail::exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace cnproj
