/*
 * tbc: complexity certificates for torus bundles over the circle
 * Copyright 2026 the tbc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tbc/bounds.hpp"
#include "tbc/certify.hpp"
#include "tbc/cocycle.hpp"
#include "tbc/errors.hpp"
#include "tbc/exactnum.hpp"
#include "tbc/geometry.hpp"
#include "tbc/tri_io.hpp"
#include "tbc/triangulation.hpp"

namespace {

using tbc::json;

struct GlobalOpts {
    bool json_out = false;
    bool quiet = false;
    double tol = 1e-10;
    std::string command;  // echo of argv
};

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void emit(const GlobalOpts& g, const json& inputs, const json& results, long long timing_ms,
          const std::string& human) {
    if (g.json_out) {
        tbc::Report r;
        r.command = g.command;
        r.inputs = inputs;
        r.results = results;
        r.timing_ms = timing_ms;
        std::cout << r.to_json_string();
    } else {
        std::cout << human;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tbc::DomainError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tbc::DomainError("cannot write file '" + path + "'");
    out << text;
}

std::string render_lower(const tbc::LowerBound& b) {
    std::ostringstream os;
    os << b.value << "  [" << tbc::to_string(b.source) << ": raw " << fmt(b.raw);
    if (b.clamped) os << ", clamped";
    if (b.boundary_case) os << ", boundary case";
    os << "]";
    return os.str();
}

std::string render_certificate(const tbc::ComplexityCertificate& c) {
    std::ostringstream os;
    os << "certificate: " << c.family << "  n = " << c.index << "\n";
    if (c.upper)
        os << "  upper bound: " << c.upper->value << "  [" << (c.upper->cited ? "cited" : "constructed")
           << "] " << c.upper->provenance << "\n";
    for (const auto& b : c.lower_bounds) os << "  lower bound: " << render_lower(b) << "\n";
    if (c.conjectured) os << "  conjectured: " << *c.conjectured << "\n";
    if (c.volume_evidence) {
        const auto& v = *c.volume_evidence;
        os << "  volume: " << fmt(v.volume) << " +/- " << fmt(v.error) << "  (residual " << fmt(v.residual)
           << ", " << v.tetrahedra << " tetrahedra, " << v.iterations << " Newton iterations)\n";
    }
    if (c.solver_error) os << "  solver error: " << *c.solver_error << "\n";
    os << "  status: " << c.status;
    if (const auto g = c.gap(); g && *g > 0) os << "  (gap " << *g << ")";
    os << "\n";
    if (!c.note.empty()) os << "  note: " << c.note << "\n";
    return os.str();
}

tbc::BundleVariant parse_variant(const std::string& name) {
    if (name == "n8") return tbc::BundleVariant::FigureEight;
    if (name == "sibling") return tbc::BundleVariant::Sibling;
    throw tbc::DomainError("unknown family '" + name + "' (expected n8 or sibling)");
}

long long now_ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

std::string stats_human(const tbc::IdealTriangulation& t) {
    std::ostringstream os;
    const auto classes = tbc::edge_classes(t);
    const auto stats = tbc::spine_stats(t);
    os << "tetrahedra: " << t.tet_count() << "\n";
    os << "orientable: " << (t.orientable() ? "yes" : "no") << "\n";
    os << "edge classes: " << classes.size() << "\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        os << "  class " << i << " valence " << classes[i].valence() << ":";
        for (const auto& inc : classes[i].cycle)
            os << " (" << inc.tet << ",{" << inc.v0 << "," << inc.v1 << "})";
        os << "\n";
    }
    os << "dual spine: " << stats.vertices << " vertices, " << stats.edges << " edges, " << stats.cells
       << " 2-cells, euler " << stats.euler << "\n";
    os << "cell boundary lengths:";
    for (int l : stats.cell_boundary_lengths) os << " " << l;
    os << "\n";
    return os.str();
}

json stats_json(const tbc::IdealTriangulation& t) {
    const auto classes = tbc::edge_classes(t);
    const auto stats = tbc::spine_stats(t);
    json jc = json::array();
    for (const auto& c : classes) {
        json inc = json::array();
        for (const auto& i : c.cycle) inc.push_back(json::array({i.tet, i.v0, i.v1}));
        jc.push_back(json{{"valence", c.valence()}, {"incidences", inc}});
    }
    return json{{"tetrahedra", t.tet_count()},
                {"orientable", t.orientable()},
                {"edge_classes", jc},
                {"spine", json{{"vertices", stats.vertices},
                               {"edges", stats.edges},
                               {"cells", stats.cells},
                               {"cell_boundary_lengths", stats.cell_boundary_lengths},
                               {"euler", stats.euler}}}};
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    {
        std::ostringstream cmd;
        for (int i = 1; i < argc; ++i) cmd << (i > 1 ? " " : "") << argv[i];
        g.command = cmd.str();
    }

    CLI::App app{"tbc: complexity certificates for torus bundles over the circle"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g.json_out, "emit a machine-readable JSON report");
    app.add_flag("--quiet", g.quiet, "suppress informational output");
    app.add_option("--tol", g.tol, "solver residual target (default 1e-10)");

    // fib
    long long fib_k = 0;
    auto* cmd_fib = app.add_subcommand("fib", "print the k-th Fibonacci number");
    cmd_fib->add_option("k", fib_k, "index, >= 1")->required();

    // torsion
    long long tor_n = 0;
    auto* cmd_tor = app.add_subcommand("torsion", "print |Tor H1| of the n-th torus bundle");
    cmd_tor->add_option("n", tor_n, "family index, >= 1")->required();

    // bound mn / bound lens
    auto* cmd_bound = app.add_subcommand("bound", "complexity lower bounds");
    cmd_bound->require_subcommand(1);
    long long bmn_n = 0;
    auto* cmd_bmn = cmd_bound->add_subcommand("mn", "bounds for the torus bundle M_n");
    cmd_bmn->add_option("n", bmn_n, "family index, >= 1")->required();
    std::string blens_p, blens_q;
    auto* cmd_blens = cmd_bound->add_subcommand("lens", "bound for the lens space L(p,q)");
    cmd_blens->add_option("p", blens_p, "order of the fundamental group, >= 2")->required();
    cmd_blens->add_option("q", blens_q, "coprime parameter")->required();

    // build
    std::string build_family;
    int build_cover = 1;
    std::string build_out;
    auto* cmd_build = app.add_subcommand("build", "build a triangulation and print or save it");
    cmd_build->add_option("family", build_family, "n8 | sibling")->required();
    cmd_build->add_option("--cover", build_cover, "cyclic cover degree (default 1)");
    cmd_build->add_option("-o,--output", build_out, "write to file instead of stdout");

    // stats
    std::string stats_file;
    auto* cmd_stats = app.add_subcommand("stats", "edge classes and dual spine statistics of a file");
    cmd_stats->add_option("file", stats_file, "triangulation file")->required();

    // volume
    std::string vol_file;
    auto* cmd_vol = app.add_subcommand("volume", "solve the gluing equations and print the volume");
    cmd_vol->add_option("file", vol_file, "triangulation file")->required();

    // certify
    std::string cert_family;
    long long cert_n = 0;
    auto* cmd_cert = app.add_subcommand("certify", "two-sided complexity certificate for a cover");
    cmd_cert->add_option("family", cert_family, "n8 | sibling")->required();
    cmd_cert->add_option("n", cert_n, "cover degree, >= 1")->required();

    // table
    std::string table_kind;
    long long table_nmax = 0;
    auto* cmd_table = app.add_subcommand("table", "family table: mn | nn | lens");
    cmd_table->add_option("kind", table_kind, "mn | nn | lens")->required();
    cmd_table->add_option("n_max", table_nmax, "last row index")->required();

    for (CLI::App* sc : {cmd_fib, cmd_tor, cmd_bound, cmd_bmn, cmd_blens, cmd_build, cmd_stats, cmd_vol,
                         cmd_cert, cmd_table})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (*cmd_fib) {
            const tbc::BigInt v = tbc::fibonacci(fib_k);
            emit(g, json{{"k", fib_k}}, json{{"value", v.str()}}, now_ms_since(t0), v.str() + "\n");
        } else if (*cmd_tor) {
            const tbc::BigInt v = tbc::torsion_order(tor_n);
            emit(g, json{{"n", tor_n}}, json{{"value", v.str()}}, now_ms_since(t0), v.str() + "\n");
        } else if (*cmd_bmn) {
            const tbc::MnReport r = tbc::report_mn(bmn_n);
            std::ostringstream os;
            os << "M_n report  n = " << r.n << "\n";
            os << "  torsion order: " << r.torsion << "\n";
            os << "  C_n: " << fmt(r.cn) << "\n";
            os << render_certificate(r.certificate);
            emit(g, json{{"n", bmn_n}}, json{{"mn_report", r}}, now_ms_since(t0), os.str());
        } else if (*cmd_blens) {
            const tbc::LensReport r = tbc::report_lens(tbc::parse_bigint(blens_p), tbc::parse_bigint(blens_q));
            std::ostringstream os;
            os << "lens report  L(" << r.p << "," << r.q << ")\n";
            if (r.fibonacci_index)
                os << "  consecutive Fibonacci pair, index " << *r.fibonacci_index << "\n";
            os << render_certificate(r.certificate);
            emit(g, json{{"p", blens_p}, {"q", blens_q}}, json{{"lens_report", r}}, now_ms_since(t0), os.str());
        } else if (*cmd_build) {
            const tbc::BundleVariant variant = parse_variant(build_family);
            if (build_cover < 1) throw tbc::DomainError("cover degree must be >= 1");
            const tbc::IdealTriangulation base = variant == tbc::BundleVariant::FigureEight
                                                     ? tbc::build_figure_eight()
                                                     : tbc::build_sibling();
            tbc::IdealTriangulation out = base;
            if (build_cover > 1) {
                const tbc::TransferCocycle w = tbc::transfer_cocycle(base);
                out = tbc::cyclic_cover(base, w, build_cover);
            }
            const std::string text = tbc::serialize_triangulation(out);
            if (!build_out.empty()) {
                write_file(build_out, text);
                emit(g, json{{"family", build_family}, {"cover", build_cover}, {"output", build_out}},
                     json{{"tetrahedra", out.tet_count()}, {"file", build_out}}, now_ms_since(t0),
                     g.quiet ? "" : ("wrote " + std::to_string(out.tet_count()) + " tetrahedra to " + build_out + "\n"));
            } else {
                emit(g, json{{"family", build_family}, {"cover", build_cover}},
                     json{{"tetrahedra", out.tet_count()}, {"content", text}}, now_ms_since(t0), text);
            }
        } else if (*cmd_stats) {
            const tbc::TriangulationFile f = tbc::parse_triangulation(read_file(stats_file));
            emit(g, json{{"file", stats_file}}, stats_json(f.triangulation), now_ms_since(t0),
                 stats_human(f.triangulation));
        } else if (*cmd_vol) {
            const tbc::TriangulationFile f = tbc::parse_triangulation(read_file(vol_file));
            const tbc::GluingEquationSystem sys = tbc::extract_gluing_system(f.triangulation);
            tbc::SolveOptions opts;
            opts.tol = g.tol;
            const tbc::SolveResult sol = tbc::solve_gluing(sys, opts);
            const tbc::VolumeResult vol = tbc::volume(sol.shapes, sol.residual);
            std::ostringstream os;
            os << "tetrahedra: " << f.triangulation.tet_count() << "\n";
            os << "volume: " << fmt(tbc::round12(vol.volume)) << " +/- " << fmt(tbc::round12(vol.error)) << "\n";
            os << "residual: " << fmt(tbc::round12(sol.residual)) << "  (target " << fmt(g.tol) << ", "
               << sol.iterations << " iterations)\n";
            for (std::size_t i = 0; i < sol.shapes.shapes.size(); ++i) {
                const auto z = sol.shapes.shapes[i];
                os << "  shape " << i << ": " << fmt(tbc::round12(z.real())) << " + " << fmt(tbc::round12(z.imag()))
                   << "i  (volume " << fmt(tbc::round12(vol.per_tet[i])) << ")\n";
            }
            json shapes = json::array();
            for (const auto& z : sol.shapes.shapes)
                shapes.push_back(json{{"re", tbc::round12(z.real())}, {"im", tbc::round12(z.imag())}});
            emit(g, json{{"file", vol_file}, {"tol", g.tol}},
                 json{{"volume", tbc::round12(vol.volume)},
                      {"error", tbc::round12(vol.error)},
                      {"residual", tbc::round12(sol.residual)},
                      {"iterations", sol.iterations},
                      {"shapes", shapes}},
                 now_ms_since(t0), os.str());
        } else if (*cmd_cert) {
            const tbc::ComplexityCertificate c =
                tbc::certify_punctured_bundle(cert_n, parse_variant(cert_family), g.tol);
            emit(g, json{{"family", cert_family}, {"n", cert_n}, {"tol", g.tol}}, json{{"certificate", c}},
                 now_ms_since(t0), render_certificate(c));
            if (c.solver_error) return 3;
        } else if (*cmd_table) {
            std::ostringstream os;
            json rows = json::array();
            if (table_kind == "mn") {
                if (table_nmax < 1 || table_nmax > 200)
                    throw tbc::DomainError("table mn supports 1 <= n_max <= 200");
                os << "  n  |Tor H1|                          C_n       lower  upper  status\n";
                for (long long n = 1; n <= table_nmax; ++n) {
                    const tbc::MnReport r = tbc::report_mn(n);
                    std::string tor = r.torsion.size() > 30 ? ("(" + std::to_string(r.torsion.size()) + " digits)")
                                                            : r.torsion;
                    char line[160];
                    std::snprintf(line, sizeof line, "%3lld  %-32s  %-8.6g  %5lld  %5lld  %s\n", n, tor.c_str(),
                                  r.cn, r.certificate.best_lower(), r.certificate.upper->value,
                                  r.certificate.status.c_str());
                    os << line;
                    rows.push_back(json(r));
                }
            } else if (table_kind == "nn") {
                if (table_nmax < 1 || table_nmax > 50)
                    throw tbc::DomainError("table nn supports 1 <= n_max <= 50 (each row solves the gluing equations)");
                os << "  n  tets  volume             lower  upper  status\n";
                for (long long n = 1; n <= table_nmax; ++n) {
                    const tbc::ComplexityCertificate c =
                        tbc::certify_punctured_bundle(n, tbc::BundleVariant::FigureEight, g.tol);
                    char line[160];
                    std::snprintf(line, sizeof line, "%3lld  %4lld  %-17.12g  %5lld  %5lld  %s\n", n, 2 * n,
                                  c.volume_evidence ? c.volume_evidence->volume : 0.0, c.best_lower(),
                                  c.upper->value, c.status.c_str());
                    os << line;
                    rows.push_back(json{{"certificate", c}});
                }
            } else if (table_kind == "lens") {
                if (table_nmax < 5 || table_nmax > 200)
                    throw tbc::DomainError("table lens supports 5 <= n_max <= 200");
                os << "  m  p = fib(m)                     lower  upper  status\n";
                for (long long m = 5; m <= table_nmax; ++m) {
                    const tbc::LensReport r = tbc::report_lens(tbc::fibonacci(m), tbc::fibonacci(m - 1));
                    std::string p = r.p.size() > 30 ? ("(" + std::to_string(r.p.size()) + " digits)") : r.p;
                    char line[160];
                    std::snprintf(line, sizeof line, "%3lld  %-30s  %5lld  %5lld  %s\n", m, p.c_str(),
                                  r.certificate.best_lower(), r.certificate.upper->value,
                                  r.certificate.status.c_str());
                    os << line;
                    rows.push_back(json(r));
                }
            } else {
                throw tbc::DomainError("unknown table kind '" + table_kind + "' (expected mn, nn or lens)");
            }
            emit(g, json{{"kind", table_kind}, {"n_max", table_nmax}}, json{{"rows", rows}}, now_ms_since(t0),
                 os.str());
        }
    } catch (const tbc::SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const tbc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tbc::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tbc::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
