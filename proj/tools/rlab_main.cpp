// rlab command-line tool: spectra, girths, cover-tree balls, degree-matrix
// checks, realizations, projections, bounds, and certification reports.
// JSON on stdout is the contract; --table is cosmetic. Exit codes:
// 0 computed, 1 hypothesis violation, 2 input error, 3 indeterminate.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "rlab/bounds.hpp"
#include "rlab/certify.hpp"
#include "rlab/errors.hpp"
#include "rlab/io.hpp"
#include "rlab/project.hpp"
#include "rlab/realize.hpp"
#include "rlab/spectral.hpp"
#include "rlab/treeball.hpp"

using json = nlohmann::ordered_json;
using namespace rlab;

namespace {

struct Options {
    bool table = false;
    int jobs = 1;
};

json input_record(const std::string& path) {
    return json{{"path", path}, {"digest", file_digest(path)}};
}

json spectrum_json(const Spectrum& s) {
    return json{{"method", s.method}, {"eigenvalues", s.values}, {"residual", s.residual}};
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    json out{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
    if (g.has_labels()) out["labels"] = g.labels();
    return out;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "certified-yes";
        case Verdict::No: return "certified-no";
        default: return "indeterminate";
    }
}

void print_table(const json& j, std::ostream& out, const std::string& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (v.is_object()) {
            print_table(v, out, prefix + it.key() + ".");
        } else if (v.is_array() && !v.empty() && v.front().is_primitive()) {
            out << prefix << it.key() << ":";
            for (const auto& e : v) out << ' ' << e.dump();
            out << '\n';
        } else {
            out << prefix << it.key() << ": " << v.dump() << '\n';
        }
    }
}

void emit(const json& j, const Options& opt) {
    if (opt.table) {
        if (j.is_array())
            for (const auto& item : j) {
                print_table(item, std::cout);
                std::cout << '\n';
            }
        else
            print_table(j, std::cout);
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

// Run one report per input file, at most `jobs` in flight, output in
// input order regardless of completion order.
json for_files(const std::vector<std::string>& paths, int jobs,
               const std::function<json(const std::string&)>& fn) {
    if (paths.size() == 1) return fn(paths.front());
    std::vector<json> results(paths.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < paths.size(); ++i) results[i] = fn(paths[i]);
    } else {
        for (std::size_t base = 0; base < paths.size(); base += jobs) {
            std::vector<std::future<json>> batch;
            for (std::size_t i = base; i < std::min(paths.size(), base + jobs); ++i)
                batch.push_back(std::async(std::launch::async, fn, paths[i]));
            for (std::size_t i = 0; i < batch.size(); ++i) results[base + i] = batch[i].get();
        }
    }
    return json(results);
}

std::vector<VertexSet> default_subsets(const Graph& g, int classes) {
    VertexSet all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return std::vector<VertexSet>(classes, all);
}

json count_report_json(const CountReport& r, const Graph& g) {
    return json{{"threshold", r.threshold},
                {"count", r.count},
                {"required", r.required},
                {"n", g.vertex_count()},
                {"constants",
                 {{"r", r.constant.r},
                  {"c", r.constant.c},
                  {"c_display", r.constant.c_display},
                  {"log_B", r.constant.log_b}}},
                {"pass", r.pass}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral graph laboratory for degree-matrix certification"};
    app.require_subcommand(1);
    Options opt;
    bool json_flag = false;
    app.add_flag("--json", json_flag, "JSON output (default)");
    app.add_flag("--table", opt.table, "aligned table output instead of JSON");
    app.add_option("--jobs", opt.jobs, "parallelism across input files")->default_val(1);

    int exit_code = 0;

    // spectrum
    std::vector<std::string> spectrum_files;
    auto* cmd_spectrum = app.add_subcommand("spectrum", "full adjacency spectrum");
    cmd_spectrum->add_option("graph", spectrum_files, "graph file(s)")->required();
    cmd_spectrum->callback([&] {
        emit(for_files(spectrum_files, opt.jobs,
                       [](const std::string& p) {
                           json j{{"input", input_record(p)}};
                           j.update(spectrum_json(eigen_full(load_graph(p))));
                           return j;
                       }),
             opt);
    });

    // rho
    std::vector<std::string> rho_files;
    auto* cmd_rho = app.add_subcommand("rho", "spectral radius (sparse power iteration)");
    cmd_rho->add_option("graph", rho_files, "graph file(s)")->required();
    cmd_rho->callback([&] {
        emit(for_files(rho_files, opt.jobs,
                       [](const std::string& p) {
                           return json{{"input", input_record(p)},
                                       {"method", "power"},
                                       {"rho", spectral_radius(load_graph(p))}};
                       }),
             opt);
    });

    // ball
    std::string ball_file;
    int ball_v = 0, ball_r = 0;
    auto* cmd_ball = app.add_subcommand("ball", "induced ball around a vertex");
    cmd_ball->add_option("graph", ball_file)->required();
    cmd_ball->add_option("-v,--vertex", ball_v, "center vertex")->required();
    cmd_ball->add_option("-r,--radius", ball_r, "radius")->required();
    cmd_ball->callback([&] {
        auto g = load_graph(ball_file);
        auto b = ball(g, ball_v, ball_r);
        json j{{"input", input_record(ball_file)},
               {"center", ball_v},
               {"radius", ball_r},
               {"graph", graph_json(b.graph)},
               {"map", b.map}};
        emit(j, opt);
    });

    // girth
    std::string girth_file;
    bool girth_odd = false, girth_universal = false;
    int girth_cap = 64;
    auto* cmd_girth = app.add_subcommand("girth", "girth and its variants");
    cmd_girth->add_option("graph", girth_file)->required();
    cmd_girth->add_flag("--odd", girth_odd, "odd girth");
    cmd_girth->add_flag("--universal", girth_universal, "universal girth");
    cmd_girth->add_option("--cap", girth_cap, "length cap for the universal girth");
    cmd_girth->callback([&] {
        auto g = load_graph(girth_file);
        json j{{"input", input_record(girth_file)}};
        if (girth_universal) {
            auto m = universal_girth(g, girth_cap);
            j["kind"] = "universal";
            j["cap"] = girth_cap;
            j["found"] = m.has_value();
            j["value"] = m ? json(*m) : json(nullptr);
        } else if (girth_odd) {
            auto og = odd_girth(g);
            j["kind"] = "odd";
            j["bipartite"] = !og.length.has_value();
            j["value"] = og.length ? json(*og.length) : json(nullptr);
            if (!og.length) j["two_coloring"] = og.two_coloring;
        } else {
            auto c = girth(g);
            j["kind"] = "girth";
            j["value"] = c ? json(*c) : json(nullptr);
        }
        emit(j, opt);
    });

    // degmat validate|sizes|spectrum
    auto* cmd_degmat = app.add_subcommand("degmat", "degree-matrix checks");
    cmd_degmat->require_subcommand(1);
    std::string degmat_file;
    for (const std::string action : {"validate", "sizes", "spectrum"}) {
        auto* sub = cmd_degmat->add_subcommand(action);
        sub->add_option("matrix", degmat_file, "degree matrix file")->required();
        sub->callback([&, action] {
            auto d = load_degmat(degmat_file);
            json j{{"input", input_record(degmat_file)}, {"order", d.order()}};
            json rows = json::array();
            for (int i = 0; i < d.order(); ++i) {
                json row = json::array();
                for (int jj = 0; jj < d.order(); ++jj) row.push_back(d.at(i, jj));
                rows.push_back(row);
            }
            j["matrix"] = rows;
            if (action == "validate") {
                auto v = validate(d);
                j["valid"] = v.valid;
                if (!v.valid) {
                    j["reason"] = v.reason;
                    j["witness"] = json::array({v.witness.first + 1, v.witness.second + 1});
                }
            } else if (action == "sizes") {
                auto s = class_sizes(d);
                j["sizes"] = s.counts;
                j["degrees"] = degrees(d);
            } else {
                j.update(spectrum_json(degree_matrix_spectrum(d)));
            }
            emit(j, opt);
        });
    }

    // treeball
    std::string treeball_file, treeball_export;
    int treeball_class = 1, treeball_r = 0;
    bool treeball_quotient = false;
    auto* cmd_treeball = app.add_subcommand("treeball", "cover-tree ball of a degree matrix");
    cmd_treeball->add_option("matrix", treeball_file)->required();
    cmd_treeball->add_option("--class", treeball_class, "root class (1-based)")->default_val(1);
    cmd_treeball->add_option("-r,--radius", treeball_r)->required();
    cmd_treeball->add_flag("--quotient", treeball_quotient, "emit the equitable quotient instead");
    cmd_treeball->add_option("--export", treeball_export,
                             "write BASE.graph (text format) and BASE.labels (vertex class depth)");
    cmd_treeball->callback([&] {
        auto d = load_degmat(treeball_file);
        json j{{"input", input_record(treeball_file)},
               {"class", treeball_class},
               {"radius", treeball_r}};
        if (treeball_quotient) {
            auto q = quotient(d, treeball_class - 1, treeball_r);
            j["order"] = q.order();
            j["refined"] = q.refined;
            j["rho"] = quotient_rho(q);
            if (q.order() <= 64) {
                auto dense = q.dense();
                json rows = json::array();
                for (int i = 0; i < q.order(); ++i) {
                    json row = json::array();
                    for (int jj = 0; jj < q.order(); ++jj)
                        row.push_back(dense[static_cast<std::size_t>(i) * q.order() + jj]);
                    rows.push_back(row);
                }
                j["matrix"] = rows;
            }
        } else {
            auto b = tree_ball(d, treeball_class - 1, treeball_r);
            j["graph"] = graph_json(b.graph);
            j["depth"] = b.depth;
            j["rho"] = tree_graph_rho(b.graph);
            if (!treeball_export.empty()) {
                std::ofstream graph_out(treeball_export + ".graph");
                write_graph(graph_out, b.graph);
                std::ofstream label_out(treeball_export + ".labels");
                write_ball_labels(label_out, b);
                j["exported"] = json::array({treeball_export + ".graph",
                                             treeball_export + ".labels"});
            }
        }
        emit(j, opt);
    });

    // xdg
    int xdg_d = 0, xdg_g = 0, xdg_r = 0;
    std::string xdg_export;
    auto* cmd_xdg = app.add_subcommand("xdg", "ball of the cycle-expanded regular graph");
    cmd_xdg->add_option("-d,--degree", xdg_d)->required();
    cmd_xdg->add_option("-g,--girth", xdg_g)->required();
    cmd_xdg->add_option("-r,--radius", xdg_r)->required();
    cmd_xdg->add_option("--export", xdg_export, "write BASE.graph and BASE.labels");
    cmd_xdg->callback([&] {
        auto b = cycle_expanded_ball(xdg_d, xdg_g, xdg_r);
        json j{{"d", xdg_d},
               {"g", xdg_g},
               {"radius", xdg_r},
               {"graph", graph_json(b.graph)},
               {"depth", b.depth},
               {"rho", spectral_radius(b.graph)}};
        if (!xdg_export.empty()) {
            std::ofstream graph_out(xdg_export + ".graph");
            write_graph(graph_out, b.graph);
            std::ofstream label_out(xdg_export + ".labels");
            write_ball_labels(label_out, b);
            j["exported"] = json::array({xdg_export + ".graph", xdg_export + ".labels"});
        }
        emit(j, opt);
    });

    // realize
    std::string realize_file;
    std::int64_t realize_mult = 1;
    auto* cmd_realize = app.add_subcommand("realize", "finite graph with the given degree matrix");
    cmd_realize->add_option("matrix", realize_file)->required();
    cmd_realize->add_option("--mult", realize_mult, "minimum class-size multiplier")->default_val(1);
    cmd_realize->callback([&] {
        auto d = load_degmat(realize_file);
        auto r = realize(d, realize_mult);
        json parts = json::array();
        for (const auto& cls : r.partition) parts.push_back(cls);
        json j{{"input", input_record(realize_file)},
               {"multiplier", r.multiplier},
               {"scaled", r.scaled},
               {"graph", graph_json(r.graph)},
               {"partition", parts}};
        emit(j, opt);
    });

    // project
    std::string project_graph, project_degmat, project_subsets, project_out;
    int project_start = 0, project_class = 1, project_r = 0;
    bool project_backtrack = false;
    auto* cmd_project = app.add_subcommand("project", "locally 1-1 cover-ball homomorphism");
    cmd_project->add_option("graph", project_graph)->required();
    cmd_project->add_option("matrix", project_degmat)->required();
    cmd_project->add_option("--start", project_start, "host start vertex")->required();
    cmd_project->add_option("--class", project_class, "root class (1-based)")->default_val(1);
    cmd_project->add_option("-r,--radius", project_r)->required();
    cmd_project->add_flag("--backtrack", project_backtrack, "complete search instead of greedy");
    cmd_project->add_option("--subsets", project_subsets, "subset file (default: every class = V)");
    cmd_project->add_option("--out", project_out,
                            "write the mapping as \"tree_vertex host_vertex\" lines");
    cmd_project->callback([&] {
        auto g = load_graph(project_graph);
        auto d = load_degmat(project_degmat);
        auto subsets = project_subsets.empty() ? default_subsets(g, d.order())
                                               : load_partition(project_subsets, d.order());
        auto pr = subuniversal_project(g, d, subsets, project_start, project_class - 1,
                                       project_r, project_backtrack);
        const char* status = pr.status == ProjectStatus::Success    ? "success"
                             : pr.status == ProjectStatus::Stuck    ? "stuck"
                             : pr.status == ProjectStatus::Refuted ? "refuted"
                                                                    : "budget";
        json j{{"input", json::array({input_record(project_graph), input_record(project_degmat)})},
               {"start", project_start},
               {"class", project_class},
               {"radius", project_r},
               {"mode", project_backtrack ? "backtracking" : "greedy"},
               {"status", status},
               {"nodes_explored", pr.nodes_explored},
               {"ball_vertices", pr.ball.graph.vertex_count()}};
        if (pr.status == ProjectStatus::Success) {
            json mapping = json::array();
            for (std::size_t i = 0; i < pr.map.size(); ++i)
                mapping.push_back(json::array({static_cast<int>(i), pr.map[i]}));
            j["mapping"] = mapping;
            if (!project_out.empty()) {
                std::ofstream out(project_out);
                for (std::size_t i = 0; i < pr.map.size(); ++i)
                    out << i << ' ' << pr.map[i] << '\n';
                j["exported"] = project_out;
            }
        }
        if (pr.status == ProjectStatus::Stuck) j["witness"] = pr.witness;
        emit(j, opt);
        if (pr.status == ProjectStatus::Budget) exit_code = 3;
    });

    // rho-cover
    std::string cover_file;
    double cover_tol = 1e-9;
    int cover_rmax = 10000, cover_class = 1;
    auto* cmd_cover = app.add_subcommand("rho-cover", "cover-tree spectral radius bracket");
    cmd_cover->add_option("matrix", cover_file)->required();
    cmd_cover->add_option("--tol", cover_tol)->default_val(1e-9);
    cmd_cover->add_option("--rmax", cover_rmax)->default_val(10000);
    cmd_cover->add_option("--class", cover_class, "root class (1-based)")->default_val(1);
    cmd_cover->callback([&] {
        auto d = load_degmat(cover_file);
        auto br = rho_universal_cover(d, cover_class - 1, cover_tol, cover_rmax);
        json samples = json::array();
        for (auto [r, rho] : br.samples) samples.push_back(json::array({r, rho}));
        json j{{"input", input_record(cover_file)},
               {"lower", br.lower},
               {"upper", br.upper},
               {"radius_reached", br.radius_reached},
               {"converged", br.converged},
               {"samples", samples}};
        if (br.rate_fitted) j["rate_exponent"] = br.rate_exponent;
        auto cf = closed_form_rho(d);
        j["closed_form"] = cf ? json(*cf) : json(nullptr);
        emit(j, opt);
    });

    // serre
    std::string serre_graph, serre_degmat, serre_subsets;
    int serre_d = 0, serre_delta = 0;
    double serre_eps = 0;
    auto* cmd_serre = app.add_subcommand("serre", "eigenvalue-count lower bound check");
    cmd_serre->add_option("graph", serre_graph)->required();
    cmd_serre->add_option("-d,--degree", serre_d, "minimum degree (regular-style check)");
    cmd_serre->add_option("--degmat", serre_degmat, "degree matrix file");
    cmd_serre->add_option("--subsets", serre_subsets, "subset file for the degmat mode");
    cmd_serre->add_option("--delta-max", serre_delta, "maximum degree bound")->required();
    cmd_serre->add_option("--eps", serre_eps)->required();
    cmd_serre->callback([&] {
        auto g = load_graph(serre_graph);
        json j{{"input", input_record(serre_graph)}};
        CountReport rep;
        if (!serre_degmat.empty()) {
            auto d = load_degmat(serre_degmat);
            auto subsets = serre_subsets.empty() ? default_subsets(g, d.order())
                                                 : load_partition(serre_subsets, d.order());
            rep = serre_verify_degmat(g, subsets, d, serre_delta, serre_eps);
        } else {
            if (serre_d < 2) throw InputError("serre needs -d or --degmat");
            rep = serre_verify(g, serre_d, serre_delta, serre_eps);
        }
        j.update(count_report_json(rep, g));
        emit(j, opt);
    });

    // paschke
    int paschke_d = 0, paschke_g = 0;
    bool paschke_sweep = false, paschke_csv = false;
    auto* cmd_paschke = app.add_subcommand("paschke", "cycle-expanded spectral radius formula");
    cmd_paschke->add_option("-d,--degree", paschke_d)->required();
    cmd_paschke->add_option("-g,--girth", paschke_g)->required();
    cmd_paschke->add_flag("--sweep", paschke_sweep, "rows for every girth 3..g");
    cmd_paschke->add_flag("--csv", paschke_csv, "CSV rows instead of JSON");
    cmd_paschke->callback([&] {
        std::vector<int> gs;
        if (paschke_sweep)
            for (int gg = 3; gg <= paschke_g; ++gg) gs.push_back(gg);
        else
            gs.push_back(paschke_g);
        if (paschke_csv) {
            std::cout << "d,g,s_star,rho,h\n";
            for (int gg : gs) {
                auto r = paschke(paschke_d, gg);
                std::printf("%d,%d,%.12g,%.12g,%.12g\n", paschke_d, gg, r.s_star, r.rho, r.h);
            }
            return;
        }
        json rows = json::array();
        for (int gg : gs) {
            auto r = paschke(paschke_d, gg);
            rows.push_back(json{{"d", paschke_d},
                                {"g", gg},
                                {"s_star", r.s_star},
                                {"rho", r.rho},
                                {"h", r.h}});
        }
        emit(paschke_sweep ? json(rows) : rows.front(), opt);
    });

    // certify
    std::vector<std::string> certify_files;
    std::string certify_degmat, certify_partition, certify_mode = "equitable";
    auto* cmd_certify = app.add_subcommand("certify", "Ramanujan-style certification");
    cmd_certify->add_option("graph", certify_files)->required();
    cmd_certify->add_option("--degmat", certify_degmat, "degree matrix file");
    cmd_certify->add_option("--partition", certify_partition, "partition/subset file");
    cmd_certify->add_option("--mode", certify_mode, "equitable or subdegree")
        ->check(CLI::IsMember({"equitable", "subdegree"}));
    cmd_certify->callback([&] {
        auto one = [&](const std::string& p) {
            auto g = load_graph(p);
            RamanujanReport rep;
            json j{{"input", input_record(p)}};
            if (certify_degmat.empty()) {
                rep = ramanujan_classic(g);
                j["mode"] = "regular";
            } else {
                auto d = load_degmat(certify_degmat);
                auto sets = certify_partition.empty()
                                ? default_subsets(g, d.order())
                                : load_partition(certify_partition, d.order());
                rep = ramanujan_degree_matrix(g, sets, d, certify_mode == "equitable");
                j["mode"] = certify_mode;
                j["d_spectrum"] = rep.d_spectrum;
            }
            j["verdict"] = verdict_name(rep.verdict);
            j["threshold"] = json::array({rep.threshold_lo, rep.threshold_hi});
            j["k"] = rep.k;
            j["k_determined"] = rep.k_determined;
            if (!rep.k_determined) j["ambiguous_index"] = rep.ambiguous_index;
            j["compared_eigenvalue"] = rep.compared_eigenvalue;
            j["tie_tol"] = rep.tie_tol;
            return j;
        };
        json out = for_files(certify_files, opt.jobs, one);
        emit(out, opt);
        auto is_indet = [](const json& j) { return j["verdict"] == "indeterminate"; };
        if (out.is_array() ? std::any_of(out.begin(), out.end(), is_indet) : is_indet(out))
            exit_code = 3;
    });

    // girth-boost
    std::string boost_graph;
    int boost_d = 0, boost_delta = 0, boost_cap = 24;
    auto* cmd_boost = app.add_subcommand("girth-boost",
                                         "count bound above the regular-tree value "
                                         "under bounded universal girth");
    cmd_boost->add_option("graph", boost_graph)->required();
    cmd_boost->add_option("-d,--degree", boost_d, "minimum degree")->required();
    cmd_boost->add_option("--delta-max", boost_delta)->required();
    cmd_boost->add_option("--cap", boost_cap, "universal girth search cap");
    cmd_boost->callback([&] {
        auto g = load_graph(boost_graph);
        auto rep = girth_boost_verify(g, boost_d, boost_delta, boost_cap);
        json j{{"input", input_record(boost_graph)},
               {"universal_girth", rep.universal_girth},
               {"radius", rep.radius},
               {"ball_rho", rep.ball_rho},
               {"delta", rep.delta},
               {"limit_rho", rep.limit_rho},
               {"conclusive", rep.conclusive}};
        if (rep.conclusive) {
            j["threshold"] = rep.threshold;
            j["count"] = rep.count;
            j["required"] = rep.required;
            j["pass"] = rep.pass;
        }
        emit(j, opt);
        if (!rep.conclusive) exit_code = 3;
    });

    // negative
    std::string negative_graph, negative_degmat, negative_subsets;
    int negative_d = 0, negative_delta = 0;
    double negative_eps = 0.5;
    auto* cmd_negative = app.add_subcommand("negative", "negative-side eigenvalue counts");
    cmd_negative->add_option("graph", negative_graph)->required();
    cmd_negative->add_option("-d,--degree", negative_d, "minimum degree");
    cmd_negative->add_option("--degmat", negative_degmat, "degree matrix file");
    cmd_negative->add_option("--subsets", negative_subsets, "subset file for the degmat mode");
    cmd_negative->add_option("--delta-max", negative_delta)->required();
    cmd_negative->add_option("--eps", negative_eps, "epsilon for the degmat mode");
    cmd_negative->callback([&] {
        auto g = load_graph(negative_graph);
        NegativeSideReport rep;
        json j{{"input", input_record(negative_graph)}};
        if (!negative_degmat.empty()) {
            auto d = load_degmat(negative_degmat);
            auto subsets = negative_subsets.empty() ? default_subsets(g, d.order())
                                                    : load_partition(negative_subsets, d.order());
            rep = negative_side_verify_degmat(g, subsets, d, negative_delta, negative_eps);
            j["mode"] = "degmat";
        } else {
            if (negative_d < 2) throw InputError("negative needs -d or --degmat");
            rep = negative_side_verify(g, negative_d, negative_delta);
            j["mode"] = "regular";
        }
        j["applicable"] = rep.applicable;
        j["bipartite"] = rep.bipartite;
        if (rep.bipartite) j["symmetry_defect"] = rep.symmetry_defect;
        j["odd_girth"] = rep.odd_girth == 0 ? json(nullptr) : json(rep.odd_girth);
        if (rep.applicable) {
            j["radius"] = rep.radius;
            j["balls_bipartite"] = rep.balls_bipartite;
            j["threshold"] = rep.threshold;
            j["count"] = rep.count;
            j["mirrored_count"] = rep.mirrored_count;
            j["required"] = rep.required;
            j["constants"] = {{"r", rep.constant.r}, {"c", rep.constant.c}};
        }
        j["pass"] = rep.pass;
        emit(j, opt);
        if (!rep.applicable && !rep.bipartite) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << '\n';
        return 1;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const InstanceTooLarge& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
