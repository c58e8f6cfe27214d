// treepack: spanning-tree packing, graph spectra and extremal-family toolkit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stp/apps.hpp"
#include "stp/extremal.hpp"
#include "stp/graph6.hpp"
#include "stp/isomorphism.hpp"
#include "stp/mincut.hpp"
#include "stp/packing.hpp"
#include "stp/spectral.hpp"
#include "stp/treecount.hpp"
#include "stp/verify.hpp"

using json = nlohmann::json;

namespace {

std::string fmt10(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

// Input is a path, "-" for stdin, or an inline graph6 line.
std::string slurp_input(const std::string& input) {
    if (input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(input);
    if (f) {
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    return input + "\n";  // inline graph6
}

std::vector<stp::Graph> parse_graphs(const std::string& text, const std::string& format) {
    std::vector<stp::Graph> out;
    if (text.empty()) throw stp::Error("no input");
    bool edge_list = format == "edge-list" ||
                     (format == "auto" && (std::isdigit(static_cast<unsigned char>(text[0]))));
    if (edge_list) {
        out.push_back(stp::parse_edge_list(text));
        return out;
    }
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(stp::parse_graph6(line));
    }
    if (out.empty()) throw stp::Error("no graphs in input");
    return out;
}

std::string edge_list_inline(const stp::EdgeList& edges) {
    std::string s;
    for (auto [u, v] : edges) {
        if (!s.empty()) s += ' ';
        s += std::to_string(u) + "-" + std::to_string(v);
    }
    return s;
}

std::string partition_inline(const stp::VertexPartition& p) {
    std::string s;
    for (const auto& block : p.blocks) {
        s += '{';
        for (size_t i = 0; i < block.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(block[i]);
        }
        s += '}';
    }
    return s;
}

std::vector<int> parse_range(const std::string& spec) {
    // "11:16" or "11,12,13" or "13"
    std::vector<int> out;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        int lo = std::stoi(spec.substr(0, colon));
        int hi = std::stoi(spec.substr(colon + 1));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

int cmd_analyze(const std::string& input, const std::string& format, bool csv, bool as_json) {
    auto graphs = parse_graphs(slurp_input(input), format);
    if (csv) std::cout << "n,m,rho,lambda2,mu1,residual\n";
    for (const auto& g : graphs) {
        auto prof = stp::degree_profile(g);
        auto rep = stp::spectral_report(g);
        bool connected = stp::is_connected(g);
        auto trees = stp::spanning_tree_count(g);
        int kappa = g.order() >= 2 ? stp::edge_connectivity(g).first : 0;
        if (csv) {
            std::cout << g.order() << ',' << g.size() << ',' << fmt10(rep.rho) << ','
                      << fmt10(g.order() >= 2 ? rep.lambda2 : 0.0) << ','
                      << fmt10(rep.laplacian_eigs[0]) << ',' << fmt10(rep.residual) << '\n';
        } else if (as_json) {
            json j{{"n", g.order()},
                   {"m", g.size()},
                   {"delta", prof.delta},
                   {"max_degree", prof.max_degree},
                   {"connected", connected},
                   {"edge_connectivity", kappa},
                   {"rho", rep.rho},
                   {"lambda2", rep.lambda2},
                   {"mu1", rep.laplacian_eigs[0]},
                   {"residual", rep.residual},
                   {"spanning_trees", trees.count.str()},
                   {"graph6", stp::write_graph6(g)}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "graph " << stp::write_graph6(g) << ": n=" << g.order()
                      << " m=" << g.size() << " delta=" << prof.delta
                      << " Delta=" << prof.max_degree << " connected=" << connected
                      << " kappa=" << kappa << '\n';
            std::cout << "  rho=" << fmt10(rep.rho);
            if (g.order() >= 2) std::cout << " lambda2=" << fmt10(rep.lambda2);
            std::cout << " mu1=" << fmt10(rep.laplacian_eigs[0])
                      << " residual=" << fmt10(rep.residual) << '\n';
            std::cout << "  spanning_trees=" << trees.count.str() << '\n';
        }
    }
    return 0;
}

int cmd_pack(const std::string& input, const std::string& format, int k, bool arb, bool as_json) {
    auto graphs = parse_graphs(slurp_input(input), format);
    for (const auto& g : graphs) {
        if (arb) {
            auto cover = stp::arboricity(g);
            if (as_json) {
                json j{{"arboricity", cover.arboricity}};
                auto& fs = j["forests"] = json::array();
                for (const auto& f : cover.forests) {
                    json jf = json::array();
                    for (auto [u, v] : f) jf.push_back({u, v});
                    fs.push_back(jf);
                }
                if (cover.witness) {
                    j["density_witness"] = {{"vertices", cover.witness->vertex_set},
                                            {"edges", cover.witness->edge_count},
                                            {"k", cover.witness->k}};
                }
                std::cout << j.dump() << '\n';
            } else {
                std::cout << "arboricity=" << cover.arboricity << '\n';
                for (const auto& f : cover.forests)
                    std::cout << "forest: " << edge_list_inline(f) << '\n';
                if (cover.witness)
                    std::cout << "density witness (k=" << cover.witness->k
                              << "): " << cover.witness->edge_count << " edges on "
                              << cover.witness->vertex_set.size() << " vertices\n";
            }
            continue;
        }
        if (k > 0) {
            auto dec = stp::has_k_trees(g, k);
            if (as_json) {
                json j{{"k", k}, {"yes", dec.yes}};
                std::cout << j.dump() << '\n';
            } else {
                std::cout << (dec.yes ? "YES" : "NO") << " k=" << k << '\n';
                if (dec.yes)
                    for (const auto& t : dec.trees)
                        std::cout << "tree: " << edge_list_inline(t) << '\n';
                else
                    std::cout << "partition: " << partition_inline(*dec.witness) << '\n';
            }
            continue;
        }
        auto cert = stp::stp_number(g);
        auto flow = stp::is_connected(g) ? stp::flow_implications(g) : stp::FlowReport{};
        if (as_json) {
            json j{{"tau", cert.tau}};
            auto& ts = j["trees"] = json::array();
            for (const auto& t : cert.trees) {
                json jt = json::array();
                for (auto [u, v] : t) jt.push_back({u, v});
                ts.push_back(jt);
            }
            if (flow.has_bound) j["flow_index_upper"] = flow.phi_upper;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "tau=" << cert.tau << '\n';
            for (const auto& t : cert.trees)
                std::cout << "tree: " << edge_list_inline(t) << '\n';
            if (cert.violating_partition)
                std::cout << "partition (k=" << cert.tau + 1
                          << "): " << partition_inline(*cert.violating_partition) << '\n';
            if (flow.has_bound)
                std::cout << "flow: phi" << (flow.phi_upper == "3" ? "<=3" : "<4") << " ("
                          << flow.basis << ")\n";
        }
    }
    return 0;
}

void emit_graph(const stp::Graph& g, const std::string& format, std::ostream& out) {
    if (format == "edge-list")
        out << stp::write_edge_list(g);
    else
        out << stp::write_graph6(g) << '\n';
}

int cmd_sweep(const std::string& statement, const std::string& n_spec, int delta, int k,
              int kappa, const std::string& mode, int samples, bool seed_set, uint64_t seed,
              int jobs, const std::string& input, const std::string& output) {
    stp::SweepConfig cfg;
    cfg.statement_id = statement;
    cfg.n_values = n_spec.empty() ? std::vector<int>{} : parse_range(n_spec);
    cfg.delta = delta;
    cfg.k_or_kappa = statement == "T1.3" || statement == "L3.2" || statement == "L3.3" ? kappa : k;
    cfg.sample_count = samples;
    cfg.seed = seed;
    cfg.jobs = jobs;
    if (mode == "family")
        cfg.mode = stp::SweepMode::FamilyExhaustive;
    else if (mode == "random")
        cfg.mode = stp::SweepMode::RandomSample;
    else if (mode == "stream")
        cfg.mode = stp::SweepMode::Graph6Stream;
    else
        throw stp::Error("unknown mode '" + mode + "' (family|random|stream)");

    bool randomized = cfg.mode == stp::SweepMode::RandomSample;
    if (randomized && !seed_set)
        throw stp::Error("randomized sweeps require --seed");

    if (cfg.mode == stp::SweepMode::Graph6Stream) {
        std::istringstream in(slurp_input(input));
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
                line.pop_back();
            if (!line.empty() && line[0] != '#') cfg.graph6_lines.push_back(line);
        }
    }

    auto result = stp::run_sweep(cfg);
    if (output.empty()) {
        stp::write_sweep_csv(result, std::cout);
    } else {
        std::ofstream f(output);
        if (!f) throw stp::Error("cannot open output path: " + output);
        stp::write_sweep_csv(result, f);
    }
    return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spanning-tree packing, spectra and extremal families"};
    app.require_subcommand(1);

    std::string input = "-", format = "auto", output;
    bool csv = false, as_json = false;

    auto* analyze = app.add_subcommand("analyze", "degree, connectivity and spectral report");
    analyze->add_option("input", input, "path, '-' for stdin, or inline graph6");
    analyze->add_option("--format", format, "auto|graph6|edge-list")->default_val("auto");
    analyze->add_flag("--csv", csv, "flat spectral record per graph");
    analyze->add_flag("--json", as_json, "JSON record per graph");

    // construct
    std::string kind, links_spec;
    int c_n = 0, c_n1 = 0, c_delta = 0, c_i = 0, c_k = 0;
    bool enumerate = false;
    auto* construct = app.add_subcommand("construct", "build family graphs");
    construct->add_option("kind", kind, "complete|family|book|join-candidate")->required();
    construct->add_option("--n", c_n, "vertex count")->required();
    construct->add_option("--n1", c_n1, "left clique size (family)");
    construct->add_option("--links", links_spec, "cross links a:b,a:b (family)");
    construct->add_option("--delta", c_delta, "minimum degree parameter (book)");
    construct->add_option("--i", c_i, "cross edge count (book/family enumeration)");
    construct->add_option("--k", c_k, "tree count parameter (join-candidate)");
    construct->add_flag("--enumerate", enumerate, "emit every orbit representative (family)");
    construct->add_option("--format", format, "graph6|edge-list")->default_val("graph6");
    construct->add_option("-o,--output", output, "write to path instead of stdout");

    int p_k = 0;
    bool arb = false;
    auto* pack = app.add_subcommand("pack", "spanning tree packing and arboricity");
    pack->add_option("input", input, "path, '-' for stdin, or inline graph6");
    pack->add_option("--format", format, "auto|graph6|edge-list")->default_val("auto");
    pack->add_option("--k", p_k, "decide tau >= k with certificate or witness");
    pack->add_flag("--arboricity", arb, "minimum forest cover instead of tree packing");
    pack->add_flag("--json", as_json, "JSON output");

    std::string statement, n_spec, mode = "family";
    int s_delta = 0, s_k = 0, s_kappa = 0, samples = 0, jobs = 1;
    uint64_t seed = 0;
    auto add_verify_opts = [&](CLI::App* cmd) {
        cmd->add_option("--statement", statement,
                        "T1.1|T1.2|T1.3|L2.3|L2.5|L2.6|L3.2|L3.3")
            ->required();
        cmd->add_option("--n", n_spec, "order grid: '13', '11:16' or '11,13'");
        cmd->add_option("--delta", s_delta, "minimum degree parameter");
        cmd->add_option("--k", s_k, "tree count parameter");
        cmd->add_option("--kappa", s_kappa, "edge connectivity parameter");
        cmd->add_option("--mode", mode, "family|random|stream")->default_val("family");
        cmd->add_option("--samples", samples, "random samples per n");
        cmd->add_option("--input", input, "graph6 lines for --mode stream");
        cmd->add_option("--output", output, "CSV path (stdout otherwise)");
        cmd->add_option("--jobs", jobs, "worker threads")->default_val(1);
    };
    auto* verify = app.add_subcommand("verify", "check one statement instance; CSV out");
    add_verify_opts(verify);
    auto* vseed = verify->add_option("--seed", seed, "RNG seed (required for random modes)");
    auto* sweep = app.add_subcommand("sweep", "parameter sweeps; CSV out");
    add_verify_opts(sweep);
    auto* sseed = sweep->add_option("--seed", seed, "RNG seed (required for random modes)");

    int h_n = 0, h_k = 0;
    long long budget = 0;
    bool exhaustive = false;
    auto* hunt = app.add_subcommand("hunt", "search minimal tau=k graphs for max rho");
    hunt->add_option("--n", h_n, "vertex count")->required();
    hunt->add_option("--k", h_k, "tree count")->required();
    hunt->add_option("--budget", budget, "swap proposals (randomized mode)");
    auto* hseed = hunt->add_option("--seed", seed, "RNG seed (required unless --exhaustive)");
    hunt->add_flag("--exhaustive", exhaustive, "exact scan over all candidate graphs");
    hunt->add_flag("--json", as_json, "JSON report");

    std::string rmode = "body-bar", skind = "cylinder";
    int dim = 2;
    auto* rigidity = app.add_subcommand("rigidity", "body-bar / surface rigidity decisions");
    rigidity->add_option("input", input, "path, '-' for stdin, or inline graph6");
    rigidity->add_option("--format", format, "auto|graph6|edge-list")->default_val("auto");
    rigidity->add_option("--mode", rmode, "body-bar|surface")->default_val("body-bar");
    rigidity->add_option("--d", dim, "dimension (body-bar)")->default_val(2);
    rigidity->add_option("--kind", skind, "cylinder|sphere|other (surface)")
        ->default_val("cylinder");
    rigidity->add_flag("--json", as_json, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(input, format, csv, as_json);

        if (construct->parsed()) {
            std::ostringstream buf;
            if (kind == "complete") {
                emit_graph(stp::complete_graph(c_n), format, buf);
            } else if (kind == "book") {
                emit_graph(stp::book_graph(c_n, c_delta, c_i), format, buf);
            } else if (kind == "join-candidate") {
                emit_graph(stp::join_candidate(c_n, c_k), format, buf);
            } else if (kind == "family") {
                if (enumerate) {
                    for (const auto& fg : stp::enumerate_family(c_n, c_n1, c_i))
                        emit_graph(fg.graph, format, buf);
                } else {
                    stp::CrossPattern p;
                    std::istringstream ss(links_spec);
                    std::string tok;
                    while (std::getline(ss, tok, ',')) {
                        auto colon = tok.find(':');
                        if (colon == std::string::npos)
                            throw stp::Error("links must look like a:b,a:b");
                        p.links.emplace_back(std::stoi(tok.substr(0, colon)),
                                             std::stoi(tok.substr(colon + 1)));
                    }
                    emit_graph(stp::family_graph(c_n, c_n1, p).graph, format, buf);
                }
            } else {
                throw stp::Error("unknown construct kind '" + kind + "'");
            }
            if (output.empty()) {
                std::cout << buf.str();
            } else {
                std::ofstream f(output);
                if (!f) throw stp::Error("cannot open output path: " + output);
                f << buf.str();
            }
            return 0;
        }

        if (pack->parsed()) return cmd_pack(input, format, p_k, arb, as_json);

        if (verify->parsed() || sweep->parsed()) {
            bool seed_set = (verify->parsed() ? vseed : sseed)->count() > 0;
            return cmd_sweep(statement, n_spec, s_delta, s_k, s_kappa, mode, samples,
                             seed_set, seed, jobs, input, output);
        }

        if (hunt->parsed()) {
            stp::HuntReport rep;
            if (exhaustive) {
                rep = stp::search_minimal_packing_exhaustive(h_n, h_k);
            } else {
                if (hseed->count() == 0) throw stp::Error("randomized hunt requires --seed");
                if (budget <= 0) throw stp::Error("randomized hunt requires --budget > 0");
                rep = stp::search_minimal_packing(h_n, h_k, budget, seed);
            }
            if (as_json) {
                json j{{"n", rep.n},
                       {"k", rep.k},
                       {"exhaustive", rep.exhaustive},
                       {"partial", rep.partial},
                       {"graphs_seen", rep.graphs_seen},
                       {"best_rho", rep.best_rho},
                       {"best_graph6", rep.best_graph6},
                       {"candidate_rho", rep.candidate_rho},
                       {"candidate_unbeaten", rep.candidate_unbeaten}};
                std::cout << j.dump() << '\n';
            } else {
                std::cout << "mode=" << (rep.exhaustive ? "EXHAUSTIVE" : "PARTIAL")
                          << " graphs_seen=" << rep.graphs_seen << '\n'
                          << "best rho=" << fmt10(rep.best_rho) << " graph=" << rep.best_graph6
                          << '\n'
                          << "candidate rho=" << fmt10(rep.candidate_rho)
                          << " unbeaten=" << (rep.candidate_unbeaten ? "yes" : "no") << '\n';
            }
            return 0;
        }

        if (rigidity->parsed()) {
            auto graphs = parse_graphs(slurp_input(input), format);
            for (const auto& g : graphs) {
                stp::RigidityReport rep;
                if (rmode == "body-bar") {
                    rep = stp::body_bar_rigid(g, dim);
                } else if (rmode == "surface") {
                    stp::SurfaceKind sk;
                    if (skind == "cylinder")
                        sk = stp::SurfaceKind::Cylinder;
                    else if (skind == "sphere")
                        sk = stp::SurfaceKind::Sphere;
                    else if (skind == "other")
                        sk = stp::SurfaceKind::OtherRevolution;
                    else
                        throw stp::Error("unknown surface kind '" + skind + "'");
                    rep = stp::surface_rigid(g, sk);
                } else {
                    throw stp::Error("unknown rigidity mode '" + rmode + "'");
                }
                if (as_json) {
                    json j{{"mode", rep.mode},
                           {"decision", stp::decision_name(rep.decision)},
                           {"required_trees", rep.required_trees},
                           {"note", rep.note}};
                    std::cout << j.dump() << '\n';
                } else {
                    std::cout << "mode=" << rep.mode
                              << " decision=" << stp::decision_name(rep.decision);
                    if (rep.required_trees > 0)
                        std::cout << " required_trees=" << rep.required_trees;
                    if (!rep.note.empty()) std::cout << " note=\"" << rep.note << '"';
                    std::cout << '\n';
                    for (const auto& t : rep.trees)
                        std::cout << "tree: " << edge_list_inline(t) << '\n';
                    if (!rep.tree.empty())
                        std::cout << "tree: " << edge_list_inline(rep.tree) << '\n';
                    if (!rep.unicyclic.empty())
                        std::cout << "unicyclic: " << edge_list_inline(rep.unicyclic) << '\n';
                    if (rep.witness)
                        std::cout << "partition: " << partition_inline(*rep.witness) << '\n';
                }
            }
            return 0;
        }
    } catch (const stp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
