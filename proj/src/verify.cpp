#include "stp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <set>
#include <thread>

#include "stp/extremal.hpp"
#include "stp/graph6.hpp"
#include "stp/isomorphism.hpp"
#include "stp/mincut.hpp"
#include "stp/packing.hpp"
#include "stp/spectral.hpp"

namespace stp {

namespace {

long long binom2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

double rho_of(const Graph& g) {
    if (g.order() == 0) throw Error("rho of empty graph");
    return jacobi_eigensym(adjacency_matrix(g), g.order()).values[0];
}

long long edge_threshold(int n, int delta, int k) {
    return binom2(delta + 1) + binom2(n - delta - 1) + k;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Consistent: return "CONSISTENT";
        case Verdict::Counterexample: return "COUNTEREXAMPLE";
        case Verdict::Indeterminate: return "INDETERMINATE";
    }
    return "?";
}

VerificationRecord check_edge_theorem(const Graph& g, int k) {
    if (k < 1) throw Error("check_edge_theorem: k must be >= 1");
    VerificationRecord rec;
    rec.statement_id = "T1.1";
    rec.n = g.order();
    rec.k_or_kappa = k;
    rec.graph6 = write_graph6(g);
    bool connected = is_connected(g);
    rec.delta = degree_profile(g).delta;
    long long thr = edge_threshold(rec.n, rec.delta, k);
    rec.margin = static_cast<double>(g.size() - thr);
    rec.premise = connected && rec.delta >= 2 * k && rec.n >= 2 * rec.delta + 2 &&
                  g.size() >= thr;
    rec.conclusion = connected && has_k_trees(g, k).yes;
    rec.verdict = (rec.premise && !rec.conclusion) ? Verdict::Counterexample
                                                   : Verdict::Consistent;
    return rec;
}

double spectral_threshold(int n, int delta, int k) {
    if (k < 2 || delta < 2 * k || n < 2 * delta + 3)
        throw Error("spectral_threshold: hypotheses need k >= 2, delta >= 2k, n >= 2*delta+3");
    double rho = rho_of(book_graph(n, delta, k - 1));
    if (!(rho > n - delta - 2 && rho < n - delta - 1))
        throw Error("spectral_threshold: value escaped its bracket");
    return rho;
}

VerificationRecord check_spectral_theorem(const Graph& g, int k) {
    if (k < 1) throw Error("check_spectral_theorem: k must be >= 1");
    VerificationRecord rec;
    rec.statement_id = "T1.2";
    rec.n = g.order();
    rec.k_or_kappa = k;
    rec.graph6 = write_graph6(g);
    bool connected = is_connected(g);
    rec.delta = degree_profile(g).delta;

    bool gates = connected && k >= 2 && rec.delta >= 2 * k && rec.n >= 2 * rec.delta + 3;
    bool tau_ok = connected && has_k_trees(g, k).yes;
    if (!gates) {
        rec.premise = false;
        rec.conclusion = tau_ok;
        rec.margin = 0.0;
        rec.verdict = Verdict::Consistent;
        rec.witness = "hypothesis-gate";
        return rec;
    }
    double thr = spectral_threshold(rec.n, rec.delta, k);
    double diff = rho_of(g) - thr;
    bool iso_b = is_isomorphic(g, book_graph(rec.n, rec.delta, k - 1));
    rec.margin = diff;
    rec.premise = diff >= -kSpectralMargin;
    rec.conclusion = tau_ok || iso_b;
    if (!rec.premise || rec.conclusion) {
        rec.verdict = Verdict::Consistent;
        if (iso_b && !tau_ok) rec.witness = "equality-branch";
    } else {
        rec.verdict = diff > kSpectralMargin ? Verdict::Counterexample
                                             : Verdict::Indeterminate;
    }
    return rec;
}

VerificationRecord check_family_extremality(int n, int delta, int i) {
    if (i < 1) throw Error("check_family_extremality: need i >= 1");
    if (n < 2 * delta + 3) throw Error("check_family_extremality: need n >= 2*delta+3");
    VerificationRecord rec;
    rec.statement_id = "L2.5";
    rec.n = n;
    rec.delta = delta;
    rec.k_or_kappa = i + 1;

    Graph book = book_graph(n, delta, i);
    double rho_b = rho_of(book);
    rec.graph6 = write_graph6(book);

    double best_other = -std::numeric_limits<double>::infinity();
    std::string best_other_g6;
    auto consider = [&](const FamilyGraph& fg) {
        if (fg.n1 == delta + 1) {
            bool is_book = true;
            for (size_t t = 0; t < fg.pattern.links.size(); ++t)
                if (fg.pattern.links[t] != std::make_pair(0, static_cast<int>(t)))
                    is_book = false;
            if (is_book) return;
        }
        double r = rho_of(fg.graph);
        if (r > best_other) {
            best_other = r;
            best_other_g6 = write_graph6(fg.graph);
        }
    };
    for (const auto& fg : enumerate_family(n, delta + 1, i)) consider(fg);
    for (int a = delta + 2; 2 * a <= n; ++a)
        for (const auto& fg : enumerate_family(n, a, i)) consider(fg);

    rec.premise = true;
    if (std::isinf(best_other)) {
        rec.margin = std::numeric_limits<double>::infinity();
        rec.conclusion = true;
        rec.verdict = Verdict::Consistent;
        rec.witness = "no-competitor";
        return rec;
    }
    double margin = rho_b - best_other;
    rec.margin = margin;
    rec.conclusion = margin > 0;
    if (margin > kSpectralMargin)
        rec.verdict = Verdict::Consistent;
    else if (margin < -kSpectralMargin)
        rec.verdict = Verdict::Counterexample;
    else
        rec.verdict = Verdict::Indeterminate;
    rec.witness = "runner-up:" + best_other_g6;
    return rec;
}

VerificationRecord check_bracket_lemmas(int n, int delta, int i, BracketVariant variant) {
    if (variant == BracketVariant::L23) {
        int k = i + 1;
        if (k < 2 || delta < 2 * k || n < 2 * delta + 3)
            throw Error("check_bracket_lemmas: L2.3 hypotheses need i >= 1, delta >= 2(i+1), "
                        "n >= 2*delta+3");
    } else {
        if (i < 4 || i >= delta || n < 2 * delta + 4)
            throw Error("check_bracket_lemmas: L3.2 hypotheses need 4 <= i < delta, "
                        "n >= 2*delta+4");
    }
    VerificationRecord rec;
    rec.statement_id = variant == BracketVariant::L23 ? "L2.3" : "L3.2";
    rec.n = n;
    rec.delta = delta;
    rec.k_or_kappa = variant == BracketVariant::L23 ? i + 1 : i;

    double lo = n - delta - 2;
    double hi = variant == BracketVariant::L23 ? n - delta - 1 : n - delta;
    double min_slack = std::numeric_limits<double>::infinity();
    for (const auto& fg : enumerate_family(n, delta + 1, i)) {
        double r = rho_of(fg.graph);
        double slack = std::min(r - lo, hi - r);
        if (slack < min_slack) {
            min_slack = slack;
            rec.graph6 = write_graph6(fg.graph);
        }
    }
    rec.premise = true;
    rec.margin = min_slack;
    rec.conclusion = min_slack > 0;
    if (min_slack > kSpectralMargin)
        rec.verdict = Verdict::Consistent;
    else if (min_slack < -kSpectralMargin)
        rec.verdict = Verdict::Counterexample;
    else
        rec.verdict = Verdict::Indeterminate;
    return rec;
}

VerificationRecord check_connectivity_extremal(const Graph& g, int delta, int kappa) {
    int n = g.order();
    if (!(4 <= kappa && kappa < delta) || n < 2 * delta + 4)
        throw Error("check_connectivity_extremal: need 4 <= kappa < delta and n >= 2*delta+4");
    VerificationRecord rec;
    rec.statement_id = "T1.3";
    rec.n = n;
    rec.delta = delta;
    rec.k_or_kappa = kappa;
    rec.graph6 = write_graph6(g);

    bool in_class = is_connected(g) && degree_profile(g).delta == delta &&
                    edge_connectivity(g).first == kappa;
    rec.premise = in_class;

    Graph book = book_graph(n, delta, kappa);
    double diff = rho_of(book) - rho_of(g);  // positive = below the extremal value
    rec.margin = diff;
    bool iso = is_isomorphic(g, book);
    rec.conclusion = iso || diff > 0;
    if (!in_class) {
        rec.verdict = Verdict::Consistent;
        rec.witness = "not-in-class";
    } else if (iso) {
        rec.verdict = Verdict::Consistent;
        rec.witness = "equality-branch";
    } else if (diff > kSpectralMargin) {
        rec.verdict = Verdict::Consistent;
    } else if (diff < -kSpectralMargin) {
        rec.verdict = Verdict::Counterexample;
    } else {
        rec.verdict = Verdict::Indeterminate;
    }
    return rec;
}

Graph random_graph(Rng& rng, int n, double p) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < p) pairs.emplace_back(i, j);
    return Graph::from_edges(n, pairs);
}

std::optional<Graph> random_connected_min_degree(Rng& rng, int n, int delta_min, double p,
                                                 int tries) {
    for (int t = 0; t < tries; ++t) {
        Graph g = random_graph(rng, n, p);
        if (degree_profile(g).delta >= delta_min && is_connected(g)) return g;
    }
    return std::nullopt;
}

std::vector<VerificationRecord> sample_connectivity_class(int n, int delta, int kappa,
                                                          int count, uint64_t seed,
                                                          SampleDiagnostics* diag) {
    if (!(4 <= kappa && kappa < delta))
        throw Error("sample_connectivity_class: need 4 <= kappa < delta");
    if (n < 2 * delta + 4)
        throw Error("sample_connectivity_class: need n >= 2*delta+4");

    Rng rng(seed);
    std::vector<VerificationRecord> records;
    records.reserve(count);
    SampleDiagnostics local;
    long long budget = std::max<long long>(200000, 5000LL * count);

    // Random graphs shaped toward the class: two dense random sides joined
    // by exactly kappa cross edges, then exact rejection on the minimum
    // degree, connectivity and edge connectivity. Every class member with a
    // minimum cut of size kappa has positive probability under this model.
    while (static_cast<int>(records.size()) < count && local.attempts < budget) {
        ++local.attempts;
        int s = rng.range(delta + 1, n - delta - 1);
        double q1 = 0.7 + 0.3 * rng.unit();
        double q2 = 0.7 + 0.3 * rng.unit();
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                if (rng.unit() < q1) pairs.emplace_back(i, j);
        for (int i = s; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.unit() < q2) pairs.emplace_back(i, j);
        std::set<std::pair<int, int>> cross;
        while (static_cast<int>(cross.size()) < kappa)
            cross.insert({rng.below(s), s + rng.below(n - s)});
        for (auto [a, b] : cross) pairs.emplace_back(a, b);

        Graph g = Graph::from_edges(n, pairs);
        if (degree_profile(g).delta != delta) continue;
        if (!is_connected(g)) continue;
        if (edge_connectivity(g).first != kappa) continue;
        records.push_back(check_connectivity_extremal(g, delta, kappa));
        ++local.accepted;
    }
    local.budget_exhausted = static_cast<int>(records.size()) < count;
    if (diag) *diag = local;
    return records;
}

namespace {

Graph random_minimal_packing_graph(Rng& rng, int n, int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 2 * k; ++i)
        for (int j = i + 1; j < 2 * k; ++j) pairs.emplace_back(i, j);
    for (int v = 2 * k; v < n; ++v) {
        std::set<int> targets;
        while (static_cast<int>(targets.size()) < k) targets.insert(rng.below(v));
        for (int t : targets) pairs.emplace_back(t, v);
    }
    return Graph::from_edges(n, pairs);
}

}  // namespace

namespace {

// At n = 2k the candidate degenerates to the complete graph on 2k vertices
// (no isolated part); the join constructor proper starts at n = 2k+1.
Graph hunt_candidate(int n, int k) {
    return n == 2 * k ? complete_graph(2 * k) : join_candidate(n, k);
}

}  // namespace

HuntReport search_minimal_packing(int n, int k, long long budget, uint64_t seed) {
    if (k < 1 || n < 2 * k) throw Error("search_minimal_packing: need k >= 1, n >= 2k");
    HuntReport rep;
    rep.n = n;
    rep.k = k;
    rep.budget = budget;
    rep.exhaustive = false;
    rep.partial = true;  // randomized: evidence, not proof
    rep.candidate_rho = rho_of(hunt_candidate(n, k));

    Rng rng(seed);
    Graph cur = random_minimal_packing_graph(rng, n, k);
    double cur_rho = rho_of(cur);
    rep.graphs_seen = 1;
    rep.best_rho = cur_rho;
    rep.best_graph6 = write_graph6(cur);

    long long since_improvement = 0;
    const long long restart_after = std::max<long long>(100, budget / 10);
    for (long long it = 0; it < budget; ++it) {
        if (since_improvement > restart_after) {
            cur = random_minimal_packing_graph(rng, n, k);
            cur_rho = rho_of(cur);
            ++rep.graphs_seen;
            since_improvement = 0;
            if (cur_rho > rep.best_rho) {
                rep.best_rho = cur_rho;
                rep.best_graph6 = write_graph6(cur);
            }
        }
        int m = cur.size();
        auto e = cur.edges()[rng.below(m)];
        int u = rng.below(n), v = rng.below(n);
        if (u == v || cur.has_edge(u, v)) {
            ++since_improvement;
            continue;
        }
        Graph alt = cur.without_edge(e.first, e.second).with_edge(u, v);
        if (!has_k_trees(alt, k).yes) {
            ++since_improvement;
            continue;
        }
        ++rep.graphs_seen;
        double r = rho_of(alt);
        if (r >= cur_rho) {
            if (r > cur_rho + 1e-12)
                since_improvement = 0;
            else
                ++since_improvement;
            cur = std::move(alt);
            cur_rho = r;
            if (r > rep.best_rho) {
                rep.best_rho = r;
                rep.best_graph6 = write_graph6(cur);
            }
        } else {
            ++since_improvement;
        }
    }
    rep.candidate_unbeaten = rep.best_rho <= rep.candidate_rho + kSpectralMargin;
    return rep;
}

HuntReport search_minimal_packing_exhaustive(int n, int k) {
    if (k < 1 || n < 2 * k + 1)
        throw Error("search_minimal_packing_exhaustive: need k >= 1, n >= 2k+1");
    long long cells = binom2(n);
    long long need = static_cast<long long>(k) * (n - 1);
    if (need > cells) throw Error("search_minimal_packing_exhaustive: no such graphs");
    // C(cells, need) combinations; keep it in desk range.
    double combos = 1.0;
    for (long long i = 0; i < need; ++i) combos *= static_cast<double>(cells - i) / (i + 1);
    if (combos > 2e6)
        throw Error("search_minimal_packing_exhaustive: " + std::to_string(combos) +
                    " candidate graphs is beyond desk scale; use the randomized hunt");

    std::vector<std::pair<int, int>> all_cells;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all_cells.emplace_back(i, j);

    HuntReport rep;
    rep.n = n;
    rep.k = k;
    rep.exhaustive = true;
    rep.partial = false;
    rep.candidate_rho = rho_of(join_candidate(n, k));
    rep.best_rho = -std::numeric_limits<double>::infinity();

    std::vector<int> idx(need);
    for (long long i = 0; i < need; ++i) idx[i] = static_cast<int>(i);
    std::vector<std::pair<int, int>> pairs(need);
    while (true) {
        for (long long i = 0; i < need; ++i) pairs[i] = all_cells[idx[i]];
        Graph g = Graph::from_edges(n, pairs);
        if (has_k_trees(g, k).yes) {
            ++rep.graphs_seen;
            double r = rho_of(g);
            if (r > rep.best_rho) {
                rep.best_rho = r;
                rep.best_graph6 = write_graph6(g);
            }
        }
        // next combination
        long long i = need - 1;
        while (i >= 0 && idx[i] == cells - need + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (long long j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
    }
    rep.candidate_unbeaten = rep.best_rho <= rep.candidate_rho + kSpectralMargin;
    return rep;
}

namespace {

using Task = std::function<std::vector<VerificationRecord>()>;

void run_tasks(std::vector<Task>& tasks, int jobs, std::vector<std::vector<VerificationRecord>>& out) {
    out.resize(tasks.size());
    if (jobs <= 1 || tasks.size() <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            out[i] = tasks[i]();
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<int>(jobs, static_cast<int>(tasks.size()));
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
    const std::string& id = cfg.statement_id;
    std::vector<Task> tasks;

    auto relabel = [&id](std::vector<VerificationRecord> recs) {
        for (auto& r : recs) r.statement_id = id;
        return recs;
    };

    if (cfg.mode == SweepMode::Graph6Stream) {
        for (const auto& line : cfg.graph6_lines) {
            tasks.push_back([&, line]() -> std::vector<VerificationRecord> {
                Graph g = parse_graph6(line);
                if (id == "T1.1") return {check_edge_theorem(g, cfg.k_or_kappa)};
                if (id == "T1.2") return {check_spectral_theorem(g, cfg.k_or_kappa)};
                if (id == "T1.3")
                    return {check_connectivity_extremal(g, cfg.delta, cfg.k_or_kappa)};
                throw Error("run_sweep: statement " + id + " does not take graph input");
            });
        }
    } else if (id == "T1.1" || id == "T1.2") {
        int k = cfg.k_or_kappa;
        for (int n : cfg.n_values) {
            if (cfg.mode == SweepMode::FamilyExhaustive) {
                tasks.push_back([&, n, k]() {
                    std::vector<VerificationRecord> recs;
                    for (const auto& fg : enumerate_family(n, cfg.delta + 1, k - 1))
                        recs.push_back(id == "T1.1" ? check_edge_theorem(fg.graph, k)
                                                    : check_spectral_theorem(fg.graph, k));
                    return relabel(std::move(recs));
                });
            } else {
                tasks.push_back([&, n, k]() {
                    std::vector<VerificationRecord> recs;
                    Rng rng(cfg.seed ^ (static_cast<uint64_t>(n) * 0x9e3779b97f4a7c15ULL));
                    int made = 0;
                    long long guard = 0;
                    while (made < cfg.sample_count && guard < 200LL * cfg.sample_count + 10000) {
                        ++guard;
                        double p = 0.35 + 0.55 * rng.unit();
                        auto got = random_connected_min_degree(rng, n, cfg.delta, p, 50);
                        if (!got) continue;
                        recs.push_back(id == "T1.1" ? check_edge_theorem(*got, k)
                                                    : check_spectral_theorem(*got, k));
                        ++made;
                    }
                    return relabel(std::move(recs));
                });
            }
        }
    } else if (id == "T1.3") {
        for (int n : cfg.n_values) {
            tasks.push_back([&, n]() {
                auto recs = sample_connectivity_class(
                    n, cfg.delta, cfg.k_or_kappa, cfg.sample_count,
                    cfg.seed ^ (static_cast<uint64_t>(n) * 0x9e3779b97f4a7c15ULL));
                // The extremal graph itself: must hit the equality branch.
                recs.push_back(check_connectivity_extremal(
                    book_graph(n, cfg.delta, cfg.k_or_kappa), cfg.delta, cfg.k_or_kappa));
                return relabel(std::move(recs));
            });
        }
    } else if (id == "L2.3" || id == "L3.2") {
        BracketVariant v = id == "L2.3" ? BracketVariant::L23 : BracketVariant::L32;
        int i = id == "L2.3" ? cfg.k_or_kappa - 1 : cfg.k_or_kappa;
        for (int n : cfg.n_values)
            tasks.push_back([&, n, i, v]() {
                return relabel({check_bracket_lemmas(n, cfg.delta, i, v)});
            });
    } else if (id == "L2.5" || id == "L2.6" || id == "L3.3") {
        int i = id == "L3.3" ? cfg.k_or_kappa : cfg.k_or_kappa - 1;
        if (id == "L3.3") {
            if (!(4 <= i && i < cfg.delta))
                throw Error("run_sweep: L3.3 needs 4 <= kappa < delta");
            for (int n : cfg.n_values)
                if (n < 2 * cfg.delta + 4)
                    throw Error("run_sweep: L3.3 needs n >= 2*delta+4");
        }
        for (int n : cfg.n_values)
            tasks.push_back([&, n, i]() {
                return relabel({check_family_extremality(n, cfg.delta, i)});
            });
    } else {
        throw Error("run_sweep: unknown statement id '" + id + "'");
    }

    std::vector<std::vector<VerificationRecord>> results;
    run_tasks(tasks, cfg.jobs, results);

    SweepResult out;
    for (auto& chunk : results)
        for (auto& rec : chunk) out.records.push_back(std::move(rec));
    for (const auto& rec : out.records) {
        switch (rec.verdict) {
            case Verdict::Consistent: ++out.consistent; break;
            case Verdict::Counterexample: ++out.counterexample; break;
            case Verdict::Indeterminate: ++out.indeterminate; break;
        }
    }
    return out;
}

int SweepResult::exit_code() const {
    if (counterexample > 0) return 3;
    if (indeterminate > 0) return 2;
    return 0;
}

std::string csv_header() {
    return "statement_id,n,delta,k_or_kappa,graph6,premise,conclusion,margin,verdict,witness_path";
}

std::string to_csv_row(const VerificationRecord& r) {
    char margin[64];
    std::snprintf(margin, sizeof(margin), "%.10g", r.margin);
    std::string row;
    row += r.statement_id;
    row += ',' + std::to_string(r.n);
    row += ',' + std::to_string(r.delta);
    row += ',' + std::to_string(r.k_or_kappa);
    row += ',' + r.graph6;
    row += ',';
    row += r.premise ? '1' : '0';
    row += ',';
    row += r.conclusion ? '1' : '0';
    row += ',';
    row += margin;
    row += ',';
    row += verdict_name(r.verdict);
    row += ',' + r.witness;
    return row;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
    out << csv_header() << '\n';
    for (const auto& rec : result.records) out << to_csv_row(rec) << '\n';
    out << "# summary,consistent=" << result.consistent
        << ",counterexample=" << result.counterexample
        << ",indeterminate=" << result.indeterminate << '\n';
}

}  // namespace stp
