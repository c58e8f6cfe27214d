#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stp/graph.hpp"
#include "stp/rng.hpp"

namespace stp {

// Spectral comparisons closer than this are never decided numerically.
constexpr double kSpectralMargin = 1e-8;

enum class Verdict { Consistent, Counterexample, Indeterminate };

const char* verdict_name(Verdict v);

struct VerificationRecord {
    std::string statement_id;
    int n = 0;
    int delta = 0;
    int k_or_kappa = 0;
    std::string graph6;
    bool premise = false;
    bool conclusion = false;
    double margin = 0.0;  // spectral gap or integer slack, statement-specific
    Verdict verdict = Verdict::Consistent;
    std::string witness;  // path or short tag
};

// ---- Single-statement checks -------------------------------------------

// Theorem-style implication: minimum degree >= 2k, n >= 2*delta+2 and
// e(G) >= C(delta+1,2)+C(n-delta-1,2)+k together force tau(G) >= k.
VerificationRecord check_edge_theorem(const Graph& g, int k);

// rho of the hub two-clique graph with k-1 cross edges; the spectral
// cutoff of the tau >= k test. Requires k >= 2, delta >= 2k, n >= 2*delta+3.
double spectral_threshold(int n, int delta, int k);

// rho(G) >= spectral_threshold forces tau(G) >= k unless G is the hub
// graph itself (decided by exact isomorphism, never numerically).
VerificationRecord check_spectral_theorem(const Graph& g, int k);

// The hub graph uniquely maximizes rho over all two-clique families with i
// cross edges and left part of size delta+1 or larger (up to n/2).
VerificationRecord check_family_extremality(int n, int delta, int i);

enum class BracketVariant { L23, L32 };

// Every family member's rho lies strictly inside (n-delta-2, n-delta-1)
// (L23 variant) or (n-delta-2, n-delta) (L32 variant).
VerificationRecord check_bracket_lemmas(int n, int delta, int i, BracketVariant variant);

// One instance of the fixed-(delta, kappa) extremality conjecture:
// validates class membership exactly, then compares rho(g) against the hub
// graph. Equality is only ever reported via isomorphism.
VerificationRecord check_connectivity_extremal(const Graph& g, int delta, int kappa);

// ---- Sampling & search ---------------------------------------------------

struct SampleDiagnostics {
    long long attempts = 0;
    long long accepted = 0;
    bool budget_exhausted = false;
};

// Random members of the class {connected, min degree exactly delta, edge
// connectivity exactly kappa}, each verified exactly and checked with
// check_connectivity_extremal. Requires 4 <= kappa < delta, n >= 2*delta+4.
std::vector<VerificationRecord> sample_connectivity_class(int n, int delta, int kappa,
                                                          int count, uint64_t seed,
                                                          SampleDiagnostics* diag = nullptr);

struct HuntReport {
    int n = 0;
    int k = 0;
    bool exhaustive = false;
    bool partial = false;        // randomized evidence only
    long long budget = 0;
    long long graphs_seen = 0;   // distinct tau=k minimal graphs examined
    double best_rho = 0.0;
    std::string best_graph6;
    double candidate_rho = 0.0;  // rho of join_candidate(n, k)
    bool candidate_unbeaten = false;
};

// Random hunt over graphs with tau = k and exactly k(n-1) edges: grow by
// vertex augmentation, then hill-climb rho with property-preserving edge
// swaps. Reports whether join_candidate(n, k) stayed unbeaten.
HuntReport search_minimal_packing(int n, int k, long long budget, uint64_t seed);

// Exact maximum over every labeled graph with k(n-1) edges and tau = k.
// Rejects parameter choices whose candidate count is out of desk range.
HuntReport search_minimal_packing_exhaustive(int n, int k);

// ---- Sweeps ---------------------------------------------------------------

enum class SweepMode { FamilyExhaustive, RandomSample, Graph6Stream };

struct SweepConfig {
    std::string statement_id;  // T1.1, T1.2, T1.3, L2.3, L2.5, L2.6, L3.2, L3.3
    std::vector<int> n_values;
    int delta = 0;
    int k_or_kappa = 0;
    SweepMode mode = SweepMode::FamilyExhaustive;
    int sample_count = 0;
    uint64_t seed = 0;
    int jobs = 1;
    std::vector<std::string> graph6_lines;  // Graph6Stream input
};

struct SweepResult {
    std::vector<VerificationRecord> records;
    int consistent = 0;
    int counterexample = 0;
    int indeterminate = 0;

    // 0 = all consistent, 2 = some indeterminate, 3 = some counterexample.
    int exit_code() const;
};

SweepResult run_sweep(const SweepConfig& cfg);

std::string csv_header();
std::string to_csv_row(const VerificationRecord& r);
void write_sweep_csv(const SweepResult& result, std::ostream& out);

// ---- Seeded random graphs -------------------------------------------------

Graph random_graph(Rng& rng, int n, double p);

// Rejection-sampled connected graph with minimum degree >= delta_min;
// nullopt if the try budget runs out.
std::optional<Graph> random_connected_min_degree(Rng& rng, int n, int delta_min, double p,
                                                 int tries = 10000);

}  // namespace stp
