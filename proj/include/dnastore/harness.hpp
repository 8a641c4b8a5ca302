#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dnastore/channel.hpp"
#include "dnastore/cluster.hpp"
#include "dnastore/codec_index.hpp"
#include "dnastore/codec_linear.hpp"
#include "dnastore/sampling.hpp"

namespace dnastore {

// L = round(beta * log2 M); the finite-instance rule for the asymptotic
// definition.  Returns the realized beta through *actual_beta.
int length_from_beta(int m, double beta, double* actual_beta = nullptr);

struct TrialRecord {
    std::uint64_t trial = 0;
    bool success = false;
    std::vector<std::pair<std::string, double>> metrics;
};

struct RunSummary {
    std::size_t trials = 0;
    std::size_t successes = 0;
    double success_rate = 0.0;
    double ci95_halfwidth = 0.0;  // normal approximation
    std::vector<std::string> warnings;
};

RunSummary summarize(const std::vector<TrialRecord>& records);

// ---- experiment runners (all fully deterministic given the master stream) ----

struct IndexCodecExperiment {
    int m = 256;
    int l = 0;          // 0: derive from beta
    double beta = 0.0;
    OuterCodeSpec outer;
    InnerCodeSpec inner;
    SamplingSpec sampling = SamplingSpec::fixed(1);
    NoiseSpec noise = NoiseSpec::identity();
    std::size_t trials = 100;
};

std::vector<TrialRecord> run_index_codec(const IndexCodecExperiment& e, const RandomStream& master);

struct LinearCodecExperiment {
    int m = 2;
    int l = 6;
    int b = 8;
    std::size_t num_messages = 64;
    double epsilon = 0.1;
    SamplingSpec sampling = SamplingSpec::poisson(2.0);
    NoiseSpec noise = NoiseSpec::bec(0.2);
    std::size_t trials = 100;
};

struct LinearRunStats {
    std::vector<TrialRecord> records;
    std::size_t silent_wrong = 0;  // decoder returned a message that was not sent
};

LinearRunStats run_linear_codec(const LinearCodecExperiment& e, const RandomStream& master);

struct ClusterPipelineExperiment {
    int m = 100;
    int l = 100;
    Alphabet alphabet = Alphabet::dna();
    SamplingSpec sampling = SamplingSpec::poisson(5.0);
    NoiseSpec noise = NoiseSpec::qsc(0.03);
    LshParams lsh;
    ReconstructMode mode = ReconstructMode::Substitution;
    bool randomize_payload = true;
    std::size_t trials = 20;
};

std::vector<TrialRecord> run_cluster_pipeline(const ClusterPipelineExperiment& e,
                                              const RandomStream& master);

struct TornCoverageExperiment {
    std::uint64_t n = 1 << 20;
    TornSpec spec = TornSpec::geometric(0.05);
    std::size_t trials = 200;
};

std::vector<TrialRecord> run_torn_coverage(const TornCoverageExperiment& e,
                                           const RandomStream& master);

struct EdgeProbeExperiment {
    int m = 64;
    double beta = 5.0;
    double p = 0.1;  // BEC erasure probability
    SamplingSpec sampling = SamplingSpec::poisson(2.0);
    std::size_t trials = 100;
};

std::vector<TrialRecord> run_edge_probe(const EdgeProbeExperiment& e, const RandomStream& master);

// ---- sweeps (figure data as CSV rows) ----

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// torn-paper capacity e^(-1/beta) vs fixed-fragment (1-1/beta)^+ over a beta grid
CsvTable sweep_torn_vs_shuffling(double beta_lo, double beta_hi, std::size_t points);
// (p, beta) boundary of the single-draw BSC proven regime: 1-H(2p)-2/beta = 0
CsvTable sweep_bsc_regime_boundary(double p_lo, double p_hi, std::size_t points);
// (p, beta_blue, beta_green) boundaries of the multi-draw BEC regime
CsvTable sweep_bec_regime_boundaries(double p_lo, double p_hi, std::size_t points);
// (lambda, R_s, R_r) tradeoff rows
CsvTable sweep_tradeoff(double beta, double lambda_lo, double lambda_hi, std::size_t points);

// ---- emission ----

std::string records_to_csv(const std::vector<TrialRecord>& records);
std::string records_to_json(const std::vector<TrialRecord>& records);
std::vector<TrialRecord> records_from_csv(const std::string& text);
std::vector<TrialRecord> records_from_json(const std::string& text);
std::string table_to_csv(const CsvTable& table);
void write_text(const std::string& path, const std::string& text);

}  // namespace dnastore
