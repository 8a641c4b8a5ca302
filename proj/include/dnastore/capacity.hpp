#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "dnastore/sampling.hpp"

namespace dnastore {

using BigInt = boost::multiprecision::cpp_int;

enum class Regime {
    Proven,               // the capacity theorem applies at these parameters
    Zero,                 // capacity is exactly 0 (beta <= 1 in binary settings)
    Conjectured,          // formula only conjectured at these parameters
    OutsideProvenRegime,  // reported value is the index-scheme achievable rate
};

const char* regime_name(Regime r);

struct CapacityResult {
    double rate = 0.0;  // bits per input symbol
    Regime regime = Regime::Proven;
    std::string conditions;  // the inequalities that were checked
};

// storage rate / recovery rate pair; R_s = lambda * R_r under Poisson coverage
struct RatePair {
    double storage;
    double recovery;
};

// -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0; domain error outside [0,1]
double binary_entropy(double p);

// number of histograms over a symbols with total mass b: C(a+b-1, b), exact
BigInt count_multisets(std::uint64_t a, std::uint64_t b);

// noise-free shuffling-sampling channel: (1-q0)(1-1/beta)
CapacityResult cap_noise_free(double q0, double beta);

// single-draw BSC: (1-q)(1 - H(p) - 1/beta)^+, proven iff p < 1/4 and
// 1 - H(2p) - 2/beta > 0
CapacityResult cap_bsc(double q, double p, double beta);

// single-draw BEC: (1-q)(1 - p - 1/beta)^+, proven iff 1 - 2p - 2/beta > 0
CapacityResult cap_bec(double q, double p, double beta);

// capacity of a BSC(p) observed through n independent draws
double multi_draw_bsc_capacity(double p, std::uint64_t n);

// multi-draw BEC: (1-q0)(1 - p_eff - 1/beta)^+ with p_eff = E[p^N | N>=1]
CapacityResult cap_multi_bec(const SamplingSpec& sampling, double p, double beta);
// same value evaluated through the truncated series form of p_eff
CapacityResult cap_multi_bec_series(const SamplingSpec& sampling, double p, double beta);

// multi-draw BSC: (sum_n q_n C_{p,n} - (1-q0)/beta)^+; proven for Poisson
// sampling iff p < 1/8 and 1 - H(4p) - 2/beta > 0
CapacityResult cap_multi_bsc(const SamplingSpec& sampling, double p, double beta);

// torn-paper channel capacities (one evaluator per Table row)
CapacityResult cap_torn_geometric(double beta);
CapacityResult cap_torn_geometric_const_del(double beta, double eps);
CapacityResult cap_torn_geometric_exp_del(double beta, double gamma_d);
CapacityResult cap_torn_uniform(double gamma);  // domain error for gamma < 1
CapacityResult cap_torn_fixed(double beta);

// achievable (R_s, R_r) corner for Poisson(lambda) coverage
RatePair tradeoff_region(double lambda, double beta);

struct CoverageOptimum {
    double lambda;    // minimizer of (q + lambda) / ((1-e^-lambda)(1-1/beta))
    double min_cost;  // cost per bit at the optimum
};
CoverageOptimum optimal_coverage(double q_cost_ratio, double beta);

enum class ChannelKind { Bsc, Bec };

// naive index-based achievable rate in the multi-draw setting:
// (1-q0)(E[C_N | N>=1] - gamma/beta), gamma = E[C_N|N>=1]/C_1
double index_rate_multidraw(const SamplingSpec& sampling, double p, double beta,
                            ChannelKind kind);

// gamma = -beta log2(1 - (1-p)^2/2); the consistency-graph regime boundary
double cluster_gamma(double p, double beta);

struct ShortMoleculeRate {
    double rate;             // bits per nucleotide, (1-beta)/(2 beta) M^(beta-1)
    double total_bits_per_l;  // rate * M = (1-beta)/(2 beta) M^beta
    Regime regime;           // always Conjectured
};
// short-molecule regime beta in (0,1); domain error for beta >= 1
ShortMoleculeRate short_molecule_rate(double beta, double m);

// (1-q0)(C_noisy - 1/beta)^+ for a user-supplied per-read capacity C_noisy
CapacityResult general_alphabet_rate(double q0, double beta, double c_noisy);

}  // namespace dnastore
