#include "dnastore/capacity.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dnastore {

namespace {

constexpr double kCapacitySeriesTail = 1e-9;

double pos(double x) { return x > 0 ? x : 0.0; }

std::string cond(const char* text, bool holds) {
    return std::string(text) + (holds ? " holds" : " fails");
}

}  // namespace

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Proven: return "proven";
        case Regime::Zero: return "zero";
        case Regime::Conjectured: return "conjectured";
        case Regime::OutsideProvenRegime: return "outside_proven_regime";
    }
    return "?";
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary_entropy: p must be in [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

BigInt count_multisets(std::uint64_t a, std::uint64_t b) {
    if (a < 1) throw std::invalid_argument("count_multisets: a must be >= 1");
    // C(a+b-1, b) with exact integer arithmetic
    BigInt num = 1;
    for (std::uint64_t i = 0; i < b; ++i) {
        num *= a + i;
        num /= i + 1;  // exact: prefix of i+1 consecutive integers is divisible
    }
    return num;
}

CapacityResult cap_noise_free(double q0, double beta) {
    if (!(q0 >= 0.0 && q0 <= 1.0)) throw std::invalid_argument("q0 must be in [0,1]");
    if (!(beta > 0)) throw std::invalid_argument("beta must be > 0");
    CapacityResult res;
    if (beta <= 1.0) {
        res.rate = 0.0;
        res.regime = Regime::Zero;
        res.conditions = "beta <= 1: no positive rate achievable";
        return res;
    }
    res.rate = (1.0 - q0) * (1.0 - 1.0 / beta);
    res.regime = Regime::Proven;
    res.conditions = "beta > 1 holds";
    return res;
}

CapacityResult cap_bsc(double q, double p, double beta) {
    if (!(beta > 0)) throw std::invalid_argument("beta must be > 0");
    CapacityResult res;
    if (beta <= 1.0) {
        res.regime = Regime::Zero;
        res.conditions = "beta <= 1: no positive rate achievable";
        return res;
    }
    res.rate = (1.0 - q) * pos(1.0 - binary_entropy(p) - 1.0 / beta);
    const bool small_p = p < 0.25;
    const double margin = p <= 0.5 ? 1.0 - binary_entropy(2.0 * p > 1 ? 1 : 2.0 * p) - 2.0 / beta
                                   : -1.0;
    const bool ok = small_p && margin > 0;
    res.regime = ok ? Regime::Proven : Regime::OutsideProvenRegime;
    res.conditions = cond("p < 1/4", small_p) + "; " +
                     cond("1 - H(2p) - 2/beta > 0", margin > 0) +
                     (ok ? "" : "; value is the index-scheme achievable rate");
    return res;
}

CapacityResult cap_bec(double q, double p, double beta) {
    if (!(beta > 0)) throw std::invalid_argument("beta must be > 0");
    CapacityResult res;
    if (beta <= 1.0) {
        res.regime = Regime::Zero;
        res.conditions = "beta <= 1: no positive rate achievable";
        return res;
    }
    res.rate = (1.0 - q) * pos(1.0 - p - 1.0 / beta);
    const double margin = 1.0 - 2.0 * p - 2.0 / beta;
    res.regime = margin > 0 ? Regime::Proven : Regime::OutsideProvenRegime;
    res.conditions = cond("1 - 2p - 2/beta > 0", margin > 0) +
                     (margin > 0 ? "" : "; value is the index-scheme achievable rate");
    return res;
}

double multi_draw_bsc_capacity(double p, std::uint64_t n) {
    if (!(p >= 0.0 && p <= 0.5)) throw std::domain_error("multi_draw_bsc_capacity: p in [0,1/2]");
    if (n < 1) throw std::invalid_argument("multi_draw_bsc_capacity: n >= 1");
    if (p == 0.0) return 1.0;
    if (p == 0.5) return 0.0;
    // C_n = 1 + sum_k C(n,k) p^k (1-p)^(n-k) log2 1/(1 + (p/(1-p))^(n-2k))
    const double log_ratio = std::log(p / (1.0 - p));  // negative
    double c = 1.0;
    double weight = std::pow(1.0 - p, static_cast<double>(n));  // C(n,0) p^0 (1-p)^n
    for (std::uint64_t k = 0; k <= n; ++k) {
        const double expo = static_cast<double>(n) - 2.0 * static_cast<double>(k);
        const double r = std::exp(expo * log_ratio);
        c += weight * (-std::log2(1.0 + r));
        if (k < n) {
            weight *= static_cast<double>(n - k) / static_cast<double>(k + 1) * p / (1.0 - p);
        }
    }
    return c;
}

CapacityResult cap_multi_bec(const SamplingSpec& sampling, double p, double beta) {
    if (!(beta > 0)) throw std::invalid_argument("beta must be > 0");
    CapacityResult res;
    const double q0 = sampling.q0();
    if (beta <= 1.0) {
        res.regime = Regime::Zero;
        res.conditions = "beta <= 1: no positive rate achievable";
        return res;
    }
    if (q0 >= 1.0) {
        res.rate = 0.0;
        res.regime = Regime::Zero;
        res.conditions = "q0 = 1: nothing is ever sampled";
        return res;
    }
    const double p_eff = sampling.effective_erasure(p);
    res.rate = (1.0 - q0) * pos(1.0 - p_eff - 1.0 / beta);
    const double margin = 1.0 - 2.0 * p - 2.0 / beta;
    res.regime = margin > 0 ? Regime::Proven : Regime::OutsideProvenRegime;
    res.conditions = cond("1 - 2p - 2/beta > 0", margin > 0);
    return res;
}

CapacityResult cap_multi_bec_series(const SamplingSpec& sampling, double p, double beta) {
    CapacityResult res = cap_multi_bec(sampling, p, beta);
    const double q0 = sampling.q0();
    if (res.regime == Regime::Zero) return res;
    const double p_eff = sampling.effective_erasure_series(p);
    res.rate = (1.0 - q0) * pos(1.0 - p_eff - 1.0 / beta);
    return res;
}

CapacityResult cap_multi_bsc(const SamplingSpec& sampling, double p, double beta) {
    if (!(beta > 0)) throw std::invalid_argument("beta must be > 0");
    if (!(p >= 0.0 && p < 0.5)) throw std::domain_error("cap_multi_bsc: p in [0,1/2)");
    CapacityResult res;
    const double q0 = sampling.q0();
    if (beta <= 1.0) {
        res.regime = Regime::Zero;
        res.conditions = "beta <= 1: no positive rate achievable";
        return res;
    }
    if (q0 >= 1.0) {
        res.regime = Regime::Zero;
        res.conditions = "q0 = 1: nothing is ever sampled";
        return res;
    }
    // sum_{n>=1} q_n C_{p,n}, truncated when the remaining tail mass (whose
    // C_{p,n} contribution is bounded by 1) drops below 1e-9
    double sum = 0.0, mass = q0;
    for (std::uint64_t n = 1; n <= 1000000; ++n) {
        const double qn = sampling.pmf(n);
        sum += qn * multi_draw_bsc_capacity(p, n);
        mass += qn;
        if (1.0 - mass < kCapacitySeriesTail && static_cast<double>(n) > sampling.mean()) {
            sum += (1.0 - mass);  // C_{p,n} -> 1; bound the tail by its mass
            break;
        }
    }
    res.rate = pos(sum - (1.0 - q0) / beta);
    const bool small_p = p < 0.125;
    const double margin = 4.0 * p <= 1.0
                              ? 1.0 - binary_entropy(4.0 * p) - 2.0 / beta
                              : -1.0;
    const bool ok = sampling.is_poisson() && small_p && margin > 0;
    res.regime = ok ? Regime::Proven : Regime::OutsideProvenRegime;
    res.conditions = cond("Poisson sampling", sampling.is_poisson()) + "; " +
                     cond("p < 1/8", small_p) + "; " + cond("1 - H(4p) - 2/beta > 0", margin > 0);
    if (!sampling.is_poisson()) {
        res.regime = Regime::Conjectured;
        res.conditions += "; non-Poisson sampling: E[C_N|N>=1] form is conjectured";
    }
    return res;
}

CapacityResult cap_torn_geometric(double beta) {
    if (!(beta > 0)) throw std::invalid_argument("beta must be > 0");
    return {std::exp(-1.0 / beta), Regime::Proven, "geometric tearing, no deletion"};
}

CapacityResult cap_torn_geometric_const_del(double beta, double eps) {
    if (!(beta > 0)) throw std::invalid_argument("beta must be > 0");
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must be in [0,1]");
    return {(1.0 - eps) * std::exp(-1.0 / beta), Regime::Proven,
            "geometric tearing, constant deletion profile"};
}

CapacityResult cap_torn_geometric_exp_del(double beta, double gamma_d) {
    if (!(beta > 0)) throw std::invalid_argument("beta must be > 0");
    if (!(gamma_d >= 0)) throw std::invalid_argument("gamma_d must be >= 0");
    const double binv = 1.0 / beta;
    const double rate =
        std::exp(-binv) * (1.0 - binv * binv * std::exp(-gamma_d) / ((binv + gamma_d) * (binv + gamma_d)));
    return {rate, Regime::Proven, "geometric tearing, exponential deletion profile"};
}

CapacityResult cap_torn_uniform(double gamma) {
    if (!(gamma >= 1.0)) throw std::domain_error("uniform tearing requires gamma >= 1");
    const double r = (gamma - 1.0) / gamma;
    return {r * r, Regime::Proven, "uniform tearing on [0, gamma log n]"};
}

CapacityResult cap_torn_fixed(double beta) {
    if (!(beta > 0)) throw std::invalid_argument("beta must be > 0");
    return {pos(1.0 - 1.0 / beta), Regime::Proven, "fixed fragment length >= log n"};
}

RatePair tradeoff_region(double lambda, double beta) {
    if (!(lambda > 0) || !(beta > 0)) throw std::invalid_argument("lambda, beta must be > 0");
    const double rs = (1.0 - std::exp(-lambda)) * pos(1.0 - 1.0 / beta);
    return {rs, rs / lambda};
}

CoverageOptimum optimal_coverage(double q_cost_ratio, double beta) {
    if (!(q_cost_ratio >= 0)) throw std::invalid_argument("cost ratio must be >= 0");
    if (!(beta > 1)) throw std::invalid_argument("beta must be > 1");
    // stationarity of (q + x)/(1 - e^-x) is e^x = 1 + q + x; bracketed bisection
    const double q = q_cost_ratio;
    auto g = [q](double x) { return std::exp(x) - 1.0 - q - x; };
    double lo = 1e-9, hi = 1.0;
    while (g(hi) < 0) hi *= 2;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0 ? lo : hi) = mid;
    }
    CoverageOptimum opt;
    opt.lambda = 0.5 * (lo + hi);
    opt.min_cost = (q + opt.lambda) / ((1.0 - std::exp(-opt.lambda)) * (1.0 - 1.0 / beta));
    return opt;
}

double index_rate_multidraw(const SamplingSpec& sampling, double p, double beta,
                            ChannelKind kind) {
    if (!(beta > 0)) throw std::invalid_argument("beta must be > 0");
    const double q0 = sampling.q0();
    if (q0 >= 1.0) return 0.0;
    auto cn = [&](std::uint64_t n) {
        return kind == ChannelKind::Bsc ? multi_draw_bsc_capacity(p, n)
                                        : 1.0 - std::pow(p, static_cast<double>(n));
    };
    double sum = 0.0, mass = q0;
    for (std::uint64_t n = 1; n <= 1000000; ++n) {
        const double qn = sampling.pmf(n);
        sum += qn * cn(n);
        mass += qn;
        if (1.0 - mass < kCapacitySeriesTail && static_cast<double>(n) > sampling.mean()) {
            sum += (1.0 - mass);
            break;
        }
    }
    const double expected_cn = sum / (1.0 - q0);  // E[C_N | N >= 1]
    const double c1 = cn(1);
    if (c1 <= 0.0) return 0.0;
    const double gamma = expected_cn / c1;
    return pos((1.0 - q0) * (expected_cn - gamma / beta));
}

double cluster_gamma(double p, double beta) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p must be in [0,1]");
    if (!(beta > 0)) throw std::invalid_argument("beta must be > 0");
    const double inner = 1.0 - 0.5 * (1.0 - p) * (1.0 - p);
    return -beta * std::log2(inner);
}

ShortMoleculeRate short_molecule_rate(double beta, double m) {
    if (!(beta > 0.0 && beta < 1.0)) throw std::domain_error("short-molecule regime needs beta in (0,1)");
    if (!(m >= 2)) throw std::invalid_argument("M must be >= 2");
    ShortMoleculeRate out;
    out.rate = (1.0 - beta) / (2.0 * beta) * std::pow(m, beta - 1.0);
    out.total_bits_per_l = out.rate * m;
    out.regime = Regime::Conjectured;
    return out;
}

CapacityResult general_alphabet_rate(double q0, double beta, double c_noisy) {
    if (!(beta > 0)) throw std::invalid_argument("beta must be > 0");
    if (!(c_noisy >= 0)) throw std::invalid_argument("C_noisy must be >= 0");
    CapacityResult res;
    res.rate = (1.0 - q0) * pos(c_noisy - 1.0 / beta);
    if (c_noisy == 1.0) {
        // noise-free binary special case, settled by the counting argument
        res.regime = beta > 1.0 ? Regime::Proven : Regime::Zero;
        res.conditions = beta > 1.0 ? "noise-free binary case" : "beta <= 1: zero capacity";
        if (beta <= 1.0) res.rate = 0.0;
        return res;
    }
    res.regime = Regime::Conjectured;
    res.conditions = "unified expression (1-q0)(C_noisy - 1/beta)^+ is conjectured in general";
    return res;
}

}  // namespace dnastore
