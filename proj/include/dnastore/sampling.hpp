#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "dnastore/rng.hpp"

namespace dnastore {

// Draw-count law Q = (q_0, q_1, ...): how many times each input sequence is
// sampled by the channel.

struct SingleDraw {
    double q;  // probability of zero draws; one draw otherwise
};
struct PoissonDraws {
    double lambda;  // mean coverage depth
};
struct FixedDraws {
    std::uint32_t n;
};
// number-of-failures r (> 0, possibly non-integer), success probability s:
// q_n = C(n+r-1, n) (1-s)^r s^n
struct NegBinomialDraws {
    double r;
    double s;
};
struct EmpiricalDraws {
    std::vector<double> weights;  // weights[n] = q_n, must sum to 1
};
// amplification A ~ Poisson(alpha), then N ~ Poisson(lambda * A / alpha)
struct PoissonPcrDraws {
    double alpha;
    double lambda;
};

class SamplingSpec {
public:
    using Variant = std::variant<SingleDraw, PoissonDraws, FixedDraws, NegBinomialDraws,
                                 EmpiricalDraws, PoissonPcrDraws>;

    SamplingSpec(Variant v);  // validates parameters

    static SamplingSpec single_draw(double q) { return SamplingSpec(SingleDraw{q}); }
    static SamplingSpec poisson(double lambda) { return SamplingSpec(PoissonDraws{lambda}); }
    static SamplingSpec fixed(std::uint32_t n) { return SamplingSpec(FixedDraws{n}); }
    static SamplingSpec neg_binomial(double r, double s) {
        return SamplingSpec(NegBinomialDraws{r, s});
    }
    static SamplingSpec empirical(std::vector<double> w) {
        return SamplingSpec(EmpiricalDraws{std::move(w)});
    }
    static SamplingSpec poisson_pcr(double alpha, double lambda) {
        return SamplingSpec(PoissonPcrDraws{alpha, lambda});
    }

    const Variant& variant() const { return v_; }
    bool is_poisson() const { return std::holds_alternative<PoissonDraws>(v_); }
    bool is_single_draw() const { return std::holds_alternative<SingleDraw>(v_); }

    // exact mass at zero draws
    double q0() const;

    // q_n; Poisson-PCR is evaluated by conditioning on the amplification count
    double pmf(std::uint64_t n) const;

    // probability generating function E[z^N], closed form per variant
    double pgf(double z) const;

    double mean() const;
    double second_moment() const;

    // p_eff = E[p^N | N >= 1], via the closed-form pgf
    double effective_erasure(double p) const;
    // same quantity via the series sum_{n>=1} q_n p^n / (1-q0), truncated at
    // relative tail mass 1e-12 (cross-check path)
    double effective_erasure_series(double p) const;

    std::uint64_t sample(RandomStream& rng) const;

    std::string describe() const;

private:
    Variant v_;
};

struct DrawCounts {
    std::vector<std::uint32_t> counts;
    std::uint64_t total = 0;
};

// M independent draws from Q
DrawCounts sample_counts(std::size_t m, const SamplingSpec& spec, RandomStream& rng);

// single-column text file: line n holds q_n
std::vector<double> load_empirical_weights(const std::string& path);

}  // namespace dnastore
