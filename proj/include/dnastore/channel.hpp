#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dnastore/rng.hpp"
#include "dnastore/sampling.hpp"
#include "dnastore/seq.hpp"

namespace dnastore {

// Per-symbol noise applied independently to each sampled read.

struct IdentityNoise {};
struct BscNoise {
    double p;
};
struct BecNoise {
    double p;
};
// total flip probability p, split evenly across the 3 other symbols
struct QscNoise {
    double p;
};
// per source position: delete w.p. p_del, else substitute w.p.
// p_sub/(1-p_del); before each position and at the end, insert a uniform
// symbol w.p. p_ins (repeating, so insertion bursts are geometric)
struct IndelSubNoise {
    double p_ins;
    double p_del;
    double p_sub;
};

class NoiseSpec {
public:
    using Variant = std::variant<IdentityNoise, BscNoise, BecNoise, QscNoise, IndelSubNoise>;

    NoiseSpec(Variant v);

    static NoiseSpec identity() { return NoiseSpec(IdentityNoise{}); }
    static NoiseSpec bsc(double p) { return NoiseSpec(BscNoise{p}); }
    static NoiseSpec bec(double p) { return NoiseSpec(BecNoise{p}); }
    static NoiseSpec qsc(double p) { return NoiseSpec(QscNoise{p}); }
    static NoiseSpec indel(double pi, double pd, double ps) {
        return NoiseSpec(IndelSubNoise{pi, pd, ps});
    }

    const Variant& variant() const { return v_; }
    bool is_identity() const { return std::holds_alternative<IdentityNoise>(v_); }
    std::string describe() const;

private:
    Variant v_;
};

Sequence apply_noise(const Sequence& seq, const NoiseSpec& spec, const Alphabet& a,
                     RandomStream& rng);

// Full record of one pass through the noisy shuffling-sampling channel.
// The origin map is ground truth kept for tests and scoring; decoders never
// read it.
struct ChannelTrace {
    ReadPool input;
    DrawCounts draws;
    ReadPool output;                   // |output| = sum of draws
    std::vector<std::uint32_t> origin;  // origin[j] = input index of output read j
};

ChannelTrace transmit(const ReadPool& pool, const SamplingSpec& sampling,
                      const NoiseSpec& noise, RandomStream& rng);

// ---- torn-paper channel ----

struct GeometricTear {
    double p;  // tearing probability between consecutive symbols
};
struct FixedTear {
    std::uint64_t len;
};
struct UniformTear {
    double gamma;  // fragment lengths uniform on {0, ..., round(gamma*log2 n)}
};

struct ZeroDeletion {};
struct ConstDeletion {
    double eps;
};
struct ExpDeletion {
    double gamma_d;
};

// The deletion profile is given asymptotically as d_hat(xi); at finite n we
// realize it as d(len) = min(1, d_hat(len/log2 n)/log2 n).
struct TornSpec {
    std::variant<GeometricTear, FixedTear, UniformTear> length_law;
    std::variant<ZeroDeletion, ConstDeletion, ExpDeletion> deletion = ZeroDeletion{};

    static TornSpec geometric(double p) { return TornSpec{GeometricTear{p}, ZeroDeletion{}}; }
};

// tearing only: fragments in ground-truth order, partitioning the input
std::vector<Sequence> tear(const Sequence& seq, const TornSpec& spec, RandomStream& rng);

// tear, apply length-dependent deletion, shuffle survivors
ReadPool torn_transmit(const Sequence& seq, const TornSpec& spec, const Alphabet& a,
                       RandomStream& rng);

struct FragmentStats {
    double coverage_frac_long;  // covered by surviving fragments of length >= log2 n
    double reorder_cost_est;    // (#such fragments) * log2(#) / n
};

FragmentStats fragment_stats(const ReadPool& fragments, std::uint64_t n);

}  // namespace dnastore
