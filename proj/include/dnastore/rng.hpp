#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace dnastore {

// 64-bit finalizer from SplitMix64; used for seed-material mixing everywhere
// in the repo so that stream derivation is a pure function of (seed, label).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Reproducible random stream: the engine is std::mt19937_64, whose output
// sequence is fully specified by the standard, so identical (seed, label)
// produce bit-identical streams on every platform.  Substreams are derived
// by extending the label; all distributions are sampled by inversion or
// rejection from raw engine output (never std:: distributions, which are
// implementation-defined).
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::string label)
        : seed_(seed), label_(std::move(label)),
          engine_(mix64(seed ^ fnv1a64(label_))) {}

    RandomStream derive(std::uint64_t index) const {
        return RandomStream(seed_, label_ + "/" + std::to_string(index));
    }
    RandomStream derive(const std::string& sub) const {
        return RandomStream(seed_, label_ + "/" + sub);
    }

    std::uint64_t seed() const { return seed_; }
    const std::string& label() const { return label_; }

    std::uint64_t next_u64() { return engine_(); }

    // uniform on [0,1) with 53 random bits
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    // uniform integer in [0, bound) by rejection; bound >= 1
    std::uint64_t below(std::uint64_t bound);

    // Poisson(lambda) by inversion (chunked so the CDF search never
    // underflows for large lambda)
    std::uint64_t poisson(double lambda);

    // Geometric on {1,2,...}: number of Bernoulli(p) trials until success
    std::uint64_t geometric1(double p);

    // shuffle indices [0,n) in place, Fisher-Yates
    void shuffle(std::vector<std::uint32_t>& v);

private:
    std::uint64_t seed_;
    std::string label_;
    std::mt19937_64 engine_;
};

inline RandomStream derive_stream(const RandomStream& master, std::uint64_t trial) {
    return master.derive(trial);
}

}  // namespace dnastore
