#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dnastore/gf2m.hpp"

namespace dnastore {

// Systematic evaluation-style MDS code over GF(2^m).  Codeword position i
// holds P(x_i) for the unique polynomial P of degree < k interpolating the
// message on the first k evaluation points; the evaluation points are the
// field elements 0..n-1.  Corrects e erasures plus s substitutions whenever
// e + 2s <= n - k (erasure-only decoding by interpolation, combined decoding
// by Berlekamp-Welch on the punctured code).
class ReedSolomon {
public:
    static constexpr std::uint16_t kErased = 0xffff;

    ReedSolomon(int n, int k, int field_bits);

    int n() const { return n_; }
    int k() const { return k_; }
    int field_bits() const { return field_.m(); }

    std::vector<std::uint16_t> encode(const std::vector<std::uint16_t>& message) const;

    struct Decoded {
        std::vector<std::uint16_t> message;
        int erasures = 0;       // e
        int substitutions = 0;  // s actually corrected
    };

    // received[i] == kErased marks an erasure; nullopt when e + 2s <= n-k is
    // not satisfiable or the candidate fails verification
    std::optional<Decoded> decode(const std::vector<std::uint16_t>& received) const;

private:
    std::vector<std::uint16_t> interpolate(const std::vector<std::uint16_t>& xs,
                                           const std::vector<std::uint16_t>& ys) const;
    std::uint16_t eval(const std::vector<std::uint16_t>& poly, std::uint16_t x) const;

    GF2m field_;
    int n_, k_;
};

}  // namespace dnastore
