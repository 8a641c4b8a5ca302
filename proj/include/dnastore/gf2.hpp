#pragma once

#include <cstdint>
#include <vector>

#include "dnastore/rng.hpp"

namespace dnastore {

// Dense matrix over the two-element field with bit-packed rows.  All
// arithmetic is exact; elimination never touches floating point.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

    static BinaryMatrix random(std::size_t rows, std::size_t cols, RandomStream& rng);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        auto& w = bits_[r * wpr_ + c / 64];
        const std::uint64_t m = 1ULL << (c % 64);
        w = v ? (w | m) : (w & ~m);
    }

    std::uint64_t* row(std::size_t r) { return bits_.data() + r * wpr_; }
    const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * wpr_; }

    void row_xor(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    // rank by elimination on a scratch copy
    std::size_t rank() const;

    // y[r] = parity(row r & x); x packed with cols() significant bits
    std::vector<std::uint64_t> multiply(const std::vector<std::uint64_t>& x_packed) const;
    bool row_dot(std::size_t r, const std::vector<std::uint64_t>& x_packed) const;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

// pack/unpack bit vectors (little-endian within words, bit i of vector at
// word i/64, bit position i%64)
std::vector<std::uint64_t> pack_bits(const std::vector<std::uint8_t>& bits);
std::vector<std::uint8_t> unpack_bits(const std::vector<std::uint64_t>& words, std::size_t n);

// fraction of `trials` random round((1-delta)B) x B fair-coin matrices of
// full row rank
double rank_probe(std::size_t b, double delta, std::size_t trials, RandomStream& rng);

}  // namespace dnastore
