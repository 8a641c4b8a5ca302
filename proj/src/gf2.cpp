#include "dnastore/gf2.hpp"

#include <cmath>
#include <stdexcept>

#include "dnastore/kernels.hpp"

namespace dnastore {

BinaryMatrix BinaryMatrix::random(std::size_t rows, std::size_t cols, RandomStream& rng) {
    BinaryMatrix m(rows, cols);
    const std::uint64_t tail_mask =
        cols % 64 == 0 ? ~0ULL : ((1ULL << (cols % 64)) - 1);
    for (std::size_t r = 0; r < rows; ++r) {
        std::uint64_t* w = m.row(r);
        for (std::size_t i = 0; i < m.wpr_; ++i) w[i] = rng.next_u64();
        w[m.wpr_ - 1] &= tail_mask;
    }
    return m;
}

void BinaryMatrix::row_xor(std::size_t dst, std::size_t src) {
    kernels::xor_words(row(dst), row(src), wpr_);
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < wpr_; ++i) std::swap(bits_[a * wpr_ + i], bits_[b * wpr_ + i]);
}

std::size_t BinaryMatrix::rank() const {
    BinaryMatrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols_ && r < m.rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows_ && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows_) continue;
        m.swap_rows(r, pivot);
        for (std::size_t i = pivot + 1; i < m.rows_; ++i)
            if (m.get(i, c)) m.row_xor(i, r);
        ++r;
    }
    return r;
}

std::vector<std::uint64_t> BinaryMatrix::multiply(const std::vector<std::uint64_t>& x) const {
    std::vector<std::uint64_t> y((rows_ + 63) / 64, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        if (row_dot(r, x)) y[r / 64] |= 1ULL << (r % 64);
    return y;
}

bool BinaryMatrix::row_dot(std::size_t r, const std::vector<std::uint64_t>& x) const {
    const std::uint64_t* w = row(r);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < wpr_; ++i) acc ^= w[i] & x[i];
    return __builtin_parityll(acc);
}

std::vector<std::uint64_t> pack_bits(const std::vector<std::uint8_t>& bits) {
    std::vector<std::uint64_t> words((bits.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) words[i / 64] |= 1ULL << (i % 64);
    return words;
}

std::vector<std::uint8_t> unpack_bits(const std::vector<std::uint64_t>& words, std::size_t n) {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = (words[i / 64] >> (i % 64)) & 1u;
    return bits;
}

double rank_probe(std::size_t b, double delta, std::size_t trials, RandomStream& rng) {
    if (b < 1) throw std::invalid_argument("rank_probe: B >= 1");
    if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("rank_probe: delta in [0,1)");
    const auto rows = static_cast<std::size_t>(std::llround((1.0 - delta) * static_cast<double>(b)));
    std::size_t full = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const BinaryMatrix m = BinaryMatrix::random(rows, b, rng);
        if (m.rank() == rows) ++full;
    }
    return static_cast<double>(full) / static_cast<double>(trials);
}

}  // namespace dnastore
