#include "dnastore/kernels.hpp"

namespace dnastore::kernels::scalar {

std::size_t count_diff(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += (a[i] != b[i]);
    return c;
}

std::size_t count_match(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                        std::uint8_t skip) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += (a[i] == b[i] && a[i] != skip);
    return c;
}

bool consistent(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                std::uint8_t erasure) {
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i] && a[i] != erasure && b[i] != erasure) return false;
    }
    return true;
}

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

}  // namespace dnastore::kernels::scalar
