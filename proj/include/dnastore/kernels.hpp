#pragma once

#include <cstddef>
#include <cstdint>

// Hot inner loops shared by the consistency graph, clustering metrics and
// GF(2) elimination.  Every kernel has a scalar reference implementation and
// an AVX2 variant; the dispatch table picks the widest supported one at
// startup (override with DNASTORE_KERNELS=scalar|avx2).  The two variants are
// equivalence-tested against each other in tests/test_kernels.cpp.
namespace dnastore::kernels {

enum class Backend { Scalar, Avx2 };

// active backend, resolved on first use
Backend active();
void force(Backend b);
bool avx2_supported();
const char* backend_name(Backend b);

// number of positions where a and b differ
std::size_t count_diff(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);

// number of positions where a and b are equal and both differ from `skip`
std::size_t count_match(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                        std::uint8_t skip);

// true iff no position holds two distinct non-`erasure` symbols
bool consistent(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                std::uint8_t erasure);

// dst ^= src over n words (GF(2) row operation)
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);

namespace scalar {
std::size_t count_diff(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
std::size_t count_match(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                        std::uint8_t skip);
bool consistent(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                std::uint8_t erasure);
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
std::size_t count_diff(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
std::size_t count_match(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                        std::uint8_t skip);
bool consistent(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                std::uint8_t erasure);
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
}  // namespace avx2
#endif

}  // namespace dnastore::kernels
