#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "dnastore/kernels.hpp"

#define DNASTORE_TARGET_AVX2 __attribute__((target("avx2")))

namespace dnastore::kernels::avx2 {

DNASTORE_TARGET_AVX2
std::size_t count_diff(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    std::size_t c = 0;
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i eq = _mm256_cmpeq_epi8(va, vb);
        const unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(eq));
        c += 32u - static_cast<unsigned>(__builtin_popcount(mask));
    }
    for (; i < n; ++i) c += (a[i] != b[i]);
    return c;
}

DNASTORE_TARGET_AVX2
std::size_t count_match(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                        std::uint8_t skip) {
    std::size_t c = 0;
    std::size_t i = 0;
    const __m256i vskip = _mm256_set1_epi8(static_cast<char>(skip));
    for (; i + 32 <= n; i += 32) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i eq = _mm256_cmpeq_epi8(va, vb);
        const __m256i sk = _mm256_cmpeq_epi8(va, vskip);
        const __m256i hit = _mm256_andnot_si256(sk, eq);
        const unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(hit));
        c += static_cast<unsigned>(__builtin_popcount(mask));
    }
    for (; i < n; ++i) c += (a[i] == b[i] && a[i] != skip);
    return c;
}

DNASTORE_TARGET_AVX2
bool consistent(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                std::uint8_t erasure) {
    std::size_t i = 0;
    const __m256i ve = _mm256_set1_epi8(static_cast<char>(erasure));
    for (; i + 32 <= n; i += 32) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i eq = _mm256_cmpeq_epi8(va, vb);
        const __m256i ea = _mm256_cmpeq_epi8(va, ve);
        const __m256i eb = _mm256_cmpeq_epi8(vb, ve);
        // conflict = !eq & !ea & !eb
        const __m256i ok = _mm256_or_si256(eq, _mm256_or_si256(ea, eb));
        if (static_cast<unsigned>(_mm256_movemask_epi8(ok)) != 0xffffffffu) return false;
    }
    for (; i < n; ++i) {
        if (a[i] != b[i] && a[i] != erasure && b[i] != erasure) return false;
    }
    return true;
}

DNASTORE_TARGET_AVX2
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(vd, vs));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

}  // namespace dnastore::kernels::avx2

#endif
