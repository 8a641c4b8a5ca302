#include <cstdlib>
#include <cstring>

#include "dnastore/kernels.hpp"

namespace dnastore::kernels {

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

namespace {

Backend pick_default() {
    if (const char* env = std::getenv("DNASTORE_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Backend::Avx2;
    }
    return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

Backend& current() {
    static Backend b = pick_default();
    return b;
}

}  // namespace

Backend active() { return current(); }

void force(Backend b) {
    if (b == Backend::Avx2 && !avx2_supported()) b = Backend::Scalar;
    current() = b;
}

const char* backend_name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

std::size_t count_diff(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active() == Backend::Avx2) return avx2::count_diff(a, b, n);
#endif
    return scalar::count_diff(a, b, n);
}

std::size_t count_match(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                        std::uint8_t skip) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active() == Backend::Avx2) return avx2::count_match(a, b, n, skip);
#endif
    return scalar::count_match(a, b, n, skip);
}

bool consistent(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                std::uint8_t erasure) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active() == Backend::Avx2) return avx2::consistent(a, b, n, erasure);
#endif
    return scalar::consistent(a, b, n, erasure);
}

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active() == Backend::Avx2) return avx2::xor_words(dst, src, n);
#endif
    return scalar::xor_words(dst, src, n);
}

}  // namespace dnastore::kernels
