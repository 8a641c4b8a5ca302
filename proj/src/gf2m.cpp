#include "dnastore/gf2m.hpp"

#include <stdexcept>

namespace dnastore {

namespace {

// primitive polynomials (with the x^m term) for m = 1..16
constexpr std::uint32_t kPrimPoly[17] = {
    0,      0x3,    0x7,    0xB,    0x13,   0x25,    0x43,   0x89,  0x11D,
    0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443,  0x8003, 0x1100B,
};

}  // namespace

GF2m::GF2m(int m) : m_(m) {
    if (m < 1 || m > 16) throw std::invalid_argument("GF2m: m must be in [1,16]");
    size_ = 1u << m;
    log_.assign(size_, 0);
    exp_.assign(size_, 0);
    const std::uint32_t poly = kPrimPoly[m];
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i + 1 < size_; ++i) {
        exp_[i] = static_cast<std::uint16_t>(x);
        log_[x] = static_cast<std::uint16_t>(i);
        x <<= 1;
        if (x & size_) x ^= poly;
    }
    exp_[size_ - 1] = exp_[0];  // wraparound convenience
}

std::uint16_t GF2m::inv(std::uint16_t a) const {
    if (a == 0) throw std::domain_error("GF2m: inverse of zero");
    return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

std::uint16_t GF2m::pow(std::uint16_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint64_t le = (log_[a] * (e % (size_ - 1))) % (size_ - 1);
    return exp_[le];
}

}  // namespace dnastore
