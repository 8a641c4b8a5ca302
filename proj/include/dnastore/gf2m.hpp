#pragma once

#include <cstdint>
#include <vector>

namespace dnastore {

// GF(2^m) for m in [1,16], log/antilog tables over a fixed primitive
// polynomial per m.  Element 0..2^m-1; addition is xor.
class GF2m {
public:
    explicit GF2m(int m);

    int m() const { return m_; }
    std::uint32_t size() const { return size_; }

    std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return a ^ b; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (size_ - 1)];
    }
    std::uint16_t inv(std::uint16_t a) const;
    std::uint16_t div(std::uint16_t a, std::uint16_t b) const { return mul(a, inv(b)); }
    std::uint16_t pow(std::uint16_t a, std::uint64_t e) const;

private:
    int m_;
    std::uint32_t size_;
    std::vector<std::uint16_t> log_, exp_;
};

}  // namespace dnastore
