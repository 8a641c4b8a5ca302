#include "dnastore/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace dnastore {

std::uint64_t RandomStream::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("below: bound must be >= 1");
    if (bound == 1) return 0;
    // rejection to kill modulo bias
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = next_u64();
    } while (r >= limit);
    return r % bound;
}

std::uint64_t RandomStream::poisson(double lambda) {
    if (lambda < 0) throw std::invalid_argument("poisson: lambda must be >= 0");
    std::uint64_t total = 0;
    // Poisson(a+b) = Poisson(a) + Poisson(b); keep the chunk small enough
    // that exp(-chunk) is comfortably above double underflow
    while (lambda > 30.0) {
        total += poisson(30.0);
        lambda -= 30.0;
    }
    if (lambda == 0.0) return total;
    const double u = next_double();
    double p = std::exp(-lambda);
    double cum = p;
    std::uint64_t k = 0;
    const std::uint64_t kmax = 200 + static_cast<std::uint64_t>(10 * lambda);
    while (u >= cum && k < kmax) {
        ++k;
        p *= lambda / static_cast<double>(k);
        cum += p;
    }
    return total + k;
}

std::uint64_t RandomStream::geometric1(double p) {
    if (p <= 0.0 || p > 1.0) throw std::invalid_argument("geometric1: p in (0,1]");
    if (p == 1.0) return 1;
    const double u = next_double();
    // P(X > k) = (1-p)^k; inversion
    const double g = std::floor(std::log1p(-u) / std::log1p(-p));
    if (g < 0) return 1;
    if (g > 1e18) return static_cast<std::uint64_t>(1e18);
    return 1 + static_cast<std::uint64_t>(g);
}

void RandomStream::shuffle(std::vector<std::uint32_t>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = below(i);
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace dnastore
