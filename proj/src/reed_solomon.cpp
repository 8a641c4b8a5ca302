#include "dnastore/reed_solomon.hpp"

#include <algorithm>
#include <stdexcept>

namespace dnastore {

ReedSolomon::ReedSolomon(int n, int k, int field_bits)
    : field_(field_bits), n_(n), k_(k) {
    // k = 0 is the degenerate zero-rate code (all-zero codewords)
    if (k < 0 || n < std::max(k, 1)) throw std::invalid_argument("ReedSolomon: need 0 <= k <= n");
    if (static_cast<std::uint32_t>(n) > field_.size())
        throw std::invalid_argument("ReedSolomon: field too small for block length");
}

std::uint16_t ReedSolomon::eval(const std::vector<std::uint16_t>& poly, std::uint16_t x) const {
    std::uint16_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), poly[i]);
    return acc;
}

// Lagrange interpolation through (xs, ys); returns coefficients, degree < |xs|
std::vector<std::uint16_t> ReedSolomon::interpolate(const std::vector<std::uint16_t>& xs,
                                                    const std::vector<std::uint16_t>& ys) const {
    const std::size_t m = xs.size();
    // master(x) = prod (x + x_j); char 2, so -x_j == x_j
    std::vector<std::uint16_t> master(1, 1);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::uint16_t> next(master.size() + 1, 0);
        for (std::size_t i = 0; i < master.size(); ++i) {
            next[i + 1] = field_.add(next[i + 1], master[i]);             // * x
            next[i] = field_.add(next[i], field_.mul(master[i], xs[j]));  // * x_j
        }
        master = std::move(next);
    }

    std::vector<std::uint16_t> result(m, 0);
    std::vector<std::uint16_t> li(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        // li = master / (x + x_i) by synthetic division
        std::uint16_t carry = 0;
        for (std::size_t d = m; d-- > 0;) {
            carry = field_.add(master[d + 1], field_.mul(carry, xs[i]));
            li[d] = carry;
        }
        const std::uint16_t denom = eval(li, xs[i]);
        const std::uint16_t scale = field_.mul(ys[i], field_.inv(denom));
        for (std::size_t d = 0; d < m; ++d)
            result[d] = field_.add(result[d], field_.mul(scale, li[d]));
    }
    return result;
}

std::vector<std::uint16_t> ReedSolomon::encode(const std::vector<std::uint16_t>& message) const {
    if (static_cast<int>(message.size()) != k_)
        throw std::invalid_argument("ReedSolomon::encode: message must have k symbols");
    std::vector<std::uint16_t> xs(k_), ys = message;
    for (int i = 0; i < k_; ++i) xs[i] = static_cast<std::uint16_t>(i);
    const auto poly = interpolate(xs, ys);
    std::vector<std::uint16_t> code(n_);
    for (int i = 0; i < k_; ++i) code[i] = message[i];
    for (int i = k_; i < n_; ++i) code[i] = eval(poly, static_cast<std::uint16_t>(i));
    return code;
}

std::optional<ReedSolomon::Decoded> ReedSolomon::decode(
    const std::vector<std::uint16_t>& received) const {
    if (static_cast<int>(received.size()) != n_)
        throw std::invalid_argument("ReedSolomon::decode: need n symbols");

    std::vector<std::uint16_t> xs, ys;
    xs.reserve(n_);
    ys.reserve(n_);
    for (int i = 0; i < n_; ++i) {
        if (received[i] == kErased) continue;
        if (received[i] >= field_.size())
            throw std::invalid_argument("ReedSolomon::decode: symbol out of field");
        xs.push_back(static_cast<std::uint16_t>(i));
        ys.push_back(received[i]);
    }
    const int survivors = static_cast<int>(xs.size());
    const int e = n_ - survivors;
    if (survivors < k_) return std::nullopt;

    auto finish = [&](const std::vector<std::uint16_t>& poly) -> std::optional<Decoded> {
        int s = 0;
        for (int i = 0; i < survivors; ++i)
            if (eval(poly, xs[i]) != ys[i]) ++s;
        if (e + 2 * s > n_ - k_) return std::nullopt;
        Decoded d;
        d.erasures = e;
        d.substitutions = s;
        d.message.resize(k_);
        for (int i = 0; i < k_; ++i) d.message[i] = eval(poly, static_cast<std::uint16_t>(i));
        return d;
    };

    // erasure-only fast path: interpolate on the first k survivors
    {
        std::vector<std::uint16_t> xk(xs.begin(), xs.begin() + k_);
        std::vector<std::uint16_t> yk(ys.begin(), ys.begin() + k_);
        const auto poly = interpolate(xk, yk);
        bool clean = true;
        for (int i = 0; i < survivors && clean; ++i)
            clean = eval(poly, xs[i]) == ys[i];
        if (clean) return finish(poly);
    }

    // Berlekamp-Welch on the punctured code: find Q (deg < k+s) and monic E
    // (deg s) with Q(x_i) = y_i E(x_i); then P = Q/E
    const int smax = (survivors - k_) / 2;
    if (smax < 1) return std::nullopt;
    const int nq = k_ + smax;  // unknown Q coefficients
    const int cols = nq + smax;
    std::vector<std::vector<std::uint16_t>> aug(
        survivors, std::vector<std::uint16_t>(cols + 1, 0));
    for (int i = 0; i < survivors; ++i) {
        std::uint16_t xp = 1;
        for (int j = 0; j < nq; ++j) {
            aug[i][j] = xp;
            xp = field_.mul(xp, xs[i]);
        }
        xp = 1;
        for (int j = 0; j < smax; ++j) {
            aug[i][nq + j] = field_.mul(ys[i], xp);
            xp = field_.mul(xp, xs[i]);
        }
        // rhs = y_i * x_i^smax
        aug[i][cols] = field_.mul(ys[i], field_.pow(xs[i], smax));
    }

    // Gaussian elimination, free variables set to zero
    std::vector<int> pivot_col(survivors, -1);
    int r = 0;
    for (int c = 0; c < cols && r < survivors; ++c) {
        int pr = -1;
        for (int i = r; i < survivors; ++i)
            if (aug[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(aug[r], aug[pr]);
        const std::uint16_t invp = field_.inv(aug[r][c]);
        for (int j = c; j <= cols; ++j) aug[r][j] = field_.mul(aug[r][j], invp);
        for (int i = 0; i < survivors; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            const std::uint16_t f = aug[i][c];
            for (int j = c; j <= cols; ++j)
                aug[i][j] = field_.add(aug[i][j], field_.mul(f, aug[r][j]));
        }
        pivot_col[r] = c;
        ++r;
    }
    for (int i = r; i < survivors; ++i)
        if (aug[i][cols] != 0) return std::nullopt;  // inconsistent

    std::vector<std::uint16_t> sol(cols, 0);
    for (int i = 0; i < r; ++i) sol[pivot_col[i]] = aug[i][cols];

    std::vector<std::uint16_t> q(sol.begin(), sol.begin() + nq);
    std::vector<std::uint16_t> epoly(smax + 1, 0);
    for (int j = 0; j < smax; ++j) epoly[j] = sol[nq + j];
    epoly[smax] = 1;  // monic

    // P = Q / E, reject on nonzero remainder or deg >= k
    std::vector<std::uint16_t> rem = q;
    std::vector<std::uint16_t> p(nq, 0);
    for (int d = nq - 1; d >= smax; --d) {
        const std::uint16_t coeff = rem[d];  // E monic
        if (coeff == 0) continue;
        p[d - smax] = coeff;
        for (int j = 0; j <= smax; ++j)
            rem[d - smax + j] = field_.add(rem[d - smax + j], field_.mul(coeff, epoly[j]));
    }
    for (const auto c : rem)
        if (c != 0) return std::nullopt;
    for (std::size_t d = k_; d < p.size(); ++d)
        if (p[d] != 0) return std::nullopt;
    p.resize(k_);
    return finish(p);
}

}  // namespace dnastore
