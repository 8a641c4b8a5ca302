#include "dnastore/sampling.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dnastore {

namespace {

constexpr double kSeriesTail = 1e-12;

void check_prob(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(what) + " must be in [0,1]");
}

// log C(n+r-1, n) for real r
double log_nb_coeff(std::uint64_t n, double r) {
    return std::lgamma(n + r) - std::lgamma(r) - std::lgamma(n + 1.0);
}

double poisson_pmf(double lambda, std::uint64_t n) {
    if (lambda == 0.0) return n == 0 ? 1.0 : 0.0;
    return std::exp(-lambda + n * std::log(lambda) - std::lgamma(n + 1.0));
}

}  // namespace

SamplingSpec::SamplingSpec(Variant v) : v_(std::move(v)) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SingleDraw>) {
                check_prob(s.q, "SingleDraw q");
            } else if constexpr (std::is_same_v<T, PoissonDraws>) {
                if (!(s.lambda > 0)) throw std::invalid_argument("Poisson lambda must be > 0");
            } else if constexpr (std::is_same_v<T, NegBinomialDraws>) {
                if (!(s.r > 0)) throw std::invalid_argument("NegBinomial r must be > 0");
                if (!(s.s > 0 && s.s < 1))
                    throw std::invalid_argument("NegBinomial s must be in (0,1)");
            } else if constexpr (std::is_same_v<T, EmpiricalDraws>) {
                if (s.weights.empty()) throw std::invalid_argument("Empirical weights empty");
                double sum = 0;
                for (double w : s.weights) {
                    if (w < 0) throw std::invalid_argument("Empirical weight < 0");
                    sum += w;
                }
                if (std::abs(sum - 1.0) > 1e-12)
                    throw std::invalid_argument("Empirical weights must sum to 1 (within 1e-12)");
            } else if constexpr (std::is_same_v<T, PoissonPcrDraws>) {
                if (!(s.alpha > 0) || !(s.lambda > 0))
                    throw std::invalid_argument("PoissonPCR alpha and lambda must be > 0");
            }
        },
        v_);
}

double SamplingSpec::q0() const {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SingleDraw>) return s.q;
            if constexpr (std::is_same_v<T, PoissonDraws>) return std::exp(-s.lambda);
            if constexpr (std::is_same_v<T, FixedDraws>) return s.n == 0 ? 1.0 : 0.0;
            if constexpr (std::is_same_v<T, NegBinomialDraws>)
                return std::exp(s.r * std::log1p(-s.s));
            if constexpr (std::is_same_v<T, EmpiricalDraws>) return s.weights[0];
            if constexpr (std::is_same_v<T, PoissonPcrDraws>)
                return std::exp(-s.alpha * (1.0 - std::exp(-s.lambda / s.alpha)));
        },
        v_);
}

double SamplingSpec::pmf(std::uint64_t n) const {
    return std::visit(
        [n](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SingleDraw>) {
                if (n == 0) return s.q;
                if (n == 1) return 1.0 - s.q;
                return 0.0;
            }
            if constexpr (std::is_same_v<T, PoissonDraws>) return poisson_pmf(s.lambda, n);
            if constexpr (std::is_same_v<T, FixedDraws>) return n == s.n ? 1.0 : 0.0;
            if constexpr (std::is_same_v<T, NegBinomialDraws>)
                return std::exp(log_nb_coeff(n, s.r) + s.r * std::log1p(-s.s) +
                                n * std::log(s.s));
            if constexpr (std::is_same_v<T, EmpiricalDraws>)
                return n < s.weights.size() ? s.weights[n] : 0.0;
            if constexpr (std::is_same_v<T, PoissonPcrDraws>) {
                // condition on amplification count a ~ Poisson(alpha)
                double total = 0.0, wsum = 0.0;
                for (std::uint64_t a = 0;; ++a) {
                    const double wa = poisson_pmf(s.alpha, a);
                    wsum += wa;
                    total += wa * poisson_pmf(s.lambda * static_cast<double>(a) / s.alpha, n);
                    if (a > s.alpha && 1.0 - wsum < 1e-15) break;
                    if (a > 10000) break;
                }
                return total;
            }
        },
        v_);
}

double SamplingSpec::pgf(double z) const {
    return std::visit(
        [z](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SingleDraw>) return s.q + (1.0 - s.q) * z;
            if constexpr (std::is_same_v<T, PoissonDraws>) return std::exp(-s.lambda * (1.0 - z));
            if constexpr (std::is_same_v<T, FixedDraws>)
                return s.n == 0 ? 1.0 : std::pow(z, static_cast<double>(s.n));
            if constexpr (std::is_same_v<T, NegBinomialDraws>)
                return std::pow((1.0 - s.s) / (1.0 - s.s * z), s.r);
            if constexpr (std::is_same_v<T, EmpiricalDraws>) {
                double total = 0.0, zp = 1.0;
                for (double w : s.weights) {
                    total += w * zp;
                    zp *= z;
                }
                return total;
            }
            if constexpr (std::is_same_v<T, PoissonPcrDraws>) {
                // E[z^N] = E_A[exp(-lambda A (1-z)/alpha)] = MGF_A(-lambda(1-z)/alpha)
                return std::exp(-s.alpha * (1.0 - std::exp(-s.lambda * (1.0 - z) / s.alpha)));
            }
        },
        v_);
}

double SamplingSpec::mean() const {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SingleDraw>) return 1.0 - s.q;
            if constexpr (std::is_same_v<T, PoissonDraws>) return s.lambda;
            if constexpr (std::is_same_v<T, FixedDraws>) return s.n;
            if constexpr (std::is_same_v<T, NegBinomialDraws>) return s.r * s.s / (1.0 - s.s);
            if constexpr (std::is_same_v<T, EmpiricalDraws>) {
                double m = 0;
                for (std::size_t n = 0; n < s.weights.size(); ++n) m += n * s.weights[n];
                return m;
            }
            if constexpr (std::is_same_v<T, PoissonPcrDraws>) return s.lambda;
        },
        v_);
}

double SamplingSpec::second_moment() const {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SingleDraw>) return 1.0 - s.q;
            if constexpr (std::is_same_v<T, PoissonDraws>)
                return s.lambda + s.lambda * s.lambda;
            if constexpr (std::is_same_v<T, FixedDraws>)
                return static_cast<double>(s.n) * s.n;
            if constexpr (std::is_same_v<T, NegBinomialDraws>) {
                const double m = s.r * s.s / (1.0 - s.s);
                const double var = s.r * s.s / ((1.0 - s.s) * (1.0 - s.s));
                return var + m * m;
            }
            if constexpr (std::is_same_v<T, EmpiricalDraws>) {
                double m2 = 0;
                for (std::size_t n = 0; n < s.weights.size(); ++n)
                    m2 += static_cast<double>(n) * n * s.weights[n];
                return m2;
            }
            if constexpr (std::is_same_v<T, PoissonPcrDraws>) {
                // E[N^2] = E[Var(N|A)] + E[E[N|A]^2]
                //        = lambda + (lambda/alpha)^2 (alpha + alpha^2)
                return s.lambda + s.lambda * s.lambda * (1.0 + s.alpha) / s.alpha;
            }
        },
        v_);
}

double SamplingSpec::effective_erasure(double p) const {
    check_prob(p, "p");
    const double mass0 = q0();
    if (mass0 >= 1.0)
        throw std::domain_error("effective_erasure undefined: q0 = 1 (conditioning on N>=1)");
    return (pgf(p) - mass0) / (1.0 - mass0);
}

double SamplingSpec::effective_erasure_series(double p) const {
    check_prob(p, "p");
    const double mass0 = q0();
    if (mass0 >= 1.0)
        throw std::domain_error("effective_erasure undefined: q0 = 1 (conditioning on N>=1)");
    double num = 0.0, mass = mass0, pn = 1.0;
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        const double qn = pmf(n);
        pn *= p;
        num += qn * pn;
        mass += qn;
        if (1.0 - mass < kSeriesTail && n > mean()) break;
    }
    return num / (1.0 - mass0);
}

std::uint64_t SamplingSpec::sample(RandomStream& rng) const {
    return std::visit(
        [&rng](const auto& s) -> std::uint64_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SingleDraw>) return rng.bernoulli(s.q) ? 0 : 1;
            if constexpr (std::is_same_v<T, PoissonDraws>) return rng.poisson(s.lambda);
            if constexpr (std::is_same_v<T, FixedDraws>) return s.n;
            if constexpr (std::is_same_v<T, NegBinomialDraws>) {
                // CDF inversion with the recurrence q_{n+1} = q_n s (n+r)/(n+1)
                const double u = rng.next_double();
                double q = std::exp(s.r * std::log1p(-s.s));
                double cum = q;
                std::uint64_t n = 0;
                while (u >= cum && n < 100000000) {
                    q *= s.s * (static_cast<double>(n) + s.r) / (static_cast<double>(n) + 1.0);
                    ++n;
                    cum += q;
                }
                return n;
            }
            if constexpr (std::is_same_v<T, EmpiricalDraws>) {
                const double u = rng.next_double();
                double cum = 0;
                for (std::size_t n = 0; n < s.weights.size(); ++n) {
                    cum += s.weights[n];
                    if (u < cum) return n;
                }
                return s.weights.size() - 1;
            }
            if constexpr (std::is_same_v<T, PoissonPcrDraws>) {
                const std::uint64_t a = rng.poisson(s.alpha);
                if (a == 0) return 0;
                return rng.poisson(s.lambda * static_cast<double>(a) / s.alpha);
            }
        },
        v_);
}

std::string SamplingSpec::describe() const {
    std::ostringstream out;
    std::visit(
        [&out](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SingleDraw>) out << "single:" << s.q;
            if constexpr (std::is_same_v<T, PoissonDraws>) out << "poisson:" << s.lambda;
            if constexpr (std::is_same_v<T, FixedDraws>) out << "fixed:" << s.n;
            if constexpr (std::is_same_v<T, NegBinomialDraws>)
                out << "negbin:" << s.r << "," << s.s;
            if constexpr (std::is_same_v<T, EmpiricalDraws>)
                out << "empirical[" << s.weights.size() << "]";
            if constexpr (std::is_same_v<T, PoissonPcrDraws>)
                out << "pcr:" << s.alpha << "," << s.lambda;
        },
        v_);
    return out.str();
}

DrawCounts sample_counts(std::size_t m, const SamplingSpec& spec, RandomStream& rng) {
    if (m == 0) throw std::invalid_argument("sample_counts: M must be >= 1");
    DrawCounts d;
    d.counts.resize(m);
    for (auto& c : d.counts) {
        c = static_cast<std::uint32_t>(spec.sample(rng));
        d.total += c;
    }
    return d;
}

std::vector<double> load_empirical_weights(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::vector<double> w;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        w.push_back(std::stod(line));
    }
    return w;
}

}  // namespace dnastore
