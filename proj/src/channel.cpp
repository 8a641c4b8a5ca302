#include "dnastore/channel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dnastore {

namespace {

void check_prob(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(what) + " must be in [0,1]");
}

}  // namespace

NoiseSpec::NoiseSpec(Variant v) : v_(std::move(v)) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, BscNoise> || std::is_same_v<T, BecNoise> ||
                          std::is_same_v<T, QscNoise>) {
                check_prob(s.p, "noise p");
            } else if constexpr (std::is_same_v<T, IndelSubNoise>) {
                check_prob(s.p_ins, "p_ins");
                check_prob(s.p_del, "p_del");
                check_prob(s.p_sub, "p_sub");
                if (s.p_ins + s.p_del + s.p_sub > 1.0)
                    throw std::invalid_argument("p_ins + p_del + p_sub must be <= 1");
            }
        },
        v_);
}

std::string NoiseSpec::describe() const {
    std::ostringstream out;
    std::visit(
        [&out](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, IdentityNoise>) out << "identity";
            if constexpr (std::is_same_v<T, BscNoise>) out << "bsc:" << s.p;
            if constexpr (std::is_same_v<T, BecNoise>) out << "bec:" << s.p;
            if constexpr (std::is_same_v<T, QscNoise>) out << "qsc:" << s.p;
            if constexpr (std::is_same_v<T, IndelSubNoise>)
                out << "indel:" << s.p_ins << "," << s.p_del << "," << s.p_sub;
        },
        v_);
    return out.str();
}

Sequence apply_noise(const Sequence& seq, const NoiseSpec& spec, const Alphabet& a,
                     RandomStream& rng) {
    if (seq.has_erasure(a)) throw std::invalid_argument("channel input contains erasures");
    return std::visit(
        [&](const auto& s) -> Sequence {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, IdentityNoise>) {
                return seq;
            } else if constexpr (std::is_same_v<T, BscNoise>) {
                if (a.size() != 2) throw std::invalid_argument("BSC requires a binary alphabet");
                Sequence out = seq;
                for (auto& x : out.sym)
                    if (rng.bernoulli(s.p)) x ^= 1;
                return out;
            } else if constexpr (std::is_same_v<T, BecNoise>) {
                Sequence out = seq;
                for (auto& x : out.sym)
                    if (rng.bernoulli(s.p)) x = a.erasure();
                return out;
            } else if constexpr (std::is_same_v<T, QscNoise>) {
                if (a.size() != 4)
                    throw std::invalid_argument("QSC requires the quaternary alphabet");
                Sequence out = seq;
                for (auto& x : out.sym) {
                    if (rng.bernoulli(s.p)) {
                        const auto shift = 1 + rng.below(3);
                        x = static_cast<std::uint8_t>((x + shift) % 4);
                    }
                }
                return out;
            } else if constexpr (std::is_same_v<T, IndelSubNoise>) {
                Sequence out;
                out.sym.reserve(seq.size() + 4);
                const double sub_given_kept =
                    s.p_del < 1.0 ? s.p_sub / (1.0 - s.p_del) : 0.0;
                for (std::size_t i = 0; i <= seq.size(); ++i) {
                    while (s.p_ins > 0 && rng.bernoulli(s.p_ins))
                        out.sym.push_back(static_cast<std::uint8_t>(rng.below(a.size())));
                    if (i == seq.size()) break;
                    if (rng.bernoulli(s.p_del)) continue;
                    std::uint8_t x = seq[i];
                    if (rng.bernoulli(sub_given_kept)) {
                        const auto shift = 1 + rng.below(a.size() - 1);
                        x = static_cast<std::uint8_t>((x + shift) % a.size());
                    }
                    out.sym.push_back(x);
                }
                return out;
            }
        },
        spec.variant());
}

ChannelTrace transmit(const ReadPool& pool, const SamplingSpec& sampling,
                      const NoiseSpec& noise, RandomStream& rng) {
    pool.require_fixed_length();
    ChannelTrace trace;
    trace.input = pool;

    trace.draws = sample_counts(pool.size(), sampling, rng);

    std::vector<std::uint32_t> slots;
    slots.reserve(trace.draws.total);
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::uint32_t c = 0; c < trace.draws.counts[i]; ++c)
            slots.push_back(static_cast<std::uint32_t>(i));
    rng.shuffle(slots);

    trace.origin = slots;
    trace.output.alphabet = pool.alphabet;
    trace.output.ordered = false;
    trace.output.reads.reserve(slots.size());
    for (auto src : slots)
        trace.output.reads.push_back(apply_noise(pool.reads[src], noise, pool.alphabet, rng));
    return trace;
}

namespace {

std::uint64_t draw_fragment_length(const TornSpec& spec, std::uint64_t n, RandomStream& rng) {
    return std::visit(
        [&](const auto& law) -> std::uint64_t {
            using T = std::decay_t<decltype(law)>;
            if constexpr (std::is_same_v<T, GeometricTear>) {
                if (!(law.p >= 0.0 && law.p <= 1.0))
                    throw std::invalid_argument("tearing probability must be in [0,1]");
                if (law.p == 0.0) return n;  // no tearing points at all
                return rng.geometric1(law.p);
            } else if constexpr (std::is_same_v<T, FixedTear>) {
                if (law.len < 1) throw std::invalid_argument("fixed fragment length must be >= 1");
                return law.len;
            } else {
                if (law.gamma < 1.0) throw std::domain_error("uniform tearing requires gamma >= 1");
                const auto top = static_cast<std::uint64_t>(
                    std::llround(law.gamma * std::log2(static_cast<double>(n))));
                return rng.below(top + 1);  // length 0 allowed, contributes nothing
            }
        },
        spec.length_law);
}

double deletion_prob(const TornSpec& spec, std::uint64_t len, double log2n) {
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ZeroDeletion>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, ConstDeletion>) {
                return std::min(1.0, d.eps / log2n);
            } else {
                const double xi = static_cast<double>(len) / log2n;
                return std::min(1.0, std::exp(-d.gamma_d * xi) / log2n);
            }
        },
        spec.deletion);
}

}  // namespace

std::vector<Sequence> tear(const Sequence& seq, const TornSpec& spec, RandomStream& rng) {
    if (seq.size() < 1) throw std::invalid_argument("torn-paper input must be non-empty");
    std::vector<Sequence> fragments;
    std::size_t pos = 0;
    while (pos < seq.size()) {
        std::uint64_t len = draw_fragment_length(spec, seq.size(), rng);
        if (len == 0) continue;
        len = std::min<std::uint64_t>(len, seq.size() - pos);
        Sequence frag;
        frag.sym.assign(seq.sym.begin() + pos, seq.sym.begin() + pos + len);
        fragments.push_back(std::move(frag));
        pos += len;
    }
    return fragments;
}

ReadPool torn_transmit(const Sequence& seq, const TornSpec& spec, const Alphabet& a,
                       RandomStream& rng) {
    const auto fragments = tear(seq, spec, rng);
    const double log2n = std::log2(static_cast<double>(seq.size()));

    ReadPool out;
    out.alphabet = a;
    out.ordered = false;
    for (const auto& f : fragments) {
        const double d = deletion_prob(spec, f.size(), log2n);
        if (d > 0 && rng.bernoulli(d)) continue;
        out.reads.push_back(f);
    }
    std::vector<std::uint32_t> perm(out.reads.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::uint32_t>(i);
    rng.shuffle(perm);
    std::vector<Sequence> shuffled;
    shuffled.reserve(out.reads.size());
    for (auto i : perm) shuffled.push_back(std::move(out.reads[i]));
    out.reads = std::move(shuffled);
    return out;
}

FragmentStats fragment_stats(const ReadPool& fragments, std::uint64_t n) {
    const double log2n = std::log2(static_cast<double>(n));
    std::uint64_t covered = 0, count = 0;
    for (const auto& f : fragments.reads) {
        if (static_cast<double>(f.size()) >= log2n) {
            covered += f.size();
            ++count;
        }
    }
    FragmentStats stats;
    stats.coverage_frac_long = static_cast<double>(covered) / static_cast<double>(n);
    stats.reorder_cost_est =
        count > 0 ? static_cast<double>(count) * std::log2(static_cast<double>(count)) /
                        static_cast<double>(n)
                  : 0.0;
    return stats;
}

}  // namespace dnastore
