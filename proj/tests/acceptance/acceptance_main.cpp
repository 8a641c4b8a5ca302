// Acceptance suite: one numbered criterion per function, every tolerance
// pinned in code, one PASS/FAIL line per criterion on stdout.  All runs are
// driven by a fixed master seed and write canonical artifacts so criterion 13
// can check byte-identical reproducibility end to end.
//
//   acceptance            runs every criterion
//   acceptance --only N   runs criterion N (exit 0 pass, 1 fail)
//   acceptance --outdir D artifact directory (default: acceptance_out)

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "dnastore/capacity.hpp"
#include "dnastore/harness.hpp"

using namespace dnastore;

namespace {

constexpr std::uint64_t kMasterSeed = 20220901;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string artifact;  // canonical text, compared byte-for-byte by criterion 13

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::string fmt(double v, int prec = 10) {
    std::ostringstream out;
    out.precision(prec);
    out << v;
    return out.str();
}

// ---- criterion 1: closed-form arithmetic vs the published numbers ----
Outcome criterion1() {
    Outcome r;
    std::ostringstream art;
    const double fractions[3] = {0.632, 0.865, 0.950};
    for (int lambda = 1; lambda <= 3; ++lambda) {
        const auto pair = tradeoff_region(lambda, 5.0);
        const double frac = pair.storage / (1.0 - 1.0 / 5.0);
        art << "tradeoff_fraction lambda=" << lambda << " " << fmt(frac) << "\n";
        r.require(std::abs(frac - fractions[lambda - 1]) <= 0.001,
                  "tradeoff fraction at lambda=" + std::to_string(lambda));
    }
    const auto opt100 = optimal_coverage(100.0, 5.0);
    const auto opt10k = optimal_coverage(10000.0, 5.0);
    art << "lambda_star q=100 " << fmt(opt100.lambda) << "\n";
    art << "lambda_star q=10000 " << fmt(opt10k.lambda) << "\n";
    r.require(std::abs(opt100.lambda - 4.7) <= 0.1, "lambda* for q=100");
    r.require(std::abs(opt10k.lambda - 9.2) <= 0.1, "lambda* for q=10000");

    const double torn = cap_torn_geometric(1.0).rate;
    art << "torn_geometric beta=1 " << fmt(torn, 17) << "\n";
    r.require(std::abs(torn - std::exp(-1.0)) <= 1e-12, "torn-paper capacity at beta=1");

    const double unif = cap_torn_uniform(2.0).rate;
    art << "torn_uniform gamma=2 " << fmt(unif, 17) << "\n";
    r.require(unif == 0.25, "uniform tearing gamma=2 is exactly 0.25");

    r.artifact = art.str();
    if (r.pass)
        r.note("fractions " + fmt(tradeoff_region(1, 5).storage / 0.8, 4) + "/" +
               fmt(tradeoff_region(2, 5).storage / 0.8, 4) + "/" +
               fmt(tradeoff_region(3, 5).storage / 0.8, 4) + ", lambda* " +
               fmt(opt100.lambda, 3) + "/" + fmt(opt10k.lambda, 3));
    return r;
}

// ---- criterion 2: full-rank frequency of fair-coin matrices ----
Outcome criterion2() {
    Outcome r;
    RandomStream master(kMasterSeed, "acceptance/rank");
    auto rng1 = master.derive("square");
    const double f_square = rank_probe(100, 0.0, 10000, rng1);
    auto rng2 = master.derive("tall");
    const double f_tall = rank_probe(200, 0.2, 2000, rng2);
    r.artifact = "rank_square " + fmt(f_square) + "\nrank_tall " + fmt(f_tall) + "\n";
    r.require(std::abs(f_square - 0.28879) <= 0.02, "square full-rank frequency vs 0.28879");
    r.require(f_tall >= 0.999, "(1-0.2)B x B full-rank frequency");
    r.note("square " + fmt(f_square, 5) + ", tall " + fmt(f_tall, 5));
    return r;
}

// exhaustive I(X; Y_1..Y_n) for the multi-draw BSC, independent of the
// production formula
double mi_oracle(double p, int n) {
    const int outputs = 1 << n;
    double mi = 0.0;
    for (int y = 0; y < outputs; ++y) {
        double joint[2];
        for (int x = 0; x < 2; ++x) {
            double prob = 0.5;
            for (int i = 0; i < n; ++i) prob *= ((y >> i) & 1) == x ? 1.0 - p : p;
            joint[x] = prob;
        }
        const double py = joint[0] + joint[1];
        for (int x = 0; x < 2; ++x)
            if (joint[x] > 0) mi += joint[x] * std::log2(joint[x] / (0.5 * py));
    }
    return mi;
}

// ---- criterion 3: multi-draw BSC capacity formula vs the MI oracle ----
Outcome criterion3() {
    Outcome r;
    std::ostringstream art;
    double worst = 0.0;
    for (double p : {0.01, 0.05, 0.1, 0.2}) {
        for (int n = 1; n <= 4; ++n) {
            const double formula = multi_draw_bsc_capacity(p, n);
            const double oracle = mi_oracle(p, n);
            worst = std::max(worst, std::abs(formula - oracle));
            art << "c_pn p=" << p << " n=" << n << " " << fmt(formula, 15) << "\n";
            r.require(std::abs(formula - oracle) <= 1e-9,
                      "formula vs oracle at p=" + fmt(p, 3) + " n=" + std::to_string(n));
        }
        r.require(std::abs(multi_draw_bsc_capacity(p, 1) - (1.0 - binary_entropy(p))) <= 1e-12,
                  "n=1 equals 1-H(p) at p=" + fmt(p, 3));
    }
    r.artifact = art.str();
    r.note("max |formula - oracle| = " + fmt(worst, 3));
    return r;
}

// ---- criterion 4: two-form agreement and single-draw reductions ----
Outcome criterion4() {
    Outcome r;
    std::ostringstream art;
    for (double lambda : {0.5, 1.0, 2.0, 4.0}) {
        const auto spec = SamplingSpec::poisson(lambda);
        for (double p : {0.01, 0.1, 0.3}) {
            for (double beta : {2.0, 5.0, 10.0}) {
                const double closed = cap_multi_bec(spec, p, beta).rate;
                const double series = cap_multi_bec_series(spec, p, beta).rate;
                art << "bec lambda=" << lambda << " p=" << p << " beta=" << beta << " "
                    << fmt(closed, 15) << "\n";
                r.require(std::abs(closed - series) <= 1e-9,
                          "series vs closed at lambda=" + fmt(lambda, 3) + " p=" + fmt(p, 3) +
                              " beta=" + fmt(beta, 3));
            }
        }
    }
    for (double q : {0.0, 0.2, 0.5}) {
        for (double p : {0.0, 0.05, 0.2}) {
            const double multi = cap_multi_bec(SamplingSpec::single_draw(q), p, 5.0).rate;
            const double single = cap_bec(q, p, 5.0).rate;
            r.require(std::abs(multi - single) <= 1e-12, "BEC single-draw reduction");
            if (p < 0.5) {
                const double multib =
                    cap_multi_bsc(SamplingSpec::empirical({q, 1.0 - q}), p, 5.0).rate;
                const double singleb = cap_bsc(q, p, 5.0).rate;
                r.require(std::abs(multib - singleb) <= 1e-12, "BSC single-draw reduction");
            }
        }
    }
    r.artifact = art.str();
    return r;
}

// ---- criterion 5: histogram counting vs brute-force enumeration ----
Outcome criterion5() {
    Outcome r;
    std::ostringstream art;
    for (int a = 1; a <= 5; ++a) {
        for (int b = 0; b <= 5; ++b) {
            // enumerate all vectors in Z+^a with 1-norm b
            std::uint64_t count = 0;
            std::vector<int> v(a, 0);
            while (true) {
                int sum = 0;
                for (int x : v) sum += x;
                if (sum == b) ++count;
                int i = 0;
                while (i < a && v[i] == b) v[i++] = 0;
                if (i == a) break;
                ++v[i];
            }
            art << "T[" << a << "," << b << "] " << count_multisets(a, b).str() << "\n";
            r.require(count_multisets(a, b) == count,
                      "T[" + std::to_string(a) + "," + std::to_string(b) + "]");
        }
    }
    r.artifact = art.str();
    return r;
}

// shared index-codec runner that freezes the records as the artifact
Outcome run_phase_point(const IndexCodecExperiment& e, const std::string& label,
                        const RandomStream& master, double* success_rate) {
    Outcome r;
    const auto records = run_index_codec(e, master);
    const auto summary = summarize(records);
    *success_rate = summary.success_rate;
    r.artifact = label + "\n" + records_to_csv(records);
    return r;
}

// ---- criterion 6: noiseless index-codec phase transition ----
Outcome criterion6() {
    Outcome r;
    RandomStream master(kMasterSeed, "acceptance/phase");
    const double capacity = cap_noise_free(0.1, 4.0).rate;  // 0.675

    IndexCodecExperiment low;
    low.m = 256;
    low.l = 32;  // beta = 4
    low.outer = OuterCodeSpec{256, 208, 8};
    low.inner = InnerCodeSpec::none();
    low.sampling = SamplingSpec::single_draw(0.1);
    low.noise = NoiseSpec::identity();
    low.trials = 200;
    const auto lay_low = make_layout(low.m, low.l, low.outer, low.inner);
    const double rate_low = rate_of(lay_low, low.outer);

    IndexCodecExperiment high = low;
    high.outer = OuterCodeSpec{256, 254, 8};
    const auto lay_high = make_layout(high.m, high.l, high.outer, high.inner);
    const double rate_high = rate_of(lay_high, high.outer);

    double s_low = 0, s_high = 0;
    const auto o1 = run_phase_point(low, "below-capacity", master.derive("low"), &s_low);
    const auto o2 = run_phase_point(high, "above-capacity", master.derive("high"), &s_high);
    r.artifact = o1.artifact + o2.artifact;

    r.require(rate_low >= 0.9 * capacity, "configured rate reaches 0.9C");
    r.require(rate_high >= 1.1 * capacity, "configured rate reaches 1.1C");
    r.require(s_low >= 0.98, "success >= 98% at R = 0.9C");
    r.require(s_high <= 0.05, "success <= 5% at R = 1.1C");
    r.note("R=" + fmt(rate_low, 4) + " (0.9C=" + fmt(0.9 * capacity, 4) + "): success " +
           fmt(s_low, 4) + "; R=" + fmt(rate_high, 4) + " (1.1C=" + fmt(1.1 * capacity, 4) +
           "): success " + fmt(s_high, 4));
    return r;
}

// ---- criterion 7: BSC index codec at 0.8 * cap_bsc ----
//
// Stated configuration: M=256, beta=6 (L=48), p=0.01, a repetition/parity
// inner code, rate pinned at 0.8 * cap_bsc.  With the 6x6 parity product
// (the only parity shape that fits L=48) the payload is 28 bits/sequence, so
// any rate above 28/48 = 0.583 bits/symbol is unreachable, and
// 0.8 * cap_bsc(q, 0.01, 6) = 1.032 * (1-q) * 28/48 exceeds that ceiling for
// every q.  The criterion is therefore run faithfully at the smallest k_O
// whose rate clears the target and is expected to fail; the companion
// measurement below shows the honest rate the same construction does sustain.
Outcome criterion7() {
    Outcome r;
    RandomStream master(kMasterSeed, "acceptance/bsc-codec");
    const double q = 0.1, p = 0.01, beta = 6.0;
    const double capacity = cap_bsc(q, p, beta).rate;
    const double target = 0.8 * capacity;

    IndexCodecExperiment pinned;
    pinned.m = 256;
    pinned.l = 48;
    pinned.inner = InnerCodeSpec::parity_product(6, 6);
    pinned.sampling = SamplingSpec::single_draw(q);
    pinned.noise = NoiseSpec::bsc(p);
    pinned.trials = 200;
    // smallest k_O reaching the pinned rate: rate = 2 * 14 * k / (256 * 48)
    const int k_pinned = static_cast<int>(std::ceil(target * 256.0 * 48.0 / 28.0));
    pinned.outer = OuterCodeSpec{256, k_pinned, 14};
    const double rate_pinned = rate_of(make_layout(256, 48, pinned.outer, pinned.inner),
                                       pinned.outer);

    double s_pinned = 0;
    const auto o1 =
        run_phase_point(pinned, "pinned-rate", master.derive("pinned"), &s_pinned);

    // companion: the same construction with the outer code sized from the
    // measured inner-failure rate (detected failures become erasures,
    // miscorrections substitutions), run at whatever rate that allows
    auto cal = master.derive("calibrate");
    std::size_t detected = 0, miscorrected = 0;
    const std::size_t probes = 20000;
    for (std::size_t i = 0; i < probes; ++i) {
        std::vector<std::uint8_t> data(36);
        for (auto& bit : data) bit = static_cast<std::uint8_t>(cal.below(2));
        const auto coded = pinned.inner.encode(data);
        Sequence noisy{coded};
        noisy = apply_noise(noisy, pinned.noise, Alphabet::binary(), cal);
        const auto dec = pinned.inner.decode(noisy.sym);
        if (dec.failed) ++detected;
        else if (dec.data != data) ++miscorrected;
    }
    const double f_detect = static_cast<double>(detected) / probes;
    const double f_mis = static_cast<double>(miscorrected) / probes;
    const double e_mean = 256.0 * (q + (1.0 - q) * f_detect);
    const double s_mean = 256.0 * (1.0 - q) * f_mis;
    const double sigma = std::sqrt(256.0 * (q + (1.0 - q) * (f_detect + f_mis)));
    const int budget = static_cast<int>(std::ceil(e_mean + 2.0 * s_mean + 5.0 * sigma));
    IndexCodecExperiment sized = pinned;
    sized.outer = OuterCodeSpec{256, 256 - budget, 14};
    const double rate_sized =
        rate_of(make_layout(256, 48, sized.outer, sized.inner), sized.outer);
    double s_sized = 0;
    const auto o2 = run_phase_point(sized, "measured-sizing", master.derive("sized"), &s_sized);
    r.artifact = o1.artifact + o2.artifact;

    r.require(rate_pinned >= target, "configured rate reaches 0.8 * cap_bsc");
    r.require(s_pinned >= 0.95, "end-to-end success >= 95% at the pinned rate");
    r.note("pinned R=" + fmt(rate_pinned, 4) + " (target " + fmt(target, 4) + "): success " +
           fmt(s_pinned, 4) + " | measured-sizing R=" + fmt(rate_sized, 4) + " (" +
           fmt(rate_sized / capacity, 3) + "C, inner fail " + fmt(f_detect, 3) + "+" +
           fmt(f_mis, 4) + "): success " + fmt(s_sized, 4));
    return r;
}

// ---- criterion 8: exhaustive linear-scheme decoder on the BEC ----
Outcome criterion8() {
    Outcome r;
    LinearCodecExperiment e;
    e.m = 2;
    e.l = 6;
    e.b = 8;
    e.num_messages = 64;
    e.epsilon = 0.1;
    e.sampling = SamplingSpec::poisson(2.0);
    e.noise = NoiseSpec::bec(0.2);
    e.trials = 100;
    const auto stats = run_linear_codec(e, RandomStream(kMasterSeed, "acceptance/linear"));
    const auto summary = summarize(stats.records);
    r.artifact = records_to_csv(stats.records);
    r.require(summary.success_rate >= 0.90, "correct decode >= 90%");
    r.require(stats.silent_wrong == 0, "zero silent wrong answers");

    // break successes down by how many of the two inputs were sampled at all
    std::size_t full[2] = {0, 0}, partial[2] = {0, 0};
    for (const auto& rec : stats.records) {
        const bool both = rec.metrics[4].second >= 2.0;
        ++(both ? full : partial)[0];
        (both ? full : partial)[1] += rec.success;
    }
    r.note("correct " + std::to_string(summary.successes) + "/100 (both inputs sampled: " +
           std::to_string(full[1]) + "/" + std::to_string(full[0]) + ", fewer: " +
           std::to_string(partial[1]) + "/" + std::to_string(partial[0]) + "), silent wrong " +
           std::to_string(stats.silent_wrong));
    return r;
}

// ---- criterion 9: incorrect-edge scaling ----
Outcome criterion9() {
    Outcome r;
    RandomStream master(kMasterSeed, "acceptance/edges");

    // per-pair consistency probability at L=8, p=0.1 over 1e6 sampled pairs
    // (the criterion leaves the probe length free; L=8 keeps the probability
    // large enough to resolve at this sample size)
    const double p = 0.1;
    const int l = 8;
    const double predicted = std::pow(1.0 - 0.5 * (1.0 - p) * (1.0 - p), l);
    auto rng = master.derive("pairs");
    const auto bin = Alphabet::binary();
    std::size_t hits = 0;
    const std::size_t pairs = 1000000;
    for (std::size_t i = 0; i < pairs; ++i) {
        const auto a = apply_noise(Sequence::random(l, bin, rng), NoiseSpec::bec(p), bin, rng);
        const auto b = apply_noise(Sequence::random(l, bin, rng), NoiseSpec::bec(p), bin, rng);
        hits += consistent_reads(a, b, bin);
    }
    const double observed = static_cast<double>(hits) / static_cast<double>(pairs);
    const double sigma = std::sqrt(predicted * (1.0 - predicted) / static_cast<double>(pairs));
    r.require(std::abs(observed - predicted) <= 3.0 * sigma,
              "pair consistency " + fmt(observed, 6) + " vs " + fmt(predicted, 6));

    // mean incorrect edges at (p=0.1, beta=5, M=64, Poisson(2)) stays under
    // M^(2 - gamma + 0.5)
    EdgeProbeExperiment probe;
    probe.m = 64;
    probe.beta = 5.0;
    probe.p = 0.1;
    probe.sampling = SamplingSpec::poisson(2.0);
    probe.trials = 100;
    const auto records = run_edge_probe(probe, master.derive("graph"));
    double mean_incorrect = 0;
    for (const auto& rec : records) mean_incorrect += rec.metrics[0].second;
    mean_incorrect /= static_cast<double>(records.size());
    const double gamma = cluster_gamma(probe.p, probe.beta);
    const double bound = std::pow(64.0, 2.0 - gamma + 0.5);
    r.require(mean_incorrect <= bound, "mean incorrect edges " + fmt(mean_incorrect, 6) +
                                           " vs bound " + fmt(bound, 6));
    r.artifact = "pair_consistency " + fmt(observed, 10) + "\n" + records_to_csv(records);
    r.note("pair consistency " + fmt(observed, 5) + " (predicted " + fmt(predicted, 5) +
           "), mean incorrect edges " + fmt(mean_incorrect, 4) + " <= " + fmt(bound, 4));
    return r;
}

// ---- criterion 10: clique-partition count <= 2^U on every graph with <= 5 vertices ----
Outcome criterion10() {
    Outcome r;
    std::ostringstream art;
    for (std::size_t n = 1; n <= 5; ++n) {
        const int max_edges = static_cast<int>(n * (n - 1) / 2);
        for (std::uint32_t mask = 0; mask < (1u << max_edges); ++mask) {
            ConsistencyGraph g;
            g.n = n;
            g.adj.assign(n, std::vector<bool>(n, false));
            int bit = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b, ++bit)
                    if (mask & (1u << bit)) {
                        g.adj[a][b] = g.adj[b][a] = true;
                        ++g.edge_count;
                    }
            std::size_t count = 0;
            enumerate_clique_partitions(g, n, [&](const auto&) { ++count; });
            if (boost::multiprecision::cpp_int(count) > clustering_count_bound(g)) {
                r.require(false, "bound violated on n=" + std::to_string(n) +
                                     " mask=" + std::to_string(mask));
            }
            if (n == 5 && mask % 128 == 0)
                art << "n5 mask=" << mask << " partitions=" << count << "\n";
        }
    }
    r.artifact = art.str();
    r.note("all graphs on <= 5 vertices respect the 2^U bound");
    return r;
}

// ---- criterion 11: torn-paper coverage at beta = 1 ----
Outcome criterion11() {
    Outcome r;
    TornCoverageExperiment e;
    e.n = 1 << 20;
    e.spec = TornSpec::geometric(1.0 / 20.0);  // beta = 1: p_n = 1 / log2 n
    e.trials = 200;
    const auto records = run_torn_coverage(e, RandomStream(kMasterSeed, "acceptance/torn"));
    double mean = 0;
    for (const auto& rec : records) mean += rec.metrics[0].second;
    mean /= static_cast<double>(records.size());
    const double expected = 2.0 * std::exp(-1.0);
    r.artifact = records_to_csv(records);
    r.require(std::abs(mean - expected) <= 0.02,
              "coverage " + fmt(mean, 6) + " vs " + fmt(expected, 6) + " +/- 0.02");
    r.note("mean coverage " + fmt(mean, 5) + " (target " + fmt(expected, 5) + " +/- 0.02)");
    return r;
}

// ---- criterion 12: cluster-then-reconstruct pipeline ----
Outcome criterion12() {
    Outcome r;
    ClusterPipelineExperiment e;  // M=100, L=100, quaternary, Poisson(5), QSC(0.03)
    e.trials = 20;
    auto records = run_cluster_pipeline(e, RandomStream(kMasterSeed, "acceptance/cluster"));
    double accuracy = 0, exact = 0;
    for (auto& rec : records) {
        accuracy += rec.metrics[2].second;
        exact += rec.metrics[3].second;
        rec.metrics.pop_back();  // runtime_ms is wall-clock, not channel output
    }
    accuracy /= static_cast<double>(records.size());
    exact /= static_cast<double>(records.size());
    r.artifact = records_to_csv(records);
    r.require(accuracy >= 0.95, "pairwise clustering accuracy >= 0.95");
    r.require(exact >= 0.95, "exact reconstruction >= 0.95");
    r.note("accuracy " + fmt(accuracy, 5) + ", exact " + fmt(exact, 5));
    return r;
}

using CriterionFn = std::function<Outcome()>;

struct Criterion {
    int id;
    std::string name;
    CriterionFn run;
};

std::vector<Criterion> criteria();

// ---- criterion 13: byte-identical artifacts across two runs ----
Outcome criterion13(const std::string& outdir) {
    Outcome r;
    for (const auto& c : criteria()) {
        if (c.id == 13) continue;
        const auto first = c.run();
        const auto second = c.run();
        const auto path1 = outdir + "/c" + std::to_string(c.id) + "_run1.txt";
        const auto path2 = outdir + "/c" + std::to_string(c.id) + "_run2.txt";
        write_text(path1, first.artifact);
        write_text(path2, second.artifact);
        r.require(first.artifact == second.artifact,
                  "criterion " + std::to_string(c.id) + " artifacts differ between runs");
    }
    if (r.pass) r.note("all criterion artifacts byte-identical across two runs");
    return r;
}

std::string g_outdir = "acceptance_out";

std::vector<Criterion> criteria() {
    return {
        {1, "capacity arithmetic vs published numbers", criterion1},
        {2, "full-rank frequency of coin matrices", criterion2},
        {3, "multi-draw BSC formula vs MI oracle", criterion3},
        {4, "two-form agreement and single-draw reductions", criterion4},
        {5, "multiset counting vs enumeration", criterion5},
        {6, "noiseless index-codec phase transition", criterion6},
        {7, "BSC index codec at 0.8 * cap_bsc", criterion7},
        {8, "exhaustive linear decoder on the BEC", criterion8},
        {9, "incorrect-edge scaling probe", criterion9},
        {10, "clique-partition bound on small graphs", criterion10},
        {11, "torn-paper coverage at beta = 1", criterion11},
        {12, "cluster-reconstruct pipeline", criterion12},
        {13, "byte-identical reruns", [] { return criterion13(g_outdir); }},
    };
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
        if (std::strcmp(argv[i], "--outdir") == 0 && i + 1 < argc) g_outdir = argv[++i];
    }
    std::filesystem::create_directories(g_outdir);

    bool all_pass = true;
    for (const auto& c : criteria()) {
        if (only != 0 && c.id != only) continue;
        const auto outcome = c.run();
        write_text(g_outdir + "/c" + std::to_string(c.id) + ".txt", outcome.artifact);
        std::cout << "[" << (c.id < 10 ? " " : "") << c.id << "] "
                  << (outcome.pass ? "PASS" : "FAIL") << " " << c.name
                  << (outcome.detail.empty() ? "" : " — " + outcome.detail) << std::endl;
        all_pass &= outcome.pass;
    }
    return all_pass ? 0 : 1;
}
