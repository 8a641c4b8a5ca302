#include <cmath>
#include <set>

#include "dnastore/channel.hpp"
#include "dnastore/codec_linear.hpp"
#include "doctest.h"

using namespace dnastore;

TEST_CASE("codebook generation") {
    RandomStream rng(51, "linear");
    const auto cb = gen_codebook(2, 6, 8, 64, rng);
    CHECK(cb.g.rows() == 12);
    CHECK(cb.g.cols() == 8);
    CHECK(cb.tags.size() == 64);
    // tags are distinct
    std::set<std::vector<std::uint64_t>> tags(cb.tags.begin(), cb.tags.end());
    CHECK(tags.size() == 64);

    // reproducible given equal seeds
    RandomStream rng2(51, "linear");
    const auto cb2 = gen_codebook(2, 6, 8, 64, rng2);
    CHECK(format_pool(cb.codeword(7)) == format_pool(cb2.codeword(7)));
}

TEST_CASE("linearity: G(t xor t') = Gt xor Gt'") {
    RandomStream rng(52, "linear");
    const auto g = BinaryMatrix::random(24, 10, rng);
    const std::vector<std::uint64_t> t1{rng.next_u64() & 0x3ff};
    const std::vector<std::uint64_t> t2{rng.next_u64() & 0x3ff};
    const std::vector<std::uint64_t> tx{t1[0] ^ t2[0]};
    const auto y1 = g.multiply(t1);
    const auto y2 = g.multiply(t2);
    const auto yx = g.multiply(tx);
    CHECK(yx[0] == (y1[0] ^ y2[0]));
}

TEST_CASE("consistency predicate") {
    const auto bin = Alphabet::binary();
    CHECK(consistent_reads(Sequence::parse("0?1", bin), Sequence::parse("001", bin), bin));
    CHECK(consistent_reads(Sequence::parse("0?1", bin), Sequence::parse("011", bin), bin));
    CHECK_FALSE(consistent_reads(Sequence::parse("001", bin), Sequence::parse("011", bin), bin));
    CHECK_THROWS(consistent_reads(Sequence::parse("01", bin), Sequence::parse("011", bin), bin));
}

TEST_CASE("consistency graph") {
    const auto bin = Alphabet::binary();
    ReadPool pool;
    pool.alphabet = bin;
    pool.reads = {Sequence::parse("0?1", bin), Sequence::parse("001", bin),
                  Sequence::parse("011", bin)};
    const auto g = build_graph(pool);
    CHECK(g.edge_count == 2);  // 0-1 and 0-2; 1-2 conflicts
    CHECK(g.adj[0][1]);
    CHECK(g.adj[0][2]);
    CHECK_FALSE(g.adj[1][2]);

    // identical reads form a complete graph
    ReadPool same;
    same.alphabet = bin;
    same.reads.assign(4, Sequence::parse("0101", bin));
    CHECK(build_graph(same).edge_count == 6);
}

TEST_CASE("consensus of consistent reads") {
    const auto bin = Alphabet::binary();
    const auto a = Sequence::parse("0?1", bin);
    const auto b = Sequence::parse("?01", bin);
    const auto c = Sequence::parse("00?", bin);
    CHECK(consensus_erasure({&a, &b, &c}, bin).to_string(bin) == "001");
    CHECK(consensus_erasure({&a}, bin).to_string(bin) == "0?1");
    const auto bad = Sequence::parse("011", bin);
    CHECK_THROWS_AS(consensus_erasure({&b, &bad}, bin), std::logic_error);
}

TEST_CASE("consensus residual erasure rate concentrates at p^2") {
    const auto bin = Alphabet::binary();
    RandomStream rng(53, "consensus");
    std::size_t erased = 0, total = 0;
    for (int c = 0; c < 20000; ++c) {
        const auto src = Sequence::random(5, bin, rng);
        auto r1 = apply_noise(src, NoiseSpec::bec(0.3), bin, rng);
        auto r2 = apply_noise(src, NoiseSpec::bec(0.3), bin, rng);
        const auto merged = consensus_erasure({&r1, &r2}, bin);
        for (auto s : merged.sym) erased += s == bin.erasure();
        total += merged.size();
    }
    CHECK(std::abs(static_cast<double>(erased) / static_cast<double>(total) - 0.09) < 0.005);
}

TEST_CASE("clique partition enumeration and the 2^U bound") {
    auto graph_from_edges = [](std::size_t n, std::vector<std::pair<int, int>> edges) {
        ConsistencyGraph g;
        g.n = n;
        g.adj.assign(n, std::vector<bool>(n, false));
        for (auto [a, b] : edges) {
            g.adj[a][b] = g.adj[b][a] = true;
            ++g.edge_count;
        }
        return g;
    };
    auto count_partitions = [](const ConsistencyGraph& g) {
        std::size_t count = 0;
        enumerate_clique_partitions(g, g.n, [&](const auto&) { ++count; });
        return count;
    };

    // empty graph on 3 vertices: only singletons
    const auto empty3 = graph_from_edges(3, {});
    CHECK(count_partitions(empty3) == 1);
    CHECK(clustering_count_bound(empty3) == 1);

    // triangle: 5 partitions into cliques, bound 8
    const auto triangle = graph_from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(count_partitions(triangle) == 5);
    CHECK(clustering_count_bound(triangle) == 8);

    // path a-b-c: {ab|c}, {bc|a}, {a|b|c}; abc is not a clique
    const auto path = graph_from_edges(3, {{0, 1}, {1, 2}});
    CHECK(count_partitions(path) == 3);
    CHECK(clustering_count_bound(path) == 4);

    // the bound grows as exactly 2^U
    ConsistencyGraph big;
    big.n = 0;
    big.edge_count = 100;
    CHECK(clustering_count_bound(big) == (boost::multiprecision::cpp_int(1) << 100));
}

TEST_CASE("exhaustive partition count never exceeds 2^U on all 5-vertex graphs") {
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        ConsistencyGraph g;
        g.n = 5;
        g.adj.assign(5, std::vector<bool>(5, false));
        int bit = 0;
        for (int a = 0; a < 5; ++a) {
            for (int b = a + 1; b < 5; ++b, ++bit) {
                if (mask & (1u << bit)) {
                    g.adj[a][b] = g.adj[b][a] = true;
                    ++g.edge_count;
                }
            }
        }
        std::size_t count = 0;
        enumerate_clique_partitions(g, 5, [&](const auto&) { ++count; });
        CHECK(boost::multiprecision::cpp_int(count) <= clustering_count_bound(g));
    }
}

TEST_CASE("noiseless exhaustive decode returns the sent message") {
    RandomStream rng(54, "decode");
    for (int t = 0; t < 20; ++t) {
        auto trial = rng.derive(t);
        const auto cb = gen_codebook(2, 6, 8, 64, trial);
        const auto sent = trial.below(64);
        const auto pool = cb.codeword(sent);
        const auto trace = transmit(pool, SamplingSpec::fixed(1), NoiseSpec::identity(), trial);
        const auto res = decode_linear(trace.output, cb, 0.0, 0.1);
        CHECK(res.status == LinearDecodeStatus::Decoded);
        CHECK(res.message_index == sent);
    }
}

TEST_CASE("undersized equation systems are flagged, not decoded") {
    RandomStream rng(55, "decode");
    const auto cb = gen_codebook(2, 6, 10, 4, rng);
    const auto pool = cb.codeword(2);
    // erase everything: zero equations survive, so every tag fits
    ReadPool hollow = pool;
    hollow.ordered = false;
    for (auto& read : hollow.reads)
        for (std::size_t i = 0; i < read.size(); ++i) read[i] = Alphabet::binary().erasure();
    const auto res = decode_linear(hollow, cb, 0.0, 0.1);
    CHECK(res.max_equations < 10);
    CHECK(res.status == LinearDecodeStatus::Underdetermined);
}

TEST_CASE("failure frequency jumps when the rate crosses capacity") {
    // tiny-instance union-bound probe: same channel, rate 0.33 vs 0.92
    // against the single-draw BEC limit 1 - p - 1/beta = 0.733
    auto run = [](int b, std::size_t messages, std::uint64_t seed) {
        RandomStream master(seed, "union-bound");
        int failures = 0;
        const int trials = 500;
        for (int t = 0; t < trials; ++t) {
            auto rng = master.derive(t);
            const auto cb = gen_codebook(2, 6, b, messages, rng);
            const auto sent = rng.below(messages);
            const auto trace =
                transmit(cb.codeword(sent), SamplingSpec::fixed(1), NoiseSpec::bec(0.1), rng);
            const auto res = decode_linear(trace.output, cb, 0.0, 0.1);
            failures += !(res.status == LinearDecodeStatus::Decoded && res.message_index == sent);
        }
        return failures;
    };
    const int below = run(8, 16, 57);     // R = 4/12
    const int above = run(11, 2048, 58);  // R = 11/12 > 1.2 * 0.733
    CHECK(above >= 5 * std::max(below, 1));
}

TEST_CASE("bec decode success rate at a rate below capacity") {
    // M=2, L=6, B=8, rate 1/2 against the asymptotic limit 1-p-1/beta = 0.633.
    // At ML = 12 the union bound 2^{ML(R-C)} only promises failure < 2^{-1.6},
    // and rank-deficient 12x8 coin matrices are common, so the measured rate
    // sits near 0.7 rather than the asymptotic 1.  Soundness (no silent wrong
    // answers) is the exact property; see also the acceptance suite.
    RandomStream master(56, "bec-trials");
    int success = 0, silent_wrong = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
        auto rng = master.derive(t);
        const auto cb = gen_codebook(2, 6, 8, 64, rng);
        const auto sent = rng.below(64);
        const auto pool = cb.codeword(sent);
        const auto trace = transmit(pool, SamplingSpec::fixed(1), NoiseSpec::bec(0.2), rng);
        const auto res = decode_linear(trace.output, cb, 0.0, 0.1);
        if (res.status == LinearDecodeStatus::Decoded) {
            if (res.message_index == sent) ++success;
            else ++silent_wrong;
        }
    }
    CHECK(success >= 65);
    CHECK(silent_wrong == 0);
}
