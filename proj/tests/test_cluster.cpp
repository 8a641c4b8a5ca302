#include <cmath>
#include <map>

#include "dnastore/channel.hpp"
#include "dnastore/cluster.hpp"
#include "doctest.h"

using namespace dnastore;

TEST_CASE("randomize / derandomize") {
    const auto dna = Alphabet::dna();
    RandomStream rng(61, "mask");
    SUBCASE("derandomize(randomize(x)) is the identity") {
        for (int round = 0; round < 50; ++round) {
            ReadPool pool;
            pool.alphabet = dna;
            for (int i = 0; i < 20; ++i) pool.reads.push_back(Sequence::random(30, dna, rng));
            const std::uint64_t seed = rng.next_u64();
            const auto back = derandomize(randomize(pool, seed), seed);
            CHECK(format_pool(back) == format_pool(pool));
        }
    }
    SUBCASE("the all-zero pool maps to the mask itself and looks uniform") {
        ReadPool zeros;
        zeros.alphabet = dna;
        for (int i = 0; i < 2500; ++i) zeros.reads.push_back(Sequence::zeros(400));
        const auto masked = randomize(zeros, 1234);
        std::size_t counts[4] = {0, 0, 0, 0};
        for (const auto& r : masked.reads)
            for (auto s : r.sym) ++counts[s];
        const double n = 2500.0 * 400.0;  // 1e6 symbols
        for (auto c : counts)
            CHECK(std::abs(c - n / 4) < 3.0 * std::sqrt(n * 0.25 * 0.75));
        // slot-wise inversion recovers the zeros
        CHECK(derandomize_one(masked.reads[7], dna, 1234, 7) == Sequence::zeros(400));
    }
    SUBCASE("erasures pass through unchanged") {
        ReadPool pool;
        pool.alphabet = dna;
        pool.reads.push_back(Sequence::parse("A?G?", dna));
        const auto masked = randomize(pool, 99);
        CHECK(masked.reads[0][1] == dna.erasure());
        CHECK(masked.reads[0][3] == dna.erasure());
    }
}

TEST_CASE("k-mer shingles") {
    const auto dna = Alphabet::dna();
    const auto acgt = Sequence::parse("ACGT", dna);
    const auto set = kmer_shingles(acgt, 2, dna);
    CHECK(set.size() == 3);  // {AC, CG, GT}
    CHECK(kmer_shingles(Sequence::parse("AAAA", dna), 2, dna).size() == 1);
    CHECK(kmer_shingles(Sequence::parse("ACG", dna), 4, dna).empty());
}

TEST_CASE("minhash behaves like a Jaccard estimator") {
    const auto dna = Alphabet::dna();
    RandomStream rng(62, "minhash");
    SUBCASE("identical sets, identical signatures") {
        const auto s = kmer_shingles(Sequence::random(50, dna, rng), 8, dna);
        CHECK(minhash(s, 64, 5).mins == minhash(s, 64, 5).mins);
    }
    SUBCASE("disjoint sets rarely agree per coordinate") {
        double agree = 0;
        const int pairs = 200;
        for (int i = 0; i < pairs; ++i) {
            const auto a = minhash(kmer_shingles(Sequence::random(60, dna, rng), 8, dna), 128, 9);
            const auto b = minhash(kmer_shingles(Sequence::random(60, dna, rng), 8, dna), 128, 9);
            int eq = 0;
            for (int f = 0; f < 128; ++f) eq += a.mins[f] == b.mins[f];
            agree += eq / 128.0;
        }
        CHECK(agree / pairs < 0.01);
    }
    SUBCASE("a known one-third overlap is estimated without bias") {
        // sets {u0,u1}, {u1,u2}: Jaccard exactly 1/3
        const std::vector<std::uint64_t> a{101, 202};
        const std::vector<std::uint64_t> b{202, 303};
        CHECK(jaccard(a, b) == doctest::Approx(1.0 / 3.0));
        double mean = 0;
        const int families = 1000;
        for (int s = 0; s < families; ++s) {
            const auto sa = minhash(a, 256, 1000 + s);
            const auto sb = minhash(b, 256, 1000 + s);
            int eq = 0;
            for (int f = 0; f < 256; ++f) eq += sa.mins[f] == sb.mins[f];
            mean += eq / 256.0;
        }
        mean /= families;
        CHECK(std::abs(mean - 1.0 / 3.0) < 0.05);
    }
    SUBCASE("empty shingle sets never match") {
        const auto sig = minhash({}, 16, 3);
        CHECK(sig.empty);
    }
}

TEST_CASE("lsh pairing") {
    const auto dna = Alphabet::dna();
    RandomStream rng(63, "lsh");
    LshParams params;
    params.k = 8;
    params.h = 128;
    params.bands = 16;
    params.rows = 8;
    SUBCASE("duplicate reads are always paired") {
        const auto read = Sequence::random(80, dna, rng);
        std::vector<MinHashSignature> sigs(
            2, minhash(kmer_shingles(read, params.k, dna), params.h, 7));
        const auto pairs = lsh_pairs(sigs, params);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0] == std::pair<std::uint32_t, std::uint32_t>{0, 1});
    }
    SUBCASE("unrelated reads are paired with probability < 0.01 at (16,8)") {
        std::vector<MinHashSignature> sigs;
        for (int i = 0; i < 200; ++i)
            sigs.push_back(
                minhash(kmer_shingles(Sequence::random(80, dna, rng), params.k, dna), params.h, 7));
        const auto pairs = lsh_pairs(sigs, params);
        CHECK(static_cast<double>(pairs.size()) / (200.0 * 199.0 / 2.0) < 0.01);
    }
}

TEST_CASE("banded alignment match filter") {
    const auto dna = Alphabet::dna();
    RandomStream rng(64, "filter");
    LshParams params;
    params.band_width = 8;
    params.tau = 0.8;
    SUBCASE("identical reads are kept") {
        ReadPool pool;
        pool.alphabet = dna;
        const auto r = Sequence::random(60, dna, rng);
        pool.reads = {r, r};
        const auto kept = filter_pairs({{0, 1}}, pool, params);
        CHECK(kept.size() == 1);
    }
    SUBCASE("reads at substitution distance L/2 are dropped") {
        ReadPool pool;
        pool.alphabet = dna;
        auto a = Sequence::random(60, dna, rng);
        auto b = a;
        for (std::size_t i = 0; i < b.size(); i += 2) b[i] = static_cast<std::uint8_t>((b[i] + 1) % 4);
        pool.reads = {a, b};
        CHECK(filter_pairs({{0, 1}}, pool, params).empty());
    }
    SUBCASE("a single deletion survives the banded alignment") {
        ReadPool pool;
        pool.alphabet = dna;
        auto a = Sequence::random(60, dna, rng);
        Sequence b = a;
        b.sym.erase(b.sym.begin() + 30);
        pool.reads = {a, b};
        // 59 of 60 symbols still align
        CHECK(filter_pairs({{0, 1}}, pool, params).size() == 1);
    }
}

TEST_CASE("pairs_to_clusters is connected components") {
    const auto none = pairs_to_clusters({}, 4);
    CHECK(none.num_clusters == 4);

    const auto chain = pairs_to_clusters({{0, 1}, {1, 2}}, 4);
    CHECK(chain.num_clusters == 2);
    CHECK(chain.cluster_of[0] == chain.cluster_of[1]);
    CHECK(chain.cluster_of[1] == chain.cluster_of[2]);
    CHECK(chain.cluster_of[3] != chain.cluster_of[0]);

    const auto two = pairs_to_clusters({{0, 1}, {2, 3}}, 4);
    CHECK(two.num_clusters == 2);
    CHECK(two.cluster_of[0] != two.cluster_of[2]);
}

TEST_CASE("reconstruct by column plurality") {
    const auto bin = Alphabet::binary();
    const auto a = Sequence::parse("000", bin);
    const auto b = Sequence::parse("001", bin);
    const auto c = Sequence::parse("010", bin);
    CHECK(reconstruct({&a, &b, &c}, bin, ReconstructMode::Substitution).to_string(bin) == "000");
    CHECK(reconstruct({&a, &a, &a}, bin, ReconstructMode::Substitution) == a);
    // permutation invariance and idempotence on unanimous clusters
    CHECK(reconstruct({&c, &a, &b}, bin, ReconstructMode::Substitution).to_string(bin) == "000");
}

TEST_CASE("reconstruction from 7 bsc(0.1) reads is nearly always exact") {
    const auto bin = Alphabet::binary();
    RandomStream rng(65, "recon");
    int exact = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        const auto src = Sequence::random(60, bin, rng);
        std::vector<Sequence> reads;
        std::vector<const Sequence*> ptrs;
        for (int i = 0; i < 7; ++i) reads.push_back(apply_noise(src, NoiseSpec::bsc(0.1), bin, rng));
        for (const auto& r : reads) ptrs.push_back(&r);
        exact += reconstruct(ptrs, bin, ReconstructMode::Substitution) == src;
    }
    // per-column error P(Binom(7,0.1) >= 4) = 2.728e-3 exactly, so the exact
    // rate over 60 independent columns is (1 - 2.728e-3)^60 = 0.8488
    CHECK(std::abs(exact / static_cast<double>(trials) - 0.8488) < 0.04);
}

TEST_CASE("indel-mode reconstruction recovers from a deletion") {
    const auto dna = Alphabet::dna();
    RandomStream rng(66, "recon-indel");
    int exact = 0;
    for (int t = 0; t < 50; ++t) {
        const auto src = Sequence::random(60, dna, rng);
        Sequence del = src;
        del.sym.erase(del.sym.begin() + static_cast<std::ptrdiff_t>(rng.below(60)));
        const Sequence& a = src;
        const Sequence& b = src;
        exact += reconstruct({&a, &b, &del}, dna, ReconstructMode::Indel) == src;
    }
    CHECK(exact == 50);
}

TEST_CASE("clustering scores") {
    // perfect assignment
    ClusterAssignment perfect{{0, 0, 1, 1}, 2};
    const std::vector<std::uint32_t> origin{5, 5, 9, 9};
    const auto s1 = score_clustering(perfect, origin);
    CHECK(s1.precision == 1.0);
    CHECK(s1.recall == 1.0);
    CHECK(s1.accuracy == 1.0);

    // all singletons: vacuous precision 1, recall 0
    ClusterAssignment singles{{0, 1, 2, 3}, 4};
    const auto s2 = score_clustering(singles, origin);
    CHECK(s2.precision == 1.0);
    CHECK(s2.recall == 0.0);

    // merging two true clusters costs precision
    ClusterAssignment merged{{0, 0, 0, 0}, 1};
    const auto s3 = score_clustering(merged, origin);
    CHECK(s3.precision < 1.0);
    CHECK(s3.recall == 1.0);
}
