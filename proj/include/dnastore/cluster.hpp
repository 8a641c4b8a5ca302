#pragma once

#include <cstdint>
#include <vector>

#include "dnastore/rng.hpp"
#include "dnastore/seq.hpp"

namespace dnastore {

// ---- pseudorandomization (per-slot masks derived from a seed) ----

// out[i] = (in[i] + mask_i) mod |alphabet|, erasures pass through; mask row i
// is derived from (seed, i) so the transform is invertible slot-wise
ReadPool randomize(const ReadPool& pool, std::uint64_t seed);
ReadPool derandomize(const ReadPool& pool, std::uint64_t seed);
Sequence derandomize_one(const Sequence& seq, const Alphabet& alphabet, std::uint64_t seed,
                         std::uint64_t slot);

// ---- k-mer shingling and MinHash ----

// set of all length-k substrings, packed into 64-bit keys
std::vector<std::uint64_t> kmer_shingles(const Sequence& seq, int k, const Alphabet& alphabet);

double jaccard(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);

struct MinHashSignature {
    std::vector<std::uint64_t> mins;
    bool empty = false;  // shingle set was empty; never matches
};

MinHashSignature minhash(const std::vector<std::uint64_t>& shingles, int h, std::uint64_t seed);

// Defaults are tuned for quaternary reads around L=100 with a few percent
// substitution noise: two same-origin reads share k-mers at Jaccard ~ 0.45,
// so bands of 2 rows give near-certain candidate recall while unrelated
// randomized reads (Jaccard ~ 1e-3) essentially never collide.
struct LshParams {
    int k = 8;        // shingle length
    int h = 128;      // hash functions, h = bands * rows
    int bands = 64;
    int rows = 2;
    int band_width = 8;   // alignment filter band
    double tau = 0.75;    // match-fraction threshold
};

// candidate pairs: some band of `rows` signature coordinates agrees exactly
std::vector<std::pair<std::uint32_t, std::uint32_t>> lsh_pairs(
    const std::vector<MinHashSignature>& signatures, const LshParams& params);

// banded alignment; returns the maximal number of aligned equal symbols
// within band width w (erasures never count as matches)
int banded_match_count(const Sequence& a, const Sequence& b, int w, const Alphabet& alphabet);

// keep pairs whose banded match fraction >= tau
std::vector<std::pair<std::uint32_t, std::uint32_t>> filter_pairs(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs, const ReadPool& reads,
    const LshParams& params);

struct ClusterAssignment {
    std::vector<std::uint32_t> cluster_of;  // contiguous ids from 0
    std::uint32_t num_clusters = 0;

    std::vector<std::vector<std::uint32_t>> members() const;
};

// connected components of the pair graph (union-find)
ClusterAssignment pairs_to_clusters(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs, std::size_t n);

enum class ReconstructMode { Substitution, Indel };

// substitution: column-wise plurality, erasures excluded, ties to the
// canonical smallest symbol; indel: banded-align everything to the
// median-length read and vote per pivot column (gap is a candidate)
Sequence reconstruct(const std::vector<const Sequence*>& cluster, const Alphabet& alphabet,
                     ReconstructMode mode, int band_width = 8);

struct ClusterScore {
    double precision;  // over co-clustered pairs; 1 when no pairs predicted
    double recall;     // over ground-truth pairs; 1 when no true pairs exist
    double accuracy;   // fraction of reads lying in majority-correct clusters
};

ClusterScore score_clustering(const ClusterAssignment& assignment,
                              const std::vector<std::uint32_t>& origin);

}  // namespace dnastore
