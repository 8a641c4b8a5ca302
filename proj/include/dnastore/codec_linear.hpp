#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dnastore/gf2.hpp"
#include "dnastore/seq.hpp"

namespace dnastore {

// Random linear scheme for the multi-draw erasure channel: codeword i is
// G * t_i (over GF(2)) reshaped into M length-L strings.
struct LinearCodebook {
    BinaryMatrix g;  // ML x B
    std::vector<std::vector<std::uint64_t>> tags;  // packed B-bit vectors
    int m_sequences = 0;
    int l_symbols = 0;
    int b_dim = 0;

    ReadPool codeword(std::size_t message_index) const;
};

// tags are sampled without replacement so the decoder's membership test is
// well defined even at desk scale
LinearCodebook gen_codebook(int m, int l, int b, std::size_t num_messages, RandomStream& rng);

// true iff no position holds two distinct non-erased symbols
bool consistent_reads(const Sequence& a, const Sequence& b, const Alphabet& alphabet);

struct ConsistencyGraph {
    std::size_t n = 0;
    std::vector<std::vector<bool>> adj;
    std::size_t edge_count = 0;

    // against ground truth, for probes: edges between reads of different origin
    std::size_t incorrect_edges = 0;
    std::size_t correct_edges = 0;
};

ConsistencyGraph build_graph(const ReadPool& reads,
                             const std::vector<std::uint32_t>* origin = nullptr);

// per-position first non-erased symbol; throws if the cluster is inconsistent
Sequence consensus_erasure(const std::vector<const Sequence*>& cluster, const Alphabet& alphabet);

// enumerate partitions of the graph into cliques, invoking the callback with
// the cluster assignment; prunes branches that exceed max_clusters
void enumerate_clique_partitions(const ConsistencyGraph& graph, std::size_t max_clusters,
                                 const std::function<void(const std::vector<std::vector<int>>&)>& cb);

// Lemma-style bound: at most 2^U valid clique partitions
boost::multiprecision::cpp_int clustering_count_bound(const ConsistencyGraph& graph);

enum class LinearDecodeStatus {
    Decoded,
    Ambiguous,        // more than one tag solves some admissible system
    NoSolution,       // no tag solves any admissible system
    Underdetermined,  // a unique tag was found only in rank-deficient systems
    NoPartition,      // no clique partition inside the cluster-count window
};

struct LinearDecodeResult {
    LinearDecodeStatus status = LinearDecodeStatus::NoSolution;
    std::size_t message_index = 0;  // valid when status == Decoded
    std::size_t systems_tried = 0;
    std::size_t max_equations = 0;
};

// Exhaustive decoder: all clique partitions with a cluster count inside
// [(1-q0-eps)M, (1-q0+eps)M] (rounded outward), all injective index
// assignments, exact GF(2) solving via direct tag membership tests.
// Desk scale only (M <= 8, N <= 12 or so).
LinearDecodeResult decode_linear(const ReadPool& reads, const LinearCodebook& codebook,
                                 double q0, double eps);

}  // namespace dnastore
