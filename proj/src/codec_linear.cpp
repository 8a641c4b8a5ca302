#include "dnastore/codec_linear.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "dnastore/kernels.hpp"

namespace dnastore {

ReadPool LinearCodebook::codeword(std::size_t message_index) const {
    const auto y = g.multiply(tags.at(message_index));
    const auto bits = unpack_bits(y, g.rows());
    ReadPool pool;
    pool.alphabet = Alphabet::binary();
    pool.ordered = true;
    for (int i = 0; i < m_sequences; ++i) {
        Sequence s;
        s.sym.assign(bits.begin() + static_cast<std::ptrdiff_t>(i) * l_symbols,
                     bits.begin() + static_cast<std::ptrdiff_t>(i + 1) * l_symbols);
        pool.reads.push_back(std::move(s));
    }
    return pool;
}

LinearCodebook gen_codebook(int m, int l, int b, std::size_t num_messages, RandomStream& rng) {
    if (b < 1 || b > m * l) throw std::invalid_argument("gen_codebook: need 1 <= B <= ML");
    if (num_messages < 1) throw std::invalid_argument("gen_codebook: need >= 1 message");
    if (b < 63 && num_messages > (1ULL << b))
        throw std::invalid_argument("gen_codebook: more messages than 2^B tags");
    LinearCodebook cb;
    cb.m_sequences = m;
    cb.l_symbols = l;
    cb.b_dim = b;
    cb.g = BinaryMatrix::random(static_cast<std::size_t>(m) * l, b, rng);
    const std::uint64_t tail_mask = b % 64 == 0 ? ~0ULL : ((1ULL << (b % 64)) - 1);
    const std::size_t words = (b + 63) / 64;
    std::set<std::vector<std::uint64_t>> seen;
    while (seen.size() < num_messages) {
        std::vector<std::uint64_t> tag(words);
        for (auto& w : tag) w = rng.next_u64();
        tag[words - 1] &= tail_mask;
        if (seen.insert(tag).second) cb.tags.push_back(std::move(tag));
    }
    return cb;
}

bool consistent_reads(const Sequence& a, const Sequence& b, const Alphabet& alphabet) {
    if (a.size() != b.size())
        throw std::invalid_argument("consistent_reads: length mismatch");
    return kernels::consistent(a.data(), b.data(), a.size(), alphabet.erasure());
}

ConsistencyGraph build_graph(const ReadPool& reads, const std::vector<std::uint32_t>* origin) {
    reads.require_fixed_length();
    ConsistencyGraph g;
    g.n = reads.size();
    g.adj.assign(g.n, std::vector<bool>(g.n, false));
    for (std::size_t i = 0; i < g.n; ++i) {
        for (std::size_t j = i + 1; j < g.n; ++j) {
            if (!consistent_reads(reads.reads[i], reads.reads[j], reads.alphabet)) continue;
            g.adj[i][j] = g.adj[j][i] = true;
            ++g.edge_count;
            if (origin) {
                if ((*origin)[i] == (*origin)[j])
                    ++g.correct_edges;
                else
                    ++g.incorrect_edges;
            }
        }
    }
    return g;
}

Sequence consensus_erasure(const std::vector<const Sequence*>& cluster, const Alphabet& alphabet) {
    if (cluster.empty()) throw std::invalid_argument("consensus of an empty cluster");
    const std::size_t len = cluster.front()->size();
    Sequence out;
    out.sym.assign(len, alphabet.erasure());
    for (const auto* read : cluster) {
        if (read->size() != len) throw std::invalid_argument("consensus: length mismatch");
        for (std::size_t i = 0; i < len; ++i) {
            const auto s = (*read)[i];
            if (s == alphabet.erasure()) continue;
            if (out[i] == alphabet.erasure()) {
                out[i] = s;
            } else if (out[i] != s) {
                throw std::logic_error("consensus over an inconsistent cluster");
            }
        }
    }
    return out;
}

void enumerate_clique_partitions(
    const ConsistencyGraph& graph, std::size_t max_clusters,
    const std::function<void(const std::vector<std::vector<int>>&)>& cb) {
    std::vector<std::vector<int>> clusters;
    std::function<void(std::size_t)> recurse = [&](std::size_t v) {
        if (v == graph.n) {
            cb(clusters);
            return;
        }
        // index-based: recursion below grows and shrinks the vector, which
        // would invalidate range-for references
        const std::size_t existing = clusters.size();
        for (std::size_t c = 0; c < existing; ++c) {
            bool fits = true;
            for (int u : clusters[c])
                if (!graph.adj[v][u]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            clusters[c].push_back(static_cast<int>(v));
            recurse(v + 1);
            clusters[c].pop_back();
        }
        if (clusters.size() < max_clusters) {
            clusters.push_back({static_cast<int>(v)});
            recurse(v + 1);
            clusters.pop_back();
        }
    };
    if (graph.n == 0) {
        cb(clusters);
        return;
    }
    recurse(0);
}

boost::multiprecision::cpp_int clustering_count_bound(const ConsistencyGraph& graph) {
    return boost::multiprecision::cpp_int(1) << graph.edge_count;
}

namespace {

// all injective assignments of clusters to indices 0..M-1
void for_each_assignment(std::size_t k, std::size_t m,
                         const std::function<void(const std::vector<int>&)>& cb) {
    std::vector<int> assign(k, -1);
    std::vector<bool> used(m, false);
    std::function<void(std::size_t)> recurse = [&](std::size_t c) {
        if (c == k) {
            cb(assign);
            return;
        }
        for (std::size_t idx = 0; idx < m; ++idx) {
            if (used[idx]) continue;
            used[idx] = true;
            assign[c] = static_cast<int>(idx);
            recurse(c + 1);
            used[idx] = false;
        }
    };
    recurse(0);
}

}  // namespace

LinearDecodeResult decode_linear(const ReadPool& reads, const LinearCodebook& codebook,
                                 double q0, double eps) {
    const int m = codebook.m_sequences;
    const int l = codebook.l_symbols;
    const int b = codebook.b_dim;
    LinearDecodeResult result;

    const auto kmin = static_cast<std::size_t>(
        std::max(0.0, std::floor((1.0 - q0 - eps) * m)));
    const auto kmax = static_cast<std::size_t>(
        std::min(static_cast<double>(m), std::ceil((1.0 - q0 + eps) * m)));

    const auto graph = build_graph(reads);
    if (reads.size() == 0 || kmax == 0) {
        result.status = LinearDecodeStatus::NoPartition;
        return result;
    }

    std::set<std::size_t> matching_tags;  // across all systems
    bool saw_partition = false;

    enumerate_clique_partitions(graph, kmax, [&](const std::vector<std::vector<int>>& clusters) {
        if (clusters.size() < std::max<std::size_t>(kmin, 1)) return;
        saw_partition = true;

        // consensus per cluster
        std::vector<Sequence> consensus;
        consensus.reserve(clusters.size());
        for (const auto& cluster : clusters) {
            std::vector<const Sequence*> members;
            members.reserve(cluster.size());
            for (int v : cluster) members.push_back(&reads.reads[v]);
            consensus.push_back(consensus_erasure(members, reads.alphabet));
        }

        for_each_assignment(clusters.size(), m, [&](const std::vector<int>& assign) {
            // equations: non-erased positions of assigned consensus strings
            std::vector<std::size_t> eq_rows;
            std::vector<std::uint8_t> rhs;
            for (std::size_t c = 0; c < clusters.size(); ++c) {
                const auto& seq = consensus[c];
                const std::size_t base = static_cast<std::size_t>(assign[c]) * l;
                for (int i = 0; i < l; ++i) {
                    if (seq[i] == reads.alphabet.erasure()) continue;
                    eq_rows.push_back(base + i);
                    rhs.push_back(seq[i]);
                }
            }
            ++result.systems_tried;
            result.max_equations = std::max(result.max_equations, eq_rows.size());

            std::vector<std::size_t> matches_here;
            for (std::size_t t = 0; t < codebook.tags.size(); ++t) {
                bool ok = true;
                for (std::size_t e = 0; e < eq_rows.size() && ok; ++e)
                    ok = codebook.g.row_dot(eq_rows[e], codebook.tags[t]) == (rhs[e] != 0);
                if (ok) matches_here.push_back(t);
            }
            if (matches_here.empty()) return;

            for (auto t : matches_here) matching_tags.insert(t);
        });
    });

    if (!saw_partition) {
        result.status = LinearDecodeStatus::NoPartition;
        return result;
    }
    if (matching_tags.empty()) {
        result.status = LinearDecodeStatus::NoSolution;
        return result;
    }
    if (matching_tags.size() > 1) {
        // too few equations to pin B unknowns is the usual cause
        result.status = result.max_equations < static_cast<std::size_t>(b)
                            ? LinearDecodeStatus::Underdetermined
                            : LinearDecodeStatus::Ambiguous;
        return result;
    }
    result.status = LinearDecodeStatus::Decoded;
    result.message_index = *matching_tags.begin();
    return result;
}

}  // namespace dnastore
