#include "dnastore/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace dnastore {

namespace {

std::uint8_t mask_symbol(std::uint64_t seed, std::uint64_t slot, std::size_t pos, int size) {
    const std::uint64_t h = mix64(mix64(seed ^ 0x6d61736bULL) + slot * 0x9e3779b97f4a7c15ULL + pos);
    return static_cast<std::uint8_t>(h % static_cast<std::uint64_t>(size));
}

Sequence shift_sequence(const Sequence& seq, const Alphabet& a, std::uint64_t seed,
                        std::uint64_t slot, int sign) {
    Sequence out = seq;
    const int size = a.size();
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] == a.erasure()) continue;
        const int m = mask_symbol(seed, slot, i, size);
        const int v = (static_cast<int>(out[i]) + sign * m % size + size) % size;
        out[i] = static_cast<std::uint8_t>(v);
    }
    return out;
}

}  // namespace

ReadPool randomize(const ReadPool& pool, std::uint64_t seed) {
    pool.require_fixed_length();
    ReadPool out = pool;
    for (std::size_t i = 0; i < out.reads.size(); ++i)
        out.reads[i] = shift_sequence(pool.reads[i], pool.alphabet, seed, i, +1);
    return out;
}

ReadPool derandomize(const ReadPool& pool, std::uint64_t seed) {
    ReadPool out = pool;
    for (std::size_t i = 0; i < out.reads.size(); ++i)
        out.reads[i] = shift_sequence(pool.reads[i], pool.alphabet, seed, i, -1);
    return out;
}

Sequence derandomize_one(const Sequence& seq, const Alphabet& alphabet, std::uint64_t seed,
                         std::uint64_t slot) {
    return shift_sequence(seq, alphabet, seed, slot, -1);
}

std::vector<std::uint64_t> kmer_shingles(const Sequence& seq, int k, const Alphabet& alphabet) {
    if (k < 1) throw std::invalid_argument("kmer_shingles: k >= 1");
    std::vector<std::uint64_t> grams;
    if (seq.size() < static_cast<std::size_t>(k)) return grams;
    const auto base = static_cast<std::uint64_t>(alphabet.size()) + 1;  // erasure included
    grams.reserve(seq.size() - k + 1);
    for (std::size_t i = 0; i + k <= seq.size(); ++i) {
        std::uint64_t key = 0;
        for (int j = 0; j < k; ++j) key = key * base + seq[i + j];
        grams.push_back(key);
    }
    std::sort(grams.begin(), grams.end());
    grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
    return grams;
}

double jaccard(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    if (a.empty() && b.empty()) return 0.0;
    std::size_t inter = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++inter;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

MinHashSignature minhash(const std::vector<std::uint64_t>& shingles, int h, std::uint64_t seed) {
    MinHashSignature sig;
    sig.mins.assign(h, UINT64_MAX);
    if (shingles.empty()) {
        sig.empty = true;
        return sig;
    }
    for (int f = 0; f < h; ++f) {
        const std::uint64_t key = mix64(seed + 0x517cc1b727220a95ULL * (f + 1));
        std::uint64_t best = UINT64_MAX;
        for (auto s : shingles) best = std::min(best, mix64(s ^ key));
        sig.mins[f] = best;
    }
    return sig;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> lsh_pairs(
    const std::vector<MinHashSignature>& signatures, const LshParams& params) {
    if (params.bands * params.rows != params.h)
        throw std::invalid_argument("lsh_pairs: bands * rows must equal h");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (int band = 0; band < params.bands; ++band) {
        std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
        for (std::uint32_t i = 0; i < signatures.size(); ++i) {
            if (signatures[i].empty) continue;
            std::uint64_t key = 0x9ae16a3b2f90404fULL + band;
            for (int r = 0; r < params.rows; ++r)
                key = mix64(key ^ signatures[i].mins[band * params.rows + r]);
            buckets[key].push_back(i);
        }
        for (const auto& [key, members] : buckets) {
            for (std::size_t x = 0; x < members.size(); ++x)
                for (std::size_t y = x + 1; y < members.size(); ++y)
                    pairs.emplace_back(members[x], members[y]);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

int banded_match_count(const Sequence& a, const Sequence& b, int w, const Alphabet& alphabet) {
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    if (na == 0 || nb == 0) return 0;
    if (std::abs(na - nb) > w) w = std::abs(na - nb);  // band must reach the corner
    // DP maximizing matched symbols; indels and mismatches score 0
    const int width = 2 * w + 1;
    std::vector<int> prev(width, 0), cur(width, 0);
    for (int i = 1; i <= na; ++i) {
        for (int d = 0; d < width; ++d) {
            const int j = i - w + d;
            cur[d] = 0;
            if (j < 0 || j > nb) continue;
            int best = 0;
            if (j > 0 && i - 1 >= j - 1 - w && i - 1 <= j - 1 + w) {
                const bool hit = a[i - 1] == b[j - 1] && a[i - 1] != alphabet.erasure() &&
                                 b[j - 1] != alphabet.erasure();
                best = std::max(best, prev[d] + (hit ? 1 : 0));  // diagonal
            }
            if (d > 0) best = std::max(best, cur[d - 1]);  // gap in a
            if (d + 1 < width && i - 1 >= j - w && i - 1 <= j + w)
                best = std::max(best, prev[d + 1]);  // gap in b
            cur[d] = best;
        }
        std::swap(prev, cur);
    }
    const int d_end = nb - na + w;
    if (d_end < 0 || d_end >= width) return 0;
    return prev[d_end];
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> filter_pairs(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs, const ReadPool& reads,
    const LshParams& params) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> kept;
    kept.reserve(pairs.size());
    for (const auto& [i, j] : pairs) {
        const auto& a = reads.reads[i];
        const auto& b = reads.reads[j];
        const int matches = banded_match_count(a, b, params.band_width, reads.alphabet);
        const auto denom = static_cast<double>(std::max(a.size(), b.size()));
        if (denom > 0 && static_cast<double>(matches) / denom >= params.tau)
            kept.emplace_back(i, j);
    }
    return kept;
}

std::vector<std::vector<std::uint32_t>> ClusterAssignment::members() const {
    std::vector<std::vector<std::uint32_t>> out(num_clusters);
    for (std::uint32_t i = 0; i < cluster_of.size(); ++i) out[cluster_of[i]].push_back(i);
    return out;
}

ClusterAssignment pairs_to_clusters(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs, std::size_t n) {
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [i, j] : pairs) {
        if (i >= n || j >= n) throw std::invalid_argument("pair endpoint out of range");
        const auto ri = find(i), rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
    }
    ClusterAssignment assign;
    assign.cluster_of.resize(n);
    std::map<std::uint32_t, std::uint32_t> remap;
    for (std::size_t i = 0; i < n; ++i) {
        const auto root = find(static_cast<std::uint32_t>(i));
        auto [it, fresh] = remap.try_emplace(root, static_cast<std::uint32_t>(remap.size()));
        assign.cluster_of[i] = it->second;
    }
    assign.num_clusters = static_cast<std::uint32_t>(remap.size());
    return assign;
}

namespace {

Sequence reconstruct_substitution(const std::vector<const Sequence*>& cluster,
                                  const Alphabet& alphabet) {
    const std::size_t len = cluster.front()->size();
    for (const auto* r : cluster)
        if (r->size() != len)
            throw std::invalid_argument("substitution-mode reconstruct needs equal lengths");
    Sequence out;
    out.sym.resize(len);
    std::vector<int> votes(alphabet.size());
    for (std::size_t i = 0; i < len; ++i) {
        std::fill(votes.begin(), votes.end(), 0);
        for (const auto* r : cluster) {
            const auto s = (*r)[i];
            if (s != alphabet.erasure()) ++votes[s];
        }
        int best = 0;
        for (int s = 1; s < alphabet.size(); ++s)
            if (votes[s] > votes[best]) best = s;  // ties keep the canonical smaller symbol
        out[i] = std::all_of(votes.begin(), votes.end(), [](int v) { return v == 0; })
                     ? alphabet.erasure()
                     : static_cast<std::uint8_t>(best);
    }
    return out;
}

// alignment path of a against pivot within the band: for each pivot column,
// the aligned symbol of a or -1 for a gap
std::vector<int> banded_align_to_pivot(const Sequence& a, const Sequence& pivot, int w,
                                       const Alphabet& alphabet) {
    const int na = static_cast<int>(a.size());
    const int np = static_cast<int>(pivot.size());
    if (std::abs(na - np) > w) w = std::abs(na - np);
    const int width = 2 * w + 1;
    constexpr int kNeg = -1000000;
    // score[i][d]: best matches aligning a[0..i) with pivot[0..j), j = i-w+d
    std::vector<std::vector<int>> score(na + 1, std::vector<int>(width, kNeg));
    std::vector<std::vector<std::int8_t>> move(na + 1, std::vector<std::int8_t>(width, 0));
    for (int i = 0; i <= na; ++i) {
        for (int d = 0; d < width; ++d) {
            const int j = i - w + d;
            if (j < 0 || j > np) continue;
            if (i == 0 && j == 0) {
                score[i][d] = 0;
                continue;
            }
            int best = kNeg;
            std::int8_t mv = 0;
            if (i > 0 && j > 0 && score[i - 1][d] > kNeg) {
                const bool hit = a[i - 1] == pivot[j - 1] && a[i - 1] != alphabet.erasure() &&
                                 pivot[j - 1] != alphabet.erasure();
                const int v = score[i - 1][d] + (hit ? 1 : 0);
                if (v > best) {
                    best = v;
                    mv = 1;  // diagonal
                }
            }
            if (j > 0 && d > 0 && score[i][d - 1] > kNeg && score[i][d - 1] > best) {
                best = score[i][d - 1];
                mv = 2;  // gap in a (consume pivot)
            }
            if (i > 0 && d + 1 < width && score[i - 1][d + 1] > kNeg &&
                score[i - 1][d + 1] > best) {
                best = score[i - 1][d + 1];
                mv = 3;  // insertion in a (consume a)
            }
            score[i][d] = best;
            move[i][d] = mv;
        }
    }
    std::vector<int> aligned(np, -1);
    int i = na, d = np - na + w;
    if (d < 0 || d >= width || score[i][d] <= kNeg) return aligned;
    while (i > 0 || i - w + d > 0) {
        const int j = i - w + d;
        const auto mv = move[i][d];
        if (mv == 1) {
            aligned[j - 1] = a[i - 1];
            --i;  // d unchanged: j decreases with i
        } else if (mv == 2) {
            aligned[j - 1] = -1;
            --d;
        } else if (mv == 3) {
            --i;
            ++d;
        } else {
            break;
        }
    }
    return aligned;
}

Sequence reconstruct_indel(const std::vector<const Sequence*>& cluster, const Alphabet& alphabet,
                           int w) {
    // pivot: median length, ties to canonical order
    std::vector<const Sequence*> sorted = cluster;
    std::sort(sorted.begin(), sorted.end(), [](const Sequence* a, const Sequence* b) {
        if (a->size() != b->size()) return a->size() < b->size();
        return *a < *b;
    });
    const Sequence& pivot = *sorted[sorted.size() / 2];
    const int np = static_cast<int>(pivot.size());

    // votes[column][symbol]; last slot counts gaps
    std::vector<std::vector<int>> votes(np, std::vector<int>(alphabet.size() + 1, 0));
    for (const auto* r : cluster) {
        const auto aligned = banded_align_to_pivot(*r, pivot, w, alphabet);
        for (int j = 0; j < np; ++j) {
            const int s = aligned[j];
            if (s == static_cast<int>(alphabet.erasure())) continue;
            if (s < 0)
                ++votes[j][alphabet.size()];
            else
                ++votes[j][s];
        }
    }
    Sequence out;
    out.sym.reserve(np);
    for (int j = 0; j < np; ++j) {
        int best = 0;  // symbols win ties against the gap candidate
        for (int s = 1; s <= alphabet.size(); ++s)
            if (votes[j][s] > votes[j][best]) best = s;
        if (best == alphabet.size()) continue;  // gap wins: drop the column
        if (votes[j][best] == 0) continue;      // nothing aligned here
        out.sym.push_back(static_cast<std::uint8_t>(best));
    }
    return out;
}

}  // namespace

Sequence reconstruct(const std::vector<const Sequence*>& cluster, const Alphabet& alphabet,
                     ReconstructMode mode, int band_width) {
    if (cluster.empty()) throw std::invalid_argument("reconstruct: empty cluster");
    if (mode == ReconstructMode::Substitution) return reconstruct_substitution(cluster, alphabet);
    return reconstruct_indel(cluster, alphabet, band_width);
}

ClusterScore score_clustering(const ClusterAssignment& assignment,
                              const std::vector<std::uint32_t>& origin) {
    const std::size_t n = assignment.cluster_of.size();
    if (origin.size() != n) throw std::invalid_argument("score_clustering: size mismatch");
    std::uint64_t tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool together = assignment.cluster_of[i] == assignment.cluster_of[j];
            const bool same = origin[i] == origin[j];
            tp += together && same;
            fp += together && !same;
            fn += !together && same;
        }
    }
    ClusterScore score;
    score.precision = tp + fp == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    score.recall = tp + fn == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);

    const auto members = assignment.members();
    std::size_t correct_reads = 0;
    for (const auto& cluster : members) {
        std::map<std::uint32_t, std::size_t> counts;
        for (auto r : cluster) ++counts[origin[r]];
        std::uint32_t major = 0;
        std::size_t major_count = 0;
        for (const auto& [o, c] : counts) {
            if (c > major_count) {
                major = o;
                major_count = c;
            }
        }
        for (auto r : cluster) correct_reads += origin[r] == major;
    }
    score.accuracy = n == 0 ? 1.0 : static_cast<double>(correct_reads) / static_cast<double>(n);
    return score;
}

}  // namespace dnastore
