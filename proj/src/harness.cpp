#include "dnastore/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "dnastore/capacity.hpp"
#include "json.hpp"

namespace dnastore {

int length_from_beta(int m, double beta, double* actual_beta) {
    const double log2m = std::log2(static_cast<double>(m));
    const int l = static_cast<int>(std::llround(beta * log2m));
    if (actual_beta) *actual_beta = static_cast<double>(l) / log2m;
    return l;
}

RunSummary summarize(const std::vector<TrialRecord>& records) {
    RunSummary s;
    s.trials = records.size();
    for (const auto& r : records) s.successes += r.success;
    if (s.trials > 0) {
        s.success_rate = static_cast<double>(s.successes) / static_cast<double>(s.trials);
        s.ci95_halfwidth =
            1.96 * std::sqrt(s.success_rate * (1.0 - s.success_rate) /
                             static_cast<double>(s.trials));
    }
    return s;
}

std::vector<TrialRecord> run_index_codec(const IndexCodecExperiment& e,
                                         const RandomStream& master) {
    IndexCodecExperiment cfg = e;
    if ((cfg.l > 0) == (cfg.beta > 0))
        throw std::invalid_argument("give exactly one of l or beta");
    if (cfg.l == 0) cfg.l = length_from_beta(cfg.m, cfg.beta);
    const auto layout = make_layout(cfg.m, cfg.l, cfg.outer, cfg.inner);

    std::vector<TrialRecord> records;
    records.reserve(cfg.trials);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        auto rng = master.derive(t);
        std::vector<std::uint8_t> message(layout.message_bits);
        for (auto& bit : message) bit = static_cast<std::uint8_t>(rng.below(2));

        const auto pool = index_encode(message, layout, cfg.outer, cfg.inner);
        const auto trace = transmit(pool, cfg.sampling, cfg.noise, rng);
        const auto report = index_decode(trace.output, layout, cfg.outer, cfg.inner);

        TrialRecord rec;
        rec.trial = t;
        rec.success = report.ok && report.message_bits == message;
        rec.metrics = {
            {"erasures", static_cast<double>(report.erasures_corrected)},
            {"substitutions", static_cast<double>(report.substitutions_corrected)},
            {"inner_failures", static_cast<double>(report.inner_failures)},
            {"missing_indices", static_cast<double>(report.missing_indices)},
            {"reads", static_cast<double>(trace.output.size())},
        };
        records.push_back(std::move(rec));
    }
    return records;
}

LinearRunStats run_linear_codec(const LinearCodecExperiment& e, const RandomStream& master) {
    LinearRunStats stats;
    stats.records.reserve(e.trials);
    const double q0 = e.sampling.q0();
    for (std::size_t t = 0; t < e.trials; ++t) {
        auto rng = master.derive(t);
        const auto codebook = gen_codebook(e.m, e.l, e.b, e.num_messages, rng);
        const auto sent = rng.below(e.num_messages);
        const auto pool = codebook.codeword(sent);
        const auto trace = transmit(pool, e.sampling, e.noise, rng);
        const auto result = decode_linear(trace.output, codebook, q0, e.epsilon);

        TrialRecord rec;
        rec.trial = t;
        rec.success =
            result.status == LinearDecodeStatus::Decoded && result.message_index == sent;
        if (result.status == LinearDecodeStatus::Decoded && result.message_index != sent)
            ++stats.silent_wrong;
        std::size_t inputs_seen = 0;
        for (auto c : trace.draws.counts) inputs_seen += c > 0;
        rec.metrics = {
            {"status", static_cast<double>(result.status)},
            {"systems", static_cast<double>(result.systems_tried)},
            {"max_equations", static_cast<double>(result.max_equations)},
            {"reads", static_cast<double>(trace.output.size())},
            {"inputs_seen", static_cast<double>(inputs_seen)},
        };
        stats.records.push_back(std::move(rec));
    }
    return stats;
}

std::vector<TrialRecord> run_cluster_pipeline(const ClusterPipelineExperiment& e,
                                              const RandomStream& master) {
    std::vector<TrialRecord> records;
    records.reserve(e.trials);
    for (std::size_t t = 0; t < e.trials; ++t) {
        auto rng = master.derive(t);
        const auto t0 = std::chrono::steady_clock::now();

        ReadPool input;
        input.alphabet = e.alphabet;
        input.ordered = true;
        for (int i = 0; i < e.m; ++i)
            input.reads.push_back(Sequence::random(e.l, e.alphabet, rng));

        const std::uint64_t mask_seed = rng.next_u64();
        const ReadPool stored = e.randomize_payload ? randomize(input, mask_seed) : input;
        const auto trace = transmit(stored, e.sampling, e.noise, rng);
        const auto& reads = trace.output;

        const std::uint64_t hash_seed = rng.next_u64();
        std::vector<MinHashSignature> sigs;
        sigs.reserve(reads.size());
        for (const auto& r : reads.reads)
            sigs.push_back(minhash(kmer_shingles(r, e.lsh.k, e.alphabet), e.lsh.h, hash_seed));
        auto pairs = lsh_pairs(sigs, e.lsh);
        pairs = filter_pairs(pairs, reads, e.lsh);
        const auto assignment = pairs_to_clusters(pairs, reads.size());
        const auto score = score_clustering(assignment, trace.origin);

        // reconstruct each cluster; compare against the original at the
        // cluster's majority true origin (simulation-mode scoring)
        const auto members = assignment.members();
        std::size_t exact = 0;
        for (const auto& cluster : members) {
            std::vector<const Sequence*> seqs;
            seqs.reserve(cluster.size());
            std::map<std::uint32_t, int> counts;
            for (auto r : cluster) {
                seqs.push_back(&reads.reads[r]);
                ++counts[trace.origin[r]];
            }
            std::uint32_t major = 0;
            int major_count = 0;
            for (const auto& [o, c] : counts)
                if (c > major_count) {
                    major = o;
                    major_count = c;
                }
            Sequence rec = reconstruct(seqs, e.alphabet, e.mode, e.lsh.band_width);
            if (e.randomize_payload) rec = derandomize_one(rec, e.alphabet, mask_seed, major);
            exact += rec == input.reads[major];
        }
        const auto t1 = std::chrono::steady_clock::now();

        TrialRecord rec;
        rec.trial = t;
        const double exact_frac =
            members.empty() ? 0.0 : static_cast<double>(exact) / static_cast<double>(members.size());
        rec.success = score.accuracy >= 0.95 && exact_frac >= 0.95;
        rec.metrics = {
            {"precision", score.precision},
            {"recall", score.recall},
            {"accuracy", score.accuracy},
            {"exact_fraction", exact_frac},
            {"clusters", static_cast<double>(members.size())},
            {"reads", static_cast<double>(reads.size())},
            {"runtime_ms",
             std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() * 1.0},
        };
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<TrialRecord> run_torn_coverage(const TornCoverageExperiment& e,
                                           const RandomStream& master) {
    std::vector<TrialRecord> records;
    records.reserve(e.trials);
    const Alphabet alphabet = Alphabet::binary();
    for (std::size_t t = 0; t < e.trials; ++t) {
        auto rng = master.derive(t);
        const auto input = Sequence::random(e.n, alphabet, rng);
        const auto fragments = torn_transmit(input, e.spec, alphabet, rng);
        const auto stats = fragment_stats(fragments, e.n);
        TrialRecord rec;
        rec.trial = t;
        rec.success = true;
        rec.metrics = {
            {"coverage", stats.coverage_frac_long},
            {"reorder_cost", stats.reorder_cost_est},
            {"fragments", static_cast<double>(fragments.size())},
        };
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<TrialRecord> run_edge_probe(const EdgeProbeExperiment& e, const RandomStream& master) {
    std::vector<TrialRecord> records;
    records.reserve(e.trials);
    const int l = length_from_beta(e.m, e.beta);
    const double q0 = e.sampling.q0();
    const double p_eff = e.sampling.effective_erasure(e.p);
    const int b = std::max(
        1, static_cast<int>(std::floor(e.m * l * (1.0 - q0 - 0.1) * (1.0 - p_eff - 0.1) * 0.9)));
    for (std::size_t t = 0; t < e.trials; ++t) {
        auto rng = master.derive(t);
        const auto codebook = gen_codebook(e.m, l, b, 1, rng);
        const auto pool = codebook.codeword(0);
        const auto trace = transmit(pool, e.sampling, NoiseSpec::bec(e.p), rng);
        const auto graph = build_graph(trace.output, &trace.origin);
        TrialRecord rec;
        rec.trial = t;
        rec.success = true;
        rec.metrics = {
            {"incorrect_edges", static_cast<double>(graph.incorrect_edges)},
            {"correct_edges", static_cast<double>(graph.correct_edges)},
            {"reads", static_cast<double>(trace.output.size())},
        };
        records.push_back(std::move(rec));
    }
    return records;
}

CsvTable sweep_torn_vs_shuffling(double beta_lo, double beta_hi, std::size_t points) {
    CsvTable t;
    t.header = {"beta", "torn_paper", "fixed_fragments"};
    for (std::size_t i = 0; i < points; ++i) {
        const double beta =
            points > 1 ? beta_lo + (beta_hi - beta_lo) * static_cast<double>(i) / (points - 1)
                       : beta_lo;
        t.rows.push_back({beta, cap_torn_geometric(beta).rate, cap_torn_fixed(beta).rate});
    }
    return t;
}

CsvTable sweep_bsc_regime_boundary(double p_lo, double p_hi, std::size_t points) {
    CsvTable t;
    t.header = {"p", "beta_boundary"};
    for (std::size_t i = 0; i < points; ++i) {
        const double p =
            points > 1 ? p_lo + (p_hi - p_lo) * static_cast<double>(i) / (points - 1) : p_lo;
        const double denom = 1.0 - binary_entropy(std::min(1.0, 2.0 * p));
        t.rows.push_back({p, denom > 0 ? 2.0 / denom : -1.0});
    }
    return t;
}

CsvTable sweep_bec_regime_boundaries(double p_lo, double p_hi, std::size_t points) {
    CsvTable t;
    t.header = {"p", "beta_blue", "beta_green"};
    for (std::size_t i = 0; i < points; ++i) {
        const double p =
            points > 1 ? p_lo + (p_hi - p_lo) * static_cast<double>(i) / (points - 1) : p_lo;
        const double blue = p < 0.5 ? 1.0 / (0.5 - p) : -1.0;
        const double inner = 1.0 - 0.5 * (1.0 - p) * (1.0 - p);
        const double green = -1.0 / std::log2(inner);
        t.rows.push_back({p, blue, green});
    }
    return t;
}

CsvTable sweep_tradeoff(double beta, double lambda_lo, double lambda_hi, std::size_t points) {
    CsvTable t;
    t.header = {"lambda", "storage_rate", "recovery_rate"};
    for (std::size_t i = 0; i < points; ++i) {
        const double lambda =
            points > 1
                ? lambda_lo + (lambda_hi - lambda_lo) * static_cast<double>(i) / (points - 1)
                : lambda_lo;
        const auto pair = tradeoff_region(lambda, beta);
        t.rows.push_back({lambda, pair.storage, pair.recovery});
    }
    return t;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string format_double(double v) {
    // shortest representation that parses back to the same double, so CSV
    // and JSON emissions round-trip exactly
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string records_to_csv(const std::vector<TrialRecord>& records) {
    std::ostringstream out;
    out << "trial,success";
    if (!records.empty())
        for (const auto& [key, value] : records.front().metrics) out << "," << csv_field(key);
    out << "\n";
    for (const auto& r : records) {
        out << r.trial << "," << (r.success ? 1 : 0);
        for (const auto& [key, value] : r.metrics) out << "," << format_double(value);
        out << "\n";
    }
    return out.str();
}

std::string records_to_json(const std::vector<TrialRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json obj;
        obj["trial"] = r.trial;
        obj["success"] = r.success;
        for (const auto& [key, value] : r.metrics) obj[key] = value;
        arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

std::vector<TrialRecord> records_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("records_from_csv: missing header");
    const auto header = split_csv_line(line);
    if (header.size() < 2 || header[0] != "trial" || header[1] != "success")
        throw std::runtime_error("records_from_csv: unexpected header");
    std::vector<TrialRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw std::runtime_error("records_from_csv: ragged row");
        TrialRecord rec;
        rec.trial = std::stoull(fields[0]);
        rec.success = fields[1] == "1";
        for (std::size_t i = 2; i < fields.size(); ++i)
            rec.metrics.emplace_back(header[i], std::stod(fields[i]));
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<TrialRecord> records_from_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    std::vector<TrialRecord> records;
    for (const auto& obj : arr) {
        TrialRecord rec;
        rec.trial = obj.at("trial").get<std::uint64_t>();
        rec.success = obj.at("success").get<bool>();
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            if (it.key() == "trial" || it.key() == "success") continue;
            rec.metrics.emplace_back(it.key(), it.value().get<double>());
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::string table_to_csv(const CsvTable& table) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << csv_field(table.header[i]);
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
        out << "\n";
    }
    return out.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

}  // namespace dnastore
