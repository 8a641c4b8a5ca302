// Command-line front end: capacity evaluators, channel simulation, codecs,
// read clustering, probes and figure-data sweeps.  Everything stochastic is
// driven by --seed and is bit-reproducible across runs and platforms.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dnastore/capacity.hpp"
#include "dnastore/harness.hpp"
#include "dnastore/specparse.hpp"
#include "json.hpp"

using namespace dnastore;
using nlohmann::json;

namespace {

constexpr int kExitDecodeFailure = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
}

json capacity_to_json(const CapacityResult& r) {
    return json{{"rate", r.rate}, {"regime", regime_name(r.regime)}, {"conditions", r.conditions}};
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

OuterCodeSpec parse_outer(const std::string& text) {
    OuterCodeSpec outer;
    std::istringstream in(text);
    char comma = 0;
    if (!(in >> outer.n >> comma >> outer.k) || comma != ',')
        throw std::invalid_argument("--outer expects n,k");
    return outer;
}

struct CodecOptions {
    std::string scheme = "index";
    int m = 8;
    int l = 9;
    double beta = 0.0;
    std::string outer = "8,6";
    std::string inner = "none";
    int b = 8;
    std::size_t num_messages = 64;
    double epsilon = 0.1;
    std::string sampling = "fixed:1";
    std::string noise = "identity";
    std::size_t trials = 100;
    std::string in_path, out_path;
};

void add_codec_flags(CLI::App* cmd, CodecOptions& opt, bool with_channel) {
    cmd->add_option("--scheme", opt.scheme)->check(CLI::IsMember({"index", "linear"}));
    cmd->add_option("--m", opt.m);
    cmd->add_option("--l", opt.l);
    cmd->add_option("--beta", opt.beta);
    cmd->add_option("--outer", opt.outer);
    cmd->add_option("--inner", opt.inner);
    cmd->add_option("--b", opt.b);
    cmd->add_option("--num-messages", opt.num_messages);
    cmd->add_option("--epsilon", opt.epsilon);
    cmd->add_option("--in", opt.in_path);
    cmd->add_option("--out", opt.out_path);
    cmd->add_option("--sampling", opt.sampling);
    if (with_channel) {
        cmd->add_option("--noise", opt.noise);
        cmd->add_option("--trials", opt.trials);
    }
}

int run_config_file(const std::string& path, std::uint64_t seed, const std::string& format);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dnastore: shuffling-sampling channel laboratory"};
    app.require_subcommand(0, 1);
    app.set_help_flag("--help", "print help");  // keep -h free for cluster --h

    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string config_path;
    app.add_option("--seed", seed, "master seed");
    app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--config", config_path, "run an experiment described by a JSON file");

    // ---- capacity ----
    auto* cap = app.add_subcommand("capacity", "evaluate a closed-form capacity expression");
    cap->fallthrough();
    std::string channel = "noisefree";
    double q = 0.0, p = 0.0, beta = 2.0, eps_del = 0.0, gamma = 2.0, c_noisy = 1.0;
    std::string cap_sampling = "poisson:2.0";
    std::string cap_out;
    cap->add_option("--channel", channel)
        ->check(CLI::IsMember({"noisefree", "bsc", "bec", "multibec", "multibsc", "torn-geom",
                               "torn-geom-const", "torn-geom-exp", "torn-uniform", "torn-fixed",
                               "general", "short-molecule"}));
    cap->add_option("--q", q, "q0 / single-draw loss probability");
    cap->add_option("--p", p, "per-symbol noise parameter");
    cap->add_option("--beta", beta);
    cap->add_option("--eps", eps_del, "constant deletion profile");
    cap->add_option("--gamma", gamma, "uniform tearing / exp deletion parameter");
    cap->add_option("--cnoisy", c_noisy, "per-read channel capacity for --channel general");
    cap->add_option("--sampling", cap_sampling, "sampling spec for multi-draw channels");
    cap->add_option("--out", cap_out);
    double sm_m = 1 << 20;
    cap->add_option("--mm", sm_m, "number of sequences for --channel short-molecule");

    // ---- tradeoff ----
    auto* tr = app.add_subcommand("tradeoff", "storage/recovery tradeoff as CSV");
    tr->fallthrough();
    double tr_beta = 5.0, tr_lo = 0.1, tr_hi = 6.0, tr_cost = -1.0;
    std::size_t tr_points = 60;
    std::string tr_out;
    tr->add_option("--beta", tr_beta);
    tr->add_option("--lambda-min", tr_lo);
    tr->add_option("--lambda-max", tr_hi);
    tr->add_option("--points", tr_points);
    tr->add_option("--cost-ratio", tr_cost,
                   "also report the cost-optimal coverage for this synthesis/sequencing ratio");
    tr->add_option("--out", tr_out);

    // ---- simulate ----
    auto* sim = app.add_subcommand("simulate", "push a random pool through the channel");
    sim->fallthrough();
    int sim_m = 100, sim_l = 60, sim_alpha = 2;
    std::uint64_t sim_n = 1 << 16;
    std::string sim_sampling = "poisson:2.0", sim_noise = "identity", sim_torn, sim_out;
    sim->add_option("--M", sim_m);
    sim->add_option("--L", sim_l);
    sim->add_option("--alphabet", sim_alpha)->check(CLI::IsMember({2, 4}));
    sim->add_option("--sampling", sim_sampling);
    sim->add_option("--noise", sim_noise);
    sim->add_option("--torn", sim_torn, "torn-paper spec; replaces sampling/noise");
    sim->add_option("--n", sim_n, "input length for the torn-paper variant");
    sim->add_option("--out", sim_out);

    // ---- codec ----
    auto* codec = app.add_subcommand("codec", "encode / decode / Monte Carlo trials");
    codec->fallthrough();
    codec->require_subcommand(1);
    CodecOptions enc_opt, dec_opt, trial_opt;
    auto* enc = codec->add_subcommand("encode");
    enc->fallthrough();
    add_codec_flags(enc, enc_opt, false);
    auto* dec = codec->add_subcommand("decode");
    dec->fallthrough();
    add_codec_flags(dec, dec_opt, false);
    auto* trial = codec->add_subcommand("trial");
    trial->fallthrough();
    add_codec_flags(trial, trial_opt, true);

    // ---- cluster ----
    auto* clu = app.add_subcommand("cluster", "LSH clustering and trace reconstruction");
    clu->fallthrough();
    std::string clu_in, clu_truth, clu_mode = "sub", clu_dir = ".";
    LshParams lsh;
    int clu_alpha = 4;
    clu->add_option("--in", clu_in)->required();
    clu->add_option("--alphabet", clu_alpha)->check(CLI::IsMember({2, 4}));
    clu->add_option("--k", lsh.k);
    clu->add_option("--h", lsh.h);
    clu->add_option("--bands", lsh.bands);
    clu->add_option("--rows", lsh.rows);
    clu->add_option("--tau", lsh.tau);
    clu->add_option("--band-width", lsh.band_width);
    clu->add_option("--mode", clu_mode)->check(CLI::IsMember({"sub", "indel"}));
    clu->add_option("--truth", clu_truth, "origin map for scoring (read index per line)");
    clu->add_option("--outdir", clu_dir);

    // ---- probe ----
    auto* probe = app.add_subcommand("probe", "empirical lemma probes");
    probe->fallthrough();
    probe->require_subcommand(1);
    auto* prank = probe->add_subcommand("rank", "full-rank frequency of coin matrices");
    prank->fallthrough();
    int pr_b = 100;
    double pr_delta = 0.0;
    std::size_t pr_trials = 10000;
    std::string pr_out;
    prank->add_option("--b", pr_b);
    prank->add_option("--delta", pr_delta);
    prank->add_option("--trials", pr_trials);
    prank->add_option("--out", pr_out);
    auto* pedge = probe->add_subcommand("edges", "incorrect consistency-graph edges");
    pedge->fallthrough();
    EdgeProbeExperiment edge_cfg;
    std::string pe_sampling = "poisson:2.0", pe_out;
    pedge->add_option("--m", edge_cfg.m);
    pedge->add_option("--beta", edge_cfg.beta);
    pedge->add_option("--p", edge_cfg.p);
    pedge->add_option("--sampling", pe_sampling);
    pedge->add_option("--trials", edge_cfg.trials);
    pedge->add_option("--out", pe_out);

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "figure data grids as CSV");
    sweep->fallthrough();
    std::string sw_kind = "torn", sw_out;
    double sw_lo = 0.001, sw_hi = 0.3, sw_beta = 5.0;
    std::size_t sw_points = 50;
    sweep->add_option("--kind", sw_kind)
        ->check(CLI::IsMember({"torn", "bsc-regime", "bec-regime", "tradeoff"}));
    sweep->add_option("--min", sw_lo);
    sweep->add_option("--max", sw_hi);
    sweep->add_option("--points", sw_points);
    sweep->add_option("--beta", sw_beta);
    sweep->add_option("--out", sw_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) return run_config_file(config_path, seed, format);

        if (cap->parsed()) {
            CapacityResult r;
            if (channel == "noisefree") r = cap_noise_free(q, beta);
            else if (channel == "bsc") r = cap_bsc(q, p, beta);
            else if (channel == "bec") r = cap_bec(q, p, beta);
            else if (channel == "multibec")
                r = cap_multi_bec(parse_sampling_spec(cap_sampling), p, beta);
            else if (channel == "multibsc")
                r = cap_multi_bsc(parse_sampling_spec(cap_sampling), p, beta);
            else if (channel == "torn-geom") r = cap_torn_geometric(beta);
            else if (channel == "torn-geom-const") r = cap_torn_geometric_const_del(beta, eps_del);
            else if (channel == "torn-geom-exp") r = cap_torn_geometric_exp_del(beta, gamma);
            else if (channel == "torn-uniform") r = cap_torn_uniform(gamma);
            else if (channel == "torn-fixed") r = cap_torn_fixed(beta);
            else if (channel == "general") r = general_alphabet_rate(q, beta, c_noisy);
            else {
                const auto sm = short_molecule_rate(beta, sm_m);
                json j{{"rate", sm.rate},
                       {"regime", regime_name(sm.regime)},
                       {"total_bits_per_length", sm.total_bits_per_l}};
                emit(j.dump(2) + "\n", cap_out);
                return 0;
            }
            emit(capacity_to_json(r).dump(2) + "\n", cap_out);
            return 0;
        }

        if (tr->parsed()) {
            auto table = sweep_tradeoff(tr_beta, tr_lo, tr_hi, tr_points);
            std::string text = table_to_csv(table);
            if (tr_cost >= 0) {
                const auto opt = optimal_coverage(tr_cost, tr_beta);
                std::ostringstream note;
                note.precision(10);
                note << "# optimal coverage for cost ratio " << tr_cost << ": lambda=" << opt.lambda
                     << " cost_per_bit=" << opt.min_cost << "\n";
                text = note.str() + text;
            }
            emit(text, tr_out);
            return 0;
        }

        if (sim->parsed()) {
            RandomStream rng(seed, "simulate");
            const auto alphabet = sim_alpha == 2 ? Alphabet::binary() : Alphabet::dna();
            if (!sim_torn.empty()) {
                const auto spec = parse_torn_spec(sim_torn);
                const auto input = Sequence::random(sim_n, alphabet, rng);
                const auto fragments = torn_transmit(input, spec, alphabet, rng);
                emit(format_pool(fragments), sim_out);
                return 0;
            }
            ReadPool pool;
            pool.alphabet = alphabet;
            for (int i = 0; i < sim_m; ++i)
                pool.reads.push_back(Sequence::random(sim_l, alphabet, rng));
            const auto trace = transmit(pool, parse_sampling_spec(sim_sampling),
                                        parse_noise_spec(sim_noise), rng);
            emit(format_pool(trace.output), sim_out);
            return 0;
        }

        if (enc->parsed()) {
            const auto& o = enc_opt;
            if (o.scheme == "index") {
                const auto outer = parse_outer(o.outer);
                const auto inner = parse_inner_spec(o.inner);
                const auto layout = make_layout(o.m, o.l, outer, inner);
                auto bits = bytes_to_bits(read_bytes(o.in_path));
                if (bits.size() < static_cast<std::size_t>(layout.message_bits))
                    throw std::invalid_argument("message file too short: need " +
                                                std::to_string(layout.message_bits) + " bits");
                bits.resize(layout.message_bits);
                emit(format_pool(index_encode(bits, layout, outer, inner)), o.out_path);
            } else {
                RandomStream rng(seed, "linear-codebook");
                const auto cb = gen_codebook(o.m, o.l, o.b, o.num_messages, rng);
                const auto bytes = read_bytes(o.in_path);
                std::size_t index = 0;
                for (auto b : bytes) index = index * 256 + b;
                if (index >= cb.tags.size())
                    throw std::invalid_argument("message index out of range");
                emit(format_pool(cb.codeword(index)), o.out_path);
            }
            return 0;
        }

        if (dec->parsed()) {
            const auto& o = dec_opt;
            const auto pool = read_pool(o.in_path, Alphabet::binary());
            if (o.scheme == "index") {
                const auto outer = parse_outer(o.outer);
                const auto inner = parse_inner_spec(o.inner);
                const auto layout = make_layout(o.m, o.l, outer, inner);
                const auto report = index_decode(pool, layout, outer, inner);
                if (!report.ok) {
                    std::cerr << "decode failed: " << report.detail << "\n";
                    return kExitDecodeFailure;
                }
                write_bytes(o.out_path, bits_to_bytes(report.message_bits));
            } else {
                RandomStream rng(seed, "linear-codebook");
                const auto cb = gen_codebook(o.m, o.l, o.b, o.num_messages, rng);
                const double q0 = parse_sampling_spec(o.sampling).q0();
                const auto res = decode_linear(pool, cb, q0, o.epsilon);
                if (res.status != LinearDecodeStatus::Decoded) {
                    std::cerr << "decode failed (status " << static_cast<int>(res.status) << ")\n";
                    return kExitDecodeFailure;
                }
                json j{{"message_index", res.message_index}};
                emit(j.dump(2) + "\n", o.out_path);
            }
            return 0;
        }

        if (trial->parsed()) {
            const auto& o = trial_opt;
            RandomStream master(seed, "codec-trial");
            std::vector<TrialRecord> records;
            std::size_t silent_wrong = 0;
            if (o.scheme == "index") {
                IndexCodecExperiment e;
                e.m = o.m;
                if (trial->count("--l") > 0 && trial->count("--beta") > 0)
                    throw std::invalid_argument("give exactly one of --l and --beta");
                e.l = o.beta > 0 ? 0 : o.l;  // --beta replaces the default --l
                e.beta = o.beta;
                e.outer = parse_outer(o.outer);
                e.inner = parse_inner_spec(o.inner);
                e.sampling = parse_sampling_spec(o.sampling);
                e.noise = parse_noise_spec(o.noise);
                e.trials = o.trials;
                records = run_index_codec(e, master);
            } else {
                LinearCodecExperiment e;
                e.m = o.m;
                e.l = o.l;
                e.b = o.b;
                e.num_messages = o.num_messages;
                e.epsilon = o.epsilon;
                e.sampling = parse_sampling_spec(o.sampling);
                e.noise = parse_noise_spec(o.noise);
                e.trials = o.trials;
                auto stats = run_linear_codec(e, master);
                records = std::move(stats.records);
                silent_wrong = stats.silent_wrong;
            }
            const auto summary = summarize(records);
            emit(format == "csv" ? records_to_csv(records) : records_to_json(records), o.out_path);
            std::cerr << "success " << summary.successes << "/" << summary.trials;
            if (silent_wrong > 0) std::cerr << " (silent wrong: " << silent_wrong << ")";
            std::cerr << "\n";
            return summary.successes == summary.trials ? 0 : kExitDecodeFailure;
        }

        if (clu->parsed()) {
            const auto alphabet = clu_alpha == 2 ? Alphabet::binary() : Alphabet::dna();
            const auto reads = read_pool(clu_in, alphabet);
            RandomStream rng(seed, "cluster");
            const std::uint64_t hash_seed = rng.next_u64();
            std::vector<MinHashSignature> sigs;
            sigs.reserve(reads.size());
            for (const auto& r : reads.reads)
                sigs.push_back(minhash(kmer_shingles(r, lsh.k, alphabet), lsh.h, hash_seed));
            auto pairs = lsh_pairs(sigs, lsh);
            pairs = filter_pairs(pairs, reads, lsh);
            const auto assignment = pairs_to_clusters(pairs, reads.size());

            std::ostringstream clusters_txt;
            for (std::size_t i = 0; i < assignment.cluster_of.size(); ++i)
                clusters_txt << i << " " << assignment.cluster_of[i] << "\n";
            write_text(clu_dir + "/clusters.txt", clusters_txt.str());

            const auto mode =
                clu_mode == "sub" ? ReconstructMode::Substitution : ReconstructMode::Indel;
            ReadPool reconstructed;
            reconstructed.alphabet = alphabet;
            for (const auto& cluster : assignment.members()) {
                std::vector<const Sequence*> seqs;
                for (auto r : cluster) seqs.push_back(&reads.reads[r]);
                reconstructed.reads.push_back(reconstruct(seqs, alphabet, mode, lsh.band_width));
            }
            write_text(clu_dir + "/reconstructed.txt", format_pool(reconstructed));

            json metrics{{"reads", reads.size()},
                         {"clusters", assignment.num_clusters},
                         {"pairs_after_filter", pairs.size()}};
            if (!clu_truth.empty()) {
                std::vector<std::uint32_t> origin;
                std::ifstream in(clu_truth);
                std::uint32_t o;
                while (in >> o) origin.push_back(o);
                const auto score = score_clustering(assignment, origin);
                metrics["precision"] = score.precision;
                metrics["recall"] = score.recall;
                metrics["accuracy"] = score.accuracy;
            }
            write_text(clu_dir + "/metrics.json", metrics.dump(2) + "\n");
            return 0;
        }

        if (prank->parsed()) {
            RandomStream rng(seed, "rank-probe");
            const double freq = rank_probe(pr_b, pr_delta, pr_trials, rng);
            std::ostringstream out;
            out.precision(10);
            out << "b,delta,trials,full_rank_fraction\n"
                << pr_b << "," << pr_delta << "," << pr_trials << "," << freq << "\n";
            emit(out.str(), pr_out);
            return 0;
        }

        if (pedge->parsed()) {
            edge_cfg.sampling = parse_sampling_spec(pe_sampling);
            const auto records = run_edge_probe(edge_cfg, RandomStream(seed, "edge-probe"));
            emit(records_to_csv(records), pe_out);
            return 0;
        }

        if (sweep->parsed()) {
            CsvTable table;
            if (sw_kind == "torn") table = sweep_torn_vs_shuffling(sw_lo, sw_hi, sw_points);
            else if (sw_kind == "bsc-regime") table = sweep_bsc_regime_boundary(sw_lo, sw_hi, sw_points);
            else if (sw_kind == "bec-regime") table = sweep_bec_regime_boundaries(sw_lo, sw_hi, sw_points);
            else table = sweep_tradeoff(sw_beta, sw_lo, sw_hi, sw_points);
            emit(table_to_csv(table), sw_out);
            return 0;
        }

        std::cout << app.help();
        return 0;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}

namespace {

int run_config_file(const std::string& path, std::uint64_t seed, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    json cfg = json::parse(in);
    if (cfg.value("schema_version", 0) != 1)
        throw std::runtime_error("unsupported config schema_version (expected 1)");
    const std::string kind = cfg.at("kind");
    seed = cfg.value("seed", seed);
    const std::string out = cfg.value("out", std::string{});
    RandomStream master(seed, kind);

    std::vector<TrialRecord> records;
    if (kind == "codec-trial") {
        if (cfg.value("scheme", "index") == "index") {
            IndexCodecExperiment e;
            e.m = cfg.value("m", 256);
            e.l = cfg.value("l", 0);
            e.beta = cfg.value("beta", 0.0);  // the runner enforces exactly one
            e.outer = OuterCodeSpec{cfg.at("outer_n"), cfg.at("outer_k"), cfg.value("field_bits", 0)};
            e.inner = parse_inner_spec(cfg.value("inner", "none"));
            e.sampling = parse_sampling_spec(cfg.value("sampling", "fixed:1"));
            e.noise = parse_noise_spec(cfg.value("noise", "identity"));
            e.trials = cfg.value("trials", 100);
            records = run_index_codec(e, master);
        } else {
            LinearCodecExperiment e;
            e.m = cfg.value("m", 2);
            e.l = cfg.value("l", 6);
            e.b = cfg.value("b", 8);
            e.num_messages = cfg.value("num_messages", 64);
            e.epsilon = cfg.value("epsilon", 0.1);
            e.sampling = parse_sampling_spec(cfg.value("sampling", "poisson:2.0"));
            e.noise = parse_noise_spec(cfg.value("noise", "bec:0.2"));
            e.trials = cfg.value("trials", 100);
            records = run_linear_codec(e, master).records;
        }
    } else if (kind == "torn-paper") {
        TornCoverageExperiment e;
        e.n = cfg.value("n", 1 << 20);
        e.spec = parse_torn_spec(cfg.value("torn", "geom:0.05"));
        e.trials = cfg.value("trials", 200);
        records = run_torn_coverage(e, master);
    } else if (kind == "cluster-pipeline") {
        ClusterPipelineExperiment e;
        e.m = cfg.value("m", 100);
        e.l = cfg.value("l", 100);
        e.alphabet = cfg.value("alphabet", 4) == 2 ? Alphabet::binary() : Alphabet::dna();
        e.sampling = parse_sampling_spec(cfg.value("sampling", "poisson:5.0"));
        e.noise = parse_noise_spec(cfg.value("noise", "qsc:0.03"));
        e.trials = cfg.value("trials", 20);
        records = run_cluster_pipeline(e, master);
    } else if (kind == "probe") {
        EdgeProbeExperiment e;
        e.m = cfg.value("m", 64);
        e.beta = cfg.value("beta", 5.0);
        e.p = cfg.value("p", 0.1);
        e.sampling = parse_sampling_spec(cfg.value("sampling", "poisson:2.0"));
        e.trials = cfg.value("trials", 100);
        records = run_edge_probe(e, master);
    } else if (kind == "tradeoff") {
        const auto table = sweep_tradeoff(cfg.value("beta", 5.0), cfg.value("lambda_min", 0.1),
                                          cfg.value("lambda_max", 6.0), cfg.value("points", 60));
        emit(table_to_csv(table), out);
        return 0;
    } else if (kind == "capacity-sweep") {
        const std::string which = cfg.value("sweep", "torn");
        CsvTable table;
        if (which == "torn")
            table = sweep_torn_vs_shuffling(cfg.value("min", 0.2), cfg.value("max", 10.0),
                                            cfg.value("points", 50));
        else if (which == "bsc-regime")
            table = sweep_bsc_regime_boundary(cfg.value("min", 0.001), cfg.value("max", 0.24),
                                              cfg.value("points", 50));
        else
            table = sweep_bec_regime_boundaries(cfg.value("min", 0.001), cfg.value("max", 0.49),
                                                cfg.value("points", 50));
        emit(table_to_csv(table), out);
        return 0;
    } else {
        throw std::runtime_error("unknown experiment kind: " + kind);
    }

    const auto summary = summarize(records);
    const std::string fmt = cfg.value("format", format);
    emit(fmt == "csv" ? records_to_csv(records) : records_to_json(records), out);
    std::cerr << "success " << summary.successes << "/" << summary.trials << "\n";
    return summary.successes == summary.trials ? 0 : kExitDecodeFailure;
}

}  // namespace
