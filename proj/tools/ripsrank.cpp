// Command-line front end: rank | ground-truth | evaluate | sweep | stats.
// Results go to --output files (or stdout); every result file gets a
// ".manifest" sidecar recording the resolved parameters, and re-running with
// the same parameters reproduces the file byte-for-byte.

#include "CLI11.hpp"

#include "ripsrank/baselines.hpp"
#include "ripsrank/graph.hpp"
#include "ripsrank/kernels.hpp"
#include "ripsrank/manifest.hpp"
#include "ripsrank/metrics.hpp"
#include "ripsrank/rips.hpp"
#include "ripsrank/sir.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

namespace rr = ripsrank;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Shortest representation that parses back to the same double, so manifests
// and cache-file names show "0.15" rather than a 17-digit expansion.
std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << contents;
}

void emit_result(const std::string& output, const std::string& contents,
                 rr::RunManifest manifest, Clock::time_point start) {
    if (output.empty()) {
        std::cout << contents;
        return;
    }
    manifest.duration_seconds = seconds_since(start);
    write_file(output, contents);
    std::ostringstream ms;
    rr::write_manifest(manifest, ms);
    write_file(output + ".manifest", ms.str());
}

rr::Ranking labeled_to_ranking(const rr::LabeledRanking& lr, rr::NodeId* next_id,
                               std::unordered_map<std::string, rr::NodeId>& ids) {
    rr::Ranking r;
    for (std::size_t i = 0; i < lr.labels.size(); ++i) {
        auto [it, inserted] = ids.try_emplace(lr.labels[i], *next_id);
        if (inserted) ++*next_id;
        r.entries.push_back({it->second, lr.scores[i], lr.ranks[i]});
    }
    return r;
}

// Ground truth for (graph file, beta, runs, seed), optionally cached.  The
// returned values always pass through TSV serialization so a cached and a
// fresh run produce identical rankings.
rr::GroundTruth ensure_ground_truth(const rr::Graph& g, const std::string& graph_path,
                                    double beta, std::uint32_t runs,
                                    std::uint64_t seed, const std::string& cache_dir,
                                    std::uint32_t threads) {
    std::string cache_path;
    if (!cache_dir.empty()) {
        char name[160];
        std::snprintf(name, sizeof name, "gt-%016llx-b%s-r%u-s%llu.tsv",
                      static_cast<unsigned long long>(rr::file_fingerprint(graph_path)),
                      format_double(beta).c_str(), runs,
                      static_cast<unsigned long long>(seed));
        cache_path = cache_dir + "/" + name;
        if (std::filesystem::exists(cache_path)) {
            std::ifstream in(cache_path);
            return rr::read_ground_truth_tsv(in, g);
        }
    }

    rr::SirConfig cfg;
    cfg.beta = beta;
    cfg.runs = runs;
    cfg.master_seed = seed;
    cfg.workers = threads;
    const rr::GroundTruth gt = rr::ground_truth(g, cfg);

    std::ostringstream ss;
    rr::write_ground_truth_tsv(gt, g, ss);
    if (!cache_path.empty()) {
        std::filesystem::create_directories(cache_dir);
        write_file(cache_path, ss.str());
    }
    std::istringstream back(ss.str());
    return rr::read_ground_truth_tsv(back, g);
}

rr::Ranking run_method(const rr::Graph& g, const std::string& method, double beta,
                       bool beta_set, std::uint32_t samples, std::uint32_t threshold,
                       const std::string& mode, std::uint64_t seed,
                       double mdd_lambda, std::uint32_t threads) {
    if (method == "rips") {
        if (!beta_set)
            throw std::runtime_error("method 'rips' requires --beta");
        rr::RipsConfig cfg;
        cfg.beta = beta;
        cfg.samples = samples;
        cfg.threshold = threshold;
        cfg.mode = (mode == "uniform") ? rr::RipsMode::UNIFORM : rr::RipsMode::WEIGHTED;
        cfg.master_seed = seed;
        cfg.workers = threads;
        return rr::rips_rank(rr::rips_weights(g, cfg), g);
    }
    if (method == "degree") return rr::degree_centrality(g);
    if (method == "ks") return rr::k_shell_ranking(g);
    if (method == "mdd") return rr::mdd(g, mdd_lambda);
    if (method == "cnc+") return rr::cnc_plus(g);
    if (method == "ksif") return rr::ks_if(g);
    if (method == "hindex") return rr::h_index(g);
    if (method == "clusterrank") return rr::cluster_rank(g);
    throw std::runtime_error(
        "unknown method '" + method +
        "' (expected rips | degree | ks | mdd | cnc+ | ksif | hindex | clusterrank)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ripsrank: influence ranking via randomized influence-path sampling"};
    app.require_subcommand(1);

    // ---- shared option storage
    std::string input, output, method = "rips", mode = "weighted";
    double beta = 0.0;
    std::uint32_t samples = 200, threshold = 1, runs = 10000, threads = 0;
    std::uint64_t seed = 0;
    double mdd_lambda = 0.7;

    auto add_common = [&](CLI::App* cmd, bool with_rips_knobs) {
        cmd->add_option("--input", input, "edge-list file")->required();
        cmd->add_option("--seed", seed, "master RNG seed (default 0)");
        cmd->add_option("--threads", threads,
                        "worker threads, 0 = all cores (never affects results)");
        if (with_rips_knobs) {
            cmd->add_option("--samples", samples, "number of beta-graphs (default 200)");
            cmd->add_option("--threshold", threshold,
                            "keep components with size > threshold (default 1)");
            cmd->add_option("--mode", mode, "weighted | uniform (default weighted)")
                ->check(CLI::IsMember({"weighted", "uniform"}));
        }
    };

    // ---- rank
    auto* rank_cmd = app.add_subcommand("rank", "rank nodes by RIPS or a baseline");
    add_common(rank_cmd, true);
    auto* rank_beta = rank_cmd->add_option("--beta", beta, "influence probability");
    rank_cmd->add_option("--method", method,
                         "rips | degree | ks | mdd | cnc+ | ksif | hindex | clusterrank");
    rank_cmd->add_option("--mdd-lambda", mdd_lambda, "MDD lambda (default 0.7)");
    rank_cmd->add_option("--output", output, "ranking TSV path (default stdout)");

    // ---- ground-truth
    auto* gt_cmd = app.add_subcommand("ground-truth",
                                      "Monte-Carlo SIR mean spread per node");
    add_common(gt_cmd, false);
    gt_cmd->add_option("--beta", beta, "infection probability")->required();
    gt_cmd->add_option("--runs", runs, "runs per node (default 10000)");
    gt_cmd->add_option("--output", output, "spread TSV path (default stdout)");
    std::string gt_ranking_path;
    gt_cmd->add_option("--ranking", gt_ranking_path,
                       "also write the ground-truth ranking TSV here");

    // ---- evaluate
    auto* eval_cmd = app.add_subcommand("evaluate",
                                        "Kendall tau + monotonicity of a ranking "
                                        "against a reference ranking");
    std::string reference_path, candidate_path;
    eval_cmd->add_option("--reference", reference_path, "reference ranking TSV")->required();
    eval_cmd->add_option("--candidate", candidate_path, "candidate ranking TSV")->required();
    eval_cmd->add_option("--output", output, "report path (default stdout)");

    // ---- sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "tau across a beta or samples grid");
    add_common(sweep_cmd, true);
    auto* sweep_beta = sweep_cmd->add_option("--beta", beta, "fixed beta for a samples grid");
    std::vector<double> beta_grid;
    std::vector<std::uint32_t> samples_grid;
    sweep_cmd->add_option("--beta-grid", beta_grid, "beta grid points")
        ->delimiter(',');
    sweep_cmd->add_option("--samples-grid", samples_grid, "samples grid points")
        ->delimiter(',');
    sweep_cmd->add_option("--runs", runs, "SIR runs per node for ground truth");
    std::string cache_dir = "gt-cache";
    sweep_cmd->add_option("--cache-dir", cache_dir,
                          "ground-truth cache directory ('' disables caching)");
    sweep_cmd->add_option("--output", output, "sweep table path (default stdout)");

    // ---- stats
    auto* stats_cmd = app.add_subcommand("stats", "structural summary of a graph");
    stats_cmd->add_option("--input", input, "edge-list file")->required();

    CLI11_PARSE(app, argc, argv);

    const auto start = Clock::now();
    try {
        if (app.got_subcommand(rank_cmd)) {
            const rr::Graph g = rr::load_edge_list_file(input);
            const rr::Ranking r =
                run_method(g, method, beta, !rank_beta->empty(), samples, threshold,
                           mode, seed, mdd_lambda, threads);
            std::ostringstream ss;
            rr::write_ranking_tsv(r, g, ss);

            rr::RunManifest m;
            m.command = "rank";
            m.set("input", input);
            m.set("method", method);
            if (method == "rips") {
                m.set("beta", format_double(beta));
                m.set("samples", std::to_string(samples));
                m.set("threshold", std::to_string(threshold));
                m.set("mode", mode);
                m.set("seed", std::to_string(seed));
            }
            if (method == "mdd") m.set("mdd_lambda", format_double(mdd_lambda));
            m.set("output", output);
            emit_result(output, ss.str(), m, start);
        } else if (app.got_subcommand(gt_cmd)) {
            const rr::Graph g = rr::load_edge_list_file(input);
            rr::SirConfig cfg;
            cfg.beta = beta;
            cfg.runs = runs;
            cfg.master_seed = seed;
            cfg.workers = threads;
            const rr::GroundTruth gt = rr::ground_truth(g, cfg);
            std::ostringstream ss;
            rr::write_ground_truth_tsv(gt, g, ss);

            rr::RunManifest m;
            m.command = "ground-truth";
            m.set("input", input);
            m.set("beta", format_double(beta));
            m.set("runs", std::to_string(runs));
            m.set("seed", std::to_string(seed));
            m.set("output", output);
            emit_result(output, ss.str(), m, start);

            if (!gt_ranking_path.empty()) {
                // Rank from the serialized values so the file pair is
                // self-consistent.
                std::istringstream back(ss.str());
                const rr::GroundTruth parsed = rr::read_ground_truth_tsv(back, g);
                std::ostringstream rs;
                rr::write_ranking_tsv(rr::ground_truth_ranking(parsed, g), g, rs);
                write_file(gt_ranking_path, rs.str());
            }
        } else if (app.got_subcommand(eval_cmd)) {
            std::ifstream fa(reference_path), fb(candidate_path);
            if (!fa) throw std::runtime_error("cannot open reference: " + reference_path);
            if (!fb) throw std::runtime_error("cannot open candidate: " + candidate_path);
            const rr::LabeledRanking la = rr::read_ranking_tsv(fa);
            const rr::LabeledRanking lb = rr::read_ranking_tsv(fb);

            std::unordered_map<std::string, rr::NodeId> ids;
            rr::NodeId next_id = 0;
            const rr::Ranking ra = labeled_to_ranking(la, &next_id, ids);
            const rr::Ranking rb = labeled_to_ranking(lb, &next_id, ids);
            if (ids.size() != la.labels.size()) {
                // Some candidate label never appeared in the reference (or
                // vice versa); report the offenders.
                std::string missing;
                for (const auto& lab : lb.labels)
                    if (std::find(la.labels.begin(), la.labels.end(), lab) ==
                        la.labels.end())
                        missing += (missing.empty() ? "" : ", ") + lab;
                for (const auto& lab : la.labels)
                    if (std::find(lb.labels.begin(), lb.labels.end(), lab) ==
                        lb.labels.end())
                        missing += (missing.empty() ? "" : ", ") + lab;
                throw std::runtime_error("rankings cover different node sets: " + missing);
            }

            const rr::EvalReport rep = rr::evaluate(ra, rb);
            std::ostringstream ss;
            rr::write_eval_report(rep, ss);

            rr::RunManifest m;
            m.command = "evaluate";
            m.set("reference", reference_path);
            m.set("candidate", candidate_path);
            m.set("output", output);
            emit_result(output, ss.str(), m, start);
        } else if (app.got_subcommand(sweep_cmd)) {
            if (beta_grid.empty() == samples_grid.empty())
                throw std::runtime_error("sweep: give exactly one of --beta-grid / --samples-grid");
            const rr::Graph g = rr::load_edge_list_file(input);

            std::ostringstream ss;
            auto tau_at = [&](double b, std::uint32_t theta) {
                const rr::GroundTruth gt =
                    ensure_ground_truth(g, input, b, runs, seed, cache_dir, threads);
                const rr::Ranking ref = rr::ground_truth_ranking(gt, g);
                rr::RipsConfig cfg;
                cfg.beta = b;
                cfg.samples = theta;
                cfg.threshold = threshold;
                cfg.mode = (mode == "uniform") ? rr::RipsMode::UNIFORM
                                               : rr::RipsMode::WEIGHTED;
                cfg.master_seed = seed;
                cfg.workers = threads;
                const rr::Ranking cand = rr::rips_rank(rr::rips_weights(g, cfg), g);
                return rr::kendall_tau(ref, cand);
            };

            char buf[64];
            if (!beta_grid.empty()) {
                ss << "beta\ttau\tseconds\n";
                for (double b : beta_grid) {
                    const auto t0 = Clock::now();
                    const double tau = tau_at(b, samples);
                    std::snprintf(buf, sizeof buf, "%.6f\t%.6f\t%.3f", b, tau,
                                  seconds_since(t0));
                    ss << buf << '\n';
                }
            } else {
                if (sweep_beta->empty())
                    throw std::runtime_error("sweep: a samples grid needs --beta");
                ss << "samples\ttau\tseconds\n";
                for (std::uint32_t theta : samples_grid) {
                    const auto t0 = Clock::now();
                    const double tau = tau_at(beta, theta);
                    std::snprintf(buf, sizeof buf, "%u\t%.6f\t%.3f", theta, tau,
                                  seconds_since(t0));
                    ss << buf << '\n';
                }
            }

            rr::RunManifest m;
            m.command = "sweep";
            m.set("input", input);
            m.set("mode", mode);
            m.set("threshold", std::to_string(threshold));
            m.set("runs", std::to_string(runs));
            m.set("seed", std::to_string(seed));
            m.set("output", output);
            emit_result(output, ss.str(), m, start);
        } else if (app.got_subcommand(stats_cmd)) {
            const rr::Graph g = rr::load_edge_list_file(input);
            const rr::GraphStats s = rr::graph_stats(g);
            std::cout << "nodes\t" << s.node_count << '\n';
            std::cout << "edges\t" << s.edge_count << '\n';
            std::cout << "max_degree\t" << s.max_degree << '\n';
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6f", s.avg_degree);
            std::cout << "avg_degree\t" << buf << '\n';
            std::snprintf(buf, sizeof buf, "%.6f", s.beta_th);
            std::cout << "beta_th_mean_over_mean_square\t" << buf << '\n';
            try {
                const rr::GraphStats hmf =
                    rr::graph_stats(g, rr::ThresholdConvention::HMF);
                std::snprintf(buf, sizeof buf, "%.6f", hmf.beta_th);
                std::cout << "beta_th_hmf\t" << buf << '\n';
            } catch (const std::exception&) {
                std::cout << "beta_th_hmf\tundefined\n";
            }
            const auto comps = rr::connected_components(g);
            std::size_t largest = 0;
            for (const auto& c : comps) largest = std::max(largest, c.size());
            std::cout << "components\t" << comps.size() << '\n';
            std::cout << "largest_component\t" << largest << '\n';
            std::cout << "bernoulli_kernel\t" << rr::kern::active_kernel_name() << '\n';
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
