// trajedit: one entry point for editing, residual generation, detector
// calibration/evaluation, episode simulation and benchmark sweeps.
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "trajedit/benchmark.hpp"
#include "trajedit/config.hpp"
#include "trajedit/editor.hpp"
#include "trajedit/io.hpp"
#include "trajedit/sim.hpp"

namespace fs = std::filesystem;
using namespace trajedit;

namespace {

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

void add_edit_cmd(CLI::App& app, int& rc) {
    auto* sub = app.add_subcommand(
        "edit", "Align a demo start against a base trajectory, optimize the transition "
                "segment, and write the spliced corrected trajectory");
    struct EditOpts {
        std::string base, demo, out, segment_out;
        EditConfig cfg{};
        double omega_p{1.0}, omega_q{0.5};
        double lambda_q{0.5};
        bool soft_endpoint{false};
    };
    auto opts = std::make_shared<EditOpts>();
    sub->add_option("--base", opts->base, "Base trajectory file")->required();
    sub->add_option("--demo", opts->demo, "Correction demo trajectory file")->required();
    sub->add_option("--out", opts->out, "Corrected trajectory output file")->required();
    sub->add_option("--segment-out", opts->segment_out, "Optional transition segment output file");
    sub->add_option("--n-points", opts->cfg.n_points, "Transition length N (clamped to k*)")
        ->capture_default_str();
    sub->add_option("--lambda-s", opts->cfg.weights.lambda_s, "Smoothness weight")
        ->capture_default_str();
    sub->add_option("--lambda-e", opts->cfg.weights.lambda_e,
                    "Endpoint weight (soft mode only)")
        ->capture_default_str();
    auto* lq = sub->add_option("--lambda-q", opts->lambda_q,
                               "Orientation weight applied to the fidelity, smoothness and "
                               "endpoint orientation terms")
                   ->capture_default_str();
    sub->add_flag("--soft-endpoint", opts->soft_endpoint,
                  "Penalize the endpoint instead of pinning it");
    sub->add_option("--omega-p", opts->omega_p, "Alignment position weight")
        ->capture_default_str();
    sub->add_option("--omega-q", opts->omega_q, "Alignment orientation weight")
        ->capture_default_str();
    sub->callback([opts, lq, &rc]() {
        std::vector<std::string> warnings;
        const Trajectory base = parse_trajectory_file(opts->base, &warnings);
        const Trajectory demo = parse_trajectory_file(opts->demo, &warnings);
        print_warnings(warnings);
        EditConfig cfg = opts->cfg;
        cfg.hard_endpoint = !opts->soft_endpoint;
        if (lq->count())
            cfg.weights.lambda_qf = cfg.weights.lambda_qs = cfg.weights.lambda_qe =
                opts->lambda_q;
        const AlignmentResult k =
            nearest_point(base, demo.front(), AlignmentWeights{opts->omega_p, opts->omega_q});
        const EditResult res = optimize_segment(base, k.k_star, demo.front(), cfg);
        const Trajectory corrected =
            assemble_corrected(base, k.k_star, res.segment, demo, cfg.n_points);
        write_trajectory_file(corrected, opts->out);
        if (!opts->segment_out.empty()) write_trajectory_file(res.segment, opts->segment_out);
        std::cout << "k_star=" << k.k_star << " effective_n=" << res.effective_n
                  << " iterations=" << res.iterations
                  << " converged=" << (res.converged ? 1 : 0)
                  << " endpoint_position_error=" << format_double(res.endpoint_position_error)
                  << " endpoint_quaternion_error="
                  << format_double(res.endpoint_quaternion_error)
                  << " final_objective=" << format_double(res.final_objective())
                  << " out=" << opts->out << "\n";
        rc = 0;
    });
}

void add_gen_residuals_cmd(CLI::App& app, int& rc) {
    auto* sub = app.add_subcommand(
        "gen-residuals", "Generate region-labeled residual samples from a base trajectory, "
                         "its corrected splice, and the correction demo");
    struct GenOpts {
        std::string base, corrected, demo, out;
        std::size_t k_star{0}, n_points{20};
        std::string regions{"pre,transition,demo,post"};
        double match_omega_q{0.5};
    };
    auto opts = std::make_shared<GenOpts>();
    sub->add_option("--base", opts->base, "Base trajectory file")->required();
    sub->add_option("--corrected", opts->corrected, "Corrected trajectory file")->required();
    sub->add_option("--demo", opts->demo, "Correction demo trajectory file")->required();
    sub->add_option("--out", opts->out, "Residual samples output file")->required();
    sub->add_option("--k-star", opts->k_star, "Alignment index used for the splice")->required();
    sub->add_option("--n-points", opts->n_points, "Transition length N used for the splice")
        ->capture_default_str();
    sub->add_option("--regions", opts->regions,
                    "Comma-separated region subset (pre, transition, demo, post, or none)")
        ->capture_default_str();
    sub->add_option("--match-omega-q", opts->match_omega_q,
                    "Orientation weight of the post-edit demo matching")
        ->capture_default_str();
    sub->callback([opts, &rc]() {
        std::vector<std::string> warnings;
        const Trajectory base = parse_trajectory_file(opts->base, &warnings);
        const Trajectory corrected = parse_trajectory_file(opts->corrected, &warnings);
        const Trajectory demo = parse_trajectory_file(opts->demo, &warnings);
        print_warnings(warnings);
        const auto regions = RegionSet::from_string(opts->regions);
        if (!regions) throw std::runtime_error("unknown region in '" + opts->regions + "'");
        if (opts->k_star >= corrected.size())
            throw std::runtime_error("--k-star is past the corrected trajectory end");
        const std::size_t n_eff = std::min(opts->n_points, opts->k_star);
        const std::size_t start = opts->k_star - n_eff;
        Trajectory segment;
        segment.dt = corrected.dt;
        segment.poses.assign(corrected.poses.begin() + static_cast<std::ptrdiff_t>(start),
                             corrected.poses.begin() + static_cast<std::ptrdiff_t>(opts->k_star) + 1);
        const PlaybackPolicy policy{base};
        const std::vector<ResidualSample> samples =
            generate_samples(base, corrected, segment, demo, opts->k_star, opts->n_points,
                             policy, *regions, opts->match_omega_q);
        write_samples_file(samples, opts->out);
        std::cout << "samples=" << samples.size() << " regions=" << regions->to_string()
                  << " out=" << opts->out << "\n";
        rc = 0;
    });
}

std::vector<LabeledEpisode> load_score_files(const std::vector<std::string>& paths) {
    std::vector<LabeledEpisode> episodes;
    episodes.reserve(paths.size());
    for (const auto& p : paths) episodes.push_back(parse_scores_file(p));
    return episodes;
}

void add_calibrate_cmd(CLI::App& app, int& rc) {
    auto* sub = app.add_subcommand(
        "calibrate", "Pick the failure threshold from labeled score files: the largest "
                     "threshold that still flags every failed episode");
    struct CalOpts {
        std::vector<std::string> scores;
        std::string out;
    };
    auto opts = std::make_shared<CalOpts>();
    sub->add_option("--scores", opts->scores, "Labeled score files (repeatable)")
        ->required()
        ->expected(-1);
    sub->add_option("--out", opts->out, "Optional output file for the threshold");
    sub->callback([opts, &rc]() {
        const double c = calibrate(load_score_files(opts->scores));
        const std::string line = "threshold_c=" + format_double(c) + "\n";
        std::cout << line;
        if (!opts->out.empty()) write_text_file(opts->out, line);
        rc = 0;
    });
}

void add_detect_eval_cmd(CLI::App& app, int& rc) {
    auto* sub = app.add_subcommand(
        "detect-eval", "Episode-level precision/recall of the debounced max-score rule "
                       "over labeled score files");
    struct EvalOpts {
        std::vector<std::string> scores;
        DetectorConfig cfg{};
    };
    auto opts = std::make_shared<EvalOpts>();
    sub->add_option("--scores", opts->scores, "Labeled score files (repeatable)")
        ->required()
        ->expected(-1);
    sub->add_option("--threshold", opts->cfg.threshold_c, "Detection threshold c")->required();
    sub->add_option("--debounce", opts->cfg.debounce_k, "Consecutive exceedances required")
        ->capture_default_str();
    sub->callback([opts, &rc]() {
        const PrecisionRecall pr = evaluate(load_score_files(opts->scores), opts->cfg);
        std::cout << "precision=" << format_double(pr.precision)
                  << " recall=" << format_double(pr.recall) << "\n";
        rc = 0;
    });
}

struct SimulateOpts {
    std::string config_path;
    unsigned seed{0};
    std::vector<double> bias;
    std::string mode{"ter"};
    std::string samples_path;
    std::string out_dir;
    std::string prefix;
};

void add_simulate_cmd(CLI::App& app, int& rc) {
    auto* sub = app.add_subcommand(
        "simulate", "Run one insertion episode (base: scripted policy only; ter: with "
                    "detect/pause/demo/edit/replay; corrector: base policy composed with a "
                    "residual lookup) and write the episode files");
    auto opts = std::make_shared<SimulateOpts>();
    sub->add_option("--config", opts->config_path, "Run configuration file (defaults apply)");
    auto* seed_opt = sub->add_option("--seed", opts->seed, "Episode seed (overrides [run] seed)");
    sub->add_option("--bias", opts->bias,
                    "Belief bias override, metres (x y z; overrides [policy] belief_bias)")
        ->expected(3);
    sub->add_option("--mode", opts->mode, "base | ter | corrector")
        ->check(CLI::IsMember({"base", "ter", "corrector"}))
        ->capture_default_str();
    sub->add_option("--samples", opts->samples_path,
                    "Residual samples file backing the corrector (corrector mode)");
    sub->add_option("--out-dir", opts->out_dir, "Output directory (overrides [run] output_dir)");
    sub->add_option("--prefix", opts->prefix, "Output file prefix (default episode_s<seed>_<mode>)");
    sub->callback([opts, seed_opt, &rc]() {
        RunConfig cfg =
            opts->config_path.empty() ? RunConfig{} : parse_config_file(opts->config_path);
        if (seed_opt->count()) cfg.seed = opts->seed;
        if (!opts->bias.empty())
            cfg.policy.belief_bias = Vec3{opts->bias[0], opts->bias[1], opts->bias[2]};
        if (!opts->out_dir.empty()) cfg.output_dir = opts->out_dir;
        cfg.scene.rng_seed = cfg.seed;

        SimOptions sim = cfg.sim_options();
        std::optional<LookupCorrector> corrector;
        if (opts->mode == "base") {
            sim.allow_intervention = false;
        } else if (opts->mode == "corrector") {
            if (opts->samples_path.empty())
                throw std::runtime_error("corrector mode needs --samples");
            sim.allow_intervention = false;
            LookupCorrector c;
            std::vector<std::string> warnings;
            c.samples = parse_samples_file(opts->samples_path, &warnings);
            print_warnings(warnings);
            c.step_weight = cfg.lookup_step_weight;
            corrector = std::move(c);
        }

        fs::create_directories(cfg.output_dir);
        const EpisodeResult res =
            run_episode(cfg.scene, cfg.policy, cfg.detector, cfg.impedance_params(), sim,
                        cfg.edit, corrector ? &*corrector : nullptr, RegionSet::all());

        const std::string prefix = opts->prefix.empty()
                                       ? "episode_s" + std::to_string(cfg.seed) + "_" + opts->mode
                                       : opts->prefix;
        const std::string base = (fs::path(cfg.output_dir) / prefix).string();
        write_episode_log(res.log, base);
        write_trajectory_file(res.base_plan, base + "_plan.traj");
        if (!res.corrected.empty()) {
            write_trajectory_file(res.corrected, base + "_corrected.traj");
            const auto& info = *res.log.intervention;
            Trajectory demo;
            demo.dt = res.corrected.dt;
            demo.poses.assign(
                res.corrected.poses.begin() + static_cast<std::ptrdiff_t>(info.k_star),
                res.corrected.poses.end());
            write_trajectory_file(demo, base + "_demo.traj");
        }
        if (!res.samples.empty()) write_samples_file(res.samples, base + "_samples.txt");
        write_scores_file(LabeledEpisode{res.log.scores(), res.log.outcome != Outcome::Success},
                          base + "_scores.txt");
        write_config_file(cfg, base + "_config.txt");
        std::cout << "outcome=" << outcome_name(res.log.outcome)
                  << " final_depth=" << format_double(res.log.final_depth)
                  << " intervened=" << (res.log.intervention ? 1 : 0)
                  << " steps=" << res.log.steps.size() << " out=" << base << "\n";
        rc = 0;
    });
}

void add_benchmark_cmd(CLI::App& app, int& rc) {
    auto* sub = app.add_subcommand(
        "benchmark", "Sweep transition lengths and/or residual-region subsets over seeded "
                     "episode batches and write the metrics table");
    struct BenchOpts {
        std::string config_path;
        std::size_t episodes{12}, eval_episodes{8};
        bool n_grid{false}, region_grid_flag{false};
        unsigned seed{1};
        std::string out;
    };
    auto opts = std::make_shared<BenchOpts>();
    sub->add_option("--config", opts->config_path, "Run configuration file (defaults apply)");
    sub->add_option("--episodes", opts->episodes, "Training episodes per row")
        ->capture_default_str();
    sub->add_option("--eval-episodes", opts->eval_episodes, "Corrector eval episodes per row")
        ->capture_default_str();
    sub->add_flag("--n-grid", opts->n_grid, "Sweep the transition length N in {10,20,30,40}");
    sub->add_flag("--region-grid", opts->region_grid_flag,
                  "Sweep the eight residual-region subsets");
    auto* seed_opt = sub->add_option("--seed", opts->seed, "Benchmark seed")->capture_default_str();
    sub->add_option("--out", opts->out, "Metrics table output path (default benchmark.csv "
                                        "in the output directory)");
    sub->callback([opts, seed_opt, &rc]() {
        RunConfig cfg =
            opts->config_path.empty() ? RunConfig{} : parse_config_file(opts->config_path);
        BenchmarkOptions bopt;
        bopt.train_episodes = opts->episodes;
        bopt.eval_episodes = opts->eval_episodes;
        bopt.seed = seed_opt->count() ? opts->seed : (cfg.seed ? cfg.seed : opts->seed);
        bopt.scene = cfg.scene;
        bopt.policy = cfg.policy;
        bopt.detector = cfg.detector;
        bopt.impedance = cfg.impedance_params();
        bopt.sim = cfg.sim_options();
        bopt.edit = cfg.edit;

        std::vector<BenchmarkConfig> grid;
        const bool both_default = !opts->n_grid && !opts->region_grid_flag;
        if (opts->n_grid || both_default)
            for (auto& c : n_points_grid()) grid.push_back(c);
        if (opts->region_grid_flag || both_default)
            for (auto& c : region_grid()) grid.push_back(c);

        const std::vector<BenchmarkRow> rows = run_benchmark(bopt, grid);
        fs::create_directories(cfg.output_dir);
        const std::string out = opts->out.empty()
                                    ? (fs::path(cfg.output_dir) / "benchmark.csv").string()
                                    : opts->out;
        write_benchmark_file(rows, out);
        write_config_file(cfg, out + ".config.txt");
        std::cout << serialize_benchmark(rows);
        std::cerr << "wrote " << out << "\n";
        rc = 0;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trajectory editing, residual supervision, failure detection and the "
                 "peg-in-hole correction loop"};
    app.require_subcommand(1);
    int rc = 0;
    add_edit_cmd(app, rc);
    add_gen_residuals_cmd(app, rc);
    add_calibrate_cmd(app, rc);
    add_detect_eval_cmd(app, rc);
    add_simulate_cmd(app, rc);
    add_benchmark_cmd(app, rc);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
