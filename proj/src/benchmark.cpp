#include "trajedit/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace trajedit {

std::vector<BenchmarkConfig> n_points_grid() {
    std::vector<BenchmarkConfig> grid;
    for (std::size_t n : {10, 20, 30, 40}) {
        BenchmarkConfig cfg;
        cfg.label = "N=" + std::to_string(n);
        cfg.n_points = n;
        cfg.regions = RegionSet::all();
        grid.push_back(std::move(cfg));
    }
    return grid;
}

std::vector<BenchmarkConfig> region_grid() {
    std::vector<BenchmarkConfig> grid;
    for (int mask = 0; mask < 8; ++mask) {
        BenchmarkConfig cfg;
        cfg.regions = RegionSet::none();
        cfg.regions.pre_edit = true;
        cfg.regions.transition = (mask & 1) != 0;
        cfg.regions.human_demo = (mask & 2) != 0;
        cfg.regions.post_edit = (mask & 4) != 0;
        cfg.label = cfg.regions.to_string();
        for (char& c : cfg.label)
            if (c == ',') c = '+';
        cfg.n_points = 20;
        grid.push_back(std::move(cfg));
    }
    return grid;
}

double junction_ratio(const Trajectory& base, const Trajectory& corrected,
                      std::size_t k_star, std::size_t n_points) {
    if (base.size() < 2 || corrected.size() < 2)
        throw std::invalid_argument("junction_ratio: trajectories need at least two poses");
    if (k_star >= corrected.size())
        throw std::invalid_argument("junction_ratio: k_star out of range");

    std::vector<double> steps(base.size() - 1);
    for (std::size_t i = 0; i + 1 < base.size(); ++i)
        steps[i] = position_distance(base.poses[i], base.poses[i + 1]);
    const std::size_t mid = steps.size() / 2;
    std::nth_element(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(mid), steps.end());
    const double median = steps[mid];
    if (median <= 0.0) return std::numeric_limits<double>::infinity();

    const std::size_t n_eff = std::min(n_points, k_star);
    const std::size_t start = k_star - n_eff;
    double worst = 0.0;
    if (start >= 1)
        worst = std::max(worst, position_distance(corrected.poses[start - 1], corrected.poses[start]));
    if (k_star + 1 < corrected.size())
        worst = std::max(worst, position_distance(corrected.poses[k_star], corrected.poses[k_star + 1]));
    return worst / median;
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkOptions& opt,
                                        const std::vector<BenchmarkConfig>& grid) {
    std::vector<BenchmarkRow> rows;
    rows.reserve(grid.size());

    for (std::size_t row_i = 0; row_i < grid.size(); ++row_i) {
        const BenchmarkConfig& cfg = grid[row_i];
        EditConfig edit_cfg = opt.edit;
        edit_cfg.n_points = cfg.n_points;

        const unsigned seed_base = opt.seed + 10000u * static_cast<unsigned>(row_i);

        BenchmarkRow row;
        row.label = cfg.label;
        row.n_points = cfg.n_points;
        row.regions = cfg.regions.to_string();
        row.train_episodes = opt.train_episodes;
        row.eval_episodes = opt.eval_episodes;

        std::vector<ResidualSample> pool;
        std::vector<double> ratios;
        std::size_t base_ok = 0, ter_ok = 0, corr_ok = 0;
        std::size_t interventions = 0, positives = 0, true_positives = 0, failed_truth = 0;

        for (std::size_t e = 0; e < opt.train_episodes; ++e) {
            const bool biased =
                !(opt.unbiased_every > 0 && (e + 1) % opt.unbiased_every == 0);
            SceneConfig scene = opt.scene;
            scene.rng_seed = seed_base + static_cast<unsigned>(e);
            PolicyConfig pcfg = opt.policy;
            if (!biased) pcfg.belief_bias.setZero();
            if (biased) ++failed_truth;

            EpisodeResult ter = run_episode(scene, pcfg, opt.detector, opt.impedance,
                                            opt.sim, edit_cfg, nullptr, cfg.regions);
            if (ter.log.outcome == Outcome::Success) ++ter_ok;
            if (ter.log.intervention) {
                ++interventions;
                ++positives;
                if (biased) ++true_positives;
                pool.insert(pool.end(), ter.samples.begin(), ter.samples.end());
                ratios.push_back(junction_ratio(ter.base_plan, ter.corrected,
                                                ter.log.intervention->k_star,
                                                ter.log.intervention->n_points));
            }

            SimOptions base_sim = opt.sim;
            base_sim.allow_intervention = false;
            EpisodeResult base = run_episode(scene, pcfg, opt.detector, opt.impedance,
                                             base_sim, edit_cfg, nullptr, cfg.regions);
            if (base.log.outcome == Outcome::Success) ++base_ok;
        }

        LookupCorrector corrector{std::move(pool)};
        SimOptions eval_sim = opt.sim;
        eval_sim.allow_intervention = false;
        for (std::size_t e = 0; e < opt.eval_episodes; ++e) {
            SceneConfig scene = opt.scene;
            scene.rng_seed = seed_base + 5000u + static_cast<unsigned>(e);
            EpisodeResult res = run_episode(scene, opt.policy, opt.detector, opt.impedance,
                                            eval_sim, edit_cfg, &corrector, cfg.regions);
            if (res.log.outcome == Outcome::Success) ++corr_ok;
        }

        const double nt = static_cast<double>(opt.train_episodes);
        const double ne = static_cast<double>(opt.eval_episodes);
        row.base_success = opt.train_episodes ? static_cast<double>(base_ok) / nt : 0.0;
        row.ter_success = opt.train_episodes ? static_cast<double>(ter_ok) / nt : 0.0;
        row.corrector_success = opt.eval_episodes ? static_cast<double>(corr_ok) / ne : 0.0;
        row.mean_interventions =
            opt.train_episodes ? static_cast<double>(interventions) / nt : 0.0;
        row.precision = positives ? static_cast<double>(true_positives) /
                                        static_cast<double>(positives)
                                  : 1.0;
        row.recall = failed_truth ? static_cast<double>(true_positives) /
                                        static_cast<double>(failed_truth)
                                  : 1.0;
        if (!ratios.empty()) {
            row.junction_ratio_max = *std::max_element(ratios.begin(), ratios.end());
            double sum = 0.0;
            for (double r : ratios) sum += r;
            row.junction_ratio_mean = sum / static_cast<double>(ratios.size());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace trajedit
