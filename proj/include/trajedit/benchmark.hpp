#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trajedit/sim.hpp"

namespace trajedit {

// One row of a benchmark sweep: a segment length and a choice of residual
// regions to keep when aggregating correction data.
struct BenchmarkConfig {
    std::string label;
    std::size_t n_points{20};
    RegionSet regions{};
};

// Segment-length sweep: N in {10, 20, 30, 40}, all regions enabled.
std::vector<BenchmarkConfig> n_points_grid();

// Region-ablation sweep: the pre-edit region is always kept (it pins the
// no-op behaviour away from the correction) while the transition, demo and
// post-edit regions are toggled, giving eight subsets.
std::vector<BenchmarkConfig> region_grid();

struct BenchmarkRow {
    std::string label;
    std::size_t n_points{0};
    std::string regions;
    std::size_t train_episodes{0};
    std::size_t eval_episodes{0};
    double base_success{0.0};       // scripted policy alone
    double ter_success{0.0};        // detect -> pause -> demo -> edit -> replay
    double corrector_success{0.0};  // lookup corrector built from aggregated samples
    double mean_interventions{0.0};
    double precision{1.0};
    double recall{1.0};
    // Largest / mean step at the two splice points of the corrected
    // trajectories, divided by the median consecutive step of the base plan.
    double junction_ratio_max{0.0};
    double junction_ratio_mean{0.0};
};

struct BenchmarkOptions {
    std::size_t train_episodes{12};
    std::size_t eval_episodes{8};
    // Every unbiased_every-th training seed runs with the belief bias zeroed,
    // so the detector sees clean episodes too.  0 disables unbiased seeds.
    std::size_t unbiased_every{4};
    unsigned seed{1};
    SceneConfig scene{};
    PolicyConfig policy{};
    DetectorConfig detector{};
    ImpedanceParams impedance{ImpedanceParams::isotropic(1500.0, 30.0, 80.0, 1.1)};
    SimOptions sim{};
    EditConfig edit{};
};

// Ratio of the worst splice step of `corrected` (prefix->segment and
// segment->demo joins) to the median consecutive step of `base`.
double junction_ratio(const Trajectory& base, const Trajectory& corrected,
                      std::size_t k_star, std::size_t n_points);

// Runs the full loop for every row: a training phase of scripted episodes
// with intervention enabled (aggregating region-filtered residual samples and
// detector statistics), a twin base run per seed for the success baseline,
// then fresh corrector-driven episodes.  Deterministic in opt.seed.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkOptions& opt,
                                        const std::vector<BenchmarkConfig>& grid);

}  // namespace trajedit
