#pragma once

#include <string>
#include <vector>

#include "trajedit/benchmark.hpp"
#include "trajedit/detector.hpp"
#include "trajedit/geometry.hpp"
#include "trajedit/residual.hpp"
#include "trajedit/sim.hpp"

namespace trajedit {

// Shortest exact decimal form (%.17g); strtod recovers the identical double.
std::string format_double(double v);

// --- trajectories ------------------------------------------------------
//
//   # trajectory dt=<dt> fields=t,px,py,pz,qw,qx,qy,qz[,fx,fy,fz,tx,ty,tz]
//   0,0.4,0,0.3,1,0,0,0
//   ...
//
// One comma-separated line per step; the wrench columns appear only when the
// trajectory carries wrenches.  Parse errors cite the 1-based line number and
// the field name.  Quaternions further than 1e-6 from unit norm are an error;
// deviations in (1e-9, 1e-6] are renormalized with a warning record.

std::string serialize_trajectory(const Trajectory& traj);
Trajectory parse_trajectory(const std::string& text, const std::string& name = "<string>",
                            std::vector<std::string>* warnings = nullptr);
void write_trajectory_file(const Trajectory& traj, const std::string& path);
Trajectory parse_trajectory_file(const std::string& path,
                                 std::vector<std::string>* warnings = nullptr);

// --- residual samples --------------------------------------------------
//
//   # residual-samples count=<n>
//   <region>,<step>,<state pose 7>,<base action 7>,<dp 3>,<dq 4>

std::string serialize_samples(const std::vector<ResidualSample>& samples);
std::vector<ResidualSample> parse_samples(const std::string& text,
                                          const std::string& name = "<string>",
                                          std::vector<std::string>* warnings = nullptr);
void write_samples_file(const std::vector<ResidualSample>& samples, const std::string& path);
std::vector<ResidualSample> parse_samples_file(const std::string& path,
                                               std::vector<std::string>* warnings = nullptr);

// --- labeled score streams ---------------------------------------------
//
//   # scores label=failed|success
//   <score>        (one per command step)

std::string serialize_scores(const LabeledEpisode& episode);
LabeledEpisode parse_scores(const std::string& text, const std::string& name = "<string>");
void write_scores_file(const LabeledEpisode& episode, const std::string& path);
LabeledEpisode parse_scores_file(const std::string& path);

// --- episode logs ------------------------------------------------------
//
// A log is a file pair: <base>.traj holds the measured trajectory with the
// sensed wrenches, and <base>.events holds the episode header plus one line
// per step with the score, mode, commanded pose and predicted wrench.

std::string serialize_events(const EpisodeLog& log);
void write_episode_log(const EpisodeLog& log, const std::string& base_path);
EpisodeLog read_episode_log(const std::string& base_path,
                            std::vector<std::string>* warnings = nullptr);
EpisodeLog parse_episode_log(const std::string& traj_text, const std::string& events_text,
                             const std::string& name = "<string>",
                             std::vector<std::string>* warnings = nullptr);

// --- benchmark tables --------------------------------------------------
//
//   # benchmark
//   label,n_points,regions,...   (header row, then one row per config;
//                                 region subsets are '+'-joined)

std::string serialize_benchmark(const std::vector<BenchmarkRow>& rows);
std::vector<BenchmarkRow> parse_benchmark(const std::string& text,
                                          const std::string& name = "<string>");
void write_benchmark_file(const std::vector<BenchmarkRow>& rows, const std::string& path);
std::vector<BenchmarkRow> parse_benchmark_file(const std::string& path);

// Whole-file helpers shared by the CLI.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace trajedit
