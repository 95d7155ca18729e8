#pragma once

#include "trajedit/geometry.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace trajedit {

/// Which per-step discrepancy score drives detection.
enum class DetectorMetric { ForcePredictionError, PositionPredictionError };

struct DetectorConfig {
    DetectorMetric metric{DetectorMetric::ForcePredictionError};
    double threshold_c{11.0};
    std::size_t debounce_k{1};  // consecutive exceedances required to trigger
};

/// Score stream of one finished episode plus its ground-truth outcome.
struct LabeledEpisode {
    std::vector<double> scores;
    bool failed{false};
};

struct PrecisionRecall {
    double precision{1.0};
    double recall{1.0};
};

/// L1 norm of the 6-component wrench prediction error.
double force_error(const Wrench& predicted, const Wrench& measured);

/// Euclidean distance between the predicted action position and the current
/// end-effector position (the position-prediction-error baseline).
double position_error(const Pose& predicted_action, const Pose& current);

/// First index t whose trailing debounce_k scores all exceed threshold_c;
/// nullopt if the stream never triggers.
std::optional<std::size_t> detect(const std::vector<double>& scores,
                                  const DetectorConfig& cfg);

/// Online form of detect: feed scores one at a time; keeps only a counter.
class StreamingDetector {
public:
    explicit StreamingDetector(const DetectorConfig& cfg) : cfg_(cfg) {}

    /// Returns the trigger index the first time the debounce window fills;
    /// nullopt before and after (the trigger is remembered in triggered()).
    std::optional<std::size_t> push(double score);

    bool triggered() const { return trigger_.has_value(); }
    std::optional<std::size_t> trigger_index() const { return trigger_; }
    void reset();

private:
    DetectorConfig cfg_;
    std::size_t next_index_{0};
    std::size_t run_length_{0};
    std::optional<std::size_t> trigger_;
};

/// Largest threshold that still flags every failed episode (an episode is
/// predicted failed iff max(scores) > c), i.e. recall = 1 with maximal
/// precision. The threshold is placed at the midpoint between the critical
/// failed max-score and the next lower max-score when one exists, else a
/// relative 1e-9 margin below the critical score. Throws
/// std::invalid_argument when no failed episode exists or the critical
/// max-score is <= 0 (calibration would have to flag everything).
double calibrate(const std::vector<LabeledEpisode>& episodes);

/// Episode-level precision/recall of detect() under cfg. With no positive
/// predictions precision is 1.0 (vacuous); with no failed episodes recall
/// is 1.0.
PrecisionRecall evaluate(const std::vector<LabeledEpisode>& episodes,
                         const DetectorConfig& cfg);

}  // namespace trajedit
