#include "trajedit/detector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace trajedit {

double force_error(const Wrench& predicted, const Wrench& measured) {
    return (predicted.as_vector() - measured.as_vector()).lpNorm<1>();
}

double position_error(const Pose& predicted_action, const Pose& current) {
    return position_distance(predicted_action, current);
}

std::optional<std::size_t> detect(const std::vector<double>& scores,
                                  const DetectorConfig& cfg) {
    StreamingDetector det(cfg);
    for (double s : scores) {
        if (auto idx = det.push(s)) return idx;
    }
    return std::nullopt;
}

std::optional<std::size_t> StreamingDetector::push(double score) {
    const std::size_t index = next_index_++;
    if (trigger_) return std::nullopt;
    run_length_ = score > cfg_.threshold_c ? run_length_ + 1 : 0;
    if (run_length_ >= cfg_.debounce_k) {
        trigger_ = index;
        return trigger_;
    }
    return std::nullopt;
}

void StreamingDetector::reset() {
    next_index_ = 0;
    run_length_ = 0;
    trigger_.reset();
}

double calibrate(const std::vector<LabeledEpisode>& episodes) {
    double critical = std::numeric_limits<double>::infinity();
    bool any_failed = false;
    for (const auto& ep : episodes) {
        if (ep.scores.empty())
            throw std::invalid_argument("calibrate: episode with empty score stream");
        if (!ep.failed) continue;
        any_failed = true;
        critical = std::min(critical, *std::max_element(ep.scores.begin(), ep.scores.end()));
    }
    if (!any_failed)
        throw std::invalid_argument("calibrate: needs at least one failed episode");
    if (!(critical > 0.0))
        throw std::invalid_argument(
            "calibrate: a failed episode never scores above zero; any valid threshold "
            "would flag every episode");

    // Largest max-score strictly below the critical one (failed maxima are all
    // >= critical, so this can only come from successful episodes).
    double below = -std::numeric_limits<double>::infinity();
    for (const auto& ep : episodes) {
        const double m = *std::max_element(ep.scores.begin(), ep.scores.end());
        if (m < critical) below = std::max(below, m);
    }
    const double margin = critical * (1.0 - 1e-9);
    if (!std::isfinite(below)) return margin;
    const double midpoint = 0.5 * (below + critical);
    return (midpoint > 0.0 && midpoint < critical) ? midpoint : margin;
}

PrecisionRecall evaluate(const std::vector<LabeledEpisode>& episodes,
                         const DetectorConfig& cfg) {
    std::size_t positives = 0, true_positives = 0, failed = 0;
    for (const auto& ep : episodes) {
        const bool predicted = detect(ep.scores, cfg).has_value();
        positives += predicted;
        failed += ep.failed;
        true_positives += predicted && ep.failed;
    }
    PrecisionRecall pr;
    pr.precision = positives == 0
                       ? 1.0
                       : static_cast<double>(true_positives) / static_cast<double>(positives);
    pr.recall = failed == 0 ? 1.0
                            : static_cast<double>(true_positives) / static_cast<double>(failed);
    return pr;
}

}  // namespace trajedit
