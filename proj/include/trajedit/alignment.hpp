#pragma once

#include "trajedit/geometry.hpp"

#include <cstddef>

namespace trajedit {

/// Weights of the combined pose distance D(k) = omega_p * d_p + omega_q * d_q.
struct AlignmentWeights {
    double omega_p{1.0};
    double omega_q{0.5};
};

struct AlignmentResult {
    std::size_t k_star{0};  // index into the base trajectory
    double distance{0.0};   // D(k_star)
};

/// Index of the base pose closest to the start of a correction, under the
/// combined position/orientation distance. Ties go to the smallest index.
/// Throws std::invalid_argument on an empty base trajectory.
AlignmentResult nearest_point(const Trajectory& base, const Pose& human_start,
                              const AlignmentWeights& w = {});

}  // namespace trajedit
