#include "trajedit/alignment.hpp"

#include <stdexcept>

namespace trajedit {

AlignmentResult nearest_point(const Trajectory& base, const Pose& human_start,
                              const AlignmentWeights& w) {
    if (base.empty()) throw std::invalid_argument("nearest_point: base trajectory is empty");
    if (!(w.omega_p > 0.0) || w.omega_q < 0.0)
        throw std::invalid_argument("nearest_point: weights must satisfy omega_p > 0, omega_q >= 0");

    AlignmentResult best{0, w.omega_p * position_distance(base.poses[0], human_start) +
                                w.omega_q * quaternion_distance(base.poses[0], human_start)};
    for (std::size_t k = 1; k < base.size(); ++k) {
        const double d = w.omega_p * position_distance(base.poses[k], human_start) +
                         w.omega_q * quaternion_distance(base.poses[k], human_start);
        if (d < best.distance) best = {k, d};
    }
    return best;
}

}  // namespace trajedit
