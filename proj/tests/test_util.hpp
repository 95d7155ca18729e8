#pragma once

// Deterministic random builders shared by the unit tests.

#include <random>

#include "trajedit/geometry.hpp"

namespace testutil {

using trajedit::Pose;
using trajedit::Quat;
using trajedit::Trajectory;
using trajedit::Vec3;
using trajedit::Wrench;

inline Quat random_unit_quat(std::mt19937& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Quat q;
    do {
        q = Quat(n(rng), n(rng), n(rng), n(rng));
    } while (q.norm() < 1e-6);
    q.normalize();
    return q;
}

inline Vec3 random_vec3(std::mt19937& rng, double scale = 1.0) {
    std::normal_distribution<double> n(0.0, scale);
    return Vec3(n(rng), n(rng), n(rng));
}

inline Pose random_pose(std::mt19937& rng, double pos_scale = 1.0) {
    return Pose{random_vec3(rng, pos_scale), random_unit_quat(rng)};
}

inline Wrench random_wrench(std::mt19937& rng, double scale = 1.0) {
    return Wrench{random_vec3(rng, scale), random_vec3(rng, scale)};
}

/// Random-walk trajectory with millimetre position steps and small rotation
/// steps -- the shape of an episode plan.
inline Trajectory random_walk(std::mt19937& rng, std::size_t n, double step_scale = 2e-3,
                              double rot_scale = 0.02, double dt = 0.02) {
    Trajectory t;
    t.dt = dt;
    Pose cur = random_pose(rng, 0.3);
    t.poses.push_back(cur);
    for (std::size_t i = 1; i < n; ++i) {
        cur = Pose{cur.p + random_vec3(rng, step_scale),
                   trajedit::quat_exp(random_vec3(rng, rot_scale)) * cur.q};
        t.poses.push_back(cur);
    }
    return t;
}

inline Quat rot_z(double angle_rad) {
    return Quat(Eigen::AngleAxisd(angle_rad, Vec3::UnitZ()));
}

}  // namespace testutil
