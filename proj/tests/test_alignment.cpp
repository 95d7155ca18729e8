#include "trajedit/alignment.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"

using namespace trajedit;
using testutil::random_pose;
using testutil::random_walk;
using testutil::rot_z;

namespace {

Trajectory line_along_x(std::size_t n, double step) {
    Trajectory t;
    t.dt = 0.02;
    for (std::size_t i = 0; i < n; ++i)
        t.poses.push_back(Pose{{static_cast<double>(i) * step, 0, 0}, Quat::Identity()});
    return t;
}

}  // namespace

TEST_CASE("nearest point on a position line") {
    // 11 poses at x = 0, 0.1, ..., 1.0; query at x = 0.52 -> index 5
    const Trajectory base = line_along_x(11, 0.1);
    const AlignmentResult r = nearest_point(base, Pose{{0.52, 0, 0}, Quat::Identity()});
    CHECK(r.k_star == 5);
    CHECK(r.distance == doctest::Approx(0.02));
}

TEST_CASE("orientation term picks the rotationally closest pose") {
    // identical positions, yaw 0..100 deg in 10 deg steps; query at 42 deg
    Trajectory base;
    base.dt = 0.02;
    for (int i = 0; i <= 10; ++i)
        base.poses.push_back(Pose{{0.3, 0, 0}, rot_z(i * 10.0 * M_PI / 180.0)});
    const AlignmentResult r =
        nearest_point(base, Pose{{0.3, 0, 0}, rot_z(42.0 * M_PI / 180.0)});
    CHECK(r.k_star == 4);
}

TEST_CASE("ties go to the smallest index") {
    Trajectory base;
    base.dt = 0.02;
    base.poses = {Pose{{0, 0, 0}, Quat::Identity()}, Pose{{1, 0, 0}, Quat::Identity()}};
    CHECK(nearest_point(base, Pose{{0.5, 0, 0}, Quat::Identity()}).k_star == 0);
}

TEST_CASE("matches an exhaustive scan on random trajectories") {
    std::mt19937 rng(21);
    const AlignmentWeights w{};
    for (int trial = 0; trial < 50; ++trial) {
        const Trajectory base = random_walk(rng, 40, 0.01, 0.1);
        const Pose query = random_pose(rng, 0.3);

        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < base.size(); ++k) {
            const double d = w.omega_p * position_distance(base.poses[k], query) +
                             w.omega_q * quaternion_distance(base.poses[k], query);
            if (d < best_d) {
                best_d = d;
                best = k;
            }
        }
        const AlignmentResult r = nearest_point(base, query, w);
        CHECK(r.k_star == best);
        CHECK(r.distance == doctest::Approx(best_d));
    }
}

TEST_CASE("scaling both weights leaves the argmin unchanged") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const Trajectory base = random_walk(rng, 30, 0.01, 0.1);
        const Pose query = random_pose(rng, 0.3);
        const auto a = nearest_point(base, query, AlignmentWeights{1.0, 0.5});
        const auto b = nearest_point(base, query, AlignmentWeights{3.7, 1.85});
        CHECK(a.k_star == b.k_star);
    }
}

TEST_CASE("empty base is rejected") {
    Trajectory base;
    base.dt = 0.02;
    CHECK_THROWS_AS(nearest_point(base, Pose{}), std::invalid_argument);
}
