#include "trajedit/editor.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace trajedit;
using testutil::random_pose;
using testutil::random_vec3;
using testutil::random_walk;

namespace {

Trajectory one_d_base() {
    Trajectory base;
    base.dt = 0.02;
    for (int i = 0; i < 3; ++i)
        base.poses.push_back(Pose{{static_cast<double>(i), 0, 0}, Quat::Identity()});
    return base;
}

// Position objective of the N=2 one-dimensional instance, written out by
// hand: fidelity to (0, 1), step deviations from the base's unit steps,
// endpoint pinned at 3.
double hand_objective(double x0, double x1, double lambda_s) {
    const double fid = x0 * x0 + (x1 - 1.0) * (x1 - 1.0);
    const double s1 = (x1 - x0) - 1.0;
    const double s2 = (3.0 - x1) - 1.0;
    return fid + lambda_s * (s1 * s1 + s2 * s2);
}

}  // namespace

TEST_CASE("N=2 one-dimensional instance: dense solve and grid scan agree") {
    const Trajectory base = one_d_base();
    EditConfig cfg;
    cfg.n_points = 2;
    const EditResult res = optimize_segment(base, 2, Pose{{3, 0, 0}, Quat::Identity()}, cfg);
    REQUIRE(res.segment.size() == 3);
    const double x0 = res.segment.poses[0].p.x();
    const double x1 = res.segment.poses[1].p.x();
    CHECK(res.segment.poses[2].p.x() == 3.0);

    // independent dense solve of the same quadratic
    oracles::Mat3X bp(3, 3);
    bp << 0, 0, 0, 1, 0, 0, 2, 0, 0;
    const oracles::Mat3X dense =
        oracles::dense_edit_positions(bp, Vec3{3, 0, 0}, cfg.weights, true);
    CHECK(std::abs(x0 - dense(0, 0)) < 1e-12);
    CHECK(std::abs(x1 - dense(1, 0)) < 1e-12);

    // closed form of the 2x2 stationarity system: x0 = 0.2, x1 = 1.4
    CHECK(x0 == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(x1 == doctest::Approx(1.4).epsilon(1e-12));

    // brute-force grid scan at 1e-4 resolution around the reported optimum
    double best0 = 0.0, best1 = 0.0, best = std::numeric_limits<double>::infinity();
    for (double a = x0 - 0.05; a <= x0 + 0.05; a += 1e-4)
        for (double b = x1 - 0.05; b <= x1 + 0.05; b += 1e-4) {
            const double o = hand_objective(a, b, cfg.weights.lambda_s);
            if (o < best) {
                best = o;
                best0 = a;
                best1 = b;
            }
        }
    CHECK(std::abs(best0 - x0) <= 1e-4 + 1e-9);
    CHECK(std::abs(best1 - x1) <= 1e-4 + 1e-9);
    CHECK(hand_objective(x0, x1, cfg.weights.lambda_s) <= best + 1e-12);
}

TEST_CASE("degenerate demo start reproduces the base segment") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        const Trajectory base = random_walk(rng, 40, 2e-3, 0.05);
        const std::size_t k_star = 25 + trial;
        const EditResult res = optimize_segment(base, k_star, base.poses[k_star]);
        REQUIRE(res.effective_n == 20);
        for (std::size_t i = 0; i < res.segment.size(); ++i) {
            const Pose& b = base.poses[res.start_index + i];
            CHECK(position_distance(res.segment.poses[i], b) <= 1e-8);
            CHECK(quaternion_distance(res.segment.poses[i], b) <= 1e-8);
        }
        CHECK(res.final_objective() <= 1e-8);
        CHECK(res.converged);
    }
}

TEST_CASE("lambda_s = 0 makes the free poses exactly the base poses") {
    std::mt19937 rng(32);
    const Trajectory base = random_walk(rng, 30, 2e-3, 0.05);
    EditConfig cfg;
    cfg.weights.lambda_s = 0.0;
    const Pose target = random_pose(rng, 0.3);
    const EditResult res = optimize_segment(base, 25, target, cfg);
    for (std::size_t i = 0; i + 1 < res.segment.size(); ++i) {
        CHECK(res.segment.poses[i].p == base.poses[res.start_index + i].p);
        CHECK(res.segment.poses[i].q.coeffs() == base.poses[res.start_index + i].q.coeffs());
    }
    CHECK(res.segment.poses.back().p == target.p);
    CHECK(res.converged);
}

TEST_CASE("position solution matches a dense solve in both endpoint modes") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        const Trajectory base = random_walk(rng, 40, 3e-3, 0.05);
        EditConfig cfg;
        cfg.n_points = 12;
        cfg.weights.lambda_s = (trial % 3 == 0) ? 0.5 : (trial % 3 == 1 ? 1.0 : 2.5);
        cfg.hard_endpoint = (trial % 2 == 0);
        const std::size_t k_star = 30;
        const Pose target{base.poses[k_star].p + random_vec3(rng, 5e-3),
                          testutil::random_unit_quat(rng)};

        const EditResult res = optimize_segment(base, k_star, target, cfg);
        oracles::Mat3X bp(13, 3);
        for (int i = 0; i <= 12; ++i) bp.row(i) = base.poses[k_star - 12 + i].p.transpose();
        const oracles::Mat3X dense =
            oracles::dense_edit_positions(bp, target.p, cfg.weights, cfg.hard_endpoint);
        for (std::size_t i = 0; i < res.segment.size(); ++i)
            CHECK((res.segment.poses[i].p.transpose() - dense.row(i)).cwiseAbs().maxCoeff() <=
                  1e-8);
    }
}

TEST_CASE("objective trace is non-increasing and the hard endpoint is met") {
    std::mt19937 rng(34);
    for (int trial = 0; trial < 10; ++trial) {
        const Trajectory base = random_walk(rng, 35, 3e-3, 0.08);
        const std::size_t k_star = 22;
        const Pose target{base.poses[k_star].p + random_vec3(rng, 0.01),
                          testutil::random_unit_quat(rng)};
        const EditResult res = optimize_segment(base, k_star, target);
        REQUIRE(res.objective_trace.size() >= 2);
        for (std::size_t i = 1; i < res.objective_trace.size(); ++i)
            CHECK(res.objective_trace[i] <= res.objective_trace[i - 1]);
        CHECK(res.endpoint_position_error <= 1e-9);
        CHECK(res.endpoint_quaternion_error <= 1e-9);
        CHECK(position_distance(res.segment.poses.back(), target) == 0.0);
    }
}

TEST_CASE("collinear base and target keep the solution on the line") {
    const Vec3 origin{0.1, -0.2, 0.3};
    const Vec3 dir = Vec3{1.0, 2.0, -0.5}.normalized();
    Trajectory base;
    base.dt = 0.02;
    for (int i = 0; i < 25; ++i)
        base.poses.push_back(Pose{origin + 0.01 * i * dir, Quat::Identity()});
    const Pose target{origin + 0.31 * dir, Quat::Identity()};
    const EditResult res = optimize_segment(base, 24, target);
    for (const Pose& p : res.segment.poses) {
        const Vec3 rel = p.p - origin;
        const Vec3 off_line = rel - rel.dot(dir) * dir;
        CHECK(off_line.norm() <= 1e-8);
    }
}

TEST_CASE("segment is clamped when k_star is shorter than n_points") {
    std::mt19937 rng(35);
    const Trajectory base = random_walk(rng, 30);
    const EditResult res = optimize_segment(base, 5, random_pose(rng, 0.3));
    CHECK(res.effective_n == 5);
    CHECK(res.start_index == 0);
    CHECK(res.segment.size() == 6);
}

TEST_CASE("optimize_segment input validation") {
    std::mt19937 rng(36);
    const Trajectory base = random_walk(rng, 10);
    Trajectory single;
    single.dt = 0.02;
    single.poses = {Pose{}};
    CHECK_THROWS_AS(optimize_segment(single, 0, Pose{}), std::invalid_argument);
    CHECK_THROWS_AS(optimize_segment(base, 10, Pose{}), std::invalid_argument);
    EditConfig bad;
    bad.n_points = 1;
    CHECK_THROWS_AS(optimize_segment(base, 5, Pose{}, bad), std::invalid_argument);
    EditConfig neg;
    neg.weights.lambda_s = -1.0;
    CHECK_THROWS_AS(optimize_segment(base, 5, Pose{}, neg), std::invalid_argument);
    EditConfig zero_e;
    zero_e.weights.lambda_e = 0.0;
    CHECK_THROWS_AS(optimize_segment(base, 5, Pose{}, zero_e), std::invalid_argument);
}

TEST_CASE("assemble_corrected concatenates prefix, segment and demo tail") {
    std::mt19937 rng(37);
    const Trajectory base = random_walk(rng, 100, 2e-3, 0.03);
    const std::size_t k_star = 60, n = 20;
    EditConfig cfg;
    cfg.n_points = n;
    const Pose start{base.poses[k_star].p + Vec3{0.004, -0.002, 0.001}, base.poses[k_star].q};
    const EditResult res = optimize_segment(base, k_star, start, cfg);

    Trajectory human;
    human.dt = base.dt;
    Pose cur = start;
    for (int i = 0; i < 30; ++i) {
        human.poses.push_back(cur);
        cur = Pose{cur.p + random_vec3(rng, 1e-3), cur.q};
    }

    const Trajectory out = assemble_corrected(base, k_star, res.segment, human, n);
    // total length k* + n_h: 40 prefix + 21 segment + 29 tail
    REQUIRE(out.size() == 90);
    CHECK(out.dt == base.dt);
    for (std::size_t i = 0; i < 40; ++i) CHECK(out.poses[i].p == base.poses[i].p);
    for (std::size_t i = 0; i < 21; ++i) CHECK(out.poses[40 + i].p == res.segment.poses[i].p);
    for (std::size_t i = 0; i < 29; ++i) CHECK(out.poses[61 + i].p == human.poses[i + 1].p);

    // k* = N: no prefix
    const EditResult res0 = optimize_segment(base, n, Pose{base.poses[n].p, base.poses[n].q}, cfg);
    Trajectory human0;
    human0.dt = base.dt;
    human0.poses = {base.poses[n], Pose{base.poses[n].p + Vec3{0, 0, 1e-3}, base.poses[n].q}};
    const Trajectory out0 = assemble_corrected(base, n, res0.segment, human0, n);
    CHECK(out0.size() == n + 2);
    CHECK(out0.poses[0].p == res0.segment.poses[0].p);

    // single-pose demo: no tail at all
    Trajectory human1;
    human1.dt = base.dt;
    human1.poses = {start};
    const Trajectory out1 = assemble_corrected(base, k_star, res.segment, human1, n);
    CHECK(out1.size() == 61);
    CHECK(out1.poses.back().p == start.p);
}

TEST_CASE("assemble_corrected resamples a demo recorded at a different rate") {
    std::mt19937 rng(38);
    const Trajectory base = random_walk(rng, 50, 2e-3, 0.03);
    const std::size_t k_star = 30, n = 10;
    EditConfig cfg;
    cfg.n_points = n;
    const Pose start{base.poses[k_star].p + Vec3{0.002, 0, 0}, base.poses[k_star].q};
    const EditResult res = optimize_segment(base, k_star, start, cfg);

    Trajectory human;
    human.dt = base.dt / 2.0;  // 100 Hz demo against a 50 Hz base
    for (int i = 0; i < 9; ++i)
        human.poses.push_back(Pose{start.p + Vec3{0, 0, -1e-3 * i}, start.q});

    const Trajectory out = assemble_corrected(base, k_star, res.segment, human, n);
    CHECK(out.dt == base.dt);
    // demo duration 8 * 0.01 s -> 4 resampled steps after the start pose
    CHECK(out.size() == (k_star - n) + (n + 1) + 4);
    CHECK(out.poses.back().p == human.poses.back().p);
}

TEST_CASE("assemble_corrected rejects inconsistent inputs") {
    std::mt19937 rng(39);
    const Trajectory base = random_walk(rng, 50);
    const std::size_t k_star = 30, n = 10;
    EditConfig cfg;
    cfg.n_points = n;
    const Pose start{base.poses[k_star].p + Vec3{0.002, 0, 0}, base.poses[k_star].q};
    const EditResult res = optimize_segment(base, k_star, start, cfg);
    Trajectory human;
    human.dt = base.dt;
    human.poses = {start, start};

    CHECK_THROWS_AS(assemble_corrected(base, 60, res.segment, human, n), std::invalid_argument);
    CHECK_THROWS_AS(assemble_corrected(base, k_star, res.segment, human, n + 1),
                    std::invalid_argument);

    Trajectory far = human;
    far.poses[0].p += Vec3{0.01, 0, 0};
    CHECK_THROWS_AS(assemble_corrected(base, k_star, res.segment, far, n),
                    std::invalid_argument);
}
