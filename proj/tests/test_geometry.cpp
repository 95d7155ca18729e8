#include "trajedit/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"

using namespace trajedit;
using testutil::random_pose;
using testutil::random_unit_quat;
using testutil::random_vec3;
using testutil::random_walk;
using testutil::rot_z;

TEST_CASE("position distance") {
    CHECK(position_distance(Pose{{3, 4, 0}, Quat::Identity()}, Pose{}) == 5.0);
    CHECK(position_distance(Pose{{0.1, 0.2, 0.3}, Quat::Identity()},
                            Pose{{0.4, 0.6, 0.3}, Quat::Identity()}) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(position_distance(Pose{}, Pose{}) == 0.0);
}

TEST_CASE("quaternion distance") {
    const Pose id{};
    CHECK(quaternion_distance(id, id) == 0.0);
    CHECK(quaternion_distance(Pose{{0, 0, 0}, rot_z(M_PI)}, id) == doctest::Approx(1.0));
    CHECK(quaternion_distance(Pose{{0, 0, 0}, rot_z(M_PI / 2)}, id) ==
          doctest::Approx(1.0 - std::sqrt(2.0) / 2.0));

    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        const Quat a = random_unit_quat(rng);
        const Quat b = random_unit_quat(rng);
        Quat na = a, nb = b;
        na.coeffs() = -na.coeffs();
        nb.coeffs() = -nb.coeffs();
        // sign flips of either argument change nothing
        CHECK(quaternion_distance(a, b) == quaternion_distance(na, b));
        CHECK(quaternion_distance(a, b) == quaternion_distance(a, nb));
        CHECK(quaternion_distance(a, b) >= 0.0);
        CHECK(quaternion_distance(a, b) <= 1.0);
        // dot(q, q) of a normalized quaternion rounds to 1 +- 1 ulp
        CHECK(quaternion_distance(a, a) <= 1e-15);
    }
}

TEST_CASE("canonicalized maps to the w >= 0 hemisphere") {
    Quat flipped{-1.0, 0.0, 0.0, 0.0};
    const Quat c = canonicalized(flipped);
    CHECK(c.w() == 1.0);

    // w == 0: first nonzero of (x, y, z) decides
    Quat half{0.0, 0.0, 0.0, -1.0};
    CHECK(canonicalized(half).z() == 1.0);
    Quat half2{0.0, -0.6, 0.8, 0.0};
    CHECK(canonicalized(half2).x() == doctest::Approx(0.6));

    // non-unit input gets normalized
    Quat big{2.0, 0.0, 0.0, 0.0};
    CHECK(canonicalized(big).w() == 1.0);

    // bitwise idempotent on unit quaternions, so canonical forms survive
    // any number of round trips
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        const Quat q = canonicalized(random_unit_quat(rng));
        const Quat again = canonicalized(q);
        CHECK(again.coeffs() == q.coeffs());
    }
}

TEST_CASE("rotation vector round trips with quat_exp") {
    CHECK(rotation_vector(Quat::Identity()).norm() == 0.0);
    const Vec3 v = rotation_vector(rot_z(M_PI / 2));
    CHECK(v.x() == doctest::Approx(0.0));
    CHECK(v.z() == doctest::Approx(M_PI / 2));

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> angle(1e-8, M_PI - 1e-6);
    for (int i = 0; i < 200; ++i) {
        const Vec3 axis = random_vec3(rng).normalized();
        const Vec3 rv = angle(rng) * axis;
        CHECK((rotation_vector(quat_exp(rv)) - rv).norm() < 1e-9);
    }
    // tiny angles use the small-angle branch
    const Vec3 tiny{1e-14, 0, 0};
    CHECK((rotation_vector(quat_exp(tiny)) - tiny).norm() < 1e-15);
}

TEST_CASE("slerp endpoints and midpoint") {
    const Pose a{{0, 0, 0}, Quat::Identity()};
    const Pose b{{1, 2, 3}, rot_z(M_PI / 2)};
    CHECK(position_distance(slerp(a, b, 0.0), a) == 0.0);
    CHECK(quaternion_distance(slerp(a, b, 0.0), a) == 0.0);
    CHECK(position_distance(slerp(a, b, 1.0), b) == 0.0);
    CHECK(quaternion_distance(slerp(a, b, 1.0), b) < 1e-15);

    const Pose mid = slerp(a, b, 0.5);
    CHECK(mid.p.isApprox(Vec3{0.5, 1.0, 1.5}));
    CHECK(quaternion_distance(mid.q, rot_z(M_PI / 4)) < 1e-12);

    // shorter arc: the antipodal representation of b gives the same path
    Quat bq = b.q;
    bq.coeffs() = -bq.coeffs();
    CHECK(quaternion_distance(slerp(a.q, bq, 0.5), rot_z(M_PI / 4)) < 1e-12);
}

TEST_CASE("resample splits and keeps shared nodes exactly") {
    // two poses, dt 1 -> dt 0.5: the middle pose is the slerp midpoint
    Trajectory two;
    two.dt = 1.0;
    two.poses = {Pose{{0, 0, 0}, Quat::Identity()}, Pose{{1, 0, 0}, rot_z(M_PI / 2)}};
    const Trajectory half = resample(two, 0.5);
    REQUIRE(half.size() == 3);
    CHECK(half.dt == 0.5);
    CHECK(position_distance(half.poses[1], slerp(two.poses[0], two.poses[1], 0.5)) == 0.0);
    CHECK(quaternion_distance(half.poses[1], slerp(two.poses[0], two.poses[1], 0.5)) == 0.0);

    std::mt19937 rng(3);
    const Trajectory t = random_walk(rng, 101, 5e-3, 0.05, 0.02);

    // same dt: identical trajectory
    const Trajectory same = resample(t, 0.02);
    REQUIRE(same.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(same.poses[i].p == t.poses[i].p);
        CHECK(same.poses[i].q.coeffs() == t.poses[i].q.coeffs());
    }

    // 50 Hz -> 25 Hz: 51 poses, the even-indexed originals bitwise
    const Trajectory coarse = resample(t, 0.04);
    REQUIRE(coarse.size() == 51);
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        CHECK(coarse.poses[i].p == t.poses[2 * i].p);
        CHECK(coarse.poses[i].q.coeffs() == t.poses[2 * i].q.coeffs());
    }
}

TEST_CASE("resample interpolates wrenches linearly") {
    Trajectory t;
    t.dt = 1.0;
    t.poses = {Pose{}, Pose{{1, 0, 0}, Quat::Identity()}};
    t.wrenches = {Wrench{{0, 0, 0}, {0, 0, 0}}, Wrench{{4, 0, 0}, {0, 0, 2}}};
    const Trajectory r = resample(t, 0.25);
    REQUIRE(r.size() == 5);
    REQUIRE(r.wrenches.size() == 5);
    CHECK(r.wrenches[1].f.x() == doctest::Approx(1.0));
    CHECK(r.wrenches[3].tau.z() == doctest::Approx(1.5));
}

TEST_CASE("resample rejects bad input") {
    Trajectory t;
    t.dt = 0.02;
    CHECK_THROWS_AS(resample(t, 0.01), std::invalid_argument);  // empty
    t.poses = {Pose{}, Pose{}};
    CHECK_THROWS_AS(resample(t, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(resample(t, -1.0), std::invalid_argument);
}

TEST_CASE("pose constructor canonicalizes") {
    Quat raw{-0.5, 0.5, 0.5, -0.5};
    const Pose p{{1, 2, 3}, raw};
    CHECK(p.q.w() == doctest::Approx(0.5));
    CHECK(p.q.norm() == doctest::Approx(1.0));
    const Pose scaled{{0, 0, 0}, Quat{10.0, 0.0, 0.0, 0.0}};
    CHECK(scaled.q.w() == 1.0);
}

TEST_CASE("trajectory validate") {
    Trajectory t;
    t.dt = 0.02;
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);  // no poses
    t.poses = {Pose{}};
    CHECK_NOTHROW(t.validate());  // a single pose is fine
    t.dt = 0.0;
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
    t.dt = 0.02;
    t.wrenches = {Wrench{}, Wrench{}};
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);  // length mismatch
    t.wrenches = {Wrench{}};
    CHECK_NOTHROW(t.validate());
    CHECK(t.duration() == 0.0);
    t.poses.push_back(Pose{});
    t.wrenches.push_back(Wrench{});
    CHECK(t.duration() == doctest::Approx(0.02));
}
