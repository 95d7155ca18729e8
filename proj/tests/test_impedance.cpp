#include "trajedit/impedance.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"

using namespace trajedit;
using testutil::random_pose;
using testutil::rot_z;

namespace {

Jacobian2 finite_difference_jacobian(ChainModel model, double h = 1e-6) {
    Jacobian2 j;
    for (int col = 0; col < 2; ++col) {
        ChainModel plus = model, minus = model;
        plus.theta[col] += h;
        minus.theta[col] -= h;
        const Pose pp = plus.tip_pose(), pm = minus.tip_pose();
        j.block<3, 1>(0, col) = (pp.p - pm.p) / (2.0 * h);
        j.block<3, 1>(3, col) = rotation_vector(pp.q * pm.q.inverse()) / (2.0 * h);
    }
    return j;
}

}  // namespace

TEST_CASE("impedance wrench vanishes at the target and is linear in the gains") {
    const ImpedanceParams p = ImpedanceParams::isotropic(100.0, 10.0, 5.0, 0.5);
    const Pose x{{0.3, -0.1, 0.2}, rot_z(0.4)};
    const Twist v = Twist::Constant(0.15);
    const Wrench at_target = impedance_wrench(x, v, x, v, p);
    CHECK(at_target.f.norm() == 0.0);
    // q * q^-1 can carry ~1e-16 residue through the normalization division
    CHECK(at_target.tau.norm() < 1e-13);

    // pure translational stiffness: 1 cm of x error -> 1 N along x
    const ImpedanceParams k_only =
        ImpedanceParams::from_diagonals((Twist() << 100, 100, 100, 0, 0, 0).finished(),
                                        Twist::Zero());
    Pose x_d = x;
    x_d.p += Vec3{0.01, 0, 0};
    const Wrench f = impedance_wrench(x_d, Twist::Zero(), x, Twist::Zero(), k_only);
    CHECK(f.f.x() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.f.tail<2>().norm() == 0.0);
    CHECK(f.tau.norm() == 0.0);

    // zero stiffness: the wrench is D times the twist error
    const ImpedanceParams d_only = ImpedanceParams::isotropic(0.0, 0.0, 3.0, 0.25);
    Twist v_d = Twist::Zero();
    v_d << 0.2, 0, -0.1, 0, 0.4, 0;
    const Wrench damp = impedance_wrench(x, v_d, x, Twist::Zero(), d_only);
    CHECK(damp.f.isApprox(Vec3{0.6, 0, -0.3}, 1e-12));
    CHECK(damp.tau.isApprox(Vec3{0, 0.1, 0}, 1e-12));
}

TEST_CASE("pose_error stacks the position gap and the relative rotation vector") {
    const Pose actual{{1, 2, 3}, Quat::Identity()};
    const Pose desired{{1.5, 2, 2}, rot_z(0.3)};
    const Twist e = pose_error(desired, actual);
    CHECK(e.head<3>().isApprox(Vec3{0.5, 0, -1.0}, 1e-12));
    CHECK(e.tail<3>().isApprox(Vec3{0, 0, 0.3}, 1e-12));

    // the error is expressed relative to the actual orientation on the left
    const Pose rolled{{0, 0, 0}, rot_z(1.0)};
    const Pose rolled_more{{0, 0, 0}, rot_z(1.4)};
    CHECK(pose_error(rolled_more, rolled).tail<3>().isApprox(Vec3{0, 0, 0.4}, 1e-12));
}

TEST_CASE("impedance parameter validation") {
    CHECK_NOTHROW(ImpedanceParams::isotropic(500, 20, 44.7, 0.894).validate());
    CHECK_NOTHROW(ImpedanceParams{}.validate());  // zero gains are admissible

    ImpedanceParams asym = ImpedanceParams::isotropic(10, 1, 1, 1);
    asym.K(0, 1) = 0.5;
    CHECK_THROWS_AS(asym.validate(), std::invalid_argument);

    ImpedanceParams negative = ImpedanceParams::isotropic(10, 1, 1, 1);
    negative.D(2, 2) = -1.0;
    CHECK_THROWS_AS(negative.validate(), std::invalid_argument);
}

TEST_CASE("gravity torque of the horizontal two-link arm") {
    ChainModel model;  // unit links and masses, gravity -y
    const Vec2 tau = model.gravity_torque();
    CHECK(tau[0] == doctest::Approx(19.62).epsilon(1e-12));
    CHECK(tau[1] == doctest::Approx(4.905).epsilon(1e-12));

    // pointing straight up (+y): no moment arm, no holding torque
    model.theta = Vec2{M_PI / 2.0, 0.0};
    CHECK(model.gravity_torque().norm() < 1e-12);
}

TEST_CASE("joint torque command reduces to gravity compensation at the target") {
    ChainModel model;
    model.theta = Vec2{0.7, -0.4};
    const ImpedanceParams p = ImpedanceParams::isotropic(500, 20, 40, 1);

    const Vec2 tau = joint_torque_command(model, model.tip_pose(), Twist::Zero(), p);
    CHECK((tau - model.gravity_torque()).norm() < 1e-12);

    ChainModel weightless = model;
    weightless.gravity = Vec3::Zero();
    CHECK(joint_torque_command(weightless, model.tip_pose(), Twist::Zero(), p).norm() < 1e-12);
}

TEST_CASE("unit tip force maps to joint torques through the Jacobian transpose") {
    ChainModel model;
    model.theta = Vec2{0.0, M_PI / 2.0};  // elbow at (1,0), tip at (1,1)
    CHECK(model.tip_pose().p.isApprox(Vec3{1, 1, 0}, 1e-12));

    // translational stiffness 1 and a +1 m x offset request exactly 1 N in +x
    const ImpedanceParams p = ImpedanceParams::isotropic(1.0, 0.0, 0.0, 0.0);
    Pose x_d = model.tip_pose();
    x_d.p += Vec3{1, 0, 0};
    const Vec2 tau = joint_torque_command(model, x_d, Twist::Zero(), p);
    const Vec2 net = tau - model.gravity_torque();
    CHECK(net[0] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(net[1] == doctest::Approx(-1.0).epsilon(1e-9));

    // virtual work cross-check: tau_j = F . d(tip)/d(theta_j)
    const Jacobian2 fd = finite_difference_jacobian(model);
    const Vec3 force{1, 0, 0};
    CHECK(net[0] == doctest::Approx(force.dot(fd.block<3, 1>(0, 0))).epsilon(1e-6));
    CHECK(net[1] == doctest::Approx(force.dot(fd.block<3, 1>(0, 1))).epsilon(1e-6));
}

TEST_CASE("analytic Jacobian matches finite differences") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> angle(-2.5, 2.5);
    std::uniform_real_distribution<double> length(0.4, 1.6);
    for (int trial = 0; trial < 50; ++trial) {
        ChainModel model;
        model.theta = Vec2{angle(rng), angle(rng)};
        model.link_lengths = Vec2{length(rng), length(rng)};
        const Jacobian2 fd = finite_difference_jacobian(model);
        CHECK((model.jacobian() - fd).cwiseAbs().maxCoeff() < 1e-6);
    }
}

TEST_CASE("wrench estimation inverts the torque map on the arm's wrench subspace") {
    std::mt19937 rng(62);
    std::uniform_real_distribution<double> angle(0.3, 2.6);
    std::uniform_real_distribution<double> coeff(-5.0, 5.0);

    const ChainModel at_rest;
    CHECK(estimate_external_wrench(at_rest, Vec2::Zero()).wrench.as_vector().norm() == 0.0);

    for (int trial = 0; trial < 200; ++trial) {
        ChainModel model;
        model.theta = Vec2{angle(rng) - 1.3, angle(rng)};  // theta2 away from 0 and pi
        const Jacobian2 j = model.jacobian();
        const Vec2 a{coeff(rng), coeff(rng)};
        const Twist f = j * a;  // a wrench the arm can actually feel
        const Vec2 tau = j.transpose() * f;
        const WrenchEstimate est = estimate_external_wrench(model, tau);
        CHECK(!est.rank_deficient);
        CHECK(est.sigma_min > 1e-6);
        CHECK((est.wrench.as_vector() - f).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("stretched and folded configurations are flagged as rank deficient") {
    ChainModel stretched;
    stretched.theta = Vec2{0.4, 0.0};
    CHECK(estimate_external_wrench(stretched, Vec2{1.0, 0.5}).rank_deficient);

    ChainModel folded;
    folded.theta = Vec2{0.4, M_PI};
    CHECK(estimate_external_wrench(folded, Vec2{1.0, 0.5}).rank_deficient);

    ChainModel bent;
    bent.theta = Vec2{0.4, 1.2};
    CHECK(!estimate_external_wrench(bent, Vec2{1.0, 0.5}).rank_deficient);
}

TEST_CASE("task-space body integration") {
    SUBCASE("no wrench, no motion") {
        TaskSpaceBody body;
        body.pose = Pose{{0.2, 0.3, 0.4}, rot_z(0.7)};
        const TaskSpaceBody next = step_task_body(body, Wrench::zero(), Wrench::zero(), 1e-3);
        CHECK(next.pose.p == body.pose.p);
        CHECK(next.pose.q.coeffs() == body.pose.q.coeffs());
        CHECK(next.twist == body.twist);
    }

    SUBCASE("constant force integrates to f * t / m") {
        TaskSpaceBody body;
        body.mass = 2.0;
        Wrench push;
        push.f = Vec3{0.4, -0.2, 0.1};
        const double dt = 1e-3;
        for (int i = 0; i < 1000; ++i) body = step_task_body(body, push, Wrench::zero(), dt);
        const Vec3 expect = push.f * (1000 * dt) / 2.0;
        CHECK((body.twist.head<3>() - expect).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(body.twist.tail<3>().norm() == 0.0);
    }

    SUBCASE("long torque-driven spin keeps the quaternion unit length") {
        TaskSpaceBody body;
        Wrench spin;
        spin.tau = Vec3{1e-3, 2e-3, -1e-3};
        for (int i = 0; i < 100000; ++i) body = step_task_body(body, spin, Wrench::zero(), 1e-3);
        CHECK(std::abs(body.pose.q.norm() - 1.0) < 1e-9);
        // alpha = tau / I = (0.1, 0.2, -0.1) rad/s^2 over t = 100 s
        CHECK(body.twist.tail<3>().isApprox(Vec3{10, 20, -10}, 1e-9));
    }

    SUBCASE("dt must be positive") {
        TaskSpaceBody body;
        CHECK_THROWS_AS(step_task_body(body, Wrench::zero(), Wrench::zero(), 0.0),
                        std::invalid_argument);
    }
}

TEST_CASE("impedance regulation dissipates the spring-plus-kinetic storage") {
    const ImpedanceParams p =
        ImpedanceParams::isotropic(500.0, 20.0, 2.0 * std::sqrt(500.0), 2.0 * std::sqrt(0.2));
    TaskSpaceBody body;
    body.inertia = Vec3::Constant(0.01);
    body.pose = Pose{{0.05, -0.03, 0.02}, rot_z(10.0 * M_PI / 180.0)};
    const Pose target;  // origin, identity

    auto storage = [&](const TaskSpaceBody& b) {
        const Twist e = pose_error(target, b.pose);
        const double spring = 0.5 * e.dot(p.K * e);
        const double kinetic = 0.5 * b.mass * b.twist.head<3>().squaredNorm() +
                               0.5 * b.twist.tail<3>().dot(
                                         b.inertia.cwiseProduct(b.twist.tail<3>()));
        return spring + kinetic;
    };

    const double v0 = storage(body);
    double prev = v0;
    double worst_rise = 0.0;
    for (int i = 0; i < 5000; ++i) {
        const Wrench f = impedance_wrench(target, Twist::Zero(), body.pose, body.twist, p);
        body = step_task_body(body, f, Wrench::zero(), 1e-3);
        const double v = storage(body);
        worst_rise = std::max(worst_rise, v - prev);
        prev = v;
    }
    CHECK(worst_rise <= 1e-9 * v0);
    CHECK(prev < 1e-9 * v0);
}
