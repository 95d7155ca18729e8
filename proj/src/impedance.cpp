#include "trajedit/impedance.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace trajedit {

ImpedanceParams ImpedanceParams::isotropic(double k_trans, double k_rot, double d_trans,
                                           double d_rot) {
    Twist k, d;
    k << k_trans, k_trans, k_trans, k_rot, k_rot, k_rot;
    d << d_trans, d_trans, d_trans, d_rot, d_rot, d_rot;
    return from_diagonals(k, d);
}

ImpedanceParams ImpedanceParams::from_diagonals(const Twist& k_diag, const Twist& d_diag) {
    ImpedanceParams p;
    p.K = k_diag.asDiagonal();
    p.D = d_diag.asDiagonal();
    return p;
}

void ImpedanceParams::validate() const {
    if ((K - K.transpose()).cwiseAbs().maxCoeff() > 1e-12 ||
        (D - D.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("ImpedanceParams: K and D must be symmetric");
    Eigen::SelfAdjointEigenSolver<Mat6> k_eig(K), d_eig(D);
    if (k_eig.eigenvalues().minCoeff() < -1e-9 || d_eig.eigenvalues().minCoeff() < -1e-9)
        throw std::invalid_argument("ImpedanceParams: K and D must be positive semidefinite");
}

Twist pose_error(const Pose& desired, const Pose& actual) {
    Twist e;
    e.head<3>() = desired.p - actual.p;
    e.tail<3>() = rotation_vector(desired.q * actual.q.inverse());
    return e;
}

Wrench impedance_wrench(const Pose& x_d, const Twist& xdot_d, const Pose& x,
                        const Twist& xdot, const ImpedanceParams& p) {
    return Wrench::from_vector(p.K * pose_error(x_d, x) + p.D * (xdot_d - xdot));
}

Pose ChainModel::tip_pose() const {
    const double a1 = theta[0], a12 = theta[0] + theta[1];
    const Vec3 p{link_lengths[0] * std::cos(a1) + link_lengths[1] * std::cos(a12),
                 link_lengths[0] * std::sin(a1) + link_lengths[1] * std::sin(a12), 0.0};
    return Pose{p, Quat{Eigen::AngleAxisd(a12, Vec3::UnitZ())}};
}

Twist ChainModel::tip_twist() const { return jacobian() * theta_dot; }

Jacobian2 ChainModel::jacobian() const {
    const double a1 = theta[0], a12 = theta[0] + theta[1];
    const double l1 = link_lengths[0], l2 = link_lengths[1];
    Jacobian2 j = Jacobian2::Zero();
    j(0, 0) = -l1 * std::sin(a1) - l2 * std::sin(a12);
    j(1, 0) = l1 * std::cos(a1) + l2 * std::cos(a12);
    j(0, 1) = -l2 * std::sin(a12);
    j(1, 1) = l2 * std::cos(a12);
    j(5, 0) = 1.0;
    j(5, 1) = 1.0;
    return j;
}

Vec2 ChainModel::gravity_torque() const {
    // Holding torque against the gravity force m_i * g applied at each link
    // midpoint: tau_j = -sum_i (d c_i / d theta_j) . (m_i * g).
    const double a1 = theta[0], a12 = theta[0] + theta[1];
    const double l1 = link_lengths[0], l2 = link_lengths[1];
    const Vec3 dc1_d1{-0.5 * l1 * std::sin(a1), 0.5 * l1 * std::cos(a1), 0.0};
    const Vec3 dc2_d1{-l1 * std::sin(a1) - 0.5 * l2 * std::sin(a12),
                      l1 * std::cos(a1) + 0.5 * l2 * std::cos(a12), 0.0};
    const Vec3 dc2_d2{-0.5 * l2 * std::sin(a12), 0.5 * l2 * std::cos(a12), 0.0};
    const Vec3 f1 = link_masses[0] * gravity, f2 = link_masses[1] * gravity;
    return Vec2{-dc1_d1.dot(f1) - dc2_d1.dot(f2), -dc2_d2.dot(f2)};
}

Vec2 joint_torque_command(const ChainModel& model, const Pose& x_d, const Twist& xdot_d,
                          const ImpedanceParams& p) {
    const Wrench f = impedance_wrench(x_d, xdot_d, model.tip_pose(), model.tip_twist(), p);
    return model.jacobian().transpose() * f.as_vector() + model.gravity_torque();
}

WrenchEstimate estimate_external_wrench(const ChainModel& model, const Vec2& tau_ext) {
    const Jacobian2 j = model.jacobian();
    Eigen::JacobiSVD<Eigen::Matrix<double, 2, 6>> svd(
        j.transpose(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    WrenchEstimate est;
    est.wrench = Wrench::from_vector(svd.solve(tau_ext));
    // Force transmission degenerates when the in-plane position block loses
    // rank (arm fully stretched or folded), even though the full Jacobian
    // keeps rank 2 through the angular rows.
    Eigen::JacobiSVD<Eigen::Matrix2d> pos_svd(j.topLeftCorner<2, 2>());
    const auto& sv = pos_svd.singularValues();
    est.sigma_min = sv(1);
    est.rank_deficient = sv(1) <= 1e-9 * std::max(sv(0), 1.0);
    return est;
}

TaskSpaceBody step_task_body(const TaskSpaceBody& body, const Wrench& command,
                             const Wrench& external, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_task_body: dt must be > 0");
    const Wrench total = command + external;
    TaskSpaceBody next = body;
    next.twist.head<3>() += total.f / body.mass * dt;
    next.twist.tail<3>() += body.inertia.cwiseInverse().cwiseProduct(total.tau) * dt;
    const Vec3 p = body.pose.p + next.twist.head<3>() * dt;
    const Quat q = quat_exp(next.twist.tail<3>() * dt) * body.pose.q;
    next.pose = Pose{p, q};
    return next;
}

}  // namespace trajedit
