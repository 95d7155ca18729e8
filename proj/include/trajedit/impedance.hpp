#pragma once

#include "trajedit/geometry.hpp"

#include <Eigen/Core>

namespace trajedit {

using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec2 = Eigen::Vector2d;
using Jacobian2 = Eigen::Matrix<double, 6, 2>;

/// Cartesian stiffness and damping of the virtual spring-damper. Both must
/// be symmetric positive-semidefinite; validate() enforces this.
struct ImpedanceParams {
    Mat6 K{Mat6::Zero()};
    Mat6 D{Mat6::Zero()};

    /// Diagonal gains: one translational value for x/y/z and one rotational
    /// value for the three axes (the common isotropic case).
    static ImpedanceParams isotropic(double k_trans, double k_rot, double d_trans,
                                     double d_rot);
    static ImpedanceParams from_diagonals(const Twist& k_diag, const Twist& d_diag);

    /// Throws std::invalid_argument on asymmetry beyond 1e-12 or a negative
    /// eigenvalue beyond -1e-9.
    void validate() const;
};

/// 6-vector pose error [p_d - p; rotation vector of q_d * q^-1]. The
/// rotation-vector form replaces the undefined subtraction on orientations
/// and matches the position error to first order for small angles.
Twist pose_error(const Pose& desired, const Pose& actual);

/// Spring-damper wrench K * pose_error + D * (twist_d - twist).
Wrench impedance_wrench(const Pose& x_d, const Twist& xdot_d, const Pose& x,
                        const Twist& xdot, const ImpedanceParams& p);

/// Two-link arm in the x-y plane (both joints rotate about z, point masses at
/// the link midpoints). Exists to exercise the torque-level control law and
/// the wrench estimation on a real kinematic chain.
struct ChainModel {
    Vec2 link_lengths{1.0, 1.0};  // m
    Vec2 link_masses{1.0, 1.0};   // kg
    Vec3 gravity{0.0, -9.81, 0.0};
    Vec2 theta{Vec2::Zero()};      // rad
    Vec2 theta_dot{Vec2::Zero()};  // rad/s

    /// Tip position in the plane (z = 0) and orientation theta1+theta2 about z.
    Pose tip_pose() const;
    /// Tip twist J * theta_dot.
    Twist tip_twist() const;
    /// Geometric Jacobian, 6x2 (rows vx, vy, vz, wx, wy, wz).
    Jacobian2 jacobian() const;
    /// Gravity compensation torques: the joint torques that cancel the
    /// gravity load of the link masses in the current configuration.
    Vec2 gravity_torque() const;
};

/// Torque-level impedance command tau = J^T * F_imp + g(theta), with F_imp
/// computed between the arm tip and the desired pose/twist.
Vec2 joint_torque_command(const ChainModel& model, const Pose& x_d, const Twist& xdot_d,
                          const ImpedanceParams& p);

struct WrenchEstimate {
    Wrench wrench;               // minimum-norm least-squares solution of J^T F = tau
    bool rank_deficient{false};  // position Jacobian lost rank (stretched/folded arm)
    double sigma_min{0.0};       // smallest singular value of the position block
};

/// External wrench from measured external joint torques via the
/// pseudoinverse of J^T. At non-singular configurations this inverts
/// tau = J^T F exactly on the arm's wrench subspace; at singular ones the
/// minimum-norm solution is returned and rank_deficient is set.
WrenchEstimate estimate_external_wrench(const ChainModel& model, const Vec2& tau_ext);

/// Free rigid body driven in task space; stands in for the robot when the
/// insertion simulator needs the full 6-D pose pipeline without arm dynamics.
struct TaskSpaceBody {
    double mass{1.0};                   // kg
    Vec3 inertia{0.01, 0.01, 0.01};     // diagonal rotational inertia, kg m^2
    Pose pose;
    Twist twist{Twist::Zero()};
};

/// One semi-implicit Euler step: twist first (from the summed wrench), then
/// pose from the new twist, with quaternion renormalization. Gyroscopic
/// coupling is neglected (diagonal inertia, small rotation rates).
TaskSpaceBody step_task_body(const TaskSpaceBody& body, const Wrench& command,
                             const Wrench& external, double dt);

}  // namespace trajedit
