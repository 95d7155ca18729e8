#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <optional>
#include <vector>

namespace trajedit {

using Vec3 = Eigen::Vector3d;
using Quat = Eigen::Quaterniond;
using Twist = Eigen::Matrix<double, 6, 1>;  // [v; omega], m/s and rad/s

/// Normalize and map a quaternion to the canonical hemisphere:
/// w >= 0, and if w == 0 the first nonzero of (x, y, z) is >= 0.
/// The represented rotation is unchanged (q and -q are the same rotation).
Quat canonicalized(const Quat& q);

/// Rotation vector (axis * angle, angle in [0, pi]) of a unit quaternion.
Vec3 rotation_vector(const Quat& q);

/// Exponential map: rotation vector -> unit quaternion.
Quat quat_exp(const Vec3& rotvec);

/// Rigid pose of the end effector: position [m] plus unit quaternion.
/// Constructors normalize and hemisphere-canonicalize the quaternion, so a
/// Pose built through them always satisfies |q| = 1 and w >= 0.
struct Pose {
    Vec3 p{Vec3::Zero()};
    Quat q{Quat::Identity()};

    Pose() = default;
    Pose(const Vec3& position, const Quat& orientation)
        : p(position), q(canonicalized(orientation)) {}

    static Pose identity() { return Pose{}; }

    bool is_finite() const { return p.allFinite() && q.coeffs().allFinite(); }
};

/// External wrench at the end effector: force [N] and torque [N m].
struct Wrench {
    Vec3 f{Vec3::Zero()};
    Vec3 tau{Vec3::Zero()};

    Wrench() = default;
    Wrench(const Vec3& force, const Vec3& torque) : f(force), tau(torque) {}

    static Wrench zero() { return Wrench{}; }

    Twist as_vector() const {
        Twist w;
        w << f, tau;
        return w;
    }
    static Wrench from_vector(const Twist& v) {
        return Wrench{v.head<3>(), v.tail<3>()};
    }

    Wrench operator+(const Wrench& o) const { return {f + o.f, tau + o.tau}; }
    Wrench operator-(const Wrench& o) const { return {f - o.f, tau - o.tau}; }

    bool is_finite() const { return f.allFinite() && tau.allFinite(); }
};

/// Uniformly time-stamped pose sequence, optionally with a wrench per step.
/// dt is seconds per step; the nominal control rate is 50 Hz (dt = 0.02).
struct Trajectory {
    double dt{0.02};
    std::vector<Pose> poses;
    std::vector<Wrench> wrenches;  // empty, or same length as poses

    std::size_t size() const { return poses.size(); }
    bool empty() const { return poses.empty(); }
    bool has_wrenches() const { return !wrenches.empty(); }
    double duration() const {
        return poses.empty() ? 0.0 : dt * static_cast<double>(poses.size() - 1);
    }

    const Pose& front() const { return poses.front(); }
    const Pose& back() const { return poses.back(); }

    /// Throws std::invalid_argument if the length/dt invariants are violated.
    void validate() const;
};

/// Euclidean distance between the two positions [m].
double position_distance(const Pose& a, const Pose& b);

/// Orientation distance 1 - |<q_a, q_b>|, in [0, 1].
/// Invariant under sign flips of either quaternion.
double quaternion_distance(const Pose& a, const Pose& b);
double quaternion_distance(const Quat& a, const Quat& b);

/// Interpolate between two poses: linear in position, spherical-linear along
/// the shorter arc in orientation. t = 0 gives a, t = 1 gives b.
Pose slerp(const Pose& a, const Pose& b, double t);
Quat slerp(const Quat& a, const Quat& b, double t);

/// Resample onto a uniform grid near new_dt, keeping both endpoints exact.
/// The output dt is the closest value to new_dt that divides the total
/// duration evenly, so requests that divide the duration are honored exactly.
/// Wrenches, if present, are interpolated linearly. Throws on empty input.
Trajectory resample(const Trajectory& traj, double new_dt);

}  // namespace trajedit
