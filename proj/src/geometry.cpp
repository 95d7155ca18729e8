#include "trajedit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trajedit {

Quat canonicalized(const Quat& q) {
    // Skip renormalization when already unit to machine precision so the
    // operation is bitwise idempotent (serialized poses survive re-parsing).
    Quat out = std::abs(q.squaredNorm() - 1.0) <= 1e-12 ? q : q.normalized();
    double lead = out.w();
    if (lead == 0.0) lead = out.x();
    if (lead == 0.0) lead = out.y();
    if (lead == 0.0) lead = out.z();
    if (lead < 0.0) out.coeffs() = -out.coeffs();
    return out;
}

Vec3 rotation_vector(const Quat& q) {
    Quat c = canonicalized(q);
    const Vec3 v{c.x(), c.y(), c.z()};
    const double sin_half = v.norm();
    if (sin_half < 1e-12) return 2.0 * v;  // small-angle: sin(a/2) ~ a/2
    const double angle = 2.0 * std::atan2(sin_half, c.w());
    return (angle / sin_half) * v;
}

Quat quat_exp(const Vec3& rotvec) {
    const double angle = rotvec.norm();
    if (angle < 1e-12) {
        Quat q{1.0, 0.5 * rotvec.x(), 0.5 * rotvec.y(), 0.5 * rotvec.z()};
        return q.normalized();
    }
    const double half = 0.5 * angle;
    const Vec3 axis = rotvec / angle;
    const double s = std::sin(half);
    return Quat{std::cos(half), s * axis.x(), s * axis.y(), s * axis.z()};
}

void Trajectory::validate() const {
    if (poses.empty()) throw std::invalid_argument("trajectory has no poses");
    if (!(dt > 0.0)) throw std::invalid_argument("trajectory dt must be > 0");
    if (!wrenches.empty() && wrenches.size() != poses.size())
        throw std::invalid_argument("wrench list length differs from pose list length");
}

double position_distance(const Pose& a, const Pose& b) {
    return (a.p - b.p).norm();
}

double quaternion_distance(const Quat& a, const Quat& b) {
    const double d = std::abs(a.dot(b));
    return 1.0 - std::min(d, 1.0);
}

double quaternion_distance(const Pose& a, const Pose& b) {
    return quaternion_distance(a.q, b.q);
}

Quat slerp(const Quat& a, const Quat& b, double t) {
    Quat qa = a.normalized();
    Quat qb = b.normalized();
    double dot = qa.dot(qb);
    if (dot < 0.0) {  // shorter arc
        qb.coeffs() = -qb.coeffs();
        dot = -dot;
    }
    dot = std::min(dot, 1.0);
    if (dot > 1.0 - 1e-10) {  // nearly parallel: nlerp is exact enough
        Quat out;
        out.coeffs() = (1.0 - t) * qa.coeffs() + t * qb.coeffs();
        return canonicalized(out);
    }
    const double theta = std::acos(dot);
    const double s = std::sin(theta);
    const double wa = std::sin((1.0 - t) * theta) / s;
    const double wb = std::sin(t * theta) / s;
    Quat out;
    out.coeffs() = wa * qa.coeffs() + wb * qb.coeffs();
    return canonicalized(out);
}

Pose slerp(const Pose& a, const Pose& b, double t) {
    return Pose{(1.0 - t) * a.p + t * b.p, slerp(a.q, b.q, t)};
}

namespace {

Wrench lerp_wrench(const Wrench& a, const Wrench& b, double t) {
    return Wrench{(1.0 - t) * a.f + t * b.f, (1.0 - t) * a.tau + t * b.tau};
}

}  // namespace

Trajectory resample(const Trajectory& traj, double new_dt) {
    traj.validate();
    if (!(new_dt > 0.0)) throw std::invalid_argument("resample: new_dt must be > 0");

    Trajectory out;
    if (traj.size() == 1) {
        out.dt = new_dt;
        out.poses = traj.poses;
        out.wrenches = traj.wrenches;
        return out;
    }

    const double total = traj.duration();
    const std::size_t n_new =
        std::max<std::size_t>(2, static_cast<std::size_t>(std::llround(total / new_dt)) + 1);
    out.dt = total / static_cast<double>(n_new - 1);
    out.poses.reserve(n_new);
    if (traj.has_wrenches()) out.wrenches.reserve(n_new);

    for (std::size_t i = 0; i < n_new; ++i) {
        if (i == 0) {
            out.poses.push_back(traj.poses.front());
            if (traj.has_wrenches()) out.wrenches.push_back(traj.wrenches.front());
            continue;
        }
        if (i == n_new - 1) {
            out.poses.push_back(traj.poses.back());
            if (traj.has_wrenches()) out.wrenches.push_back(traj.wrenches.back());
            continue;
        }
        const double t = static_cast<double>(i) * out.dt;
        const double u = t / traj.dt;
        const auto lo = static_cast<std::size_t>(u);
        const std::size_t hi = std::min(lo + 1, traj.size() - 1);
        const double frac = u - static_cast<double>(lo);
        // Snap to the grid on both sides: rounding can land u a few ulps
        // below an integer, and a sample on a shared node must be copied
        // bitwise, not interpolated.
        if (frac < 1e-9) {
            out.poses.push_back(traj.poses[lo]);
            if (traj.has_wrenches()) out.wrenches.push_back(traj.wrenches[lo]);
        } else if (frac > 1.0 - 1e-9) {
            out.poses.push_back(traj.poses[hi]);
            if (traj.has_wrenches()) out.wrenches.push_back(traj.wrenches[hi]);
        } else {
            out.poses.push_back(slerp(traj.poses[lo], traj.poses[hi], frac));
            if (traj.has_wrenches())
                out.wrenches.push_back(lerp_wrench(traj.wrenches[lo], traj.wrenches[hi], frac));
        }
    }
    return out;
}

}  // namespace trajedit
