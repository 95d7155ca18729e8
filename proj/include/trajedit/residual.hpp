#pragma once

#include "trajedit/geometry.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace trajedit {

/// Receding-horizon execution constants of the base policy interface: a
/// queried plan covers kPolicyHorizon steps of which the first
/// kPolicyExecuteSteps are executed before replanning.
inline constexpr std::size_t kPolicyHorizon = 100;
inline constexpr std::size_t kPolicyExecuteSteps = 50;

/// Which part of a corrected rollout a supervision sample comes from.
enum class Region { PreEdit, Transition, HumanDemo, PostEdit };

/// Short names used in flags and sample records: pre, transition, demo, post.
const char* region_name(Region r);
std::optional<Region> region_from_name(const std::string& name);

/// Subset of regions to emit; defaults to all four.
struct RegionSet {
    bool pre_edit{true};
    bool transition{true};
    bool human_demo{true};
    bool post_edit{true};

    static RegionSet all() { return RegionSet{}; }
    static RegionSet none() { return RegionSet{false, false, false, false}; }

    bool contains(Region r) const;
    RegionSet& set(Region r, bool enabled);

    /// Comma-separated short names, e.g. "pre,transition,demo,post".
    std::string to_string() const;
    /// Parses the comma-separated form; returns nullopt on an unknown name.
    static std::optional<RegionSet> from_string(const std::string& spec);

    bool operator==(const RegionSet&) const = default;
};

/// Pose-valued action correction: positions add componentwise, the
/// orientation part is the relative rotation applied on the left.
struct PoseResidual {
    Vec3 dp{Vec3::Zero()};
    Quat dq{Quat::Identity()};

    PoseResidual() = default;
    PoseResidual(const Vec3& position_delta, const Quat& rotation_delta)
        : dp(position_delta), dq(canonicalized(rotation_delta)) {}

    static PoseResidual zero() { return PoseResidual{}; }
};

/// Apply a residual to a base action: p + dp, dq * q. A zero residual
/// returns the base action unchanged.
Pose compose_action(const Pose& base_action, const PoseResidual& residual);

/// Exact inverse of compose_action: the residual r with
/// compose_action(base_action, r) == target (dp = p_t - p_b, dq = q_t * q_b^-1).
PoseResidual residual_between(const Pose& target, const Pose& base_action);

/// One supervision tuple: the state the policy was queried at, the action it
/// predicted, and the residual that maps that action onto the region target.
struct ResidualSample {
    Region region{Region::PreEdit};
    std::size_t step_index{0};
    Pose state;
    Pose base_action;
    PoseResidual residual;
};

/// Behavioral stand-in for the nominal action/wrench predictor. Queries must
/// be deterministic for a fixed construction seed and step.
class BasePolicyInterface {
public:
    virtual ~BasePolicyInterface() = default;

    /// Predicted next action pose at the given state and step counter.
    virtual Pose query(const Pose& state, std::size_t step) const = 0;

    /// Wrench the policy expects at the given state and step.
    virtual Wrench query_wrench(const Pose& state, std::size_t step) const = 0;
};

/// Open-loop playback of a stored trajectory: the action at step t is the
/// pose at index min(t + 1, n - 1) and the expected wrench is zero.
class PlaybackPolicy : public BasePolicyInterface {
public:
    explicit PlaybackPolicy(Trajectory plan);

    const Trajectory& plan() const { return plan_; }
    Pose query(const Pose& state, std::size_t step) const override;
    Wrench query_wrench(const Pose& state, std::size_t step) const override;

private:
    Trajectory plan_;
};

/// Generate the residual supervision set for one corrected rollout.
///
/// With n = min(n_points, k_star) and s = k_star - n, the enabled regions
/// contribute:
///   PreEdit     t in [0, s-1]:          state x^b_t, zero residual.
///   Transition  t in [s, k_star-1]:     state x^b_t, target segment[t+1-s].
///   HumanDemo   t in [0, n_h-2]:        state x^h_t, target x^h_{t+1};
///               the policy is queried with step counter k_star + t.
///   PostEdit    t in [k_star, n_b-2]:   state x^b_t, target = the human pose
///               minimizing d_p + match_omega_q * d_q to the predicted action.
/// Throws std::invalid_argument on inconsistent inputs (segment end away
/// from the demo start, wrong segment length, corrected length mismatch).
std::vector<ResidualSample> generate_samples(
    const Trajectory& base, const Trajectory& corrected, const Trajectory& segment,
    const Trajectory& human, std::size_t k_star, std::size_t n_points,
    const BasePolicyInterface& policy, const RegionSet& regions = RegionSet::all(),
    double match_omega_q = 0.5);

}  // namespace trajedit
