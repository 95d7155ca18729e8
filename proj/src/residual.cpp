#include "trajedit/residual.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace trajedit {

const char* region_name(Region r) {
    switch (r) {
        case Region::PreEdit: return "pre";
        case Region::Transition: return "transition";
        case Region::HumanDemo: return "demo";
        case Region::PostEdit: return "post";
    }
    return "?";
}

std::optional<Region> region_from_name(const std::string& name) {
    if (name == "pre") return Region::PreEdit;
    if (name == "transition") return Region::Transition;
    if (name == "demo") return Region::HumanDemo;
    if (name == "post") return Region::PostEdit;
    return std::nullopt;
}

bool RegionSet::contains(Region r) const {
    switch (r) {
        case Region::PreEdit: return pre_edit;
        case Region::Transition: return transition;
        case Region::HumanDemo: return human_demo;
        case Region::PostEdit: return post_edit;
    }
    return false;
}

RegionSet& RegionSet::set(Region r, bool enabled) {
    switch (r) {
        case Region::PreEdit: pre_edit = enabled; break;
        case Region::Transition: transition = enabled; break;
        case Region::HumanDemo: human_demo = enabled; break;
        case Region::PostEdit: post_edit = enabled; break;
    }
    return *this;
}

std::string RegionSet::to_string() const {
    std::string out;
    for (Region r : {Region::PreEdit, Region::Transition, Region::HumanDemo, Region::PostEdit}) {
        if (!contains(r)) continue;
        if (!out.empty()) out += ',';
        out += region_name(r);
    }
    return out.empty() ? "none" : out;
}

std::optional<RegionSet> RegionSet::from_string(const std::string& spec) {
    RegionSet set = RegionSet::none();
    if (spec == "none" || spec.empty()) return set;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto region = region_from_name(token);
        if (!region) return std::nullopt;
        set.set(*region, true);
    }
    return set;
}

Pose compose_action(const Pose& base_action, const PoseResidual& residual) {
    return Pose{base_action.p + residual.dp, residual.dq * base_action.q};
}

PoseResidual residual_between(const Pose& target, const Pose& base_action) {
    return PoseResidual{target.p - base_action.p, target.q * base_action.q.inverse()};
}

namespace {

/// Human pose closest to the predicted action under d_p + omega_q * d_q.
std::size_t match_human_pose(const Trajectory& human, const Pose& predicted, double omega_q) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < human.size(); ++i) {
        const double d = position_distance(human.poses[i], predicted) +
                         omega_q * quaternion_distance(human.poses[i], predicted);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

}  // namespace

PlaybackPolicy::PlaybackPolicy(Trajectory plan) : plan_(std::move(plan)) {
    plan_.validate();
}

Pose PlaybackPolicy::query(const Pose&, std::size_t step) const {
    return plan_.poses[std::min(step + 1, plan_.size() - 1)];
}

Wrench PlaybackPolicy::query_wrench(const Pose&, std::size_t) const {
    return Wrench::zero();
}

std::vector<ResidualSample> generate_samples(
    const Trajectory& base, const Trajectory& corrected, const Trajectory& segment,
    const Trajectory& human, std::size_t k_star, std::size_t n_points,
    const BasePolicyInterface& policy, const RegionSet& regions, double match_omega_q) {
    base.validate();
    corrected.validate();
    segment.validate();
    human.validate();
    if (k_star >= base.size())
        throw std::invalid_argument("generate_samples: k_star out of range");

    const std::size_t n = std::min(n_points, k_star);
    const std::size_t s = k_star - n;
    if (segment.size() != n + 1)
        throw std::invalid_argument("generate_samples: segment length inconsistent with N and k_star");
    if (position_distance(segment.back(), human.front()) > 1e-6)
        throw std::invalid_argument("generate_samples: segment endpoint does not meet demo start");

    // corrected = base prefix + segment + resampled demo tail.
    const bool same_dt = std::abs(human.dt - base.dt) <= 1e-9 * base.dt;
    const std::size_t tail =
        same_dt ? human.size()
                : static_cast<std::size_t>(std::llround(human.duration() / base.dt)) + 1;
    if (corrected.size() != k_star + tail)
        throw std::invalid_argument("generate_samples: corrected length inconsistent with inputs");

    std::vector<ResidualSample> samples;

    if (regions.pre_edit) {
        for (std::size_t t = 0; t < s; ++t) {
            const Pose& state = base.poses[t];
            samples.push_back({Region::PreEdit, t, state, policy.query(state, t),
                               PoseResidual::zero()});
        }
    }
    if (regions.transition) {
        for (std::size_t t = s; t < k_star; ++t) {
            const Pose& state = base.poses[t];
            const Pose action = policy.query(state, t);
            samples.push_back({Region::Transition, t, state, action,
                               residual_between(segment.poses[t + 1 - s], action)});
        }
    }
    if (regions.human_demo) {
        for (std::size_t t = 0; t + 1 < human.size(); ++t) {
            const Pose& state = human.poses[t];
            const Pose action = policy.query(state, k_star + t);
            samples.push_back({Region::HumanDemo, k_star + t, state, action,
                               residual_between(human.poses[t + 1], action)});
        }
    }
    if (regions.post_edit) {
        for (std::size_t t = k_star; t + 1 < base.size(); ++t) {
            const Pose& state = base.poses[t];
            const Pose action = policy.query(state, t);
            const Pose& target = human.poses[match_human_pose(human, action, match_omega_q)];
            samples.push_back({Region::PostEdit, t, state, action,
                               residual_between(target, action)});
        }
    }
    return samples;
}

}  // namespace trajedit
