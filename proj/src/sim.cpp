#include "trajedit/sim.hpp"

#include "trajedit/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace trajedit {

namespace {

constexpr double kNormalDampRamp = 2e-4;  // depth over which normal damping fades in
constexpr double kBoreGateRamp = 1e-3;    // depth below the chamfer over which walls engage
constexpr double kWallPenCap = 1e-3;      // cap on the wall penetration used for force
constexpr double kWallDampRamp = 1e-4;    // penetration over which wall damping fades in

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double smoothstep(double t) {
    t = clamp01(t);
    return t * t * (3.0 - 2.0 * t);
}

}  // namespace

void SceneConfig::validate() const {
    if (!(peg_half_width > 0.0) || !(hole_half_width > 0.0))
        throw std::invalid_argument("SceneConfig: widths must be positive");
    if (!(clearance() > 0.0))
        throw std::invalid_argument("SceneConfig: hole must be wider than the peg");
    if (chamfer_depth < 0.0 || socket_offset_range < 0.0)
        throw std::invalid_argument("SceneConfig: chamfer_depth and offset range must be >= 0");
    if (!(contact_stiffness > 0.0) || !(wall_stiffness > 0.0))
        throw std::invalid_argument("SceneConfig: stiffnesses must be positive");
    if (contact_damping < 0.0 || wall_damping < 0.0)
        throw std::invalid_argument("SceneConfig: dampings must be >= 0");
    if (!(insertion_depth_success > 0.0))
        throw std::invalid_argument("SceneConfig: insertion_depth_success must be positive");
}

double insertion_depth(const Pose& peg_pose, const SceneConfig& scene) {
    return scene.socket_center.z() - peg_pose.p.z();
}

Wrench contact_wrench(const Pose& peg_pose, const SceneConfig& scene) {
    return contact_wrench(peg_pose, Twist::Zero(), scene);
}

Wrench contact_wrench(const Pose& peg_pose, const Twist& peg_twist,
                      const SceneConfig& scene) {
    const double d = insertion_depth(peg_pose, scene);
    if (d <= 0.0) return Wrench::zero();

    const double r = scene.peg_half_width;
    const double mouth = scene.mouth_half_width();
    const Eigen::Vector2d u{peg_pose.p.x() - scene.socket_center.x(),
                            peg_pose.p.y() - scene.socket_center.y()};
    const Eigen::Vector2d v_lat{peg_twist[0], peg_twist[1]};
    const double v_z = peg_twist[2];

    // Overlap of the (axis-aligned) cross-section with the mouth opening.
    Eigen::Vector2d overlap, overlap_center;
    for (int a = 0; a < 2; ++a) {
        const double lo = std::max(u[a] - r, -mouth);
        const double hi = std::min(u[a] + r, mouth);
        overlap[a] = std::max(0.0, hi - lo);
        overlap_center[a] = 0.5 * (lo + hi);
    }
    const double area = 4.0 * r * r;
    const double area_in = overlap[0] * overlap[1];
    const double phi_in = area_in / area;

    Wrench w;

    // Surface support on the uncovered fraction. Subtracting the covered
    // patch from the full-plate pressure also gives the tipping torque of
    // the asymmetric support, and both vanish together as the peg either
    // leaves the surface or is fully captured by the mouth.
    const double pressure =
        std::max(0.0, scene.contact_stiffness * d +
                          scene.contact_damping * clamp01(d / kNormalDampRamp) * (-v_z));
    w.f.z() += (1.0 - phi_in) * pressure;
    if (area_in > 0.0) {
        const Eigen::Vector2d lever = (area_in / area) * (u - overlap_center);
        w.tau.x() += pressure * lever.y();
        w.tau.y() -= pressure * lever.x();
    }

    // Bore walls, ramped in below the chamfer zone so the lead-in stays
    // lateral-force free until the peg actually drops past it.
    const double bore_gate = clamp01((d - scene.chamfer_depth) / kBoreGateRamp);
    if (bore_gate > 0.0) {
        for (int a = 0; a < 2; ++a) {
            const double pen_pos =
                std::clamp(u[a] + r - scene.hole_half_width, 0.0, kWallPenCap);
            const double pen_neg =
                std::clamp(-u[a] + r - scene.hole_half_width, 0.0, kWallPenCap);
            double f_a = -scene.wall_stiffness * (pen_pos - pen_neg);
            f_a -= scene.wall_damping * v_lat[a] * clamp01((pen_pos + pen_neg) / kWallDampRamp);
            w.f[a] += f_a * bore_gate;
        }
    }

    // Hole bottom.
    const double pen_b = d - scene.bottom_depth();
    if (pen_b > 0.0) {
        w.f.z() += std::max(
            0.0, scene.contact_stiffness * pen_b +
                     scene.contact_damping * clamp01(pen_b / kNormalDampRamp) * (-v_z));
    }
    return w;
}

ScriptedBasePolicy::ScriptedBasePolicy(const SceneConfig& true_scene, const PolicyConfig& cfg)
    : believed_(true_scene), cfg_(cfg) {
    if (!(cfg.command_dt > 0.0) || !(cfg.approach_time > 0.0) || !(cfg.descend_time > 0.0))
        throw std::invalid_argument("ScriptedBasePolicy: times and command_dt must be positive");
    believed_.socket_center += cfg.belief_bias;

    const Vec3 c = believed_.socket_center;
    const Vec3 start = c + Vec3{0.0, 0.0, cfg.start_height};
    const Vec3 approach = c + Vec3{0.0, 0.0, cfg.approach_height};
    const Vec3 bottom =
        c - Vec3{0.0, 0.0, believed_.insertion_depth_success + cfg.descend_margin};

    const auto n1 = static_cast<std::size_t>(
        std::max<long long>(1, std::llround(cfg.approach_time / cfg.command_dt)));
    const auto n2 = static_cast<std::size_t>(
        std::max<long long>(1, std::llround(cfg.descend_time / cfg.command_dt)));
    plan_.dt = cfg.command_dt;
    plan_.poses.reserve(n1 + n2 + 1);
    for (std::size_t i = 0; i <= n1; ++i) {
        const double s = smoothstep(static_cast<double>(i) / static_cast<double>(n1));
        plan_.poses.emplace_back(start + s * (approach - start), Quat::Identity());
    }
    for (std::size_t i = 1; i <= n2; ++i) {
        const double s = smoothstep(static_cast<double>(i) / static_cast<double>(n2));
        plan_.poses.emplace_back(approach + s * (bottom - approach), Quat::Identity());
    }
}

Pose ScriptedBasePolicy::query(const Pose&, std::size_t step) const {
    return plan_.poses[std::min(step + 1, plan_.size() - 1)];
}

Wrench ScriptedBasePolicy::query_wrench(const Pose&, std::size_t step) const {
    return contact_wrench(plan_.poses[std::min(step, plan_.size() - 1)], believed_);
}

const ResidualSample* LookupCorrector::match(const Pose& state, std::size_t step) const {
    const ResidualSample* best = nullptr;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& s : samples) {
        const double step_gap =
            std::abs(static_cast<double>(step) - static_cast<double>(s.step_index));
        const double d = position_distance(s.state, state) +
                         omega_q * quaternion_distance(s.state, state) +
                         step_weight * step_gap;
        if (d < best_d) {
            best_d = d;
            best = &s;
        }
    }
    return best;
}

PoseResidual LookupCorrector::correct(const Pose& state, std::size_t step) const {
    const ResidualSample* best = match(state, step);
    return best ? best->residual : PoseResidual::zero();
}

const char* step_mode_name(StepMode m) {
    switch (m) {
        case StepMode::Auto: return "auto";
        case StepMode::Paused: return "paused";
        case StepMode::Corrected: return "corrected";
    }
    return "?";
}

std::optional<StepMode> step_mode_from_name(const std::string& name) {
    if (name == "auto") return StepMode::Auto;
    if (name == "paused") return StepMode::Paused;
    if (name == "corrected") return StepMode::Corrected;
    return std::nullopt;
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Success: return "success";
        case Outcome::Jam: return "jam";
        case Outcome::Timeout: return "timeout";
    }
    return "?";
}

std::optional<Outcome> outcome_from_name(const std::string& name) {
    if (name == "success") return Outcome::Success;
    if (name == "jam") return Outcome::Jam;
    if (name == "timeout") return Outcome::Timeout;
    return std::nullopt;
}

std::vector<double> EpisodeLog::scores() const {
    std::vector<double> s;
    s.reserve(steps.size());
    for (const auto& step : steps) s.push_back(step.score);
    return s;
}

namespace {

/// Corrective demonstration: retreat from the current pose to
/// approach_height above the true socket (leveling the orientation on the
/// way), then straight down to the insertion target. Optional position noise
/// on every pose after the first, which must stay exact for assembly.
Trajectory make_demo(const Pose& start, const SceneConfig& true_scene,
                     const PolicyConfig& pcfg, const SimOptions& opt, std::mt19937& rng) {
    const Vec3 c = true_scene.socket_center;
    const Vec3 above = c + Vec3{0.0, 0.0, pcfg.approach_height};
    const Vec3 bottom =
        c - Vec3{0.0, 0.0, true_scene.insertion_depth_success + pcfg.descend_margin};
    const double dt = pcfg.command_dt;
    const auto n1 = static_cast<std::size_t>(
        std::max<long long>(1, std::llround(opt.demo_retreat_time / dt)));
    const auto n2 = static_cast<std::size_t>(
        std::max<long long>(1, std::llround(opt.demo_descend_time / dt)));

    Trajectory demo;
    demo.dt = dt;
    demo.poses.reserve(n1 + n2 + 1);
    for (std::size_t i = 0; i <= n1; ++i) {
        const double s = smoothstep(static_cast<double>(i) / static_cast<double>(n1));
        demo.poses.emplace_back(start.p + s * (above - start.p),
                                slerp(start.q, Quat::Identity(), s));
    }
    for (std::size_t i = 1; i <= n2; ++i) {
        const double s = smoothstep(static_cast<double>(i) / static_cast<double>(n2));
        demo.poses.emplace_back(above + s * (bottom - above), Quat::Identity());
    }
    if (opt.demo_noise > 0.0) {
        std::normal_distribution<double> noise(0.0, opt.demo_noise);
        for (std::size_t i = 1; i < demo.poses.size(); ++i) {
            demo.poses[i].p += Vec3{noise(rng), noise(rng), noise(rng)};
        }
    }
    return demo;
}

}  // namespace

EpisodeResult run_episode(const SceneConfig& scene, const PolicyConfig& policy_cfg,
                          const DetectorConfig& detector, const ImpedanceParams& impedance,
                          const SimOptions& options, const EditConfig& edit_cfg,
                          const LookupCorrector* corrector, const RegionSet& regions) {
    scene.validate();
    impedance.validate();
    if (!(options.control_dt > 0.0) || !(options.max_time > 0.0))
        throw std::invalid_argument("run_episode: control_dt and max_time must be positive");

    SceneConfig true_scene = scene;
    std::mt19937 rng(scene.rng_seed);
    if (scene.socket_offset_range > 0.0) {
        std::uniform_real_distribution<double> offset(-scene.socket_offset_range,
                                                      scene.socket_offset_range);
        true_scene.socket_center.y() += offset(rng);
    }
    const ScriptedBasePolicy policy(true_scene, policy_cfg);
    const Trajectory& plan = policy.plan();

    EpisodeResult result;
    result.base_plan = plan;
    EpisodeLog& log = result.log;
    log.seed = scene.rng_seed;
    log.socket_center_true = true_scene.socket_center;
    log.belief_bias = policy_cfg.belief_bias;
    log.command_dt = policy_cfg.command_dt;
    log.outcome = Outcome::Timeout;

    TaskSpaceBody body;
    body.mass = options.body_mass;
    body.inertia = options.body_inertia;
    body.pose = plan.front();

    const auto ticks_per_command = static_cast<std::size_t>(
        std::max<long long>(1, std::llround(policy_cfg.command_dt / options.control_dt)));
    const auto max_steps =
        static_cast<std::size_t>(options.max_time / policy_cfg.command_dt);
    const auto pause_steps = static_cast<std::size_t>(
        std::max<long long>(1, std::llround(options.pause_time / policy_cfg.command_dt)));
    const auto jam_steps = static_cast<std::size_t>(
        std::max<long long>(1, std::llround(options.jam_window / policy_cfg.command_dt)));

    ImpedanceParams zero_stiffness = impedance;
    zero_stiffness.K.setZero();

    StreamingDetector stream(detector);
    StepMode mode = StepMode::Auto;
    bool intervened = false;
    std::size_t trigger_step = 0;
    std::size_t pause_left = 0;
    std::size_t replay_index = 0;
    Pose command = plan.front();

    std::vector<double> best_depth_history, force_history;
    std::vector<StepMode> mode_history;
    double best_depth = -std::numeric_limits<double>::infinity();
    double force_window_sum = 0.0;

    for (std::size_t step = 0; step < max_steps; ++step) {
        const double now = static_cast<double>(step) * policy_cfg.command_dt;

        switch (mode) {
            case StepMode::Auto: {
                const ResidualSample* matched =
                    corrector ? corrector->match(body.pose, step) : nullptr;
                // Compose with the action at the matched sample's step: the
                // state match recovers the phase, the residual stays a delta.
                command = matched ? compose_action(
                                        policy.query(body.pose, matched->step_index),
                                        matched->residual)
                                  : policy.query(body.pose, step);
                break;
            }
            case StepMode::Paused:
                break;  // command frozen while stiffness is zero
            case StepMode::Corrected:
                command =
                    result.corrected.poses[std::min(replay_index, result.corrected.size() - 1)];
                ++replay_index;
                break;
        }

        const Wrench predicted = contact_wrench(command, policy.believed_scene());
        const Wrench sensed = contact_wrench(body.pose, body.twist, true_scene);
        const double score = force_error(predicted, sensed);
        log.steps.push_back({now, command, body.pose, predicted, sensed, score, mode});

        const double depth = insertion_depth(body.pose, true_scene);
        log.final_depth = depth;
        if (depth >= true_scene.insertion_depth_success) {
            log.outcome = Outcome::Success;
            break;
        }

        best_depth = std::max(best_depth, depth);
        best_depth_history.push_back(best_depth);
        force_history.push_back(sensed.f.norm());
        mode_history.push_back(mode);
        force_window_sum += force_history.back();
        if (force_history.size() > jam_steps) {
            force_window_sum -= force_history[force_history.size() - 1 - jam_steps];
        }
        if ((mode == StepMode::Auto || mode == StepMode::Corrected) && step + 1 > jam_steps) {
            const std::size_t j0 = step - jam_steps;  // window start, jam_steps back
            const bool window_in_mode = mode_history[j0] == mode;
            const double progress = best_depth_history[step] - best_depth_history[j0];
            const double mean_force = force_window_sum / static_cast<double>(jam_steps);
            if (window_in_mode && progress < options.jam_depth_eps &&
                mean_force >= options.jam_force) {
                log.outcome = Outcome::Jam;
                break;
            }
        }

        const ImpedanceParams& gains = mode == StepMode::Paused ? zero_stiffness : impedance;
        for (std::size_t tick = 0; tick < ticks_per_command; ++tick) {
            const Wrench f_cmd =
                impedance_wrench(command, Twist::Zero(), body.pose, body.twist, gains);
            const Wrench f_ext = contact_wrench(body.pose, body.twist, true_scene);
            body = step_task_body(body, f_cmd, f_ext, options.control_dt);
        }

        if (!intervened && mode == StepMode::Auto && options.allow_intervention &&
            stream.push(score)) {
            intervened = true;
            trigger_step = step;
            pause_left = pause_steps;
            mode = StepMode::Paused;
        } else if (mode == StepMode::Paused && --pause_left == 0) {
            const Trajectory demo = make_demo(body.pose, true_scene, policy_cfg, options, rng);
            const AlignmentResult k = nearest_point(plan, demo.front());
            const EditResult edit = optimize_segment(plan, k.k_star, demo.front(), edit_cfg);
            result.corrected =
                assemble_corrected(plan, k.k_star, edit.segment, demo, edit_cfg.n_points);
            result.samples = generate_samples(plan, result.corrected, edit.segment, demo,
                                              k.k_star, edit_cfg.n_points, policy, regions);
            log.intervention = InterventionInfo{trigger_step, k.k_star, edit_cfg.n_points};
            replay_index = k.k_star;
            mode = StepMode::Corrected;
        }
    }
    return result;
}

}  // namespace trajedit
