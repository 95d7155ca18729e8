#pragma once

#include "trajedit/detector.hpp"
#include "trajedit/editor.hpp"
#include "trajedit/geometry.hpp"
#include "trajedit/impedance.hpp"
#include "trajedit/residual.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace trajedit {

/// Square peg over a square slot cut into the plane z = socket_center.z.
/// The slot is chamfered: the opening widens from hole_half_width at
/// chamfer_depth below the surface to hole_half_width + chamfer_depth at the
/// surface (45 degree lead-in). The true center is re-sampled per episode
/// along y within +-socket_offset_range.
struct SceneConfig {
    Vec3 socket_center{0.4, 0.0, 0.0};
    double socket_offset_range{0.05};
    double hole_half_width{5.5e-3};
    double peg_half_width{5.0e-3};
    double chamfer_depth{1.5e-3};
    double contact_stiffness{1e6};   // N/m, support plane and hole bottom
    double contact_damping{2e3};     // N s/m, normal-direction damping
    double wall_stiffness{5e4};      // N/m, bore walls (softer, keeps the funnel gentle)
    double wall_damping{2e2};        // N s/m, lateral damping against the walls
    double insertion_depth_success{0.02};
    unsigned rng_seed{0};

    double clearance() const { return hole_half_width - peg_half_width; }
    double mouth_half_width() const { return hole_half_width + chamfer_depth; }
    double bottom_depth() const { return insertion_depth_success + 4e-3; }

    /// Throws std::invalid_argument when clearance <= 0 or a stiffness,
    /// width, or depth is not positive.
    void validate() const;
};

/// Contact wrench on the peg at the given tip pose (and velocity, for the
/// damping terms; the pose-only overload uses zero velocity). Piecewise
/// linear with matched boundaries, so the wrench is continuous in the pose:
///   - support from the surface on the fraction of the cross-section not
///     over the slot mouth, with the torque of the off-center pressure patch;
///   - bore wall penalties, ramped in below the chamfer zone;
///   - hole bottom at bottom_depth().
/// The cross-section overlap is computed as if the peg were axis-aligned
/// (valid for the small tilts the controller allows).
Wrench contact_wrench(const Pose& peg_pose, const SceneConfig& scene);
Wrench contact_wrench(const Pose& peg_pose, const Twist& peg_twist,
                      const SceneConfig& scene);

/// Insertion depth of the tip below the slot surface (negative above it).
double insertion_depth(const Pose& peg_pose, const SceneConfig& scene);

/// Nominal-plan generator and wrench predictor: start above the believed
/// target, approach to approach_height above it, then descend straight into
/// the believed slot. The belief is the true socket center shifted by
/// belief_bias, so a nonzero bias makes the plan systematically wrong while
/// the policy's wrench predictions stay consistent with its own belief.
struct PolicyConfig {
    Vec3 belief_bias{Vec3::Zero()};
    double start_height{0.30};
    double approach_height{0.08};
    double descend_margin{2e-3};  // plan bottom below insertion_depth_success
    double approach_time{2.0};
    double descend_time{4.0};
    double command_dt{0.02};
};

class ScriptedBasePolicy : public BasePolicyInterface {
public:
    /// true_scene is the sampled scene; the policy believes
    /// socket_center + cfg.belief_bias.
    ScriptedBasePolicy(const SceneConfig& true_scene, const PolicyConfig& cfg);

    const Trajectory& plan() const { return plan_; }
    const SceneConfig& believed_scene() const { return believed_; }

    /// Planned pose one step ahead (clamped at the plan end); the state is
    /// ignored — the script is open loop.
    Pose query(const Pose& state, std::size_t step) const override;
    /// Contact wrench the plan pose would see if the belief were correct.
    Wrench query_wrench(const Pose& state, std::size_t step) const override;

private:
    SceneConfig believed_;
    PolicyConfig cfg_;
    Trajectory plan_;
};

/// Nearest-state residual lookup over aggregated samples — the desk-scale
/// stand-in for a trained residual policy. The match metric is
/// d_p + omega_q * d_q + step_weight * |step difference|; the step term keeps
/// retreat-phase samples from capturing approach-phase queries that pass
/// through the same poses.
struct LookupCorrector {
    std::vector<ResidualSample> samples;
    double omega_q{0.5};
    double step_weight{1e-4};  // meters of distance per step of index mismatch

    /// Best-matching sample, nullptr when none are held. The match also
    /// serves as a phase estimate: the runner composes the residual with the
    /// policy action at the matched step, not the wall-clock step, so a
    /// stalled peg retrieves the retreat phase instead of being dragged
    /// along by the still-advancing nominal plan.
    const ResidualSample* match(const Pose& state, std::size_t step) const;

    /// Residual of the best-matching sample; zero when no samples are held.
    PoseResidual correct(const Pose& state, std::size_t step) const;
};

enum class StepMode { Auto, Paused, Corrected };
enum class Outcome { Success, Jam, Timeout };

const char* step_mode_name(StepMode m);
std::optional<StepMode> step_mode_from_name(const std::string& name);
const char* outcome_name(Outcome o);
std::optional<Outcome> outcome_from_name(const std::string& name);

/// One 50 Hz command-tick record.
struct EpisodeStep {
    double t{0.0};
    Pose commanded;
    Pose measured;
    Wrench predicted;  // believed-scene wrench at the commanded pose
    Wrench sensed;     // true-scene wrench at the measured pose
    double score{0.0};
    StepMode mode{StepMode::Auto};
};

struct InterventionInfo {
    std::size_t trigger_step{0};
    std::size_t k_star{0};
    std::size_t n_points{0};
};

struct EpisodeLog {
    unsigned seed{0};
    Vec3 socket_center_true{Vec3::Zero()};
    Vec3 belief_bias{Vec3::Zero()};
    double command_dt{0.02};
    Outcome outcome{Outcome::Timeout};
    double final_depth{0.0};
    std::optional<InterventionInfo> intervention;
    std::vector<EpisodeStep> steps;

    std::vector<double> scores() const;
};

/// Runner knobs beyond the module configs.
struct SimOptions {
    double control_dt{1e-3};
    double max_time{20.0};
    double body_mass{1.0};
    Vec3 body_inertia{0.01, 0.01, 0.01};
    double pause_time{0.5};         // zero-stiffness hold after a trigger
    double jam_window{1.0};         // seconds of depth stall that declare a jam
    double jam_depth_eps{2e-4};     // progress below this counts as stalled
    double jam_force{5.0};          // mean |f| above this during the stall
    double demo_retreat_time{2.0};
    double demo_descend_time{3.0};
    double demo_noise{0.0};         // std dev of position noise on demo poses
    bool allow_intervention{true};  // false: run the base policy to the end
};

struct EpisodeResult {
    EpisodeLog log;
    std::vector<ResidualSample> samples;  // emitted only when an intervention ran
    Trajectory base_plan;
    Trajectory corrected;  // empty without an intervention
};

/// Run one episode: impedance-track the commanded stream at 1 kHz with
/// zero-order hold on 50 Hz commands; score every command tick with the
/// force prediction error; on a detector trigger (at most once), pause with
/// zero stiffness, synthesize a corrective demonstration from the current
/// pose (retreat to approach_height above the true socket, then straight
/// in), edit the plan onto it, emit residual samples, and replay the
/// corrected trajectory from index k*. With a corrector, commands are the
/// policy action composed with the looked-up residual. Deterministic for a
/// fixed scene.rng_seed.
EpisodeResult run_episode(const SceneConfig& scene, const PolicyConfig& policy_cfg,
                          const DetectorConfig& detector, const ImpedanceParams& impedance,
                          const SimOptions& options, const EditConfig& edit_cfg = {},
                          const LookupCorrector* corrector = nullptr,
                          const RegionSet& regions = RegionSet::all());

}  // namespace trajedit
