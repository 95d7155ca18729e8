#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trajedit/alignment.hpp"
#include "trajedit/benchmark.hpp"
#include "trajedit/config.hpp"
#include "trajedit/detector.hpp"
#include "trajedit/editor.hpp"
#include "trajedit/geometry.hpp"
#include "trajedit/impedance.hpp"
#include "trajedit/io.hpp"
#include "trajedit/residual.hpp"
#include "trajedit/sim.hpp"

namespace py = pybind11;
using namespace trajedit;

namespace {

Eigen::Vector4d quat_to_vec(const Quat& q) { return Eigen::Vector4d{q.w(), q.x(), q.y(), q.z()}; }
Quat vec_to_quat(const Eigen::Vector4d& v) { return Quat{v[0], v[1], v[2], v[3]}; }

// Lets python subclasses stand in as the base policy.
class PyBasePolicy : public BasePolicyInterface {
public:
    using BasePolicyInterface::BasePolicyInterface;
    Pose query(const Pose& state, std::size_t step) const override {
        PYBIND11_OVERRIDE_PURE(Pose, BasePolicyInterface, query, state, step);
    }
    Wrench query_wrench(const Pose& state, std::size_t step) const override {
        PYBIND11_OVERRIDE_PURE(Wrench, BasePolicyInterface, query_wrench, state, step);
    }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Trajectory editing, residual labeling, failure detection and the "
              "peg-in-hole correction loop";

    py::class_<Pose>(m, "Pose")
        .def(py::init<>())
        .def(py::init([](const Vec3& p, const Eigen::Vector4d& q_wxyz) {
                 return Pose{p, vec_to_quat(q_wxyz)};
             }),
             py::arg("p"), py::arg("q"))
        .def_property(
            "p", [](const Pose& s) { return s.p; }, [](Pose& s, const Vec3& v) { s.p = v; })
        .def_property(
            "q", [](const Pose& s) { return quat_to_vec(s.q); },
            [](Pose& s, const Eigen::Vector4d& v) { s.q = canonicalized(vec_to_quat(v)); },
            "Unit quaternion, scalar-first (w, x, y, z), canonical hemisphere")
        .def_static("identity", &Pose::identity)
        .def("is_finite", &Pose::is_finite)
        .def("__repr__", [](const Pose& s) {
            return "Pose(p=[" + format_double(s.p.x()) + ", " + format_double(s.p.y()) + ", " +
                   format_double(s.p.z()) + "], q=[" + format_double(s.q.w()) + ", " +
                   format_double(s.q.x()) + ", " + format_double(s.q.y()) + ", " +
                   format_double(s.q.z()) + "])";
        });

    py::class_<Wrench>(m, "Wrench")
        .def(py::init<>())
        .def(py::init([](const Vec3& f, const Vec3& tau) { return Wrench{f, tau}; }),
             py::arg("f"), py::arg("tau"))
        .def_readwrite("f", &Wrench::f)
        .def_readwrite("tau", &Wrench::tau)
        .def_static("zero", &Wrench::zero)
        .def("as_vector", &Wrench::as_vector)
        .def_static("from_vector", &Wrench::from_vector)
        .def("is_finite", &Wrench::is_finite);

    py::class_<Trajectory>(m, "Trajectory")
        .def(py::init<>())
        .def(py::init([](double dt, std::vector<Pose> poses, std::vector<Wrench> wrenches) {
                 Trajectory t;
                 t.dt = dt;
                 t.poses = std::move(poses);
                 t.wrenches = std::move(wrenches);
                 return t;
             }),
             py::arg("dt"), py::arg("poses"), py::arg("wrenches") = std::vector<Wrench>{})
        .def_readwrite("dt", &Trajectory::dt)
        .def_readwrite("poses", &Trajectory::poses)
        .def_readwrite("wrenches", &Trajectory::wrenches)
        .def("__len__", &Trajectory::size)
        .def("duration", &Trajectory::duration)
        .def("has_wrenches", &Trajectory::has_wrenches)
        .def("validate", &Trajectory::validate);

    m.def("canonicalized",
          [](const Eigen::Vector4d& q) { return quat_to_vec(canonicalized(vec_to_quat(q))); },
          py::arg("q_wxyz"));
    m.def("rotation_vector",
          [](const Eigen::Vector4d& q) { return rotation_vector(vec_to_quat(q)); },
          py::arg("q_wxyz"));
    m.def("quat_exp", [](const Vec3& r) { return quat_to_vec(quat_exp(r)); }, py::arg("rotvec"));
    m.def("position_distance", &position_distance, py::arg("a"), py::arg("b"));
    m.def("quaternion_distance",
          py::overload_cast<const Pose&, const Pose&>(&quaternion_distance), py::arg("a"),
          py::arg("b"));
    m.def("slerp", py::overload_cast<const Pose&, const Pose&, double>(&slerp), py::arg("a"),
          py::arg("b"), py::arg("t"));
    m.def("resample", &resample, py::arg("traj"), py::arg("new_dt"));

    py::class_<AlignmentWeights>(m, "AlignmentWeights")
        .def(py::init<>())
        .def_readwrite("omega_p", &AlignmentWeights::omega_p)
        .def_readwrite("omega_q", &AlignmentWeights::omega_q);
    py::class_<AlignmentResult>(m, "AlignmentResult")
        .def_readonly("k_star", &AlignmentResult::k_star)
        .def_readonly("distance", &AlignmentResult::distance);
    m.def("nearest_point", &nearest_point, py::arg("base"), py::arg("human_start"),
          py::arg("weights") = AlignmentWeights{});

    py::class_<EditWeights>(m, "EditWeights")
        .def(py::init<>())
        .def_readwrite("lambda_s", &EditWeights::lambda_s)
        .def_readwrite("lambda_e", &EditWeights::lambda_e)
        .def_readwrite("lambda_qf", &EditWeights::lambda_qf)
        .def_readwrite("lambda_qs", &EditWeights::lambda_qs)
        .def_readwrite("lambda_qe", &EditWeights::lambda_qe);
    py::class_<EditConfig>(m, "EditConfig")
        .def(py::init<>())
        .def_readwrite("n_points", &EditConfig::n_points)
        .def_readwrite("weights", &EditConfig::weights)
        .def_readwrite("hard_endpoint", &EditConfig::hard_endpoint)
        .def_readwrite("max_iters", &EditConfig::max_iters)
        .def_readwrite("grad_tol", &EditConfig::grad_tol);
    py::class_<EditResult>(m, "EditResult")
        .def_readonly("segment", &EditResult::segment)
        .def_readonly("objective_trace", &EditResult::objective_trace)
        .def_readonly("endpoint_position_error", &EditResult::endpoint_position_error)
        .def_readonly("endpoint_quaternion_error", &EditResult::endpoint_quaternion_error)
        .def_readonly("start_index", &EditResult::start_index)
        .def_readonly("effective_n", &EditResult::effective_n)
        .def_readonly("iterations", &EditResult::iterations)
        .def_readonly("converged", &EditResult::converged)
        .def("final_objective", &EditResult::final_objective);
    m.def("optimize_segment", &optimize_segment, py::arg("base"), py::arg("k_star"),
          py::arg("human_start"), py::arg("config") = EditConfig{});
    m.def("assemble_corrected", &assemble_corrected, py::arg("base"), py::arg("k_star"),
          py::arg("segment"), py::arg("human"), py::arg("n_points"));

    py::enum_<Region>(m, "Region")
        .value("PreEdit", Region::PreEdit)
        .value("Transition", Region::Transition)
        .value("HumanDemo", Region::HumanDemo)
        .value("PostEdit", Region::PostEdit);
    py::class_<RegionSet>(m, "RegionSet")
        .def(py::init<>())
        .def_readwrite("pre_edit", &RegionSet::pre_edit)
        .def_readwrite("transition", &RegionSet::transition)
        .def_readwrite("human_demo", &RegionSet::human_demo)
        .def_readwrite("post_edit", &RegionSet::post_edit)
        .def_static("all", &RegionSet::all)
        .def_static("none", &RegionSet::none)
        .def("contains", &RegionSet::contains)
        .def("to_string", &RegionSet::to_string)
        .def_static("from_string", &RegionSet::from_string);
    py::class_<PoseResidual>(m, "PoseResidual")
        .def(py::init<>())
        .def(py::init([](const Vec3& dp, const Eigen::Vector4d& dq) {
                 return PoseResidual{dp, vec_to_quat(dq)};
             }),
             py::arg("dp"), py::arg("dq"))
        .def_readwrite("dp", &PoseResidual::dp)
        .def_property(
            "dq", [](const PoseResidual& r) { return quat_to_vec(r.dq); },
            [](PoseResidual& r, const Eigen::Vector4d& v) { r.dq = canonicalized(vec_to_quat(v)); })
        .def_static("zero", &PoseResidual::zero);
    m.def("compose_action", &compose_action, py::arg("base_action"), py::arg("residual"));
    m.def("residual_between", &residual_between, py::arg("target"), py::arg("base_action"));
    py::class_<ResidualSample>(m, "ResidualSample")
        .def(py::init<>())
        .def_readwrite("region", &ResidualSample::region)
        .def_readwrite("step_index", &ResidualSample::step_index)
        .def_readwrite("state", &ResidualSample::state)
        .def_readwrite("base_action", &ResidualSample::base_action)
        .def_readwrite("residual", &ResidualSample::residual);

    py::class_<BasePolicyInterface, PyBasePolicy>(m, "BasePolicy")
        .def(py::init<>())
        .def("query", &BasePolicyInterface::query, py::arg("state"), py::arg("step"))
        .def("query_wrench", &BasePolicyInterface::query_wrench, py::arg("state"),
             py::arg("step"));
    py::class_<PlaybackPolicy, BasePolicyInterface>(m, "PlaybackPolicy")
        .def(py::init<Trajectory>(), py::arg("plan"))
        .def_property_readonly("plan", &PlaybackPolicy::plan);
    m.def("generate_samples", &generate_samples, py::arg("base"), py::arg("corrected"),
          py::arg("segment"), py::arg("human"), py::arg("k_star"), py::arg("n_points"),
          py::arg("policy"), py::arg("regions") = RegionSet::all(),
          py::arg("match_omega_q") = 0.5);

    py::enum_<DetectorMetric>(m, "DetectorMetric")
        .value("ForcePredictionError", DetectorMetric::ForcePredictionError)
        .value("PositionPredictionError", DetectorMetric::PositionPredictionError);
    py::class_<DetectorConfig>(m, "DetectorConfig")
        .def(py::init<>())
        .def_readwrite("metric", &DetectorConfig::metric)
        .def_readwrite("threshold_c", &DetectorConfig::threshold_c)
        .def_readwrite("debounce_k", &DetectorConfig::debounce_k);
    py::class_<LabeledEpisode>(m, "LabeledEpisode")
        .def(py::init<>())
        .def(py::init([](std::vector<double> scores, bool failed) {
                 return LabeledEpisode{std::move(scores), failed};
             }),
             py::arg("scores"), py::arg("failed"))
        .def_readwrite("scores", &LabeledEpisode::scores)
        .def_readwrite("failed", &LabeledEpisode::failed);
    py::class_<PrecisionRecall>(m, "PrecisionRecall")
        .def_readonly("precision", &PrecisionRecall::precision)
        .def_readonly("recall", &PrecisionRecall::recall);
    m.def("force_error", &force_error, py::arg("predicted"), py::arg("measured"));
    m.def("position_error", &position_error, py::arg("predicted_action"), py::arg("current"));
    m.def("detect", &detect, py::arg("scores"), py::arg("config"));
    m.def("calibrate", &calibrate, py::arg("episodes"));
    m.def("evaluate", &evaluate, py::arg("episodes"), py::arg("config"));

    py::class_<ImpedanceParams>(m, "ImpedanceParams")
        .def(py::init<>())
        .def_readwrite("K", &ImpedanceParams::K)
        .def_readwrite("D", &ImpedanceParams::D)
        .def_static("isotropic", &ImpedanceParams::isotropic, py::arg("k_trans"),
                    py::arg("k_rot"), py::arg("d_trans"), py::arg("d_rot"))
        .def_static("from_diagonals", &ImpedanceParams::from_diagonals, py::arg("k_diag"),
                    py::arg("d_diag"))
        .def("validate", &ImpedanceParams::validate);
    m.def("pose_error", &pose_error, py::arg("desired"), py::arg("actual"));
    m.def("impedance_wrench", &impedance_wrench, py::arg("x_d"), py::arg("xdot_d"),
          py::arg("x"), py::arg("xdot"), py::arg("params"));
    py::class_<ChainModel>(m, "ChainModel")
        .def(py::init<>())
        .def_readwrite("link_lengths", &ChainModel::link_lengths)
        .def_readwrite("link_masses", &ChainModel::link_masses)
        .def_readwrite("gravity", &ChainModel::gravity)
        .def_readwrite("theta", &ChainModel::theta)
        .def_readwrite("theta_dot", &ChainModel::theta_dot)
        .def("tip_pose", &ChainModel::tip_pose)
        .def("tip_twist", &ChainModel::tip_twist)
        .def("jacobian", &ChainModel::jacobian)
        .def("gravity_torque", &ChainModel::gravity_torque);
    m.def("joint_torque_command", &joint_torque_command, py::arg("model"), py::arg("x_d"),
          py::arg("xdot_d"), py::arg("params"));
    py::class_<WrenchEstimate>(m, "WrenchEstimate")
        .def_readonly("wrench", &WrenchEstimate::wrench)
        .def_readonly("rank_deficient", &WrenchEstimate::rank_deficient)
        .def_readonly("sigma_min", &WrenchEstimate::sigma_min);
    m.def("estimate_external_wrench", &estimate_external_wrench, py::arg("model"),
          py::arg("tau_ext"));
    py::class_<TaskSpaceBody>(m, "TaskSpaceBody")
        .def(py::init<>())
        .def_readwrite("mass", &TaskSpaceBody::mass)
        .def_readwrite("inertia", &TaskSpaceBody::inertia)
        .def_readwrite("pose", &TaskSpaceBody::pose)
        .def_readwrite("twist", &TaskSpaceBody::twist);
    m.def("step_task_body", &step_task_body, py::arg("body"), py::arg("command"),
          py::arg("external"), py::arg("dt"));

    py::class_<SceneConfig>(m, "SceneConfig")
        .def(py::init<>())
        .def_readwrite("socket_center", &SceneConfig::socket_center)
        .def_readwrite("socket_offset_range", &SceneConfig::socket_offset_range)
        .def_readwrite("hole_half_width", &SceneConfig::hole_half_width)
        .def_readwrite("peg_half_width", &SceneConfig::peg_half_width)
        .def_readwrite("chamfer_depth", &SceneConfig::chamfer_depth)
        .def_readwrite("contact_stiffness", &SceneConfig::contact_stiffness)
        .def_readwrite("contact_damping", &SceneConfig::contact_damping)
        .def_readwrite("wall_stiffness", &SceneConfig::wall_stiffness)
        .def_readwrite("wall_damping", &SceneConfig::wall_damping)
        .def_readwrite("insertion_depth_success", &SceneConfig::insertion_depth_success)
        .def_readwrite("rng_seed", &SceneConfig::rng_seed)
        .def("clearance", &SceneConfig::clearance)
        .def("mouth_half_width", &SceneConfig::mouth_half_width)
        .def("bottom_depth", &SceneConfig::bottom_depth)
        .def("validate", &SceneConfig::validate);
    m.def("contact_wrench",
          py::overload_cast<const Pose&, const SceneConfig&>(&contact_wrench), py::arg("pose"),
          py::arg("scene"));
    m.def("contact_wrench",
          py::overload_cast<const Pose&, const Twist&, const SceneConfig&>(&contact_wrench),
          py::arg("pose"), py::arg("twist"), py::arg("scene"));
    m.def("insertion_depth", &insertion_depth, py::arg("pose"), py::arg("scene"));

    py::class_<PolicyConfig>(m, "PolicyConfig")
        .def(py::init<>())
        .def_readwrite("belief_bias", &PolicyConfig::belief_bias)
        .def_readwrite("start_height", &PolicyConfig::start_height)
        .def_readwrite("approach_height", &PolicyConfig::approach_height)
        .def_readwrite("descend_margin", &PolicyConfig::descend_margin)
        .def_readwrite("approach_time", &PolicyConfig::approach_time)
        .def_readwrite("descend_time", &PolicyConfig::descend_time)
        .def_readwrite("command_dt", &PolicyConfig::command_dt);
    py::class_<ScriptedBasePolicy, BasePolicyInterface>(m, "ScriptedBasePolicy")
        .def(py::init<const SceneConfig&, const PolicyConfig&>(), py::arg("true_scene"),
             py::arg("config"))
        .def_property_readonly("plan", &ScriptedBasePolicy::plan)
        .def_property_readonly("believed_scene", &ScriptedBasePolicy::believed_scene);
    py::class_<LookupCorrector>(m, "LookupCorrector")
        .def(py::init([](std::vector<ResidualSample> samples, double omega_q,
                         double step_weight) {
                 LookupCorrector c;
                 c.samples = std::move(samples);
                 c.omega_q = omega_q;
                 c.step_weight = step_weight;
                 return c;
             }),
             py::arg("samples"), py::arg("omega_q") = 0.5, py::arg("step_weight") = 1e-4)
        .def_readwrite("samples", &LookupCorrector::samples)
        .def_readwrite("omega_q", &LookupCorrector::omega_q)
        .def_readwrite("step_weight", &LookupCorrector::step_weight)
        .def("correct", &LookupCorrector::correct, py::arg("state"), py::arg("step"))
        .def(
            "match",
            [](const LookupCorrector& c, const Pose& state, std::size_t step) {
                const ResidualSample* s = c.match(state, step);
                return s ? std::optional<ResidualSample>(*s) : std::nullopt;
            },
            py::arg("state"), py::arg("step"));

    py::enum_<StepMode>(m, "StepMode")
        .value("Auto", StepMode::Auto)
        .value("Paused", StepMode::Paused)
        .value("Corrected", StepMode::Corrected);
    py::enum_<Outcome>(m, "Outcome")
        .value("Success", Outcome::Success)
        .value("Jam", Outcome::Jam)
        .value("Timeout", Outcome::Timeout);
    py::class_<EpisodeStep>(m, "EpisodeStep")
        .def_readonly("t", &EpisodeStep::t)
        .def_readonly("commanded", &EpisodeStep::commanded)
        .def_readonly("measured", &EpisodeStep::measured)
        .def_readonly("predicted", &EpisodeStep::predicted)
        .def_readonly("sensed", &EpisodeStep::sensed)
        .def_readonly("score", &EpisodeStep::score)
        .def_readonly("mode", &EpisodeStep::mode);
    py::class_<InterventionInfo>(m, "InterventionInfo")
        .def_readonly("trigger_step", &InterventionInfo::trigger_step)
        .def_readonly("k_star", &InterventionInfo::k_star)
        .def_readonly("n_points", &InterventionInfo::n_points);
    py::class_<EpisodeLog>(m, "EpisodeLog")
        .def_readonly("seed", &EpisodeLog::seed)
        .def_readonly("socket_center_true", &EpisodeLog::socket_center_true)
        .def_readonly("belief_bias", &EpisodeLog::belief_bias)
        .def_readonly("command_dt", &EpisodeLog::command_dt)
        .def_readonly("outcome", &EpisodeLog::outcome)
        .def_readonly("final_depth", &EpisodeLog::final_depth)
        .def_readonly("intervention", &EpisodeLog::intervention)
        .def_readonly("steps", &EpisodeLog::steps)
        .def("scores", &EpisodeLog::scores);
    py::class_<SimOptions>(m, "SimOptions")
        .def(py::init<>())
        .def_readwrite("control_dt", &SimOptions::control_dt)
        .def_readwrite("max_time", &SimOptions::max_time)
        .def_readwrite("body_mass", &SimOptions::body_mass)
        .def_readwrite("body_inertia", &SimOptions::body_inertia)
        .def_readwrite("pause_time", &SimOptions::pause_time)
        .def_readwrite("jam_window", &SimOptions::jam_window)
        .def_readwrite("jam_depth_eps", &SimOptions::jam_depth_eps)
        .def_readwrite("jam_force", &SimOptions::jam_force)
        .def_readwrite("demo_retreat_time", &SimOptions::demo_retreat_time)
        .def_readwrite("demo_descend_time", &SimOptions::demo_descend_time)
        .def_readwrite("demo_noise", &SimOptions::demo_noise)
        .def_readwrite("allow_intervention", &SimOptions::allow_intervention);
    py::class_<EpisodeResult>(m, "EpisodeResult")
        .def_readonly("log", &EpisodeResult::log)
        .def_readonly("samples", &EpisodeResult::samples)
        .def_readonly("base_plan", &EpisodeResult::base_plan)
        .def_readonly("corrected", &EpisodeResult::corrected);
    m.def(
        "run_episode",
        [](const SceneConfig& scene, const PolicyConfig& policy_cfg,
           const DetectorConfig& detector, const ImpedanceParams& impedance,
           const SimOptions& options, const EditConfig& edit_cfg,
           const std::optional<LookupCorrector>& corrector, const RegionSet& regions) {
            return run_episode(scene, policy_cfg, detector, impedance, options, edit_cfg,
                               corrector ? &*corrector : nullptr, regions);
        },
        py::arg("scene"), py::arg("policy"), py::arg("detector"), py::arg("impedance"),
        py::arg("options"), py::arg("edit") = EditConfig{},
        py::arg("corrector") = std::nullopt, py::arg("regions") = RegionSet::all());

    py::class_<BenchmarkConfig>(m, "BenchmarkConfig")
        .def(py::init<>())
        .def_readwrite("label", &BenchmarkConfig::label)
        .def_readwrite("n_points", &BenchmarkConfig::n_points)
        .def_readwrite("regions", &BenchmarkConfig::regions);
    py::class_<BenchmarkRow>(m, "BenchmarkRow")
        .def_readonly("label", &BenchmarkRow::label)
        .def_readonly("n_points", &BenchmarkRow::n_points)
        .def_readonly("regions", &BenchmarkRow::regions)
        .def_readonly("train_episodes", &BenchmarkRow::train_episodes)
        .def_readonly("eval_episodes", &BenchmarkRow::eval_episodes)
        .def_readonly("base_success", &BenchmarkRow::base_success)
        .def_readonly("ter_success", &BenchmarkRow::ter_success)
        .def_readonly("corrector_success", &BenchmarkRow::corrector_success)
        .def_readonly("mean_interventions", &BenchmarkRow::mean_interventions)
        .def_readonly("precision", &BenchmarkRow::precision)
        .def_readonly("recall", &BenchmarkRow::recall)
        .def_readonly("junction_ratio_max", &BenchmarkRow::junction_ratio_max)
        .def_readonly("junction_ratio_mean", &BenchmarkRow::junction_ratio_mean);
    py::class_<BenchmarkOptions>(m, "BenchmarkOptions")
        .def(py::init<>())
        .def_readwrite("train_episodes", &BenchmarkOptions::train_episodes)
        .def_readwrite("eval_episodes", &BenchmarkOptions::eval_episodes)
        .def_readwrite("unbiased_every", &BenchmarkOptions::unbiased_every)
        .def_readwrite("seed", &BenchmarkOptions::seed)
        .def_readwrite("scene", &BenchmarkOptions::scene)
        .def_readwrite("policy", &BenchmarkOptions::policy)
        .def_readwrite("detector", &BenchmarkOptions::detector)
        .def_readwrite("impedance", &BenchmarkOptions::impedance)
        .def_readwrite("sim", &BenchmarkOptions::sim)
        .def_readwrite("edit", &BenchmarkOptions::edit);
    m.def("n_points_grid", &n_points_grid);
    m.def("region_grid", &region_grid);
    m.def("junction_ratio", &junction_ratio, py::arg("base"), py::arg("corrected"),
          py::arg("k_star"), py::arg("n_points"));
    m.def("run_benchmark", &run_benchmark, py::arg("options"), py::arg("grid"));

    m.def("serialize_trajectory", &serialize_trajectory, py::arg("traj"));
    m.def(
        "parse_trajectory",
        [](const std::string& text, const std::string& name) {
            return parse_trajectory(text, name);
        },
        py::arg("text"), py::arg("name") = "<string>");
    m.def("write_trajectory_file", &write_trajectory_file, py::arg("traj"), py::arg("path"));
    m.def(
        "parse_trajectory_file",
        [](const std::string& path) { return parse_trajectory_file(path); }, py::arg("path"));
    m.def("serialize_samples", &serialize_samples, py::arg("samples"));
    m.def(
        "parse_samples",
        [](const std::string& text, const std::string& name) { return parse_samples(text, name); },
        py::arg("text"), py::arg("name") = "<string>");
    m.def("write_samples_file", &write_samples_file, py::arg("samples"), py::arg("path"));
    m.def(
        "parse_samples_file", [](const std::string& path) { return parse_samples_file(path); },
        py::arg("path"));
    m.def("serialize_scores", &serialize_scores, py::arg("episode"));
    m.def("parse_scores", &parse_scores, py::arg("text"), py::arg("name") = "<string>");
    m.def("write_episode_log", &write_episode_log, py::arg("log"), py::arg("base_path"));
    m.def(
        "read_episode_log", [](const std::string& base) { return read_episode_log(base); },
        py::arg("base_path"));
    m.def("serialize_benchmark", &serialize_benchmark, py::arg("rows"));
    m.def("parse_benchmark", &parse_benchmark, py::arg("text"), py::arg("name") = "<string>");
}
