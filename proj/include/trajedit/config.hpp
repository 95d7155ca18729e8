#pragma once

#include <string>

#include "trajedit/alignment.hpp"
#include "trajedit/detector.hpp"
#include "trajedit/editor.hpp"
#include "trajedit/impedance.hpp"
#include "trajedit/sim.hpp"

namespace trajedit {

// One flat, sectioned key-value file drives every CLI run.  Sections mirror
// the module configs ([scene], [detector], [edit], [impedance], [policy]);
// [run] adds the episode seed and the output directory.  Every key has a
// default, so an empty file is a valid config; unknown sections or keys are
// rejected with the offending name.  The scene's rng seed is deliberately not
// a config key: the [run] seed drives it so one value controls a run.
struct RunConfig {
    SceneConfig scene{};
    DetectorConfig detector{};
    EditConfig edit{};
    AlignmentWeights align{};   // [edit] omega_p / omega_q
    double match_omega_q{0.5};  // post-edit region matching weight

    // [impedance]: tracking gains, virtual body, inner-loop rate.
    double k_trans{1500.0};
    double k_rot{30.0};
    double d_trans{80.0};
    double d_rot{1.1};
    double body_mass{1.0};
    Vec3 body_inertia{0.01, 0.01, 0.01};
    double control_dt{1e-3};

    // [policy]: scripted plan plus the episode-runner knobs.
    PolicyConfig policy{};
    double max_time{20.0};
    double pause_time{0.5};
    double jam_window{1.0};
    double jam_depth_eps{2e-4};
    double jam_force{5.0};
    double demo_retreat_time{2.0};
    double demo_descend_time{3.0};
    double demo_noise{0.0};
    double lookup_step_weight{1e-4};

    // [run]
    unsigned seed{0};
    std::string output_dir{"."};

    ImpedanceParams impedance_params() const;
    SimOptions sim_options() const;
};

RunConfig parse_config(const std::string& text, const std::string& name = "<string>");
RunConfig parse_config_file(const std::string& path);

// Emits every key with its current value, so parse(serialize(c)) == c and a
// written file doubles as the fully-resolved record of a run.
std::string serialize_config(const RunConfig& cfg);
void write_config_file(const RunConfig& cfg, const std::string& path);

}  // namespace trajedit
