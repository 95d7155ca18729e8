#include "trajedit/config.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "trajedit/io.hpp"

namespace trajedit {
namespace {

[[noreturn]] void fail(const std::string& name, std::size_t line_no, const std::string& msg) {
    throw std::runtime_error(name + ":" + std::to_string(line_no) + ": " + msg);
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double num(const std::string& value, const std::string& key, const std::string& name,
           std::size_t line_no) {
    const char* begin = value.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (value.empty() || end == begin || *end != '\0' || !std::isfinite(v))
        fail(name, line_no, "key '" + key + "': invalid number '" + value + "'");
    return v;
}

std::size_t count(const std::string& value, const std::string& key, const std::string& name,
                  std::size_t line_no) {
    const char* begin = value.c_str();
    char* end = nullptr;
    const unsigned long long v = std::strtoull(begin, &end, 10);
    if (value.empty() || end == begin || *end != '\0' || value[0] == '-')
        fail(name, line_no, "key '" + key + "': invalid non-negative integer '" + value + "'");
    return static_cast<std::size_t>(v);
}

bool flag(const std::string& value, const std::string& key, const std::string& name,
          std::size_t line_no) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    fail(name, line_no, "key '" + key + "': expected true/false, got '" + value + "'");
}

Vec3 vec3(const std::string& value, const std::string& key, const std::string& name,
          std::size_t line_no) {
    std::vector<std::string> parts;
    std::stringstream ss(value);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(trim(tok));
    if (parts.size() != 3)
        fail(name, line_no, "key '" + key + "': expected 3 comma-separated components");
    return Vec3{num(parts[0], key, name, line_no), num(parts[1], key, name, line_no),
                num(parts[2], key, name, line_no)};
}

void apply(RunConfig& cfg, const std::string& section, const std::string& key,
           const std::string& value, const std::string& name, std::size_t line_no) {
    if (section == "scene") {
        auto& s = cfg.scene;
        if (key == "socket_center") s.socket_center = vec3(value, key, name, line_no);
        else if (key == "socket_offset_range") s.socket_offset_range = num(value, key, name, line_no);
        else if (key == "hole_half_width") s.hole_half_width = num(value, key, name, line_no);
        else if (key == "peg_half_width") s.peg_half_width = num(value, key, name, line_no);
        else if (key == "chamfer_depth") s.chamfer_depth = num(value, key, name, line_no);
        else if (key == "contact_stiffness") s.contact_stiffness = num(value, key, name, line_no);
        else if (key == "contact_damping") s.contact_damping = num(value, key, name, line_no);
        else if (key == "wall_stiffness") s.wall_stiffness = num(value, key, name, line_no);
        else if (key == "wall_damping") s.wall_damping = num(value, key, name, line_no);
        else if (key == "insertion_depth_success")
            s.insertion_depth_success = num(value, key, name, line_no);
        else fail(name, line_no, "unknown key '" + key + "' in section [scene]");
    } else if (section == "detector") {
        auto& d = cfg.detector;
        if (key == "metric") {
            if (value == "force") d.metric = DetectorMetric::ForcePredictionError;
            else if (value == "position") d.metric = DetectorMetric::PositionPredictionError;
            else fail(name, line_no, "key 'metric': expected force or position, got '" + value + "'");
        } else if (key == "threshold_c") d.threshold_c = num(value, key, name, line_no);
        else if (key == "debounce_k") d.debounce_k = count(value, key, name, line_no);
        else fail(name, line_no, "unknown key '" + key + "' in section [detector]");
    } else if (section == "edit") {
        auto& e = cfg.edit;
        if (key == "n_points") e.n_points = count(value, key, name, line_no);
        else if (key == "lambda_s") e.weights.lambda_s = num(value, key, name, line_no);
        else if (key == "lambda_e") e.weights.lambda_e = num(value, key, name, line_no);
        else if (key == "lambda_qf") e.weights.lambda_qf = num(value, key, name, line_no);
        else if (key == "lambda_qs") e.weights.lambda_qs = num(value, key, name, line_no);
        else if (key == "lambda_qe") e.weights.lambda_qe = num(value, key, name, line_no);
        else if (key == "hard_endpoint") e.hard_endpoint = flag(value, key, name, line_no);
        else if (key == "max_iters") e.max_iters = count(value, key, name, line_no);
        else if (key == "grad_tol") e.grad_tol = num(value, key, name, line_no);
        else if (key == "omega_p") cfg.align.omega_p = num(value, key, name, line_no);
        else if (key == "omega_q") cfg.align.omega_q = num(value, key, name, line_no);
        else if (key == "match_omega_q") cfg.match_omega_q = num(value, key, name, line_no);
        else fail(name, line_no, "unknown key '" + key + "' in section [edit]");
    } else if (section == "impedance") {
        if (key == "k_trans") cfg.k_trans = num(value, key, name, line_no);
        else if (key == "k_rot") cfg.k_rot = num(value, key, name, line_no);
        else if (key == "d_trans") cfg.d_trans = num(value, key, name, line_no);
        else if (key == "d_rot") cfg.d_rot = num(value, key, name, line_no);
        else if (key == "body_mass") cfg.body_mass = num(value, key, name, line_no);
        else if (key == "body_inertia") cfg.body_inertia = vec3(value, key, name, line_no);
        else if (key == "control_dt") cfg.control_dt = num(value, key, name, line_no);
        else fail(name, line_no, "unknown key '" + key + "' in section [impedance]");
    } else if (section == "policy") {
        auto& p = cfg.policy;
        if (key == "belief_bias") p.belief_bias = vec3(value, key, name, line_no);
        else if (key == "start_height") p.start_height = num(value, key, name, line_no);
        else if (key == "approach_height") p.approach_height = num(value, key, name, line_no);
        else if (key == "descend_margin") p.descend_margin = num(value, key, name, line_no);
        else if (key == "approach_time") p.approach_time = num(value, key, name, line_no);
        else if (key == "descend_time") p.descend_time = num(value, key, name, line_no);
        else if (key == "command_dt") p.command_dt = num(value, key, name, line_no);
        else if (key == "max_time") cfg.max_time = num(value, key, name, line_no);
        else if (key == "pause_time") cfg.pause_time = num(value, key, name, line_no);
        else if (key == "jam_window") cfg.jam_window = num(value, key, name, line_no);
        else if (key == "jam_depth_eps") cfg.jam_depth_eps = num(value, key, name, line_no);
        else if (key == "jam_force") cfg.jam_force = num(value, key, name, line_no);
        else if (key == "demo_retreat_time") cfg.demo_retreat_time = num(value, key, name, line_no);
        else if (key == "demo_descend_time") cfg.demo_descend_time = num(value, key, name, line_no);
        else if (key == "demo_noise") cfg.demo_noise = num(value, key, name, line_no);
        else if (key == "lookup_step_weight")
            cfg.lookup_step_weight = num(value, key, name, line_no);
        else fail(name, line_no, "unknown key '" + key + "' in section [policy]");
    } else if (section == "run") {
        if (key == "seed") cfg.seed = static_cast<unsigned>(count(value, key, name, line_no));
        else if (key == "output_dir") cfg.output_dir = value;
        else fail(name, line_no, "unknown key '" + key + "' in section [run]");
    } else {
        fail(name, line_no, "unknown section [" + section + "]");
    }
}

}  // namespace

ImpedanceParams RunConfig::impedance_params() const {
    return ImpedanceParams::isotropic(k_trans, k_rot, d_trans, d_rot);
}

SimOptions RunConfig::sim_options() const {
    SimOptions sim;
    sim.control_dt = control_dt;
    sim.max_time = max_time;
    sim.body_mass = body_mass;
    sim.body_inertia = body_inertia;
    sim.pause_time = pause_time;
    sim.jam_window = jam_window;
    sim.jam_depth_eps = jam_depth_eps;
    sim.jam_force = jam_force;
    sim.demo_retreat_time = demo_retreat_time;
    sim.demo_descend_time = demo_descend_time;
    sim.demo_noise = demo_noise;
    return sim;
}

RunConfig parse_config(const std::string& text, const std::string& name) {
    RunConfig cfg;
    std::vector<std::string> lines;
    {
        std::stringstream ss(text);
        std::string line;
        while (std::getline(ss, line)) lines.push_back(line);
    }
    std::string section;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::size_t line_no = li + 1;
        const std::string line = trim(lines[li]);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                fail(name, line_no, "malformed section header '" + line + "'");
            section = line.substr(1, line.size() - 2);
            if (section != "scene" && section != "detector" && section != "edit" &&
                section != "impedance" && section != "policy" && section != "run")
                fail(name, line_no, "unknown section [" + section + "]");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(name, line_no, "expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(name, line_no, "empty key");
        if (section.empty())
            fail(name, line_no, "key '" + key + "' appears before any section");
        apply(cfg, section, key, value, name, line_no);
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    return parse_config(read_text_file(path), path);
}

std::string serialize_config(const RunConfig& cfg) {
    std::string out;
    auto kv = [&out](const char* key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    auto kvd = [&kv](const char* key, double v) { kv(key, format_double(v)); };
    auto kvv = [&kv](const char* key, const Vec3& v) {
        kv(key, format_double(v.x()) + "," + format_double(v.y()) + "," + format_double(v.z()));
    };

    out += "# resolved run configuration: all keys with their effective values\n\n";
    out += "# square peg-in-hole scene (metres, N/m, Ns/m)\n[scene]\n";
    kvv("socket_center", cfg.scene.socket_center);
    kvd("socket_offset_range", cfg.scene.socket_offset_range);
    kvd("hole_half_width", cfg.scene.hole_half_width);
    kvd("peg_half_width", cfg.scene.peg_half_width);
    kvd("chamfer_depth", cfg.scene.chamfer_depth);
    kvd("contact_stiffness", cfg.scene.contact_stiffness);
    kvd("contact_damping", cfg.scene.contact_damping);
    kvd("wall_stiffness", cfg.scene.wall_stiffness);
    kvd("wall_damping", cfg.scene.wall_damping);
    kvd("insertion_depth_success", cfg.scene.insertion_depth_success);

    out += "\n# failure detector on the per-step prediction error\n[detector]\n";
    kv("metric", cfg.detector.metric == DetectorMetric::ForcePredictionError ? "force" : "position");
    kvd("threshold_c", cfg.detector.threshold_c);
    kv("debounce_k", std::to_string(cfg.detector.debounce_k));

    out += "\n# trajectory editing and alignment\n[edit]\n";
    kv("n_points", std::to_string(cfg.edit.n_points));
    kvd("lambda_s", cfg.edit.weights.lambda_s);
    kvd("lambda_e", cfg.edit.weights.lambda_e);
    kvd("lambda_qf", cfg.edit.weights.lambda_qf);
    kvd("lambda_qs", cfg.edit.weights.lambda_qs);
    kvd("lambda_qe", cfg.edit.weights.lambda_qe);
    kv("hard_endpoint", cfg.edit.hard_endpoint ? "true" : "false");
    kv("max_iters", std::to_string(cfg.edit.max_iters));
    kvd("grad_tol", cfg.edit.grad_tol);
    kvd("omega_p", cfg.align.omega_p);
    kvd("omega_q", cfg.align.omega_q);
    kvd("match_omega_q", cfg.match_omega_q);

    out += "\n# Cartesian tracking gains and the virtual body\n[impedance]\n";
    kvd("k_trans", cfg.k_trans);
    kvd("k_rot", cfg.k_rot);
    kvd("d_trans", cfg.d_trans);
    kvd("d_rot", cfg.d_rot);
    kvd("body_mass", cfg.body_mass);
    kvv("body_inertia", cfg.body_inertia);
    kvd("control_dt", cfg.control_dt);

    out += "\n# scripted insertion plan and episode-runner knobs\n[policy]\n";
    kvv("belief_bias", cfg.policy.belief_bias);
    kvd("start_height", cfg.policy.start_height);
    kvd("approach_height", cfg.policy.approach_height);
    kvd("descend_margin", cfg.policy.descend_margin);
    kvd("approach_time", cfg.policy.approach_time);
    kvd("descend_time", cfg.policy.descend_time);
    kvd("command_dt", cfg.policy.command_dt);
    kvd("max_time", cfg.max_time);
    kvd("pause_time", cfg.pause_time);
    kvd("jam_window", cfg.jam_window);
    kvd("jam_depth_eps", cfg.jam_depth_eps);
    kvd("jam_force", cfg.jam_force);
    kvd("demo_retreat_time", cfg.demo_retreat_time);
    kvd("demo_descend_time", cfg.demo_descend_time);
    kvd("demo_noise", cfg.demo_noise);
    kvd("lookup_step_weight", cfg.lookup_step_weight);

    out += "\n# seed drives the episode scene; outputs land in output_dir\n[run]\n";
    kv("seed", std::to_string(cfg.seed));
    kv("output_dir", cfg.output_dir);
    return out;
}

void write_config_file(const RunConfig& cfg, const std::string& path) {
    write_text_file(path, serialize_config(cfg));
}

}  // namespace trajedit
