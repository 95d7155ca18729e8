#include "trajedit/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace trajedit {
namespace {

constexpr const char* kPoseFields = "t,px,py,pz,qw,qx,qy,qz";
constexpr const char* kWrenchFields = "t,px,py,pz,qw,qx,qy,qz,fx,fy,fz,tx,ty,tz";
constexpr const char* kEventFields =
    "t,score,mode,cpx,cpy,cpz,cqw,cqx,cqy,cqz,pfx,pfy,pfz,ptx,pty,ptz";
constexpr const char* kBenchmarkHeader =
    "label,n_points,regions,train_episodes,eval_episodes,base_success,ter_success,"
    "corrector_success,mean_interventions,precision,recall,junction_ratio_max,"
    "junction_ratio_mean";

const char* const kTrajField[14] = {"t",  "px", "py", "pz", "qw", "qx", "qy",
                                    "qz", "fx", "fy", "fz", "tx", "ty", "tz"};
const char* const kSampleField[23] = {
    "region", "step", "px",  "py",  "pz",  "qw",  "qx",  "qy",
    "qz",     "apx",  "apy", "apz", "aqw", "aqx", "aqy", "aqz",
    "dpx",    "dpy",  "dpz", "dqw", "dqx", "dqy", "dqz"};
const char* const kEventField[16] = {"t",   "score", "mode", "cpx", "cpy", "cpz",
                                     "cqw", "cqx",   "cqy",  "cqz", "pfx", "pfy",
                                     "pfz", "ptx",   "pty",  "ptz"};

[[noreturn]] void fail(const std::string& name, std::size_t line_no, const std::string& msg) {
    throw std::runtime_error(name + ":" + std::to_string(line_no) + ": " + msg);
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream ss(s);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

// Splits into lines, tolerating CRLF and a trailing newline.
std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines = split(text, '\n');
    for (auto& l : lines)
        if (!l.empty() && l.back() == '\r') l.pop_back();
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

double parse_num(const std::string& raw, const char* field, const std::string& name,
                 std::size_t line_no, bool require_finite = true) {
    const std::string tok = trim(raw);
    const char* begin = tok.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (tok.empty() || end == begin || *end != '\0')
        fail(name, line_no, std::string("field ") + field + ": invalid number '" + raw + "'");
    if (require_finite && !std::isfinite(v))
        fail(name, line_no, std::string("field ") + field + ": non-finite value '" + raw + "'");
    return v;
}

std::size_t parse_count(const std::string& raw, const char* field, const std::string& name,
                        std::size_t line_no) {
    const std::string tok = trim(raw);
    const char* begin = tok.c_str();
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(begin, &end, 10);
    if (tok.empty() || end == begin || *end != '\0' || tok[0] == '-')
        fail(name, line_no,
             std::string("field ") + field + ": invalid non-negative integer '" + raw + "'");
    return static_cast<std::size_t>(v);
}

// Reads w,x,y,z with the unit-norm tolerance bands: error beyond 1e-6,
// renormalize with a warning in (1e-9, 1e-6], exact use below that.
Quat read_quat(const double* v, const char* lead_field, const std::string& name,
               std::size_t line_no, std::vector<std::string>* warnings) {
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    const double dev = std::abs(norm - 1.0);
    if (dev > 1e-6)
        fail(name, line_no,
             std::string("field ") + lead_field + ": quaternion norm " + format_double(norm) +
                 " deviates from 1 beyond 1e-6");
    Quat q{v[0], v[1], v[2], v[3]};
    if (dev > 1e-9) {
        q.coeffs() /= norm;
        if (warnings)
            warnings->push_back(name + ":" + std::to_string(line_no) +
                                ": renormalized quaternion with norm " + format_double(norm));
    }
    return q;
}

void append_num(std::string& out, double v, bool lead_comma = true) {
    if (lead_comma) out += ',';
    out += format_double(v);
}

std::string vec3_csv(const Vec3& v) {
    return format_double(v.x()) + "," + format_double(v.y()) + "," + format_double(v.z());
}

Vec3 parse_vec3_value(const std::string& value, const char* field, const std::string& name,
                      std::size_t line_no) {
    const std::vector<std::string> parts = split(value, ',');
    if (parts.size() != 3)
        fail(name, line_no, std::string("field ") + field + ": expected 3 components");
    return Vec3{parse_num(parts[0], field, name, line_no),
                parse_num(parts[1], field, name, line_no),
                parse_num(parts[2], field, name, line_no)};
}

struct KeyValue {
    std::string key;
    std::string value;
};

KeyValue split_kv(const std::string& tok, const std::string& name, std::size_t line_no) {
    const std::size_t eq = tok.find('=');
    if (eq == std::string::npos || eq == 0)
        fail(name, line_no, "malformed header token '" + tok + "' (expected key=value)");
    return KeyValue{tok.substr(0, eq), tok.substr(eq + 1)};
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// --- trajectories ------------------------------------------------------

std::string serialize_trajectory(const Trajectory& traj) {
    traj.validate();
    const bool with_wrench = traj.has_wrenches();
    std::string out = "# trajectory dt=" + format_double(traj.dt) +
                      " fields=" + (with_wrench ? kWrenchFields : kPoseFields) + "\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const Pose& s = traj.poses[i];
        append_num(out, traj.dt * static_cast<double>(i), false);
        append_num(out, s.p.x());
        append_num(out, s.p.y());
        append_num(out, s.p.z());
        append_num(out, s.q.w());
        append_num(out, s.q.x());
        append_num(out, s.q.y());
        append_num(out, s.q.z());
        if (with_wrench) {
            const Wrench& w = traj.wrenches[i];
            for (int j = 0; j < 3; ++j) append_num(out, w.f[j]);
            for (int j = 0; j < 3; ++j) append_num(out, w.tau[j]);
        }
        out += '\n';
    }
    return out;
}

Trajectory parse_trajectory(const std::string& text, const std::string& name,
                            std::vector<std::string>* warnings) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) fail(name, 1, "missing '# trajectory' header");
    const std::vector<std::string> head = split_ws(lines[0]);
    if (head.size() < 2 || head[0] != "#" || head[1] != "trajectory")
        fail(name, 1, "missing '# trajectory' header");

    double dt = 0.0;
    bool saw_dt = false, with_wrench = false, saw_fields = false;
    for (std::size_t i = 2; i < head.size(); ++i) {
        const KeyValue kv = split_kv(head[i], name, 1);
        if (kv.key == "dt") {
            dt = parse_num(kv.value, "dt", name, 1);
            if (!(dt > 0.0)) fail(name, 1, "field dt: must be positive");
            saw_dt = true;
        } else if (kv.key == "fields") {
            if (kv.value == kPoseFields)
                with_wrench = false;
            else if (kv.value == kWrenchFields)
                with_wrench = true;
            else
                fail(name, 1, "unsupported fields list '" + kv.value + "'");
            saw_fields = true;
        } else {
            fail(name, 1, "unknown header key '" + kv.key + "'");
        }
    }
    if (!saw_dt) fail(name, 1, "header misses dt=");
    if (!saw_fields) fail(name, 1, "header misses fields=");

    Trajectory traj;
    traj.dt = dt;
    const std::size_t n_fields = with_wrench ? 14 : 8;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::size_t line_no = li + 1;
        if (trim(lines[li]).empty()) continue;
        const std::vector<std::string> toks = split(lines[li], ',');
        if (toks.size() != n_fields)
            fail(name, line_no,
                 "expected " + std::to_string(n_fields) + " fields, got " +
                     std::to_string(toks.size()));
        double v[14] = {};
        for (std::size_t j = 0; j < n_fields; ++j)
            v[j] = parse_num(toks[j], kTrajField[j], name, line_no);
        const Quat q = read_quat(v + 4, "qw", name, line_no, warnings);
        traj.poses.push_back(Pose{Vec3{v[1], v[2], v[3]}, q});
        if (with_wrench)
            traj.wrenches.push_back(
                Wrench{Vec3{v[8], v[9], v[10]}, Vec3{v[11], v[12], v[13]}});
    }
    if (traj.poses.empty()) fail(name, lines.size(), "no steps");
    return traj;
}

void write_trajectory_file(const Trajectory& traj, const std::string& path) {
    write_text_file(path, serialize_trajectory(traj));
}

Trajectory parse_trajectory_file(const std::string& path, std::vector<std::string>* warnings) {
    return parse_trajectory(read_text_file(path), path, warnings);
}

// --- residual samples --------------------------------------------------

std::string serialize_samples(const std::vector<ResidualSample>& samples) {
    std::string out = "# residual-samples count=" + std::to_string(samples.size()) + "\n";
    for (const ResidualSample& s : samples) {
        out += region_name(s.region);
        out += ',';
        out += std::to_string(s.step_index);
        for (const Pose* pose : {&s.state, &s.base_action}) {
            append_num(out, pose->p.x());
            append_num(out, pose->p.y());
            append_num(out, pose->p.z());
            append_num(out, pose->q.w());
            append_num(out, pose->q.x());
            append_num(out, pose->q.y());
            append_num(out, pose->q.z());
        }
        append_num(out, s.residual.dp.x());
        append_num(out, s.residual.dp.y());
        append_num(out, s.residual.dp.z());
        append_num(out, s.residual.dq.w());
        append_num(out, s.residual.dq.x());
        append_num(out, s.residual.dq.y());
        append_num(out, s.residual.dq.z());
        out += '\n';
    }
    return out;
}

std::vector<ResidualSample> parse_samples(const std::string& text, const std::string& name,
                                          std::vector<std::string>* warnings) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) fail(name, 1, "missing '# residual-samples' header");
    const std::vector<std::string> head = split_ws(lines[0]);
    if (head.size() != 3 || head[0] != "#" || head[1] != "residual-samples")
        fail(name, 1, "missing '# residual-samples' header");
    const KeyValue kv = split_kv(head[2], name, 1);
    if (kv.key != "count") fail(name, 1, "unknown header key '" + kv.key + "'");
    const std::size_t count = parse_count(kv.value, "count", name, 1);

    std::vector<ResidualSample> samples;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::size_t line_no = li + 1;
        if (trim(lines[li]).empty()) continue;
        const std::vector<std::string> toks = split(lines[li], ',');
        if (toks.size() != 23)
            fail(name, line_no, "expected 23 fields, got " + std::to_string(toks.size()));
        ResidualSample s;
        const auto region = region_from_name(trim(toks[0]));
        if (!region) fail(name, line_no, "field region: unknown region '" + toks[0] + "'");
        s.region = *region;
        s.step_index = parse_count(toks[1], "step", name, line_no);
        double v[21] = {};
        for (std::size_t j = 0; j < 21; ++j)
            v[j] = parse_num(toks[j + 2], kSampleField[j + 2], name, line_no);
        s.state = Pose{Vec3{v[0], v[1], v[2]}, read_quat(v + 3, "qw", name, line_no, warnings)};
        s.base_action =
            Pose{Vec3{v[7], v[8], v[9]}, read_quat(v + 10, "aqw", name, line_no, warnings)};
        s.residual = PoseResidual{Vec3{v[14], v[15], v[16]},
                                  read_quat(v + 17, "dqw", name, line_no, warnings)};
        samples.push_back(std::move(s));
    }
    if (samples.size() != count)
        fail(name, 1,
             "count=" + std::to_string(count) + " does not match " +
                 std::to_string(samples.size()) + " sample lines");
    return samples;
}

void write_samples_file(const std::vector<ResidualSample>& samples, const std::string& path) {
    write_text_file(path, serialize_samples(samples));
}

std::vector<ResidualSample> parse_samples_file(const std::string& path,
                                               std::vector<std::string>* warnings) {
    return parse_samples(read_text_file(path), path, warnings);
}

// --- labeled score streams ---------------------------------------------

std::string serialize_scores(const LabeledEpisode& episode) {
    std::string out = std::string("# scores label=") + (episode.failed ? "failed" : "success") + "\n";
    for (double s : episode.scores) out += format_double(s) + "\n";
    return out;
}

LabeledEpisode parse_scores(const std::string& text, const std::string& name) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) fail(name, 1, "missing '# scores' header");
    const std::vector<std::string> head = split_ws(lines[0]);
    if (head.size() != 3 || head[0] != "#" || head[1] != "scores")
        fail(name, 1, "missing '# scores' header");
    const KeyValue kv = split_kv(head[2], name, 1);
    if (kv.key != "label") fail(name, 1, "unknown header key '" + kv.key + "'");
    LabeledEpisode episode;
    if (kv.value == "failed")
        episode.failed = true;
    else if (kv.value == "success")
        episode.failed = false;
    else
        fail(name, 1, "field label: expected 'failed' or 'success', got '" + kv.value + "'");
    for (std::size_t li = 1; li < lines.size(); ++li) {
        if (trim(lines[li]).empty()) continue;
        episode.scores.push_back(parse_num(lines[li], "score", name, li + 1));
    }
    return episode;
}

void write_scores_file(const LabeledEpisode& episode, const std::string& path) {
    write_text_file(path, serialize_scores(episode));
}

LabeledEpisode parse_scores_file(const std::string& path) {
    return parse_scores(read_text_file(path), path);
}

// --- episode logs ------------------------------------------------------

std::string serialize_events(const EpisodeLog& log) {
    std::string out = "# episode seed=" + std::to_string(log.seed) +
                      " command_dt=" + format_double(log.command_dt) +
                      " outcome=" + outcome_name(log.outcome) +
                      " final_depth=" + format_double(log.final_depth) +
                      " socket=" + vec3_csv(log.socket_center_true) +
                      " bias=" + vec3_csv(log.belief_bias) +
                      " intervened=" + (log.intervention ? "1" : "0");
    if (log.intervention) {
        out += " trigger_step=" + std::to_string(log.intervention->trigger_step);
        out += " k_star=" + std::to_string(log.intervention->k_star);
        out += " n_points=" + std::to_string(log.intervention->n_points);
    }
    out += "\n# fields=";
    out += kEventFields;
    out += '\n';
    for (const EpisodeStep& s : log.steps) {
        append_num(out, s.t, false);
        append_num(out, s.score);
        out += ',';
        out += step_mode_name(s.mode);
        append_num(out, s.commanded.p.x());
        append_num(out, s.commanded.p.y());
        append_num(out, s.commanded.p.z());
        append_num(out, s.commanded.q.w());
        append_num(out, s.commanded.q.x());
        append_num(out, s.commanded.q.y());
        append_num(out, s.commanded.q.z());
        for (int j = 0; j < 3; ++j) append_num(out, s.predicted.f[j]);
        for (int j = 0; j < 3; ++j) append_num(out, s.predicted.tau[j]);
        out += '\n';
    }
    return out;
}

EpisodeLog parse_episode_log(const std::string& traj_text, const std::string& events_text,
                             const std::string& name, std::vector<std::string>* warnings) {
    const std::string traj_name = name + ".traj";
    const std::string events_name = name + ".events";
    const Trajectory measured = parse_trajectory(traj_text, traj_name, warnings);
    if (!measured.has_wrenches())
        fail(traj_name, 1, "episode trajectory misses the wrench columns");

    const std::vector<std::string> lines = split_lines(events_text);
    if (lines.size() < 2) fail(events_name, 1, "missing '# episode' header lines");
    const std::vector<std::string> head = split_ws(lines[0]);
    if (head.size() < 2 || head[0] != "#" || head[1] != "episode")
        fail(events_name, 1, "missing '# episode' header");

    EpisodeLog log;
    bool intervened = false;
    InterventionInfo info;
    bool saw_trigger = false, saw_k = false, saw_n = false;
    for (std::size_t i = 2; i < head.size(); ++i) {
        const KeyValue kv = split_kv(head[i], events_name, 1);
        if (kv.key == "seed")
            log.seed = static_cast<unsigned>(parse_count(kv.value, "seed", events_name, 1));
        else if (kv.key == "command_dt")
            log.command_dt = parse_num(kv.value, "command_dt", events_name, 1);
        else if (kv.key == "outcome") {
            const auto outcome = outcome_from_name(kv.value);
            if (!outcome) fail(events_name, 1, "field outcome: unknown outcome '" + kv.value + "'");
            log.outcome = *outcome;
        } else if (kv.key == "final_depth")
            log.final_depth = parse_num(kv.value, "final_depth", events_name, 1);
        else if (kv.key == "socket")
            log.socket_center_true = parse_vec3_value(kv.value, "socket", events_name, 1);
        else if (kv.key == "bias")
            log.belief_bias = parse_vec3_value(kv.value, "bias", events_name, 1);
        else if (kv.key == "intervened")
            intervened = parse_count(kv.value, "intervened", events_name, 1) != 0;
        else if (kv.key == "trigger_step") {
            info.trigger_step = parse_count(kv.value, "trigger_step", events_name, 1);
            saw_trigger = true;
        } else if (kv.key == "k_star") {
            info.k_star = parse_count(kv.value, "k_star", events_name, 1);
            saw_k = true;
        } else if (kv.key == "n_points") {
            info.n_points = parse_count(kv.value, "n_points", events_name, 1);
            saw_n = true;
        } else
            fail(events_name, 1, "unknown header key '" + kv.key + "'");
    }
    if (intervened) {
        if (!saw_trigger || !saw_k || !saw_n)
            fail(events_name, 1, "intervened episode misses trigger_step/k_star/n_points");
        log.intervention = info;
    }

    if (trim(lines[1]) != std::string("# fields=") + kEventFields)
        fail(events_name, 2, "unexpected fields line");

    for (std::size_t li = 2; li < lines.size(); ++li) {
        const std::size_t line_no = li + 1;
        if (trim(lines[li]).empty()) continue;
        const std::vector<std::string> toks = split(lines[li], ',');
        if (toks.size() != 16)
            fail(events_name, line_no, "expected 16 fields, got " + std::to_string(toks.size()));
        EpisodeStep step;
        step.t = parse_num(toks[0], kEventField[0], events_name, line_no);
        step.score = parse_num(toks[1], kEventField[1], events_name, line_no);
        const auto mode = step_mode_from_name(trim(toks[2]));
        if (!mode) fail(events_name, line_no, "field mode: unknown mode '" + toks[2] + "'");
        step.mode = *mode;
        double v[13] = {};
        for (std::size_t j = 0; j < 13; ++j)
            v[j] = parse_num(toks[j + 3], kEventField[j + 3], events_name, line_no);
        step.commanded =
            Pose{Vec3{v[0], v[1], v[2]}, read_quat(v + 3, "cqw", events_name, line_no, warnings)};
        step.predicted = Wrench{Vec3{v[7], v[8], v[9]}, Vec3{v[10], v[11], v[12]}};
        const std::size_t idx = log.steps.size();
        if (idx >= measured.size())
            fail(events_name, line_no, "more event lines than trajectory steps");
        step.measured = measured.poses[idx];
        step.sensed = measured.wrenches[idx];
        log.steps.push_back(std::move(step));
    }
    if (log.steps.size() != measured.size())
        fail(events_name, lines.size(),
             "event lines (" + std::to_string(log.steps.size()) +
                 ") do not match trajectory steps (" + std::to_string(measured.size()) + ")");
    return log;
}

void write_episode_log(const EpisodeLog& log, const std::string& base_path) {
    Trajectory measured;
    measured.dt = log.command_dt;
    measured.poses.reserve(log.steps.size());
    measured.wrenches.reserve(log.steps.size());
    for (const EpisodeStep& s : log.steps) {
        measured.poses.push_back(s.measured);
        measured.wrenches.push_back(s.sensed);
    }
    write_text_file(base_path + ".traj", serialize_trajectory(measured));
    write_text_file(base_path + ".events", serialize_events(log));
}

EpisodeLog read_episode_log(const std::string& base_path, std::vector<std::string>* warnings) {
    return parse_episode_log(read_text_file(base_path + ".traj"),
                             read_text_file(base_path + ".events"), base_path, warnings);
}

// --- benchmark tables --------------------------------------------------

namespace {
std::string plus_join(const std::string& comma_list) {
    std::string out = comma_list;
    for (char& c : out)
        if (c == ',') c = '+';
    return out;
}
std::string comma_join(const std::string& plus_list) {
    std::string out = plus_list;
    for (char& c : out)
        if (c == '+') c = ',';
    return out;
}
}  // namespace

std::string serialize_benchmark(const std::vector<BenchmarkRow>& rows) {
    std::string out = "# benchmark\n";
    out += kBenchmarkHeader;
    out += '\n';
    for (const BenchmarkRow& r : rows) {
        if (r.label.find(',') != std::string::npos)
            throw std::invalid_argument("benchmark label may not contain ',': " + r.label);
        out += r.label;
        out += ',' + std::to_string(r.n_points);
        out += ',' + plus_join(r.regions);
        out += ',' + std::to_string(r.train_episodes);
        out += ',' + std::to_string(r.eval_episodes);
        append_num(out, r.base_success);
        append_num(out, r.ter_success);
        append_num(out, r.corrector_success);
        append_num(out, r.mean_interventions);
        append_num(out, r.precision);
        append_num(out, r.recall);
        append_num(out, r.junction_ratio_max);
        append_num(out, r.junction_ratio_mean);
        out += '\n';
    }
    return out;
}

std::vector<BenchmarkRow> parse_benchmark(const std::string& text, const std::string& name) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty() || trim(lines[0]) != "# benchmark")
        fail(name, 1, "missing '# benchmark' header");
    if (lines.size() < 2 || trim(lines[1]) != kBenchmarkHeader)
        fail(name, 2, "unexpected column header");
    std::vector<BenchmarkRow> rows;
    for (std::size_t li = 2; li < lines.size(); ++li) {
        const std::size_t line_no = li + 1;
        if (trim(lines[li]).empty()) continue;
        const std::vector<std::string> toks = split(lines[li], ',');
        if (toks.size() != 13)
            fail(name, line_no, "expected 13 fields, got " + std::to_string(toks.size()));
        BenchmarkRow r;
        r.label = trim(toks[0]);
        r.n_points = parse_count(toks[1], "n_points", name, line_no);
        r.regions = comma_join(trim(toks[2]));
        if (!RegionSet::from_string(r.regions))
            fail(name, line_no, "field regions: unknown region in '" + toks[2] + "'");
        r.train_episodes = parse_count(toks[3], "train_episodes", name, line_no);
        r.eval_episodes = parse_count(toks[4], "eval_episodes", name, line_no);
        r.base_success = parse_num(toks[5], "base_success", name, line_no);
        r.ter_success = parse_num(toks[6], "ter_success", name, line_no);
        r.corrector_success = parse_num(toks[7], "corrector_success", name, line_no);
        r.mean_interventions = parse_num(toks[8], "mean_interventions", name, line_no);
        r.precision = parse_num(toks[9], "precision", name, line_no);
        r.recall = parse_num(toks[10], "recall", name, line_no);
        r.junction_ratio_max =
            parse_num(toks[11], "junction_ratio_max", name, line_no, /*require_finite=*/false);
        r.junction_ratio_mean =
            parse_num(toks[12], "junction_ratio_mean", name, line_no, /*require_finite=*/false);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_benchmark_file(const std::vector<BenchmarkRow>& rows, const std::string& path) {
    write_text_file(path, serialize_benchmark(rows));
}

std::vector<BenchmarkRow> parse_benchmark_file(const std::string& path) {
    return parse_benchmark(read_text_file(path), path);
}

// --- whole files -------------------------------------------------------

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw std::runtime_error("read failed for " + path);
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace trajedit
