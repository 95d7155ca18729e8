#include "trajedit/editor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trajedit {

namespace {

using Eigen::Vector4d;
using PosBlock = Eigen::Matrix<double, Eigen::Dynamic, 3>;

double sgn_pos(double x) { return x >= 0.0 ? 1.0 : -1.0; }

/// Thomas elimination for a SPD tridiagonal system with three RHS columns.
PosBlock solve_tridiagonal(std::vector<double> diag, const std::vector<double>& off,
                           PosBlock rhs) {
    const std::size_t n = diag.size();
    for (std::size_t j = 1; j < n; ++j) {
        const double m = off[j - 1] / diag[j - 1];
        diag[j] -= m * off[j - 1];
        rhs.row(j) -= m * rhs.row(j - 1);
    }
    PosBlock x(n, 3);
    x.row(n - 1) = rhs.row(n - 1) / diag[n - 1];
    for (std::size_t j = n - 1; j-- > 0;) {
        x.row(j) = (rhs.row(j) - off[j] * x.row(j + 1)) / diag[j];
    }
    return x;
}

// Smoothness compares each step against the base's step at the same index,
// so a segment that reproduces the base contributes nothing: a no-op
// correction must leave the trajectory untouched.
double position_objective(const PosBlock& p, const PosBlock& base, const Vec3& target,
                          const EditWeights& w) {
    const auto m = p.rows();
    double obj = (p - base).rowwise().squaredNorm().sum();
    for (Eigen::Index i = 1; i < m; ++i)
        obj += w.lambda_s *
               ((p.row(i) - p.row(i - 1)) - (base.row(i) - base.row(i - 1))).squaredNorm();
    obj += w.lambda_e * (p.row(m - 1).transpose() - target).squaredNorm();
    return obj;
}

double orientation_objective(const std::vector<Quat>& q, const std::vector<Quat>& base,
                             const Quat& target, const EditWeights& w) {
    const std::size_t m = q.size();
    double obj = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        obj += w.lambda_qf * quaternion_distance(q[i], base[i]);
    for (std::size_t i = 1; i < m; ++i)
        obj += w.lambda_s * w.lambda_qs *
               quaternion_distance(q[i] * q[i - 1].conjugate(),
                                   base[i] * base[i - 1].conjugate());
    obj += w.lambda_e * w.lambda_qe * quaternion_distance(q[m - 1], target);
    return obj;
}

}  // namespace

EditResult optimize_segment(const Trajectory& base, std::size_t k_star,
                            const Pose& human_start, const EditConfig& cfg) {
    base.validate();
    if (base.size() < 2) throw std::invalid_argument("optimize_segment: base needs >= 2 poses");
    if (k_star >= base.size())
        throw std::invalid_argument("optimize_segment: k_star out of range");
    if (cfg.n_points < 2) throw std::invalid_argument("optimize_segment: n_points must be >= 2");
    const EditWeights& w = cfg.weights;
    if (w.lambda_s < 0.0 || w.lambda_qf < 0.0 || w.lambda_qs < 0.0 || w.lambda_qe < 0.0 ||
        !(w.lambda_e > 0.0))
        throw std::invalid_argument("optimize_segment: weights must be >= 0 with lambda_e > 0");

    const std::size_t n = std::min(cfg.n_points, k_star);  // effective N
    const std::size_t s = k_star - n;
    const std::size_t m = n + 1;  // segment pose count

    PosBlock base_pos(m, 3);
    std::vector<Quat> base_q(m);
    for (std::size_t i = 0; i < m; ++i) {
        base_pos.row(i) = base.poses[s + i].p.transpose();
        base_q[i] = base.poses[s + i].q;
    }
    const Vec3 target_p = human_start.p;
    const Quat target_q = human_start.q;

    // Initial iterate: base positions (endpoint pinned in hard mode), slerp
    // chain for the orientations.
    PosBlock pos = base_pos;
    if (cfg.hard_endpoint) pos.row(m - 1) = target_p.transpose();
    std::vector<Quat> q(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double t = (m == 1) ? 1.0 : static_cast<double>(i) / static_cast<double>(m - 1);
        q[i] = slerp(base_q[0], target_q, t);
    }
    if (cfg.hard_endpoint) q[m - 1] = canonicalized(target_q);

    EditResult res;
    res.start_index = s;
    res.effective_n = n;
    res.objective_trace.push_back(position_objective(pos, base_pos, target_p, w) +
                                  orientation_objective(q, base_q, target_q, w));

    // Exact position solve. In deviation coordinates e_j = x_j - b_j the
    // fidelity term is sum |e_j|^2 and the smoothness term is
    // sum |e_j - e_{j-1}|^2, so the free variables form the same SPD
    // tridiagonal system for every base; only the endpoint deviation
    // enters the RHS (through the last smoothness pair in hard mode, the
    // lambda_e pull in soft mode).
    const Vec3 target_dev = target_p - base_pos.row(m - 1).transpose();
    const std::size_t n_free_pos = cfg.hard_endpoint ? n : m;
    if (n_free_pos > 0) {
        std::vector<double> diag(n_free_pos, 1.0 + 2.0 * w.lambda_s);
        std::vector<double> off(n_free_pos > 1 ? n_free_pos - 1 : 0, -w.lambda_s);
        PosBlock rhs = PosBlock::Zero(n_free_pos, 3);
        diag[0] = 1.0 + (n_free_pos > 1 || cfg.hard_endpoint ? w.lambda_s : 0.0);
        if (cfg.hard_endpoint) {
            rhs.row(n_free_pos - 1) += w.lambda_s * target_dev.transpose();
        } else {
            diag[n_free_pos - 1] = 1.0 + (n_free_pos > 1 ? w.lambda_s : 0.0) + w.lambda_e;
            rhs.row(n_free_pos - 1) += w.lambda_e * target_dev.transpose();
        }
        const PosBlock sol = solve_tridiagonal(diag, off, rhs);
        for (std::size_t j = 0; j < n_free_pos; ++j)
            pos.row(j) = base_pos.row(j) + sol.row(j);
    }
    const double pos_obj = position_objective(pos, base_pos, target_p, w);
    double orient_obj = orientation_objective(q, base_q, target_q, w);
    res.objective_trace.push_back(pos_obj + orient_obj);

    const std::size_t n_free_q = cfg.hard_endpoint ? n : m;
    if (n_free_q > 0 && cfg.hard_endpoint && w.lambda_s * w.lambda_qs == 0.0) {
        // Separable orientation problem: each free quaternion's optimum is the
        // base orientation.
        for (std::size_t i = 0; i < n_free_q; ++i) q[i] = base_q[i];
        orient_obj = orientation_objective(q, base_q, target_q, w);
        res.objective_trace.push_back(pos_obj + orient_obj);
        res.converged = true;
    } else if (n_free_q > 0) {
        // Projected gradient descent on the product of unit spheres with
        // backtracking; the subgradient of 1 - |<q, r>| at a zero inner
        // product uses sign +1. The smoothness pair (i-1, i) compares the
        // step rotation q_i q_{i-1}^-1 against the base's step c_i; using
        // <q_i q_{i-1}^*, c> = <q_i, c q_{i-1}> = <q_{i-1}, c^* q_i> gives
        // the gradients of both endpoints of the pair.
        std::vector<Quat> base_step(m);
        for (std::size_t i = 1; i < m; ++i) base_step[i] = base_q[i] * base_q[i - 1].conjugate();
        const double ws = w.lambda_s * w.lambda_qs;
        double step = 0.25;
        std::vector<Vector4d> grad(n_free_q);
        for (std::size_t iter = 1; iter <= cfg.max_iters; ++iter) {
            double grad_sq = 0.0;
            for (std::size_t i = 0; i < n_free_q; ++i) {
                Vector4d g = -w.lambda_qf * sgn_pos(q[i].dot(base_q[i])) * base_q[i].coeffs();
                if (i > 0) {
                    const Quat lever = base_step[i] * q[i - 1];
                    g -= ws * sgn_pos(q[i].dot(lever)) * lever.coeffs();
                }
                if (i + 1 < m) {
                    const double d = q[i + 1].dot(base_step[i + 1] * q[i]);
                    g -= ws * sgn_pos(d) * (base_step[i + 1].conjugate() * q[i + 1]).coeffs();
                }
                if (!cfg.hard_endpoint && i == m - 1)
                    g -= w.lambda_e * w.lambda_qe * sgn_pos(q[i].dot(target_q)) * target_q.coeffs();
                g -= g.dot(q[i].coeffs()) * q[i].coeffs();  // tangent projection
                grad[i] = g;
                grad_sq += g.squaredNorm();
            }
            if (std::sqrt(grad_sq) <= cfg.grad_tol) {
                res.converged = true;
                break;
            }

            bool accepted = false;
            for (int halving = 0; halving < 40; ++halving) {
                std::vector<Quat> cand = q;
                for (std::size_t i = 0; i < n_free_q; ++i) {
                    Vector4d c = q[i].coeffs() - step * grad[i];
                    cand[i].coeffs() = c / c.norm();
                }
                const double cand_obj = orientation_objective(cand, base_q, target_q, w);
                if (cand_obj <= orient_obj) {
                    q = std::move(cand);
                    orient_obj = cand_obj;
                    step = std::min(step * 1.5, 4.0);
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted) {
                // No step down to ~1e-13 of the descent direction lowers the
                // objective any further: the iterate is optimal at floating
                // point resolution even if the (sub)gradient norm still sits
                // above grad_tol, so report it as converged.
                res.converged = true;
                break;
            }
            res.iterations = iter;
            res.objective_trace.push_back(pos_obj + orient_obj);
        }
    } else {
        res.converged = true;
    }

    res.segment.dt = base.dt;
    res.segment.poses.reserve(m);
    for (std::size_t i = 0; i < m; ++i) res.segment.poses.emplace_back(pos.row(i).transpose(), q[i]);
    if (cfg.hard_endpoint) res.segment.poses[m - 1] = Pose{target_p, target_q};
    res.endpoint_position_error = position_distance(res.segment.poses.back(), human_start);
    res.endpoint_quaternion_error = quaternion_distance(res.segment.poses.back(), human_start);
    return res;
}

Trajectory assemble_corrected(const Trajectory& base, std::size_t k_star,
                              const Trajectory& segment, const Trajectory& human,
                              std::size_t n_points) {
    base.validate();
    segment.validate();
    human.validate();
    if (k_star >= base.size())
        throw std::invalid_argument("assemble_corrected: k_star out of range");

    const std::size_t n = std::min(n_points, k_star);
    if (segment.size() != n + 1)
        throw std::invalid_argument("assemble_corrected: segment length inconsistent with N and k_star");

    const double endpoint_gap = position_distance(segment.back(), human.front());
    if (endpoint_gap > 1e-6)
        throw std::invalid_argument("assemble_corrected: segment endpoint does not meet demo start");

    Trajectory demo = human;
    if (std::abs(human.dt - base.dt) > 1e-9 * base.dt) demo = resample(human, base.dt);

    Trajectory out;
    out.dt = base.dt;
    out.poses.reserve((k_star - n) + segment.size() + (demo.size() - 1));
    for (std::size_t i = 0; i + n < k_star; ++i) out.poses.push_back(base.poses[i]);
    out.poses.insert(out.poses.end(), segment.poses.begin(), segment.poses.end());
    for (std::size_t i = 1; i < demo.size(); ++i) out.poses.push_back(demo.poses[i]);
    return out;
}

}  // namespace trajedit
