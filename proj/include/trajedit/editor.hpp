#pragma once

#include "trajedit/geometry.hpp"

#include <cstddef>
#include <vector>

namespace trajedit {

/// Weights of the segment-editing objective. lambda_s scales the smoothness
/// term, lambda_e the endpoint term, and the lambda_q* factors scale the
/// orientation part inside the fidelity / smoothness / endpoint terms.
struct EditWeights {
    double lambda_s{1.0};
    double lambda_e{1000.0};
    double lambda_qf{0.5};
    double lambda_qs{0.5};
    double lambda_qe{0.5};
};

struct EditConfig {
    std::size_t n_points{20};   // segment length N (segment has N+1 poses)
    EditWeights weights{};
    bool hard_endpoint{true};   // pin the last segment pose to the correction start
    std::size_t max_iters{200};
    double grad_tol{1e-8};
};

struct EditResult {
    Trajectory segment;                  // optimized transition, N+1 poses
    std::vector<double> objective_trace; // non-increasing total objective
    double endpoint_position_error{0.0};
    double endpoint_quaternion_error{0.0};
    std::size_t start_index{0};          // k_star - effective_n in the base
    std::size_t effective_n{0};          // N after clamping to k_star
    std::size_t iterations{0};           // orientation descent iterations
    bool converged{false};

    double final_objective() const {
        return objective_trace.empty() ? 0.0 : objective_trace.back();
    }
};

/// Optimize the transition segment ending at base index k_star so that it
/// stays close to the base poses, keeps each step close to the base's step
/// at the same index (a no-op correction therefore reproduces the base
/// exactly), and meets the correction start pose at its end.
///
/// The objective splits into a convex quadratic in the positions, solved
/// exactly through a symmetric positive-definite tridiagonal system, and a
/// sphere-constrained orientation part, solved by projected gradient descent
/// with backtracking (quaternions renormalized every step, initialized by
/// slerp from the segment-start orientation to the correction orientation).
/// With hard_endpoint the last pose is eliminated from the variables; in the
/// soft mode it stays free and is pulled by lambda_e. The first segment pose
/// is always free. If k_star < n_points the segment is clamped to start at
/// index 0. Non-convergence is reported through `converged`, not an error.
EditResult optimize_segment(const Trajectory& base, std::size_t k_star,
                            const Pose& human_start, const EditConfig& cfg = {});

/// Concatenate base[0 .. k*-N-1], the optimized segment, and the
/// demonstration tail (all demo poses after the first). The demonstration is
/// resampled to the base dt if it differs. Throws if the segment does not end
/// at the demo start (within 1e-6 m) or if its length is inconsistent with
/// min(N, k_star).
Trajectory assemble_corrected(const Trajectory& base, std::size_t k_star,
                              const Trajectory& segment, const Trajectory& human,
                              std::size_t n_points);

}  // namespace trajedit
