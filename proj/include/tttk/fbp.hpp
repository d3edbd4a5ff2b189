#ifndef TTTK_FBP_HPP
#define TTTK_FBP_HPP

#include "tttk/kernel.hpp"

namespace tttk {

struct FbpConfig {
    double epsilon = 0.0;       // absolute ridge parameter; 0 = derive from epsilon_rel
    double epsilon_rel = 1e-4;  // relative to the largest diagonal estimate of K^T K
    double cg_tol = 1e-10;      // relative residual target
    std::size_t cg_max_iter = 2000;
    std::size_t n_threads = 0;
};

/// Largest entry of a stochastic diagonal estimate of K^T K (five Rademacher
/// probes, fixed probe seed so the derived ridge is deterministic).
double normal_diag_estimate(const LinearKernel& kernel, std::size_t n_threads = 0);

/// Resolves the ridge parameter used by fbp_invert for this kernel/config.
double fbp_epsilon(const LinearKernel& kernel, const FbpConfig& cfg);

/// Filtered back-projection baseline: solves (K^T K + eps I) x = K^T d by
/// conjugate gradients with the two convolution operators as the matrix.
/// Throws ConvergenceError when cg_max_iter is hit before cg_tol.
PolarField fbp_invert(const LinearKernel& kernel, const Mat& d, const FbpConfig& cfg = {});

}  // namespace tttk

#endif
