#ifndef TTTK_EIKONAL_HPP
#define TTTK_EIKONAL_HPP

#include <stdexcept>

#include "tttk/grids.hpp"

namespace tttk {

/// Positive slowness on a Cartesian grid.  `values` holds m = m0 + mtilde at
/// every node; outside_mask_apply replaces the values beyond the unit disk
/// with a large constant so that exterior paths never win.
struct SlownessField {
    CartesianGrid grid;
    std::vector<double> values;

    SlownessField() = default;
    explicit SlownessField(const CartesianGrid& g, double fill = 1.0)
        : grid(g), values(g.size(), fill) {}

    double& at(std::size_t i, std::size_t j) { return values[grid.idx(i, j)]; }
    double at(std::size_t i, std::size_t j) const { return values[grid.idx(i, j)]; }
};

/// Converged viscosity solution for one boundary source.
struct TraveltimeField {
    CartesianGrid grid;
    double source_angle = 0.0;
    std::vector<double> values;
    std::size_t sweep_cycles = 0;   // full 4-ordering cycles to converge
    double last_residual = 0.0;
    std::vector<double> residual_history;  // max nodal update per cycle

    double at(std::size_t i, std::size_t j) const { return values[grid.idx(i, j)]; }
};

struct SweepParams {
    double tol = 1e-8;
    std::size_t max_sweeps = 1000;  // cap on full 4-ordering cycles
    // 0..23: which permutation of the four orderings to run inside a cycle;
    // the converged solution is ordering-independent up to tol.
    unsigned ordering_permutation = 0;
};

struct ConvergenceError : std::runtime_error {
    double residual;
    ConvergenceError(const std::string& msg, double res)
        : std::runtime_error(msg), residual(res) {}
};

/// Sets nodes with |x| > 1 to outside_slowness (must be >= 10x the largest
/// interior value); interior nodes are untouched.
SlownessField outside_mask_apply(const SlownessField& m, double outside_slowness);

/// Godunov upwind fast sweeping solve of |grad u| = m with u = 0 at the
/// boundary point (cos a, sin a).  The <=4 nodes of the cell containing the
/// source are pinned to slowness * distance and excluded from updates.
/// Throws ConvergenceError when max_sweeps cycles do not reach tol and
/// std::invalid_argument for nonpositive slowness.
TraveltimeField sweep_solve(const SlownessField& m, double source_angle,
                            const SweepParams& params = {});

}  // namespace tttk

#endif
