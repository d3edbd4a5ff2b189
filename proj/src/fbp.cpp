#include "tttk/fbp.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "tttk/eikonal.hpp"
#include "tttk/rng.hpp"

namespace tttk {

namespace {
double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
}  // namespace

double normal_diag_estimate(const LinearKernel& kernel, std::size_t n_threads) {
    auto rng = make_rng(0x7b9d2c4ULL, 0);
    std::bernoulli_distribution coin(0.5);
    const std::size_t n = kernel.pg.size();
    std::vector<double> est(n, 0.0);
    constexpr int kProbes = 5;
    for (int p = 0; p < kProbes; ++p) {
        PolarField z(kernel.pg);
        for (auto& v : z.values) v = coin(rng) ? 1.0 : -1.0;
        const PolarField az = apply_K_adjoint(kernel, apply_K(kernel, z, n_threads), n_threads);
        for (std::size_t i = 0; i < n; ++i) est[i] += z.values[i] * az.values[i] / kProbes;
    }
    double mx = 0.0;
    for (double v : est) mx = std::max(mx, v);
    return mx;
}

double fbp_epsilon(const LinearKernel& kernel, const FbpConfig& cfg) {
    if (cfg.epsilon < 0) throw std::invalid_argument("fbp_invert: regularization must be positive");
    const double eps = cfg.epsilon > 0 ? cfg.epsilon : cfg.epsilon_rel * normal_diag_estimate(kernel, cfg.n_threads);
    if (!(eps > 0)) throw std::invalid_argument("fbp_invert: regularization must be positive");
    return eps;
}

PolarField fbp_invert(const LinearKernel& kernel, const Mat& d, const FbpConfig& cfg) {
    if (!(cfg.cg_tol > 0 && cfg.cg_tol < 1))
        throw std::invalid_argument("fbp_invert: cg_tol must lie in (0,1)");
    const double eps = fbp_epsilon(kernel, cfg);

    const auto apply_normal = [&](const PolarField& x) {
        PolarField ax = apply_K_adjoint(kernel, apply_K(kernel, x, cfg.n_threads), cfg.n_threads);
        for (std::size_t i = 0; i < ax.values.size(); ++i) ax.values[i] += eps * x.values[i];
        return ax;
    };

    const PolarField b = apply_K_adjoint(kernel, d, cfg.n_threads);
    const double bnorm = std::sqrt(dot(b.values, b.values));
    PolarField x(kernel.pg, 0.0);
    if (bnorm == 0.0) return x;

    PolarField r = b;
    PolarField p = r;
    double rr = dot(r.values, r.values);
    for (std::size_t it = 0; it < cfg.cg_max_iter; ++it) {
        if (std::sqrt(rr) <= cfg.cg_tol * bnorm) return x;
        const PolarField ap = apply_normal(p);
        const double alpha = rr / dot(p.values, ap.values);
        for (std::size_t i = 0; i < x.values.size(); ++i) {
            x.values[i] += alpha * p.values[i];
            r.values[i] -= alpha * ap.values[i];
        }
        const double rr_new = dot(r.values, r.values);
        const double beta = rr_new / rr;
        rr = rr_new;
        for (std::size_t i = 0; i < p.values.size(); ++i) p.values[i] = r.values[i] + beta * p.values[i];
    }
    if (std::sqrt(rr) <= cfg.cg_tol * bnorm) return x;
    throw ConvergenceError("fbp_invert: CG hit max_iter with relative residual " +
                               std::to_string(std::sqrt(rr) / bnorm),
                           std::sqrt(rr) / bnorm);
}

}  // namespace tttk
