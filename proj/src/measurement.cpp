#include "tttk/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "tttk/parallel.hpp"
#include "tttk/rng.hpp"

namespace tttk {

double receiver_value(const TraveltimeField& u, double x, double y) {
    const auto& g = u.grid;
    const double h = g.spacing();
    // Boundary receivers are pulled a quarter cell inward; the containing
    // cell then always owns at least one interior corner, so the stencil
    // never degenerates at the cardinal points.
    const double r = std::hypot(x, y);
    if (r > 1.0 - 0.25 * h) {
        const double scale = (1.0 - 0.25 * h) / r;
        x *= scale;
        y *= scale;
    }
    const auto cell_of = [&](double t) {
        auto c = static_cast<long>(std::floor((t + 1.0) / h));
        return static_cast<std::size_t>(std::clamp<long>(c, 0, static_cast<long>(g.n) - 2));
    };
    const std::size_t i0 = cell_of(x), j0 = cell_of(y);
    const double tx = (x + 1.0) / h - static_cast<double>(i0);
    const double ty = (y + 1.0) / h - static_cast<double>(j0);

    double wsum = 0.0, vsum = 0.0;
    for (std::size_t dj = 0; dj <= 1; ++dj)
        for (std::size_t di = 0; di <= 1; ++di) {
            const std::size_t i = i0 + di, j = j0 + dj;
            if (std::hypot(g.x(i), g.y(j)) > 1.0) continue;
            const double w = (di ? tx : 1.0 - tx) * (dj ? ty : 1.0 - ty);
            wsum += w;
            vsum += w * u.at(i, j);
        }
    if (wsum > 1e-12) return vsum / wsum;

    // Whole cell exterior: nearest interior node in an expanding window.
    double best = std::numeric_limits<double>::infinity();
    double best_d = best;
    for (long radius = 1; radius <= 3; ++radius) {
        for (long dj = -radius; dj <= radius + 1; ++dj)
            for (long di = -radius; di <= radius + 1; ++di) {
                const long i = static_cast<long>(i0) + di, j = static_cast<long>(j0) + dj;
                if (i < 0 || j < 0 || i >= static_cast<long>(g.n) || j >= static_cast<long>(g.n)) continue;
                const auto iu = static_cast<std::size_t>(i), ju = static_cast<std::size_t>(j);
                if (std::hypot(g.x(iu), g.y(ju)) > 1.0) continue;
                const double d = std::hypot(g.x(iu) - x, g.y(ju) - y);
                if (d < best_d) {
                    best_d = d;
                    best = u.at(iu, ju);
                }
            }
        if (best_d < std::numeric_limits<double>::infinity()) return best;
    }
    throw std::runtime_error("receiver_value: no interior node near receiver");
}

Mat forward_measurement(const SlownessField& m, const BoundaryRing& ring,
                        const SweepParams& params, std::size_t n_threads) {
    Mat out(ring.n_s, ring.n_r);
    parallel_for(
        ring.n_s,
        [&](std::size_t s) {
            TraveltimeField u;
            try {
                u = sweep_solve(m, ring.source_angle(s), params);
            } catch (const ConvergenceError& e) {
                throw ConvergenceError("source " + std::to_string(s) + ": " + e.what(), e.residual);
            }
            for (std::size_t r = 0; r < ring.n_r; ++r) {
                const double a = ring.receiver_angle(r);
                out(s, r) = receiver_value(u, std::cos(a), std::sin(a));
            }
        },
        n_threads);
    return out;
}

Mat differential(const Mat& u, const Mat& u0) {
    if (u.rows != u0.rows || u.cols != u0.cols)
        throw std::invalid_argument("differential: shape mismatch");
    Mat out(u.rows, u.cols);
    for (std::size_t i = 0; i < u.v.size(); ++i) out.v[i] = u.v[i] - u0.v[i];
    return out;
}

Mat shear(const Mat& D) {
    if (D.rows != D.cols) throw std::invalid_argument("shear: matrix must be square");
    const std::size_t n = D.rows;
    Mat out(n, n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t h = 0; h < n; ++h) out(s, h) = D(s, (s + h) % n);
    return out;
}

Mat unshear(const Mat& D) {
    if (D.rows != D.cols) throw std::invalid_argument("unshear: matrix must be square");
    const std::size_t n = D.rows;
    Mat out(n, n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t h = 0; h < n; ++h) out(s, (s + h) % n) = D(s, h);
    return out;
}

Measurement add_noise(const Measurement& meas, double delta, const Mat& u0,
                      std::uint64_t seed) {
    if (delta < 0) throw std::invalid_argument("add_noise: delta must be nonnegative");
    if (u0.rows != meas.d.rows || u0.cols != meas.d.cols)
        throw std::invalid_argument("add_noise: u0 shape mismatch");
    Measurement out = meas;
    if (delta == 0.0) return out;
    auto rng = make_rng(seed, 0xadd0a15eULL);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t i = 0; i < out.d.v.size(); ++i) {
        const double z = normal(rng);
        out.d.v[i] = (1.0 + z * delta) * meas.d.v[i] + z * delta * u0.v[i];
    }
    out.delta = delta;
    return out;
}

}  // namespace tttk
