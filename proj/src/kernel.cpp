#include "tttk/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tttk/parallel.hpp"

namespace tttk {

Chord::Chord(double s, double h)
    : xs_x(std::cos(s)), xs_y(std::sin(s)), xr_x(std::cos(s + h)), xr_y(std::sin(s + h)) {}

double Chord::length() const { return std::hypot(xr_x - xs_x, xr_y - xs_y); }

void Chord::point(double tau, double& x, double& y) const {
    x = xs_x + tau * (xr_x - xs_x);
    y = xs_y + tau * (xr_y - xs_y);
}

double chord_integral(const std::function<double(double, double)>& mtilde, double s, double h,
                      std::size_t n_quad) {
    if (n_quad < 2) throw std::invalid_argument("chord_integral: n_quad must be >= 2");
    if (h == 0.0) return 0.0;
    const Chord chord(s, h);
    const double len = chord.length();
    double acc = 0.0;
    for (std::size_t q = 0; q < n_quad; ++q) {
        double x, y;
        chord.point((static_cast<double>(q) + 0.5) / static_cast<double>(n_quad), x, y);
        acc += mtilde(x, y);
    }
    return acc * len / static_cast<double>(n_quad);
}

namespace {

// Scatters one chord into kappa(h_idx, ., .) with bilinear weights in
// (dtheta, rho).  Samples below the innermost ring deposit there entirely;
// total deposited weight equals the chord length exactly.
void scatter_chord(const PolarGrid& pg, std::size_t h_idx, std::size_t n_quad, bool detect_skips,
                   double* slab) {
    const std::size_t nt = pg.n_theta, nr = pg.n_rho;
    const double dth = pg.dtheta(), drh = pg.drho();
    const double h = kTwoPi * static_cast<double>(h_idx) / static_cast<double>(nt);
    const Chord chord(0.0, h);
    const double len = chord.length();
    const double w = len / static_cast<double>(n_quad);

    double prev_fr = -1.0, prev_ft = -1.0;
    for (std::size_t q = 0; q < n_quad; ++q) {
        double x, y;
        chord.point((static_cast<double>(q) + 0.5) / static_cast<double>(n_quad), x, y);
        const double rho = std::hypot(x, y);
        const double theta = wrap_angle(std::atan2(y, x));

        // dtheta axis realizes s - theta; the reference source sits at s=0.
        const double ft = wrap_angle(-theta) / dth;
        const double fr = std::clamp(rho / drh - 1.0, 0.0, static_cast<double>(nr - 1));

        if (detect_skips && q > 0) {
            if (std::abs(fr - prev_fr) > 1.0)
                throw std::invalid_argument(
                    "assemble_kernel: radial cell skipped at h index " + std::to_string(h_idx) +
                    "; increase n_quad");
            const double dft = std::abs(ft - prev_ft);
            if (std::min(dft, static_cast<double>(nt) - dft) > 1.0 && fr >= 1.0 && prev_fr >= 1.0)
                throw std::invalid_argument(
                    "assemble_kernel: angular cell skipped at h index " + std::to_string(h_idx) +
                    "; increase n_quad");
        }
        prev_fr = fr;
        prev_ft = ft;

        const std::size_t j0 = static_cast<std::size_t>(ft) % nt;
        const std::size_t j1 = (j0 + 1) % nt;
        const double tt = ft - std::floor(ft);
        const std::size_t k0 = std::min(static_cast<std::size_t>(fr), nr - 2);
        const double tr = fr - static_cast<double>(k0);

        slab[k0 * nt + j0] += w * (1 - tt) * (1 - tr);
        slab[k0 * nt + j1] += w * tt * (1 - tr);
        slab[(k0 + 1) * nt + j0] += w * (1 - tt) * tr;
        slab[(k0 + 1) * nt + j1] += w * tt * tr;
    }
}

std::size_t default_quad_points(const PolarGrid& pg, std::size_t h_idx) {
    const double h = kTwoPi * static_cast<double>(h_idx) / static_cast<double>(pg.n_theta);
    const double len = 2.0 * std::abs(std::sin(0.5 * h));
    const double rho_min = std::max(std::abs(std::cos(0.5 * h)), 0.5 * pg.drho());
    // resolve radial cells everywhere and angular cells near closest approach
    const double radial = 8.0 * len / pg.drho();
    const double angular = 4.0 * len / (rho_min * pg.dtheta());
    return static_cast<std::size_t>(std::max({radial, angular, 64.0})) + 1;
}

}  // namespace

LinearKernel assemble_kernel(const PolarGrid& pg, const BoundaryRing& ring, std::size_t n_quad,
                             std::size_t n_threads) {
    if (ring.n_s != ring.n_r) throw std::invalid_argument("assemble_kernel: need n_s == n_r");
    if (ring.n_s != pg.n_theta)
        throw std::invalid_argument("assemble_kernel: ring size must match the angular grid");

    LinearKernel kernel;
    kernel.pg = pg;
    kernel.n_h = ring.n_r;
    kernel.k.assign(static_cast<std::size_t>(kernel.n_h) * pg.n_rho * pg.n_theta, 0.0);

    // h index 0 stays identically zero: source equals receiver.
    parallel_for(
        kernel.n_h - 1,
        [&](std::size_t t) {
            const std::size_t h_idx = t + 1;
            const std::size_t nq = n_quad > 0 ? n_quad : default_quad_points(pg, h_idx);
            scatter_chord(pg, h_idx, nq, /*detect_skips=*/n_quad > 0,
                          kernel.k.data() + h_idx * pg.n_rho * pg.n_theta);
        },
        n_threads);
    return kernel;
}

Mat apply_K(const LinearKernel& kernel, const PolarField& mt, std::size_t n_threads) {
    const std::size_t nt = kernel.pg.n_theta, nr = kernel.pg.n_rho, nh = kernel.n_h;
    if (mt.grid.n_theta != nt || mt.grid.n_rho != nr)
        throw std::invalid_argument("apply_K: field shape mismatch");

    Mat out(nt, nh);
    parallel_for(
        nh,
        [&](std::size_t h) {
            std::vector<double> rk(nt), row(nt, 0.0);
            for (std::size_t r = 0; r < nr; ++r) {
                const double* krow = kernel.k.data() + (h * nr + r) * nt;
                // reversed kernel row turns the convolution into two
                // contiguous dot products per output angle
                rk[0] = krow[0];
                for (std::size_t t = 1; t < nt; ++t) rk[t] = krow[nt - t];
                const double* f = mt.values.data() + r * nt;
                for (std::size_t s = 0; s < nt; ++s) {
                    double acc = 0.0;
                    const std::size_t head = nt - s;
                    for (std::size_t t = 0; t < head; ++t) acc += rk[t] * f[s + t];
                    for (std::size_t t = head; t < nt; ++t) acc += rk[t] * f[s + t - nt];
                    row[s] += acc;
                }
            }
            for (std::size_t s = 0; s < nt; ++s) out(s, h) = row[s];
        },
        n_threads);
    return out;
}

PolarField apply_K_adjoint(const LinearKernel& kernel, const Mat& d, std::size_t n_threads) {
    const std::size_t nt = kernel.pg.n_theta, nr = kernel.pg.n_rho, nh = kernel.n_h;
    if (d.rows != nt || d.cols != nh)
        throw std::invalid_argument("apply_K_adjoint: data shape mismatch");

    // contiguous copy of each data column
    std::vector<double> cols(static_cast<std::size_t>(nh) * nt);
    for (std::size_t h = 0; h < nh; ++h)
        for (std::size_t s = 0; s < nt; ++s) cols[h * nt + s] = d(s, h);

    PolarField out(kernel.pg);
    parallel_for(
        nr,
        [&](std::size_t r) {
            double* orow = out.values.data() + r * nt;
            for (std::size_t h = 0; h < nh; ++h) {
                const double* krow = kernel.k.data() + (h * nr + r) * nt;
                const double* dcol = cols.data() + h * nt;
                for (std::size_t th = 0; th < nt; ++th) {
                    double acc = 0.0;
                    const std::size_t head = nt - th;
                    for (std::size_t t = 0; t < head; ++t) acc += krow[t] * dcol[th + t];
                    for (std::size_t t = head; t < nt; ++t) acc += krow[t] * dcol[th + t - nt];
                    orow[th] += acc;
                }
            }
        },
        n_threads);
    return out;
}

}  // namespace tttk
