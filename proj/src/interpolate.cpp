#include "tttk/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tttk {

double bilinear_cart(const CartesianField& f, double x, double y) {
    const auto& g = f.grid;
    const double h = g.spacing();
    const double eps = 4.0 * h * 1e-12;
    if (x < -1.0 - eps || x > 1.0 + eps || y < -1.0 - eps || y > 1.0 + eps)
        throw std::invalid_argument("bilinear_cart: query point outside grid extent");

    double fx = (x + 1.0) / h;
    double fy = (y + 1.0) / h;
    auto cell = [&](double t) {
        auto c = static_cast<long>(std::floor(t));
        return static_cast<std::size_t>(std::clamp<long>(c, 0, static_cast<long>(f.grid.n) - 2));
    };
    const std::size_t i0 = cell(fx);
    const std::size_t j0 = cell(fy);
    const double tx = fx - static_cast<double>(i0);
    const double ty = fy - static_cast<double>(j0);

    const double v00 = f.at(i0, j0);
    const double v10 = f.at(i0 + 1, j0);
    const double v01 = f.at(i0, j0 + 1);
    const double v11 = f.at(i0 + 1, j0 + 1);
    return (1 - tx) * (1 - ty) * v00 + tx * (1 - ty) * v10 + (1 - tx) * ty * v01 + tx * ty * v11;
}

double bilinear_polar(const PolarField& f, double theta, double rho) {
    const auto& g = f.grid;
    theta = wrap_angle(theta);

    const double ft = theta / g.dtheta();
    const std::size_t j0 = static_cast<std::size_t>(ft) % g.n_theta;
    const std::size_t j1 = (j0 + 1) % g.n_theta;
    const double tt = ft - std::floor(ft);

    // node k sits at rho=(k+1)*drho; fractional ring coordinate:
    double fr = rho / g.drho() - 1.0;
    fr = std::clamp(fr, 0.0, static_cast<double>(g.n_rho - 1));
    const std::size_t k0 = std::min(static_cast<std::size_t>(fr), g.n_rho - 2);
    const double tr = fr - static_cast<double>(k0);

    const double v00 = f.at(j0, k0);
    const double v10 = f.at(j1, k0);
    const double v01 = f.at(j0, k0 + 1);
    const double v11 = f.at(j1, k0 + 1);
    return (1 - tt) * (1 - tr) * v00 + tt * (1 - tr) * v10 + (1 - tt) * tr * v01 + tt * tr * v11;
}

PolarField sample_cart_to_polar(const CartesianField& field, const PolarGrid& pg) {
    PolarField out(pg);
    for (std::size_t k = 0; k < pg.n_rho; ++k) {
        const double rho = pg.rho(k);
        for (std::size_t j = 0; j < pg.n_theta; ++j) {
            const double th = pg.theta(j);
            out.at(j, k) = bilinear_cart(field, rho * std::cos(th), rho * std::sin(th));
        }
    }
    return out;
}

CartesianField sample_polar_to_cart(const PolarField& field, const CartesianGrid& cg,
                                    double outside_value) {
    CartesianField out(cg);
    for (std::size_t j = 0; j < cg.n; ++j) {
        const double y = cg.y(j);
        for (std::size_t i = 0; i < cg.n; ++i) {
            const double x = cg.x(i);
            const double r = std::hypot(x, y);
            out.at(i, j) = (r > 1.0) ? outside_value : bilinear_polar(field, std::atan2(y, x), r);
        }
    }
    return out;
}

}  // namespace tttk
