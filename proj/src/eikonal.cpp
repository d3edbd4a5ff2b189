#include "tttk/eikonal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace tttk {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

inline double godunov_update(double a, double b, double mh) {
    // a, b: smaller of the two one-sided neighbor values per axis (inf when
    // no neighbor carries information yet).
    if (a > b) std::swap(a, b);
    if (a == kInf) return kInf;
    if (b - a >= mh) return a + mh;
    const double s = 2.0 * mh * mh - (a - b) * (a - b);
    return 0.5 * (a + b + std::sqrt(s));
}
}  // namespace

SlownessField outside_mask_apply(const SlownessField& m, double outside_slowness) {
    double max_inside = 0.0;
    const std::size_t n = m.grid.n;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (std::hypot(m.grid.x(i), m.grid.y(j)) <= 1.0)
                max_inside = std::max(max_inside, m.at(i, j));
    if (outside_slowness < 10.0 * max_inside)
        throw std::invalid_argument("outside_mask_apply: outside_slowness must be >= 10x max interior slowness");

    SlownessField out = m;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (std::hypot(m.grid.x(i), m.grid.y(j)) > 1.0) out.at(i, j) = outside_slowness;
    return out;
}

TraveltimeField sweep_solve(const SlownessField& m, double source_angle,
                            const SweepParams& params) {
    const std::size_t n = m.grid.n;
    const double h = m.grid.spacing();
    if (params.tol <= 0) throw std::invalid_argument("sweep_solve: tol must be positive");
    for (double v : m.values)
        if (!(v > 0)) throw std::invalid_argument("sweep_solve: slowness must be positive everywhere");

    TraveltimeField tt;
    tt.grid = m.grid;
    tt.source_angle = source_angle;
    tt.values.assign(n * n, kInf);

    const double xs = std::cos(source_angle);
    const double ys = std::sin(source_angle);

    // Pin exact values on the cell containing the source.  Each pinned node
    // uses its own slowness unless it lies outside the disk only because of
    // the mask; then the nearest interior node's slowness applies.  For an
    // exactly-on-node source this reduces to the Soner condition u = 0.
    std::vector<char> frozen(n * n, 0);
    const auto cell_of = [&](double t) {
        auto c = static_cast<long>(std::floor((t + 1.0) / h));
        return static_cast<std::size_t>(std::clamp<long>(c, 0, static_cast<long>(n) - 2));
    };
    const std::size_t i0 = cell_of(xs), j0 = cell_of(ys);

    double m_src = kInf;  // smallest slowness among the cell's interior nodes
    for (std::size_t dj = 0; dj <= 1; ++dj)
        for (std::size_t di = 0; di <= 1; ++di) {
            const std::size_t i = i0 + di, j = j0 + dj;
            if (std::hypot(m.grid.x(i), m.grid.y(j)) <= 1.0) m_src = std::min(m_src, m.at(i, j));
        }
    for (std::size_t dj = 0; dj <= 1; ++dj)
        for (std::size_t di = 0; di <= 1; ++di) {
            const std::size_t i = i0 + di, j = j0 + dj;
            const double dist = std::hypot(m.grid.x(i) - xs, m.grid.y(j) - ys);
            const bool inside = std::hypot(m.grid.x(i), m.grid.y(j)) <= 1.0;
            const double ms = (inside || m_src == kInf) ? m.at(i, j) : std::min(m.at(i, j), m_src);
            tt.values[m.grid.idx(i, j)] = ms * dist;
            frozen[m.grid.idx(i, j)] = 1;
        }

    double* u = tt.values.data();
    const double* mv = m.values.data();
    const long ln = static_cast<long>(n);

    const auto sweep = [&](int di, int dj) {
        double max_change = 0.0;
        const long ibeg = di > 0 ? 0 : ln - 1, iend = di > 0 ? ln : -1;
        const long jbeg = dj > 0 ? 0 : ln - 1, jend = dj > 0 ? ln : -1;
        for (long j = jbeg; j != jend; j += dj) {
            for (long i = ibeg; i != iend; i += di) {
                const std::size_t id = static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i);
                if (frozen[id]) continue;
                const double uw = i > 0 ? u[id - 1] : kInf;
                const double ue = i < ln - 1 ? u[id + 1] : kInf;
                const double us = j > 0 ? u[id - n] : kInf;
                const double un = j < ln - 1 ? u[id + n] : kInf;
                const double cand = godunov_update(std::min(uw, ue), std::min(us, un), mv[id] * h);
                if (cand < u[id]) {
                    max_change = std::max(max_change, u[id] == kInf ? kInf : u[id] - cand);
                    u[id] = cand;
                }
            }
        }
        return max_change;
    };

    static constexpr std::array<std::array<int, 2>, 4> kOrderings = {{{+1, +1}, {-1, +1}, {+1, -1}, {-1, -1}}};
    std::array<std::size_t, 4> order = {0, 1, 2, 3};
    for (unsigned p = 0; p < params.ordering_permutation % 24; ++p)
        std::next_permutation(order.begin(), order.end());

    double residual = kInf;
    for (std::size_t cycle = 1; cycle <= params.max_sweeps; ++cycle) {
        residual = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            const auto& d = kOrderings[order[k]];
            residual = std::max(residual, sweep(d[0], d[1]));
        }
        tt.residual_history.push_back(residual);
        if (residual < params.tol) {
            tt.sweep_cycles = cycle;
            tt.last_residual = residual;
            return tt;
        }
    }
    throw ConvergenceError("sweep_solve: no convergence after " + std::to_string(params.max_sweeps) +
                               " sweep cycles (residual " + std::to_string(residual) + ")",
                           residual);
}

}  // namespace tttk
