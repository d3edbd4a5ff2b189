#include "tttk/ellipse.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "tttk/rng.hpp"

namespace tttk {

bool Ellipse::contains(double x, double y) const {
    const double dx = x - cx, dy = y - cy;
    const double c = std::cos(angle), s = std::sin(angle);
    const double u = (c * dx + s * dy) / a;
    const double v = (-s * dx + c * dy) / b;
    return u * u + v * v <= 1.0;
}

InclusionKind inclusion_kind_from_string(const std::string& s) {
    if (s == "negative") return InclusionKind::negative;
    if (s == "positive") return InclusionKind::positive;
    if (s == "mixture") return InclusionKind::mixture;
    throw std::invalid_argument("unknown inclusion kind: " + s);
}

std::string to_string(InclusionKind k) {
    switch (k) {
        case InclusionKind::negative: return "negative";
        case InclusionKind::positive: return "positive";
        default: return "mixture";
    }
}

namespace {

constexpr int kBoundarySamples = 256;

void boundary_point(const Ellipse& e, int i, double& x, double& y) {
    const double psi = kTwoPi * static_cast<double>(i) / kBoundarySamples;
    const double px = e.a * std::cos(psi), py = e.b * std::sin(psi);
    const double c = std::cos(e.angle), s = std::sin(e.angle);
    x = e.cx + c * px - s * py;
    y = e.cy + s * px + c * py;
}

bool inside_disk(const Ellipse& e) {
    for (int i = 0; i < kBoundarySamples; ++i) {
        double x, y;
        boundary_point(e, i, x, y);
        if (x * x + y * y > 1.0) return false;
    }
    return true;
}

// Dense boundary sampling plus mutual center checks; the ellipses this
// generator draws are far larger than the sampling gap.
bool disjoint(const Ellipse& p, const Ellipse& q) {
    if (p.contains(q.cx, q.cy) || q.contains(p.cx, p.cy)) return false;
    for (int i = 0; i < kBoundarySamples; ++i) {
        double x, y;
        boundary_point(p, i, x, y);
        if (q.contains(x, y)) return false;
        boundary_point(q, i, x, y);
        if (p.contains(x, y)) return false;
    }
    return true;
}

}  // namespace

std::vector<Ellipse> sample_ellipses(const DatasetSpec& spec, std::uint64_t sample_index,
                                     std::size_t max_attempts) {
    if (spec.n_e < 1) throw std::invalid_argument("sample_ellipses: n_e must be >= 1");
    auto rng = make_rng(spec.seed, sample_index);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<Ellipse> out;
    out.reserve(spec.n_e);
    for (std::size_t k = 0; k < spec.n_e; ++k) {
        bool placed = false;
        for (std::size_t attempt = 0; attempt < max_attempts && !placed; ++attempt) {
            bool neg = spec.kind == InclusionKind::negative;
            if (spec.kind == InclusionKind::mixture) neg = unit(rng) < 0.5;

            Ellipse e;
            if (neg) {
                e.a = 0.5 * (0.1 + 0.1 * unit(rng));   // width U(0.1, 0.2)
                e.b = 0.5 * (0.05 + 0.05 * unit(rng)); // height U(0.05, 0.1)
                e.amplitude = -0.5;
            } else {
                e.a = 0.5 * (0.2 + 0.2 * unit(rng));   // width U(0.2, 0.4)
                e.b = 0.5 * (0.1 + 0.1 * unit(rng));   // height U(0.1, 0.2)
                e.amplitude = 2.0;
            }
            e.angle = kTwoPi * unit(rng);
            const double r = std::sqrt(unit(rng));
            const double phi = kTwoPi * unit(rng);
            e.cx = r * std::cos(phi);
            e.cy = r * std::sin(phi);

            if (!inside_disk(e)) continue;
            bool ok = true;
            for (const auto& other : out)
                if (!disjoint(e, other)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            out.push_back(e);
            placed = true;
        }
        if (!placed)
            throw std::runtime_error(
                "sample_ellipses: rejection sampling exhausted; use fewer or smaller ellipses");
    }
    return out;
}

double mtilde_at(const std::vector<Ellipse>& ellipses, double x, double y) {
    double v = 0.0;
    for (const auto& e : ellipses)
        if (e.contains(x, y)) v += e.amplitude;
    return v;
}

PolarField rasterize(const std::vector<Ellipse>& ellipses, const PolarGrid& pg) {
    PolarField out(pg);
    for (std::size_t k = 0; k < pg.n_rho; ++k) {
        const double rho = pg.rho(k);
        for (std::size_t j = 0; j < pg.n_theta; ++j) {
            const double th = pg.theta(j);
            out.at(j, k) = mtilde_at(ellipses, rho * std::cos(th), rho * std::sin(th));
        }
    }
    return out;
}

CartesianField rasterize_cartesian(const std::vector<Ellipse>& ellipses, const CartesianGrid& cg) {
    CartesianField out(cg);
    for (std::size_t j = 0; j < cg.n; ++j)
        for (std::size_t i = 0; i < cg.n; ++i) out.at(i, j) = mtilde_at(ellipses, cg.x(i), cg.y(j));
    return out;
}

}  // namespace tttk
