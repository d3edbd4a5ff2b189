#ifndef TTTK_GRIDS_HPP
#define TTTK_GRIDS_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace tttk {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Uniform n x n mesh on the square [-1,1]^2 that embeds the unit disk.
/// Node (i,j) sits at (x_i, y_j) = (-1 + i*spacing, -1 + j*spacing).
struct CartesianGrid {
    std::size_t n = 0;

    CartesianGrid() = default;
    explicit CartesianGrid(std::size_t n_) : n(n_) {
        if (n < 8) throw std::invalid_argument("CartesianGrid: n must be >= 8");
    }

    double spacing() const { return 2.0 / static_cast<double>(n - 1); }
    double x(std::size_t i) const { return -1.0 + static_cast<double>(i) * spacing(); }
    double y(std::size_t j) const { return -1.0 + static_cast<double>(j) * spacing(); }
    std::size_t size() const { return n * n; }
    // x fastest: linear index = j*n + i
    std::size_t idx(std::size_t i, std::size_t j) const { return j * n + i; }
};

/// Uniform polar mesh on (0,1] x [0,2pi).  theta_j = 2*pi*j/n_theta;
/// rho_k = (k+1)/n_rho, so rho=0 (where theta degenerates) carries no node
/// and rho=1 does.  Fields are stored rho-row-major with the angular index
/// fastest, since convolutions act along theta.
struct PolarGrid {
    std::size_t n_theta = 0;
    std::size_t n_rho = 0;

    PolarGrid() = default;
    PolarGrid(std::size_t n_theta_, std::size_t n_rho_) : n_theta(n_theta_), n_rho(n_rho_) {
        if (n_theta < 4 || n_theta % 2 != 0)
            throw std::invalid_argument("PolarGrid: n_theta must be even and >= 4");
        if (n_rho < 2) throw std::invalid_argument("PolarGrid: n_rho must be >= 2");
    }

    double theta(std::size_t j) const { return kTwoPi * static_cast<double>(j) / static_cast<double>(n_theta); }
    double rho(std::size_t k) const { return static_cast<double>(k + 1) / static_cast<double>(n_rho); }
    double dtheta() const { return kTwoPi / static_cast<double>(n_theta); }
    double drho() const { return 1.0 / static_cast<double>(n_rho); }
    std::size_t size() const { return n_theta * n_rho; }
    std::size_t idx(std::size_t j_theta, std::size_t k_rho) const { return k_rho * n_theta + j_theta; }
};

/// Equidistant sources and receivers on the unit circle, s_k = 2*pi*k/n_s.
struct BoundaryRing {
    std::size_t n_s = 0;
    std::size_t n_r = 0;

    BoundaryRing() = default;
    explicit BoundaryRing(std::size_t n) : n_s(n), n_r(n) {
        if (n < 4) throw std::invalid_argument("BoundaryRing: need at least 4 sources");
    }

    double source_angle(std::size_t k) const { return kTwoPi * static_cast<double>(k) / static_cast<double>(n_s); }
    double receiver_angle(std::size_t k) const { return kTwoPi * static_cast<double>(k) / static_cast<double>(n_r); }
};

struct CartesianField {
    CartesianGrid grid;
    std::vector<double> values;

    CartesianField() = default;
    explicit CartesianField(const CartesianGrid& g, double fill = 0.0)
        : grid(g), values(g.size(), fill) {}

    double& at(std::size_t i, std::size_t j) { return values[grid.idx(i, j)]; }
    double at(std::size_t i, std::size_t j) const { return values[grid.idx(i, j)]; }
};

struct PolarField {
    PolarGrid grid;
    std::vector<double> values;

    PolarField() = default;
    explicit PolarField(const PolarGrid& g, double fill = 0.0)
        : grid(g), values(g.size(), fill) {}

    double& at(std::size_t j_theta, std::size_t k_rho) { return values[grid.idx(j_theta, k_rho)]; }
    double at(std::size_t j_theta, std::size_t k_rho) const { return values[grid.idx(j_theta, k_rho)]; }
};

/// Dense row-major matrix of doubles; rows index sources, columns receivers
/// or offsets depending on context.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> v;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), v(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return v[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return v[i * cols + j]; }
};

inline double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    return a;
}

}  // namespace tttk

#endif
