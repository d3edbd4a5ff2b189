#ifndef TTTK_KERNEL_HPP
#define TTTK_KERNEL_HPP

#include <functional>

#include "tttk/grids.hpp"

namespace tttk {

/// Straight characteristic between two boundary angles (constant background).
struct Chord {
    double xs_x, xs_y;  // source endpoint
    double xr_x, xr_y;  // receiver endpoint

    Chord(double s, double h);
    double length() const;
    void point(double tau, double& x, double& y) const;
};

/// Discretized kernel kappa(h, rho, dtheta) realizing the linearized forward
/// map and its adjoint as families of circular convolutions along theta.
/// Entries are nonnegative arclength weights; summing kappa(h,.,.) recovers
/// the chord length 2|sin(h/2)|.
struct LinearKernel {
    PolarGrid pg;
    std::size_t n_h = 0;  // = ring size N_s = N_r; must equal pg.n_theta
    std::vector<double> k;  // [(h * n_rho + rho) * n_theta + dtheta]

    double at(std::size_t h, std::size_t rho, std::size_t dtheta) const {
        return k[(h * pg.n_rho + rho) * pg.n_theta + dtheta];
    }
};

/// Line integral of mtilde along the chord (s, s+h), times chord length:
/// composite midpoint rule with n_quad points.  h = 0 yields 0.
double chord_integral(const std::function<double(double, double)>& mtilde, double s, double h,
                      std::size_t n_quad);

/// Builds the kernel for the source at s = 0 by walking each chord with
/// arclength quadrature and bilinear-scattering the weights into polar
/// cells; rotation covers every other source.  n_quad = 0 picks the default
/// (4x the polar cell count a diameter crosses).  Throws when the quadrature
/// step is coarse enough to skip radial cells.
LinearKernel assemble_kernel(const PolarGrid& pg, const BoundaryRing& ring,
                             std::size_t n_quad = 0, std::size_t n_threads = 0);

/// d1(s,h) = sum_rho (kappa(h,rho,.) * mt(.,rho))(s)  (circular convolution).
Mat apply_K(const LinearKernel& k, const PolarField& mt, std::size_t n_threads = 0);

/// (K^T d)(theta,rho) = sum_h (kappa(h,rho,.) correlated with d(.,h))(theta);
/// exact adjoint of apply_K under the unweighted Euclidean inner products.
PolarField apply_K_adjoint(const LinearKernel& k, const Mat& d, std::size_t n_threads = 0);

}  // namespace tttk

#endif
