#ifndef TTTK_INTERPOLATE_HPP
#define TTTK_INTERPOLATE_HPP

#include "tttk/grids.hpp"

namespace tttk {

/// Bilinear interpolation of a Cartesian field at (x,y).  Throws if the
/// point lies outside the grid extent.
double bilinear_cart(const CartesianField& f, double x, double y);

/// Bilinear interpolation of a polar field at (theta, rho) with periodic
/// wrap in theta.  rho below the innermost ring clamps to that ring; rho
/// above 1 clamps to the outermost ring.
double bilinear_polar(const PolarField& f, double theta, double rho);

/// Samples a Cartesian field onto a polar grid (all polar nodes lie in the
/// closed unit disk, hence inside the grid extent).
PolarField sample_cart_to_polar(const CartesianField& field, const PolarGrid& pg);

/// Samples a polar field onto a Cartesian grid; nodes with |x| > 1 receive
/// outside_value.
CartesianField sample_polar_to_cart(const PolarField& field, const CartesianGrid& cg,
                                    double outside_value);

}  // namespace tttk

#endif
