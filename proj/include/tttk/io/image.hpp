#ifndef TTTK_IO_IMAGE_HPP
#define TTTK_IO_IMAGE_HPP

#include <string>
#include <vector>

#include "tttk/grids.hpp"

namespace tttk::io {

/// Grayscale PGM (P5) of a scalar raster, min..max mapped to 0..255.
/// A JSON sidecar (path + ".json") records the value range.
void write_pgm(const std::string& path, std::size_t width, std::size_t height,
               const std::vector<double>& row_major_values);

/// Color PPM (P6) with a symmetric blue-white-red map centered at zero so
/// signed perturbations read at a glance.  The scale is +-vmax; vmax <= 0
/// picks max|value| (all-gray for an identically zero field).  The sidecar
/// records the scale actually used.
void write_ppm_diverging(const std::string& path, std::size_t width, std::size_t height,
                         const std::vector<double>& row_major_values, double vmax = 0.0);

/// Rasters a polar field to a Cartesian image (n x n, zero outside the
/// disk), suitable for the writers above.  Row 0 is y = +1 (image top).
std::vector<double> raster_polar(const PolarField& f, std::size_t n);

/// Rasters a Cartesian field into image row order.
std::vector<double> raster_cartesian(const CartesianField& f);

/// Two rasters with a thin separator, reference left and prediction right.
std::vector<double> side_by_side(const std::vector<double>& left, const std::vector<double>& right,
                                 std::size_t n, std::size_t& out_width);

}  // namespace tttk::io

#endif
