#ifndef TTTK_ELLIPSE_HPP
#define TTTK_ELLIPSE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tttk/grids.hpp"

namespace tttk {

/// Piecewise-constant elliptic inclusion, entirely inside the unit disk.
struct Ellipse {
    double cx = 0, cy = 0;   // center
    double a = 0, b = 0;     // semi-axes, a >= b > 0
    double angle = 0;        // orientation of the a-axis, radians
    double amplitude = 0;    // mtilde value inside

    bool contains(double x, double y) const;
};

enum class InclusionKind { negative, positive, mixture };

InclusionKind inclusion_kind_from_string(const std::string& s);
std::string to_string(InclusionKind k);

struct DatasetSpec {
    InclusionKind kind = InclusionKind::negative;
    std::size_t n_e = 2;
    std::size_t n_samples = 0;
    double delta = 0.0;
    std::uint64_t seed = 0;
    bool debug_zero_mtilde = false;  // keep geometry, zero the perturbation
};

/// Draws n_e pairwise-disjoint ellipses inside the unit disk.  Orientation
/// is uniform, the center is uniform over the disk by area, and full
/// width/height are uniform per kind (negative: U(0.1,0.2) x U(0.05,0.1),
/// amplitude -0.5; positive: U(0.2,0.4) x U(0.1,0.2), amplitude 2; mixture
/// flips a fair coin per ellipse).  Containment and disjointness are
/// enforced by rejection; exceeding max_attempts throws.
std::vector<Ellipse> sample_ellipses(const DatasetSpec& spec, std::uint64_t sample_index,
                                     std::size_t max_attempts = 10000);

/// Exact point-in-ellipse rasterization onto polar nodes.  Disjointness
/// means at most one term contributes per node.
PolarField rasterize(const std::vector<Ellipse>& ellipses, const PolarGrid& pg);

/// Exact evaluation on Cartesian nodes (no interpolation on the solver side).
CartesianField rasterize_cartesian(const std::vector<Ellipse>& ellipses, const CartesianGrid& cg);

double mtilde_at(const std::vector<Ellipse>& ellipses, double x, double y);

}  // namespace tttk

#endif
