#ifndef TTTK_MEASUREMENT_HPP
#define TTTK_MEASUREMENT_HPP

#include <cstdint>

#include "tttk/eikonal.hpp"
#include "tttk/grids.hpp"

namespace tttk {

/// Differential traveltime data.  `d` is indexed (source, offset) once
/// sheared; `u0` keeps the background receiver times under the same
/// indexing so the noise model can be applied later.
struct Measurement {
    Mat d;          // N_s x N_h (sheared) or N_s x N_r (unsheared)
    Mat u0;         // background times, aligned with d
    bool sheared = false;
    double delta = 0.0;
};

/// Traveltime value at a boundary point.  Receivers sit on the unit circle
/// where part of the bilinear stencil may fall on masked exterior nodes
/// whose values carry the large outside slowness; those corners are dropped
/// and the weights renormalized over the interior ones.  Falls back to the
/// nearest interior node if the whole cell is exterior.
double receiver_value(const TraveltimeField& u, double x, double y);

/// Solves one eikonal problem per source and records u^s at every receiver.
/// Row s, column r.  Solver failures are annotated with the source index.
Mat forward_measurement(const SlownessField& m, const BoundaryRing& ring,
                        const SweepParams& params = {}, std::size_t n_threads = 0);

/// Elementwise u - u0.
Mat differential(const Mat& u, const Mat& u0);

/// Reindexes receiver angle as offset h = r - s: out(s, h) = D(s, (s+h) mod N).
Mat shear(const Mat& D);
/// Inverse of shear.
Mat unshear(const Mat& D);

/// Multiplicative/background noise d^delta = (1 + Z*delta)*d + Z*delta*u0
/// with one standard normal draw Z per entry shared by both terms.
/// delta = 0 returns the measurement bitwise unchanged.
Measurement add_noise(const Measurement& meas, double delta, const Mat& u0,
                      std::uint64_t seed);

}  // namespace tttk

#endif
