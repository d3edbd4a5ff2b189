#ifndef TTTK_DATASET_HPP
#define TTTK_DATASET_HPP

#include <string>

#include "tttk/ellipse.hpp"
#include "tttk/measurement.hpp"

namespace tttk {

struct PipelineConfig {
    std::size_t n_cart = 96;
    std::size_t n_theta = 64;
    std::size_t n_rho = 32;
    std::size_t n_s = 64;
    double outside_slowness = 100.0;
    double m0 = 1.0;  // constant background
    SweepParams sweep;
    std::size_t n_threads = 0;

    CartesianGrid cart_grid() const { return CartesianGrid(n_cart); }
    PolarGrid polar_grid() const { return PolarGrid(n_theta, n_rho); }
    BoundaryRing ring() const { return BoundaryRing(n_s); }
};

/// In-memory dataset: measurements (n, N_s, N_h) and labels (n, N_theta,
/// N_rho), both theta-major to match the network layout, plus the sheared
/// background times and the generating geometry.
struct Dataset {
    DatasetSpec spec;
    PipelineConfig pipeline;
    std::size_t n_train = 0;
    std::vector<float> d;       // n * N_s * N_h
    std::vector<float> m;       // n * N_theta * N_rho
    std::vector<double> u0;     // N_s * N_h, sheared background times
    std::vector<std::vector<Ellipse>> ellipses;

    std::size_t d_stride() const { return pipeline.n_s * pipeline.n_s; }
    std::size_t m_stride() const { return pipeline.n_theta * pipeline.n_rho; }
    const float* d_sample(std::size_t i) const { return d.data() + i * d_stride(); }
    const float* m_sample(std::size_t i) const { return m.data() + i * m_stride(); }
};

/// Sheared background receiver times for the constant background m0.
Mat background_sheared_times(const PipelineConfig& cfg);

/// One sample's sheared differential measurement for the given inclusion set.
Mat sample_measurement(const std::vector<Ellipse>& ellipses, const PipelineConfig& cfg,
                       const Mat& u0_sheared);

/// Runs the full recipe: sample ellipses, rasterize the polar label,
/// evaluate the perturbation analytically on the Cartesian grid, simulate,
/// difference against the cached background, shear and optionally add noise.
/// train_frac of the samples (floored) are marked as the training split.
Dataset generate_dataset(const DatasetSpec& spec, const PipelineConfig& cfg,
                         double train_frac = 0.75);

/// Writes manifest.json + d.tttk + m.tttk + u0.tttk into dir (created if
/// missing); content is a pure function of (spec, pipeline, train_frac).
void save_dataset(const Dataset& ds, const std::string& dir);
Dataset load_dataset(const std::string& dir);

/// Rebuilds label (theta-major) from stored polar-field values.
std::vector<float> polar_to_theta_major(const PolarField& f);

}  // namespace tttk

#endif
