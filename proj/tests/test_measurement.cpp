#include <doctest.h>

#include <cmath>
#include <string>

#include "support/test_util.hpp"
#include "tttk/ellipse.hpp"
#include "tttk/measurement.hpp"

using namespace tttk;

namespace {

SlownessField unit_masked(std::size_t n) {
    SlownessField m{CartesianGrid(n)};
    for (auto& v : m.values) v = 1.0;
    return outside_mask_apply(m, 100.0);
}

Mat sheared_differential(const std::vector<Ellipse>& es, std::size_t n, const BoundaryRing& ring,
                         const Mat& u0_sheared) {
    SlownessField m{CartesianGrid(n)};
    for (auto& v : m.values) v = 1.0;
    const CartesianField mt = rasterize_cartesian(es, m.grid);
    for (std::size_t i = 0; i < m.values.size(); ++i) m.values[i] += mt.values[i];
    const SlownessField masked = outside_mask_apply(m, 100.0);
    return differential(shear(forward_measurement(masked, ring)), u0_sheared);
}

}  // namespace

TEST_CASE("background measurement matches boundary chord lengths") {
    const std::size_t n = 160;
    BoundaryRing ring(32);
    const Mat U = forward_measurement(unit_masked(n), ring);
    const double h = CartesianGrid(n).spacing();

    double chord_err = 0.0, diag = 0.0, sym = 0.0;
    for (std::size_t s = 0; s < ring.n_s; ++s)
        for (std::size_t r = 0; r < ring.n_r; ++r) {
            const double expect =
                2.0 * std::abs(std::sin(0.5 * (ring.receiver_angle(r) - ring.source_angle(s))));
            chord_err = std::max(chord_err, std::abs(U(s, r) - expect));
            sym = std::max(sym, std::abs(U(s, r) - U(r, s)));
            if (s == r) diag = std::max(diag, std::abs(U(s, r)));
        }
    CHECK(chord_err <= 3.0 * h);
    CHECK(diag <= 1.5 * h);     // receiver at the source, interpolation-level
    CHECK(sym <= 1.0 * h);      // reciprocity at desk scale
}

TEST_CASE("differential is the elementwise difference and is linear") {
    const Mat u = test::random_mat(6, 6, 1);
    const Mat u0 = test::random_mat(6, 6, 2);
    const Mat v = test::random_mat(6, 6, 3);

    const Mat zero = differential(u, u);
    for (double x : zero.v) CHECK(x == 0.0);

    const Mat a = differential(u, u0), b = differential(u0, v), c = differential(u, v);
    for (std::size_t i = 0; i < c.v.size(); ++i)
        CHECK(a.v[i] + b.v[i] == doctest::Approx(c.v[i]).epsilon(1e-14));

    Mat bad(5, 6);
    CHECK_THROWS_AS(differential(u, bad), std::invalid_argument);
}

TEST_CASE("negative inclusions can only shorten traveltimes") {
    const std::size_t n = 64, ns = 16;
    BoundaryRing ring(ns);
    const Mat u0 = shear(forward_measurement(unit_masked(n), ring));
    DatasetSpec spec;
    spec.kind = InclusionKind::negative;
    spec.n_e = 1;
    spec.seed = 5;
    const Mat d = sheared_differential(sample_ellipses(spec, 0), n, ring, u0);
    double mx = -1e300, mean = 0.0;
    for (double x : d.v) {
        mx = std::max(mx, x);
        mean += x;
    }
    mean /= static_cast<double>(d.v.size());
    CHECK(mx <= 5e-8);   // <= 0 up to solver tolerance (discrete comparison principle)
    CHECK(mean < 0.0);
}

TEST_CASE("shear reindexes the receiver angle as an offset") {
    Mat D(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) D(i, j) = 10.0 * static_cast<double>(i) + static_cast<double>(j);
    const Mat S = shear(D);
    CHECK(S(1, 2) == 13.0);  // D[1, (1+2) mod 4]
    for (std::size_t s = 0; s < 4; ++s) CHECK(S(s, 0) == D(s, s));

    Mat bad(3, 4);
    CHECK_THROWS_AS(shear(bad), std::invalid_argument);
}

TEST_CASE("unshear inverts shear for random square sizes") {
    for (std::size_t n : {2ul, 5ul, 16ul, 33ul}) {
        const Mat D = test::random_mat(n, n, static_cast<unsigned>(n));
        const Mat back = unshear(shear(D));
        CHECK(test::max_abs_diff(back.v, D.v) == 0.0);
    }
}

TEST_CASE("zero noise returns the measurement bitwise unchanged") {
    Measurement meas;
    meas.d = test::random_mat(16, 16, 4);
    meas.u0 = test::random_mat(16, 16, 5);
    meas.sheared = true;
    const Measurement out = add_noise(meas, 0.0, meas.u0, 77);
    CHECK(test::max_abs_diff(out.d.v, meas.d.v) == 0.0);
    CHECK_THROWS_AS(add_noise(meas, -0.1, meas.u0, 77), std::invalid_argument);
}

TEST_CASE("noise is reproducible per seed and has the stated variance") {
    const std::size_t n = 160;
    Measurement meas;
    meas.d = test::random_mat(n, n, 6, 0.1);
    Mat u0 = test::random_mat(n, n, 7, 1.5);
    meas.u0 = u0;
    meas.sheared = true;
    const double delta = 0.02;

    const Measurement a = add_noise(meas, delta, u0, 1234);
    const Measurement b = add_noise(meas, delta, u0, 1234);
    CHECK(test::max_abs_diff(a.d.v, b.d.v) == 0.0);
    const Measurement c = add_noise(meas, delta, u0, 1235);
    CHECK(test::max_abs_diff(a.d.v, c.d.v) > 0.0);

    // per entry, d^delta - d = Z * delta * (d + u0)
    double var = 0.0, moment = 0.0;
    for (std::size_t i = 0; i < a.d.v.size(); ++i) {
        const double diff = a.d.v[i] - meas.d.v[i];
        var += diff * diff;
        const double base = meas.d.v[i] + u0.v[i];
        moment += delta * delta * base * base;
    }
    var /= static_cast<double>(a.d.v.size());
    moment /= static_cast<double>(a.d.v.size());
    CHECK(var == doctest::Approx(moment).epsilon(0.10));
}

TEST_CASE("quarter-turn rotation shifts the sheared measurement by a quarter of the sources") {
    // 90 degrees is a symmetry of the Cartesian mesh, so the discrete
    // pipeline commutes with it to solver precision
    const std::size_t n = 64, ns = 32, k = ns / 4;
    BoundaryRing ring(ns);
    const Mat u0 = shear(forward_measurement(unit_masked(n), ring));
    DatasetSpec spec;
    spec.kind = InclusionKind::negative;
    spec.n_e = 2;
    spec.seed = 11;
    const auto es = sample_ellipses(spec, 3);
    const Mat d = sheared_differential(es, n, ring, u0);

    const double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(ns);
    auto rot = es;
    for (auto& e : rot) {
        const double cx = e.cx * std::cos(phi) - e.cy * std::sin(phi);
        const double cy = e.cx * std::sin(phi) + e.cy * std::cos(phi);
        e.cx = cx;
        e.cy = cy;
        e.angle += phi;
    }
    const Mat dr = sheared_differential(rot, n, ring, u0);

    double worst = 0.0;
    for (std::size_t s = 0; s < ns; ++s)
        for (std::size_t h = 0; h < ns; ++h)
            worst = std::max(worst, std::abs(dr((s + k) % ns, h) - d(s, h)));
    CHECK(worst <= 5.0 * SweepParams{}.tol);
}

TEST_CASE("solver failures carry the source index") {
    SweepParams p;
    p.max_sweeps = 1;
    try {
        forward_measurement(unit_masked(64), BoundaryRing(4), p);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(std::string(e.what()).find("source") != std::string::npos);
    }
}
