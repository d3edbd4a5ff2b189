#include <doctest.h>

#include <cmath>

#include "support/test_util.hpp"
#include "tttk/ellipse.hpp"
#include "tttk/kernel.hpp"

using namespace tttk;

TEST_CASE("chord integral handles the trivial geometries") {
    const auto zero = [](double, double) { return 0.0; };
    const auto one = [](double, double) { return 1.0; };
    CHECK(chord_integral(zero, 0.3, 1.0, 64) == 0.0);
    CHECK(chord_integral(one, 0.0, 0.0, 64) == 0.0);  // h = 0: no chord
    // h = pi crosses the disk along a diameter of length 2
    CHECK(chord_integral(one, 0.0, std::numbers::pi, 64) == doctest::Approx(2.0).epsilon(1e-13));

    // centered disk inclusion of radius 0.3, value -0.5: the diameter chord
    // crosses its full width 0.6
    const auto disk = [](double x, double y) { return (x * x + y * y <= 0.09) ? -0.5 : 0.0; };
    CHECK(chord_integral(disk, 0.0, std::numbers::pi, 200000) == doctest::Approx(-0.3).epsilon(1e-4));
}

TEST_CASE("chord integral converges to a high-resolution quadrature reference") {
    Ellipse e;
    e.cx = 0.2;
    e.cy = -0.3;
    e.a = 0.25;
    e.b = 0.12;
    e.angle = 0.7;
    e.amplitude = 1.0;
    const auto f = [&](double x, double y) { return e.contains(x, y) ? e.amplitude : 0.0; };
    const double s = 0.9, h = 2.4;
    const double reference = chord_integral(f, s, h, 10000);
    // piecewise-constant integrand: midpoint error is O(1/n_quad)
    CHECK(std::abs(chord_integral(f, s, h, 262144) - reference) <= 1e-4);
}

TEST_CASE("kernel mass per offset equals the chord length") {
    PolarGrid pg(64, 32);
    BoundaryRing ring(64);
    const LinearKernel k = assemble_kernel(pg, ring);
    for (std::size_t h = 0; h < k.n_h; ++h) {
        double mass = 0.0;
        for (std::size_t r = 0; r < pg.n_rho; ++r)
            for (std::size_t t = 0; t < pg.n_theta; ++t) mass += k.at(h, r, t);
        const double len = 2.0 * std::abs(std::sin(std::numbers::pi * static_cast<double>(h) /
                                                   static_cast<double>(k.n_h)));
        if (h == 0)
            CHECK(mass == 0.0);
        else
            CHECK(mass == doctest::Approx(len).epsilon(1e-6));
    }
    for (double v : k.k) CHECK(v >= 0.0);
}

TEST_CASE("kernel support respects the chord's closest approach") {
    PolarGrid pg(64, 32);
    const LinearKernel k = assemble_kernel(pg, BoundaryRing(64));
    for (std::size_t h = 1; h < k.n_h; ++h) {
        const double rho_min =
            std::abs(std::cos(std::numbers::pi * static_cast<double>(h) / static_cast<double>(k.n_h)));
        for (std::size_t r = 0; r < pg.n_rho; ++r) {
            // one-ring slack: the bilinear scatter spreads one cell inward
            if (pg.rho(r) >= rho_min - pg.drho()) continue;
            for (std::size_t t = 0; t < pg.n_theta; ++t) CHECK(k.at(h, r, t) == 0.0);
        }
    }
}

TEST_CASE("too-coarse explicit quadrature is rejected") {
    CHECK_THROWS_AS(assemble_kernel(PolarGrid(64, 32), BoundaryRing(64), 16), std::invalid_argument);
}

TEST_CASE("apply_K agrees with direct chord integrals on smooth fields") {
    PolarGrid pg(64, 32);
    BoundaryRing ring(64);
    const LinearKernel k = assemble_kernel(pg, ring);

    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        // random smooth field: a few Gaussian bumps, analytic everywhere
        struct G {
            double cx, cy, w, a;
        };
        std::vector<G> gs;
        for (int b = 0; b < 3; ++b)
            gs.push_back({0.6 * u(rng), 0.6 * u(rng), 0.25 + 0.15 * std::abs(u(rng)), u(rng)});
        const auto f = [&](double x, double y) {
            double v = 0.0;
            for (const auto& g : gs)
                v += g.a * std::exp(-((x - g.cx) * (x - g.cx) + (y - g.cy) * (y - g.cy)) / (g.w * g.w));
            return v;
        };

        const Mat got = apply_K(k, test::sample_on_polar(pg, f));
        Mat want(ring.n_s, ring.n_r);
        for (std::size_t s = 0; s < ring.n_s; ++s)
            for (std::size_t hh = 0; hh < ring.n_r; ++hh)
                want(s, hh) = chord_integral(f, ring.source_angle(s),
                                             kTwoPi * static_cast<double>(hh) / static_cast<double>(ring.n_r),
                                             2048);
        worst = std::max(worst, test::rel_l2(got.v, want.v));
    }
    CHECK(worst <= 1e-2);
}

TEST_CASE("apply_K matches the dense materialized operator") {
    PolarGrid pg(32, 16);
    BoundaryRing ring(32);
    const LinearKernel k = assemble_kernel(pg, ring);
    const test::Dense K = test::materialize_K(k);

    const PolarField mt = test::random_polar(pg, 31);
    const Mat got = apply_K(k, mt);
    std::vector<double> want(K.rows, 0.0);
    for (std::size_t row = 0; row < K.rows; ++row) {
        double acc = 0.0;
        for (std::size_t col = 0; col < K.cols; ++col) acc += K(row, col) * mt.values[col];
        want[row] = acc;
    }
    std::vector<double> got_flat(K.rows);
    for (std::size_t s = 0; s < ring.n_s; ++s)
        for (std::size_t h = 0; h < ring.n_r; ++h) got_flat[s * ring.n_r + h] = got(s, h);
    CHECK(test::max_abs_diff(got_flat, want) <= 1e-12);
}

TEST_CASE("shifting the field in theta shifts apply_K output in s") {
    PolarGrid pg(32, 16);
    const LinearKernel k = assemble_kernel(pg, BoundaryRing(32));
    const PolarField mt = test::random_polar(pg, 41);
    const std::size_t shift = 5;
    PolarField mts(pg);
    for (std::size_t r = 0; r < pg.n_rho; ++r)
        for (std::size_t t = 0; t < pg.n_theta; ++t)
            mts.at((t + shift) % pg.n_theta, r) = mt.at(t, r);
    const Mat a = apply_K(k, mt);
    const Mat b = apply_K(k, mts);
    double worst = 0.0;
    for (std::size_t s = 0; s < 32; ++s)
        for (std::size_t h = 0; h < 32; ++h)
            worst = std::max(worst, std::abs(b((s + shift) % 32, h) - a(s, h)));
    CHECK(worst == 0.0);
}

TEST_CASE("apply_K_adjoint is the exact adjoint of apply_K") {
    PolarGrid pg(64, 32);
    BoundaryRing ring(64);
    const LinearKernel k = assemble_kernel(pg, ring);
    for (unsigned trial = 0; trial < 10; ++trial) {
        const PolarField mt = test::random_polar(pg, 100 + trial);
        const Mat d = test::random_mat(ring.n_s, ring.n_r, 200 + trial);
        const Mat km = apply_K(k, mt);
        const PolarField ktd = apply_K_adjoint(k, d);
        const double lhs = test::dot(km.v, d.v);
        const double rhs = test::dot(mt.values, ktd.values);
        const double scale = test::norm2(km.v) * test::norm2(d.v) +
                             test::norm2(mt.values) * test::norm2(ktd.values);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * scale);
    }
}

TEST_CASE("adjoint of zero data is the zero field") {
    PolarGrid pg(16, 8);
    const LinearKernel k = assemble_kernel(pg, BoundaryRing(16));
    const PolarField z = apply_K_adjoint(k, Mat(16, 16, 0.0));
    for (double v : z.values) CHECK(v == 0.0);
}

TEST_CASE("an impulse back-projects to a shifted copy of the kernel") {
    PolarGrid pg(32, 16);
    const LinearKernel k = assemble_kernel(pg, BoundaryRing(32));
    const std::size_t s0 = 7, h0 = 11;
    Mat d(32, 32, 0.0);
    d(s0, h0) = 1.0;
    const PolarField out = apply_K_adjoint(k, d);
    // (K^T d)(theta, rho) = kappa(h0, rho, s0 - theta)
    for (std::size_t r = 0; r < pg.n_rho; ++r)
        for (std::size_t t = 0; t < pg.n_theta; ++t)
            CHECK(out.at(t, r) == doctest::Approx(k.at(h0, r, (s0 + 32 - t) % 32)).epsilon(1e-14));
}

TEST_CASE("shape mismatches are rejected") {
    PolarGrid pg(16, 8);
    const LinearKernel k = assemble_kernel(pg, BoundaryRing(16));
    CHECK_THROWS_AS(apply_K(k, PolarField(PolarGrid(32, 8))), std::invalid_argument);
    CHECK_THROWS_AS(apply_K_adjoint(k, Mat(16, 8)), std::invalid_argument);
    CHECK_THROWS_AS(assemble_kernel(PolarGrid(16, 8), BoundaryRing(32)), std::invalid_argument);
}
