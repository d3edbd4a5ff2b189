#include <doctest.h>

#include <cmath>

#include "support/test_util.hpp"
#include "tttk/eikonal.hpp"
#include "tttk/fbp.hpp"

using namespace tttk;

namespace {

// dense (K^T K + eps I) x = K^T d, solved by Cholesky
std::vector<double> dense_fbp(const LinearKernel& k, const Mat& d, double eps) {
    const test::Dense K = test::materialize_K(k);
    test::Dense A(K.cols, K.cols);
    for (std::size_t i = 0; i < K.cols; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < K.rows; ++r) s += K(r, i) * K(r, j);
            A(i, j) = A(j, i) = s;
        }
    for (std::size_t i = 0; i < K.cols; ++i) A(i, i) += eps;
    std::vector<double> b(K.cols, 0.0);
    for (std::size_t r = 0; r < K.rows; ++r)
        for (std::size_t c = 0; c < K.cols; ++c) b[c] += K(r, c) * d.v[r];
    return test::spd_solve(A, b);
}

}  // namespace

TEST_CASE("zero data reconstructs to the zero field") {
    const LinearKernel k = assemble_kernel(PolarGrid(16, 8), BoundaryRing(16));
    const PolarField x = fbp_invert(k, Mat(16, 16, 0.0));
    for (double v : x.values) CHECK(v == 0.0);
}

TEST_CASE("CG solution matches the dense direct solve") {
    const LinearKernel k = assemble_kernel(PolarGrid(16, 8), BoundaryRing(16));
    const Mat d = test::random_mat(16, 16, 77, 0.5);

    FbpConfig cfg;
    cfg.cg_tol = 1e-13;
    const double eps = fbp_epsilon(k, cfg);
    const PolarField got = fbp_invert(k, d, cfg);
    const std::vector<double> want = dense_fbp(k, d, eps);
    CHECK(test::max_abs_diff(got.values, want) <= 1e-8);
}

TEST_CASE("consistent synthetic data is recovered when K has full column rank") {
    PolarGrid pg(16, 8);
    const LinearKernel k = assemble_kernel(pg, BoundaryRing(16));

    // numerical rank check on the oracle instance: all Cholesky pivots of
    // K^T K stay well above roundoff, i.e. spd_solve succeeds at eps = 0
    const Mat probe = test::random_mat(16, 16, 3);
    CHECK_NOTHROW(dense_fbp(k, probe, 0.0));

    const PolarField truth = test::random_polar(pg, 9, 0.3);
    const Mat d = apply_K(k, truth);
    FbpConfig cfg;
    cfg.epsilon = 1e-6;
    cfg.cg_tol = 1e-12;
    cfg.cg_max_iter = 5000;
    const PolarField rec = fbp_invert(k, d, cfg);
    CHECK(test::rel_l2(rec.values, truth.values) <= 1e-2);
}

TEST_CASE("reconstruction is linear in the data") {
    const LinearKernel k = assemble_kernel(PolarGrid(16, 8), BoundaryRing(16));
    const Mat d1 = test::random_mat(16, 16, 11);
    const Mat d2 = test::random_mat(16, 16, 12);
    FbpConfig cfg;
    cfg.cg_tol = 1e-12;
    const double a = 0.7, b = -1.4;

    Mat combo(16, 16);
    for (std::size_t i = 0; i < combo.v.size(); ++i) combo.v[i] = a * d1.v[i] + b * d2.v[i];
    const PolarField xc = fbp_invert(k, combo, cfg);
    const PolarField x1 = fbp_invert(k, d1, cfg);
    const PolarField x2 = fbp_invert(k, d2, cfg);

    std::vector<double> lin(xc.values.size());
    for (std::size_t i = 0; i < lin.size(); ++i) lin[i] = a * x1.values[i] + b * x2.values[i];
    const double scale = test::norm2(xc.values);
    CHECK(test::max_abs_diff(xc.values, lin) <= 10.0 * cfg.cg_tol * std::max(scale, 1.0));
}

TEST_CASE("stronger regularization shrinks the solution") {
    const LinearKernel k = assemble_kernel(PolarGrid(16, 8), BoundaryRing(16));
    const Mat d = test::random_mat(16, 16, 13);
    FbpConfig cfg;
    cfg.cg_tol = 1e-12;
    double prev = 1e300;
    for (double eps : {1e-6, 1e-4, 1e-2}) {
        cfg.epsilon = eps;
        const PolarField x = fbp_invert(k, d, cfg);
        const double norm = test::norm2(x.values);
        CHECK(norm < prev);
        prev = norm;
    }
}

TEST_CASE("the error energy norm is nonincreasing across CG iterates") {
    // runs CG manually against the dense solution; the A-norm of the error
    // is the quantity CG minimizes, so it must decrease monotonically
    const LinearKernel k = assemble_kernel(PolarGrid(16, 8), BoundaryRing(16));
    const Mat d = test::random_mat(16, 16, 21);
    const double eps = 1e-4;
    const std::vector<double> xstar = dense_fbp(k, d, eps);

    const auto apply_normal = [&](const std::vector<double>& v) {
        PolarField f(k.pg);
        f.values = v;
        PolarField af = apply_K_adjoint(k, apply_K(k, f));
        for (std::size_t i = 0; i < af.values.size(); ++i) af.values[i] += eps * v[i];
        return af.values;
    };
    const auto a_norm_err = [&](const std::vector<double>& x) {
        std::vector<double> e(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) e[i] = x[i] - xstar[i];
        return std::sqrt(test::dot(e, apply_normal(e)));
    };

    PolarField bf = apply_K_adjoint(k, d);
    std::vector<double> x(bf.values.size(), 0.0), r = bf.values, p = r;
    double rr = test::dot(r, r);
    double prev = a_norm_err(x);
    for (int it = 0; it < 40; ++it) {
        const std::vector<double> ap = apply_normal(p);
        const double alpha = rr / test::dot(p, ap);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        const double cur = a_norm_err(x);
        CHECK(cur <= prev * (1.0 + 1e-12) + 1e-14);
        prev = cur;
        const double rr_new = test::dot(r, r);
        const double beta = rr_new / rr;
        rr = rr_new;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = r[i] + beta * p[i];
    }
}

TEST_CASE("bad configurations are rejected") {
    const LinearKernel k = assemble_kernel(PolarGrid(16, 8), BoundaryRing(16));
    FbpConfig cfg;
    cfg.epsilon = -1.0;
    CHECK_THROWS_AS(fbp_invert(k, Mat(16, 16, 0.0), cfg), std::invalid_argument);

    FbpConfig tight;
    tight.cg_tol = 1e-14;
    tight.cg_max_iter = 1;
    const Mat d = test::random_mat(16, 16, 5);
    CHECK_THROWS_AS(fbp_invert(k, d, tight), ConvergenceError);
}
