#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loglight/numkit.hpp"

#include <random>

using namespace loglight;

namespace {

ComplexMatrix random_matrix(int rows, int cols, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> N(0.0, 1.0);
    ComplexMatrix A(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) A(i, j) = Complex(N(rng), N(rng));
    return A;
}

ComplexVector random_vector(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> N(0.0, 1.0);
    ComplexVector v(n);
    for (int i = 0; i < n; ++i) v[i] = Complex(N(rng), N(rng));
    return v;
}

}  // namespace

TEST_CASE("lstsq identity case") {
    ComplexMatrix A(1, 1);
    A(0, 0) = 1.0;
    ComplexVector b(1);
    b[0] = Complex(3.0, 0.0);
    auto res = lstsq(A, b);
    CHECK(std::abs(res.x[0] - Complex(3.0, 0.0)) < 1e-15);
    CHECK_FALSE(res.rank_deficient);
}

TEST_CASE("lstsq unweighted mean") {
    ComplexMatrix A(2, 1);
    A << 1.0, 1.0;
    ComplexVector b(2);
    b << 0.0, 2.0;
    auto res = lstsq(A, b);
    CHECK(std::abs(res.x[0] - 1.0) < 1e-14);
}

TEST_CASE("lstsq weighted mean") {
    ComplexMatrix A(2, 1);
    A << 1.0, 1.0;
    ComplexVector b(2);
    b << 0.0, 2.0;
    RealVector w(2);
    w << 3.0, 1.0;
    auto res = lstsq(A, b, &w);
    // minimizer of 3x^2 + (x-2)^2
    CHECK(std::abs(res.x[0] - 0.5) < 1e-14);

    // scan oracle: the quadratic objective is larger a step away
    auto obj = [&](double x) { return 3.0 * x * x + (x - 2.0) * (x - 2.0); };
    CHECK(obj(res.x[0].real()) < obj(res.x[0].real() + 1e-6));
    CHECK(obj(res.x[0].real()) < obj(res.x[0].real() - 1e-6));
}

TEST_CASE("lstsq input validation") {
    ComplexMatrix A(3, 2);
    A.setOnes();
    ComplexVector b(2);
    b.setOnes();
    CHECK_THROWS_AS(lstsq(A, b), std::invalid_argument);

    ComplexVector b3 = ComplexVector::Ones(3);
    RealVector wneg(3);
    wneg << 1.0, -1.0, 1.0;
    CHECK_THROWS_AS(lstsq(A, b3, &wneg), std::invalid_argument);

    RealVector wfew(3);
    wfew << 1.0, 0.0, 0.0;  // only one positive weight for two columns
    CHECK_THROWS_AS(lstsq(A, b3, &wfew), std::invalid_argument);
}

TEST_CASE("lstsq flags rank deficiency without aborting") {
    ComplexMatrix A(3, 2);
    A.col(0).setOnes();
    A.col(1).setOnes();
    ComplexVector b = ComplexVector::Ones(3);
    auto res = lstsq(A, b);
    CHECK(res.rank_deficient);
    CHECK((A * res.x - b).norm() < 1e-12);
}

TEST_CASE("lstsq residual orthogonality") {
    const int M = 40, K = 7;
    ComplexMatrix A = random_matrix(M, K, 11);
    ComplexVector b = random_vector(M, 12);
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> U(0.1, 2.0);
    RealVector w(M);
    for (int i = 0; i < M; ++i) w[i] = U(rng);

    auto res = lstsq(A, b, &w);
    ComplexVector r = A * res.x - b;
    ComplexVector g = A.adjoint() * (w.asDiagonal() * r);
    CHECK(g.norm() <= 1e-10 * A.norm() * b.norm());

    auto res_u = lstsq(A, b);
    ComplexVector gu = A.adjoint() * (A * res_u.x - b);
    CHECK(gu.norm() <= 1e-10 * A.norm() * b.norm());
}

TEST_CASE("arnoldi dim 0 is the normalized constant column") {
    ComplexVector nodes = random_vector(25, 21);
    auto basis = build_arnoldi(nodes, nodes, 0);
    CHECK(basis.Q.cols() == 1);
    for (int i = 0; i < 25; ++i) CHECK(std::abs(basis.Q(i, 0) - 1.0) < 1e-15);
}

TEST_CASE("arnoldi two-point symmetry") {
    ComplexVector nodes(2);
    nodes << -1.0, 1.0;
    auto basis = build_arnoldi(nodes, nodes, 1);
    Complex ip = basis.Q.col(0).dot(basis.Q.col(1)) / 2.0;
    CHECK(std::abs(ip) < 1e-15);
    CHECK(std::abs(basis.Q(0, 1) + basis.Q(1, 1)) < 1e-14);
}

TEST_CASE("arnoldi orthonormality under the discrete inner product") {
    ComplexVector nodes = random_vector(60, 31);
    auto basis = build_arnoldi(nodes, nodes, 3);
    ComplexMatrix G = basis.Q.adjoint() * basis.Q / 60.0;
    CHECK((G - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("arnoldi recurrence reproduces training columns") {
    ComplexVector nodes = random_vector(40, 41);
    auto basis = build_arnoldi(nodes, nodes, 5);
    ComplexMatrix W = eval_arnoldi(basis, nodes);
    CHECK((W - basis.Q).cwiseAbs().maxCoeff() < 1e-10 * basis.Q.cwiseAbs().maxCoeff());
}

TEST_CASE("arnoldi basis reproduces polynomials exactly") {
    const int M = 50, d = 3;
    ComplexVector nodes(M);
    for (int i = 0; i < M; ++i) nodes[i] = Complex(-1.0 + 2.0 * i / (M - 1), 0.0);
    auto basis = build_arnoldi(nodes, nodes, d);
    ComplexVector f(M);
    for (int i = 0; i < M; ++i) {
        Complex z = nodes[i];
        f[i] = 2.0 * z * z * z - z + 0.5;
    }
    auto res = lstsq(basis.Q, f);
    double resid = (basis.Q * res.x - f).cwiseAbs().maxCoeff();
    CHECK(resid <= 1e-12 * f.cwiseAbs().maxCoeff());
}

TEST_CASE("off-grid evaluation is exact for polynomials in range") {
    const int M = 80;
    ComplexVector nodes(M);
    for (int i = 0; i < M; ++i) nodes[i] = Complex(-1.0 + 2.0 * i / (M - 1), 0.0);
    auto basis = build_arnoldi(nodes, nodes, 2);
    ComplexVector f = nodes.array().square();
    auto coeff = lstsq(basis.Q, f);

    ComplexVector pt(1);
    pt[0] = Complex(0.5, 0.0);
    ComplexMatrix W = eval_arnoldi(basis, pt);
    Complex val = (W * coeff.x)(0);
    CHECK(std::abs(val - 0.25) < 1e-12);
}

TEST_CASE("arnoldi breakdown truncates with a flag") {
    ComplexVector nodes = random_vector(10, 51);
    ComplexVector ones = ComplexVector::Ones(10);
    auto basis = build_arnoldi(nodes, ones, 2);  // multiplier 1: Krylov space is 1-dim
    CHECK(basis.breakdown);
    CHECK(basis.dim == 0);
    CHECK(basis.Q.cols() == 1);
}

TEST_CASE("eval past a zero subdiagonal is an error") {
    ArnoldiBasis basis;
    basis.dim = 1;
    basis.seed_scale = 1.0;
    basis.H = ComplexMatrix::Zero(2, 1);  // H(1,0) == 0
    ComplexVector mult = ComplexVector::Ones(4);
    CHECK_THROWS_AS(eval_arnoldi(basis, mult), std::domain_error);
}

TEST_CASE("seeded arnoldi spans shifted powers") {
    ComplexVector nodes = random_vector(30, 61);
    ComplexVector seed = nodes.array().square();
    auto basis = build_arnoldi(nodes, nodes, 2, &seed);
    // span{z^2, z^3, z^4}: fitting z^3 must be exact
    ComplexVector f = nodes.array().pow(3);
    auto res = lstsq(basis.Q, f);
    CHECK((basis.Q * res.x - f).cwiseAbs().maxCoeff() < 1e-11 * f.cwiseAbs().maxCoeff());
    // and the recurrence reproduces it off the training grid
    ComplexVector pt = random_vector(5, 62);
    ComplexVector seed2 = pt.array().square();
    ComplexMatrix W = eval_arnoldi(basis, pt, &seed2);
    ComplexVector vals = W * res.x;
    for (int i = 0; i < 5; ++i) CHECK(std::abs(vals[i] - pt[i] * pt[i] * pt[i]) < 1e-10);
}

TEST_CASE("arnoldi input validation") {
    ComplexVector nodes = random_vector(5, 71);
    CHECK_THROWS_AS(build_arnoldi(nodes, nodes, 5), std::invalid_argument);
    ComplexVector bad = nodes;
    bad[2] = Complex(std::numeric_limits<double>::infinity(), 0.0);
    CHECK_THROWS_AS(build_arnoldi(nodes, bad, 2), std::invalid_argument);
}
