#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfn/random.hpp"
#include "mfn/spinalg.hpp"

using namespace mfn;

namespace {

double mat2_dist(const Mat2& a, const Mat2& b) { return (a - b).norm(); }

}  // namespace

TEST_CASE("pauli embeddings at pinned points") {
    CHECK(mat2_dist(pauli_embed({1, 0, 0, 1}), Mat2::diag(2.0, 0.0)) == 0.0);
    CHECK(mat2_dist(pauli_embed({1, 0, 0, 0}), Mat2::identity()) == 0.0);
    CHECK(mat2_dist(pauli_embed({1, 1, 0, 0}), Mat2{1, 1, 1, 1}) == 0.0);

    CHECK(mat2_dist(pauli_dagger({1, 0, 0, 1}), Mat2::diag(0.0, 1.0)) == 0.0);
    CHECK(mat2_dist(pauli_dagger({1, 0, 0, 0}), Mat2::identity() * 0.5) == 0.0);
}

TEST_CASE("pauli embedding determinant is the Minkowski norm") {
    RandomSource rng(3);
    for (int i = 0; i < 50; ++i) {
        const FourVector x = rng.four_vector(1.5);
        CHECK(std::abs(pauli_embed(x).det() - c64(x.minkowski_sq())) < 1e-12);
        const FourVector y = pauli_unembed(pauli_embed(x));
        CHECK(std::abs(y.x0 - x.x0) + std::abs(y.x1 - x.x1) + std::abs(y.x2 - x.x2) +
                  std::abs(y.x3 - x.x3) <
              1e-13);
    }
}

TEST_CASE("P-dagger eigenpair on the cone") {
    RandomSource rng(5);
    for (int i = 0; i < 100; ++i) {
        const FourVector p = rng.cone_point();
        const Mat2 pd = pauli_dagger(p);
        const auto [vp, v0] = null_eigenpair(p);
        const auto a = pd.apply(vp);
        const auto b = pd.apply(v0);
        const double scale = p.x0 * std::sqrt(std::norm(vp[0]) + std::norm(vp[1]));
        CHECK(std::abs(a[0] - p.x0 * vp[0]) / scale < 1e-13);
        CHECK(std::abs(a[1] - p.x0 * vp[1]) / scale < 1e-13);
        CHECK(std::abs(b[0]) / scale < 1e-13);
        CHECK(std::abs(b[1]) / scale < 1e-13);
        CHECK(std::abs(std::conj(vp[0]) * v0[0] + std::conj(vp[1]) * v0[1]) / (scale * scale) <
              1e-13);
    }
}

TEST_CASE("null_eigenpair falls back on the degenerate ray p3 = +p0") {
    const auto [vp, v0] = null_eigenpair({1, 0, 0, 1});
    CHECK(std::abs(vp[0]) == 0.0);
    CHECK(std::abs(vp[1] - c64(2.0)) == 0.0);
    const double n0 = std::sqrt(std::norm(v0[0]) + std::norm(v0[1]));
    CHECK(std::abs(n0 - 1.0) < 1e-14);
    CHECK(std::abs(std::conj(vp[0]) * v0[0] + std::conj(vp[1]) * v0[1]) < 1e-14);
}

TEST_CASE("null_eigenpair rejects the singular ray") {
    CHECK_THROWS_AS(null_eigenpair({1, 0, 0, -1}), std::domain_error);
}

TEST_CASE("sym_power on identity and diagonal arguments") {
    for (int n = 0; n <= 5; ++n) {
        const CMatrix s = sym_power(Mat2::identity(), n);
        CHECK((s - CMatrix::identity(static_cast<std::size_t>(n) + 1)).norm() == 0.0);
    }
    const c64 a(0.7, 0.3), d(-1.1, 0.4);
    const CMatrix s2 = sym_power(Mat2::diag(a, d), 2);
    CHECK(std::abs(s2(0, 0) - a * a) < 1e-15);
    CHECK(std::abs(s2(1, 1) - a * d) < 1e-15);
    CHECK(std::abs(s2(2, 2) - d * d) < 1e-15);
    CHECK(std::abs(s2(0, 1)) + std::abs(s2(1, 0)) + std::abs(s2(0, 2)) == 0.0);
}

TEST_CASE("sym_power is multiplicative and respects adjoints") {
    RandomSource rng(7);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + i % 4;
        const Mat2 a = rng.sl2(), b = rng.sl2();
        const CMatrix lhs = sym_power(a * b, n);
        const CMatrix rhs = sym_power(a, n) * sym_power(b, n);
        CHECK((lhs - rhs).norm() / lhs.norm() < 1e-12);
        CHECK((sym_power(a.dagger(), n) - sym_power(a, n).adjoint()).norm() < 1e-12);
        CHECK((sym_power(a.transpose(), n) - sym_power(a, n).transpose()).norm() < 1e-12);
        c64 dn = 1.0;
        for (int k = 0; k < n * (n + 1) / 2; ++k) dn *= a.det();
        CHECK(std::abs(sym_power(a, n).det() - dn) < 1e-10);
    }
}

TEST_CASE("rep_D covers the mixed labels") {
    RandomSource rng(11);
    const Mat2 a = rng.sl2();
    CHECK((rep_D(SpinLabel(0, 1), a).matrix - CMatrix::from_mat2(a.conj())).norm() < 1e-15);
    CHECK((rep_D(SpinLabel(1, 0), a).matrix - CMatrix::from_mat2(a)).norm() < 1e-15);
    CHECK((rep_D(SpinLabel(2, 0), a).matrix - rep_D(SpinLabel(0, 2), a).matrix.conj()).norm() <
          1e-14);
    CHECK(rep_D(SpinLabel(1, 2), a).matrix.rows() == 6);
    const Mat2 b = rng.sl2();
    const SpinLabel lbl(2, 1);
    CHECK((rep_D(lbl, a * b).matrix - rep_D(lbl, a).matrix * rep_D(lbl, b).matrix).norm() /
              rep_D(lbl, a * b).matrix.norm() <
          1e-12);
}

TEST_CASE("beta weights: pinned values, spectrum, covariance") {
    const CMatrix b1 = beta({1, 0, 0, 1}, 1, Sign::plus).matrix;
    CHECK(std::abs(b1(0, 0)) == 0.0);
    CHECK(std::abs(b1(1, 1) - c64(1.0)) == 0.0);

    CHECK(beta({1, 0.3, -0.4, std::sqrt(0.75)}, 0, Sign::plus).matrix.rows() == 1);
    CHECK(std::abs(beta({2, 0, 0, 2}, 0, Sign::minus).matrix(0, 0) - c64(1.0)) == 0.0);

    RandomSource rng(13);
    for (int i = 0; i < 50; ++i) {
        const FourVector p = rng.cone_point();
        const auto ev = hermitian_eigenvalues(beta(p, 2, Sign::minus).matrix);
        CHECK(std::abs(ev[0]) / (p.x0 * p.x0) < 1e-12);
        CHECK(std::abs(ev[1]) / (p.x0 * p.x0) < 1e-12);
        CHECK(std::abs(ev[2] - p.x0 * p.x0) / (p.x0 * p.x0) < 1e-12);

        const int n = 1 + i % 3;
        const Mat2 am = rng.sl2_moderate(0.5);
        const FourVector q = lorentz_act(am.inverse(), p);
        const CMatrix d = rep_D(SpinLabel(0, n), am).matrix;
        const CMatrix lhs = d.adjoint() * beta(p, n, Sign::plus).matrix * d;
        const CMatrix rhs = beta(q, n, Sign::plus).matrix;
        CHECK((lhs - rhs).norm() / rhs.norm() < 1e-11);
    }
    CHECK_THROWS_AS(beta({1, 0, 0, 0.5}, 1, Sign::plus), std::domain_error);
}

TEST_CASE("hermitian eigenvalues against the closed 2x2 form") {
    RandomSource rng(17);
    for (int i = 0; i < 50; ++i) {
        const Mat2 h = rng.hermitian(1.0);
        const auto ref = herm2_eigenvalues(h);
        const auto ev = hermitian_eigenvalues(CMatrix::from_mat2(h));
        CHECK(std::abs(ev[0] - ref[0]) < 1e-12);
        CHECK(std::abs(ev[1] - ref[1]) < 1e-12);
    }
}

TEST_CASE("quadrature rules reproduce moment integrals") {
    {
        const QuadRule gl = gauss_legendre(12);
        double s = 0.0;
        for (int i = 0; i < 12; ++i) s += gl.weights[i] * gl.nodes[i] * gl.nodes[i];
        CHECK(std::abs(s - 2.0 / 3.0) < 1e-14);
    }
    {
        const QuadRule lag = gauss_laguerre_unit_weight(24);
        double s1 = 0.0, s2 = 0.0;
        for (int i = 0; i < 24; ++i) {
            s1 += lag.weights[i] * lag.nodes[i] * std::exp(-lag.nodes[i]);
            s2 += lag.weights[i] * std::exp(-2.0 * lag.nodes[i]);
        }
        CHECK(std::abs(s1 - 1.0) < 1e-13);
        CHECK(std::abs(s2 - 0.5) < 1e-10);
    }
    {
        const QuadRule gh = gauss_hermite_unit_weight(20);
        double s = 0.0;
        for (int i = 0; i < 20; ++i)
            s += gh.weights[i] * gh.nodes[i] * gh.nodes[i] * std::exp(-gh.nodes[i] * gh.nodes[i]);
        CHECK(std::abs(s - std::sqrt(kPi) / 2.0) < 1e-12);
    }
}

TEST_CASE("pairwise sum matches serial accumulation") {
    std::vector<double> xs(1000);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = std::sin(0.1 * static_cast<double>(i));
    double serial = 0.0;
    for (double x : xs) serial += x;
    CHECK(std::abs(pairwise_sum(xs) - serial) < 1e-12);
}
