#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfn/conequad.hpp"
#include "mfn/random.hpp"

using namespace mfn;

// Closed forms used as oracles, via dmu0 = (r/2) dr dOmega:
//   int e^{-a p0} dmu0 = 2 pi / a^2,  int e^{-p0} p0^k dmu0 = 2 pi (k+1)!/2 ... etc.

TEST_CASE("grid reproduces the radial moment oracles") {
    const QuadratureGrid grid = QuadratureGrid::build(32, 16, 1.0);
    const c64 i1 = grid.integrate([](const MomentumOnCone& p) { return c64(std::exp(-p.p.x0)); });
    CHECK(std::abs(i1 - c64(2.0 * kPi)) / (2.0 * kPi) < 1e-10);
    const c64 i2 =
        grid.integrate([](const MomentumOnCone& p) { return c64(std::exp(-2.0 * p.p.x0)); });
    CHECK(std::abs(i2 - c64(kPi / 2.0)) / (kPi / 2.0) < 1e-10);
    // 2 pi Gamma(4) = 12 pi for the p0^2 moment
    const c64 i3 = grid.integrate(
        [](const MomentumOnCone& p) { return c64(std::exp(-p.p.x0) * p.p.x0 * p.p.x0); });
    CHECK(std::abs(i3 - c64(12.0 * kPi)) / (12.0 * kPi) < 1e-10);
    for (auto comp : {&FourVector::x1, &FourVector::x2, &FourVector::x3}) {
        const c64 odd = grid.integrate(
            [comp](const MomentumOnCone& p) { return c64(std::exp(-p.p.x0) * (p.p.*comp)); });
        CHECK(std::abs(odd) < 1e-12);
    }
}

TEST_CASE("independent midpoint-rule oracle for a weighted moment") {
    // a crude rule sharing nothing with the grid machinery: midpoints in r,
    // cos(theta), phi applied to int e^{-p0} (1 + p3/(2 p0)) dmu0
    auto f = [](double r, double u) { return std::exp(-r) * (1.0 + 0.5 * u); };
    const int nr = 4000, nu = 160, np = 16;
    double acc = 0.0;
    for (int i = 0; i < nr; ++i) {
        const double r = 40.0 * (i + 0.5) / nr;
        const double wr = 40.0 / nr;
        for (int j = 0; j < nu; ++j) {
            const double u = -1.0 + 2.0 * (j + 0.5) / nu;
            acc += wr * (2.0 / nu) * (2.0 * kPi / np) * np * (r / 2.0) * f(r, u);
        }
    }
    CHECK(std::abs(acc - 2.0 * kPi) / (2.0 * kPi) < 1e-4);  // odd part integrates to zero

    const QuadratureGrid grid = QuadratureGrid::build(32, 12, 1.0);
    const c64 fast = grid.integrate([&](const MomentumOnCone& p) {
        return c64(f(p.p.x0, p.p.x3 / p.p.x0));
    });
    CHECK(std::abs(fast - c64(acc)) / acc < 1e-4);
}

TEST_CASE("finite radial rule agrees with the laguerre rule on damped integrands") {
    const QuadratureGrid lag = QuadratureGrid::build(32, 12, 0.5);
    const QuadratureGrid fin = QuadratureGrid::build_finite(48, 12, 14.0);
    auto f = [](const MomentumOnCone& p) {
        return c64(std::exp(-1.5 * p.p.x0) * (1.0 + 0.2 * p.p.x3));
    };
    CHECK(std::abs(lag.integrate(f) - fin.integrate(f)) / std::abs(lag.integrate(f)) < 1e-7);
}

TEST_CASE("grid construction validates its arguments and avoids the singular ray") {
    CHECK_THROWS_AS(QuadratureGrid::build(1, 8, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureGrid::build(8, 8, 0.0), std::invalid_argument);
    const QuadratureGrid grid = QuadratureGrid::build(8, 8, 1.0);
    for (const auto& node : grid.nodes()) {
        CHECK(node.weight > 0.0);
        CHECK(!on_singular_ray(node.p.p, 1e-6));
    }
}

namespace {

ConeFunction test_field(int n) {
    ConeFunction f;
    f.dim = static_cast<std::size_t>(n) + 1;
    f.eval = [n](const MomentumOnCone& p) {
        CVector v(static_cast<std::size_t>(n) + 1);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = std::exp(-0.9 * p.p.x0) * c64(1.0 + 0.2 * static_cast<double>(i) * p.p.x3,
                                                 0.3 * p.p.x1 - 0.1 * p.p.x2);
        return v;
    };
    return f;
}

}  // namespace

TEST_CASE("inner_beta: scalar reference, symmetry, null fields") {
    const QuadratureGrid grid = QuadratureGrid::build(32, 16, 1.0);
    const ConeFunction one = scalar_cone_function(
        [](const MomentumOnCone& p) { return c64(std::exp(-p.p.x0)); });
    // <e^-p0, e^-p0> at degree 0 is the second reference integral pi/2
    const c64 ref = inner_beta(one, one, 0, Sign::plus, grid);
    CHECK(std::abs(ref - c64(kPi / 2.0)) / (kPi / 2.0) < 1e-10);

    const ConeFunction a = test_field(1), b = test_field(1);
    const c64 ab = inner_beta(a, b, 1, Sign::minus, grid);
    const c64 ba = inner_beta(b, a, 1, Sign::minus, grid);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-12 * std::abs(ab));
    CHECK(std::real(inner_beta(a, a, 1, Sign::plus, grid)) >= 0.0);

    ConeFunction nullf;
    nullf.dim = 2;
    nullf.eval = [](const MomentumOnCone& p) {
        const auto [vp, v0] = null_eigenpair(p.p);
        CVector v(2);
        v[0] = v0[0] * std::exp(-p.p.x0);
        v[1] = v0[1] * std::exp(-p.p.x0);
        return v;
    };
    CHECK(std::abs(inner_beta(nullf, nullf, 1, Sign::minus, grid)) < 1e-10);

    ConeFunction wrongdim;
    wrongdim.dim = 3;
    wrongdim.eval = [](const MomentumOnCone&) { return CVector(3); };
    CHECK_THROWS_AS(inner_beta(wrongdim, wrongdim, 1, Sign::plus, grid), std::invalid_argument);
}

TEST_CASE("range/null splitting is an exact pointwise resolution") {
    RandomSource rng(59);
    for (int n : {1, 2, 3}) {
        const ConeFunction f = test_field(n);
        const ConeFunction fr = project_range(f, n, Sign::plus);
        const ConeFunction f0 = project_null(f, n, Sign::plus);
        for (int i = 0; i < 40; ++i) {
            const MomentumOnCone p(rng.cone_point());
            const CVector v = f(p), a = fr(p), b = f0(p);
            double dn = 0.0, vn = 0.0;
            for (std::size_t k = 0; k < v.size(); ++k) {
                dn += std::norm(v[k] - a[k] - b[k]);
                vn += std::norm(v[k]);
            }
            CHECK(std::sqrt(dn / vn) < 1e-13);
            const CMatrix bm = beta(p.p, n, Sign::plus).matrix;
            const CVector bnull = bm * b;
            double bn = 0.0;
            for (std::size_t k = 0; k < bnull.size(); ++k) bn += std::norm(bnull[k]);
            CHECK(std::sqrt(bn) / (bm.norm() * std::sqrt(vn)) < 1e-13);
        }
        // a pure range field has no null component
        const ConeFunction rr = project_null(fr, n, Sign::plus);
        const MomentumOnCone p(rng.cone_point());
        const CVector z = rr(p);
        double zn = 0.0;
        for (std::size_t k = 0; k < z.size(); ++k) zn += std::norm(z[k]);
        CHECK(std::sqrt(zn) < 1e-12);
    }
}

TEST_CASE("phi_plus isometry: frozen norm value and the general identity") {
    const QuadratureGrid grid = QuadratureGrid::build(32, 16, 1.0);
    const ConeFunction chi = scalar_cone_function(
        [](const MomentumOnCone& p) { return c64(std::exp(-p.p.x0)); });
    // |chi|^2_{L2(mu0)} = int e^{-2 p0} dmu0 = pi/2
    const FactorVector fv = phi_plus(chi, 1);
    const double nb = factor_norm(fv, grid);
    CHECK(std::abs(nb * nb - kPi / 2.0) / (kPi / 2.0) < 1e-10);

    for (int n : {1, 2, 3}) {
        const FactorVector w = phi_plus(chi, n);
        CHECK(std::abs(factor_norm(w, grid) * factor_norm(w, grid) - kPi / 2.0) / (kPi / 2.0) <
              1e-9);
    }

    // zero input gives the zero class
    const ConeFunction zero = scalar_cone_function([](const MomentumOnCone&) { return c64(0.0); });
    CHECK(factor_norm(phi_plus(zero, 2), grid) == 0.0);
}

TEST_CASE("phi_plus intertwines the canonical actions modulo null") {
    const QuadratureGrid grid = QuadratureGrid::build(32, 16, 1.0);
    const ConeFunction chi = scalar_cone_function([](const MomentumOnCone& p) {
        return std::exp(-p.p.x0) * c64(1.0, 0.25 * p.p.x1);
    });
    const PoincareElement g(Mat2::diag(std::exp(0.25), std::exp(-0.25)),
                            FourVector{0.2, -0.3, 0.1, 0.4});
    for (int n : {1, 2}) {
        const FactorVector fv = phi_plus(chi, n);
        const FactorVector lhs = phi_plus(wigner_act(g, chi, n, Sign::plus), n);
        FactorVector rhs;
        rhs.n = n;
        rhs.sign = Sign::plus;
        rhs.rep = canonical_V_act(g, fv.rep, 1, n);
        FactorVector diff;
        diff.n = n;
        diff.sign = Sign::plus;
        diff.rep = cone_add(lhs.rep, rhs.rep, c64(-1.0));
        CHECK(factor_norm(diff, grid) / factor_norm(fv, grid) < 1e-9);
    }
}

TEST_CASE("factor vectors: seminorm equality ignores null shifts") {
    const QuadratureGrid grid = QuadratureGrid::build(24, 12, 1.0);
    const ConeFunction chi = scalar_cone_function(
        [](const MomentumOnCone& p) { return c64(std::exp(-p.p.x0)); });
    const FactorVector fv = phi_plus(chi, 2);
    FactorVector shifted = fv;
    shifted.rep = cone_add(fv.rep, project_null(test_field(2), 2, Sign::plus), c64(0.5, -0.8));
    CHECK(factor_equal(fv, shifted, grid));
    CHECK(std::abs(factor_norm(shifted, grid) - factor_norm(fv, grid)) /
              factor_norm(fv, grid) <
          1e-9);

    FactorVector other = fv;
    other.rep = cone_scale(fv.rep, c64(1.1));
    CHECK(!factor_equal(fv, other, grid));
}
