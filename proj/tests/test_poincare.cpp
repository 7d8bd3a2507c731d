#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfn/poincare.hpp"
#include "mfn/random.hpp"

using namespace mfn;

TEST_CASE("lorentz action: pinned boost and invariants") {
    const double t = 0.8;
    const Mat2 boost = Mat2::diag(std::exp(t / 2.0), std::exp(-t / 2.0));
    const FourVector img = lorentz_act(boost, {1, 0, 0, 1});
    CHECK(std::abs(img.x0 - std::exp(t)) < 1e-14);
    CHECK(std::abs(img.x3 - std::exp(t)) < 1e-14);
    CHECK(std::abs(img.x1) + std::abs(img.x2) < 1e-15);

    const FourVector fixed = lorentz_act(Mat2::identity(), {0.3, -1.0, 0.4, 2.0});
    CHECK(std::abs(fixed.x1 + 1.0) < 1e-15);

    RandomSource rng(23);
    for (int i = 0; i < 200; ++i) {
        const Mat2 a = rng.sl2();
        const FourVector x = rng.four_vector(1.2);
        CHECK(std::abs(lorentz_act(a, x).minkowski_sq() - x.minkowski_sq()) <
              1e-10 * std::max(1.0, std::abs(x.minkowski_sq())));
    }
}

TEST_CASE("boost section: pinned value, defining identity, factorization") {
    const MomentumOnCone phat(FourVector{1, 0, 0, 1});
    CHECK((boost_section(phat) + Mat2::identity()).norm() == 0.0);

    RandomSource rng(29);
    for (int i = 0; i < 200; ++i) {
        const MomentumOnCone p(rng.cone_point());
        const Mat2 h = boost_section(p);
        CHECK(std::abs(h.det() - c64(1.0)) < 1e-13);
        CHECK((h * Mat2::diag(2.0, 0.0) * h.dagger() - p.pauli).norm() / p.pauli.norm() < 1e-13);
        const Mat2 hinv = h.inverse();
        CHECK((hinv.dagger() * Mat2::diag(0.0, 1.0) * hinv - p.pauli_dag).norm() /
                  p.pauli_dag.norm() <
              1e-12);
    }
    CHECK_THROWS_AS(boost_section(MomentumOnCone(FourVector{1, 0, 0, -1 + 1e-14})),
                    std::domain_error);
}

TEST_CASE("little group factor lands in E(2) and carries the phase") {
    RandomSource rng(31);
    int used = 0;
    while (used < 200) {
        const Mat2 a = rng.sl2_moderate(0.5);
        const MomentumOnCone p(rng.cone_point());
        const FourVector q = lorentz_act(a.inverse(), p.p);
        if (on_singular_ray(q, 1e-3)) continue;
        ++used;
        const Mat2 l = little_group_factor(a, p);
        CHECK(std::abs(l.c) / l.norm() < 1e-12);
        CHECK(std::abs(std::abs(l.d) - 1.0) < 1e-12);
        CHECK(std::abs(wigner_phase(a, p) - l.d) < 1e-12);
    }
    const MomentumOnCone p(FourVector{std::sqrt(0.04 + 0.16 + 1.44), 0.2, -0.4, 1.2});
    CHECK((little_group_factor(Mat2::identity(), p) - Mat2::identity()).norm() < 1e-13);
    CHECK(std::abs(wigner_phase(Mat2::identity(), p) - c64(1.0)) < 1e-14);
}

TEST_CASE("phase cocycle") {
    RandomSource rng(37);
    int used = 0;
    while (used < 200) {
        const Mat2 a1 = rng.sl2_moderate(0.5), a2 = rng.sl2_moderate(0.5);
        const MomentumOnCone p(rng.cone_point());
        const FourVector q1 = lorentz_act(a1.inverse(), p.p);
        if (on_singular_ray(q1, 1e-3) ||
            on_singular_ray(lorentz_act((a1 * a2).inverse(), p.p), 1e-3))
            continue;
        ++used;
        const c64 lhs = wigner_phase(a1 * a2, p);
        const c64 rhs = wigner_phase(a1, p) * wigner_phase(a2, MomentumOnCone(q1));
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("wigner action: identity, translations, composition") {
    const ConeFunction chi = scalar_cone_function(
        [](const MomentumOnCone& p) { return std::exp(-p.p.x0) * c64(1.0, 0.2 * p.p.x3); });
    const MomentumOnCone p(FourVector{1.1, 0.3, -0.2, std::sqrt(1.1 * 1.1 - 0.13)});

    const PoincareElement id;
    CHECK(std::abs(wigner_act(id, chi, 2, Sign::plus)(p)[0] - chi(p)[0]) < 1e-15);

    const FourVector a{0.4, -0.7, 0.2, 0.1};
    const PoincareElement trans(Mat2::identity(), a);
    const c64 moved = wigner_act(trans, chi, 1, Sign::minus)(p)[0];
    CHECK(std::abs(moved - std::polar(1.0, -minkowski_dot(p.p, a)) * chi(p)[0]) < 1e-14);

    RandomSource rng(41);
    for (int i = 0; i < 50; ++i) {
        const PoincareElement g1(rng.sl2_moderate(0.4), rng.four_vector(0.5));
        const PoincareElement g2(rng.sl2_moderate(0.4), rng.four_vector(0.5));
        const MomentumOnCone q(rng.cone_point());
        for (Sign s : {Sign::plus, Sign::minus}) {
            const c64 u12 = wigner_act(g1 * g2, chi, 2, s)(q)[0];
            const c64 u1u2 = wigner_act(g1, wigner_act(g2, chi, 2, s), 2, s)(q)[0];
            CHECK(std::abs(u12 - u1u2) / std::abs(u12) < 1e-12);
        }
    }
}

TEST_CASE("canonical actions: variants, dimension checks, invariant pairing") {
    ConeFunction phi;
    phi.dim = 2;
    phi.eval = [](const MomentumOnCone& p) {
        CVector v(2);
        v[0] = std::exp(-p.p.x0);
        v[1] = c64(0.2, 0.4) * std::exp(-0.7 * p.p.x0) * p.p.x1;
        return v;
    };
    const MomentumOnCone p(FourVector{0.9, 0.5, 0.1, std::sqrt(0.81 - 0.26)});
    const PoincareElement id;
    for (int variant = 1; variant <= 4; ++variant) {
        const CVector v = canonical_V_act(id, phi, variant, 1)(p);
        CHECK(std::abs(v[0] - phi(p)[0]) < 1e-15);
    }
    CHECK_THROWS_AS(canonical_V_act(id, phi, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(canonical_V_act(id, phi, 1, 2), std::invalid_argument);

    // n = 0 reduces to the translation character
    ConeFunction scal = scalar_cone_function(
        [](const MomentumOnCone& q) { return c64(std::exp(-q.p.x0)); });
    const FourVector a{0.3, 0.1, 0.0, -0.2};
    const PoincareElement trans(Mat2::identity(), a);
    CHECK(std::abs(canonical_V_act(trans, scal, 3, 0)(p)[0] -
                   std::polar(1.0, minkowski_dot(p.p, a)) * scal(p)[0]) < 1e-14);

    RandomSource rng(43);
    for (int i = 0; i < 50; ++i) {
        const PoincareElement g(rng.sl2_moderate(0.4), rng.four_vector(0.5));
        const MomentumOnCone q(rng.cone_point());
        const MomentumOnCone qq(lorentz_act(g.a.inverse(), q.p));
        const ConeFunction v1phi = canonical_V_act(g, phi, 1, 1);
        const c64 lhs = dot(v1phi(q), beta(q.p, 1, Sign::plus).matrix * v1phi(q));
        const c64 rhs = dot(phi(qq), beta(qq.p, 1, Sign::plus).matrix * phi(qq));
        CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-11);
    }
}

TEST_CASE("covariant action: supports shift and the catalog is closed") {
    GaussianPacket pk;
    pk.center = {0.1, 0.3, -0.2, 0.0};
    pk.width = 0.8;
    pk.momentum_shift = {0.2, 0.0, 0.1, -0.3};
    pk.polarization = CVector{1.0, c64(0.0, 0.5)};
    const TestFunction f = make_gaussian_packet(1, pk);

    const FourVector a{1.0, -0.5, 0.2, 0.7};
    const PoincareElement trans(Mat2::identity(), a);
    const TestFunction tf = covariant_act(trans, f);
    RandomSource rng(47);
    for (int i = 0; i < 30; ++i) {
        const FourVector x = rng.four_vector(1.0);
        const CVector lhs = tf.evaluate(x + a);
        const CVector rhs = f.evaluate(x);
        CHECK(std::abs(lhs[0] - rhs[0]) < 1e-13);
        CHECK(std::abs(lhs[1] - rhs[1]) < 1e-13);
    }

    // composition at sampled points, with a D(A) dressing in the game
    const PoincareElement g1(rng.sl2_moderate(0.4), rng.four_vector(0.6));
    const PoincareElement g2(rng.sl2_moderate(0.4), rng.four_vector(0.6));
    const TestFunction lhs = covariant_act(g1 * g2, f);
    const TestFunction rhs = covariant_act(g1, covariant_act(g2, f));
    for (int i = 0; i < 30; ++i) {
        const FourVector x = rng.four_vector(1.0);
        const CVector dl = lhs.evaluate(x), dr = rhs.evaluate(x);
        double dn = 0.0, dd = 0.0;
        for (std::size_t k = 0; k < dl.size(); ++k) {
            dn += std::norm(dl[k] - dr[k]);
            dd += std::norm(dl[k]);
        }
        if (dd > 1e-20) CHECK(std::sqrt(dn / dd) < 1e-11);
    }
}

TEST_CASE("poincare group operations") {
    RandomSource rng(53);
    for (int i = 0; i < 50; ++i) {
        const PoincareElement g(rng.sl2(), rng.four_vector(1.0));
        const PoincareElement e = g * g.inverse();
        CHECK((e.a - Mat2::identity()).norm() < 1e-12);
        CHECK(std::abs(e.translation.x0) + std::abs(e.translation.x1) +
                  std::abs(e.translation.x2) + std::abs(e.translation.x3) <
              1e-11);
    }
}

TEST_CASE("wigner phase is undefined where the denominator vanishes") {
    const Mat2 flip{0.0, 1.0, -1.0, 0.0};
    const MomentumOnCone phat(FourVector{1, 0, 0, 1});
    CHECK_THROWS_AS(wigner_phase(flip, phat), std::domain_error);
}
