#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfn/freenet.hpp"
#include "mfn/random.hpp"

using namespace mfn;

namespace {

TestFunction packet(int n, double width, const FourVector& center, const FourVector& shift,
                    int flavor = 0) {
    GaussianPacket p;
    p.width = width;
    p.center = center;
    p.momentum_shift = shift;
    p.polarization = CVector(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        p.polarization[static_cast<std::size_t>(i)] = c64(1.0 - 0.15 * i, 0.2 * (i + flavor));
    return make_gaussian_packet(n, p);
}

}  // namespace

TEST_CASE("transforms: gaussian closed form against a direct position sum") {
    const TestFunction f = packet(1, 0.9, {0.1, -0.2, 0.3, 0.0}, {0.3, 0.1, 0.0, -0.2});
    const PositionSum ps = hermite_position_sum(f, {0.1, -0.2, 0.3, 0.0}, 0.95, 20);
    for (const FourVector p :
         {FourVector{0, 0, 0, 0}, FourVector{0.8, 0.2, -0.3, 0.4}, FourVector{1.5, 0, 0, 1.5}}) {
        const CVector closed = fourier_value(f, p);
        const CVector direct = ps.transform(p);
        const double scale = std::sqrt(std::norm(closed[0]) + std::norm(closed[1]));
        CHECK(std::abs(closed[0] - direct[0]) / scale < 2e-7);
        CHECK(std::abs(closed[1] - direct[1]) / scale < 2e-7);
    }
}

TEST_CASE("transforms: shift law and conjugation symmetry") {
    const TestFunction f = packet(0, 0.8, {0, 0, 0, 0}, {0, 0, 0, 0});
    const FourVector a{0.7, -0.3, 0.2, 0.1};
    const TestFunction fa = covariant_act(PoincareElement(Mat2::identity(), a), f);
    const FourVector p{1.2, 0.4, -0.1, 0.6};
    const c64 lhs = fourier_value(fa, p)[0];
    const c64 rhs = std::polar(1.0, -minkowski_dot(p, a)) * fourier_value(f, p)[0];
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
    // real scalar function: fhat(-p) = conj fhat(p)
    const c64 fp = fourier_value(f, p)[0];
    const c64 fm = fourier_value(f, -p)[0];
    CHECK(std::abs(fm - std::conj(fp)) < 1e-12 * std::abs(fp));
}

TEST_CASE("transforms: bump table against the exact window product") {
    LatticeBump b;
    b.center = {0.1, 0.2, -0.1, 0.0};
    b.half_widths = {1.0, 1.2, 0.9, 1.1};
    b.polarization = CVector{1.0};
    const TestFunction f = make_lattice_bump(0, b);
    const c64 peak = bump_transform_closed(f, FourVector{})[0];
    RandomSource rng(103);
    for (int i = 0; i < 60; ++i) {
        const FourVector p = rng.four_vector(1.5);
        const c64 exact = bump_transform_closed(f, p)[0];
        const c64 table = fourier_value(f, p)[0];
        CHECK(std::abs(exact - table) / std::abs(peak) < 2e-4);
    }
    // compact support in position space
    CHECK(f.evaluate({0.1, 1.5, 0.0, 0.0}).norm() == 0.0);
    CHECK(f.evaluate({0.1, 0.2, -0.1, 0.0}).norm() > 0.0);
}

TEST_CASE("embed_In: shapes, parity, finite norms") {
    const QuadratureGrid grid = QuadratureGrid::build(24, 14, 0.5);
    const TestFunction f0 = packet(0, 0.8, {0, 0.1, 0, 0}, {0.2, 0, 0, 0});
    const EmbedImage img0 = embed_In(f0, 0);
    CHECK(img0.parts.size() == 2);
    CHECK(!img0.fermi);
    CHECK(image_norm(img0, grid) > 0.0);

    const TestFunction f1 = packet(1, 0.8, {0, 0, 0.1, 0}, {0, 0.2, 0, 0});
    const EmbedImage img1 = embed_In(f1, 1);
    CHECK(img1.parts.size() == 4);
    CHECK(img1.fermi);
    CHECK(image_norm(img1, grid) > 0.0);

    // minus parts are the conjugated transforms at the opposite momentum
    const TransformPair tp = make_transform(f1);
    const MomentumOnCone p(FourVector{0.9, 0.3, -0.2, std::sqrt(0.81 - 0.13)});
    const CVector expect = tp.at_minus_p(p).conj();
    const CVector got = img1.parts[1].rep(p);
    CHECK(std::abs(expect[0] - got[0]) + std::abs(expect[1] - got[1]) < 1e-13);

    CHECK_THROWS_AS(embed_In(f1, 0), std::invalid_argument);
}

TEST_CASE("sigma_n: antisymmetric, gated, invariant under the fibrewise action") {
    const QuadratureGrid grid = QuadratureGrid::build(40, 18, 0.35);
    const int n = 2;
    const EmbedImage a = embed_In(packet(n, 0.8, {0.1, -0.1, 0.2, 0.0}, {0.3, 0.1, 0, -0.2}), n);
    const EmbedImage b =
        embed_In(packet(n, 0.9, {0.0, 0.2, 0.0, -0.1}, {0.0, -0.3, 0.2, 0.0}, 1), n);
    const double norm_ab = image_norm(a, grid) * image_norm(b, grid);

    CHECK(std::abs(sigma_n(a, a, grid)) / (image_norm(a, grid) * image_norm(a, grid)) < 1e-13);
    CHECK(std::abs(sigma_n(a, b, grid) + sigma_n(b, a, grid)) / norm_ab < 1e-13);

    const PoincareElement g(Mat2::diag(std::exp(0.15), std::exp(-0.15)),
                            FourVector{0.2, -0.1, 0.1, 0.2});
    const double before = sigma_n(a, b, grid);
    const double after = sigma_n(embed_act_poincare(g, a), embed_act_poincare(g, b), grid);
    CHECK(std::abs(after - before) / norm_ab < 1e-9);

    const int nf = 1;
    const EmbedImage fa = embed_In(packet(nf, 0.8, {0, 0, 0, 0}, {0, 0, 0, 0}), nf);
    CHECK_THROWS_AS(sigma_n(fa, fa, grid), std::invalid_argument);
}

TEST_CASE("gamma_n: involution, antiunitarity, intertwining, gating") {
    const QuadratureGrid grid = QuadratureGrid::build(28, 14, 0.5);
    const int n = 1;
    const EmbedImage a = embed_In(packet(n, 0.8, {0.1, 0.0, -0.1, 0.0}, {0.2, 0.1, 0, 0}), n);
    const EmbedImage b =
        embed_In(packet(n, 0.7, {0.0, 0.15, 0.0, 0.1}, {0.0, -0.2, 0.1, 0.0}, 2), n);

    const EmbedImage gga = gamma_n(gamma_n(a));
    EmbedImage diff = a;
    for (std::size_t i = 0; i < diff.parts.size(); ++i)
        diff.parts[i].rep = cone_add(gga.parts[i].rep, a.parts[i].rep, c64(-1.0));
    CHECK(image_norm(diff, grid) / image_norm(a, grid) < 1e-13);

    const c64 lhs = image_pairing(gamma_n(a), gamma_n(b), grid);
    const c64 rhs = image_pairing(b, a, grid);
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-11);

    const PoincareElement g(Mat2::diag(std::exp(0.2), std::exp(-0.2)),
                            FourVector{0.1, 0.2, -0.1, 0.0});
    const EmbedImage l2 = gamma_n(embed_act_poincare(g, a));
    const EmbedImage r2 = embed_act_poincare(g, gamma_n(a));
    EmbedImage d2 = l2;
    for (std::size_t i = 0; i < d2.parts.size(); ++i)
        d2.parts[i].rep = cone_add(l2.parts[i].rep, r2.parts[i].rep, c64(-1.0));
    CHECK(image_norm(d2, grid) / image_norm(l2, grid) < 1e-12);

    const EmbedImage even = embed_In(packet(2, 0.8, {0, 0, 0, 0}, {0, 0, 0, 0}), 2);
    CHECK_THROWS_AS(gamma_n(even), std::invalid_argument);
}

TEST_CASE("intertwiner residuals over representative group elements") {
    const QuadratureGrid grid = QuadratureGrid::build_finite(14, 14, 3.5);
    const TestFunction f = packet(1, 0.8, {0.1, -0.1, 0.2, 0.0}, {0.3, 0.1, 0.0, -0.2});

    const PoincareElement tr(Mat2::identity(), {0.7, 0, 0, 0});
    CHECK(intertwiner_check(tr, f, 1, grid) < 1e-12);
    const PoincareElement boost(Mat2::diag(std::exp(0.25), std::exp(-0.25)), FourVector{});
    CHECK(intertwiner_check(boost, f, 1, grid) < 1e-12);
    const PoincareElement id;
    CHECK(intertwiner_check(id, f, 1, grid) < 1e-14);

    CHECK(intertwiner_check_dilation(std::sqrt(1.5), f, 1, grid) < 1e-12);

    const QuadratureGrid grid_sc = QuadratureGrid::build_finite(5, 6, 2.2);
    CHECK(intertwiner_check_special_conformal(Mat2::diag(0.05, -0.025), f, 1, grid_sc, 14) <
          1e-5);
}

TEST_CASE("double cone geometry") {
    const Region r1{{0, 0, 0, 0}, 1.0};
    CHECK(spacelike_separated(r1, Region{{0, 5, 0, 0}, 1.0}));
    CHECK(!spacelike_separated(r1, Region{{5, 0, 0, 0}, 1.0}));
    CHECK(!spacelike_separated(r1, r1));
    CHECK(r1.contains({0.3, 0.3, 0.2, 0.1}));
    CHECK(!r1.contains({0.8, 0.5, 0, 0}));

    const RegionImage same =
        region_transform(ConformalElement::from_matrix(CMatrix::identity(4)), r1);
    CHECK(same.regular);
    CHECK(std::abs(same.region.center.x0) < 1e-12);

    const ConformalElement shift = embed_poincare(Mat2::identity(), {0.0, 2.0, 0.0, 0.0});
    const RegionImage moved = region_transform(shift, r1);
    CHECK(moved.regular);
    CHECK(std::abs(moved.region.center.x1 - 2.0) < 1e-12);
    CHECK(std::abs(moved.region.radius - 1.05 * 1.0) < 1e-9);

    const RegionImage flagged =
        region_transform(special_conformal_element(Mat2::diag(3.0, 3.0)), r1);
    CHECK(!flagged.regular);
}

TEST_CASE("causality residuals vanish at spacelike separation and not across the cone") {
    const QuadratureGrid grid = QuadratureGrid::build_finite(32, 24, 9.0);
    for (int n : {0, 1}) {
        LatticeBump bf;
        bf.center = {0, 0, 0, 0};
        bf.polarization = CVector(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) bf.polarization[static_cast<std::size_t>(i)] = c64(1.0, 0.2 * i);
        LatticeBump bs = bf;
        bs.center = {0, 5, 0, 0};
        LatticeBump bt = bf;
        bt.center = {2, 0, 0, 0};
        const TestFunction f = make_lattice_bump(n, bf);
        const TestFunction hs = make_lattice_bump(n, bs);
        const TestFunction ht = make_lattice_bump(n, bt);
        const double rs = causality_check(f, hs, n, grid);
        const double rt = causality_check(f, ht, n, grid);
        CHECK(rs < 2e-3);
        CHECK(rt > 10.0 * rs);
    }
}

TEST_CASE("fock two-point function: positivity, invariance, projection") {
    const QuadratureGrid grid = QuadratureGrid::build_finite(14, 14, 3.5);
    const int n = 1;
    const TestFunction f = packet(n, 0.8, {0.1, 0, 0.1, 0}, {0.2, 0, 0, 0});
    const TestFunction h = packet(n, 0.9, {0, 0.1, 0, 0.1}, {0, 0.2, 0, 0}, 1);

    const c64 diag = fock_two_point(f, f, n, grid);
    CHECK(std::real(diag) > 0.0);
    CHECK(std::abs(std::imag(diag)) / std::abs(diag) < 1e-12);

    const PoincareElement tr(Mat2::identity(), {0.5, -0.2, 0.3, 0.1});
    const c64 moved = fock_two_point(covariant_act(tr, f), covariant_act(tr, h), n, grid);
    const c64 fixed = fock_two_point(f, h, n, grid);
    CHECK(std::abs(moved - fixed) / std::abs(fixed) < 1e-11);

    // the value only reads the +p half of the quadruple
    const EmbedImage fa = embed_In(f, n);
    const EmbedImage ha = embed_In(h, n);
    c64 manual = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        manual += inner_beta(fa.parts[i].rep, ha.parts[i].rep, n, fa.parts[i].sign, grid);
    CHECK(std::abs(manual - fixed) < 1e-13 * std::abs(fixed));
}

TEST_CASE("fourier_on_cone exposes the transform pair on actual cone momenta") {
    const TestFunction f = packet(1, 0.8, {0.1, 0.0, -0.1, 0.0}, {0.2, 0.0, 0.1, 0.0});
    const TransformPair tp = fourier_on_cone(f);
    const MomentumOnCone p(FourVector{1.0, 0.4, 0.2, std::sqrt(1.0 - 0.2)});
    const CVector a = tp.at_p(p);
    const CVector b = fourier_value(f, p.p);
    const CVector c = tp.at_minus_p(p);
    const CVector d = fourier_value(f, -p.p);
    CHECK(std::abs(a[0] - b[0]) + std::abs(a[1] - b[1]) < 1e-14);
    CHECK(std::abs(c[0] - d[0]) + std::abs(c[1] - d[1]) < 1e-14);
}
