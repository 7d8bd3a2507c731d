#pragma once

#include "mfn/conformal.hpp"

#include <random>

// Seeded sampling of group elements, cone points and tube points for the
// property suites. All draws go through one generator so that a suite's
// sample sequence is fixed by its seed.

namespace mfn {

class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(gen_);
    }
    double gaussian(double sigma = 1.0) {
        std::normal_distribution<double> d(0.0, sigma);
        return d(gen_);
    }
    c64 complex_gaussian(double sigma = 1.0) { return {gaussian(sigma), gaussian(sigma)}; }

    Mat2 sl2() {
        for (;;) {
            Mat2 m{complex_gaussian(), complex_gaussian(), complex_gaussian(), complex_gaussian()};
            const c64 dt = m.det();
            if (std::abs(dt) < 0.1) continue;
            const c64 s = 1.0 / std::sqrt(dt);
            return m * s;
        }
    }

    // moderate boosts/rotations: exp-free Cayley-style draw close to unity
    Mat2 sl2_moderate(double spread = 0.4) {
        Mat2 m = Mat2::identity();
        m.a += complex_gaussian(spread);
        m.b += complex_gaussian(spread);
        m.c += complex_gaussian(spread);
        m.d += complex_gaussian(spread);
        const c64 s = 1.0 / std::sqrt(m.det());
        return m * s;
    }

    Mat2 hermitian(double sigma = 1.0) {
        const double d1 = gaussian(sigma), d2 = gaussian(sigma);
        const c64 off = complex_gaussian(sigma);
        return {c64(d1, 0.0), off, std::conj(off), c64(d2, 0.0)};
    }

    Mat2 hermitian_pd(double base = 1.0, double sigma = 0.3) {
        const Mat2 h = hermitian(sigma);
        return h * h + Mat2::identity() * base;
    }

    Mat2 unitary() {
        // Cayley transform of a Hermitian matrix
        const Mat2 h = hermitian(0.8);
        const Mat2 num = Mat2::identity() + h * c64(0.0, 0.5);
        const Mat2 den = Mat2::identity() - h * c64(0.0, 0.5);
        return num * den.inverse();
    }

    FourVector cone_point(double rmin = 0.3, double rmax = 3.0) {
        for (;;) {
            const double r = uniform(rmin, rmax);
            const double u = uniform(-1.0, 1.0);
            if (u < -0.9) continue;  // stay clear of the singular ray
            const double phi = uniform(0.0, 2.0 * kPi);
            const double su = std::sqrt(1.0 - u * u);
            return {r, r * su * std::cos(phi), r * su * std::sin(phi), r * u};
        }
    }

    FourVector four_vector(double sigma = 1.0) {
        return {gaussian(sigma), gaussian(sigma), gaussian(sigma), gaussian(sigma)};
    }

    TubePoint tube_point(double xspread = 0.5, double ybase = 0.8, double yspread = 0.25) {
        return TubePoint(hermitian(xspread), hermitian_pd(ybase, yspread));
    }

    ConformalElement k0() {
        const Mat2 u = unitary();
        Mat2 v = unitary();
        v = v * std::sqrt(1.0 / (u.det() * v.det()));  // det(u) det(v) = 1
        return k0_element(u, v);
    }

    ConformalElement poincare_conformal(double spread = 0.4) {
        return embed_poincare(sl2_moderate(spread), four_vector(0.5));
    }

    // generic word in the generators, staying in the quasi-global regime
    ConformalElement su22(double sc_scale = 0.12) {
        ConformalElement g = poincare_conformal();
        g = g * special_conformal_element(hermitian(sc_scale));
        g = g * dilation_element(std::exp(gaussian(0.15)));
        g = g * k0();
        return g;
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace mfn
