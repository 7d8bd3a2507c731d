#pragma once

#include "mfn/conequad.hpp"
#include "mfn/testfunc.hpp"

// Fourier transforms of the test-function catalog restricted to the cone:
// closed forms for Gaussian packets, sampled axis transforms for lattice
// bumps, tensor position quadrature for Mobius images.

namespace mfn {

struct TransformOptions {
    int mobius_axis_order = 12;   // Gauss-Legendre order per axis for Mobius images
    int bump_pad_factor = 0;      // 0: take the pad factor stored in the bump
};

struct TransformPair {
    ConeFunction at_p;        // fhat(p)
    ConeFunction at_minus_p;  // fhat(-p)
};

// 4d tensor-product Gauss-Legendre discretization of f over its support box.
struct PositionSum {
    std::vector<FourVector> points;
    std::vector<CVector> weighted_values;  // quadrature weight times f(x)
    std::size_t dim = 1;

    CVector transform(const FourVector& p) const;  // sum w f(x) e^{-i p.x}
};

PositionSum position_sum(const TestFunction& f, int order_per_axis);

// Gauss-Hermite discretization around a Gaussian bulk at `center` with scale
// `width`; suited to packets and their conformal images.
PositionSum hermite_position_sum(const TestFunction& f, const FourVector& center, double width,
                                 int order_per_axis);

TransformPair make_transform(const TestFunction& f, const TransformOptions& opt = {});

// Transform value at a single real four-momentum (off-cone allowed).
CVector fourier_value(const TestFunction& f, const FourVector& p,
                      const TransformOptions& opt = {});

// Exact bump transform (product of Hann-window transforms); the oracle for
// the sampled path.
CVector bump_transform_closed(const TestFunction& f, const FourVector& p);

// Gaussian packet pushed through the lattice path (identity frame only);
// used to cross-check the closed form against the sampled transform.
TransformPair make_gaussian_lattice_transform(const TestFunction& f, int samples_per_axis,
                                              int pad_factor);

}  // namespace mfn
