#pragma once

#include "mfn/conformal.hpp"

// Free-net layer: embeddings of test functions into the factor spaces, the
// symplectic/Hermitian structures of the Bose and Fermi reference spaces,
// double-cone geometry, and the residuals feeding the net-axiom checks.

namespace mfn {

struct Region {
    // double cone: |x_vec - c_vec| + |x0 - c0| < radius
    FourVector center;
    double radius = 1.0;

    bool contains(const FourVector& x) const {
        const FourVector d = x - center;
        return d.spatial_norm() + std::abs(d.x0) <= radius;
    }
};

struct EmbedImage {
    int n = 0;
    bool fermi = false;
    // Bose: {+, -} at p; Fermi: {+, -} at p followed by {+, -} at -p
    std::vector<FactorVector> parts;
};

// Pointwise conjugation, exchanging the beta_+ and beta_- spaces.
ConeFunction gamma0_cone(const ConeFunction& f);

// (fhat at p, fhat at -p) restricted to cone nodes.
TransformPair fourier_on_cone(const TestFunction& f, const TransformOptions& opt = {});

EmbedImage embed_In(const TestFunction& f, int n, const TransformOptions& opt = {});

// Squared h_n norm and the associated complex pairing (sum of the beta
// pairings of matching parts).
c64 image_pairing(const EmbedImage& a, const EmbedImage& b, const QuadratureGrid& grid);
double image_norm(const EmbedImage& a, const QuadratureGrid& grid);

// Bose symplectic form Im<.,.>_{beta_+} + Im<.,.>_{beta_-}; rejects odd n.
double sigma_n(const EmbedImage& a, const EmbedImage& b, const QuadratureGrid& grid);

// Fermi antiunitary involution; rejects even n.
EmbedImage gamma_n(const EmbedImage& a);

// Fibrewise Poincare action V_1'+V_2' (Bose) or V_1'..V_4' (Fermi).
EmbedImage embed_act_poincare(const PoincareElement& g, const EmbedImage& img);

// Dilation x -> s x acting on the momentum side: phi(p) -> s^{1+n/2} phi(sp).
EmbedImage embed_act_dilation(double s, const EmbedImage& img);

// Relative residuals of the intertwining between the position-space action
// and the momentum-side action, measured in the h_n norm on the grid.
double intertwiner_check(const PoincareElement& g, const TestFunction& f, int n,
                         const QuadratureGrid& grid, const TransformOptions& opt = {});
double intertwiner_check_dilation(double lambda, const TestFunction& f, int n,
                                  const QuadratureGrid& grid, const TransformOptions& opt = {});
// Two independent quadrature routes: the honest transform of t0_act(g, f)
// against the transported phase integral over the original support.
double intertwiner_check_special_conformal(const Mat2& c, const TestFunction& f, int n,
                                           const QuadratureGrid& grid, int axis_order = 10);

struct RegionImage {
    Region region;   // bounding double cone of the sampled images
    bool regular = true;
};
RegionImage region_transform(const ConformalElement& g, const Region& r);

bool spacelike_separated(const Region& r1, const Region& r2);

// |sigma_n| (Bose) or |<I f, I h>_{h_n}| (Fermi), normalized by the norms.
double causality_check(const TestFunction& f, const TestFunction& h, int n,
                       const QuadratureGrid& grid, const TransformOptions& opt = {});

// One-particle Fock pairing: Bose via the internal complexification, Fermi
// via the basis projection onto the first half of the quadruple.
c64 fock_two_point(const TestFunction& f, const TestFunction& h, int n,
                   const QuadratureGrid& grid, const TransformOptions& opt = {});

}  // namespace mfn
