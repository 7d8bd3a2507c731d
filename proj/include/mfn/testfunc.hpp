#pragma once

#include "mfn/spinalg.hpp"

#include <memory>
#include <variant>

// Spinor-valued test functions on Minkowski space. Gaussian packets carry an
// SL(2,C) frame and a scale so that the Poincare group and the dilations act
// inside the catalog in closed form; lattice bumps are separable cosine
// tapers with compact support; Mobius images wrap a base function with the
// dressed pullback along a conformal transformation.

namespace mfn {

struct BoundingBox {
    std::array<double, 4> lo{}, hi{};

    bool contains(const FourVector& x, double slack = 0.0) const {
        const std::array<double, 4> c = {x.x0, x.x1, x.x2, x.x3};
        for (int i = 0; i < 4; ++i)
            if (c[i] < lo[i] - slack || c[i] > hi[i] + slack) return false;
        return true;
    }
};

struct GaussianPacket {
    FourVector center;
    double width = 1.0;
    FourVector momentum_shift;          // phase e^{i k.u} in the packet frame
    CVector polarization;               // dimension n+1
    Mat2 frame = Mat2::identity();      // SL(2,C) frame, composed by covariant_act
    c64 amplitude = 1.0;
    double cutoff_widths = 6.0;         // hard support cutoff, in units of width
};

struct LatticeBump {
    FourVector center;
    std::array<double, 4> half_widths = {1.0, 1.0, 1.0, 1.0};
    CVector polarization;
    int samples_per_axis = 32;
    int pad_factor = 64;                // zero padding of the axis transforms
};

struct TestFunction;

// Pullback of a base function along a conformal transformation, with the
// multiplier (including the Jacobian weight) applied pointwise. Built by
// t0_act; evaluation needs only the 2x2 block data stored here.
struct MobiusImage {
    std::shared_ptr<const TestFunction> base;
    // forward blocks of g and of g^{-1}
    Mat2 a1, a2, a3, a4;
    Mat2 i1, i2, i3, i4;
    int n = 0;
    BoundingBox box;  // bounding box of g . supp(base)
};

struct TestFunction {
    SpinLabel label;  // (0, n)
    std::variant<GaussianPacket, LatticeBump, MobiusImage> body;

    int degree() const { return label.k_doubled; }
    std::size_t dimension() const { return label.dimension(); }

    CVector evaluate(const FourVector& x) const;
    BoundingBox support_box() const;
};

TestFunction make_gaussian_packet(int n, const GaussianPacket& packet);
TestFunction make_lattice_bump(int n, const LatticeBump& bump);

// Componentwise complex conjugation of the target values (an antiunitary
// involution exchanging the (0,n/2) and (n/2,0) spinor spaces).
TestFunction gamma0(const TestFunction& f);

// Closed-form dilation action x -> s x with the helicity-n conformal weight
// s^{n/2 - 3}; exact on Gaussian packets.
TestFunction dilate_packet(const TestFunction& f, double s);

// Mobius transform of a real Minkowski point via 2x2 blocks; throws when the
// point is on the singular locus det(a3 X + a4) = 0.
FourVector mobius_point(const Mat2& a1, const Mat2& a2, const Mat2& a3, const Mat2& a4,
                        const FourVector& x);

// Hann taper transform: (1/2) int_{-1}^{1} (1+cos(pi t)) e^{-i nu t} dt.
double hann_transform(double nu);

// Midpoint-sampled axis transform of a 1d profile with linear interpolation
// in frequency; shared by the lattice-bump and lattice-Gaussian paths.
class AxisTransformTable {
  public:
    // samples of profile(t) on t in [-1, 1] (midpoint grid), scaled to the
    // axis half-width h and centered at c
    AxisTransformTable(std::vector<double> profile, double center, double half_width,
                       int pad_factor);

    // approximates int profile((u-c)/h) e^{-i nu u} du
    c64 operator()(double nu) const;

  private:
    double center_ = 0.0;
    double dnu_ = 0.0;
    std::vector<c64> table_;  // frequencies r * dnu_, r = 0 .. table_.size()-1
};

}  // namespace mfn
