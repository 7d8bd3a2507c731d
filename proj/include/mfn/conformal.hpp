#pragma once

#include "mfn/conequad.hpp"
#include "mfn/transforms.hpp"

#include <optional>

// SU(2,2) calculus: the forward-tube action, the matrix cocycle J and its
// holomorphic extension modes, reproducing kernels (quadrature-normative and
// closed-form), the extended unitary action on kernel points, and the
// y-regularized embeddings with their position-space counterpart T_0.

namespace mfn {

class ConformalElement {
  public:
    static ConformalElement from_matrix(const CMatrix& m, double tol = 1e-8);

    const CMatrix& matrix() const { return m_; }
    Mat2 block(int i) const;  // 1..4 row-major 2x2 blocks

    ConformalElement operator*(const ConformalElement& o) const;
    ConformalElement inverse() const;  // zeta g^* zeta^{-1}

  private:
    CMatrix m_ = CMatrix::identity(4);
};

struct TubePoint {
    Mat2 x, y;  // Z = X + iY with X, Y Hermitian and Y positive definite

    TubePoint() : x(Mat2::zero()), y(Mat2::identity()) {}
    TubePoint(const Mat2& X, const Mat2& Y);
    static TubePoint from_z(const Mat2& z);

    Mat2 z() const { return x + y * c64(0.0, 1.0); }
    Mat2 z_star() const { return x - y * c64(0.0, 1.0); }
    double min_y_eigenvalue() const { return herm2_eigenvalues(y)[0]; }
};

struct KernelPoint {
    TubePoint z;
    CVector v;
};

// Holomorphic continuation choices for D^{(0,n/2)} at non-Hermitian argument.
enum class ExtensionMode { conjugate, transpose, plain };

const char* extension_mode_name(ExtensionMode mode);

// max(|det g - 1|, ||g zeta g^* - zeta||_F)
double su22_residual(const CMatrix& g);

// [[A, B (A^*)^{-1}], [0, (A^*)^{-1}]] with B = pauli_embed(a);
// tube action reproduces Z -> A Z A^* + B.
ConformalElement embed_poincare(const Mat2& a, const FourVector& t);
ConformalElement dilation_element(double lambda);              // Z -> lambda^2 Z
ConformalElement special_conformal_element(const Mat2& c);     // [[1,0],[C,1]], C Hermitian
// Stabilizer of i*1: blocks [[A,B],[-B,A]] built from unitaries with
// det(u) det(v) = 1 via A = (u+v)/2, B = (u-v)/(2i).
ConformalElement k0_element(const Mat2& u, const Mat2& v);

// (A1 Z + A2)(A3 Z + A4)^{-1} on arbitrary complex 2x2 arguments.
Mat2 mobius_complex(const ConformalElement& g, const Mat2& z);
TubePoint tube_act(const ConformalElement& g, const TubePoint& z);

Mat2 cocycle_denominator(const ConformalElement& g, const Mat2& z);  // A3 Z + A4

// det(A3 Z + A4) * Sym^n(mode(A3 Z + A4)).
CMatrix cocycle_J_at(const ConformalElement& g, const Mat2& z, int n, ExtensionMode mode);
SpinOperator cocycle_J(const ConformalElement& g, const TubePoint& z, int n, ExtensionMode mode);

// Relative residual of the multiplier law. The conjugate and plain modes
// compose left-to-right, J(g1 g2, Z) = J(g1, g2 Z) J(g2, Z); the transpose
// mode composes in the reverse order.
double cocycle_law_residual(const ConformalElement& g1, const ConformalElement& g2,
                            const TubePoint& z, int n, ExtensionMode mode);

// det(A - iB) Sym^n(mode(A - iB)) for K0 elements; coincides with
// cocycle_J at i*1.
CMatrix tau_k0(const ConformalElement& k, int n, ExtensionMode mode);

// Normative kernel: integral of e^{i Tr(P^dag (Z1 - Z2^*))} beta_sign over
// the grid measure.
SpinOperator kernel_quadrature(const TubePoint& z1, const TubePoint& z2, int n, Sign sign,
                               const QuadratureGrid& grid);

// Radial Laguerre scale tuned to the pair's damping e^{-Tr(P^dag (Y1+Y2))},
// angular order tuned to the phase spread and the damping anisotropy.
QuadratureGrid adapted_kernel_grid(const TubePoint& z1, const TubePoint& z2, int radial_order,
                                   int angular_order);

// Same adaptation for a whole kernel point set (worst pair governs).
QuadratureGrid adapted_points_grid(const std::vector<KernelPoint>& points, int radial_order,
                                   int angular_order);

// Keeps kernel arguments inside the window the quadrature resolves.
bool tube_point_tame(const TubePoint& z, double x_max = 1.8, double y_min = 0.5,
                     double y_max = 2.0);

// Closed form c * det(W)^{-1} Sym^n(mode W)^{-1}, W = (Z1 - Z2^*)/(2i).
SpinOperator kernel_closed(const TubePoint& z1, const TubePoint& z2, int n, ExtensionMode mode,
                           double kernel_constant, Sign sign = Sign::plus);

// Least-squares constant of the weighted-moment identity
//   int e^{-Tr(P^dag Y)} beta_+ dmu = C_n det(Y)^{-1} Sym^n(conj Y)^{-1}
// over a fixed family of positive-definite Y; the orders of `grid` are kept
// and the radial scale is re-tuned to each Y.
struct MomentFit {
    double c_n = 0.0;
    double max_residual = 0.0;
};
MomentFit calibrate_Cn(int n, const QuadratureGrid& grid);

// Which side each J factor enters in the kernel transformation law.
enum class CovarianceSides { as_displayed, swapped };

struct CalibrationRecord {
    std::string measure_convention = "dmu0 = d^3p / (2 p0)";
    std::vector<int> degrees;
    std::vector<double> c_moment;          // per degree
    std::vector<double> c_kernel;        // per degree, kernel closed-form constant
    std::vector<double> moment_residual;   // per degree
    std::vector<double> kernel_residual; // per degree, winning mode
    ExtensionMode kernel_mode = ExtensionMode::transpose;
    CovarianceSides covariance_sides = CovarianceSides::swapped;
    ExtensionMode covariance_mode = ExtensionMode::transpose;
    double covariance_residual = 0.0;
    bool mode_unique = false;
    std::string grid_descriptor;
};

// Runs the moment-identity fits, the closed-form mode selection on complex sample
// pairs, and the covariance side/mode assignment; deterministic given seed.
CalibrationRecord calibrate_extension(const QuadratureGrid& grid, const std::vector<int>& degrees,
                                      std::uint64_t seed);

// Gram matrix <v_i, K_+(Z_i, Z_j) v_j> from the quadrature kernel.
CMatrix gram(const std::vector<KernelPoint>& points, int n, const QuadratureGrid& grid);

// W_1'(g): Z -> gZ with the vector dressed by the inverse transpose-mode
// cocycle taken at the conjugate point Z^*; unitary on kernel spans and
// equal to the fibrewise Poincare action on the subgroup.
KernelPoint w1_act(const ConformalElement& g, const KernelPoint& pt, int n);
CMatrix w1_dressing(const ConformalElement& g, const TubePoint& z, int n);

// y-regularized embedding: p -> e^{-Tr(P^dag Y)} fhat(p), Y = pauli_embed(y).
FactorVector embed_y(const TestFunction& f, const FourVector& y, int n,
                     const TransformOptions& opt = {});

// (T_0(g) f)(g x) = det(M)^3 Sym^n(M^t)^{-1} f(x), M = A3 X + A4; the scalar
// power combines the multiplier with the conformal Jacobian so that the
// Fourier transform intertwines with the unitary tube action.
TestFunction t0_act(const ConformalElement& g, const TestFunction& f, int n);

// Finite-y transport of (point, label, value) jets: the complex label moves
// by the tube action while the value is dressed at the conjugate label.
struct TyJet {
    FourVector point;
    Mat2 z_label;
    CVector value;
};
TyJet t_y_apply(const ConformalElement& g, const TyJet& jet, int n);
TyJet t_y_seed(const TestFunction& f, const FourVector& x, const FourVector& y);

}  // namespace mfn
