#pragma once

#include "mfn/poincare.hpp"

#include <map>
#include <string>

// Quadrature over the cone mantle with the invariant measure
// d mu_0 = d^3p / (2 p_0) = (r/2) dr dOmega, the beta sesquilinear forms,
// the pointwise range/null splitting, and the L^2 -> factor-space isometry.

namespace mfn {

struct GridNode {
    MomentumOnCone p;
    double weight;
};

enum class RadialRule { laguerre, legendre };

class QuadratureGrid {
  public:
    // Radial Gauss-Laguerre tuned to decay e^{-r/scale}, product rule on S^2
    // (Gauss-Legendre in cos(theta) x uniform midpoint azimuth). Node
    // placement keeps every node off the ray omega = (0,0,-1).
    static QuadratureGrid build(int radial_order, int angular_order, double radial_scale = 1.0);

    // Finite radial interval [0, r_max] with Gauss-Legendre nodes; suited to
    // transforms that are resolved only up to a frequency cutoff.
    static QuadratureGrid build_finite(int radial_order, int angular_order, double r_max);

    const std::vector<GridNode>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }

    c64 integrate(const std::function<c64(const MomentumOnCone&)>& f) const;

    // cached beta matrices per node
    const std::vector<CMatrix>& beta_cache(int n, Sign sign) const;
    void warm_beta_cache(int n) const;

    RadialRule radial_rule() const { return rule_; }
    int radial_order() const { return radial_order_; }
    int angular_order() const { return angular_order_; }
    double radial_scale() const { return radial_scale_; }
    double radial_cut() const { return radial_cut_; }
    std::string descriptor() const;

  private:
    std::vector<GridNode> nodes_;
    RadialRule rule_ = RadialRule::laguerre;
    int radial_order_ = 0;
    int angular_order_ = 0;
    double radial_scale_ = 1.0;
    double radial_cut_ = 0.0;  // r_max for the finite rule, 0 = unbounded
    mutable std::map<std::pair<int, int>, std::vector<CMatrix>> beta_;
};

// Equivalence class modulo the beta null space, carried by a representative.
struct FactorVector {
    ConeFunction rep;
    int n = 0;
    Sign sign = Sign::plus;
};

// sum_k w_k < phi(p_k), beta_sign(p_k) psi(p_k) >, antilinear in phi.
c64 inner_beta(const ConeFunction& phi, const ConeFunction& psi, int n, Sign sign,
               const QuadratureGrid& grid);

// Pointwise splitting phi = range + null with range in the beta range line
// and beta . null = 0.
ConeFunction project_range(const ConeFunction& phi, int n, Sign sign);
ConeFunction project_null(const ConeFunction& phi, int n, Sign sign);

// The isometry L^2(mu_0) -> factor space: chi |-> Sym^n(conj H_p) e_n chi(p).
FactorVector phi_plus(const ConeFunction& chi, int n);

double factor_norm(const FactorVector& v, const QuadratureGrid& grid);
bool factor_equal(const FactorVector& a, const FactorVector& b, const QuadratureGrid& grid,
                  double tol_rel = 1e-8);

// coefficient vector of w^{(x) n} in the orthonormal symmetric basis
CVector sym_tensor_power(const std::array<c64, 2>& w, int n);

ConeFunction cone_add(const ConeFunction& a, const ConeFunction& b, c64 bcoef = 1.0);
ConeFunction cone_scale(const ConeFunction& a, c64 s);

}  // namespace mfn
