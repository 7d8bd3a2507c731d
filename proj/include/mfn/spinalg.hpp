#pragma once

#include "mfn/linalg.hpp"

#include <array>
#include <utility>

// Pauli calculus on Minkowski space, symmetric-power representations of
// SL(2,C), and the positive semidefinite weight operators attached to points
// of the forward light cone.

namespace mfn {

// Relative tolerance classifying a four-vector as lying on the cone mantle.
constexpr double kConeTolerance = 1e-9;

struct FourVector {
    double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

    FourVector() = default;
    FourVector(double t, double x, double y, double z) : x0(t), x1(x), x2(y), x3(z) {}

    double minkowski_sq() const { return x0 * x0 - x1 * x1 - x2 * x2 - x3 * x3; }
    double spatial_norm() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }

    FourVector operator+(const FourVector& o) const {
        return {x0 + o.x0, x1 + o.x1, x2 + o.x2, x3 + o.x3};
    }
    FourVector operator-(const FourVector& o) const {
        return {x0 - o.x0, x1 - o.x1, x2 - o.x2, x3 - o.x3};
    }
    FourVector operator*(double s) const { return {x0 * s, x1 * s, x2 * s, x3 * s}; }
    FourVector operator-() const { return {-x0, -x1, -x2, -x3}; }
};

inline double minkowski_dot(const FourVector& p, const FourVector& x) {
    return p.x0 * x.x0 - p.x1 * x.x1 - p.x2 * x.x2 - p.x3 * x.x3;
}

// (2j, 2k) labels of the finite-dimensional representations; dimension
// (j_doubled+1)(k_doubled+1).
struct SpinLabel {
    int j_doubled = 0;
    int k_doubled = 0;

    SpinLabel() = default;
    SpinLabel(int j2, int k2) : j_doubled(j2), k_doubled(k2) {
        if (j2 < 0 || k2 < 0) throw std::invalid_argument("SpinLabel: negative index");
    }
    std::size_t dimension() const {
        return static_cast<std::size_t>(j_doubled + 1) * static_cast<std::size_t>(k_doubled + 1);
    }
};

struct SpinOperator {
    SpinLabel label;
    CMatrix matrix;
};

enum class Sign { plus, minus };

// P = p0*s0 + p1*s1 + p2*s2 + p3*s3
Mat2 pauli_embed(const FourVector& p);

// P^dag = (p0*s0 - p.sigma)/2; on the cone PSD with eigenvalues p0 and 0.
Mat2 pauli_dagger(const FourVector& p);

// Inverse of pauli_embed on Hermitian matrices.
FourVector pauli_unembed(const Mat2& P);

bool on_cone(const FourVector& p, double rel_tol = kConeTolerance);
void require_on_cone(const FourVector& p);
bool on_singular_ray(const FourVector& p, double rel_tol = 1e-9);

// Symmetric n-th power of a 2x2 matrix in the orthonormal monomial basis
// e1^{n-k} e2^k * sqrt(binom(n,k)). Multiplicative; commutes entrywise with
// conjugation, transposition and adjoints.
CMatrix sym_power(const Mat2& m, int n);

// D^{(j/2,k/2)}(A) = Sym^j(A) (x) Sym^k(conj A).
SpinOperator rep_D(const SpinLabel& label, const Mat2& a);

// beta_+ = Sym^n(conj P^dag), beta_- = Sym^n(P^dag); p must lie on the cone.
SpinOperator beta(const FourVector& p, int n, Sign sign);

// (eigenvector with eigenvalue p0, eigenvector with eigenvalue 0) of P^dag.
// Near the ray p1 = p2 = 0, p3 = +p0 the zero-eigenvector formula degenerates
// and the orthonormal completion of the p0-eigenvector is returned instead.
std::pair<std::array<c64, 2>, std::array<c64, 2>> null_eigenpair(const FourVector& p);

inline double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace mfn
