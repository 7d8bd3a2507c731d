#pragma once

#include "mfn/spinalg.hpp"
#include "mfn/testfunc.hpp"

#include <functional>

// Covering Poincare group SL(2,C) x R^4, the Lorentz action via Pauli
// conjugation, the boost section H_p over the cone, and the covariant and
// canonical representation actions.

namespace mfn {

struct PoincareElement {
    Mat2 a = Mat2::identity();  // SL(2,C) part
    FourVector translation;

    PoincareElement() = default;
    PoincareElement(const Mat2& A, const FourVector& t) : a(A), translation(t) {
        if (std::abs(a.det() - c64(1.0)) > 1e-10)
            throw std::invalid_argument("PoincareElement: det A must be 1");
    }

    PoincareElement operator*(const PoincareElement& o) const;
    PoincareElement inverse() const;
};

// A cone point with its cached Pauli images.
struct MomentumOnCone {
    FourVector p;
    Mat2 pauli;         // P
    Mat2 pauli_dag;     // P^dag

    explicit MomentumOnCone(const FourVector& q) : p(q) {
        require_on_cone(q);
        pauli = pauli_embed(q);
        pauli_dag = mfn::pauli_dagger(q);
    }
};

struct ConeFunction {
    std::size_t dim = 1;
    std::function<CVector(const MomentumOnCone&)> eval;

    CVector operator()(const MomentumOnCone& p) const { return eval(p); }
};

ConeFunction scalar_cone_function(std::function<c64(const MomentumOnCone&)> f);

FourVector lorentz_act(const Mat2& a, const FourVector& x);

// H_p with H_p diag(2,0) H_p^* = P and det H_p = 1; domain excludes the
// singular ray p3 = -p0.
Mat2 boost_section(const MomentumOnCone& p);

// H_p^{-1} A H_q with q = Lambda_A^{-1} p; lands in E(2).
Mat2 little_group_factor(const Mat2& a, const MomentumOnCone& p);

// e^{-i theta(A,p)/2} as a unit complex number (the (2,2) entry of the little
// group factor), evaluated in closed form.
c64 wigner_phase(const Mat2& a, const MomentumOnCone& p);

// Canonical massless representation U_{+-}(g) of helicity +-n/2 on scalar
// cone functions.
ConeFunction wigner_act(const PoincareElement& g, const ConeFunction& phi, int n, Sign sign);

// The four fibrewise actions on C^{n+1}-valued cone functions:
//   1: e^{-ipa} D^{(0,n/2)}(A) phi(q)     3: e^{+ipa} D^{(0,n/2)}(A) phi(q)
//   2: e^{-ipa} D^{(n/2,0)}(A) phi(q)     4: e^{+ipa} D^{(n/2,0)}(A) phi(q)
ConeFunction canonical_V_act(const PoincareElement& g, const ConeFunction& phi, int variant, int n);

// Covariant representation (T(g) f)(x) = D^{(0,n/2)}(A) f(Lambda^{-1}(x-a));
// closed over the Gaussian-packet catalog.
TestFunction covariant_act(const PoincareElement& g, const TestFunction& f);

}  // namespace mfn
