#include "mfn/linalg.hpp"

#include <algorithm>

namespace mfn {

c64 CMatrix::det() const {
    if (r_ != c_) throw std::invalid_argument("det: not square");
    CMatrix lu = *this;
    const std::size_t n = r_;
    c64 d = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(lu(i, k)) > best) {
                best = std::abs(lu(i, k));
                piv = i;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            d = -d;
        }
        d *= lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const c64 f = lu(i, k) / lu(k, k);
            for (std::size_t j = k; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return d;
}

CMatrix CMatrix::inverse() const {
    if (r_ != c_) throw std::invalid_argument("inverse: not square");
    const std::size_t n = r_;
    CMatrix a = *this;
    CMatrix inv = CMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > best) {
                best = std::abs(a(i, k));
                piv = i;
            }
        }
        if (best < 1e-300) throw std::domain_error("CMatrix: singular matrix");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(piv, j));
                std::swap(inv(k, j), inv(piv, j));
            }
        }
        const c64 pv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= pv;
            inv(k, j) /= pv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const c64 f = a(i, k);
            if (f == c64(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const c64 aij = a(i, j);
            if (aij == c64(0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return m;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigenvalues: not square");
    const std::size_t n = m.rows();
    CMatrix a = (m + m.adjoint()) * 0.5;  // symmetrize roundoff

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (off < 1e-30) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const c64 apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double app = std::real(a(p, p));
                const double aqq = std::real(a(q, q));
                // strip the phase of a(p,q), then rotate as in the real case:
                // V = diag(1, e^{-i phi}) . [[c, s], [-s, c]]
                const double phi = std::arg(apq);
                const double theta = 0.5 * std::atan2(-2.0 * std::abs(apq), app - aqq);
                const double cth = std::cos(theta), sth = std::sin(theta);
                const c64 eim = std::polar(1.0, -phi);
                for (std::size_t i = 0; i < n; ++i) {
                    const c64 aip = a(i, p), aiq = a(i, q);
                    a(i, p) = cth * aip - sth * eim * aiq;
                    a(i, q) = sth * aip + cth * eim * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const c64 apj = a(p, j), aqj = a(q, j);
                    a(p, j) = cth * apj - sth * std::conj(eim) * aqj;
                    a(q, j) = sth * apj + cth * std::conj(eim) * aqj;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = std::real(a(i, i));
    std::sort(ev.begin(), ev.end());
    return ev;
}

QuadRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

namespace {

// orthonormal Hermite functions psi_k = H_k e^{-t^2/2} / sqrt(2^k k! sqrt(pi))
void hermite_functions(int n, double t, double& pn, double& pnm1) {
    double p0 = std::pow(kPi, -0.25) * std::exp(-0.5 * t * t);
    if (n == 0) { pn = p0; pnm1 = 0.0; return; }
    double p1 = std::sqrt(2.0) * t * p0;
    for (int k = 1; k < n; ++k) {
        const double p2 = std::sqrt(2.0 / (k + 1.0)) * t * p1 - std::sqrt(k / (k + 1.0)) * p0;
        p0 = p1;
        p1 = p2;
    }
    pn = p1;
    pnm1 = p0;
}

// Laguerre recurrence scaled by e^{-x/2}; avoids overflow for large nodes.
void scaled_laguerre(int n, double x, double& ln, double& lnm1) {
    double l0 = std::exp(-0.5 * x);
    double l1 = (1.0 - x) * std::exp(-0.5 * x);
    if (n == 0) { ln = l0; lnm1 = 0.0; return; }
    for (int k = 1; k < n; ++k) {
        const double l2 = ((2.0 * k + 1.0 - x) * l1 - k * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    ln = l1;
    lnm1 = l0;
}

}  // namespace

QuadRule gauss_hermite_unit_weight(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    double t = 0.0;
    for (int i = 0; i < m; ++i) {
        // guesses descending from the largest root
        if (i == 0) {
            t = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            t -= 1.14 * std::pow(static_cast<double>(n), 0.426) / t;
        } else if (i == 2) {
            t = 1.86 * t - 0.86 * rule.nodes[0];
        } else if (i == 3) {
            t = 1.91 * t - 0.91 * rule.nodes[1];
        } else {
            t = 2.0 * t - rule.nodes[i - 2];
        }
        for (int iter = 0; iter < 200; ++iter) {
            double pn, pnm1;
            hermite_functions(n, t, pn, pnm1);
            const double deriv = std::sqrt(2.0 * n) * pnm1 - t * pn;
            const double dt = pn / deriv;
            t -= dt;
            if (std::abs(dt) < 1e-14 * std::max(1.0, std::abs(t))) break;
        }
        double pn, pnm1;
        hermite_functions(n, t, pn, pnm1);
        // w e^{t^2} = 1 / (n psi_{n-1}(t)^2)
        const double w = 1.0 / (n * pnm1 * pnm1);
        rule.nodes[i] = t;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = -t;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

QuadRule gauss_laguerre_unit_weight(int n) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: order must be >= 1");
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    double x = 0.0;
    for (int i = 0; i < n; ++i) {
        // Stroud/Secrest style initial guesses
        if (i == 0) {
            x = 3.0 / (1.0 + 2.4 * n);
        } else if (i == 1) {
            x += 15.0 / (1.0 + 2.5 * n);
        } else {
            const double ai = i - 1;
            x += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (x - rule.nodes[i - 2]);
        }
        for (int iter = 0; iter < 200; ++iter) {
            double ln, lnm1;
            scaled_laguerre(n, x, ln, lnm1);
            const double deriv = n * (ln - lnm1) / x;  // (L_n' e^{-x/2}) + L_n e^{-x/2}/2 folded below
            // Newton on L_n: L_n'/L_n = n (L_n - L_{n-1}) / (x L_n)
            const double dx = ln / deriv;
            x -= dx;
            if (std::abs(dx) < 1e-14 * std::max(1.0, x)) break;
        }
        rule.nodes[i] = x;
        double lnp1, lnn;
        scaled_laguerre(n + 1, x, lnp1, lnn);
        // w e^{x} = x / ((n+1)^2 (L_{n+1} e^{-x/2})^2)
        rule.weights[i] = x / ((n + 1.0) * (n + 1.0) * lnp1 * lnp1);
    }
    return rule;
}

}  // namespace mfn
