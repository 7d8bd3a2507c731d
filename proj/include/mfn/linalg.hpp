#pragma once

#include <complex>
#include <vector>
#include <array>
#include <cstddef>
#include <cmath>
#include <stdexcept>

// Small dense complex linear algebra used throughout: a fixed 2x2 type for
// Pauli/SL(2,C) calculus, a dynamic matrix for symmetric powers and 4x4
// conformal elements, a Jacobi eigensolver for Hermitian matrices, and the
// deterministic pairwise reductions the quadrature code relies on.

namespace mfn {

using c64 = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;

// ---------------------------------------------------------------------------
// 2x2 complex matrices

struct Mat2 {
    c64 a{0.0}, b{0.0}, c{0.0}, d{0.0};  // [[a, b], [c, d]]

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }
    static Mat2 diag(c64 x, c64 y) { return {x, 0.0, 0.0, y}; }

    c64 det() const { return a * d - b * c; }
    c64 trace() const { return a + d; }

    Mat2 transpose() const { return {a, c, b, d}; }
    Mat2 conj() const { return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)}; }
    Mat2 dagger() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }
    // adj(M) = det(M) * inv(M); always defined
    Mat2 adjugate() const { return {d, -b, -c, a}; }

    Mat2 inverse() const {
        const c64 dt = det();
        if (std::abs(dt) < 1e-300) throw std::domain_error("Mat2: singular matrix");
        const c64 s = 1.0 / dt;
        return {d * s, -b * s, -c * s, a * s};
    }

    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator*(c64 s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }

    std::array<c64, 2> apply(const std::array<c64, 2>& v) const {
        return {a * v[0] + b * v[1], c * v[0] + d * v[1]};
    }

    double norm() const {
        return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
    }
    bool is_hermitian(double tol = 1e-12) const { return (*this - dagger()).norm() <= tol; }
};

inline Mat2 operator*(c64 s, const Mat2& m) { return m * s; }
inline Mat2 operator*(double s, const Mat2& m) { return m * s; }

inline c64 trace_prod(const Mat2& x, const Mat2& y) {
    // Tr(x*y) without forming the product
    return x.a * y.a + x.b * y.c + x.c * y.b + x.d * y.d;
}

// Eigenvalues of a Hermitian 2x2, ascending.
inline std::array<double, 2> herm2_eigenvalues(const Mat2& m) {
    const double t = std::real(m.trace());
    const double dt = std::real(m.det());
    const double disc = std::sqrt(std::max(0.0, t * t / 4.0 - dt));
    return {t / 2.0 - disc, t / 2.0 + disc};
}

// ---------------------------------------------------------------------------
// Dynamic complex vectors / matrices (small sizes: spinor spaces, 4x4 blocks)

class CVector {
  public:
    CVector() = default;
    explicit CVector(std::size_t n) : v_(n) {}
    CVector(std::initializer_list<c64> init) : v_(init) {}

    std::size_t size() const { return v_.size(); }
    c64& operator[](std::size_t i) { return v_[i]; }
    const c64& operator[](std::size_t i) const { return v_[i]; }
    c64* data() { return v_.data(); }
    const c64* data() const { return v_.data(); }

    CVector& operator+=(const CVector& o) {
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    CVector& operator-=(const CVector& o) {
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    CVector& operator*=(c64 s) {
        for (auto& x : v_) x *= s;
        return *this;
    }
    CVector operator+(const CVector& o) const { CVector r = *this; r += o; return r; }
    CVector operator-(const CVector& o) const { CVector r = *this; r -= o; return r; }
    CVector operator*(c64 s) const { CVector r = *this; r *= s; return r; }

    CVector conj() const {
        CVector r(size());
        for (std::size_t i = 0; i < v_.size(); ++i) r[i] = std::conj(v_[i]);
        return r;
    }

    double norm() const {
        double s = 0.0;
        for (const auto& x : v_) s += std::norm(x);
        return std::sqrt(s);
    }

  private:
    std::vector<c64> v_;
};

inline CVector operator*(c64 s, const CVector& v) { return v * s; }

// <u, v> antilinear in the first slot
inline c64 dot(const CVector& u, const CVector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dot: size mismatch");
    c64 s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), v_(rows * cols) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static CMatrix from_mat2(const Mat2& m) {
        CMatrix r(2, 2);
        r(0, 0) = m.a; r(0, 1) = m.b; r(1, 0) = m.c; r(1, 1) = m.d;
        return r;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    c64& operator()(std::size_t i, std::size_t j) { return v_[i * c_ + j]; }
    const c64& operator()(std::size_t i, std::size_t j) const { return v_[i * c_ + j]; }

    CMatrix operator+(const CMatrix& o) const {
        check_same(o);
        CMatrix m = *this;
        for (std::size_t i = 0; i < v_.size(); ++i) m.v_[i] += o.v_[i];
        return m;
    }
    CMatrix operator-(const CMatrix& o) const {
        check_same(o);
        CMatrix m = *this;
        for (std::size_t i = 0; i < v_.size(); ++i) m.v_[i] -= o.v_[i];
        return m;
    }
    CMatrix operator*(c64 s) const {
        CMatrix m = *this;
        for (auto& x : m.v_) x *= s;
        return m;
    }
    CMatrix operator*(double s) const { return (*this) * c64(s); }

    CMatrix operator*(const CMatrix& o) const {
        if (c_ != o.r_) throw std::invalid_argument("CMatrix: incompatible product");
        CMatrix m(r_, o.c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const c64 aik = (*this)(i, k);
                if (aik == c64(0.0)) continue;
                for (std::size_t j = 0; j < o.c_; ++j) m(i, j) += aik * o(k, j);
            }
        return m;
    }

    CVector operator*(const CVector& x) const {
        if (c_ != x.size()) throw std::invalid_argument("CMatrix: incompatible apply");
        CVector y(r_);
        for (std::size_t i = 0; i < r_; ++i) {
            c64 s = 0.0;
            for (std::size_t j = 0; j < c_; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    CMatrix transpose() const {
        CMatrix m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    CMatrix conj() const {
        CMatrix m = *this;
        for (auto& x : m.v_) x = std::conj(x);
        return m;
    }
    CMatrix adjoint() const { return conj().transpose(); }

    c64 trace() const {
        c64 s = 0.0;
        for (std::size_t i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
        return s;
    }

    double norm() const {
        double s = 0.0;
        for (const auto& x : v_) s += std::norm(x);
        return std::sqrt(s);
    }

    c64 det() const;
    CMatrix inverse() const;

  private:
    void check_same(const CMatrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("CMatrix: shape mismatch");
    }
    std::size_t r_ = 0, c_ = 0;
    std::vector<c64> v_;
};

inline CMatrix operator*(c64 s, const CMatrix& m) { return m * s; }
inline CMatrix operator*(double s, const CMatrix& m) { return m * s; }

CMatrix kron(const CMatrix& a, const CMatrix& b);

// Eigenvalues (ascending) of a Hermitian matrix by cyclic complex Jacobi.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

// ---------------------------------------------------------------------------
// Deterministic reductions

// Pairwise (tree) summation; fixed association independent of chunking.
template <typename T>
T pairwise_sum(const std::vector<T>& xs) {
    if (xs.empty()) return T{};
    std::vector<T> buf = xs;
    std::size_t n = buf.size();
    while (n > 1) {
        std::size_t half = n / 2;
        for (std::size_t i = 0; i < half; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
        if (n % 2 == 1) {
            buf[half] = buf[n - 1];
            n = half + 1;
        } else {
            n = half;
        }
    }
    return buf[0];
}

// ---------------------------------------------------------------------------
// Gauss rules

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1].
QuadRule gauss_legendre(int n);

// Gauss-Laguerre with the exponential factor folded into the weights, so that
// integral_0^inf g(r) dr ~= sum_i w_i g(x_i) for g decaying at least like e^{-x}.
QuadRule gauss_laguerre_unit_weight(int n);

// Gauss-Hermite with the Gaussian factor folded into the weights:
// integral_R g(t) dt ~= sum_i w_i g(t_i) for g decaying at least like e^{-t^2}.
QuadRule gauss_hermite_unit_weight(int n);

}  // namespace mfn
