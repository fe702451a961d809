#pragma once

// Dense complex matrix arithmetic shared by every other module: traces,
// anticommutators, the trace-form inner product and trace-free projection.
// All functions are pure; matrices are square Eigen::MatrixXcd.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace koiso {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using MatrixR = Eigen::MatrixXd;
using VectorR = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Raised when two operands disagree in shape.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical precondition fails (non-real trace, bad subspace, ...).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mixed absolute/relative comparison: |a-b| <= abs + rel*max(|a|,|b|).
struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-9;

    [[nodiscard]] bool close(double a, double b) const {
        return std::abs(a - b) <= abs + rel * std::max(std::abs(a), std::abs(b));
    }
    [[nodiscard]] bool small(double x, double scale = 0.0) const {
        return std::abs(x) <= abs + rel * std::abs(scale);
    }
    /// Default kernel tolerance for matrices of side m.
    static Tolerance for_dim(int m) { return {1e-9 * m, 1e-9}; }
};

namespace detail {

inline void require_square(const MatrixC& a, const char* what) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw DimensionError(std::string(what) + ": matrix must be square and nonempty");
}

inline void require_same(const MatrixC& a, const MatrixC& b, const char* what) {
    require_square(a, what);
    if (b.rows() != a.rows() || b.cols() != a.cols())
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.rows()) +
                             " vs " + std::to_string(b.rows()) + ")");
}

}  // namespace detail

[[nodiscard]] inline MatrixC identity(int m) { return MatrixC::Identity(m, m); }

[[nodiscard]] inline MatrixC commutator(const MatrixC& a, const MatrixC& b) {
    detail::require_same(a, b, "commutator");
    return a * b - b * a;
}

/// {A,B} = AB + BA.  The result is bitwise symmetric in A and B.
[[nodiscard]] inline MatrixC anticommutator(const MatrixC& a, const MatrixC& b) {
    detail::require_same(a, b, "anticommutator");
    MatrixC ab = a * b;
    MatrixC ba = b * a;
    // Summing in a fixed order of the two products keeps {A,B} == {B,A} exactly.
    return ab + ba;
}

/// tr(AB) without forming the product.
[[nodiscard]] inline Complex trace_of_product(const MatrixC& a, const MatrixC& b) {
    detail::require_same(a, b, "trace_of_product");
    // tr(AB) = sum_ij A_ij B_ji
    return (a.array() * b.transpose().array()).sum();
}

[[nodiscard]] inline bool is_anti_hermitian(const MatrixC& x, double tol) {
    if (x.rows() != x.cols()) return false;
    return (x + x.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

/// <X,Y> = -tr(XY) on anti-Hermitian matrices.  Throws if tr(XY) has an
/// imaginary part beyond tolerance, which signals non-anti-Hermitian input.
[[nodiscard]] inline double trace_inner_product(const MatrixC& x, const MatrixC& y, Tolerance tol) {
    detail::require_same(x, y, "trace_inner_product");
    const Complex t = trace_of_product(x, y);
    if (!tol.small(t.imag(), x.norm() * y.norm()))
        throw NumericalError("trace_inner_product: tr(XY) not real (imag = " + std::to_string(t.imag()) +
                             "); inputs are not anti-Hermitian");
    return -t.real();
}

[[nodiscard]] inline double trace_inner_product(const MatrixC& x, const MatrixC& y) {
    return trace_inner_product(x, y, Tolerance::for_dim(static_cast<int>(x.rows())));
}

/// Real Frobenius inner product Re tr(X^H Y).  Agrees with -tr(XY) on
/// anti-Hermitian inputs and is defined for arbitrary complex matrices.
[[nodiscard]] inline double real_frobenius(const MatrixC& x, const MatrixC& y) {
    return (x.real().array() * y.real().array()).sum() + (x.imag().array() * y.imag().array()).sum();
}

/// A - (tr A / m) Id.
[[nodiscard]] inline MatrixC tracefree_projection(const MatrixC& a) {
    detail::require_square(a, "tracefree_projection");
    const auto m = a.rows();
    MatrixC out = a;
    const Complex shift = a.trace() / static_cast<double>(m);
    out.diagonal().array() -= shift;
    return out;
}

/// Trace of the ordered product F_0 F_1 ... F_{k-1}.  For k > 2 the product of
/// the first k-1 factors is accumulated and contracted against the last one,
/// so the full product is never formed.
[[nodiscard]] inline Complex product_trace(std::span<const MatrixC> factors) {
    if (factors.empty()) throw std::invalid_argument("product_trace: empty factor list");
    for (const auto& f : factors) detail::require_same(factors.front(), f, "product_trace");
    if (factors.size() == 1) return factors.front().trace();
    MatrixC acc = factors.front();
    for (std::size_t i = 1; i + 1 < factors.size(); ++i) acc = acc * factors[i];
    return trace_of_product(acc, factors.back());
}

[[nodiscard]] inline Complex product_trace(std::initializer_list<MatrixC> factors) {
    const std::vector<MatrixC> v(factors);
    return product_trace(std::span<const MatrixC>(v));
}

/// Norm induced by minus the trace form (Frobenius norm).
[[nodiscard]] inline double trace_norm(const MatrixC& x) { return x.norm(); }

/// exp(X) for anti-Hermitian X via the spectral decomposition of the
/// Hermitian matrix -iX; the result is unitary to machine precision.
[[nodiscard]] inline MatrixC exp_anti_hermitian(const MatrixC& x) {
    detail::require_square(x, "exp_anti_hermitian");
    const MatrixC h = -kI * x;
    const MatrixC herm = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<MatrixC> es(herm);
    if (es.info() != Eigen::Success) throw NumericalError("exp_anti_hermitian: eigensolver failed");
    const Eigen::VectorXcd phases = (kI * es.eigenvalues().cast<Complex>()).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// Seeded splitmix64 stream.  Implemented here rather than through
/// <random> distributions so probe sequences are identical across standard
/// libraries.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : state_(seed) { mix(); }

    /// Uniform in [-1, 1).
    double symmetric_unit() { return 2.0 * unit() - 1.0; }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    void mix() { next(); }
    std::uint64_t state_;
};

/// Random element of su(m): entries uniform in [-1,1] (real and imaginary
/// parts), projected to the anti-Hermitian trace-free part.
[[nodiscard]] inline MatrixC random_su(int m, SplitRng& rng) {
    MatrixC a(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            const double re = rng.symmetric_unit();
            const double im = rng.symmetric_unit();
            a(r, c) = Complex(re, im);
        }
    return tracefree_projection(0.5 * (a - a.adjoint()));
}

/// Random special unitary matrix exp(Y), Y a random su(m) element.
[[nodiscard]] inline MatrixC random_special_unitary(int m, SplitRng& rng) {
    return exp_anti_hermitian(random_su(m, rng));
}

}  // namespace koiso
