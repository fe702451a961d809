#pragma once

// The variety Q = {X : X^2 = (tr X^2 / m) Id} of second-order integrable
// directions, its characterization as the critical set of P, and the
// resulting rigidity verdict.

#include "koiso/invariant_forms.hpp"

#include <limits>
#include <numbers>
#include <optional>

namespace koiso {

enum class Verdict { RIGID_SECOND_ORDER, PARTIAL_INTEGRABILITY };

[[nodiscard]] inline std::string_view to_string(Verdict v) {
    return v == Verdict::RIGID_SECOND_ORDER ? "RIGID_SECOND_ORDER" : "PARTIAL_INTEGRABILITY";
}

struct RigidityVerdict {
    Family family;
    int m = 0;
    double psi_coeff = 0.0;
    bool variety_trivial = false;
    Verdict verdict = Verdict::PARTIAL_INTEGRABILITY;
    std::optional<MatrixC> witness;
};

/// |X^2 - (tr X^2 / m) Id|_F <= tol.abs + tol.rel |X|^2.  The relative part
/// keeps the test scale-free, since the defect is quadratic in X.
[[nodiscard]] inline bool variety_membership(const MatrixC& x, Tolerance tol = {1e-9, 1e-9}) {
    detail::require_square(x, "variety_membership");
    const auto m = x.rows();
    const MatrixC x2 = x * x;
    const Complex c = x2.trace() / static_cast<double>(m);
    MatrixC defect = x2;
    defect.diagonal().array() -= c;
    return defect.norm() <= tol.abs + tol.rel * x.squaredNorm();
}

/// max_k |P(X, X, X_k)| < tol |X|^2 over the su(m) basis, i.e. X is a
/// critical point of the cubic P.
[[nodiscard]] inline bool criticality_check(const MatrixC& x, const OrthonormalBasis& basis, double tol = 1e-9) {
    detail::require_square(x, "criticality_check");
    if (x.rows() != basis.ambient_dim()) throw DimensionError("criticality_check: dimension mismatch");
    // P(X, X, K) = 2i tr(X^2 K), so one product serves every basis element.
    const MatrixC x2 = x * x;
    double worst = 0.0;
    for (const auto& k : basis) worst = std::max(worst, std::abs((2.0 * kI * trace_of_product(x2, k)).real()));
    return worst <= tol * std::max(x.squaredNorm(), std::numeric_limits<double>::min());
}

/// i diag(1,..,1,-1,..,-1)/sqrt(m) for even m; no nonzero member exists for odd m.
[[nodiscard]] inline std::optional<MatrixC> variety_witness(int m) {
    if (m < 2) throw std::invalid_argument("variety_witness: m must be >= 2");
    if (m % 2 != 0) return std::nullopt;
    MatrixC w = MatrixC::Zero(m, m);
    const double c = 1.0 / std::sqrt(static_cast<double>(m));
    for (int a = 0; a < m; ++a) w(a, a) = (a < m / 2 ? 1.0 : -1.0) * c * kI;
    return w;
}

/// For odd m, a member of the variety must vanish: X^2 = c Id with X
/// anti-Hermitian forces the eigenvalues of X into {+i sqrt(-c), -i sqrt(-c)},
/// and tr X = 0 then needs equal multiplicities.  Returns true iff X is
/// numerically zero; throws if a nonzero X is handed in as a member.
[[nodiscard]] inline bool odd_m_spectral_argument(const MatrixC& x, double tol = 1e-9) {
    detail::require_square(x, "odd_m_spectral_argument");
    const auto m = x.rows();
    if (m % 2 == 0) throw std::invalid_argument("odd_m_spectral_argument: m must be odd");
    if (x.norm() < tol) return true;
    if (!variety_membership(x)) return false;
    const double c = (x * x).trace().real() / static_cast<double>(m);
    const Eigen::SelfAdjointEigenSolver<MatrixC> es(-kI * x);
    const double radius = std::sqrt(std::max(-c, 0.0));
    Eigen::Index plus = 0, minus = 0;
    for (Eigen::Index i = 0; i < m; ++i) (es.eigenvalues()(i) > 0 ? plus : minus) += 1;
    throw NumericalError("odd_m_spectral_argument: nonzero variety member for odd m (spectrum +-" +
                         std::to_string(radius) + " with multiplicities " + std::to_string(plus) + "/" +
                         std::to_string(minus) + "); tolerance is misconfigured");
}

/// Third variation of the Einstein-Hilbert action along h, from Psi(h).
[[nodiscard]] constexpr double eh_third_variation(double psi_value) { return -0.5 * psi_value; }

/// Third variation of Perelman's nu-entropy along h, from Psi(h), on a
/// d-dimensional Einstein manifold with constant E > 0.
[[nodiscard]] inline double nu_third_variation(double psi_value, double einstein, int d) {
    if (!(einstein > 0.0)) throw std::invalid_argument("nu_third_variation: Einstein constant must be positive");
    if (d < 2) throw std::invalid_argument("nu_third_variation: dimension must be >= 2");
    const double half = 0.5 * d;
    return -std::pow(einstein, half) / (4.0 * einstein * std::pow(2.0 * std::numbers::pi, half)) * psi_value;
}

/// Combines an upstream Psi coefficient with the variety structure of su(m).
[[nodiscard]] inline RigidityVerdict rigidity_verdict(const Family& family, double psi_coeff,
                                                      double zero_tol = 1e-9) {
    RigidityVerdict v;
    v.family = family;
    v.m = family.ambient();
    v.psi_coeff = psi_coeff;
    v.witness = variety_witness(v.m);
    if (v.witness && !variety_membership(*v.witness))
        throw NumericalError("rigidity_verdict: constructed witness is not in the variety");
    v.variety_trivial = !v.witness.has_value();
    const bool nonzero = std::abs(psi_coeff) > zero_tol;
    v.verdict = nonzero && v.variety_trivial ? Verdict::RIGID_SECOND_ORDER : Verdict::PARTIAL_INTEGRABILITY;
    return v;
}

}  // namespace koiso
