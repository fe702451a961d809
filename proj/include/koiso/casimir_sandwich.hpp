#pragma once

// Quadratic Casimir and sandwich operators of matrix Lie algebras, scalar
// eigenvalue extraction on invariant subspaces, and the root-system route
// (Freudenthal's formula) used to cross-validate the same constants.

#include "koiso/lie_structures.hpp"

#include <functional>
#include <optional>
#include <span>

namespace koiso {

/// Linear map on m x m matrices.
struct OperatorOnMatrices {
    int dim = 0;
    std::function<MatrixC(const MatrixC&)> apply;

    MatrixC operator()(const MatrixC& a) const { return apply(a); }
};

/// A scalar eigenvalue together with how far the operator is from acting as
/// that scalar on the subspace.
struct ScalarConstant {
    double value = 0.0;
    std::string subspace_label;
    double residual = 0.0;            // max_i |op(T_i) - value*T_i|
    double invariance_residual = 0.0; // max_i |op(T_i) - proj_target op(T_i)|
};

/// A -> -sum_i [X_i, [X_i, A]], the Casimir of span(basis) on End C^m.
[[nodiscard]] inline OperatorOnMatrices casimir_operator(const OrthonormalBasis& basis) {
    return {basis.ambient_dim(), [&basis](const MatrixC& a) {
                MatrixC out = MatrixC::Zero(a.rows(), a.cols());
                for (const auto& x : basis) {
                    const MatrixC inner = x * a - a * x;
                    out -= x * inner - inner * x;
                }
                return out;
            }};
}

/// S(A) = sum_i X_i A X_i.
[[nodiscard]] inline MatrixC sandwich_apply(const OrthonormalBasis& basis, const MatrixC& a) {
    detail::require_square(a, "sandwich_apply");
    if (a.rows() != basis.ambient_dim()) throw DimensionError("sandwich_apply: dimension mismatch");
    MatrixC out = MatrixC::Zero(a.rows(), a.cols());
    for (const auto& x : basis) out.noalias() += x * a * x;
    return out;
}

[[nodiscard]] inline OperatorOnMatrices sandwich_operator(const OrthonormalBasis& basis) {
    return {basis.ambient_dim(), [&basis](const MatrixC& a) { return sandwich_apply(basis, a); }};
}

/// Least-squares scalar of `op` on span(target).  Throws if the action is not
/// scalar within `tol` (relative to the scalar's size).
[[nodiscard]] inline ScalarConstant scalar_on_subspace(const OperatorOnMatrices& op, const OrthonormalBasis& target,
                                                       std::string label, double tol = 1e-9) {
    std::vector<MatrixC> images;
    images.reserve(static_cast<std::size_t>(target.size()));
    double num = 0.0, den = 0.0;
    for (const auto& t : target) {
        images.push_back(op(t));
        num += real_frobenius(t, images.back());
        den += real_frobenius(t, t);
    }
    ScalarConstant out;
    out.value = num / den;
    out.subspace_label = std::move(label);
    for (int i = 0; i < target.size(); ++i) {
        const auto& img = images[static_cast<std::size_t>(i)];
        out.residual = std::max(out.residual, (img - out.value * target[i]).norm());
        out.invariance_residual = std::max(out.invariance_residual, target.residual(img));
    }
    if (out.invariance_residual > tol * std::max(1.0, std::abs(out.value)))
        throw NumericalError("scalar_on_subspace: '" + out.subspace_label + "' is not invariant (residual " +
                             std::to_string(out.invariance_residual) + ")");
    if (out.residual > tol * std::max(1.0, std::abs(out.value)))
        throw NumericalError("scalar_on_subspace: action on '" + out.subspace_label + "' is not scalar (residual " +
                             std::to_string(out.residual) + ")");
    return out;
}

/// -sum_i X_i^2 on C^m, checked to be a multiple of the identity.
[[nodiscard]] inline ScalarConstant casimir_on_defining(const OrthonormalBasis& basis, double tol = 1e-9) {
    const int m = basis.ambient_dim();
    MatrixC cas = MatrixC::Zero(m, m);
    for (const auto& x : basis) cas.noalias() -= x * x;
    ScalarConstant out;
    out.value = cas.trace().real() / m;
    out.subspace_label = "C^" + std::to_string(m) + " under " + basis.label();
    out.residual = (cas - out.value * MatrixC::Identity(m, m)).cwiseAbs().maxCoeff();
    if (out.residual > tol * std::max(1.0, std::abs(out.value)))
        throw NumericalError("casimir_on_defining: not scalar on C^m for '" + basis.label() + "' (residual " +
                             std::to_string(out.residual) + ")");
    return out;
}

/// Eigenvalue of -sum_i ad(X_i)^2 (X_i from `acting`) on span(target).
[[nodiscard]] inline ScalarConstant casimir_on_subspace(const OrthonormalBasis& acting, const OrthonormalBasis& target,
                                                        double tol = 1e-9) {
    return scalar_on_subspace(casimir_operator(acting), target, "Cas[" + acting.label() + "] on " + target.label(),
                              tol);
}

/// Eigenvalue of A -> sum_i X_i A X_i (X_i from `acting`) on span(target).
/// Passing the complement basis as `acting` yields the partial operator.
[[nodiscard]] inline ScalarConstant sandwich_constant(const OrthonormalBasis& acting, const OrthonormalBasis& target,
                                                      double tol = 1e-9) {
    return scalar_on_subspace(sandwich_operator(acting), target, "S[" + acting.label() + "] on " + target.label(),
                              tol);
}

/// max over probes of |S(A) - 1/2 (Cas_End(A) - Cas_V A - A Cas_V)|.
[[nodiscard]] inline double sandwich_casimir_identity_check(const OrthonormalBasis& basis,
                                                            std::span<const MatrixC> probes) {
    const int m = basis.ambient_dim();
    MatrixC cas_v = MatrixC::Zero(m, m);
    for (const auto& x : basis) cas_v.noalias() -= x * x;
    const auto cas_end = casimir_operator(basis);
    double worst = 0.0;
    for (const auto& a : probes) {
        const MatrixC lhs = sandwich_apply(basis, a);
        const MatrixC rhs = 0.5 * (cas_end(a) - cas_v * a - a * cas_v);
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

/// -sum_i E_i^2 over the complement basis, on C^m.
[[nodiscard]] inline ScalarConstant partial_casimir_defining(const SymmetricPair& pair, double tol = 1e-9) {
    return casimir_on_defining(pair.m_basis, tol);
}

// ---------------------------------------------------------------------------
// Root systems

enum class RootSeries { A, B, C, D };

/// Root data of the concrete matrix realization.  Weights are coordinate
/// vectors of values on the explicit Cartan basis `cartan`; `dual_gram` is
/// the inverse of the Gram matrix -tr(H_j H_k), i.e. the inner product on
/// weights induced by minus the trace form.
struct RootSystemData {
    RootSeries series = RootSeries::A;
    int rank = 0;
    std::vector<VectorR> positive_roots;
    MatrixR dual_gram;
    VectorR rho;
    std::vector<MatrixC> cartan;

    [[nodiscard]] double inner(const VectorR& a, const VectorR& b) const { return a.dot(dual_gram * b); }
};

namespace detail {

inline RootSystemData finish_root_data(RootSeries series, std::vector<MatrixC> cartan, std::vector<VectorR> roots) {
    RootSystemData rd;
    rd.series = series;
    rd.rank = static_cast<int>(cartan.size());
    MatrixR gram(rd.rank, rd.rank);
    for (int j = 0; j < rd.rank; ++j)
        for (int k = 0; k < rd.rank; ++k)
            gram(j, k) = -trace_of_product(cartan[static_cast<std::size_t>(j)], cartan[static_cast<std::size_t>(k)])
                              .real();
    rd.dual_gram = gram.inverse();
    rd.rho = VectorR::Zero(rd.rank);
    for (const auto& a : roots) rd.rho += a;
    rd.rho *= 0.5;
    rd.positive_roots = std::move(roots);
    rd.cartan = std::move(cartan);
    return rd;
}

inline VectorR unit_weight(int rank, int j) {
    VectorR v = VectorR::Zero(rank);
    v(j) = 1.0;
    return v;
}

}  // namespace detail

/// su(m), series A_{m-1}.  Cartan basis H_j = i(e_jj - e_{j+1,j+1}); the
/// eigenvalue functional eps_a has coordinates delta_{aj} - delta_{a,j+1}.
[[nodiscard]] inline RootSystemData root_data_su(int m) {
    if (m < 2) throw std::invalid_argument("root_data_su: m must be >= 2");
    const int r = m - 1;
    std::vector<MatrixC> cartan;
    for (int j = 0; j < r; ++j) {
        MatrixC h = MatrixC::Zero(m, m);
        h(j, j) = kI;
        h(j + 1, j + 1) = -kI;
        cartan.push_back(std::move(h));
    }
    auto eps = [r](int a) {
        VectorR v = VectorR::Zero(r);
        if (a < r) v(a) += 1.0;
        if (a >= 1) v(a - 1) -= 1.0;
        return v;
    };
    std::vector<VectorR> roots;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) roots.push_back(eps(a) - eps(b));
    return detail::finish_root_data(RootSeries::A, std::move(cartan), std::move(roots));
}

/// so(n) inside su(n) as real antisymmetric matrices: B_r for odd n, D_r for
/// even n, r = floor(n/2).  Cartan basis H_j = e_{2j,2j+1} - e_{2j+1,2j}, so
/// weight coordinates are the usual eps-coordinates.
[[nodiscard]] inline RootSystemData root_data_so(int n) {
    if (n < 3) throw std::invalid_argument("root_data_so: n must be >= 3");
    const int r = n / 2;
    std::vector<MatrixC> cartan;
    for (int j = 0; j < r; ++j) {
        MatrixC h = MatrixC::Zero(n, n);
        h(2 * j, 2 * j + 1) = 1.0;
        h(2 * j + 1, 2 * j) = -1.0;
        cartan.push_back(std::move(h));
    }
    std::vector<VectorR> roots;
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) {
            roots.push_back(detail::unit_weight(r, a) - detail::unit_weight(r, b));
            roots.push_back(detail::unit_weight(r, a) + detail::unit_weight(r, b));
        }
    const bool odd = n % 2 == 1;
    if (odd)
        for (int a = 0; a < r; ++a) roots.push_back(detail::unit_weight(r, a));
    return detail::finish_root_data(odd ? RootSeries::B : RootSeries::D, std::move(cartan), std::move(roots));
}

/// sp(n) inside su(2n) (fixed by X -> J conj(X) J^{-1}), series C_n.  Cartan
/// basis H_j = i(e_jj - e_{n+j,n+j}).
[[nodiscard]] inline RootSystemData root_data_sp(int n) {
    if (n < 1) throw std::invalid_argument("root_data_sp: n must be >= 1");
    std::vector<MatrixC> cartan;
    for (int j = 0; j < n; ++j) {
        MatrixC h = MatrixC::Zero(2 * n, 2 * n);
        h(j, j) = kI;
        h(n + j, n + j) = -kI;
        cartan.push_back(std::move(h));
    }
    std::vector<VectorR> roots;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            roots.push_back(detail::unit_weight(n, a) - detail::unit_weight(n, b));
            roots.push_back(detail::unit_weight(n, a) + detail::unit_weight(n, b));
        }
    for (int a = 0; a < n; ++a) roots.push_back(2.0 * detail::unit_weight(n, a));
    return detail::finish_root_data(RootSeries::C, std::move(cartan), std::move(roots));
}

/// True if 2<lambda,alpha>/<alpha,alpha> is a nonnegative integer for every positive root.
[[nodiscard]] inline bool is_dominant_integral(const RootSystemData& rd, const VectorR& weight) {
    if (weight.size() != rd.rank) return false;
    for (const auto& a : rd.positive_roots) {
        const double pairing = 2.0 * rd.inner(weight, a) / rd.inner(a, a);
        if (pairing < -1e-9 || std::abs(pairing - std::round(pairing)) > 1e-9) return false;
    }
    return true;
}

/// Casimir eigenvalue <lambda + 2 rho, lambda> on the irreducible module of
/// highest weight lambda.
[[nodiscard]] inline double freudenthal_eigenvalue(const RootSystemData& rd, const VectorR& highest_weight) {
    if (!is_dominant_integral(rd, highest_weight))
        throw std::invalid_argument("freudenthal_eigenvalue: weight is not dominant integral");
    return rd.inner(highest_weight + 2.0 * rd.rho, highest_weight);
}

/// Highest weight of the defining module (C^m, R^n, C^{2n}): eps_1.
[[nodiscard]] inline VectorR defining_highest_weight(const RootSystemData& rd) {
    return detail::unit_weight(rd.rank, 0);
}

/// Highest root, i.e. the positive root of largest height <alpha, rho>.
[[nodiscard]] inline VectorR adjoint_highest_weight(const RootSystemData& rd) {
    const VectorR* best = &rd.positive_roots.front();
    double best_h = rd.inner(*best, rd.rho);
    for (const auto& a : rd.positive_roots) {
        const double h = rd.inner(a, rd.rho);
        if (h > best_h + 1e-12) {
            best = &a;
            best_h = h;
        }
    }
    return *best;
}

/// Highest weight of the complement m as a k-module: 2 eps_1 (Sym^2_0 R^n)
/// for so(n), eps_1 + eps_2 (Lambda^2_0 C^{2n}) for sp(n).
[[nodiscard]] inline VectorR complement_highest_weight(const Family& family, const RootSystemData& rd) {
    VectorR w = VectorR::Zero(rd.rank);
    if (family.tag == FamilyTag::AI) {
        w(0) = 2.0;
    } else {
        w(0) = 1.0;
        w(1) = 1.0;
    }
    return w;
}

// ---------------------------------------------------------------------------
// Constant tables

/// The Casimir and sandwich constants attached to a symmetric pair.
/// `s_x_y` is the sandwich operator summed over a basis of x, acting on y.
struct LieConstants {
    double cas_g_defining = 0.0;  // Cas^g on C^m
    double cas_g_adjoint = 0.0;   // Cas^g on g
    double cas_k_defining = 0.0;  // Cas^k on C^m
    double cas_k_k = 0.0;
    double cas_k_m = 0.0;
    double cas_m_defining = 0.0;  // partial Casimir Cas^m on C^m
    double s_g_g = 0.0;
    double s_k_k = 0.0;
    double s_k_m = 0.0;
    double s_m_k = 0.0;
    double s_m_m = 0.0;

    /// Name/value pairs in a fixed order, used by reports and comparisons.
    [[nodiscard]] std::vector<std::pair<std::string, double>> entries() const {
        return {{"cas_g_defining", cas_g_defining}, {"cas_g_adjoint", cas_g_adjoint},
                {"cas_k_defining", cas_k_defining}, {"cas_k_k", cas_k_k},
                {"cas_k_m", cas_k_m},               {"cas_m_defining", cas_m_defining},
                {"s_g_g", s_g_g},                   {"s_k_k", s_k_k},
                {"s_k_m", s_k_m},                   {"s_m_k", s_m_k},
                {"s_m_m", s_m_m}};
    }
};

/// All constants by direct operator evaluation on the pair's bases.
[[nodiscard]] inline LieConstants operator_constants(const SymmetricPair& pair, double tol = 1e-9) {
    LieConstants c;
    c.cas_g_defining = casimir_on_defining(pair.g_basis, tol).value;
    c.cas_g_adjoint = casimir_on_subspace(pair.g_basis, pair.g_basis, tol).value;
    c.cas_k_defining = casimir_on_defining(pair.k_basis, tol).value;
    c.cas_k_k = casimir_on_subspace(pair.k_basis, pair.k_basis, tol).value;
    c.cas_k_m = casimir_on_subspace(pair.k_basis, pair.m_basis, tol).value;
    c.cas_m_defining = partial_casimir_defining(pair, tol).value;
    c.s_g_g = sandwich_constant(pair.g_basis, pair.g_basis, tol).value;
    c.s_k_k = sandwich_constant(pair.k_basis, pair.k_basis, tol).value;
    c.s_k_m = sandwich_constant(pair.k_basis, pair.m_basis, tol).value;
    c.s_m_k = sandwich_constant(pair.m_basis, pair.k_basis, tol).value;
    c.s_m_m = sandwich_constant(pair.m_basis, pair.m_basis, tol).value;
    return c;
}

/// The same constants from highest weights alone: Casimirs by Freudenthal's
/// formula, sandwiches via S_W = Cas_W / 2 - Cas_V on an irreducible V.
[[nodiscard]] inline LieConstants freudenthal_constants(const Family& family) {
    const int m = family.ambient();
    const RootSystemData g = root_data_su(m);
    const RootSystemData k = family.tag == FamilyTag::AI ? root_data_so(family.n) : root_data_sp(family.n);
    LieConstants c;
    c.cas_g_defining = freudenthal_eigenvalue(g, defining_highest_weight(g));
    c.cas_g_adjoint = freudenthal_eigenvalue(g, adjoint_highest_weight(g));
    c.cas_k_defining = freudenthal_eigenvalue(k, defining_highest_weight(k));
    c.cas_k_k = freudenthal_eigenvalue(k, adjoint_highest_weight(k));
    c.cas_k_m = freudenthal_eigenvalue(k, complement_highest_weight(family, k));
    c.cas_m_defining = c.cas_g_defining - c.cas_k_defining;
    c.s_g_g = 0.5 * c.cas_g_adjoint - c.cas_g_defining;
    c.s_k_k = 0.5 * c.cas_k_k - c.cas_k_defining;
    c.s_k_m = 0.5 * c.cas_k_m - c.cas_k_defining;
    // S^m = S^g - S^k, and S^g acts on both k and m by its value on g.
    c.s_m_k = c.s_g_g - c.s_k_k;
    c.s_m_m = c.s_g_g - c.s_k_m;
    return c;
}

}  // namespace koiso
