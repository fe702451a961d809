#pragma once

// The invariant cubic form P(X) = 2i tr(X^3) on su(m), its restrictions to a
// Cartan decomposition, the trilinear form sigma on m, and the cubic
// polynomials Q, R_1..R_4 whose ratios to P_mmm / P_kkm define the
// obstruction constants.

#include "koiso/casimir_sandwich.hpp"

#include <array>
#include <cstdint>

namespace koiso {

// ---------------------------------------------------------------------------
// Cubic forms on su(m)

namespace detail {

inline void require_su(const MatrixC& x, const char* what) {
    detail::require_square(x, what);
    const double scale = std::max(1.0, x.norm());
    if (!is_anti_hermitian(x, 1e-9 * scale))
        throw NumericalError(std::string(what) + ": argument is not anti-Hermitian");
}

inline double real_checked(Complex v, double scale, const char* what) {
    if (std::abs(v.imag()) > 1e-9 * std::max(1.0, scale))
        throw NumericalError(std::string(what) + ": imaginary residual " + std::to_string(v.imag()));
    return v.real();
}

}  // namespace detail

/// P(X) = 2i tr(X^3).
[[nodiscard]] inline double cubic_P(const MatrixC& x) {
    detail::require_su(x, "cubic_P");
    const MatrixC x2 = x * x;
    const Complex v = 2.0 * kI * trace_of_product(x2, x);
    return detail::real_checked(v, std::pow(x.norm(), 3), "cubic_P");
}

/// P(X,Y,Z) = i tr({X,Y}Z), the polarization with P(X,X,X) = P(X).
[[nodiscard]] inline double polarized_P(const MatrixC& x, const MatrixC& y, const MatrixC& z) {
    detail::require_same(x, y, "polarized_P");
    detail::require_same(x, z, "polarized_P");
    const Complex v = kI * trace_of_product(anticommutator(x, y), z);
    return detail::real_checked(v, x.norm() * y.norm() * z.norm(), "polarized_P");
}

/// i^k tr(X^k), the degree-k generator of the invariant ring.
[[nodiscard]] inline double invariant_power(const MatrixC& x, int k) {
    detail::require_su(x, "invariant_power");
    if (k < 2 || k > x.rows()) throw std::invalid_argument("invariant_power: k must satisfy 2 <= k <= m");
    MatrixC acc = x;
    for (int i = 1; i + 1 < k; ++i) acc = acc * x;
    Complex ik{1.0, 0.0};
    for (int i = 0; i < k; ++i) ik *= kI;
    return detail::real_checked(ik * trace_of_product(acc, x), std::pow(x.norm(), k), "invariant_power");
}

/// The three pieces of P(Z) under Z = Z_k + Z_m.  The mixed kmm term of P
/// vanishes because {m,k} lies in ik, which is orthogonal to m.
struct RestrictedCubic {
    double p_mmm = 0.0;  // 2i tr(Z_m^3)
    double p_kkm = 0.0;  // 6i tr(Z_m Z_k^2)
    double p_kkk = 0.0;  // 2i tr(Z_k^3)
};

/// Orthogonal projections of Z onto k and m; throws if Z is not in their sum.
[[nodiscard]] inline std::pair<MatrixC, MatrixC> split_kernel_complement(const SymmetricPair& pair, const MatrixC& z) {
    detail::require_su(z, "split");
    MatrixC zk = pair.k_basis.project(z);
    MatrixC zm = pair.m_basis.project(z);
    const double gap = (z - zk - zm).norm();
    if (gap > 1e-9 * std::max(1.0, z.norm()))
        throw NumericalError("split: Z is not in k + m (residual " + std::to_string(gap) + ")");
    return {std::move(zk), std::move(zm)};
}

[[nodiscard]] inline RestrictedCubic restricted_components(const SymmetricPair& pair, const MatrixC& z) {
    const auto [zk, zm] = split_kernel_complement(pair, z);
    const double s3 = std::pow(z.norm(), 3);
    RestrictedCubic out;
    out.p_mmm = detail::real_checked(2.0 * kI * trace_of_product(zm * zm, zm), s3, "restricted_components");
    const MatrixC zk2 = zk * zk;
    out.p_kkm = detail::real_checked(6.0 * kI * trace_of_product(zm, zk2), s3, "restricted_components");
    out.p_kkk = detail::real_checked(2.0 * kI * trace_of_product(zk2, zk), s3, "restricted_components");
    return out;
}

// ---------------------------------------------------------------------------
// sigma tensors and brute-force norms

/// sigma(A, B, C) = i tr({A,B}C) tabulated over a basis.
struct SigmaTensor {
    Tensor3 values;
    double imag_residual = 0.0;  // largest Hermitian part of -i{A,B}, which must vanish

    [[nodiscard]] int dim() const { return values.dim(); }
    [[nodiscard]] double operator()(int a, int b, int c) const { return values(a, b, c); }

    /// max |sigma_abc - sigma_bac|, |sigma_abc - sigma_acb|.
    [[nodiscard]] double symmetry_defect() const {
        const int d = dim();
        double worst = 0.0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) {
                    const double v = values(a, b, c);
                    worst = std::max({worst, std::abs(v - values(b, a, c)), std::abs(v - values(a, c, b))});
                }
        return worst;
    }
};

namespace detail {

/// Coordinates of -i{L_a, L_b} against `target` for every pair a <= b,
/// handed to sink(a, b, c, value).  Returns the largest Hermitian part seen.
template <class Sink>
double anticommutator_coordinates(const OrthonormalBasis& left, const OrthonormalBasis& target, Sink&& sink) {
    const int d = left.size();
    double imag_residual = 0.0;
    std::vector<MatrixC> row;
    for (int a = 0; a < d; ++a) {
        row.clear();
        for (int b = a; b < d; ++b) {
            MatrixC w = -kI * anticommutator(left[a], left[b]);
            imag_residual = std::max(imag_residual, 0.5 * (w + w.adjoint()).norm());
            row.push_back(std::move(w));
        }
        const MatrixR coeff = target.coordinates(row);
        for (int b = a; b < d; ++b)
            for (int c = 0; c < target.size(); ++c) sink(a, b, c, coeff(c, b - a));
    }
    return imag_residual;
}

}  // namespace detail

/// sigma over an arbitrary basis (the m-basis of a pair, or all of su(m)).
[[nodiscard]] inline SigmaTensor sigma_tensor(const OrthonormalBasis& basis) {
    SigmaTensor s{Tensor3(basis.size()), 0.0};
    s.imag_residual = detail::anticommutator_coordinates(basis, basis, [&](int a, int b, int c, double v) {
        s.values(a, b, c) = v;
        s.values(b, a, c) = v;
    });
    return s;
}

[[nodiscard]] inline SigmaTensor sigma_tensor(const SymmetricPair& pair) { return sigma_tensor(pair.m_basis); }

/// |P|^2 = sum_{ijk} P(X_i, X_j, X_k)^2 over an orthonormal basis of su(m).
[[nodiscard]] inline double norm_P(int m) { return sigma_tensor(su_basis(m)).values.squared_norm(); }

/// |P_mmm|^2 and |P_kkm|^2, each computed from the Casimir/sandwich constants
/// and by brute-force contraction.
struct RestrictedNorms {
    double mmm_formula = 0.0;
    double kkm_formula = 0.0;
    double mmm_brute = 0.0;
    double kkm_brute = 0.0;

    [[nodiscard]] double mmm() const { return mmm_brute; }
    [[nodiscard]] double kkm() const { return kkm_brute; }
};

/// sum_{ijk} sigma(Y_i, Y_j, E_k)^2 with Y from k and E from m.
[[nodiscard]] inline double kkm_sigma_square_sum(const SymmetricPair& pair) {
    double total = 0.0;
    detail::anticommutator_coordinates(pair.k_basis, pair.m_basis, [&](int a, int b, int, double v) {
        total += (a == b ? 1.0 : 2.0) * v * v;
    });
    return total;
}

[[nodiscard]] inline RestrictedNorms norm_restricted(const SymmetricPair& pair, const LieConstants& c,
                                                     double rel_tol = 1e-7) {
    const double m = pair.m;
    RestrictedNorms out;
    out.mmm_formula = 2.0 * m * c.cas_m_defining * (-c.s_m_m + c.cas_m_defining - 2.0 / m);
    out.kkm_formula = 6.0 * m * c.cas_k_defining * (-c.s_k_k + c.cas_k_defining - 2.0 / m);
    out.mmm_brute = sigma_tensor(pair).values.squared_norm();
    out.kkm_brute = 3.0 * kkm_sigma_square_sum(pair);
    const Tolerance t{1e-12, rel_tol};
    if (!t.close(out.mmm_formula, out.mmm_brute) || !t.close(out.kkm_formula, out.kkm_brute))
        throw NumericalError("norm_restricted: constant formula and contraction disagree");
    return out;
}

[[nodiscard]] inline RestrictedNorms norm_restricted(const SymmetricPair& pair, double rel_tol = 1e-7) {
    return norm_restricted(pair, operator_constants(pair), rel_tol);
}

// ---------------------------------------------------------------------------
// Q and R_1..R_4

struct CubicEvaluation {
    double P_mmm = 0.0;
    double P_kkm = 0.0;
    double Q = 0.0;
    double R1 = 0.0;
    double R2 = 0.0;
    double R3 = 0.0;
    double R4 = 0.0;
    double R = 0.0;
    MatrixC at;
};

/// Evaluates Q and R_i at many points of one symmetric pair.  Everything is
/// expressed through sigma on the m-basis, the symmetric matrix
/// S_ij = sigma(Z_m, E_i, E_j) and the matrix A of ad(Z_k) on m
/// ([Z_k, E_i] = sum_p A_pi E_p).  With T_ikl = sum_p A_pi sigma_pkl,
///   Q  = tr(S^3)
///   R1 = sum S_ij T_ikl T_kjl
///   R2 = sum S_ij T_ikl T_jkl
///   R3 = sum S_ij sigma_ikl sigma_jkq (A^2)_ql
///   R4 = sum S_ij sigma_ikl (A^T sigma_j A)_kl
/// Each term is a handful of dim(m)^4 dense products.
class CubicKernel {
public:
    explicit CubicKernel(const SymmetricPair& pair) : pair_(&pair), sigma_(sigma_tensor(pair)) {}

    [[nodiscard]] const SigmaTensor& sigma() const { return sigma_; }
    [[nodiscard]] const SymmetricPair& pair() const { return *pair_; }

    [[nodiscard]] CubicEvaluation evaluate(const MatrixC& z) const {
        const auto& mb = pair_->m_basis;
        const int d = mb.size();
        const auto [zk, zm] = split_kernel_complement(*pair_, z);

        CubicEvaluation ev;
        ev.at = z;
        const double s3 = std::pow(z.norm(), 3);
        ev.P_mmm = detail::real_checked(2.0 * kI * trace_of_product(zm * zm, zm), s3, "CubicKernel");
        ev.P_kkm = detail::real_checked(6.0 * kI * trace_of_product(zm, zk * zk), s3, "CubicKernel");

        const VectorR zc = mb.coordinates(zm);
        const auto sig = sigma_.values.unfolded();  // d x d^2, row a, column b*d + c
        const MatrixR S = (zc.transpose() * sig).reshaped<Eigen::RowMajor>(d, d);

        std::vector<MatrixC> brackets;
        brackets.reserve(static_cast<std::size_t>(d));
        for (const auto& e : mb) brackets.push_back(zk * e - e * zk);
        const MatrixR A = mb.coordinates(brackets);  // column i = coords of [Z_k, E_i]

        ev.Q = (S * S * S).trace();

        // T as d x d^2 (row i, column k*d + l).
        using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
        const RowMat T = A.transpose() * sig;

        // R2: sum_ij S_ij (T T^T)_ij.
        const MatrixR TTt = T * T.transpose();
        ev.R2 = (S.array() * TTt.array()).sum();

        // R1: for fixed l, W_l(i,k) = T_ikl and sum_ij S_ij (W_l W_l)_ij.
        double r1 = 0.0;
        MatrixR W(d, d);
        for (int l = 0; l < d; ++l) {
            for (int i = 0; i < d; ++i)
                for (int k = 0; k < d; ++k) W(i, k) = T(i, k * d + l);
            r1 += (S.array() * (W * W).array()).sum();
        }
        ev.R1 = r1;

        // R3: V_(j,k),l = sum_q sigma_jkq (A^2)_ql, then N = sig V^T.
        const MatrixR A2 = A * A;
        const Eigen::Map<const RowMat> sig_jk_q(sigma_.values.data().data(), static_cast<Eigen::Index>(d) * d, d);
        const RowMat V = sig_jk_q * A2;  // d^2 x d, row j*d + k, column l
        const Eigen::Map<const RowMat> V_unf(V.data(), d, static_cast<Eigen::Index>(d) * d);
        const MatrixR N3 = sig * V_unf.transpose();
        ev.R3 = (S.array() * N3.array()).sum();

        // R4: X_j = A^T sigma_j A, then N = sig X^T.
        RowMat X(d, static_cast<Eigen::Index>(d) * d);
        for (int j = 0; j < d; ++j) {
            const Eigen::Map<const RowMat> sj(sigma_.values.data().data() + static_cast<std::size_t>(j) * d * d, d, d);
            const RowMat xj = A.transpose() * sj * A;
            X.row(j) = Eigen::Map<const Eigen::RowVectorXd>(xj.data(), static_cast<Eigen::Index>(d) * d);
        }
        const MatrixR N4 = sig * X.transpose();
        ev.R4 = (S.array() * N4.array()).sum();

        ev.R = 2.0 * ev.R1 - 2.0 * ev.R2 - 2.0 * ev.R3 + 2.0 * ev.R4;
        return ev;
    }

private:
    const SymmetricPair* pair_;
    SigmaTensor sigma_;
};

[[nodiscard]] inline CubicEvaluation eval_QR(const SymmetricPair& pair, const MatrixC& z) {
    return CubicKernel(pair).evaluate(z);
}

// ---------------------------------------------------------------------------
// Constant extraction

struct ObstructionConstants {
    double kappa = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double lambda4 = 0.0;
    double lambda = 0.0;          // R / P_kkm directly
    double lambda_via_13 = 0.0;   // 8 lambda1 - 4 lambda3
    double norm_P = 0.0;
    double norm_Pmmm = 0.0;
    double norm_Pkkm = 0.0;
    double psi_coeff = 0.0;
    double spread = 0.0;
    int probes_used = 0;
    int probes_rejected = 0;
};

/// Seeded probes Z in su(m), rejecting those where either restricted cubic is
/// below 0.01 |Z|^3.  Throws if `count` acceptable probes are not found.
[[nodiscard]] inline std::vector<MatrixC> conditioned_probes(const SymmetricPair& pair, std::uint64_t seed, int count,
                                                             int* rejected = nullptr) {
    SplitRng rng(seed);
    std::vector<MatrixC> out;
    int misses = 0;
    const int max_attempts = 100 * std::max(count, 1);
    for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count; ++attempt) {
        MatrixC z = random_su(pair.m, rng);
        const auto rc = restricted_components(pair, z);
        const double floor = 0.01 * std::pow(z.norm(), 3);
        if (std::abs(rc.p_mmm) < floor || std::abs(rc.p_kkm) < floor) {
            ++misses;
            continue;
        }
        out.push_back(std::move(z));
    }
    if (static_cast<int>(out.size()) < count)
        throw NumericalError("conditioned_probes: degenerate probe set (" + std::to_string(out.size()) + " of " +
                             std::to_string(count) + " accepted)");
    if (rejected) *rejected = misses;
    return out;
}

/// kappa, lambda_i, lambda as probe ratios Q/P_mmm and R_i/P_kkm, plus the
/// coefficient of P in the obstruction.  `spread_tol` gates the spread of
/// each ratio relative to max(1, |ratio|).
[[nodiscard]] inline ObstructionConstants extract_constants(const SymmetricPair& pair, std::uint64_t seed, int probes,
                                                            double spread_tol = 1e-8) {
    if (probes < 3) throw std::invalid_argument("extract_constants: at least 3 probes required");
    ObstructionConstants out;
    const auto zs = conditioned_probes(pair, seed, probes, &out.probes_rejected);
    out.probes_used = probes;

    const CubicKernel kernel(pair);
    std::array<std::vector<double>, 6> ratios;  // kappa, l1, l2, l3, l4, l
    for (const auto& z : zs) {
        const auto ev = kernel.evaluate(z);
        ratios[0].push_back(ev.Q / ev.P_mmm);
        ratios[1].push_back(ev.R1 / ev.P_kkm);
        ratios[2].push_back(ev.R2 / ev.P_kkm);
        ratios[3].push_back(ev.R3 / ev.P_kkm);
        ratios[4].push_back(ev.R4 / ev.P_kkm);
        ratios[5].push_back(ev.R / ev.P_kkm);
    }
    std::array<double, 6> mean{};
    double worst_relative = 0.0;
    for (std::size_t r = 0; r < ratios.size(); ++r) {
        const auto [lo, hi] = std::minmax_element(ratios[r].begin(), ratios[r].end());
        double sum = 0.0;
        for (double v : ratios[r]) sum += v;
        mean[r] = sum / static_cast<double>(ratios[r].size());
        out.spread = std::max(out.spread, *hi - *lo);
        worst_relative = std::max(worst_relative, (*hi - *lo) / std::max(1.0, std::abs(mean[r])));
    }
    if (worst_relative > spread_tol)
        throw NumericalError("extract_constants: probe ratios are not constant (relative spread " +
                             std::to_string(worst_relative) + ")");
    out.kappa = mean[0];
    out.lambda1 = mean[1];
    out.lambda2 = mean[2];
    out.lambda3 = mean[3];
    out.lambda4 = mean[4];
    out.lambda = mean[5];
    out.lambda_via_13 = 8.0 * out.lambda1 - 4.0 * out.lambda3;

    out.norm_Pmmm = kernel.sigma().values.squared_norm();
    out.norm_Pkkm = 3.0 * kkm_sigma_square_sum(pair);
    out.norm_P = norm_P(pair.m);
    out.psi_coeff =
        (-pair.einstein_constant * out.kappa * out.norm_Pmmm + 3.0 * out.lambda * out.norm_Pkkm) / out.norm_P;
    return out;
}

// ---------------------------------------------------------------------------
// Diagnostics

/// Both sides of the two trace identities in Z_k, Z_m used to evaluate kappa
/// and lambda_1.  Values are complex traces; residuals are moduli.
struct AuxIdentity {
    Complex lhs1, rhs1, lhs2, rhs2;
    [[nodiscard]] double residual1() const { return std::abs(lhs1 - rhs1); }
    [[nodiscard]] double residual2() const { return std::abs(lhs2 - rhs2); }
};

[[nodiscard]] inline AuxIdentity aux_identity_check(const SymmetricPair& pair, const LieConstants& c,
                                                    const MatrixC& z) {
    const auto [zk, zm] = split_kernel_complement(pair, z);
    AuxIdentity out{};
    for (const auto& e : pair.m_basis) {
        const MatrixC a1 = anticommutator(zm, e);
        const MatrixC a3 = anticommutator(zm, anticommutator(zm, a1));
        out.lhs1 += trace_of_product(a3, e);
        const MatrixC b1 = zk * e - e * zk;
        out.lhs2 += trace_of_product(a1, zk * b1 - b1 * zk);
    }
    out.rhs1 = 2.0 * (3.0 * c.s_m_m - c.cas_m_defining) * trace_of_product(zm * zm, zm);
    out.rhs2 = -2.0 * (c.cas_m_defining + 2.0 * c.s_m_k - c.s_m_m) * trace_of_product(zm, zk * zk);
    return out;
}

/// The cubic Casimir C_3 = -sum_{ijk} tr({X_i,X_j}X_k) X_i X_j X_k on C^m.
struct CubicCasimir {
    double trace = 0.0;             // tr C_3
    double mu3 = 0.0;               // scalar by which C_3 acts
    double scalar_residual = 0.0;   // |C_3 - mu3 Id|
};

[[nodiscard]] inline CubicCasimir cubic_casimir_check(int m) {
    if (m < 3) throw std::invalid_argument("cubic_casimir_check: m must be >= 3");
    const OrthonormalBasis g = su_basis(m);
    const SigmaTensor s = sigma_tensor(g);
    const int d = g.size();
    // tr({X_i,X_j}X_k) = -i sigma_ijk, so C_3 = i sum sigma_ijk X_i X_j X_k.
    MatrixC c3 = MatrixC::Zero(m, m);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            MatrixC contracted = MatrixC::Zero(m, m);
            for (int k = 0; k < d; ++k) contracted += s(i, j, k) * g[k];
            c3 += kI * (g[i] * g[j] * contracted);
        }
    CubicCasimir out;
    out.trace = detail::real_checked(c3.trace(), 1.0, "cubic_casimir_check");
    out.mu3 = out.trace / m;
    out.scalar_residual = (c3 - out.mu3 * MatrixC::Identity(m, m)).norm();
    return out;
}

}  // namespace koiso
