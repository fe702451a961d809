#pragma once

// Orthonormal bases of su(m) and the Cartan decompositions su(m) = k + m for
// the symmetric pairs AI (k = so(n), m = n) and AII (k = sp(n), m = 2n).

#include "koiso/matrix_kernel.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace koiso {

/// Dense real 3-index array with row-major (i, j, k) layout.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim * dim, 0.0) {}

    [[nodiscard]] int dim() const { return dim_; }
    double& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
    double operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }
    [[nodiscard]] const std::vector<double>& data() const { return data_; }

    /// View as a dim x dim^2 matrix: row i, column j*dim + k.
    [[nodiscard]] Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
    unfolded() const {
        return {data_.data(), dim_, static_cast<Eigen::Index>(dim_) * dim_};
    }

    [[nodiscard]] double squared_norm() const {
        double s = 0.0;
        for (double v : data_) s += v * v;
        return s;
    }

private:
    [[nodiscard]] std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
    }
    int dim_ = 0;
    std::vector<double> data_;
};

/// Ordered list of anti-Hermitian matrices, orthonormal under minus the trace
/// form.  Coordinates against the basis are computed with one dense product
/// against a cached real coordinate matrix.
class OrthonormalBasis {
public:
    OrthonormalBasis() = default;
    OrthonormalBasis(int ambient_dim, std::vector<MatrixC> elements, std::string label)
        : ambient_(ambient_dim), elements_(std::move(elements)), label_(std::move(label)) {
        for (const auto& e : elements_)
            if (e.rows() != ambient_ || e.cols() != ambient_)
                throw DimensionError("OrthonormalBasis: element of wrong size in '" + label_ + "'");
        const auto m2 = static_cast<Eigen::Index>(ambient_) * ambient_;
        coords_.resize(size(), 2 * m2);
        for (int i = 0; i < size(); ++i) {
            const auto& e = elements_[static_cast<std::size_t>(i)];
            for (Eigen::Index r = 0; r < ambient_; ++r)
                for (Eigen::Index c = 0; c < ambient_; ++c) {
                    coords_(i, r * ambient_ + c) = e(r, c).real();
                    coords_(i, m2 + r * ambient_ + c) = e(r, c).imag();
                }
        }
    }

    [[nodiscard]] int ambient_dim() const { return ambient_; }
    [[nodiscard]] int size() const { return static_cast<int>(elements_.size()); }
    [[nodiscard]] const std::string& label() const { return label_; }
    [[nodiscard]] const std::vector<MatrixC>& elements() const { return elements_; }
    [[nodiscard]] const MatrixC& operator[](int i) const { return elements_[static_cast<std::size_t>(i)]; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    /// Flatten a matrix to the real vector (Re vec, Im vec).
    [[nodiscard]] VectorR flatten(const MatrixC& a) const {
        const auto m2 = static_cast<Eigen::Index>(ambient_) * ambient_;
        VectorR v(2 * m2);
        for (Eigen::Index r = 0; r < ambient_; ++r)
            for (Eigen::Index c = 0; c < ambient_; ++c) {
                v(r * ambient_ + c) = a(r, c).real();
                v(m2 + r * ambient_ + c) = a(r, c).imag();
            }
        return v;
    }

    /// Real-linear coordinates Re tr(X_i^H A).  Equal to <X_i, A> for
    /// anti-Hermitian A.
    [[nodiscard]] VectorR coordinates(const MatrixC& a) const { return coords_ * flatten(a); }

    /// Coordinates of many matrices at once; column c belongs to mats[c].
    [[nodiscard]] MatrixR coordinates(const std::vector<MatrixC>& mats) const {
        MatrixR flat(coords_.cols(), static_cast<Eigen::Index>(mats.size()));
        for (std::size_t c = 0; c < mats.size(); ++c) flat.col(static_cast<Eigen::Index>(c)) = flatten(mats[c]);
        return coords_ * flat;
    }

    [[nodiscard]] MatrixC combine(const VectorR& coeffs) const {
        MatrixC out = MatrixC::Zero(ambient_, ambient_);
        for (int i = 0; i < size(); ++i) out += coeffs(i) * elements_[static_cast<std::size_t>(i)];
        return out;
    }

    /// Orthogonal projection onto the real span of the basis.
    [[nodiscard]] MatrixC project(const MatrixC& a) const { return combine(coordinates(a)); }

    /// Frobenius norm of the component of `a` outside the span.
    [[nodiscard]] double residual(const MatrixC& a) const { return (a - project(a)).norm(); }

    /// max |<X_i, X_j> - delta_ij|.
    [[nodiscard]] double orthonormality_defect() const {
        const MatrixR g = coords_ * coords_.transpose();
        return (g - MatrixR::Identity(size(), size())).cwiseAbs().maxCoeff();
    }

    /// Largest anti-Hermitian or trace defect over the elements.
    [[nodiscard]] double su_membership_defect() const {
        double worst = 0.0;
        for (const auto& e : elements_) {
            worst = std::max(worst, (e + e.adjoint()).cwiseAbs().maxCoeff());
            worst = std::max(worst, std::abs(e.trace()));
        }
        return worst;
    }

    [[nodiscard]] const MatrixR& coordinate_matrix() const { return coords_; }

private:
    int ambient_ = 0;
    std::vector<MatrixC> elements_;
    std::string label_;
    MatrixR coords_;
};

enum class FamilyTag { AI, AII };

/// AI: SU(n)/SO(n), ambient m = n.  AII: SU(2n)/Sp(n), ambient m = 2n.
struct Family {
    FamilyTag tag = FamilyTag::AI;
    int n = 3;

    [[nodiscard]] int ambient() const { return tag == FamilyTag::AI ? n : 2 * n; }
    [[nodiscard]] int dim_k() const { return tag == FamilyTag::AI ? n * (n - 1) / 2 : n * (2 * n + 1); }
    [[nodiscard]] int dim_m() const {
        return tag == FamilyTag::AI ? (n - 1) * (n + 2) / 2 : (n - 1) * (2 * n + 1);
    }
    [[nodiscard]] std::string_view name() const { return tag == FamilyTag::AI ? "AI" : "AII"; }
    [[nodiscard]] std::string_view short_name() const { return tag == FamilyTag::AI ? "so" : "sp"; }
    [[nodiscard]] std::string k_label() const {
        return std::string(short_name()) + "(" + std::to_string(n) + ")";
    }
    bool operator==(const Family&) const = default;
};

/// Cartan decomposition g = k + m with orthonormal bases of each piece.
struct SymmetricPair {
    Family family;
    int m = 0;
    OrthonormalBasis g_basis;
    OrthonormalBasis k_basis;
    OrthonormalBasis m_basis;
    double einstein_constant = 0.0;
    int dim_M = 0;
};

/// Canonical orthonormal basis of su(m): (e_ab - e_ba)/sqrt2 for a<b, then
/// i(e_ab + e_ba)/sqrt2 for a<b, then i diag(1,..,1,-k,0,..)/sqrt(k(k+1)).
[[nodiscard]] inline OrthonormalBasis su_basis(int m) {
    if (m < 2) throw std::invalid_argument("su_basis: m must be >= 2, got " + std::to_string(m));
    std::vector<MatrixC> out;
    out.reserve(static_cast<std::size_t>(m * m - 1));
    const double s = 1.0 / std::sqrt(2.0);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            MatrixC x = MatrixC::Zero(m, m);
            x(a, b) = s;
            x(b, a) = -s;
            out.push_back(std::move(x));
        }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            MatrixC x = MatrixC::Zero(m, m);
            x(a, b) = kI * s;
            x(b, a) = kI * s;
            out.push_back(std::move(x));
        }
    for (int k = 1; k < m; ++k) {
        MatrixC x = MatrixC::Zero(m, m);
        const double c = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
        for (int a = 0; a < k; ++a) x(a, a) = kI * c;
        x(k, k) = -kI * (c * k);
        out.push_back(std::move(x));
    }
    return {m, std::move(out), "su(" + std::to_string(m) + ")"};
}

/// J = [[0, I_n], [-I_n, 0]].
[[nodiscard]] inline MatrixC symplectic_form(int n) {
    MatrixC j = MatrixC::Zero(2 * n, 2 * n);
    for (int a = 0; a < n; ++a) {
        j(a, n + a) = 1.0;
        j(n + a, a) = -1.0;
    }
    return j;
}

/// The involution whose fixed algebra is k: AI X -> conj(X), AII X -> J conj(X) J^{-1}.
[[nodiscard]] inline MatrixC involution(const Family& family, const MatrixC& x) {
    if (family.tag == FamilyTag::AI) return x.conjugate();
    const MatrixC j = symplectic_form(family.n);
    // J^{-1} = -J
    return -(j * x.conjugate() * j);
}

namespace detail {

/// Modified Gram-Schmidt (two passes) over `candidates` in order, keeping
/// vectors whose orthogonal remainder exceeds `drop` relative to their input norm.
inline std::vector<MatrixC> gram_schmidt(const std::vector<MatrixC>& candidates, double drop = 1e-8) {
    std::vector<MatrixC> out;
    for (const auto& c : candidates) {
        const double n0 = c.norm();
        if (n0 < 1e-12) continue;
        MatrixC w = c;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : out) w -= real_frobenius(u, w) * u;
        const double nw = w.norm();
        if (nw > drop * n0) out.push_back(w / nw);
    }
    return out;
}

}  // namespace detail

/// Split su(m) into the +1 (k) and -1 (m) eigenspaces of the family's
/// involution by projecting the canonical basis with (1 +- theta)/2 and
/// orthonormalizing in canonical order.
[[nodiscard]] inline SymmetricPair cartan_decomposition(const Family& family) {
    if (family.n < 3)
        throw std::invalid_argument("cartan_decomposition: n must be >= 3, got " + std::to_string(family.n));
    const int m = family.ambient();
    OrthonormalBasis g = su_basis(m);
    std::vector<MatrixC> plus, minus;
    plus.reserve(static_cast<std::size_t>(g.size()));
    minus.reserve(static_cast<std::size_t>(g.size()));
    for (const auto& x : g) {
        const MatrixC tx = involution(family, x);
        plus.push_back(0.5 * (x + tx));
        minus.push_back(0.5 * (x - tx));
    }
    auto kb = detail::gram_schmidt(plus);
    auto mb = detail::gram_schmidt(minus);
    if (static_cast<int>(kb.size()) != family.dim_k() || static_cast<int>(mb.size()) != family.dim_m())
        throw NumericalError("cartan_decomposition: eigenspace dimensions " + std::to_string(kb.size()) + "+" +
                             std::to_string(mb.size()) + " do not match expected " +
                             std::to_string(family.dim_k()) + "+" + std::to_string(family.dim_m()));
    SymmetricPair pair;
    pair.family = family;
    pair.m = m;
    pair.g_basis = std::move(g);
    pair.k_basis = OrthonormalBasis(m, std::move(kb), family.k_label());
    pair.m_basis = OrthonormalBasis(m, std::move(mb), "m");
    pair.einstein_constant = static_cast<double>(m);
    pair.dim_M = pair.m_basis.size();
    return pair;
}

/// c[i][j][k] = <[X_i, X_j], X_k>.
[[nodiscard]] inline Tensor3 structure_constants(const OrthonormalBasis& basis) {
    const int d = basis.size();
    Tensor3 c(d);
    std::vector<MatrixC> brackets;
    for (int i = 0; i < d; ++i) {
        brackets.clear();
        for (int j = i + 1; j < d; ++j) brackets.push_back(commutator(basis[i], basis[j]));
        if (brackets.empty()) continue;
        const MatrixR coeff = basis.coordinates(brackets);
        for (int j = i + 1; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const double v = coeff(k, j - i - 1);
                c(i, j, k) = v;
                c(j, i, k) = -v;
            }
    }
    return c;
}

/// ad(X_i) as a matrix on the span of the basis: column k holds the
/// coordinates of [X_i, X_k].
[[nodiscard]] inline MatrixR ad_matrix(const Tensor3& c, int i) {
    const int d = c.dim();
    MatrixR a(d, d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) a(l, k) = c(i, k, l);
    return a;
}

/// Constant c with tr(ad X ad Y) = c tr(XY) on the subalgebra spanned by
/// `basis`.  Throws when the two Gram matrices are not proportional.
[[nodiscard]] inline double killing_form_ratio(const OrthonormalBasis& basis, double tol = 1e-8) {
    const int d = basis.size();
    const Tensor3 c = structure_constants(basis);
    // tr(ad X_i ad X_j) = sum_{k,l} c_ikl c_jlk = -sum_{k,l} c_ikl c_jkl
    const auto u = c.unfolded();
    const MatrixR killing = -(u * u.transpose());
    MatrixR trace_gram(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) trace_gram(i, j) = trace_of_product(basis[i], basis[j]).real();
    const double ratio = (killing.array() * trace_gram.array()).sum() / trace_gram.squaredNorm();
    const double defect = (killing - ratio * trace_gram).cwiseAbs().maxCoeff();
    if (defect > tol * std::max(1.0, std::abs(ratio)))
        throw NumericalError("killing_form_ratio: Killing form not proportional to trace form on '" +
                             basis.label() + "' (defect " + std::to_string(defect) + ")");
    return ratio;
}

/// Residuals of the bracket relations [k,k] in k, [k,m] in m, [m,m] in k.
struct BracketClosure {
    double kk = 0.0;
    double km = 0.0;
    double mm = 0.0;
    [[nodiscard]] double max() const { return std::max({kk, km, mm}); }
};

[[nodiscard]] inline BracketClosure bracket_closure(const SymmetricPair& pair) {
    BracketClosure r;
    const auto& k = pair.k_basis;
    const auto& m = pair.m_basis;
    for (int i = 0; i < k.size(); ++i)
        for (int j = i + 1; j < k.size(); ++j) r.kk = std::max(r.kk, k.residual(commutator(k[i], k[j])));
    for (int i = 0; i < k.size(); ++i)
        for (int j = 0; j < m.size(); ++j) r.km = std::max(r.km, m.residual(commutator(k[i], m[j])));
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j) r.mm = std::max(r.mm, k.residual(commutator(m[i], m[j])));
    return r;
}

/// Residuals of {m,m} in i m + R Id, {k,k} in i m + R Id, {m,k} in i k.
struct AnticommutatorInclusion {
    double mm = 0.0;
    double kk = 0.0;
    double mk = 0.0;
    [[nodiscard]] double max() const { return std::max({mm, kk, mk}); }
};

[[nodiscard]] inline AnticommutatorInclusion anticommutator_inclusions(const SymmetricPair& pair) {
    AnticommutatorInclusion r;
    const auto& k = pair.k_basis;
    const auto& m = pair.m_basis;
    // -i{A,B} is anti-Hermitian; its trace-free part must sit in the target.
    auto in_target = [](const OrthonormalBasis& target, const MatrixC& anti, bool allow_identity) {
        const MatrixC x = -kI * anti;
        const MatrixC y = allow_identity ? tracefree_projection(x) : x;
        return target.residual(y);
    };
    for (int i = 0; i < m.size(); ++i)
        for (int j = i; j < m.size(); ++j)
            r.mm = std::max(r.mm, in_target(m, anticommutator(m[i], m[j]), true));
    for (int i = 0; i < k.size(); ++i)
        for (int j = i; j < k.size(); ++j)
            r.kk = std::max(r.kk, in_target(m, anticommutator(k[i], k[j]), true));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < k.size(); ++j)
            r.mk = std::max(r.mk, in_target(k, anticommutator(m[i], k[j]), false));
    return r;
}

/// max |<Y_i, E_j>| over the two bases.
[[nodiscard]] inline double cross_orthogonality(const SymmetricPair& pair) {
    return (pair.k_basis.coordinate_matrix() * pair.m_basis.coordinate_matrix().transpose())
        .cwiseAbs()
        .maxCoeff();
}

/// Largest residual of (1 +- theta)/2 X landing outside span(k) resp. span(m),
/// over the canonical su(m) basis.
[[nodiscard]] inline double eigenspace_completeness(const SymmetricPair& pair) {
    double worst = 0.0;
    for (const auto& x : pair.g_basis) {
        const MatrixC tx = involution(pair.family, x);
        const MatrixC p = 0.5 * (x + tx);
        const MatrixC q = 0.5 * (x - tx);
        worst = std::max({worst, pair.k_basis.residual(p), pair.m_basis.residual(q), (p + q - x).norm()});
    }
    return worst;
}

}  // namespace koiso
