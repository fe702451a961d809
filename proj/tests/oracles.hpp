#pragma once

// Independent reference computations for the tests.  Everything here is
// written with explicit loops over entries and traces of explicit products,
// sharing nothing with the library beyond the matrix type.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;
inline const C I{0.0, 1.0};

inline M mul(const M& a, const M& b) {
    M out = M::Zero(a.rows(), b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < b.cols(); ++c) {
            C s = 0.0;
            for (Eigen::Index k = 0; k < a.cols(); ++k) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}

inline C trace(const M& a) {
    C s = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) s += a(i, i);
    return s;
}

inline C trace3(const M& a, const M& b, const M& c) { return trace(mul(mul(a, b), c)); }

inline M anti(const M& a, const M& b) { return mul(a, b) + mul(b, a); }
inline M bracket(const M& a, const M& b) { return mul(a, b) - mul(b, a); }

/// i tr({X,Y}Z), real part.
inline double sigma(const M& x, const M& y, const M& z) { return (I * trace(mul(anti(x, y), z))).real(); }

/// -tr(XY), real part.
inline double inner(const M& x, const M& y) { return -trace(mul(x, y)).real(); }

/// Small deterministic LCG, independent of the library generator.
class Lcg {
public:
    explicit Lcg(std::uint64_t s) : s_(s * 2862933555777941757ULL + 3037000493ULL) {}
    double uniform() {
        s_ = s_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(s_ >> 11) / 9007199254740992.0 * 2.0 - 1.0;
    }

private:
    std::uint64_t s_;
};

/// Random anti-Hermitian trace-free matrix.
inline M random_su(int m, Lcg& g) {
    M a(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) a(r, c) = C(g.uniform(), g.uniform());
    M x = 0.5 * (a - a.adjoint());
    const C t = trace(x) / static_cast<double>(m);
    for (int i = 0; i < m; ++i) x(i, i) -= t;
    return x;
}

/// Orthonormal basis of a subspace spanned by `vecs`, by Gram-Schmidt on the
/// real inner product -tr(XY).
inline std::vector<M> orthonormalize(const std::vector<M>& vecs) {
    std::vector<M> out;
    for (M v : vecs) {
        for (const auto& u : out) v -= inner(u, v) * u;
        const double nv = std::sqrt(std::max(inner(v, v), 0.0));
        if (nv > 1e-8) out.push_back(v / nv);
    }
    return out;
}

/// k- and m-bases built from elementary matrices: AI uses real
/// antisymmetric / i*real symmetric, AII uses the quaternionic block form
/// X = [[A, B], [-conj(B), conj(A)]] for k, with m its orthogonal complement.
struct Split {
    std::vector<M> k, m;
};

inline Split split_AI(int n) {
    Split s;
    std::vector<M> kv, mv;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            M x = M::Zero(n, n);
            x(a, b) = 1.0;
            x(b, a) = -1.0;
            kv.push_back(x);
            M y = M::Zero(n, n);
            y(a, b) = I;
            y(b, a) = I;
            mv.push_back(y);
        }
    for (int a = 0; a + 1 < n; ++a) {
        M y = M::Zero(n, n);
        y(a, a) = I;
        y(a + 1, a + 1) = -I;
        mv.push_back(y);
    }
    s.k = orthonormalize(kv);
    s.m = orthonormalize(mv);
    return s;
}

inline Split split_AII(int n) {
    const int m = 2 * n;
    std::vector<M> kv;
    // A anti-Hermitian n x n, B complex symmetric.
    auto block = [n, m](const M& a, const M& b) {
        M x = M::Zero(m, m);
        x.topLeftCorner(n, n) = a;
        x.topRightCorner(n, n) = b;
        x.bottomLeftCorner(n, n) = -b.conjugate();
        x.bottomRightCorner(n, n) = a.conjugate();
        return x;
    };
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            M e = M::Zero(n, n);
            e(p, q) = 1.0;
            M z = M::Zero(n, n);
            kv.push_back(block(e - e.transpose(), z));
            kv.push_back(block(I * (e + e.transpose()), z));
            kv.push_back(block(z, e + e.transpose()));
            kv.push_back(block(z, I * (e + e.transpose())));
        }
    Split s;
    s.k = orthonormalize(kv);
    // m = orthogonal complement of k inside su(2n).
    std::vector<M> full;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            M e = M::Zero(m, m);
            e(a, b) = 1.0;
            M x = e - e.transpose();
            M y = I * (e + e.transpose());
            for (M* v : {&x, &y}) {
                const C t = trace(*v) / static_cast<double>(m);
                for (int i = 0; i < m; ++i) (*v)(i, i) -= t;
                for (const auto& u : s.k) *v -= inner(u, *v) * u;
                full.push_back(*v);
            }
        }
    s.m = orthonormalize(full);
    return s;
}

/// Canonical su(m) basis written out independently.
inline std::vector<M> su_basis(int m) {
    std::vector<M> v;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            M x = M::Zero(m, m);
            x(a, b) = 1.0;
            x(b, a) = -1.0;
            v.push_back(x);
            M y = M::Zero(m, m);
            y(a, b) = I;
            y(b, a) = I;
            v.push_back(y);
        }
    for (int k = 1; k < m; ++k) {
        M d = M::Zero(m, m);
        for (int i = 0; i < k; ++i) d(i, i) = I;
        d(k, k) = -static_cast<double>(k) * I;
        v.push_back(d);
    }
    return orthonormalize(v);
}

/// Projection onto span(basis) for an orthonormal list.
inline M project(const std::vector<M>& basis, const M& x) {
    M out = M::Zero(x.rows(), x.cols());
    for (const auto& u : basis) out += inner(u, x) * u;
    return out;
}

}  // namespace oracle
