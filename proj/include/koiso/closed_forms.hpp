#pragma once

// Closed-form values of every constant, as rational functions of n (or m).
// These are the expected values reports and tests compare against.

#include "koiso/casimir_sandwich.hpp"

namespace koiso {

struct ClosedForms {
    LieConstants lie;
    double killing_g = 0.0;  // 2m
    double killing_k = 0.0;  // n - 2 or 2(n + 1)
    double norm_P = 0.0;
    double norm_Pmmm = 0.0;
    double norm_Pkkm = 0.0;
    double kappa = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double lambda4 = 0.0;
    double lambda = 0.0;
    double psi_coeff = 0.0;
};

/// |P|^2 on su(m).
[[nodiscard]] constexpr double closed_norm_P(int m) {
    const double x = m;
    return 2.0 * (x * x - 1.0) * (x * x - 4.0) / x;
}

/// Eigenvalue of the cubic Casimir on C^m.
[[nodiscard]] constexpr double closed_mu3(int m) {
    const double x = m;
    return (x * x - 1.0) * (x * x - 4.0) / (x * x);
}

[[nodiscard]] inline ClosedForms closed_forms(const Family& family) {
    const double n = family.n;
    const double m = family.ambient();
    ClosedForms f;
    LieConstants& c = f.lie;
    c.cas_g_defining = (m * m - 1.0) / m;
    c.cas_g_adjoint = 2.0 * m;
    c.s_g_g = 1.0 / m;
    f.killing_g = 2.0 * m;
    f.norm_P = closed_norm_P(family.ambient());
    if (family.tag == FamilyTag::AI) {
        c.cas_k_defining = (n - 1.0) / 2.0;
        c.cas_k_k = n - 2.0;
        c.cas_k_m = n;
        c.cas_m_defining = (n + 2.0) * (n - 1.0) / (2.0 * n);
        c.s_k_k = -0.5;
        c.s_k_m = 0.5;
        c.s_m_k = (n + 2.0) / (2.0 * n);
        c.s_m_m = (2.0 - n) / (2.0 * n);
        f.killing_k = n - 2.0;
        f.norm_Pmmm = (n + 4.0) * (n + 2.0) * (n - 1.0) * (n - 2.0) / (2.0 * n);
        f.norm_Pkkm = 1.5 * (n + 2.0) * (n - 1.0) * (n - 2.0);
        f.kappa = (n * n + 4.0 * n - 24.0) / (2.0 * n);
        f.lambda = -(n + 4.0) * (n * n + 8.0) / (3.0 * n);
        f.psi_coeff = -(n + 4.0) * (7.0 * n * n + 4.0 * n + 24.0) / (8.0 * (n + 1.0));
    } else {
        c.cas_k_defining = (2.0 * n + 1.0) / 2.0;
        c.cas_k_k = 2.0 * (n + 1.0);
        c.cas_k_m = 2.0 * n;
        c.cas_m_defining = (2.0 * n + 1.0) * (n - 1.0) / (2.0 * n);
        c.s_k_k = 0.5;
        c.s_k_m = -0.5;
        c.s_m_k = (1.0 - n) / (2.0 * n);
        c.s_m_m = (n + 1.0) / (2.0 * n);
        f.killing_k = 2.0 * (n + 1.0);
        f.norm_Pmmm = 2.0 * (2.0 * n + 1.0) * (n + 1.0) * (n - 1.0) * (n - 2.0) / n;
        f.norm_Pkkm = 6.0 * (2.0 * n + 1.0) * (n + 1.0) * (n - 1.0);
        f.kappa = (n * n - 2.0 * n - 6.0) / n;
        f.lambda = -4.0 * (n - 2.0) * (n * n + 2.0) / (3.0 * n);
        f.psi_coeff = -(n - 2.0) * (7.0 * n * n - 2.0 * n + 6.0) / (2.0 * n - 1.0);
    }

    // lambda_1 and lambda_3 in terms of the partial constants.
    const double cas = c.cas_m_defining;
    const double sk = c.s_m_k;
    const double sm = c.s_m_m;
    f.lambda1 = -(cas + sk - 4.0 / m) * (cas + 2.0 * sk - sm) / 3.0;
    f.lambda3 = -(cas * cas + 3.0 * cas * sk - 3.0 * cas * sm - 2.0 * sk * sk - sk * sm + 2.0 * sm * sm) / 3.0 +
                (6.0 * cas + 16.0 * sk - 10.0 * sm) / (3.0 * m);
    f.lambda2 = -2.0 * f.lambda1;
    f.lambda4 = f.lambda1 - f.lambda3;
    return f;
}

}  // namespace koiso
