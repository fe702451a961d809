#include "koiso/closed_forms.hpp"
#include "koiso/obstruction_analysis.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace koiso;

namespace {

MatrixC idiag(std::initializer_list<double> d, double scale = 1.0) {
    MatrixC x = MatrixC::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    Eigen::Index i = 0;
    for (double v : d) x(i, i) = kI * v * scale, ++i;
    return x;
}

// Direct definition with a naive product.
bool oracle_in_variety(const MatrixC& x) {
    const MatrixC x2 = oracle::mul(x, x);
    const Complex c = oracle::trace(x2) / static_cast<double>(x.rows());
    MatrixC d = x2;
    for (Eigen::Index a = 0; a < x.rows(); ++a) d(a, a) -= c;
    return d.norm() <= 1e-9 * (1.0 + x.squaredNorm());
}

// Criticality through the polarized cubic sigma(X, X, K) on the interleaved basis.
bool oracle_critical(const MatrixC& x, const std::vector<MatrixC>& basis) {
    double worst = 0.0;
    for (const auto& k : basis) worst = std::max(worst, std::abs(oracle::sigma(x, x, k)));
    return worst <= 1e-9 * std::max(x.squaredNorm(), 1e-300);
}

}  // namespace

TEST(VarietyMembership, Examples) {
    EXPECT_TRUE(variety_membership(MatrixC::Zero(3, 3)));
    EXPECT_TRUE(variety_membership(idiag({1, 1, -1, -1}, 0.5)));
    EXPECT_FALSE(variety_membership(idiag({1, 1, -2}, 1.0 / std::sqrt(6.0))));
    EXPECT_THROW((void)variety_membership(MatrixC::Zero(2, 3)), DimensionError);
}

TEST(VarietyMembership, ConjugatedBlockWitnessesAreMembers) {
    SplitRng rng(31);
    for (int m : {2, 4, 6, 8}) {
        const MatrixC w = *variety_witness(m);
        for (int t = 0; t < 5; ++t) {
            const MatrixC g = random_special_unitary(m, rng);
            const MatrixC x = g * w * g.adjoint();
            EXPECT_TRUE(variety_membership(x)) << "m=" << m;
            EXPECT_TRUE(oracle_in_variety(x));
            if (m == 2) continue;
            // A small generic perturbation leaves the variety.
            const MatrixC y = x + 1e-3 * random_su(m, rng);
            EXPECT_FALSE(variety_membership(y));
            EXPECT_FALSE(oracle_in_variety(y));
        }
    }
}

TEST(VarietyMembership, AllOfSuTwoIsInside) {
    // Every traceless 2x2 matrix squares to a scalar (Cayley-Hamilton).
    SplitRng rng(8);
    for (int t = 0; t < 20; ++t) EXPECT_TRUE(variety_membership(random_su(2, rng)));
}

TEST(VarietyMembership, ScalingInvariance) {
    SplitRng rng(5);
    for (int m = 3; m <= 8; ++m) {
        std::vector<MatrixC> xs{random_su(m, rng)};
        if (auto w = variety_witness(m)) xs.push_back(*w);
        for (const auto& x : xs)
            for (double c : {-7.5, -1.0, 1e-4, 0.3, 2.0, 1e4})
                EXPECT_EQ(variety_membership(x), variety_membership(c * x)) << "m=" << m << " c=" << c;
    }
}

TEST(VarietyMembership, ConjugationInvariance) {
    SplitRng rng(6);
    for (int m = 3; m <= 8; ++m) {
        std::vector<MatrixC> xs{random_su(m, rng), random_su(m, rng)};
        if (auto w = variety_witness(m)) xs.push_back(*w);
        for (const auto& x : xs) {
            const MatrixC g = random_special_unitary(m, rng);
            EXPECT_EQ(variety_membership(x), variety_membership(g * x * g.adjoint())) << "m=" << m;
        }
    }
}

TEST(CriticalityCheck, Examples) {
    const auto b4 = su_basis(4);
    EXPECT_TRUE(criticality_check(MatrixC::Zero(4, 4), b4));
    EXPECT_TRUE(criticality_check(idiag({1, 1, -1, -1}, 0.5), b4));
    SplitRng rng(17);
    EXPECT_FALSE(criticality_check(random_su(3, rng), su_basis(3)));
    EXPECT_THROW((void)criticality_check(MatrixC::Zero(3, 3), b4), DimensionError);
}

TEST(CriticalityCheck, EquivalentToVarietyOnRandomProbesAndWitnesses) {
    SplitRng rng(2024);
    for (int m = 3; m <= 8; ++m) {
        const auto basis = su_basis(m);
        const auto ref_basis = oracle::su_basis(m);
        std::vector<MatrixC> xs;
        for (int i = 0; i < 200; ++i) xs.push_back(random_su(m, rng));
        if (auto w = variety_witness(m)) {
            const MatrixC g = random_special_unitary(m, rng);
            xs.insert(xs.end(), {*w, -2.5 * *w, g * *w * g.adjoint()});
        }
        int disagreements = 0, members = 0;
        for (const auto& x : xs) {
            const bool in_q = variety_membership(x);
            const bool crit = criticality_check(x, basis);
            disagreements += in_q != crit;
            members += in_q;
            EXPECT_EQ(in_q, oracle_in_variety(x));
            EXPECT_EQ(crit, oracle_critical(x, ref_basis));
        }
        EXPECT_EQ(disagreements, 0) << "m=" << m;
        EXPECT_EQ(members, m % 2 == 0 ? 3 : 0) << "m=" << m;
    }
}

TEST(VarietyWitness, OddEvenDichotomy) {
    for (int m = 2; m <= 16; ++m) {
        const auto w = variety_witness(m);
        ASSERT_EQ(w.has_value(), m % 2 == 0) << "m=" << m;
        if (!w) continue;
        EXPECT_NEAR(w->norm(), 1.0, 1e-14);
        EXPECT_LT(std::abs(w->trace()), 1e-14);
        EXPECT_LT((*w + w->adjoint()).norm(), 1e-15);
        EXPECT_TRUE(variety_membership(*w));
        EXPECT_TRUE(oracle_in_variety(*w));
    }
    EXPECT_THROW((void)variety_witness(1), std::invalid_argument);
}

TEST(OddMSpectralArgument, Cases) {
    EXPECT_TRUE(odd_m_spectral_argument(MatrixC::Zero(5, 5)));
    SplitRng rng(3);
    const MatrixC tiny = random_su(5, rng);
    EXPECT_TRUE(odd_m_spectral_argument(1e-12 * tiny / tiny.norm()));
    // The unbalanced sign pattern cannot be trace-free, and projecting the
    // trace away leaves a non-scalar square.
    const MatrixC unbalanced = tracefree_projection(idiag({1, 1, 1, -1, -1}, 1.0 / std::sqrt(5.0)));
    EXPECT_FALSE(variety_membership(unbalanced));
    EXPECT_FALSE(odd_m_spectral_argument(unbalanced));
    EXPECT_THROW((void)odd_m_spectral_argument(MatrixC::Zero(4, 4)), std::invalid_argument);
}

TEST(OddMSpectralArgument, NonzeroMemberIsReportedAsContradiction) {
    // i*Id satisfies X^2 = -Id but is not trace-free; fed in as a member it
    // must trip the contradiction report rather than pass silently.
    EXPECT_THROW((void)odd_m_spectral_argument(kI * identity(3)), NumericalError);
}

TEST(ThirdVariation, EinsteinHilbert) {
    EXPECT_EQ(eh_third_variation(0.0), 0.0);
    EXPECT_NEAR(eh_third_variation(-693.0 / 32.0), 693.0 / 64.0, 1e-14);
    EXPECT_NE(eh_third_variation(-1e-3), 0.0);
}

TEST(ThirdVariation, NuEntropyCoefficient) {
    EXPECT_EQ(nu_third_variation(0.0, 3.0, 5), 0.0);
    // -E^{5/2} / (4E (2 pi)^{5/2}) at E = 3, written out term by term.
    const double two_pi = 2.0 * 3.14159265358979323846;
    const double coeff = -(3.0 * 3.0 * std::sqrt(3.0)) / (12.0 * two_pi * two_pi * std::sqrt(two_pi));
    EXPECT_NEAR(nu_third_variation(1.0, 3.0, 5), coeff, 1e-15);
    EXPECT_NEAR(nu_third_variation(-693.0 / 32.0, 3.0, 5), coeff * (-693.0 / 32.0), 1e-14);
    EXPECT_THROW((void)nu_third_variation(1.0, 0.0, 5), std::invalid_argument);
    EXPECT_THROW((void)nu_third_variation(1.0, -1.0, 5), std::invalid_argument);
    EXPECT_THROW((void)nu_third_variation(1.0, 3.0, 1), std::invalid_argument);
}

TEST(ThirdVariation, RatioIndependentOfPsi) {
    const double r0 = nu_third_variation(1.0, 6.0, 14) / eh_third_variation(1.0);
    for (double psi : {-12.6, -3.0, 0.25, 80.0})
        EXPECT_NEAR(nu_third_variation(psi, 6.0, 14) / eh_third_variation(psi), r0, 1e-12 * std::abs(r0));
}

TEST(RigidityVerdict, DichotomyAcrossFamilies) {
    for (int n = 3; n <= 8; ++n) {
        for (auto tag : {FamilyTag::AI, FamilyTag::AII}) {
            const Family f{tag, n};
            const auto v = rigidity_verdict(f, closed_forms(f).psi_coeff);
            const bool odd = f.ambient() % 2 == 1;
            EXPECT_EQ(v.m, f.ambient());
            EXPECT_EQ(v.variety_trivial, odd);
            EXPECT_EQ(v.witness.has_value(), !odd);
            EXPECT_EQ(v.verdict == Verdict::RIGID_SECOND_ORDER, tag == FamilyTag::AI && n % 2 == 1) << f.k_label();
            if (v.witness) {
                EXPECT_TRUE(variety_membership(*v.witness));
            }
        }
    }
}

TEST(RigidityVerdict, VanishingPsiIsNeverRigid) {
    const auto v = rigidity_verdict({FamilyTag::AI, 5}, 0.0);
    EXPECT_TRUE(v.variety_trivial);
    EXPECT_EQ(v.verdict, Verdict::PARTIAL_INTEGRABILITY);
    EXPECT_EQ(rigidity_verdict({FamilyTag::AI, 5}, 1e-12, 1e-9).verdict, Verdict::PARTIAL_INTEGRABILITY);
    EXPECT_EQ(to_string(Verdict::RIGID_SECOND_ORDER), "RIGID_SECOND_ORDER");
}
