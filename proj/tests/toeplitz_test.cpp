#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include "nuij/matrix.hpp"
#include "nuij/toeplitz.hpp"
#include "test_util.hpp"

namespace nuij {
namespace {

QuadExt qe(long n) { return QuadExt(Rational(n)); }

TEST(ToeplitzDet, ClosedFormExamples) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        QuadExt alpha(testing::rand_rational(rng));
        QuadExt beta(testing::rand_rational(rng));
        EXPECT_EQ(toeplitz_det_closed(alpha, beta, 1), alpha);
        EXPECT_EQ(toeplitz_det_closed(alpha, beta, 2), alpha * alpha - beta * beta);
    }
    for (int k = 2; k <= 6; ++k)
        EXPECT_TRUE(toeplitz_det_closed(qe(1), qe(1), k).is_zero());
    EXPECT_THROW(toeplitz_det_closed(qe(1), qe(1), 0), std::invalid_argument);
}

TEST(ToeplitzDet, OracleExamples) {
    EXPECT_EQ(toeplitz_det_oracle(qe(7), qe(3), 1), qe(7));
    // det [[2,1,1],[1,2,1],[1,1,2]] = 4 by hand cofactor expansion.
    EXPECT_EQ(toeplitz_det_oracle(qe(2), qe(1), 3), qe(4));
    // Rank-one off-diagonal structure collapses the all-ones matrix.
    EXPECT_TRUE(toeplitz_det_oracle(qe(1), qe(1), 4).is_zero());
}

TEST(ToeplitzDet, ClosedFormMatchesOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        QuadExt alpha(testing::rand_rational(rng, 10, 5));
        QuadExt beta(testing::rand_rational(rng, 10, 5));
        for (int k = 1; k <= 6; ++k)
            EXPECT_EQ(toeplitz_det_closed(alpha, beta, k),
                      toeplitz_det_oracle(alpha, beta, k));
    }
    // Also over an irrational extension, where the rejection analysis lives.
    QuadExt root2 = QuadExt::sqrt(Rational(2));
    for (int k = 1; k <= 5; ++k)
        EXPECT_EQ(toeplitz_det_closed(qe(2), root2, k),
                  toeplitz_det_oracle(qe(2), root2, k));
}

TEST(ToeplitzDet, SmallSizeFormulasEmbeddedInRecovery) {
    // t(1) = alpha, t(2) = alpha^2 - beta^2,
    // t(3) = alpha^3 + 2 beta^3 - 3 alpha beta^2 (uniform-sign 3x3 minor).
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        QuadExt a(testing::rand_rational(rng));
        QuadExt b(testing::rand_rational(rng));
        EXPECT_EQ(toeplitz_det_oracle(a, b, 1), a);
        EXPECT_EQ(toeplitz_det_oracle(a, b, 2), a * a - b * b);
        EXPECT_EQ(toeplitz_det_oracle(a, b, 3),
                  a * a * a + qe(2) * b * b * b - qe(3) * a * b * b);
    }
}

TEST(Determinants, BareissMatchesCofactor) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = dim(rng);
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
        for (auto& row : m)
            for (Rational& x : row)
                x = testing::rand_rational(rng, 8, 4);
        EXPECT_EQ(det_bareiss(m), det_cofactor(m));
        EXPECT_EQ(det_bareiss_generic(m), det_cofactor(m));
    }
    // Singular matrices exercise the pivot-search path.
    std::vector<std::vector<Rational>> sing{
        {Rational(0), Rational(0)}, {Rational(1), Rational(2)}};
    EXPECT_EQ(det_bareiss(sing), Rational(0));
    std::vector<std::vector<Rational>> swap_needed{
        {Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    EXPECT_EQ(det_bareiss(swap_needed), Rational(-1));
}

TEST(UdrSequence, Examples) {
    // T_{1,1} gives the original Nuij sequence (1, 0, ..., 0).
    for (int d = 1; d <= 6; ++d) {
        NuijCandidate a = udr_sequence(qe(1), qe(1), d);
        EXPECT_EQ(a.at(1), Rational(1));
        for (int k = 2; k <= d; ++k)
            EXPECT_TRUE(a.at(k).is_zero());
    }

    // beta = 0: t(i) = alpha^i, so a_i = alpha^i / i!.
    Rational alpha(3, 2);
    NuijCandidate diag = udr_sequence(QuadExt(alpha), qe(0), 5);
    for (int i = 1; i <= 5; ++i)
        EXPECT_EQ(diag.at(i), alpha.pow(i) / Rational(factorial(i)));

    NuijCandidate two_one = udr_sequence(qe(2), qe(1), 3);
    EXPECT_EQ(two_one.a,
              (std::vector<Rational>{Rational(2), Rational(3, 2), Rational(2, 3)}));

    // Irrational entries are rejected: t(3) = 4 sqrt(2) for alpha=0, beta=sqrt(2).
    EXPECT_THROW(udr_sequence(qe(0), QuadExt::sqrt(Rational(2)), 3),
                 std::domain_error);
    EXPECT_THROW(udr_sequence(qe(1), qe(1), 0), std::invalid_argument);
}

TEST(RecoverUdr, RoundTripsGeneratedSequences) {
    auto r = recover_udr(udr_sequence(qe(3), qe(2), 5));
    const auto* w = std::get_if<UDRWitness>(&r);
    ASSERT_NE(w, nullptr);
    EXPECT_EQ(w->alpha, qe(3));
    ASSERT_EQ(w->beta_solutions.size(), 1u);
    EXPECT_EQ(w->beta_solutions[0], qe(2));

    // Negative beta round-trips too (the 3x3 equation fixes the sign).
    auto rn = recover_udr(udr_sequence(qe(-1), qe(-4), 4));
    const auto* wn = std::get_if<UDRWitness>(&rn);
    ASSERT_NE(wn, nullptr);
    EXPECT_EQ(wn->alpha, qe(-1));
    ASSERT_EQ(wn->beta_solutions.size(), 1u);
    EXPECT_EQ(wn->beta_solutions[0], qe(-4));

    // beta = 0 collapses the two signs into one witness.
    auto rz = recover_udr(udr_sequence(qe(5), qe(0), 4));
    const auto* wz = std::get_if<UDRWitness>(&rz);
    ASSERT_NE(wz, nullptr);
    ASSERT_EQ(wz->beta_solutions.size(), 1u);
    EXPECT_TRUE(wz->beta_solutions[0].is_zero());
}

TEST(RecoverUdr, DegreeOneAndTwo) {
    auto r1 = recover_udr(NuijCandidate(1, {Rational(7, 3)}));
    const auto* w1 = std::get_if<UDRWitness>(&r1);
    ASSERT_NE(w1, nullptr);
    EXPECT_EQ(w1->alpha, QuadExt(Rational(7, 3)));
    ASSERT_EQ(w1->beta_solutions.size(), 1u);
    EXPECT_TRUE(w1->beta_solutions[0].is_zero());

    // d = 2 keeps both signs: a = (alpha, (alpha^2 - beta^2)/2).
    Rational alpha(2), beta(3);
    NuijCandidate a2(2, {alpha, (alpha * alpha - beta * beta) / Rational(2)});
    auto r2 = recover_udr(a2);
    const auto* w2 = std::get_if<UDRWitness>(&r2);
    ASSERT_NE(w2, nullptr);
    ASSERT_EQ(w2->beta_solutions.size(), 2u);
    EXPECT_EQ(w2->beta_solutions[0], QuadExt(beta));
    EXPECT_EQ(w2->beta_solutions[1], QuadExt(-beta));

    // d = 2 with irrational beta: still two witnesses, now in Q(sqrt(2)).
    NuijCandidate airr(2, {Rational(2), Rational(1)});
    auto rirr = recover_udr(airr);
    const auto* wirr = std::get_if<UDRWitness>(&rirr);
    ASSERT_NE(wirr, nullptr);
    ASSERT_EQ(wirr->beta_solutions.size(), 2u);
    EXPECT_EQ(wirr->beta_solutions[0], QuadExt::sqrt(Rational(2)));
    EXPECT_EQ(wirr->beta_solutions[1], -QuadExt::sqrt(Rational(2)));
}

TEST(RecoverUdr, KnownCounterexampleRejectedExactly) {
    // (2, 1, 0): alpha = 2, beta = +-sqrt(2), but 6 a_3 would have to be
    // alpha^3 + 2 beta^3 - 3 alpha beta^2 != 0.
    NuijCandidate b(3, {Rational(2), Rational(1), Rational(0)});
    auto r = recover_udr(b);
    const auto* rej = std::get_if<UDRRejection>(&r);
    ASSERT_NE(rej, nullptr);
    EXPECT_EQ(rej->failed_index, 3);
    // Residual t(3)/3! - a_3, computed independently by the cofactor
    // oracle in Q(sqrt(2)) with the +sqrt(2) branch.
    QuadExt expected =
        toeplitz_det_oracle(qe(2), QuadExt::sqrt(Rational(2)), 3) /
        QuadExt(Rational(6));
    EXPECT_EQ(rej->residual, expected);
    EXPECT_FALSE(rej->residual.is_zero());
    EXPECT_EQ(rej->residual,
              QuadExt(Rational(-2, 3), Rational(2, 3), Rational(2)));
}

TEST(RecoverUdr, NegativeDiscriminantRejectsAtIndexTwo) {
    // alpha^2 - 2 a_2 < 0: no real beta exists at all.
    NuijCandidate a(3, {Rational(1), Rational(2), Rational(0)});
    auto r = recover_udr(a);
    const auto* rej = std::get_if<UDRRejection>(&r);
    ASSERT_NE(rej, nullptr);
    EXPECT_EQ(rej->failed_index, 2);
    EXPECT_EQ(rej->residual, QuadExt(Rational(-3)));
}

TEST(RecoverUdr, RationalWitnessFailingLate) {
    // Tamper with the last entry of a valid length-5 sequence: the
    // discriminant still yields beta = +-2, so the scan reaches i = 5.
    NuijCandidate good = udr_sequence(qe(3), qe(2), 5);
    std::vector<Rational> tampered = good.a;
    tampered[4] += Rational(1, 7);
    auto r = recover_udr(NuijCandidate(5, tampered));
    const auto* rej = std::get_if<UDRRejection>(&r);
    ASSERT_NE(rej, nullptr);
    EXPECT_EQ(rej->failed_index, 5);
    EXPECT_EQ(rej->residual, QuadExt(Rational(-1, 7)));
}

TEST(IsUdr, Examples) {
    for (int d = 1; d <= 6; ++d) {
        std::vector<Rational> unit(d, Rational(0));
        unit[0] = Rational(1);
        EXPECT_TRUE(is_udr(NuijCandidate(d, unit)));
    }
    EXPECT_FALSE(is_udr(NuijCandidate(3, {Rational(2), Rational(1), Rational(0)})));
    EXPECT_TRUE(is_udr(NuijCandidate(2, {Rational(2), Rational(1)})));
}

TEST(IsUdr, UdrSequencesAreNuij) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        const int d = 1 + trial % 6;
        NuijCandidate a = udr_sequence(QuadExt(testing::rand_rational(rng, 6, 3)),
                                       QuadExt(testing::rand_rational(rng, 6, 3)), d);
        EXPECT_TRUE(is_udr(a));
        EXPECT_TRUE(is_nuij(a));
    }
}

TEST(SymMatrixType, ValidatesShape) {
    EXPECT_THROW(SymMatrix({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}),
                 std::invalid_argument);
    EXPECT_THROW(SymMatrix({{Rational(1), Rational(2)}}), std::invalid_argument);
    SymMatrix ok({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
    EXPECT_EQ(ok.n(), 2);
    EXPECT_EQ(ok.at(0, 1), Rational(2));
}

TEST(PrincipalMinors, ToeplitzMinorsAllEqual) {
    for (int d = 2; d <= 6; ++d) {
        SymMatrix t =
            SpecialToeplitz(d, QuadExt(Rational(5, 2)), QuadExt(Rational(-3)))
                .as_sym_matrix();
        for (int j = 1; j <= d; ++j)
            EXPECT_TRUE(principal_minors_all_equal(t, j));
    }
    SymMatrix t4 = SpecialToeplitz(4, QuadExt(Rational(5, 2)), QuadExt(Rational(-3)))
                       .as_sym_matrix();
    EXPECT_THROW(principal_minors_all_equal(t4, 0), std::invalid_argument);
    EXPECT_THROW(principal_minors_all_equal(t4, 5), std::invalid_argument);
}

TEST(PrincipalMinors, DetectsUnequalDiagonal) {
    SymMatrix d = SymMatrix::diagonal({Rational(1), Rational(2)});
    EXPECT_FALSE(principal_minors_all_equal(d, 1));
    EXPECT_TRUE(principal_minors_all_equal(d, 2));
}

TEST(PrincipalMinors, SignFlippedOffDiagonalStillEqualAtJ2) {
    // Off-diagonal entries +-1 with zero diagonal: every 2x2 principal
    // minor is -(entry)^2 = -1 regardless of the sign pattern.
    SymMatrix m({{Rational(0), Rational(1), Rational(-1)},
                 {Rational(1), Rational(0), Rational(1)},
                 {Rational(-1), Rational(1), Rational(0)}});
    EXPECT_TRUE(principal_minors_all_equal(m, 2));
}

TEST(DetRep, SmallExamples) {
    // d = 1: det(z + lambda + s alpha).
    Rational lambda(4, 3), alpha(-2);
    BiPoly one = detrep_bipoly({lambda}, alpha, Rational(9));
    BiPoly expected = BiPoly::term(1, 0, Rational(1)) +
                      BiPoly::constant(lambda) + BiPoly::term(0, 1, alpha);
    EXPECT_EQ(one, expected);

    // d = 2, lambda = (0,0), alpha = beta = 1: (z+s)^2 - s^2 = z^2 + 2sz.
    BiPoly two = detrep_bipoly({Rational(0), Rational(0)}, Rational(1), Rational(1));
    EXPECT_EQ(two, BiPoly::term(2, 0, Rational(1)) + BiPoly::term(1, 1, Rational(2)));

    EXPECT_THROW(detrep_bipoly({}, Rational(1), Rational(1)), std::invalid_argument);
}

TEST(DetRep, MatchesPencilConstruction) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 8; ++trial) {
        const int d = 1 + trial % 4;
        std::vector<Rational> lambdas = testing::rand_rationals(rng, d, 6, 3);
        Rational alpha = testing::rand_rational(rng, 6, 3);
        Rational beta = testing::rand_rational(rng, 6, 3);
        BiPoly det = detrep_bipoly(lambdas, alpha, beta);
        Pencil pencil = build_pencil(HyperbolicPoly::from_negated_roots(lambdas),
                                     udr_sequence(QuadExt(alpha), QuadExt(beta), d));
        EXPECT_EQ(det, pencil.bipoly());
        // Monic of degree d in z.
        EXPECT_EQ(det.z_coefficient(d), UniPoly::constant(1));
    }
}

TEST(DetRep, DiagonalPermutationInvariance) {
    std::vector<Rational> lambdas{Rational(1), Rational(-2), Rational(5, 2)};
    Rational alpha(3, 2), beta(-1, 3);
    BiPoly base = detrep_bipoly(lambdas, alpha, beta);
    std::sort(lambdas.begin(), lambdas.end());
    do {
        EXPECT_EQ(detrep_bipoly(lambdas, alpha, beta), base);
    } while (std::next_permutation(lambdas.begin(), lambdas.end()));
}

TEST(VerifyUdr, RepresentationIdentityExamples) {
    EXPECT_TRUE(verify_udr({Rational(0), Rational(0)}, Rational(1), Rational(1)));
    EXPECT_TRUE(verify_udr({Rational(-17, 5)}, Rational(4), Rational(123)));
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        EXPECT_TRUE(verify_udr(testing::rand_rationals(rng, 5, 8, 4),
                               testing::rand_rational(rng, 8, 4),
                               testing::rand_rational(rng, 8, 4)));
    }
}

} // namespace
} // namespace nuij
