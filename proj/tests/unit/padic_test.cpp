#include <gtest/gtest.h>

#include "pvx/padic.hpp"

using pvx::Integer;
using pvx::Rational;
using pvx::Residue;

TEST(OmegaParam, ReducesToLowestTerms) {
    const pvx::OmegaParam w(2, 4);
    EXPECT_EQ(w.r(), 1);
    EXPECT_EQ(w.q(), 2);
    EXPECT_EQ(w.str(), "1/2");
}

TEST(OmegaParam, RejectsOutOfRange) {
    EXPECT_THROW(pvx::OmegaParam(2, 3), pvx::precondition_error);
    EXPECT_THROW(pvx::OmegaParam(0, 3), pvx::precondition_error);
    EXPECT_THROW(pvx::OmegaParam(1, -2), pvx::precondition_error);
}

TEST(PrimeData, ValidatesPrimeAndCongruence) {
    const pvx::OmegaParam w(1, 3);
    EXPECT_NO_THROW(pvx::PrimeData(7, 2, w));
    EXPECT_THROW(pvx::PrimeData(5, 1, w), pvx::precondition_error);
    EXPECT_THROW(pvx::PrimeData(2, 1, pvx::OmegaParam(1, 2)), pvx::precondition_error);
    EXPECT_THROW(pvx::PrimeData(9, 1, pvx::OmegaParam(1, 2)), pvx::precondition_error);
    EXPECT_THROW(pvx::PrimeData(7, 0, w), pvx::precondition_error);
    const pvx::PrimeData d(13, 2, w);
    EXPECT_EQ(d.ell(), 4u);
    EXPECT_EQ(d.modulus(), 169);
    EXPECT_EQ(d.with_precision(3).modulus(), 2197);
}

TEST(Residue, ArithmeticAndInverse) {
    const Residue a(Integer(7), 5, 2), b(Integer(-3), 5, 2);
    EXPECT_EQ(b.value(), 22);
    EXPECT_EQ((a * a.inverse()).value(), 1);
    EXPECT_EQ((a + b).value(), 4);
    EXPECT_EQ((a - b).value(), 10);
    EXPECT_EQ(a.pow(Integer(-1)), a.inverse());
    EXPECT_THROW(Residue(Integer(10), 5, 2).inverse(), pvx::non_unit_error);
    EXPECT_THROW((void)(a + Residue(Integer(1), 5, 3)), pvx::ring_mismatch);
    EXPECT_THROW((void)(a == Residue(Integer(1), 7, 2)), pvx::ring_mismatch);
}

class TeichmullerGrid : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(TeichmullerGrid, FixedByFrobeniusAndLiftsResidue) {
    const auto p = GetParam();
    for (unsigned s = 1; s <= 4; ++s)
        for (std::uint64_t u = 0; u < p; ++u) {
            const Residue t = pvx::teichmuller_lift(u, p, s);
            EXPECT_EQ(t.pow(static_cast<unsigned long>(p)), t) << "u=" << u << " s=" << s;
            EXPECT_EQ(Integer(t.value() % static_cast<unsigned long>(p)), Integer(static_cast<unsigned long>(u)));
            if (u != 0) {
                EXPECT_EQ(t.pow(static_cast<unsigned long>(p - 1)).value(), 1);
            }
        }
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, TeichmullerGrid, ::testing::Values(3, 5, 7, 11, 13));

TEST(Teichmuller, KnownValues) {
    EXPECT_EQ(pvx::teichmuller_lift(2, 5, 3).value(), 57);
    EXPECT_EQ(pvx::teichmuller_lift(2, 5, 1).value(), 2);
    EXPECT_EQ(pvx::teichmuller_lift(4, 5, 2).value(), 24);
    EXPECT_THROW(pvx::teichmuller_lift(5, 5, 1), pvx::precondition_error);
    EXPECT_THROW(pvx::teichmuller_lift(1, 5, 0), pvx::precondition_error);
}

TEST(Valuation, IntegersAndRationals) {
    EXPECT_EQ(pvx::padic_valuation(Integer(72), 3), 2);
    EXPECT_EQ(pvx::padic_valuation(Integer(-250), 5), 3);
    EXPECT_EQ(pvx::padic_valuation(Rational(9, 25), 5), -2);
    EXPECT_THROW(pvx::padic_valuation(Integer(0), 3), pvx::undefined_valuation);
}

TEST(Pochhammer, PositiveAndNegativeIndex) {
    const Rational x(1, 2), one(1);
    EXPECT_EQ(pvx::pochhammer(x, 3, one), Rational(15, 8));
    EXPECT_EQ(pvx::pochhammer(x, 0, one), Rational(1));
    // (x)_{-2} = 1 / ((x-1)(x-2))
    EXPECT_EQ(pvx::pochhammer(x, -2, one), Rational(4, 3));
    EXPECT_THROW(pvx::pochhammer(Rational(1), -1, one), pvx::division_by_zero);
    for (long d = -3; d <= 3; ++d)
        for (long e = -3; e <= 3; ++e) {
            // (x)_{d+e} = (x)_d (x+d)_e
            const Rational y(2, 7);
            EXPECT_EQ(pvx::pochhammer(y, d + e, one), pvx::pochhammer(y, d, one) * pvx::pochhammer(Rational(y + d), e, one));
        }
}

TEST(RationalBinomial, MatchesIntegerBinomial) {
    for (unsigned long n = 0; n <= 12; ++n)
        for (unsigned long k = 0; k <= n + 2; ++k)
            EXPECT_EQ(pvx::rational_binomial(Rational(static_cast<long>(n)), k), Rational(k <= n ? pvx::binomial(n, k) : Integer(0)));
    EXPECT_EQ(pvx::rational_binomial(Rational(-1, 2), 2), Rational(3, 8));
}

TEST(ReduceRational, DenominatorsInvertible) {
    EXPECT_EQ(pvx::reduce_rational_mod(Rational(1, 4), 3, 2).value(), 7);
    EXPECT_EQ(pvx::reduce_rational_mod(Rational(-9, 64), 5, 1).value(), 4);
    EXPECT_THROW(pvx::reduce_rational_mod(Rational(1, 3), 3, 2), pvx::non_integral_error);
}

TEST(Generators, SmallestAndMembership) {
    EXPECT_EQ(pvx::find_generator(7), 3u);
    EXPECT_EQ(pvx::find_generator(23), 5u);
    EXPECT_TRUE(pvx::is_generator(5, 7));
    EXPECT_FALSE(pvx::is_generator(2, 7));
    EXPECT_THROW(pvx::find_generator(8), pvx::precondition_error);
}

TEST(QuadraticCharacter, EulerCriterion) {
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
        int sum = 0;
        for (std::uint64_t u = 1; u < p; ++u) sum += pvx::quadratic_character(Integer(static_cast<unsigned long>(u)), p);
        EXPECT_EQ(sum, 0);
        EXPECT_EQ(pvx::quadratic_character(Integer(0), p), 0);
        EXPECT_EQ(pvx::quadratic_character(Integer(4), p), 1);
    }
}
