#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "naive.hpp"
#include "pvx/coeff_engine.hpp"

using pvx::Integer;
using pvx::OmegaParam;
using pvx::PrimeData;
using pvx::QuiverModel;
using pvx::ZPoly;

namespace {

ZPoly as_poly(const std::vector<oracle::Int>& c) { return pvx::zpoly(std::vector<Integer>(c.begin(), c.end())); }

struct Case {
    int k;
    int n;
    long r;
    long q;
    std::uint64_t p;
    unsigned s;
};

std::string name(const Case& c) {
    return "k" + std::to_string(c.k) + "n" + std::to_string(c.n) + "w" + std::to_string(c.r) + "_" + std::to_string(c.q) + "p" +
           std::to_string(c.p) + "s" + std::to_string(c.s);
}

}  // namespace

class NaiveExpansion : public ::testing::TestWithParam<Case> {};

TEST_P(NaiveExpansion, EngineMatchesDenseExpansion) {
    const auto c = GetParam();
    const QuiverModel m(c.k, c.n);
    const OmegaParam w(c.r, c.q);
    const PrimeData prime(c.p, c.s, w);
    const auto list = pvx::factor_list_phi_s(m, w, prime);
    const auto target = pvx::make_target(m, prime);
    const ZPoly expected = as_poly(oracle::coefficient(list, target.exponents));
    for (auto strategy : {pvx::EliminationStrategy::eps, pvx::EliminationStrategy::min_degree, pvx::EliminationStrategy::natural})
        EXPECT_EQ(pvx::extract_coefficient(list, target, pvx::elimination_order(m, list, strategy)), expected);
    const auto T = pvx::compute_Ts(c.k, c.n, w, prime);
    EXPECT_EQ(T.unsigned_poly, expected);
}

INSTANTIATE_TEST_SUITE_P(Small, NaiveExpansion,
                         ::testing::Values(Case{1, 2, 1, 2, 3, 1}, Case{1, 2, 1, 2, 5, 1}, Case{1, 2, 1, 2, 3, 2}, Case{1, 3, 1, 2, 3, 1},
                                           Case{1, 3, 1, 2, 5, 1}, Case{1, 2, 1, 3, 7, 1}, Case{1, 3, 1, 3, 7, 1}, Case{1, 4, 1, 2, 3, 1},
                                           Case{2, 4, 1, 2, 3, 1}, Case{2, 4, 1, 3, 7, 1}),
                         [](const auto& info) { return name(info.param); });

TEST(CoeffEngine, EveryPermutationOfVariablesAgrees) {
    const QuiverModel m(2, 4);
    const OmegaParam w(1, 2);
    const PrimeData prime(3, 1, w);
    const auto list = pvx::factor_list_phi_s(m, w, prime);
    const auto target = pvx::make_target(m, prime);
    std::vector<int> order(m.num_variables());
    std::iota(order.begin(), order.end(), 0);
    const ZPoly first = pvx::extract_coefficient(list, target, order);
    int count = 0;
    do {
        EXPECT_EQ(pvx::extract_coefficient(list, target, order), first);
        ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    EXPECT_EQ(count, 24);
}

TEST(CoeffEngine, RejectsBadOrdersAndTargets) {
    const QuiverModel m(1, 3);
    const OmegaParam w(1, 2);
    const PrimeData prime(3, 1, w);
    const auto list = pvx::factor_list_phi_s(m, w, prime);
    const auto target = pvx::make_target(m, prime);
    const std::vector<int> dup{0, 0}, short_order{0};
    EXPECT_THROW(pvx::extract_coefficient(list, target, dup), pvx::precondition_error);
    EXPECT_THROW(pvx::extract_coefficient(list, target, short_order), pvx::precondition_error);
    EXPECT_THROW(pvx::extract_coefficient(list, pvx::TargetMonomial{{2}}), pvx::precondition_error);
}

TEST(CoeffEngine, FrozenValues) {
    const OmegaParam half(1, 2);
    EXPECT_EQ(pvx::compute_Ts(1, 2, half, PrimeData(3, 1, half)).signed_poly, pvx::zpoly({1, 1}));
    EXPECT_EQ(pvx::compute_Ts(1, 2, half, PrimeData(5, 1, half)).signed_poly, pvx::zpoly({1, 4, 1}));
    EXPECT_EQ(pvx::compute_Ts(1, 2, half, PrimeData(3, 2, half)).signed_poly, pvx::zpoly({1, 16, 36, 16, 1}));
    EXPECT_EQ(pvx::compute_Ts(2, 4, half, PrimeData(3, 1, half)).signed_poly, pvx::zpoly({1, 3, 1}));
    EXPECT_EQ(pvx::compute_Ts(2, 4, half, PrimeData(5, 1, half)).signed_poly, pvx::zpoly({1, 36, 84, 36, 1}));
    // Reversing the single chain factor makes this one anti-palindromic.
    EXPECT_EQ(pvx::compute_Ts(1, 3, half, PrimeData(3, 1, half)).signed_poly, pvx::zpoly({1, -1}));
    const auto t = pvx::compute_Ts(1, 2, half, PrimeData(3, 1, half));
    EXPECT_EQ(t.sign, -1);
    EXPECT_EQ(t.unsigned_poly, pvx::zpoly({-1, -1}));
}

TEST(CoeffEngine, LegendreClosedForm) {
    const OmegaParam half(1, 2);
    for (auto [p, smax] : {std::pair<std::uint64_t, unsigned>{3, 3}, {5, 2}, {7, 2}, {11, 1}, {13, 1}})
        for (unsigned s = 1; s <= smax; ++s)
            EXPECT_EQ(pvx::compute_Ts(1, 2, half, PrimeData(p, s, half)).signed_poly, as_poly(oracle::legendre_T(p, s)))
                << "p=" << p << " s=" << s;
}

TEST(CoeffEngine, TrivialFamilyMember) {
    const auto t = pvx::trivial_Ts(pvx::TsParams{1, 2, OmegaParam(1, 2), 3});
    EXPECT_EQ(t.s, 0u);
    EXPECT_EQ(t.signed_poly, pvx::zpoly({1}));
}

class ShapeGrid : public ::testing::TestWithParam<Case> {};

TEST_P(ShapeGrid, NormalizationDegreeSignReflection) {
    const auto c = GetParam();
    const QuiverModel m(c.k, c.n);
    const OmegaParam w(c.r, c.q);
    const PrimeData prime(c.p, c.s, w);
    const auto T = pvx::compute_Ts(c.k, c.n, w, prime);
    EXPECT_EQ(T.signed_poly.coeff(0), 1);
    EXPECT_EQ(T.signed_poly.degree(), static_cast<long>(T.expected_degree()));
    EXPECT_EQ(T.sign, pvx::predicted_sign(m, w, prime));
    EXPECT_TRUE(pvx::is_reflection_symmetric(T.signed_poly, T.signed_poly.degree(), pvx::reflection_sign(m, w, prime)));
    EXPECT_EQ(T.signed_poly, Integer(T.sign) * T.unsigned_poly);
}

INSTANTIATE_TEST_SUITE_P(Grid, ShapeGrid,
                         ::testing::Values(Case{1, 2, 1, 2, 3, 2}, Case{1, 2, 1, 3, 7, 1}, Case{1, 2, 2, 5, 11, 1}, Case{1, 3, 1, 2, 3, 1},
                                           Case{1, 3, 1, 2, 3, 2}, Case{1, 3, 1, 2, 5, 1}, Case{1, 3, 1, 4, 5, 1}, Case{1, 3, 1, 3, 13, 1},
                                           Case{1, 4, 1, 2, 5, 1}, Case{1, 5, 1, 2, 3, 1}, Case{2, 4, 1, 2, 3, 2}, Case{2, 4, 1, 4, 5, 1},
                                           Case{2, 4, 1, 3, 7, 1}, Case{2, 5, 1, 2, 3, 1}),
                         [](const auto& info) { return name(info.param); });

// The coefficient of prod x^{p-1} in Phi_1 is (-1)^{n-1} times the sum of Phi_1 over F_p^{n-1}.
class FpSum : public ::testing::TestWithParam<Case> {};

TEST_P(FpSum, MatchesUnsignedT1) {
    const auto c = GetParam();
    const OmegaParam w(c.r, c.q);
    const auto T = pvx::compute_Ts(1, c.n, w, PrimeData(c.p, 1, w));
    const Integer pp(static_cast<unsigned long>(c.p));
    for (std::uint64_t z = 0; z < c.p; ++z) {
        Integer expected = pvx::mod(T.unsigned_poly.evaluate(Integer(static_cast<unsigned long>(z))), pp);
        if (c.n % 2 == 1) expected = pvx::mod(-expected, pp);
        EXPECT_EQ(pvx::fp_sum_oracle(1, c.n, w, c.p, z), expected) << "z=" << z;
    }
}

INSTANTIATE_TEST_SUITE_P(Small, FpSum,
                         ::testing::Values(Case{1, 2, 1, 2, 3, 1}, Case{1, 2, 1, 2, 5, 1}, Case{1, 2, 1, 3, 7, 1}, Case{1, 3, 1, 2, 5, 1},
                                           Case{1, 3, 1, 3, 7, 1}, Case{1, 4, 1, 2, 3, 1}),
                         [](const auto& info) { return name(info.param); });

TEST(FpSum, RejectsHigherRank) { EXPECT_THROW(pvx::fp_sum_oracle(2, 4, OmegaParam(1, 2), 3, 1), pvx::precondition_error); }

TEST(CoeffEngine, SignAtZeroIndependentOfStrategy) {
    const OmegaParam w(1, 2);
    for (auto [k, n] : {std::pair{1, 2}, {1, 3}, {2, 4}}) {
        const QuiverModel m(k, n);
        const PrimeData prime(5, 1, w);
        EXPECT_EQ(pvx::sign_at_zero(m, w, prime, pvx::EliminationStrategy::eps),
                  pvx::sign_at_zero(m, w, prime, pvx::EliminationStrategy::natural));
    }
}
