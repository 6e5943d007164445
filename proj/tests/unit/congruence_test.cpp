#include <gtest/gtest.h>

#include "pvx/congruence.hpp"
#include "pvx/vertex.hpp"

using pvx::Integer;
using pvx::OmegaParam;
using pvx::ZPoly;

namespace {

struct Family {
    int k;
    int n;
    long r;
    long q;
    std::uint64_t p;
    unsigned smax;
};

std::string name(const Family& f) {
    return "k" + std::to_string(f.k) + "n" + std::to_string(f.n) + "w" + std::to_string(f.r) + "_" + std::to_string(f.q) + "p" +
           std::to_string(f.p);
}

// T_{s+1}(z) T_{s-1}(z^p) - T_s(z) T_s(z^p), written out without the library's checker.
ZPoly dwork_defect(const std::vector<pvx::TsPolynomial>& Ts, unsigned s) {
    const auto p = Ts[0].params.p;
    return Ts[s + 1].signed_poly * pvx::substitute_power(Ts[s - 1].signed_poly, p) -
           Ts[s].signed_poly * pvx::substitute_power(Ts[s].signed_poly, p);
}

}  // namespace

class Congruences : public ::testing::TestWithParam<Family> {};

TEST_P(Congruences, DworkGhostTelescoping) {
    const auto f = GetParam();
    const OmegaParam w(f.r, f.q);
    const auto Ts = pvx::compute_Ts_family(f.k, f.n, w, f.p, f.smax);
    for (unsigned s = 1; s + 1 <= f.smax; ++s) {
        const Integer m = pvx::ipow(f.p, s);
        const ZPoly defect = dwork_defect(Ts, s);
        for (const auto& c : defect.coeffs()) EXPECT_TRUE(pvx::divides(m, c));
        EXPECT_TRUE(pvx::dwork_check(Ts, s).pass);
        EXPECT_TRUE(pvx::dwork_check(Ts, s, pvx::Convention::unsigned_T).pass);
        for (unsigned mm = 0; mm <= s; ++mm) EXPECT_TRUE(pvx::telescoping_check(Ts, s + 1, mm).pass);
    }
    const auto G = pvx::ghost_sequence(Ts);
    EXPECT_TRUE(pvx::ghost_reconstruction_check(Ts, G).pass);
    EXPECT_TRUE(pvx::ghost_vanishing_check(G).pass);
    EXPECT_EQ(G.G[0], Ts[1].unsigned_poly);
}

INSTANTIATE_TEST_SUITE_P(Grid, Congruences,
                         ::testing::Values(Family{1, 2, 1, 2, 3, 3}, Family{1, 2, 1, 2, 5, 2}, Family{1, 3, 1, 2, 3, 3},
                                           Family{1, 2, 1, 3, 7, 2}, Family{1, 3, 1, 4, 5, 2}, Family{2, 4, 1, 2, 3, 2},
                                           Family{2, 4, 1, 2, 5, 2}),
                         [](const auto& info) { return name(info.param); });

TEST(Ghosts, FrozenSecondGhostAndDirectRoute) {
    const OmegaParam w(1, 2);
    const auto Ts = pvx::compute_Ts_family(1, 2, w, 3, 2);
    const auto G = pvx::ghost_sequence(Ts);
    EXPECT_EQ(G.G[1], pvx::zpoly({0, 15, 36, 15}));
    EXPECT_EQ(pvx::ghost_two_direct(1, 2, w, 3), G.G[1]);
    EXPECT_EQ(pvx::ghost_two_direct(2, 4, w, 3), pvx::ghost_sequence(pvx::compute_Ts_family(2, 4, w, 3, 2)).G[1]);
}

TEST(Dwork, TamperedFamilyYieldsWitness) {
    const OmegaParam w(1, 2);
    auto Ts = pvx::compute_Ts_family(1, 2, w, 3, 2);
    Ts[2].signed_poly.set_coeff(2, Ts[2].signed_poly.coeff(2) + 1);
    const auto r = pvx::dwork_check(Ts, 1);
    ASSERT_FALSE(r.pass);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->degree, 2);
    EXPECT_EQ(r.modulus, 3);
}

TEST(Dwork, RejectsMalformedFamilies) {
    const OmegaParam w(1, 2);
    auto Ts = pvx::compute_Ts_family(1, 2, w, 3, 2);
    EXPECT_THROW(pvx::dwork_check(Ts, 2), pvx::precondition_error);
    EXPECT_THROW(pvx::dwork_check(Ts, 0), pvx::precondition_error);
    auto mixed = Ts;
    mixed[1] = pvx::compute_Ts(1, 2, w, pvx::PrimeData(5, 1, w));
    EXPECT_THROW(pvx::dwork_check(mixed, 1), pvx::precondition_error);
    std::swap(Ts[1], Ts[2]);
    EXPECT_THROW(pvx::ghost_sequence(Ts), pvx::precondition_error);
}

TEST(InfiniteProduct, MatchesVertexModPowers) {
    const OmegaParam w(1, 2);
    const auto Ts = pvx::compute_Ts_family(1, 2, w, 3, 3);
    const auto V = pvx::vertex_closed_form_k1(2, w, 12);
    for (unsigned a = 1; a <= 3; ++a) EXPECT_TRUE(pvx::infinite_product_check(a, 12, pvx::reduce_vertex(V, 3, a), Ts[a], Ts[a - 1]).pass);
    auto tampered = pvx::reduce_vertex(V, 3, 2);
    tampered[5] += 3;
    const auto r = pvx::infinite_product_check(2, 12, tampered, Ts[2], Ts[1]);
    ASSERT_FALSE(r.pass);
    EXPECT_EQ(r.witness->degree, 5);
    EXPECT_THROW(pvx::infinite_product_check(2, 12, tampered, Ts[2], Ts[0]), pvx::precondition_error);
}

TEST(InfiniteProduct, ProductHelpers) {
    EXPECT_EQ(pvx::product_length(3, 8), 2u);
    EXPECT_EQ(pvx::product_length(3, 9), 3u);
    EXPECT_EQ(pvx::product_length(5, 0), 1u);
    const ZPoly T = pvx::zpoly({1, 1});
    // (1+z)(1+z^3) truncated at 5
    EXPECT_EQ(pvx::truncated_frobenius_product(T, 3, 0, 5), pvx::zpoly({1, 1, 0, 1, 1}));
    EXPECT_EQ(pvx::truncated_frobenius_product(T, 3, 1, 5), pvx::zpoly({1, 0, 0, 1}));
}
