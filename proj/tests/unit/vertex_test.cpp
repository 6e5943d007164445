#include <gtest/gtest.h>

#include "pvx/vertex.hpp"

using pvx::OmegaParam;
using pvx::Rational;

TEST(Vertex, ClosedFormLegendre) {
    const auto v = pvx::vertex_closed_form_k1(2, OmegaParam(1, 2), 4);
    EXPECT_EQ(v.coeffs, (std::vector<Rational>{Rational(1), Rational(1, 4), Rational(9, 64), Rational(25, 256), Rational(1225, 16384)}));
}

TEST(Vertex, ClosedFormSignForOddN) {
    const auto v = pvx::vertex_closed_form_k1(3, OmegaParam(1, 2), 2);
    // (-1)^{3d} binom(-1/2, d)^3
    EXPECT_EQ(v.coeffs[1], Rational(1, 8));
    EXPECT_EQ(v.coeffs[2], Rational(27, 512));
}

class VertexRoutes : public ::testing::TestWithParam<std::tuple<int, long, long>> {};

TEST_P(VertexRoutes, AllRationalRoutesAgreeForRankOne) {
    const auto [n, r, q] = GetParam();
    const OmegaParam w(r, q);
    const auto closed = pvx::vertex_closed_form_k1(n, w, 5);
    EXPECT_EQ(pvx::vertex_localization(1, n, w, 5, 1).coeffs, closed.coeffs);
    EXPECT_EQ(pvx::vertex_residue(1, n, w, 5).coeffs, closed.coeffs);
}

INSTANTIATE_TEST_SUITE_P(Grid, VertexRoutes,
                         ::testing::Values(std::tuple{2, 1L, 2L}, std::tuple{3, 1L, 2L}, std::tuple{2, 1L, 3L}, std::tuple{4, 1L, 3L},
                                           std::tuple{3, 2L, 5L}));

TEST(Vertex, GrassmannianFrozenValues) {
    const OmegaParam w(1, 2);
    const std::vector<Rational> expected{Rational(1), Rational(3, 8), Rational(467, 2048), Rational(2679, 16384)};
    EXPECT_EQ(pvx::vertex_localization(2, 4, w, 3, 1).coeffs, expected);
    EXPECT_EQ(pvx::vertex_residue(2, 4, w, 3).coeffs, expected);
}

TEST(Vertex, ParallelLocalizationIsDeterministic) {
    const OmegaParam w(1, 3);
    EXPECT_EQ(pvx::vertex_localization(1, 3, w, 6, 1).coeffs, pvx::vertex_localization(1, 3, w, 6, 4).coeffs);
}

TEST(Vertex, PadicLimitAgreesWithRationalReduction) {
    const OmegaParam w(1, 2);
    for (std::uint64_t p : {3, 5})
        for (unsigned a = 1; a <= 2; ++a) {
            const auto lim = pvx::vertex_padic_limit(1, 2, w, p, a, 10);
            EXPECT_EQ(lim.coeffs, pvx::reduce_vertex(pvx::vertex_closed_form_k1(2, w, 10), p, a)) << "p=" << p << " a=" << a;
        }
    const auto gr = pvx::vertex_padic_limit(2, 4, w, 3, 2, 3);
    EXPECT_EQ(gr.coeffs, pvx::reduce_vertex(pvx::vertex_residue(2, 4, w, 3), 3, 2));
}

TEST(Vertex, DistanceProfileFrozen) {
    const OmegaParam w(1, 2);
    const auto Ts = pvx::compute_Ts_family(1, 2, w, 3, 3);
    const auto V = pvx::vertex_closed_form_k1(2, w, 5);
    const auto p1 = pvx::padic_distance_profile(Ts, V, 1);
    ASSERT_EQ(p1.size(), 3u);
    // c_{s,1} = ((3^s-1)/2)^2 against 1/4: v_3(m^2 - 1/4) = v_3((2m-1)(2m+1)) = s
    for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(p1[s], static_cast<long>(s + 1));
    const auto p0 = pvx::padic_distance_profile(Ts, V, 0);
    for (const auto& v : p0) EXPECT_FALSE(v.has_value());
    EXPECT_THROW(pvx::padic_distance_profile(Ts, V, 6), pvx::precondition_error);
}

TEST(Vertex, RejectsBadParameters) {
    EXPECT_THROW(pvx::vertex_closed_form_k1(2, OmegaParam(1, 2), -1), pvx::precondition_error);
    EXPECT_THROW(pvx::vertex_localization(2, 3, OmegaParam(1, 2), 2), pvx::precondition_error);
    EXPECT_THROW(pvx::vertex_padic_limit(1, 2, OmegaParam(1, 2), 3, 0, 2), pvx::precondition_error);
    EXPECT_THROW(pvx::vertex_padic_limit(1, 2, OmegaParam(1, 3), 5, 1, 2), pvx::precondition_error);
}
