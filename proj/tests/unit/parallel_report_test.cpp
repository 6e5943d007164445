#include <gtest/gtest.h>

#include <stdexcept>

#include "pvx/parallel.hpp"
#include "pvx/report.hpp"

TEST(ParallelMap, PreservesOrderForAnyWorkerCount) {
    std::vector<int> in(97);
    for (int i = 0; i < 97; ++i) in[static_cast<std::size_t>(i)] = i;
    for (unsigned jobs : {1u, 2u, 5u, 16u}) {
        const auto out = pvx::parallel_map(in, [](int x) { return x * x; }, jobs);
        ASSERT_EQ(out.size(), in.size());
        for (int i = 0; i < 97; ++i) EXPECT_EQ(out[static_cast<std::size_t>(i)], i * i);
    }
}

TEST(ParallelMap, RethrowsWorkerException) {
    const std::vector<int> in{1, 2, 3, 4};
    auto fn = [](int x) {
        if (x == 3) throw std::runtime_error("boom");
        return x;
    };
    EXPECT_THROW(pvx::parallel_map(in, fn, 3), std::runtime_error);
    EXPECT_TRUE(pvx::parallel_map(std::vector<int>{}, fn, 2).empty());
}

TEST(Report, DecimalStringsAndStableLayout) {
    const pvx::OmegaParam w(1, 2);
    const auto T = pvx::compute_Ts(1, 2, w, pvx::PrimeData(3, 2, w));
    const auto j = pvx::to_json(T);
    EXPECT_EQ(j.dump(), R"({"k":1,"n":2,"omega":"1/2","p":3,"s":2,"sign":1,"degree":4,"coeffs":["1","16","36","16","1"],"unsigned_coeffs":["1","16","36","16","1"]})");
    const auto doc = pvx::document("ts");
    EXPECT_EQ(doc["schema_version"], "1.0");
    EXPECT_EQ(doc["kind"], "ts");
}

TEST(Report, WitnessSerialization) {
    auto r = pvx::make_report("dwork", {{"p", "3"}});
    r.pass = false;
    r.modulus = 9;
    r.witness = pvx::Witness{4, pvx::Integer(1), pvx::Integer(7)};
    const auto j = pvx::to_json(r);
    EXPECT_EQ(j["verdict"], "fail");
    EXPECT_EQ(j["witness"]["lhs"], "1");
    EXPECT_EQ(j["modulus"], "9");
}

TEST(Report, LargeCoefficientsStayExact) {
    const pvx::OmegaParam w(1, 2);
    const auto j = pvx::to_json(pvx::compute_Ts(1, 2, w, pvx::PrimeData(7, 2, w)));
    EXPECT_EQ(j["coeffs"][12], "7312459672336");
}
