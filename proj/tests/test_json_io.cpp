#include <gtest/gtest.h>

#include "fglops/json_io.hpp"
#include "oracles.hpp"

using namespace fglops;

namespace {

const RingPtr Z = RingDescriptor::integers();

} // namespace

TEST(JsonIo, CoefficientRings) {
    EXPECT_EQ(coeff_ring_to_json(*Z), Json("Z"));
    EXPECT_EQ(coeff_ring_to_json(*RingDescriptor::integers_mod(6)), Json("Z/6"));
    auto poly = RingDescriptor::polynomial(RingDescriptor::integers_mod(2), {"a1", "a2"});
    auto j = coeff_ring_to_json(*poly);
    EXPECT_EQ(j.dump(), R"({"poly":{"base":"Z/2","vars":["a1","a2"]}})");
    for (const auto& r : {Z, RingDescriptor::integers_mod(6), poly})
        EXPECT_TRUE(same_ring(coeff_ring_from_json(coeff_ring_to_json(*r)), r));
}

TEST(JsonIo, SeriesLayout) {
    auto ring = SeriesRing::make(Z, {{"t", 5, std::nullopt}, {"z", 3, BigInt(2)}});
    auto f = Series::variable(ring, "t") * Series::variable(ring, "z") + Series::constant(ring, BigInt(-3));
    EXPECT_EQ(series_to_json(f).dump(),
              R"({"ring":{"coeff":"Z","vars":[{"name":"t","trunc":5},{"name":"z","trunc":3,"torsion":2}]},)"
              R"("terms":[{"exp":[0,0],"coef":"-3"},{"exp":[1,1],"coef":"1"}]})");
}

TEST(JsonIo, SchemaErrors) {
    auto parse = [](const char* text) { return series_from_json(Json::parse(text)); };
    EXPECT_THROW(parse(R"({"terms":[]})"), ParseError);
    EXPECT_THROW(parse(R"({"ring":{"coeff":"Q","vars":[]},"terms":[]})"), ParseError);
    EXPECT_THROW(parse(R"({"ring":{"coeff":"Z","vars":[{"name":"t"}]},"terms":[]})"), ParseError);
    EXPECT_THROW(parse(R"({"ring":{"coeff":"Z","vars":[{"name":"t","trunc":3}]},"terms":[{"exp":[1,2],"coef":"1"}]})"),
                 ParseError);
    EXPECT_THROW(parse(R"({"ring":{"coeff":"Z","vars":[{"name":"t","trunc":3}]},"terms":[{"exp":[1],"coef":"x"}]})"),
                 ParseError);
    EXPECT_THROW(parse(R"({"ring":{"coeff":"Z","vars":[{"name":"t","trunc":3}]},"terms":[{"exp":[-1],"coef":"1"}]})"),
                 ParseError);
    EXPECT_THROW(parse(R"([1,2])"), ParseError);
}

TEST(JsonIo, OutOfRangeTermsAreDropped) {
    auto f = series_from_json(
        Json::parse(R"({"ring":{"coeff":"Z","vars":[{"name":"t","trunc":3}]},"terms":[{"exp":[7],"coef":"1"}]})"));
    EXPECT_TRUE(f.is_zero());
}

TEST(JsonIoProperties, SeriesRoundTrip) {
    std::mt19937_64 rng(97);
    auto poly = RingDescriptor::polynomial(RingDescriptor::integers_mod(2), {"a1", "a2"});
    std::vector<SeriesRingPtr> rings{
        SeriesRing::make(Z, {{"t", 5, std::nullopt}, {"z", 3, BigInt(2)}}),
        SeriesRing::make(RingDescriptor::integers_mod(9), {{"x", 6, std::nullopt}}),
        SeriesRing::make(Z, {{"x", 4, std::nullopt}, {"y", 4, std::nullopt}, {"w", 3, BigInt(6)}}),
    };
    for (const auto& ring : rings)
        for (int trial = 0; trial < 100; ++trial) {
            auto f = oracle::from_sparse(ring, oracle::random_sparse(rng, ring->variables().size(), 8, 6, 1000));
            auto j = series_to_json(f);
            auto back = series_from_json(Json::parse(j.dump()));
            ASSERT_EQ(back, f);
            ASSERT_EQ(series_to_json(back).dump(), j.dump());
        }
    auto ring = SeriesRing::make(poly, {{"t", 4, std::nullopt}});
    auto f = Series::variable(ring, "t") * Coefficient::parse(poly, "a1*a2+a1") + Series::one(ring);
    EXPECT_EQ(series_from_json(series_to_json(f)), f);
}

TEST(JsonIoProperties, ReportRoundTrip) {
    for (auto [degree, z_trunc] : {std::pair{3u, 3u}, std::pair{4u, 3u}, std::pair{3u, 1u}, std::pair{5u, 4u}}) {
        auto ctx = PowerOpContext::hzp(5, z_trunc);
        auto report = exhaustive_search(degree, ctx);
        auto j = report_to_json(report, ctx);
        EXPECT_EQ(j.contains("witness"), report.verdict == Verdict::Satisfiable);
        auto back = report_from_json(Json::parse(j.dump()), ctx);
        EXPECT_EQ(back.verdict, report.verdict);
        EXPECT_EQ(back.degree, report.degree);
        EXPECT_EQ(back.witness, report.witness);
        EXPECT_EQ(report_to_json(back, ctx).dump(), j.dump());
    }
}

TEST(JsonIo, ReportSchemaErrors) {
    auto ctx = PowerOpContext::hzp();
    EXPECT_THROW(report_from_json(Json::parse(R"({"verdict":"maybe"})"), ctx), ParseError);
    auto j = report_to_json(exhaustive_search(3, ctx), ctx);
    j["relations"][0]["monomial"] = "q^2";
    EXPECT_THROW(report_from_json(j, ctx), ParseError);
}
