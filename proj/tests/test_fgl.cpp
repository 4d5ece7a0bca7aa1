#include <gtest/gtest.h>

#include <chrono>

#include "fglops/fgl.hpp"
#include "oracles.hpp"

using namespace fglops;

namespace {

const RingPtr Z = RingDescriptor::integers();

Series xy_series(std::uint32_t degree, const std::function<Series(const Series&, const Series&)>& f) {
    auto ring = fgl_ring(Z, degree);
    return f(Series::variable(ring, "x"), Series::variable(ring, "y"));
}

} // namespace

TEST(FglValidate, BuiltinsAreValid) {
    EXPECT_TRUE(FormalGroupLaw::additive(Z, 8).is_additive());
    EXPECT_FALSE(FormalGroupLaw::multiplicative(Z, 8).is_additive());
    EXPECT_EQ(FormalGroupLaw::builtin("multiplicative", Z, 5).name(), "multiplicative");
    EXPECT_THROW(FormalGroupLaw::builtin("lazard", Z, 5), InvalidArgument);
}

TEST(FglValidate, UnitalityWitness) {
    auto bad = xy_series(6, [](const Series& x, const Series& y) { return x + y + x * x; });
    try {
        fgl_validate(bad);
        FAIL() << "expected ViolatedAxiom";
    } catch (const ViolatedAxiom& e) {
        EXPECT_EQ(e.violation().axiom, Axiom::Unit);
        EXPECT_EQ(e.violation().monomial, "x^2");
    }
}

TEST(FglValidate, CommutativityAndAssociativityWitnesses) {
    auto noncomm = xy_series(6, [](const Series& x, const Series& y) { return x + y + x * x * y; });
    auto v = fgl_check(noncomm);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->axiom, Axiom::Commutativity);
    EXPECT_EQ(v->monomial, "x^2*y");

    // x + y + x^2 y^2 is unital and commutative but not associative.
    auto nonassoc = xy_series(6, [](const Series& x, const Series& y) { return x + y + x * x * y * y; });
    v = fgl_check(nonassoc);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->axiom, Axiom::Associativity);
}

TEST(FglValidate, RejectsMalformedRings) {
    auto ring = SeriesRing::make(Z, {{"x", 4, std::nullopt}, {"w", 4, std::nullopt}});
    EXPECT_THROW(fgl_check(Series::variable(ring, "x")), InvalidArgument);
    auto uneven = SeriesRing::make(Z, {{"x", 4, std::nullopt}, {"y", 5, std::nullopt}});
    EXPECT_THROW(fgl_check(Series::variable(uneven, "x")), InvalidArgument);
}

TEST(FglValidate, TruncatedInfiniteLawValidates) {
    // F(x,y) = (x + y) / (1 + xy) is a formal group law over Z with infinitely
    // many terms; its truncation must still pass.
    auto ring = fgl_ring(Z, 9);
    auto x = Series::variable(ring, "x");
    auto y = Series::variable(ring, "y");
    auto law = (x + y) * series_invert(Series::one(ring) + x * y);
    EXPECT_FALSE(fgl_check(law));
}

TEST(FormalSum, Examples) {
    auto ring = SeriesRing::make(Z, {{"t", 5, std::nullopt}, {"z", 3, BigInt(2)}});
    auto t = Series::variable(ring, "t");
    auto z = Series::variable(ring, "z");
    EXPECT_EQ(formal_sum(FormalGroupLaw::additive(Z, 5), t, z), t + z);
    EXPECT_EQ(formal_sum(FormalGroupLaw::multiplicative(Z, 5), t, z), t + z + t * z);
    for (const auto& law : {FormalGroupLaw::additive(Z, 5), FormalGroupLaw::multiplicative(Z, 5)})
        EXPECT_EQ(formal_sum(law, t, Series::zero(ring)), t);
    EXPECT_THROW(formal_sum(FormalGroupLaw::additive(Z, 5), Series::one(ring) + t, z), InvalidArgument);
}

TEST(NSeries, Examples) {
    auto add = FormalGroupLaw::additive(Z, 10);
    auto mul = FormalGroupLaw::multiplicative(Z, 10);
    EXPECT_EQ(n_series(add, 2).to_string(), "2*x");
    EXPECT_EQ(n_series(mul, 2).to_string(), "2*x + x^2");
    EXPECT_EQ(n_series(add, 1).to_string(), "x");
    EXPECT_EQ(n_series(mul, 1).to_string(), "x");
    EXPECT_TRUE(n_series(mul, 0).is_zero());
}

TEST(NSeries, MultiplicativeMatchesBinomialOracle) {
    // [n](x) = (1 + x)^n - 1 for x + y + xy
    auto mul = FormalGroupLaw::multiplicative(Z, 10);
    for (unsigned n = 0; n <= 8; ++n) {
        auto s = n_series(mul, n);
        for (unsigned k = 0; k < 10; ++k) {
            oracle::BigInt expected = k == 0 ? 0 : oracle::binomial(n, k);
            ASSERT_EQ(coefficient_of(s, {k}).constant_value(), expected) << "n=" << n << " k=" << k;
        }
    }
}

TEST(FglProperties, FormalSumCommutativeAssociative) {
    std::mt19937_64 rng(31);
    auto ring = SeriesRing::make(Z, {{"t", 5, std::nullopt}, {"z", 4, BigInt(2)}});
    auto ring3 = SeriesRing::make(Z, {{"t", 5, std::nullopt}, {"z", 4, std::nullopt}});
    for (const auto& law : {FormalGroupLaw::additive(Z, 6), FormalGroupLaw::multiplicative(Z, 6)})
        for (const auto& r : {ring, ring3})
            for (int trial = 0; trial < 40; ++trial) {
                auto draw = [&] {
                    auto s = oracle::from_sparse(r, oracle::random_sparse(rng, 2, 5, 4, 5));
                    return s - Series::constant(r, s.constant_term());
                };
                auto a = draw(), b = draw(), c = draw();
                ASSERT_EQ(formal_sum(law, a, b), formal_sum(law, b, a));
                ASSERT_EQ(formal_sum(law, formal_sum(law, a, b), c), formal_sum(law, a, formal_sum(law, b, c)));
            }
}

TEST(FglProperties, NSeriesAdditivity) {
    for (const auto& law : {FormalGroupLaw::additive(Z, 12), FormalGroupLaw::multiplicative(Z, 12)})
        for (unsigned m = 0; m <= 4; ++m)
            for (unsigned n = 0; n <= 4; ++n)
                ASSERT_EQ(n_series(law, m + n), formal_sum(law, n_series(law, m), n_series(law, n)))
                    << law.name() << " m=" << m << " n=" << n;
}

TEST(FglProperties, TwoSeriesModTwoHasNoLinearTerm) {
    auto f2 = RingDescriptor::integers_mod(2);
    for (const auto& law : {FormalGroupLaw::additive(f2, 8), FormalGroupLaw::multiplicative(f2, 8)})
        EXPECT_TRUE(coefficient_of(n_series(law, 2), {1}).is_zero()) << law.name();
    EXPECT_TRUE(n_series(FormalGroupLaw::additive(f2, 8), 2).is_zero());
}

TEST(FglValidate, DegreeTwentyIsFast) {
    auto start = std::chrono::steady_clock::now();
    FormalGroupLaw::additive(Z, 20);
    FormalGroupLaw::multiplicative(Z, 20);
    auto elapsed = std::chrono::steady_clock::now() - start;
    EXPECT_LT(std::chrono::duration<double>(elapsed).count(), 1.0);
}
