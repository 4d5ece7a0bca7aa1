#include <gtest/gtest.h>

#include <random>

#include "fglops/coefficients.hpp"

using namespace fglops;

namespace {

RingPtr f2_poly(std::vector<std::string> names) {
    return RingDescriptor::polynomial(RingDescriptor::integers_mod(2), std::move(names));
}

Coefficient random_coefficient(std::mt19937_64& rng, const RingPtr& ring) {
    std::uniform_int_distribution<long long> val(-20, 20);
    if (!ring->is_polynomial())
        return Coefficient::from_integer(ring, val(rng));
    std::uniform_int_distribution<int> n_terms(0, 4), exp(0, 2);
    Coefficient::TermMap terms;
    for (int k = n_terms(rng); k > 0; --k) {
        Exponents e(ring->indeterminates().size());
        for (auto& x : e)
            x = static_cast<std::uint32_t>(exp(rng));
        terms[e] += val(rng);
    }
    return Coefficient::from_terms(ring, std::move(terms));
}

std::vector<RingPtr> sample_rings() {
    return {RingDescriptor::integers(), RingDescriptor::integers_mod(2), RingDescriptor::integers_mod(12),
            RingDescriptor::polynomial(RingDescriptor::integers(), {"a1", "a2"}), f2_poly({"a1", "a2", "a3"})};
}

} // namespace

TEST(RingDescriptor, Invariants) {
    EXPECT_THROW(RingDescriptor::integers_mod(1), InvalidArgument);
    EXPECT_THROW(RingDescriptor::integers_mod(0), InvalidArgument);
    EXPECT_THROW(RingDescriptor::polynomial(RingDescriptor::integers(), {"a", "a"}), InvalidArgument);
    EXPECT_THROW(RingDescriptor::polynomial(RingDescriptor::integers(), {""}), InvalidArgument);
    auto p = RingDescriptor::polynomial(RingDescriptor::integers(), {"a"});
    EXPECT_THROW(RingDescriptor::polynomial(p, {"b"}), InvalidArgument);
    EXPECT_EQ(f2_poly({"a1", "a2"})->to_string(), "Z/2[a1,a2]");
    EXPECT_TRUE(same_ring(f2_poly({"a1"}), f2_poly({"a1"})));
    EXPECT_FALSE(same_ring(f2_poly({"a1"}), f2_poly({"a2"})));
}

TEST(CoeffAdd, Examples) {
    auto f2 = RingDescriptor::integers_mod(2);
    EXPECT_TRUE(coeff_add(Coefficient::one(f2), Coefficient::one(f2)).is_zero());

    auto z = RingDescriptor::integers();
    EXPECT_TRUE(coeff_add(Coefficient::from_integer(z, 3), Coefficient::from_integer(z, -3)).is_zero());

    auto ring = f2_poly({"a2", "a3"});
    auto a2 = Coefficient::indeterminate(ring, "a2");
    auto a3 = Coefficient::indeterminate(ring, "a3");
    EXPECT_EQ(coeff_add(a2 + a3, a3), a2);
}

TEST(CoeffMul, Examples) {
    auto ring = f2_poly({"a1", "a2"});
    auto a1 = Coefficient::indeterminate(ring, "a1");
    auto a2 = Coefficient::indeterminate(ring, "a2");
    EXPECT_EQ(coeff_mul(a1 + a2, a1 + a2), a1 * a1 + a2 * a2);
    EXPECT_EQ((a1 + a2).pow(2).to_string(), "a2^2+a1^2");

    auto z = RingDescriptor::integers();
    EXPECT_EQ(coeff_mul(Coefficient::from_integer(z, 2), Coefficient::from_integer(z, 3)),
              Coefficient::from_integer(z, 6));

    auto f2 = RingDescriptor::integers_mod(2);
    EXPECT_TRUE(coeff_mul(Coefficient::from_integer(f2, 3), Coefficient::from_integer(f2, 5)).is_one());
}

TEST(CoeffInvert, Examples) {
    auto z = RingDescriptor::integers();
    EXPECT_EQ(coeff_invert(Coefficient::from_integer(z, -1)), Coefficient::from_integer(z, -1));
    EXPECT_THROW(coeff_invert(Coefficient::from_integer(z, 2)), NotAUnit);
    EXPECT_THROW(coeff_invert(Coefficient::zero(z)), NotAUnit);

    auto f2 = RingDescriptor::integers_mod(2);
    EXPECT_TRUE(coeff_invert(Coefficient::one(f2)).is_one());

    auto z9 = RingDescriptor::integers_mod(9);
    auto four = Coefficient::from_integer(z9, 4);
    EXPECT_TRUE((four * coeff_invert(four)).is_one());
    EXPECT_THROW(coeff_invert(Coefficient::from_integer(z9, 3)), NotAUnit);

    auto ring = f2_poly({"a1"});
    EXPECT_THROW(coeff_invert(Coefficient::indeterminate(ring, "a1")), NotAUnit);
    EXPECT_THROW(coeff_invert(Coefficient::indeterminate(ring, "a1") + Coefficient::one(ring)), NotAUnit);
    EXPECT_TRUE(coeff_invert(Coefficient::one(ring)).is_one());
}

TEST(Coefficient, RingMismatch) {
    auto z = Coefficient::one(RingDescriptor::integers());
    auto f2 = Coefficient::one(RingDescriptor::integers_mod(2));
    EXPECT_THROW(z + f2, RingMismatch);
    EXPECT_THROW(z * f2, RingMismatch);
    EXPECT_FALSE(z == f2);
}

TEST(Coefficient, CanonicalResidues) {
    auto z5 = RingDescriptor::integers_mod(5);
    EXPECT_EQ(Coefficient::from_integer(z5, -1).to_string(), "4");
    EXPECT_EQ(Coefficient::from_integer(z5, 12).to_string(), "2");
    EXPECT_EQ(Coefficient::from_integer(RingDescriptor::integers(), -17).to_string(), "-17");
}

TEST(Coefficient, ReducedModUsesGcd) {
    auto z12 = RingDescriptor::integers_mod(12);
    EXPECT_EQ(Coefficient::from_integer(z12, 7).reduced_mod(2).to_string(), "1");
    EXPECT_EQ(Coefficient::from_integer(z12, 7).reduced_mod(8).to_string(), "3");
    EXPECT_TRUE(Coefficient::from_integer(z12, 7).reduced_mod(5).is_zero());
    EXPECT_EQ(Coefficient::from_integer(RingDescriptor::integers(), -3).reduced_mod(2).to_string(), "1");
}

TEST(Coefficient, PrintingOrder) {
    auto ring = f2_poly({"a1", "a2", "a3"});
    auto a1 = Coefficient::indeterminate(ring, "a1");
    auto a2 = Coefficient::indeterminate(ring, "a2");
    auto a3 = Coefficient::indeterminate(ring, "a3");
    EXPECT_EQ((a1 + a3 + a1 * a2).to_string(), "a1*a2+a3+a1");
    EXPECT_EQ((a1 * a2 + a1 * a3).to_string(), "a1*a3+a1*a2");
    EXPECT_EQ((a1 + Coefficient::one(ring)).to_string(), "a1+1");
    EXPECT_EQ(Coefficient::zero(ring).to_string(), "0");

    auto zpoly = RingDescriptor::polynomial(RingDescriptor::integers(), {"a1", "a2"});
    auto b1 = Coefficient::indeterminate(zpoly, "a1");
    auto b2 = Coefficient::indeterminate(zpoly, "a2");
    EXPECT_EQ((b1 - Coefficient::from_integer(zpoly, 2) * b2.pow(3)).to_string(), "-2*a2^3+a1");
    EXPECT_EQ((-b1).to_string(), "-a1");
}

TEST(Coefficient, ParseAcceptsWhitespaceAndRoundTrips) {
    auto ring = f2_poly({"a1", "a2", "a3"});
    auto p = Coefficient::parse(ring, "  a1 * a2 +a3+   a1 ");
    EXPECT_EQ(p.to_string(), "a1*a2+a3+a1");
    EXPECT_EQ(Coefficient::parse(ring, "a1^2 + a1^2"), Coefficient::zero(ring));

    auto zpoly = RingDescriptor::polynomial(RingDescriptor::integers(), {"a1", "a2"});
    auto q = Coefficient::parse(zpoly, "-2*a2^3 + a1 - 7");
    EXPECT_EQ(Coefficient::parse(zpoly, q.to_string()), q);
    EXPECT_EQ(Coefficient::parse(RingDescriptor::integers(), " -42 ").to_string(), "-42");
    EXPECT_EQ(Coefficient::parse(RingDescriptor::integers_mod(2), "3").to_string(), "1");

    EXPECT_THROW(Coefficient::parse(ring, "a4"), ParseError);
    EXPECT_THROW(Coefficient::parse(ring, ""), ParseError);
    EXPECT_THROW(Coefficient::parse(ring, "a1 a2"), ParseError);
    EXPECT_THROW(Coefficient::parse(RingDescriptor::integers(), "a1"), ParseError);
}

TEST(Coefficient, ArbitraryPrecision) {
    auto z = RingDescriptor::integers();
    auto big = Coefficient::from_integer(z, 3).pow(200);
    EXPECT_EQ(big.to_string().size(), 96u);
    EXPECT_EQ(Coefficient::parse(z, big.to_string()), big);
}

TEST(Coefficient, MapAndSpecialize) {
    auto z = RingDescriptor::integers();
    auto f2 = RingDescriptor::integers_mod(2);
    auto zpoly = RingDescriptor::polynomial(z, {"a1", "a2"});
    auto f2poly = RingDescriptor::polynomial(f2, {"a1", "a2"});
    auto p = Coefficient::parse(zpoly, "3*a1*a2 + 2*a2 - 1");
    EXPECT_EQ(coeff_map(p, f2poly).to_string(), "a1*a2+1");
    EXPECT_THROW(coeff_map(p, z), RingMismatch);
    EXPECT_THROW(coeff_map(Coefficient::one(f2), z), RingMismatch);

    std::map<std::string, Coefficient> at{{"a1", Coefficient::from_integer(z, 2)},
                                          {"a2", Coefficient::from_integer(z, -5)}};
    EXPECT_EQ(specialize(p, at, z), Coefficient::from_integer(z, 3 * 2 * -5 + 2 * -5 - 1));

    std::map<std::string, Coefficient> partial{{"a1", Coefficient::one(f2poly)}};
    EXPECT_EQ(specialize(coeff_map(p, f2poly), partial, f2poly).to_string(), "a2+1");
}

// --- properties ----------------------------------------------------------

TEST(CoefficientProperties, RingAxioms) {
    std::mt19937_64 rng(7);
    for (const auto& ring : sample_rings()) {
        auto zero = Coefficient::zero(ring);
        auto one = Coefficient::one(ring);
        for (int trial = 0; trial < 200; ++trial) {
            auto x = random_coefficient(rng, ring);
            auto y = random_coefficient(rng, ring);
            auto w = random_coefficient(rng, ring);
            ASSERT_EQ(x + y, y + x) << ring->to_string();
            ASSERT_EQ(x * y, y * x) << ring->to_string();
            ASSERT_EQ((x + y) + w, x + (y + w)) << ring->to_string();
            ASSERT_EQ((x * y) * w, x * (y * w)) << ring->to_string();
            ASSERT_EQ(x * (y + w), x * y + x * w) << ring->to_string();
            ASSERT_EQ(x + zero, x);
            ASSERT_EQ(x * one, x);
            ASSERT_TRUE((x - x).is_zero());
        }
    }
}

TEST(CoefficientProperties, CanonicalizationIdempotent) {
    std::mt19937_64 rng(11);
    for (const auto& ring : sample_rings())
        for (int trial = 0; trial < 100; ++trial) {
            auto x = random_coefficient(rng, ring);
            auto again = Coefficient::parse(ring, x.to_string());
            ASSERT_EQ(again, x);
            ASSERT_EQ(again.to_string(), x.to_string());
            if (ring->is_polynomial()) {
                ASSERT_EQ(Coefficient::from_terms(ring, x.terms()), x);
                for (const auto& [e, v] : x.terms())
                    ASSERT_NE(v, 0);
            }
        }
}

TEST(CoefficientProperties, CharacteristicTwo) {
    std::mt19937_64 rng(13);
    for (const auto& ring : {RingDescriptor::integers_mod(2), f2_poly({"a1", "a2", "a3"})})
        for (int trial = 0; trial < 200; ++trial) {
            auto x = random_coefficient(rng, ring);
            ASSERT_TRUE((x + x).is_zero());
        }
}

TEST(CoefficientProperties, ReductionIsHomomorphism) {
    std::mt19937_64 rng(17);
    auto z = RingDescriptor::integers();
    for (long long n : {2, 3, 8, 30}) {
        auto zn = RingDescriptor::integers_mod(n);
        for (int trial = 0; trial < 200; ++trial) {
            auto x = random_coefficient(rng, z);
            auto y = random_coefficient(rng, z);
            ASSERT_EQ(coeff_map(x + y, zn), coeff_map(x, zn) + coeff_map(y, zn));
            ASSERT_EQ(coeff_map(x * y, zn), coeff_map(x, zn) * coeff_map(y, zn));
        }
    }
}
