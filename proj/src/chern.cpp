#include "fglops/chern.hpp"

#include <algorithm>

namespace fglops {

namespace {

bool is_plus_minus_one(const BigInt& v, const BigInt& modulus) {
    if (modulus == 0)
        return v == 1 || v == -1;
    BigInt r = v % modulus;
    if (r < 0)
        r += modulus;
    return r == 1 || r == modulus - 1;
}

} // namespace

Series ChernSeries::evaluate_at(const Series& x) const {
    const auto& ring = x.ring();
    Series result = Series::one(ring);
    Series power = Series::one(ring);
    for (const auto& a : coeffs_) {
        power *= x;
        if (power.is_zero())
            break;
        result += power * coeff_map(a, ring->coeff_ring());
    }
    return result;
}

ChernSeries chern_validate(std::vector<Coefficient> coeffs) {
    if (coeffs.empty())
        throw InvalidArgument("a Chern series needs at least a1");
    RingPtr ring = coeffs.front().ring();
    for (const auto& c : coeffs)
        if (!same_ring(c.ring(), ring))
            throw RingMismatch("Chern coefficients must share one ring");
    std::vector<std::string> side;
    const auto& a1 = coeffs.front();
    if (a1.is_constant()) {
        if (!is_plus_minus_one(a1.constant_value(), ring->modulus()))
            throw UnitViolation("a1 = " + a1.to_string() + " is not +1 or -1");
    } else {
        side.push_back(a1.to_string() + " = 1 mod 2");
    }
    return ChernSeries(ring, std::move(coeffs), std::move(side));
}

ChernSeries chern_validate(std::span<const long long> coeffs) {
    auto z = RingDescriptor::integers();
    std::vector<Coefficient> values;
    for (long long c : coeffs)
        values.push_back(Coefficient::from_integer(z, c));
    return chern_validate(std::move(values));
}

ChernSeries symbolic_chern(std::uint32_t degree, const RingPtr& base) {
    if (degree < 1)
        throw InvalidArgument("symbolic Chern series needs degree >= 1");
    std::vector<std::string> names;
    for (std::uint32_t i = 1; i <= degree; ++i)
        names.push_back("a" + std::to_string(i));
    auto ring = RingDescriptor::polynomial(base, names);
    std::vector<Coefficient> coeffs;
    for (const auto& n : names)
        coeffs.push_back(Coefficient::indeterminate(ring, n));
    return chern_validate(std::move(coeffs));
}

Series chern_of_line_sum(const ChernSeries& r, const SeriesRingPtr& ring, std::span<const Series> roots,
                         std::span<const int> signs) {
    if (roots.size() != signs.size())
        throw InvalidArgument("one sign per Chern root");
    Series result = Series::one(ring);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!same_ring(roots[i].ring(), ring))
            throw RingMismatch("Chern root " + std::to_string(i) + " is not in " + ring->to_string());
        if (!roots[i].constant_term().is_zero())
            throw InvalidArgument("Chern roots need zero constant term");
        Series value = r.evaluate_at(roots[i]);
        if (signs[i] == 1)
            result *= value;
        else if (signs[i] == -1)
            result *= series_invert(value);
        else
            throw InvalidArgument("Chern root signs must be +1 or -1");
    }
    return result;
}

Series computation_one(const ChernSeries& r, const SeriesRingPtr& ring,
                       const std::optional<FormalGroupLaw>& law) {
    auto t = Series::variable(ring, "t");
    auto z = Series::variable(ring, "z");
    std::uint32_t degree = 2;
    for (const auto& v : ring->variables())
        degree = std::max(degree, v.truncation);
    FormalGroupLaw f = law ? *law : FormalGroupLaw::additive(ring->coeff_ring(), degree);
    // L (x) sigma + L - sigma - 1
    const Series roots[] = {formal_sum(f, t, z), t, z, Series::zero(ring)};
    const int signs[] = {+1, +1, -1, -1};
    return chern_of_line_sum(r, ring, roots, signs);
}

} // namespace fglops
