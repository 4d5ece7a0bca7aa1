#include "fglops/powerops.hpp"

#include <algorithm>

namespace fglops {

namespace {

// Coefficients a_i of f = sum a_i t^i, indexed by i.
std::map<std::uint32_t, Coefficient> t_coefficients(const PowerOpContext& ctx, const Series& f) {
    const auto& source = *f.ring();
    auto t = source.index_of("t");
    std::map<std::uint32_t, Coefficient> out;
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] && (!t || i != *t))
                throw InvalidArgument("power_op needs a series in t alone; found " +
                                      source.variables()[i].name);
        out.emplace(t ? m[*t] : 0, coeff_map(c, ctx.ring()->coeff_ring()));
    }
    return out;
}

} // namespace

SeriesRingPtr tz_ring(const RingPtr& coeffs, std::uint32_t t_trunc, std::uint32_t z_trunc,
                      const BigInt& z_torsion) {
    return SeriesRing::make(coeffs, {{"t", t_trunc, std::nullopt}, {"z", z_trunc, z_torsion}});
}

PowerOpContext::PowerOpContext(SeriesRingPtr ring, FormalGroupLaw law, Coefficient transfer)
    : ring_(std::move(ring)), law_(std::move(law)), transfer_(std::move(transfer)) {
    t_ = ring_->require_index("t");
    z_ = ring_->require_index("z");
    transfer_ = coeff_map(transfer_, ring_->coeff_ring());
    // the law's coefficients must map into the ring
    coeff_map(Coefficient::zero(law_.coeff_ring()), ring_->coeff_ring());
    const auto& zvar = ring_->variables()[z_];
    if (law_.is_additive() && zvar.torsion && *zvar.torsion == 2 &&
        transfer_ != Coefficient::from_integer(ring_->coeff_ring(), 2))
        throw InvalidArgument("the additive law on a 2-torsion z needs transfer 2, got " +
                              transfer_.to_string());
}

PowerOpContext PowerOpContext::hzp(std::uint32_t t_trunc, std::uint32_t z_trunc, const RingPtr& coeffs) {
    auto ring = tz_ring(coeffs, t_trunc, z_trunc);
    std::uint32_t degree = std::max<std::uint32_t>({t_trunc, z_trunc, 2});
    return PowerOpContext(ring, FormalGroupLaw::additive(coeffs, degree),
                          Coefficient::from_integer(coeffs, 2));
}

Series power_op_generator(const PowerOpContext& ctx) {
    const auto& ring = ctx.ring();
    auto t = Series::variable(ring, "t");
    return t * formal_sum(ctx.law(), t, Series::variable(ring, "z"));
}

Series power_op(const PowerOpContext& ctx, const Series& f) {
    const auto& ring = ctx.ring();
    auto a = t_coefficients(ctx, f);
    auto g = power_op_generator(ctx);
    auto t = Series::variable(ring, "t");

    Series result = Series::zero(ring);
    Series g_power = Series::one(ring);
    std::uint32_t reached = 0;
    for (const auto& [i, c] : a) {
        while (reached < i) {
            g_power *= g;
            ++reached;
        }
        result += g_power * (c * c);
    }

    // transfer correction over unordered pairs i < j
    Series cross = Series::zero(ring);
    for (auto i = a.begin(); i != a.end(); ++i)
        for (auto j = std::next(i); j != a.end(); ++j)
            cross += t.pow(i->first + j->first) * (i->second * j->second);
    return result + transfer_apply(ctx, cross);
}

Series transfer_apply(const PowerOpContext& ctx, const Series& a) {
    if (!same_ring(a.ring(), ctx.ring()))
        throw RingMismatch("transfer argument is not in " + ctx.ring()->to_string());
    return a * ctx.transfer();
}

} // namespace fglops
