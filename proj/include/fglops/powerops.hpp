#pragma once

// Total power operation P^2 on classes in the t-line of a ring
// R[[t,z]]/(m z, ...), determined by
//   P^2(t)    = t * (t +_F z),
//   P^2(ab)   = P^2(a) P^2(b),
//   P^2(a+b)  = P^2(a) + P^2(b) + tr(ab),   tr = multiplication by tau,
//   P^2(c)    = c^2 for constants c.

#include "fglops/fgl.hpp"

namespace fglops {

class PowerOpContext {
  public:
    /// `ring` must contain variables named t and z.  With the additive law
    /// and 2-torsion on z, tau must be 2.
    PowerOpContext(SeriesRingPtr ring, FormalGroupLaw law, Coefficient transfer);

    /// Z[[t,z]]/(2z, z^z_trunc, t^t_trunc) with the additive law and tau = 2.
    static PowerOpContext hzp(std::uint32_t t_trunc = 5, std::uint32_t z_trunc = 3,
                              const RingPtr& coeffs = RingDescriptor::integers());

    const SeriesRingPtr& ring() const noexcept { return ring_; }
    const FormalGroupLaw& law() const noexcept { return law_; }
    const Coefficient& transfer() const noexcept { return transfer_; }
    std::size_t t_index() const noexcept { return t_; }
    std::size_t z_index() const noexcept { return z_; }

  private:
    SeriesRingPtr ring_;
    FormalGroupLaw law_;
    Coefficient transfer_;
    std::size_t t_ = 0;
    std::size_t z_ = 0;
};

/// Z[[t,z]]/(torsion*z, z^z_trunc, t^t_trunc), variables ordered (t, z).
SeriesRingPtr tz_ring(const RingPtr& coeffs, std::uint32_t t_trunc, std::uint32_t z_trunc,
                      const BigInt& z_torsion = 2);

/// t * (t +_F z).
Series power_op_generator(const PowerOpContext& ctx);

/// P^2(f) for f a series in t alone (any ring whose other variables do not
/// occur in f; it is carried into the context ring by name).  Throws
/// InvalidArgument when f involves z or any other variable.
Series power_op(const PowerOpContext& ctx, const Series& f);

/// tau * a.
Series transfer_apply(const PowerOpContext& ctx, const Series& a);

} // namespace fglops
