#pragma once

// Total Chern classes for line bundles, r(x) = 1 + a1 x + ... + aD x^D,
// and their Whitney products over lists of Chern roots.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fglops/fgl.hpp"

namespace fglops {

class ChernSeries {
  public:
    std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(coeffs_.size()); }
    const RingPtr& coeff_ring() const noexcept { return ring_; }
    /// a_i for 1 <= i <= D.
    const Coefficient& coefficient(std::uint32_t i) const { return coeffs_.at(i - 1); }
    const std::vector<Coefficient>& coefficients() const noexcept { return coeffs_; }
    bool is_symbolic() const noexcept { return ring_->is_polynomial(); }
    /// Side conditions assumed rather than checked, e.g. "a1 = 1 mod 2".
    const std::vector<std::string>& side_conditions() const noexcept { return side_conditions_; }

    /// r(x), evaluated as a polynomial so no term of r is lost to the
    /// truncation of its own variable.
    Series evaluate_at(const Series& x) const;

  private:
    friend ChernSeries chern_validate(std::vector<Coefficient> coeffs);
    ChernSeries(RingPtr ring, std::vector<Coefficient> coeffs, std::vector<std::string> side)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)), side_conditions_(std::move(side)) {}

    RingPtr ring_;
    std::vector<Coefficient> coeffs_;
    std::vector<std::string> side_conditions_;
};

/// Validates [a1, ..., aD].  A constant a1 must be +1 or -1 (UnitViolation
/// otherwise); a non-constant a1 is accepted with the side condition that
/// it is odd.
ChernSeries chern_validate(std::vector<Coefficient> coeffs);
/// Convenience overload over Z.
ChernSeries chern_validate(std::span<const long long> coeffs);

/// r with a_i the indeterminate "a<i>" of `base`[a1..aD].
ChernSeries symbolic_chern(std::uint32_t degree, const RingPtr& base = RingDescriptor::integers());

/// prod r(x_i)^(s_i) over roots x_i with signs s_i in {+1, -1}.
Series chern_of_line_sum(const ChernSeries& r, const SeriesRingPtr& ring, std::span<const Series> roots,
                         std::span<const int> signs);

/// r(t +_F z) r(t) / r(z) in a ring with variables t and z; F defaults to
/// the additive law.
Series computation_one(const ChernSeries& r, const SeriesRingPtr& ring,
                       const std::optional<FormalGroupLaw>& law = std::nullopt);

} // namespace fglops
