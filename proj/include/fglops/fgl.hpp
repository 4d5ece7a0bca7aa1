#pragma once

#include <optional>
#include <string>

#include "fglops/series.hpp"

namespace fglops {

enum class Axiom { Unit, Commutativity, Associativity };

std::string axiom_name(Axiom axiom); // "unit", "comm", "assoc"

struct AxiomViolation {
    Axiom axiom;
    /// Rendered in the variables of the failing identity, e.g. "x^2".
    std::string monomial;
};

class ViolatedAxiom : public Error {
  public:
    explicit ViolatedAxiom(AxiomViolation violation);
    const AxiomViolation& violation() const noexcept { return violation_; }

  private:
    AxiomViolation violation_;
};

/// A bivariate series F(x, y) known to satisfy the formal group law axioms
/// in total degree below its truncation degree.
class FormalGroupLaw {
  public:
    /// x + y over `coeffs`, truncated at `degree` in each variable.
    static FormalGroupLaw additive(const RingPtr& coeffs, std::uint32_t degree);
    /// x + y + xy.
    static FormalGroupLaw multiplicative(const RingPtr& coeffs, std::uint32_t degree);
    /// "additive" or "multiplicative"; throws InvalidArgument otherwise.
    static FormalGroupLaw builtin(std::string_view name, const RingPtr& coeffs, std::uint32_t degree);

    const Series& series() const noexcept { return law_; }
    const RingPtr& coeff_ring() const noexcept { return law_.ring()->coeff_ring(); }
    std::uint32_t degree() const noexcept;
    const std::string& name() const noexcept { return name_; }
    bool is_additive() const;

  private:
    friend FormalGroupLaw fgl_validate(const Series& law, std::string name);
    FormalGroupLaw(Series law, std::string name) : law_(std::move(law)), name_(std::move(name)) {}

    Series law_;
    std::string name_;
};

/// The ring Z[[x,y]] (or over `coeffs`) used for bivariate laws.
SeriesRingPtr fgl_ring(const RingPtr& coeffs, std::uint32_t degree);

/// First violated axiom, or nothing.  Identities are compared on monomials
/// of total degree below the truncation degree, where they are determined
/// by the stored terms of F.
std::optional<AxiomViolation> fgl_check(const Series& law);

/// Throws ViolatedAxiom, or InvalidArgument when the ring is not Z[[x,y]]
/// with equal truncations and no torsion.
FormalGroupLaw fgl_validate(const Series& law, std::string name = {});

/// F(f, g).  Both arguments need zero constant term.
Series formal_sum(const FormalGroupLaw& law, const Series& f, const Series& g);

/// [n]_F(x) as a series in the single variable x.
Series n_series(const FormalGroupLaw& law, std::uint32_t n);

} // namespace fglops
