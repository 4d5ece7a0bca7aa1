#include "fglops/fgl.hpp"

namespace fglops {

namespace {

SeriesRingPtr plain_ring(const RingPtr& coeffs, std::initializer_list<const char*> names,
                         std::uint32_t degree) {
    std::vector<SeriesVariable> vars;
    for (const char* n : names)
        vars.push_back({n, degree, std::nullopt});
    return SeriesRing::make(coeffs, std::move(vars));
}

// First monomial of total degree < bound where a and b differ.
std::optional<Monomial> first_difference(const Series& a, const Series& b, std::uint64_t bound) {
    Series diff = a - b;
    for (const auto& [m, c] : diff.terms())
        if (total_degree(m) < bound)
            return m;
    return std::nullopt;
}

void require_law_ring(const Series& law) {
    const auto& ring = *law.ring();
    if (ring.arity() != 2 || ring.variables()[0].name != "x" || ring.variables()[1].name != "y")
        throw InvalidArgument("a formal group law must be a series in x, y; got " + ring.to_string());
    const auto& x = ring.variables()[0];
    const auto& y = ring.variables()[1];
    if (x.truncation != y.truncation)
        throw InvalidArgument("x and y must share one truncation degree");
    if (x.torsion || y.torsion)
        throw InvalidArgument("formal group law variables carry no torsion");
}

} // namespace

std::string axiom_name(Axiom axiom) {
    switch (axiom) {
    case Axiom::Unit:
        return "unit";
    case Axiom::Commutativity:
        return "comm";
    case Axiom::Associativity:
        return "assoc";
    }
    return "?";
}

ViolatedAxiom::ViolatedAxiom(AxiomViolation violation)
    : Error("formal group law violates " + axiom_name(violation.axiom) + " at " + violation.monomial),
      violation_(std::move(violation)) {}

SeriesRingPtr fgl_ring(const RingPtr& coeffs, std::uint32_t degree) {
    return plain_ring(coeffs, {"x", "y"}, degree);
}

FormalGroupLaw FormalGroupLaw::additive(const RingPtr& coeffs, std::uint32_t degree) {
    auto ring = fgl_ring(coeffs, degree);
    return fgl_validate(Series::variable(ring, "x") + Series::variable(ring, "y"), "additive");
}

FormalGroupLaw FormalGroupLaw::multiplicative(const RingPtr& coeffs, std::uint32_t degree) {
    auto ring = fgl_ring(coeffs, degree);
    auto x = Series::variable(ring, "x");
    auto y = Series::variable(ring, "y");
    return fgl_validate(x + y + x * y, "multiplicative");
}

FormalGroupLaw FormalGroupLaw::builtin(std::string_view name, const RingPtr& coeffs,
                                       std::uint32_t degree) {
    if (name == "additive")
        return additive(coeffs, degree);
    if (name == "multiplicative")
        return multiplicative(coeffs, degree);
    throw InvalidArgument("unknown built-in formal group law '" + std::string(name) + "'");
}

std::uint32_t FormalGroupLaw::degree() const noexcept {
    return law_.ring()->variables()[0].truncation;
}

bool FormalGroupLaw::is_additive() const {
    const auto& ring = law_.ring();
    return law_ == Series::variable(ring, "x") + Series::variable(ring, "y");
}

std::optional<AxiomViolation> fgl_check(const Series& law) {
    require_law_ring(law);
    const auto& coeffs = law.ring()->coeff_ring();
    const std::uint32_t d = law.ring()->variables()[0].truncation;

    for (const char* keep : {"x", "y"}) {
        auto line = plain_ring(coeffs, {keep}, d);
        const char* other = std::string_view(keep) == "x" ? "y" : "x";
        auto restricted = series_substitute(law, {{other, Series::zero(line)}}, line);
        if (auto m = first_difference(restricted, Series::variable(line, keep), d))
            return AxiomViolation{Axiom::Unit, format_monomial(*line, *m)};
    }

    const auto& ring = law.ring();
    auto swapped = series_substitute(
        law, {{"x", Series::variable(ring, "y")}, {"y", Series::variable(ring, "x")}}, ring);
    if (auto m = first_difference(law, swapped, d))
        return AxiomViolation{Axiom::Commutativity, format_monomial(*ring, *m)};

    auto triple = plain_ring(coeffs, {"x", "y", "w"}, d);
    auto x = Series::variable(triple, "x");
    auto y = Series::variable(triple, "y");
    auto w = Series::variable(triple, "w");
    auto xy = series_substitute(law, {{"x", x}, {"y", y}}, triple);
    auto yw = series_substitute(law, {{"x", y}, {"y", w}}, triple);
    auto left = series_substitute(law, {{"x", xy}, {"y", w}}, triple);
    auto right = series_substitute(law, {{"x", x}, {"y", yw}}, triple);
    if (auto m = first_difference(left, right, d))
        return AxiomViolation{Axiom::Associativity, format_monomial(*triple, *m)};
    return std::nullopt;
}

FormalGroupLaw fgl_validate(const Series& law, std::string name) {
    if (auto violation = fgl_check(law))
        throw ViolatedAxiom(*violation);
    return FormalGroupLaw(law, std::move(name));
}

Series formal_sum(const FormalGroupLaw& law, const Series& f, const Series& g) {
    if (!same_ring(f.ring(), g.ring()))
        throw RingMismatch("formal sum of series from different rings");
    if (!f.constant_term().is_zero() || !g.constant_term().is_zero())
        throw InvalidArgument("formal sum needs arguments with zero constant term");
    return series_substitute(law.series(), {{"x", f}, {"y", g}}, f.ring());
}

Series n_series(const FormalGroupLaw& law, std::uint32_t n) {
    auto line = plain_ring(law.coeff_ring(), {"x"}, law.degree());
    auto x = Series::variable(line, "x");
    Series acc = Series::zero(line);
    for (std::uint32_t k = 0; k < n; ++k)
        acc = series_substitute(law.series(), {{"x", x}, {"y", acc}}, line);
    return acc;
}

} // namespace fglops
