#pragma once

// Truncated multivariate power series with per-variable torsion.
//
// A SeriesRing such as Z[[t,z]]/(2z, z^3, t^5) is described by its
// coefficient ring and an ordered list of variables.  A variable with
// truncation k kills every monomial whose exponent in it is >= k.  A
// variable with torsion m imposes m*v = 0: the coefficient of any monomial
// with positive exponent in v lives in the coefficient ring modulo m.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fglops/coefficients.hpp"

namespace fglops {

struct SeriesVariable {
    std::string name;
    std::uint32_t truncation = 1;
    std::optional<BigInt> torsion;

    friend bool operator==(const SeriesVariable&, const SeriesVariable&) = default;
};

class SeriesRing;
using SeriesRingPtr = std::shared_ptr<const SeriesRing>;

using Monomial = std::vector<std::uint32_t>;

class SeriesRing {
  public:
    static SeriesRingPtr make(RingPtr coeff_ring, std::vector<SeriesVariable> variables);

    const RingPtr& coeff_ring() const noexcept { return coeff_ring_; }
    const std::vector<SeriesVariable>& variables() const noexcept { return variables_; }
    std::size_t arity() const noexcept { return variables_.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;
    /// Throws UnknownVariable.
    std::size_t require_index(std::string_view name) const;

    bool in_bounds(const Monomial& m) const noexcept;
    /// gcd of the torsion orders of every variable with positive exponent.
    std::optional<BigInt> torsion_of(const Monomial& m) const;

    std::string to_string() const;

    friend bool operator==(const SeriesRing& a, const SeriesRing& b);

  private:
    SeriesRing(RingPtr coeff_ring, std::vector<SeriesVariable> variables)
        : coeff_ring_(std::move(coeff_ring)), variables_(std::move(variables)) {}

    RingPtr coeff_ring_;
    std::vector<SeriesVariable> variables_;
};

bool same_ring(const SeriesRingPtr& a, const SeriesRingPtr& b) noexcept;

/// Display order: total degree ascending, then lexicographically descending
/// in declared variable order (1, t, z, t^2, t*z, z^2, ...).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

std::uint64_t total_degree(const Monomial& m) noexcept;

/// "1", "t", "t^2*z".  `order` lists variable indices in print order;
/// empty means declared order.
std::string format_monomial(const SeriesRing& ring, const Monomial& m,
                            std::span<const std::size_t> order = {});
/// Inverse of format_monomial; accepts factors in any order.
Monomial parse_monomial(const SeriesRing& ring, std::string_view text);

/// A term whose exponents are keyed by variable name.
struct RawTerm {
    std::map<std::string, std::uint32_t> exponents;
    Coefficient coefficient;
};

class Series {
  public:
    using TermMap = std::map<Monomial, Coefficient, MonomialOrder>;

    static Series zero(const SeriesRingPtr& ring);
    static Series one(const SeriesRingPtr& ring);
    static Series constant(const SeriesRingPtr& ring, const Coefficient& c);
    static Series constant(const SeriesRingPtr& ring, const BigInt& n);
    static Series variable(const SeriesRingPtr& ring, std::string_view name);
    static Series monomial(const SeriesRingPtr& ring, const Monomial& m, const Coefficient& c);
    /// Canonicalizes an arbitrary positional term list (duplicates summed).
    static Series from_terms(const SeriesRingPtr& ring,
                             const std::vector<std::pair<Monomial, Coefficient>>& terms);

    const SeriesRingPtr& ring() const noexcept { return ring_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Coefficient constant_term() const;
    /// Largest exponent of variable `index` among stored terms.
    std::uint32_t degree_in(std::size_t index) const noexcept;

    Series operator-() const;
    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series& operator*=(const Series& other);
    Series& operator*=(const Coefficient& c);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Coefficient& c) { return a *= c; }
    friend bool operator==(const Series& a, const Series& b);

    Series pow(std::uint32_t exponent) const;

    /// "1 + 2*t + t^2 + t*z"; polynomial coefficients are parenthesized
    /// when they have more than one term.
    std::string to_string() const;

  private:
    explicit Series(SeriesRingPtr ring) : ring_(std::move(ring)) {}
    // Adds c at m, dropping out-of-bounds monomials; no torsion reduction.
    void accumulate(const Monomial& m, const Coefficient& c);
    // Applies torsion and drops zeros.
    void canonicalize();

    SeriesRingPtr ring_;
    TermMap terms_;
};

/// Builds the canonical series of a raw term list.  Throws UnknownVariable
/// for names outside the ring and RingMismatch for foreign coefficients.
Series series_normalize(const std::vector<RawTerm>& raw, const SeriesRingPtr& ring);

Series series_add(const Series& f, const Series& g);
Series series_mul(const Series& f, const Series& g);

struct SubstituteOptions {
    /// Treat f as an honest polynomial, which permits assigned series with
    /// non-nilpotent constant terms.
    bool polynomial = false;
};

/// Ring-homomorphic image of f under variable -> series.  Variables of f that
/// are not assigned map to the same-named variable of `target`.  Integer
/// coefficients are carried into the target coefficient ring.
Series series_substitute(const Series& f, const std::map<std::string, Series>& assignment,
                         const SeriesRingPtr& target, SubstituteOptions options = {});

/// Throws NotAUnit when the constant term is not invertible.
Series series_invert(const Series& f);

/// Throws OutOfBounds for a monomial outside the truncation box.
Coefficient coefficient_of(const Series& f, const Monomial& monomial);

/// Applies `map` to every coefficient and re-canonicalizes in `target`,
/// which must have the same variable names as f's ring.
template <class Fn> Series map_coefficients(const Series& f, const SeriesRingPtr& target, Fn&& map) {
    std::vector<std::pair<Monomial, Coefficient>> terms;
    for (const auto& [m, c] : f.terms()) {
        Monomial tm(target->arity(), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i])
                tm[target->require_index(f.ring()->variables()[i].name)] = m[i];
        terms.emplace_back(std::move(tm), map(c));
    }
    return Series::from_terms(target, terms);
}

} // namespace fglops
