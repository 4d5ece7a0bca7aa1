#pragma once

// Exact coefficient rings: Z, Z/n, and polynomial rings over either of
// those in a fixed list of named indeterminates.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fglops/errors.hpp"

namespace fglops {

using BigInt = boost::multiprecision::cpp_int;

class RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

class RingDescriptor {
  public:
    enum class Kind { Integer, IntegerMod, Polynomial };

    static RingPtr integers();
    static RingPtr integers_mod(const BigInt& n);
    /// `base` must be Z or Z/n; names must be unique and non-empty.
    static RingPtr polynomial(const RingPtr& base, std::vector<std::string> indeterminates);

    Kind kind() const noexcept { return kind_; }
    bool is_polynomial() const noexcept { return kind_ == Kind::Polynomial; }

    /// Modulus of the scalar ring; 0 means characteristic zero.
    const BigInt& modulus() const noexcept { return modulus_; }
    const std::vector<std::string>& indeterminates() const noexcept { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// The scalar ring (self for Z and Z/n).
    RingPtr base() const;

    /// "Z", "Z/2", "Z/2[a1,a2]".
    std::string to_string() const;

    friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

  private:
    RingDescriptor(Kind kind, BigInt modulus, std::vector<std::string> names)
        : kind_(kind), modulus_(std::move(modulus)), names_(std::move(names)) {}

    Kind kind_;
    BigInt modulus_;
    std::vector<std::string> names_;
};

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

using Exponents = std::vector<std::uint32_t>;

/// Term order for polynomial coefficients: higher total degree first;
/// ties broken by the exponent of the last declared indeterminate, then
/// the one before it, larger exponent first.  Yields "a1*a2+a3+a1".
struct PolyTermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

class Coefficient {
  public:
    using TermMap = std::map<Exponents, BigInt, PolyTermOrder>;

    static Coefficient zero(const RingPtr& ring);
    static Coefficient one(const RingPtr& ring);
    /// The image of an integer under Z -> ring.
    static Coefficient from_integer(const RingPtr& ring, const BigInt& value);
    static Coefficient indeterminate(const RingPtr& ring, std::string_view name);
    static Coefficient from_terms(const RingPtr& ring, TermMap terms);
    static Coefficient parse(const RingPtr& ring, std::string_view text);

    const RingPtr& ring() const noexcept { return ring_; }

    bool is_zero() const noexcept;
    bool is_one() const;
    bool is_constant() const noexcept;
    /// Scalar value for Z and Z/n; constant term for polynomials.
    BigInt constant_value() const;
    /// Polynomial terms; empty for scalar rings.
    const TermMap& terms() const noexcept { return terms_; }

    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& other);
    Coefficient& operator-=(const Coefficient& other);
    Coefficient& operator*=(const Coefficient& other);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
    friend bool operator==(const Coefficient& a, const Coefficient& b);

    Coefficient pow(std::uint32_t exponent) const;

    /// Image in the quotient by m: residues (or polynomial coefficients) are
    /// reduced into [0, g) where g = gcd(m, modulus), or g = m over Z.
    Coefficient reduced_mod(const BigInt& m) const;

    std::string to_string() const;

  private:
    explicit Coefficient(RingPtr ring) : ring_(std::move(ring)) {}
    void canonicalize();

    RingPtr ring_;
    BigInt scalar_;
    TermMap terms_;
};

Coefficient coeff_add(const Coefficient& x, const Coefficient& y);
Coefficient coeff_mul(const Coefficient& x, const Coefficient& y);
/// Throws NotAUnit unless x is invertible.
Coefficient coeff_invert(const Coefficient& x);

/// The canonical ring map into `target` when one exists: Z -> anything,
/// Z/n -> Z/m for m | n, and the same maps applied coefficient-wise between
/// polynomial rings whose indeterminates are a subset of the target's.
Coefficient coeff_map(const Coefficient& x, const RingPtr& target);

/// Evaluates a polynomial coefficient in `target`, sending each named
/// indeterminate to its assigned value.  Unassigned indeterminates map to the
/// same-named indeterminate of `target`; values from another ring are
/// carried over by coeff_map.
Coefficient specialize(const Coefficient& x, const std::map<std::string, Coefficient>& values,
                       const RingPtr& target);

} // namespace fglops
