#include "fglops/coefficients.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace fglops {

namespace {

BigInt floor_mod(const BigInt& v, const BigInt& m) {
    BigInt r = v % m;
    if (r < 0)
        r += m;
    return r;
}

BigInt effective_modulus(const BigInt& ring_modulus, const BigInt& m) {
    if (ring_modulus == 0)
        return boost::multiprecision::abs(m);
    return boost::multiprecision::gcd(ring_modulus, m);
}

void require_same(const Coefficient& x, const Coefficient& y) {
    if (!same_ring(x.ring(), y.ring()))
        throw RingMismatch("coefficient rings differ: " + x.ring()->to_string() + " vs " +
                           y.ring()->to_string());
}

// Extended Euclid; returns inverse of a modulo n or nothing.
std::optional<BigInt> mod_inverse(const BigInt& a, const BigInt& n) {
    BigInt old_r = floor_mod(a, n), r = n;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        return std::nullopt;
    return floor_mod(old_s, n);
}

// --- parsing -------------------------------------------------------------

class CoefficientParser {
  public:
    CoefficientParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

    Coefficient parse() {
        skip_ws();
        if (at_end())
            fail("empty coefficient");
        Coefficient total = Coefficient::zero(ring_);
        bool first = true;
        while (true) {
            skip_ws();
            bool negative = false;
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                negative = peek() == '-';
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Coefficient t = term();
            total += negative ? -t : t;
            first = false;
            skip_ws();
            if (at_end())
                break;
        }
        return total;
    }

  private:
    Coefficient term() {
        Coefficient value = factor();
        while (true) {
            skip_ws();
            if (at_end() || peek() != '*')
                break;
            ++pos_;
            skip_ws();
            value *= factor();
        }
        return value;
    }

    Coefficient factor() {
        if (at_end())
            fail("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(peek())))
            return Coefficient::from_integer(ring_, integer());
        if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (!ring_->index_of(name))
                fail("unknown indeterminate '" + name + "'");
            Coefficient base = Coefficient::indeterminate(ring_, name);
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                BigInt e = integer();
                if (e > 0xFFFFFFFFu)
                    fail("exponent too large");
                return base.pow(static_cast<std::uint32_t>(e));
            }
            return base;
        }
        fail(std::string("unexpected character '") + peek() + "'");
    }

    BigInt integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse coefficient \"" + std::string(text_) + "\" in " +
                         ring_->to_string() + ": " + what + " at offset " + std::to_string(pos_));
    }

    const RingPtr& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

// --- RingDescriptor ------------------------------------------------------

RingPtr RingDescriptor::integers() {
    static const RingPtr z(new RingDescriptor(Kind::Integer, 0, {}));
    return z;
}

RingPtr RingDescriptor::integers_mod(const BigInt& n) {
    if (n < 2)
        throw InvalidArgument("modulus must be at least 2, got " + n.str());
    return RingPtr(new RingDescriptor(Kind::IntegerMod, n, {}));
}

RingPtr RingDescriptor::polynomial(const RingPtr& base, std::vector<std::string> indeterminates) {
    if (!base || base->is_polynomial())
        throw InvalidArgument("polynomial base ring must be Z or Z/n");
    std::set<std::string> seen;
    for (const auto& name : indeterminates) {
        if (name.empty())
            throw InvalidArgument("indeterminate names must be non-empty");
        if (!seen.insert(name).second)
            throw InvalidArgument("duplicate indeterminate '" + name + "'");
    }
    return RingPtr(new RingDescriptor(Kind::Polynomial, base->modulus(), std::move(indeterminates)));
}

std::optional<std::size_t> RingDescriptor::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

RingPtr RingDescriptor::base() const {
    if (modulus_ == 0)
        return integers();
    return integers_mod(modulus_);
}

std::string RingDescriptor::to_string() const {
    std::string s = modulus_ == 0 ? "Z" : "Z/" + modulus_.str();
    if (is_polynomial()) {
        s += '[';
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (i)
                s += ',';
            s += names_[i];
        }
        s += ']';
    }
    return s;
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

bool PolyTermOrder::operator()(const Exponents& a, const Exponents& b) const noexcept {
    auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db)
        return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] > b[i];
    }
    return false;
}

// --- Coefficient ---------------------------------------------------------

Coefficient Coefficient::zero(const RingPtr& ring) {
    if (!ring)
        throw InvalidArgument("null ring");
    return Coefficient(ring);
}

Coefficient Coefficient::one(const RingPtr& ring) { return from_integer(ring, 1); }

Coefficient Coefficient::from_integer(const RingPtr& ring, const BigInt& value) {
    Coefficient c = zero(ring);
    if (ring->is_polynomial())
        c.terms_.emplace(Exponents(ring->indeterminates().size(), 0), value);
    else
        c.scalar_ = value;
    c.canonicalize();
    return c;
}

Coefficient Coefficient::indeterminate(const RingPtr& ring, std::string_view name) {
    auto idx = ring->index_of(name);
    if (!ring->is_polynomial() || !idx)
        throw InvalidArgument("'" + std::string(name) + "' is not an indeterminate of " +
                              ring->to_string());
    Coefficient c = zero(ring);
    Exponents e(ring->indeterminates().size(), 0);
    e[*idx] = 1;
    c.terms_.emplace(std::move(e), 1);
    c.canonicalize();
    return c;
}

Coefficient Coefficient::from_terms(const RingPtr& ring, TermMap terms) {
    if (!ring->is_polynomial())
        throw InvalidArgument("from_terms needs a polynomial ring");
    for (const auto& [e, v] : terms)
        if (e.size() != ring->indeterminates().size())
            throw InvalidArgument("exponent vector has wrong length");
    Coefficient c = zero(ring);
    c.terms_ = std::move(terms);
    c.canonicalize();
    return c;
}

Coefficient Coefficient::parse(const RingPtr& ring, std::string_view text) {
    return CoefficientParser(ring, text).parse();
}

void Coefficient::canonicalize() {
    const BigInt& n = ring_->modulus();
    if (ring_->is_polynomial()) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (n != 0)
                it->second = floor_mod(it->second, n);
            if (it->second == 0)
                it = terms_.erase(it);
            else
                ++it;
        }
    } else if (n != 0) {
        scalar_ = floor_mod(scalar_, n);
    }
}

bool Coefficient::is_zero() const noexcept {
    return ring_->is_polynomial() ? terms_.empty() : scalar_ == 0;
}

bool Coefficient::is_one() const { return *this == one(ring_); }

bool Coefficient::is_constant() const noexcept {
    if (!ring_->is_polynomial())
        return true;
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

BigInt Coefficient::constant_value() const {
    if (!ring_->is_polynomial())
        return scalar_;
    auto it = terms_.find(Exponents(ring_->indeterminates().size(), 0));
    return it == terms_.end() ? BigInt(0) : it->second;
}

Coefficient Coefficient::operator-() const {
    Coefficient c = *this;
    c.scalar_ = -c.scalar_;
    for (auto& [e, v] : c.terms_)
        v = -v;
    c.canonicalize();
    return c;
}

Coefficient& Coefficient::operator+=(const Coefficient& other) {
    require_same(*this, other);
    if (ring_->is_polynomial()) {
        for (const auto& [e, v] : other.terms_)
            terms_[e] += v;
    } else {
        scalar_ += other.scalar_;
    }
    canonicalize();
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& other) { return *this += -other; }

Coefficient& Coefficient::operator*=(const Coefficient& other) {
    require_same(*this, other);
    if (ring_->is_polynomial()) {
        TermMap product;
        for (const auto& [ea, va] : terms_) {
            for (const auto& [eb, vb] : other.terms_) {
                Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                product[std::move(e)] += va * vb;
            }
        }
        terms_ = std::move(product);
    } else {
        scalar_ *= other.scalar_;
    }
    canonicalize();
    return *this;
}

bool operator==(const Coefficient& a, const Coefficient& b) {
    if (!same_ring(a.ring_, b.ring_))
        return false;
    return a.ring_->is_polynomial() ? a.terms_ == b.terms_ : a.scalar_ == b.scalar_;
}

Coefficient Coefficient::pow(std::uint32_t exponent) const {
    Coefficient result = one(ring_);
    Coefficient base = *this;
    while (exponent) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1;
        if (exponent)
            base *= base;
    }
    return result;
}

Coefficient Coefficient::reduced_mod(const BigInt& m) const {
    BigInt g = effective_modulus(ring_->modulus(), m);
    Coefficient c = *this;
    if (g == 0)
        return c;
    if (ring_->is_polynomial()) {
        for (auto& [e, v] : c.terms_)
            v = floor_mod(v, g);
    } else {
        c.scalar_ = floor_mod(c.scalar_, g);
    }
    c.canonicalize();
    return c;
}

std::string Coefficient::to_string() const {
    if (!ring_->is_polynomial())
        return scalar_.str();
    if (terms_.empty())
        return "0";
    const auto& names = ring_->indeterminates();
    std::string out;
    bool first = true;
    for (const auto& [e, v] : terms_) {
        bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
        BigInt magnitude = boost::multiprecision::abs(v);
        if (v < 0)
            out += "-";
        else if (!first)
            out += "+";
        first = false;
        if (constant) {
            out += magnitude.str();
            continue;
        }
        bool need_star = false;
        if (magnitude != 1) {
            out += magnitude.str();
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (need_star)
                out += '*';
            out += names[i];
            if (e[i] > 1)
                out += "^" + std::to_string(e[i]);
            need_star = true;
        }
    }
    return out;
}

// --- free functions ------------------------------------------------------

Coefficient coeff_add(const Coefficient& x, const Coefficient& y) { return x + y; }

Coefficient coeff_mul(const Coefficient& x, const Coefficient& y) { return x * y; }

Coefficient coeff_invert(const Coefficient& x) {
    const auto& ring = x.ring();
    if (!x.is_constant())
        throw NotAUnit(x.to_string() + " is not a unit in " + ring->to_string());
    BigInt v = x.constant_value();
    if (ring->modulus() == 0) {
        if (v == 1 || v == -1)
            return x;
        throw NotAUnit(v.str() + " is not a unit in " + ring->to_string());
    }
    auto inv = mod_inverse(v, ring->modulus());
    if (!inv)
        throw NotAUnit(v.str() + " is not a unit in " + ring->to_string());
    return Coefficient::from_integer(ring, *inv);
}

Coefficient coeff_map(const Coefficient& x, const RingPtr& target) {
    const auto& source = x.ring();
    if (same_ring(source, target))
        return x;
    const BigInt& sm = source->modulus();
    const BigInt& tm = target->modulus();
    bool scalars_map = sm == 0 || (tm != 0 && sm % tm == 0);
    if (!scalars_map)
        throw RingMismatch("no canonical map " + source->to_string() + " -> " + target->to_string());
    if (!source->is_polynomial())
        return Coefficient::from_integer(target, x.constant_value());
    if (!target->is_polynomial()) {
        if (!x.is_constant())
            throw RingMismatch("non-constant " + x.to_string() + " has no image in " +
                               target->to_string());
        return Coefficient::from_integer(target, x.constant_value());
    }
    std::vector<std::size_t> slot;
    for (const auto& name : source->indeterminates()) {
        auto idx = target->index_of(name);
        if (!idx)
            throw RingMismatch("indeterminate '" + name + "' missing from " + target->to_string());
        slot.push_back(*idx);
    }
    Coefficient::TermMap terms;
    for (const auto& [e, v] : x.terms()) {
        Exponents te(target->indeterminates().size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            te[slot[i]] = e[i];
        terms[std::move(te)] += v;
    }
    return Coefficient::from_terms(target, std::move(terms));
}

Coefficient specialize(const Coefficient& x, const std::map<std::string, Coefficient>& values,
                       const RingPtr& target) {
    if (!x.ring()->is_polynomial())
        return coeff_map(x, target);
    const auto& names = x.ring()->indeterminates();
    std::vector<Coefficient> images;
    images.reserve(names.size());
    for (const auto& name : names) {
        auto it = values.find(name);
        if (it == values.end())
            images.push_back(Coefficient::indeterminate(target, name));
        else if (same_ring(it->second.ring(), target))
            images.push_back(it->second);
        else
            try {
                images.push_back(coeff_map(it->second, target));
            } catch (const RingMismatch&) {
                throw RingMismatch("value for '" + name + "' does not map into " + target->to_string());
            }
    }
    Coefficient result = Coefficient::zero(target);
    for (const auto& [e, v] : x.terms()) {
        Coefficient term = Coefficient::from_integer(target, v);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                term *= images[i].pow(e[i]);
        result += term;
    }
    return result;
}

} // namespace fglops
