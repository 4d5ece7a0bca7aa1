#include "fglops/series.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace fglops {

namespace {

void require_same(const Series& f, const Series& g) {
    if (!same_ring(f.ring(), g.ring()))
        throw RingMismatch("series rings differ: " + f.ring()->to_string() + " vs " +
                           g.ring()->to_string());
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

// --- SeriesRing ----------------------------------------------------------

SeriesRingPtr SeriesRing::make(RingPtr coeff_ring, std::vector<SeriesVariable> variables) {
    if (!coeff_ring)
        throw InvalidArgument("series ring needs a coefficient ring");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.name.empty())
            throw InvalidArgument("variable names must be non-empty");
        if (!seen.insert(v.name).second)
            throw InvalidArgument("duplicate variable '" + v.name + "'");
        if (v.truncation < 1)
            throw InvalidArgument("truncation of '" + v.name + "' must be at least 1");
        if (v.torsion && *v.torsion < 1)
            throw InvalidArgument("torsion order of '" + v.name + "' must be positive");
    }
    return SeriesRingPtr(new SeriesRing(std::move(coeff_ring), std::move(variables)));
}

std::optional<std::size_t> SeriesRing::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i].name == name)
            return i;
    return std::nullopt;
}

std::size_t SeriesRing::require_index(std::string_view name) const {
    auto idx = index_of(name);
    if (!idx)
        throw UnknownVariable("no variable '" + std::string(name) + "' in " + to_string());
    return *idx;
}

bool SeriesRing::in_bounds(const Monomial& m) const noexcept {
    if (m.size() != variables_.size())
        return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] >= variables_[i].truncation)
            return false;
    return true;
}

std::optional<BigInt> SeriesRing::torsion_of(const Monomial& m) const {
    std::optional<BigInt> g;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0 || !variables_[i].torsion)
            continue;
        g = g ? boost::multiprecision::gcd(*g, *variables_[i].torsion) : *variables_[i].torsion;
    }
    return g;
}

std::string SeriesRing::to_string() const {
    std::string vars, rels;
    for (const auto& v : variables_) {
        if (!vars.empty())
            vars += ',';
        vars += v.name;
        if (v.torsion) {
            rels += rels.empty() ? "" : ", ";
            rels += v.torsion->str() + v.name;
        }
        rels += rels.empty() ? "" : ", ";
        rels += v.name + "^" + std::to_string(v.truncation);
    }
    return coeff_ring_->to_string() + "[[" + vars + "]]/(" + rels + ")";
}

bool operator==(const SeriesRing& a, const SeriesRing& b) {
    return same_ring(a.coeff_ring_, b.coeff_ring_) && a.variables_ == b.variables_;
}

bool same_ring(const SeriesRingPtr& a, const SeriesRingPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

// --- monomials -----------------------------------------------------------

std::uint64_t total_degree(const Monomial& m) noexcept {
    return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::string format_monomial(const SeriesRing& ring, const Monomial& m,
                            std::span<const std::size_t> order) {
    std::vector<std::size_t> declared;
    if (order.empty()) {
        declared.resize(m.size());
        std::iota(declared.begin(), declared.end(), std::size_t{0});
        order = declared;
    }
    std::string out;
    for (std::size_t i : order) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ring.variables()[i].name;
        if (m[i] > 1)
            out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

Monomial parse_monomial(const SeriesRing& ring, std::string_view text) {
    Monomial m(ring.arity(), 0);
    std::string body = trim(text);
    if (body == "1")
        return m;
    if (body.empty())
        throw ParseError("empty monomial");
    std::size_t start = 0;
    while (start <= body.size()) {
        auto stop = body.find('*', start);
        std::string factor = trim(std::string_view(body).substr(
            start, stop == std::string::npos ? std::string::npos : stop - start));
        std::uint32_t exponent = 1;
        if (auto caret = factor.find('^'); caret != std::string::npos) {
            std::string e = trim(std::string_view(factor).substr(caret + 1));
            if (e.empty() || !std::all_of(e.begin(), e.end(), [](unsigned char c) { return std::isdigit(c); }))
                throw ParseError("bad exponent in monomial \"" + body + "\"");
            exponent = static_cast<std::uint32_t>(std::stoul(e));
            factor = trim(std::string_view(factor).substr(0, caret));
        }
        auto idx = ring.index_of(factor);
        if (!idx)
            throw ParseError("unknown variable '" + factor + "' in monomial \"" + body + "\"");
        m[*idx] += exponent;
        if (stop == std::string::npos)
            break;
        start = stop + 1;
    }
    return m;
}

// --- Series --------------------------------------------------------------

Series Series::zero(const SeriesRingPtr& ring) {
    if (!ring)
        throw InvalidArgument("null series ring");
    return Series(ring);
}

Series Series::one(const SeriesRingPtr& ring) { return constant(ring, BigInt(1)); }

Series Series::constant(const SeriesRingPtr& ring, const BigInt& n) {
    return constant(ring, Coefficient::from_integer(ring->coeff_ring(), n));
}

Series Series::constant(const SeriesRingPtr& ring, const Coefficient& c) {
    return monomial(ring, Monomial(ring->arity(), 0), c);
}

Series Series::variable(const SeriesRingPtr& ring, std::string_view name) {
    Monomial m(ring->arity(), 0);
    m[ring->require_index(name)] = 1;
    return monomial(ring, m, Coefficient::one(ring->coeff_ring()));
}

Series Series::monomial(const SeriesRingPtr& ring, const Monomial& m, const Coefficient& c) {
    return from_terms(ring, {{m, c}});
}

Series Series::from_terms(const SeriesRingPtr& ring,
                          const std::vector<std::pair<Monomial, Coefficient>>& terms) {
    Series s = zero(ring);
    for (const auto& [m, c] : terms) {
        if (m.size() != ring->arity())
            throw InvalidArgument("exponent vector length " + std::to_string(m.size()) +
                                  " does not match " + ring->to_string());
        if (!same_ring(c.ring(), ring->coeff_ring()))
            throw RingMismatch("coefficient " + c.to_string() + " is not in " +
                               ring->coeff_ring()->to_string());
        s.accumulate(m, c);
    }
    s.canonicalize();
    return s;
}

void Series::accumulate(const Monomial& m, const Coefficient& c) {
    if (!ring_->in_bounds(m) || c.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end())
        terms_.emplace(m, c);
    else
        it->second += c;
}

void Series::canonicalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (auto m = ring_->torsion_of(it->first))
            it->second = it->second.reduced_mod(*m);
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

Coefficient Series::constant_term() const {
    auto it = terms_.find(Monomial(ring_->arity(), 0));
    return it == terms_.end() ? Coefficient::zero(ring_->coeff_ring()) : it->second;
}

std::uint32_t Series::degree_in(std::size_t index) const noexcept {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m[index]);
    return d;
}

Series Series::operator-() const {
    Series s = *this;
    for (auto& [m, c] : s.terms_)
        c = -c;
    s.canonicalize();
    return s;
}

Series& Series::operator+=(const Series& other) {
    require_same(*this, other);
    for (const auto& [m, c] : other.terms_)
        accumulate(m, c);
    canonicalize();
    return *this;
}

Series& Series::operator-=(const Series& other) { return *this += -other; }

Series& Series::operator*=(const Series& other) {
    *this = *this * other;
    return *this;
}

Series& Series::operator*=(const Coefficient& c) {
    if (!same_ring(c.ring(), ring_->coeff_ring()))
        throw RingMismatch("scalar " + c.to_string() + " is not in " + ring_->coeff_ring()->to_string());
    for (auto& [m, v] : terms_)
        v *= c;
    canonicalize();
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    require_same(a, b);
    Series product(a.ring_);
    Monomial m(a.ring_->arity());
    const auto& vars = a.ring_->variables();
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            bool inside = true;
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = ma[i] + mb[i];
                if (m[i] >= vars[i].truncation) {
                    inside = false;
                    break;
                }
            }
            if (inside)
                product.accumulate(m, ca * cb);
        }
    }
    product.canonicalize();
    return product;
}

bool operator==(const Series& a, const Series& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Series Series::pow(std::uint32_t exponent) const {
    Series result = one(ring_);
    Series base = *this;
    while (exponent) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1;
        if (exponent)
            base *= base;
    }
    return result;
}

std::string Series::to_string() const {
    if (terms_.empty())
        return "0";
    bool poly = ring_->coeff_ring()->is_polynomial();
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string text;
        bool negative = false;
        if (poly && c.terms().size() > 1) {
            text = "(" + c.to_string() + ")";
        } else {
            text = c.to_string();
            if (!text.empty() && text[0] == '-') {
                negative = true;
                text.erase(0, 1);
            }
        }
        std::string piece;
        if (total_degree(m) == 0)
            piece = text;
        else if (text == "1")
            piece = format_monomial(*ring_, m);
        else
            piece = text + "*" + format_monomial(*ring_, m);
        if (out.empty())
            out = (negative ? "-" : "") + piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

// --- operations ----------------------------------------------------------

Series series_normalize(const std::vector<RawTerm>& raw, const SeriesRingPtr& ring) {
    std::vector<std::pair<Monomial, Coefficient>> terms;
    terms.reserve(raw.size());
    for (const auto& term : raw) {
        Monomial m(ring->arity(), 0);
        for (const auto& [name, e] : term.exponents)
            m[ring->require_index(name)] = e;
        terms.emplace_back(std::move(m), term.coefficient);
    }
    return Series::from_terms(ring, terms);
}

Series series_add(const Series& f, const Series& g) { return f + g; }

Series series_mul(const Series& f, const Series& g) { return f * g; }

Series series_substitute(const Series& f, const std::map<std::string, Series>& assignment,
                         const SeriesRingPtr& target, SubstituteOptions options) {
    const auto& source = *f.ring();
    for (const auto& [name, image] : assignment) {
        source.require_index(name);
        if (!same_ring(image.ring(), target))
            throw RingMismatch("image of '" + name + "' is not in " + target->to_string());
    }

    std::vector<Series> images;
    images.reserve(source.arity());
    for (std::size_t i = 0; i < source.arity(); ++i) {
        const auto& name = source.variables()[i].name;
        auto it = assignment.find(name);
        if (it == assignment.end()) {
            images.push_back(Series::variable(target, name));
            continue;
        }
        if (!options.polynomial && f.degree_in(i) > 0 && !it->second.constant_term().is_zero())
            throw NonConvergent("image of '" + name + "' has nonzero constant term " +
                                it->second.constant_term().to_string());
        images.push_back(it->second);
    }

    // powers[i][e] = images[i]^e, filled on demand
    std::vector<std::vector<Series>> powers(source.arity());
    auto power = [&](std::size_t i, std::uint32_t e) -> const Series& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.push_back(Series::one(target));
        while (cache.size() <= e)
            cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    const auto& target_coeffs = target->coeff_ring();
    Series result = Series::zero(target);
    for (const auto& [m, c] : f.terms()) {
        Series term = Series::constant(target, coeff_map(c, target_coeffs));
        for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i)
            if (m[i])
                term *= power(i, m[i]);
        result += term;
    }
    return result;
}

Series series_invert(const Series& f) {
    const auto& ring = f.ring();
    Coefficient inverse = coeff_invert(f.constant_term());
    // f * c^-1 = 1 + h with h nilpotent, so (1 + h)^-1 = sum (-h)^k.
    Series h = f * inverse - Series::one(ring);
    Series minus_h = -h;
    Series sum = Series::zero(ring);
    Series power = Series::one(ring);
    while (!power.is_zero()) {
        sum += power;
        power *= minus_h;
    }
    return sum * inverse;
}

Coefficient coefficient_of(const Series& f, const Monomial& monomial) {
    if (!f.ring()->in_bounds(monomial))
        throw OutOfBounds("monomial outside the truncation of " + f.ring()->to_string());
    auto it = f.terms().find(monomial);
    return it == f.terms().end() ? Coefficient::zero(f.ring()->coeff_ring()) : it->second;
}

} // namespace fglops
