#include "fglops/obstruction.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace fglops {

PowerOpContext with_coefficients(const PowerOpContext& ctx, const RingPtr& coeffs) {
    if (same_ring(ctx.ring()->coeff_ring(), coeffs))
        return ctx;
    auto ring = SeriesRing::make(coeffs, ctx.ring()->variables());
    return PowerOpContext(ring, ctx.law(), coeff_map(ctx.transfer(), coeffs));
}

Series delta(const ChernSeries& r, const PowerOpContext& ctx) {
    const PowerOpContext work =
        r.is_symbolic() ? with_coefficients(ctx, r.coeff_ring()) : ctx;
    const auto& ring = work.ring();
    auto t = Series::variable(ring, "t");
    auto z = Series::variable(ring, "z");
    auto r_t = r.evaluate_at(t);
    auto lhs = r.evaluate_at(formal_sum(work.law(), t, z)) * r_t;
    auto rhs = power_op(work, r_t) * r.evaluate_at(z);
    return lhs - rhs;
}

Coefficient multilinear_reduce(const Coefficient& p) {
    const auto& ring = p.ring();
    if (ring->modulus() != 2)
        throw InvalidArgument("multilinear reduction needs coefficients mod 2, got " + ring->to_string());
    if (!ring->is_polynomial())
        return p;
    Coefficient::TermMap terms;
    for (const auto& [e, v] : p.terms()) {
        Exponents reduced = e;
        for (auto& x : reduced)
            x = std::min<std::uint32_t>(x, 1);
        terms[std::move(reduced)] += v;
    }
    return Coefficient::from_terms(ring, std::move(terms));
}

bool obstruction_less(const PowerOpContext& ctx, const Monomial& a, const Monomial& b) {
    auto key = [&](const Monomial& m) { return std::pair(m[ctx.z_index()], m[ctx.t_index()]); };
    return key(a) < key(b);
}

std::string obstruction_monomial(const PowerOpContext& ctx, const Monomial& m) {
    const std::size_t order[] = {ctx.z_index(), ctx.t_index()};
    return format_monomial(*ctx.ring(), m, order);
}

Monomial parse_obstruction_monomial(const PowerOpContext& ctx, std::string_view text) {
    return parse_monomial(*ctx.ring(), text);
}

std::vector<Relation> extract_relations(const ChernSeries& r, const PowerOpContext& ctx) {
    if (!r.is_symbolic())
        throw InvalidArgument("extract_relations needs symbolic coefficients");
    auto d = delta(r, ctx);
    auto f2 = RingDescriptor::polynomial(RingDescriptor::integers_mod(2),
                                         r.coeff_ring()->indeterminates());
    std::vector<Relation> relations;
    for (const auto& [m, c] : d.terms()) {
        if (m[ctx.z_index()] == 0)
            continue;
        auto p = multilinear_reduce(coeff_map(c, f2));
        if (!p.is_zero())
            relations.push_back({m, std::move(p)});
    }
    std::stable_sort(relations.begin(), relations.end(), [&](const Relation& a, const Relation& b) {
        return obstruction_less(ctx, a.monomial, b.monomial);
    });
    return relations;
}

Coefficient relation_at(const std::vector<Relation>& relations, const PowerOpContext& ctx,
                        const Monomial& m) {
    if (!ctx.ring()->in_bounds(m))
        throw OutOfBounds("monomial outside " + ctx.ring()->to_string());
    for (const auto& rel : relations)
        if (rel.monomial == m)
            return rel.polynomial;
    if (relations.empty())
        return Coefficient::zero(RingDescriptor::integers_mod(2));
    return Coefficient::zero(relations.front().polynomial.ring());
}

std::size_t ObstructionReport::failing_count() const {
    return static_cast<std::size_t>(std::count_if(candidates.begin(), candidates.end(),
                                                  [](const auto& c) { return c.failing_monomial.has_value(); }));
}

std::size_t ObstructionReport::mirror_failing_count() const {
    return static_cast<std::size_t>(std::count_if(mirror_candidates.begin(), mirror_candidates.end(),
                                                  [](const auto& c) { return c.failing_monomial.has_value(); }));
}

CandidateResult evaluate_candidate(const PowerOpContext& ctx, const std::vector<long long>& candidate) {
    auto r = chern_validate(std::span<const long long>(candidate));
    auto d = delta(r, ctx);
    CandidateResult result{candidate, std::nullopt, std::nullopt};
    const std::pair<const Monomial, Coefficient>* first = nullptr;
    for (const auto& term : d.terms())
        if (!first || obstruction_less(ctx, term.first, first->first))
            first = &term;
    if (first) {
        result.failing_monomial = first->first;
        result.failing_value = first->second;
    }
    return result;
}

std::vector<long long> candidate_vector(std::uint32_t degree, std::uint64_t index, long long a1) {
    std::vector<long long> v(degree, 0);
    v[0] = a1;
    for (std::uint32_t i = 1; i < degree; ++i)
        v[i] = static_cast<long long>((index >> (degree - 1 - i)) & 1u);
    return v;
}

ObstructionReport exhaustive_search(std::uint32_t degree, const PowerOpContext& ctx, unsigned threads) {
    if (degree < 1)
        throw InvalidArgument("search degree must be at least 1");
    if (degree > 40)
        throw InvalidArgument("search degree " + std::to_string(degree) + " is too large to enumerate");

    ObstructionReport report;
    report.degree = degree;
    report.t_truncation = ctx.ring()->variables()[ctx.t_index()].truncation;
    report.z_truncation = ctx.ring()->variables()[ctx.z_index()].truncation;
    report.relations = extract_relations(symbolic_chern(degree, ctx.ring()->coeff_ring()->base()), ctx);

    const std::uint64_t count = std::uint64_t{1} << (degree - 1);
    std::vector<std::optional<CandidateResult>> plus(count), minus(count);

    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::uint64_t k = w; k < count; k += workers) {
                        plus[k] = evaluate_candidate(ctx, candidate_vector(degree, k, 1));
                        minus[k] = evaluate_candidate(ctx, candidate_vector(degree, k, -1));
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    for (std::uint64_t k = 0; k < count; ++k) {
        report.candidates.push_back(std::move(*plus[k]));
        report.mirror_candidates.push_back(std::move(*minus[k]));
        if (!report.witness && !report.candidates.back().failing_monomial)
            report.witness = report.candidates.back().candidate;
    }
    report.verdict = report.witness ? Verdict::Satisfiable : Verdict::Unsatisfiable;
    return report;
}

} // namespace fglops
