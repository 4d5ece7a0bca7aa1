#pragma once

// The obstruction series
//
//   delta(r) = r(t +_F z) r(t) - P^2(r(t)) r(z)
//
// in Z[[t,z]]/(2z, z^k).  If r came from a sufficiently structured ring map,
// delta(r) would vanish.  Its z-positive coefficients are 2-torsion, so they
// give polynomial relations over F2 on the coefficients of r; an exhaustive
// search over r mod 2 certifies that no candidate satisfies them.

#include <optional>
#include <string>
#include <vector>

#include "fglops/chern.hpp"
#include "fglops/powerops.hpp"

namespace fglops {

/// The same context with a different coefficient ring (e.g. Z -> Z[a1..aD]).
PowerOpContext with_coefficients(const PowerOpContext& ctx, const RingPtr& coeffs);

/// delta(r).  When r is symbolic, the computation runs over r's coefficient
/// ring with the context's truncations.
Series delta(const ChernSeries& r, const PowerOpContext& ctx);

/// Applies a^2 = a to every indeterminate of a polynomial over Z/2.
Coefficient multilinear_reduce(const Coefficient& p);

/// (z-degree, t-degree) ascending.
bool obstruction_less(const PowerOpContext& ctx, const Monomial& a, const Monomial& b);
/// Monomial text with z before t, e.g. "z^2*t".
std::string obstruction_monomial(const PowerOpContext& ctx, const Monomial& m);
Monomial parse_obstruction_monomial(const PowerOpContext& ctx, std::string_view text);

struct Relation {
    Monomial monomial;
    /// Multilinear polynomial over F2 that must vanish.
    Coefficient polynomial;
};

/// Nonzero relations at z-positive monomials, in obstruction order.  Throws
/// InvalidArgument for a numeric r.
std::vector<Relation> extract_relations(const ChernSeries& r, const PowerOpContext& ctx);

/// The relation at one monomial, zero when delta has none there.
Coefficient relation_at(const std::vector<Relation>& relations, const PowerOpContext& ctx,
                        const Monomial& m);

enum class Verdict { Satisfiable, Unsatisfiable };

struct CandidateResult {
    /// (a1, ..., aD).
    std::vector<long long> candidate;
    /// First monomial where delta is nonzero; empty when delta vanishes.
    std::optional<Monomial> failing_monomial;
    std::optional<Coefficient> failing_value;
};

struct ObstructionReport {
    std::uint32_t degree = 0;
    std::uint32_t t_truncation = 0;
    std::uint32_t z_truncation = 0;
    std::vector<Relation> relations;
    Verdict verdict = Verdict::Unsatisfiable;
    std::optional<std::vector<long long>> witness;
    /// One entry per candidate with a1 = 1, in enumeration order.
    std::vector<CandidateResult> candidates;
    /// The same tails with a1 = -1.
    std::vector<CandidateResult> mirror_candidates;

    std::size_t failing_count() const;
    std::size_t mirror_failing_count() const;
};

/// Evaluates delta for one numeric candidate.
CandidateResult evaluate_candidate(const PowerOpContext& ctx, const std::vector<long long>& candidate);

/// Candidate k has a1 = 1 and (a2, ..., aD) the binary digits of k, a2 most
/// significant.
std::vector<long long> candidate_vector(std::uint32_t degree, std::uint64_t index, long long a1 = 1);

/// Searches a1 = 1, (a2..aD) in {0,1}^(D-1).  `threads` = 0 picks the
/// hardware concurrency; output order never depends on it.
ObstructionReport exhaustive_search(std::uint32_t degree, const PowerOpContext& ctx, unsigned threads = 0);

} // namespace fglops
