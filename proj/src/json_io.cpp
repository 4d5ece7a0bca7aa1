#include "fglops/json_io.hpp"

#include <limits>

namespace fglops {

namespace {

template <class F> auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed ") + what + ": " + e.what());
    }
}

std::string scalar_ring_text(const RingDescriptor& ring) {
    return ring.modulus() == 0 ? "Z" : "Z/" + ring.modulus().str();
}

RingPtr scalar_ring_from_text(const std::string& s) {
    if (s == "Z")
        return RingDescriptor::integers();
    if (s.rfind("Z/", 0) == 0 && s.size() > 2) {
        std::string digits = s.substr(2);
        if (digits.find_first_not_of("0123456789") == std::string::npos)
            return RingDescriptor::integers_mod(BigInt(digits));
    }
    throw ParseError("unknown coefficient ring \"" + s + "\"");
}

BigInt big_from_json(const Json& j) {
    if (j.is_number_integer())
        return BigInt(j.get<long long>());
    if (j.is_string())
        return BigInt(j.get<std::string>());
    throw ParseError("expected an integer, got " + j.dump());
}

std::vector<long long> candidate_from_json(const Json& j) {
    return j.get<std::vector<long long>>();
}

} // namespace

Json coeff_ring_to_json(const RingDescriptor& ring) {
    if (!ring.is_polynomial())
        return scalar_ring_text(ring);
    return Json{{"poly", {{"base", scalar_ring_text(ring)}, {"vars", ring.indeterminates()}}}};
}

RingPtr coeff_ring_from_json(const Json& j) {
    return guarded("coefficient ring", [&]() -> RingPtr {
        if (j.is_string())
            return scalar_ring_from_text(j.get<std::string>());
        const auto& poly = j.at("poly");
        auto base = scalar_ring_from_text(poly.at("base").get<std::string>());
        try {
            return RingDescriptor::polynomial(base, poly.at("vars").get<std::vector<std::string>>());
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what());
        }
    });
}

Json series_ring_to_json(const SeriesRing& ring) {
    Json vars = Json::array();
    for (const auto& v : ring.variables()) {
        Json entry{{"name", v.name}, {"trunc", v.truncation}};
        if (v.torsion) {
            if (*v.torsion <= std::numeric_limits<long long>::max())
                entry["torsion"] = static_cast<long long>(*v.torsion);
            else
                entry["torsion"] = v.torsion->str();
        }
        vars.push_back(std::move(entry));
    }
    return Json{{"coeff", coeff_ring_to_json(*ring.coeff_ring())}, {"vars", std::move(vars)}};
}

SeriesRingPtr series_ring_from_json(const Json& j) {
    return guarded("series ring", [&]() -> SeriesRingPtr {
        auto coeffs = coeff_ring_from_json(j.at("coeff"));
        std::vector<SeriesVariable> vars;
        for (const auto& v : j.at("vars")) {
            SeriesVariable var;
            var.name = v.at("name").get<std::string>();
            long long trunc = v.at("trunc").get<long long>();
            if (trunc < 1 || trunc > std::numeric_limits<std::uint32_t>::max())
                throw ParseError("truncation of '" + var.name + "' out of range");
            var.truncation = static_cast<std::uint32_t>(trunc);
            if (v.contains("torsion"))
                var.torsion = big_from_json(v.at("torsion"));
            vars.push_back(std::move(var));
        }
        try {
            return SeriesRing::make(coeffs, std::move(vars));
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what());
        }
    });
}

Json series_to_json(const Series& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms())
        terms.push_back(Json{{"exp", m}, {"coef", c.to_string()}});
    return Json{{"ring", series_ring_to_json(*f.ring())}, {"terms", std::move(terms)}};
}

Series series_from_json(const Json& j) {
    return guarded("series", [&]() -> Series {
        auto ring = series_ring_from_json(j.at("ring"));
        std::vector<std::pair<Monomial, Coefficient>> terms;
        for (const auto& t : j.at("terms")) {
            auto exps = t.at("exp").get<std::vector<long long>>();
            if (exps.size() != ring->arity())
                throw ParseError("exponent vector " + t.at("exp").dump() + " does not match " +
                                 ring->to_string());
            Monomial m;
            for (long long e : exps) {
                if (e < 0 || e > std::numeric_limits<std::uint32_t>::max())
                    throw ParseError("exponent out of range in " + t.at("exp").dump());
                m.push_back(static_cast<std::uint32_t>(e));
            }
            const auto& coef = t.at("coef");
            std::string text = coef.is_string() ? coef.get<std::string>() : coef.dump();
            terms.emplace_back(std::move(m), Coefficient::parse(ring->coeff_ring(), text));
        }
        return Series::from_terms(ring, terms);
    });
}

Json relations_to_json(const std::vector<Relation>& relations, const PowerOpContext& ctx) {
    Json out = Json::array();
    for (const auto& rel : relations)
        out.push_back(Json{{"monomial", obstruction_monomial(ctx, rel.monomial)},
                           {"poly", rel.polynomial.to_string()}});
    return out;
}

Json report_to_json(const ObstructionReport& report, const PowerOpContext& ctx) {
    Json j;
    j["verdict"] = report.verdict == Verdict::Unsatisfiable ? "unsatisfiable" : "satisfiable";
    j["degree"] = report.degree;
    j["truncation"] = Json{{"z", report.z_truncation}, {"t", report.t_truncation}};
    j["relations"] = relations_to_json(report.relations, ctx);
    Json failures = Json::array();
    for (const auto& c : report.candidates)
        if (c.failing_monomial)
            failures.push_back(Json{{"candidate", c.candidate},
                                    {"monomial", obstruction_monomial(ctx, *c.failing_monomial)}});
    j["failures"] = std::move(failures);
    if (report.witness)
        j["witness"] = *report.witness;
    return j;
}

ObstructionReport report_from_json(const Json& j, const PowerOpContext& ctx) {
    return guarded("report", [&]() -> ObstructionReport {
        ObstructionReport report;
        auto verdict = j.at("verdict").get<std::string>();
        if (verdict == "unsatisfiable")
            report.verdict = Verdict::Unsatisfiable;
        else if (verdict == "satisfiable")
            report.verdict = Verdict::Satisfiable;
        else
            throw ParseError("unknown verdict \"" + verdict + "\"");
        report.degree = j.at("degree").get<std::uint32_t>();
        report.z_truncation = j.at("truncation").at("z").get<std::uint32_t>();
        report.t_truncation = j.at("truncation").at("t").get<std::uint32_t>();

        std::vector<std::string> names;
        for (std::uint32_t i = 1; i <= report.degree; ++i)
            names.push_back("a" + std::to_string(i));
        auto f2 = RingDescriptor::polynomial(RingDescriptor::integers_mod(2), names);
        for (const auto& rel : j.at("relations"))
            report.relations.push_back(
                {parse_obstruction_monomial(ctx, rel.at("monomial").get<std::string>()),
                 Coefficient::parse(f2, rel.at("poly").get<std::string>())});
        for (const auto& f : j.at("failures")) {
            CandidateResult c;
            c.candidate = candidate_from_json(f.at("candidate"));
            c.failing_monomial = parse_obstruction_monomial(ctx, f.at("monomial").get<std::string>());
            report.candidates.push_back(std::move(c));
        }
        if (j.contains("witness"))
            report.witness = candidate_from_json(j.at("witness"));
        return report;
    });
}

} // namespace fglops
