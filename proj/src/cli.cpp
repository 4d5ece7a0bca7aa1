#include "fglops/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fglops/json_io.hpp"

namespace fglops::cli {

namespace {

constexpr std::uint32_t kDefaultTruncMax = 64;

// Raised for input or usage problems; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;

    std::string law = "additive";
    std::string coeffs = "Z";
    std::uint32_t fgl_degree = 20;
    std::string n_text;

    std::string series_file;
    std::string tau = "2";
    std::uint32_t t_trunc = 5;
    std::uint32_t z_trunc = 3;

    std::string chern_coeffs = "1";
    std::optional<std::uint32_t> chern_symbolic;

    std::uint32_t degree = 3;
    bool symbolic = false;
    bool search = false;
    unsigned threads = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json read_json(const std::string& path) {
    auto text = read_file(path);
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::uint32_t trunc_cap(const Environment& env, std::vector<std::string>& diagnostics) {
    if (!env.trunc_max)
        return kDefaultTruncMax;
    const auto& s = *env.trunc_max;
    if (!s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), ::isdigit) && std::stoul(s) >= 1)
        return static_cast<std::uint32_t>(std::stoul(s));
    diagnostics.push_back("warning: ignoring FGLOPS_TRUNC_MAX=" + s);
    return kDefaultTruncMax;
}

void check_cap(std::uint32_t value, std::uint32_t cap, const std::string& what) {
    if (value > cap)
        throw UsageError(what + " " + std::to_string(value) + " exceeds FGLOPS_TRUNC_MAX=" +
                         std::to_string(cap));
}

void check_ring_cap(const SeriesRing& ring, std::uint32_t cap) {
    for (const auto& v : ring.variables())
        check_cap(v.truncation, cap, "truncation of " + v.name);
}

std::string axiom_phrase(Axiom axiom) {
    switch (axiom) {
    case Axiom::Unit:
        return "unitality";
    case Axiom::Commutativity:
        return "commutativity";
    case Axiom::Associativity:
        return "associativity";
    }
    return "?";
}

bool is_builtin(const std::string& name) { return name == "additive" || name == "multiplicative"; }

RingPtr parse_coeff_ring(const std::string& text) {
    try {
        return coeff_ring_from_json(Json(text));
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

// Unvalidated law series: a built-in, or the contents of a JSON file.
Series law_series(const Options& o, std::uint32_t cap) {
    if (is_builtin(o.law)) {
        check_cap(o.fgl_degree, cap, "degree");
        return FormalGroupLaw::builtin(o.law, parse_coeff_ring(o.coeffs), std::max(o.fgl_degree, 2u)).series();
    }
    auto f = series_from_json(read_json(o.law));
    check_ring_cap(*f.ring(), cap);
    return f;
}

FormalGroupLaw load_law(const Options& o, std::uint32_t cap) {
    auto f = law_series(o, cap);
    try {
        return fgl_validate(f, o.law);
    } catch (const ViolatedAxiom& e) {
        throw UsageError(std::string("not a formal group law: ") + e.what());
    }
}

std::string candidate_text(const std::vector<long long>& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? "," : "") + std::to_string(c[i]);
    return s + "]";
}

CommandResult cmd_fgl_check(const Options& o, std::uint32_t cap) {
    auto f = law_series(o, cap);
    auto degree = f.ring()->variables().at(0).truncation;
    auto violation = fgl_check(f);
    CommandResult r;
    if (o.json) {
        Json j{{"law", o.law}, {"degree", degree}, {"valid", !violation}};
        if (violation) {
            j["axiom"] = axiom_name(violation->axiom);
            j["monomial"] = violation->monomial;
        }
        r.out = j.dump(2) + "\n";
    } else if (violation) {
        r.out = axiom_phrase(violation->axiom) + " fails at " + violation->monomial + "\n";
    } else {
        r.out = "valid to degree " + std::to_string(degree) + "\n";
    }
    r.exit_code = violation ? 1 : 0;
    return r;
}

CommandResult cmd_two_series(const Options& o, std::uint32_t cap) {
    const auto& s = o.n_text;
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), ::isdigit))
        throw UsageError("n must be a non-negative integer, got \"" + s + "\"");
    auto n = static_cast<std::uint32_t>(std::stoul(s));
    auto law = load_law(o, cap);
    auto series = n_series(law, n);
    CommandResult r;
    r.out = (o.json ? series_to_json(series).dump(2) : series.to_string()) + "\n";
    return r;
}

CommandResult cmd_powerop(const Options& o, std::uint32_t cap) {
    check_cap(o.t_trunc, cap, "t-trunc");
    check_cap(o.z_trunc, cap, "z-trunc");
    auto f = series_from_json(read_json(o.series_file));
    check_ring_cap(*f.ring(), cap);
    const auto& coeffs = f.ring()->coeff_ring();
    auto ring = tz_ring(coeffs, o.t_trunc, o.z_trunc);

    FormalGroupLaw law = is_builtin(o.law)
                             ? FormalGroupLaw::builtin(o.law, coeffs, std::max({o.t_trunc, o.z_trunc, 2u}))
                             : load_law(o, cap);
    Coefficient tau = Coefficient::zero(coeffs);
    try {
        tau = Coefficient::parse(coeffs, o.tau);
    } catch (const ParseError& e) {
        throw UsageError(std::string("bad --tau: ") + e.what());
    }
    PowerOpContext ctx(ring, law, tau);
    auto p = power_op(ctx, f);
    CommandResult r;
    r.out = (o.json ? series_to_json(p).dump(2) : p.to_string()) + "\n";
    return r;
}

ChernSeries parse_chern(const Options& o) {
    if (o.chern_symbolic)
        return symbolic_chern(*o.chern_symbolic);
    std::vector<long long> values;
    std::stringstream in(o.chern_coeffs);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos)
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError("bad Chern coefficient \"" + item + "\"");
        }
    }
    return chern_validate(std::span<const long long>(values));
}

CommandResult cmd_chern(const Options& o, std::uint32_t cap) {
    check_cap(o.t_trunc, cap, "t-trunc");
    check_cap(o.z_trunc, cap, "z-trunc");
    auto r = parse_chern(o);
    auto ring = tz_ring(r.coeff_ring(), o.t_trunc, o.z_trunc);
    auto value = computation_one(r, ring);
    CommandResult res;
    res.out = (o.json ? series_to_json(value).dump(2) : value.to_string()) + "\n";
    for (const auto& side : r.side_conditions())
        res.diagnostics.push_back("assuming " + side);
    return res;
}

CommandResult cmd_obstruct(const Options& o, std::uint32_t cap) {
    check_cap(o.t_trunc, cap, "t-trunc");
    check_cap(o.z_trunc, cap, "z-trunc");
    if (o.symbolic && o.search)
        throw UsageError("--symbolic and --search are mutually exclusive");
    if (o.degree < 1)
        throw UsageError("--degree must be at least 1");
    auto ctx = PowerOpContext::hzp(o.t_trunc, o.z_trunc);
    CommandResult r;
    if (o.symbolic) {
        auto relations = extract_relations(symbolic_chern(o.degree), ctx);
        if (o.json) {
            Json j{{"degree", o.degree},
                   {"truncation", {{"z", o.z_trunc}, {"t", o.t_trunc}}},
                   {"relations", relations_to_json(relations, ctx)}};
            r.out = j.dump(2) + "\n";
        } else {
            r.out = "relations over F2 for degree " + std::to_string(o.degree) + " in " +
                    ctx.ring()->to_string() + "\n";
            for (const auto& rel : relations)
                r.out += obstruction_monomial(ctx, rel.monomial) + ": " + rel.polynomial.to_string() + "\n";
        }
        return r;
    }

    auto report = exhaustive_search(o.degree, ctx, o.threads);
    const auto total = report.candidates.size();
    if (o.json) {
        r.out = report_to_json(report, ctx).dump(2) + "\n";
    } else {
        if (report.verdict == Verdict::Unsatisfiable)
            r.out = "UNSATISFIABLE: " + std::to_string(report.failing_count()) + "/" + std::to_string(total) +
                    " candidates fail\n";
        else
            r.out = "SATISFIABLE: witness " + candidate_text(*report.witness) + "\n";
        for (const auto& c : report.candidates) {
            r.out += "  " + candidate_text(c.candidate);
            r.out += c.failing_monomial ? " fails at " + obstruction_monomial(ctx, *c.failing_monomial) : " satisfies";
            r.out += "\n";
        }
        r.out += "a1 = -1 spot check: " + std::to_string(report.mirror_failing_count()) + "/" +
                 std::to_string(total) + " candidates fail\n";
    }
    if ((report.verdict == Verdict::Unsatisfiable) != (report.mirror_failing_count() == total))
        r.diagnostics.push_back("warning: a1 = -1 spot check disagrees with the a1 = 1 search");
    r.exit_code = report.verdict == Verdict::Unsatisfiable ? 0 : 1;
    return r;
}

} // namespace

Environment Environment::from_process() {
    Environment env;
    if (const char* v = std::getenv("FGLOPS_TRUNC_MAX"))
        env.trunc_max = v;
    return env;
}

CommandResult run(const std::vector<std::string>& args, const Environment& env) {
    Options o;
    CLI::App app{"Exact formal group law, power operation and obstruction calculator", "fglops"};
    app.require_subcommand(1);
    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable output"); };
    json_flag(&app);

    auto* fgl = app.add_subcommand("fgl", "Formal group laws");
    fgl->require_subcommand(1);
    auto* check = fgl->add_subcommand("check", "Validate the formal group law axioms");
    check->add_option("law", o.law, "additive, multiplicative, or a JSON series file in x, y")->required();
    check->add_option("--degree", o.fgl_degree, "Truncation degree for built-in laws")->capture_default_str();
    check->add_option("--coeffs", o.coeffs, "Coefficient ring for built-in laws (Z, Z/n)")->capture_default_str();
    json_flag(check);
    auto* nseries = fgl->add_subcommand("nseries", "Print the n-series [n]_F(x)");
    nseries->add_option("law", o.law, "additive, multiplicative, or a JSON series file")->required();
    nseries->add_option("n", o.n_text, "Non-negative integer")->required();
    nseries->add_option("--degree", o.fgl_degree, "Truncation degree for built-in laws")->capture_default_str();
    nseries->add_option("--coeffs", o.coeffs, "Coefficient ring for built-in laws (Z, Z/n)")->capture_default_str();
    json_flag(nseries);

    auto* powerop = app.add_subcommand("powerop", "Total power operation of a series in t");
    powerop->add_option("series", o.series_file, "JSON series file")->required();
    powerop->add_option("--fgl", o.law, "additive, multiplicative, or a JSON series file")->capture_default_str();
    powerop->add_option("--tau", o.tau, "Transfer scalar")->capture_default_str();
    powerop->add_option("--t-trunc", o.t_trunc, "Truncation degree in t")->capture_default_str();
    powerop->add_option("--z-trunc", o.z_trunc, "Truncation degree in z")->capture_default_str();
    json_flag(powerop);

    auto* chern = app.add_subcommand("chern", "r(t+z) r(t) / r(z) for a Chern series r");
    chern->add_option("--coeffs", o.chern_coeffs, "Comma-separated integers a1,a2,...")->capture_default_str();
    chern->add_option("--symbolic", o.chern_symbolic, "Use indeterminates a1..aD");
    chern->add_option("--t-trunc", o.t_trunc, "Truncation degree in t")->capture_default_str();
    chern->add_option("--z-trunc", o.z_trunc, "Truncation degree in z")->capture_default_str();
    json_flag(chern);

    auto* obstruct = app.add_subcommand("obstruct", "Obstruction relations and exhaustive search");
    obstruct->add_option("--degree", o.degree, "Chern series degree D")->capture_default_str();
    obstruct->add_option("--t-trunc", o.t_trunc, "Truncation degree in t")->capture_default_str();
    obstruct->add_option("--z-trunc", o.z_trunc, "Truncation degree in z")->capture_default_str();
    obstruct->add_flag("--symbolic", o.symbolic, "Print the relation table");
    obstruct->add_flag("--search", o.search, "Certify by exhaustive search (default)");
    obstruct->add_option("--threads", o.threads, "Worker threads (0 = hardware)")->capture_default_str();
    json_flag(obstruct);

    CommandResult result;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        result.diagnostics.push_back(std::string("error: ") + e.what());
        return result;
    }

    std::uint32_t cap = trunc_cap(env, result.diagnostics);
    try {
        CommandResult r;
        if (check->parsed())
            r = cmd_fgl_check(o, cap);
        else if (nseries->parsed())
            r = cmd_two_series(o, cap);
        else if (powerop->parsed())
            r = cmd_powerop(o, cap);
        else if (chern->parsed())
            r = cmd_chern(o, cap);
        else
            r = cmd_obstruct(o, cap);
        r.diagnostics.insert(r.diagnostics.begin(), result.diagnostics.begin(), result.diagnostics.end());
        return r;
    } catch (const UsageError& e) {
        result.diagnostics.push_back(std::string("error: ") + e.what());
    } catch (const Error& e) {
        result.diagnostics.push_back(std::string("error: ") + e.what());
    }
    result.exit_code = 2;
    return result;
}

} // namespace fglops::cli
