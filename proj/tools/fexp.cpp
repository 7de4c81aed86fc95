#include "fexp/beta.hpp"
#include "fexp/corpus.hpp"
#include "fexp/parse.hpp"
#include "fexp/serialize.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace fexp;
using Json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    std::int64_t count = 16;        // digits or coefficients to print
    std::int64_t precision = 1024;  // verification precision V
    std::size_t cap = 1u << 20;     // state and step caps
    bool json = false;
    std::uint64_t seed = 20240601;

    Json echo() const
    {
        return {{"p", p}, {"m", m}, {"count", count}, {"precision", precision}, {"cap", cap}, {"seed", seed}};
    }
};

/// Text that is either inline or the contents of an existing file.
std::string inline_or_file(const std::string& arg)
{
    if (arg.empty() || arg.front() == '{' || arg.front() == '[') return arg;
    std::error_code ec;
    if (!std::filesystem::is_regular_file(arg, ec)) return arg;
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

RatFunc literal_value(const SeriesLiteral& lit, const FieldPtr& F, Orientation o)
{
    RatFunc sum(F);
    for (std::size_t i = 0; i < lit.coeffs.size(); ++i) {
        if (lit.coeffs[i] == 0) continue;
        std::int64_t k = lit.start + static_cast<std::int64_t>(i);
        if (o == Orientation::Descending) k = -k;
        const Poly mono = Poly::monomial(F, k >= 0 ? k : -k, lit.coeffs[i]);
        sum = sum + (k >= 0 ? RatFunc(mono) : RatFunc(Poly::constant(F, lit.coeffs[i]), Poly::monomial(F, -k)));
    }
    return sum;
}

/// An element given as a spec (inline JSON or file), a series literal
/// `[m; ...]` in the model's local parameter, or a rational expression.
ModelElem read_element(const std::string& arg, const FieldPtr& F, Orientation o)
{
    const std::string text = inline_or_file(arg);
    if (!text.empty() && text.front() == '{') return ModelElem(hensel_root(parse_spec_json(text, F)));
    if (!text.empty() && text.front() == '[') return ModelElem(literal_value(parse_series_literal(text, F), F, o));
    return ModelElem(parse_ratfunc(text, F));
}

Orientation orientation_of(Model model)
{
    return model == Model::VDeg ? Orientation::Descending : Orientation::Ascending;
}

struct ContextArgs {
    std::string pi = "z";
    std::string model = "vz";
    std::string P;
};

BaseContext read_context(const ContextArgs& a, const FieldPtr& F)
{
    const Model model = parse_model(a.model);
    std::optional<Poly> P;
    if (!a.P.empty()) P = parse_poly(a.P, F);
    return BaseContext(F, model, read_element(a.pi, F, orientation_of(model)), P);
}

/// span{1, t, ..., t^{ef-1}} in the model's natural polynomial ring.
ResidueSystem standard_system(const BaseContext& ctx)
{
    const FieldPtr& F = ctx.field();
    std::vector<ModelElem> gens;
    for (std::int64_t i = 0; i < ctx.e() * ctx.f(); ++i)
        gens.emplace_back(ctx.model() == Model::VDeg ? RatFunc(Poly::one(F), Poly::monomial(F, i))
                                                     : RatFunc(Poly::monomial(F, i)));
    return span_system(gens, ctx);
}

/// `span:a,b`, `fspan:a,b` (prime-field span), `set:a,b,...`, a residue
/// system file, or empty for the standard system.
ResidueSystem read_gamma(const std::string& arg, const ContextArgs& ca, const FieldPtr& F)
{
    const std::string text = inline_or_file(arg);
    if (!text.empty() && text.front() == '{') {
        // Also accepts the --json reports of `residue span|twist` and `expand`.
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::exception& e) {
            throw ParseError(std::string("residue system JSON: ") + e.what());
        }
        if (j.contains("expansion")) j = j["expansion"];
        if (j.contains("system")) j = j["system"];
        return system_from_json(j.dump(), F);
    }
    const BaseContext ctx = read_context(ca, F);
    if (text.empty()) return standard_system(ctx);
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("--gamma expects span:..., fspan:..., set:... or a file");
    const std::string kind = text.substr(0, colon);
    std::vector<ModelElem> elems;
    for (const auto& item : split_list(text.substr(colon + 1))) elems.emplace_back(parse_ratfunc(item, F));
    if (kind == "span") return span_system(elems, ctx);
    if (kind == "fspan") return span_system(elems, ctx, true);
    if (kind == "set") return ResidueSystem(ctx, std::move(elems));
    throw ParseError("unknown residue system kind '" + kind + "'");
}

std::string value_text(const ModelElem& x)
{
    return x.is_rational() ? x.rational().to_string() : x.to_string();
}

Json report(const std::string& command, const RunConfig& cfg)
{
    return {{"command", command}, {"config", cfg.echo()}};
}

void emit(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

} // namespace

namespace {

struct ExpandArgs {
    std::string x;
    ContextArgs ctx;
    std::string gamma;
    std::optional<std::int64_t> start;
    std::string engine = "auto";
    // period
    bool bounded = false;
    std::int64_t n_max = 4096;
    std::int64_t l_max = 256;
};

Engine parse_engine(const std::string& s)
{
    if (s == "auto") return Engine::Auto;
    if (s == "exact") return Engine::Exact;
    if (s == "series") return Engine::Series;
    throw ParseError("unknown engine '" + s + "' (auto, exact, series)");
}

int run_expand(const ExpandArgs& a, const RunConfig& cfg, const FieldPtr& F)
{
    const ResidueSystem gamma = read_gamma(a.gamma, a.ctx, F);
    const ModelElem x = read_element(a.x, F, orientation_of(gamma.context().model()));
    const DigitExpansion d = expand(x, gamma, parse_engine(a.engine), a.start);
    const auto count = static_cast<std::size_t>(cfg.count);
    if (cfg.json) {
        Json j = report("expand", cfg);
        j["expansion"] = Json::parse(expansion_to_json(d, count));
        emit(j);
        return 0;
    }
    for (std::int64_t n = d.start(); n < d.start() + cfg.count; ++n) std::cout << value_text(d.digit_value(n)) << '\n';
    return 0;
}

int run_period(const ExpandArgs& a, const RunConfig& cfg, const FieldPtr& F)
{
    const ResidueSystem gamma = read_gamma(a.gamma, a.ctx, F);
    const ModelElem x = read_element(a.x, F, orientation_of(gamma.context().model()));
    PeriodCertificate cert;
    if (a.bounded) {
        cert = detect_period_bounded(expand(x, gamma, parse_engine(a.engine), a.start), a.n_max, a.l_max);
    } else {
        if (!x.is_rational()) throw DomainError("exact period detection needs a rational x; use --bounded");
        cert = detect_period_exact(x.rational(), gamma, cfg.cap, a.start);
    }
    if (cfg.json) {
        Json j = report("period", cfg);
        j["certificate"] = Json::parse(certificate_to_json(cert));
        if (cert.status == PeriodStatus::Exact)
            j["value"] = resum_periodic(expand(x, gamma, Engine::Auto, a.start), cert).to_string();
        emit(j);
        return 0;
    }
    std::cout << status_name(cert.status);
    if (cert.status == PeriodStatus::Exact || cert.status == PeriodStatus::Candidate)
        std::cout << " preperiod=" << cert.preperiod << " period=" << cert.period;
    std::cout << '\n';
    if (!cert.note.empty()) std::cout << cert.note << '\n';
    return 0;
}

int run_property_a(const ExpandArgs& a, const RunConfig& cfg, const FieldPtr& F)
{
    const ResidueSystem gamma = read_gamma(a.gamma, a.ctx, F);
    const PropertyA pa = property_a_check(gamma);
    if (cfg.json) {
        Json j = report("property-a", cfg);
        j["holds"] = pa.holds;
        j["reason"] = pa.reason;
        j["degree"] = pa.degree;
        j["local_degree"] = pa.local_degree;
        emit(j);
        return 0;
    }
    if (pa.holds)
        std::cout << "holds: [K:F_q(pi)]=" << pa.degree << " = e*f=" << pa.local_degree << '\n';
    else
        std::cout << pa.reason << '\n';
    return 0;
}

int run_witness(const ExpandArgs& a, const RunConfig& cfg, const FieldPtr& F)
{
    const ResidueSystem gamma = read_gamma(a.gamma, a.ctx, F);
    const Witness w = lemma21_witness(gamma);
    const ModelElem& chosen = gamma.reps()[w.gamma_index];
    std::vector<std::string> basis, leading, lambda;
    for (const RatFunc& b : w.basis) basis.push_back(b.to_string());
    for (Elem c : w.leading) leading.push_back(F->to_string(c));
    for (Elem c : w.lambda) lambda.push_back(F->to_string(c));
    if (cfg.json) {
        Json j = report("witness", cfg);
        j["x"] = w.x.to_string();
        j["basis"] = basis;
        j["gamma_index"] = w.gamma_index;
        j["gamma"] = value_text(chosen);
        j["m"] = w.m;
        j["leading"] = leading;
        j["lambda"] = lambda;
        emit(j);
        return 0;
    }
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& e : v) s += (s.empty() ? "" : ", ") + e;
        return s;
    };
    std::cout << "x: " << w.x.to_string() << '\n'
              << "basis: " << join(basis) << '\n'
              << "gamma': #" << w.gamma_index << " = " << value_text(chosen) << '\n'
              << "m: " << w.m << '\n'
              << "leading: " << join(leading) << '\n'
              << "lambda: " << join(lambda) << '\n';
    return 0;
}

} // namespace

namespace {

struct ResidueArgs {
    ContextArgs ctx;
    std::string gamma;
    std::string alphas;
    bool prime_field = false;
    std::int64_t L = 1;
};

void print_system(const ResidueSystem& gamma, const std::string& command, const RunConfig& cfg)
{
    if (cfg.json) {
        Json j = report(command, cfg);
        j["system"] = Json::parse(system_to_json(gamma));
        emit(j);
        return;
    }
    for (const ModelElem& r : gamma.reps()) std::cout << value_text(r) << '\n';
}

std::vector<ModelElem> read_alphas(const std::string& list, const FieldPtr& F, Orientation o)
{
    std::vector<ModelElem> out;
    for (const auto& item : split_list(list)) out.push_back(read_element(item, F, o));
    if (out.empty()) throw ParseError("--alphas needs at least one generator");
    return out;
}

int run_residue_check(const ResidueArgs& a, const RunConfig& cfg, const FieldPtr& F)
{
    const ResidueSystem gamma = read_gamma(a.gamma, a.ctx, F);
    const BaseContext& ctx = gamma.context();
    std::optional<bool> closed;
    if (std::all_of(gamma.reps().begin(), gamma.reps().end(), [](const ModelElem& r) { return r.is_rational(); })) {
        std::vector<RatFunc> reps;
        for (const ModelElem& r : gamma.reps()) reps.push_back(r.rational());
        closed = is_additively_closed(reps);
    }
    const PropertyA pa = property_a_check(gamma);
    if (cfg.json) {
        Json j = report("residue check", cfg);
        j["context"] = ctx.describe();
        j["size"] = gamma.size();
        j["r"] = ctx.r();
        j["complete"] = gamma.complete();
        j["additively_closed"] = closed ? Json(*closed) : Json(nullptr);
        j["property_a"] = pa.holds;
        j["property_a_reason"] = pa.reason;
        emit(j);
        return 0;
    }
    std::cout << "context: " << ctx.describe() << '\n'
              << "size: " << gamma.size() << " (r = " << ctx.r() << ")\n"
              << "complete: " << (gamma.complete() ? "yes" : "no") << '\n'
              << "additively closed: " << (closed ? (*closed ? "yes" : "no") : "n/a (series representatives)") << '\n'
              << "property A: " << (pa.holds ? "holds" : pa.reason) << '\n';
    return 0;
}

int run_residue_span(const ResidueArgs& a, const RunConfig& cfg, const FieldPtr& F)
{
    const BaseContext ctx = read_context(a.ctx, F);
    const auto gens = read_alphas(a.alphas, F, orientation_of(ctx.model()));
    print_system(span_system(gens, ctx, a.prime_field), "residue span", cfg);
    return 0;
}

int run_residue_twist(const ResidueArgs& a, const RunConfig& cfg, const FieldPtr& F)
{
    print_system(twist_system(read_gamma(a.gamma, a.ctx, F), a.L), "residue twist", cfg);
    return 0;
}

struct ChristolArgs {
    std::string spec;
    std::string dfao;
    std::string x;
    std::string alphas;
    ContextArgs ctx;
    bool prime_field = false;
    std::optional<std::int64_t> start;
};

int run_christol_encode(const ChristolArgs& a, const RunConfig& cfg, const FieldPtr& F)
{
    const AlgebraicSpec spec = parse_spec_json(inline_or_file(a.spec), F);
    const Dfao m = encode(spec, cfg.precision, cfg.cap);
    if (cfg.json) {
        Json j = report("christol encode", cfg);
        j["states"] = m.size();
        j["dfao"] = Json::parse(m.to_json());
        emit(j);
        return 0;
    }
    std::cout << m.to_json() << '\n';
    return 0;
}

int run_christol_decode(const ChristolArgs& a, const RunConfig& cfg, const FieldPtr& F)
{
    const Dfao m = Dfao::from_json(inline_or_file(a.dfao));
    const DecodeResult r = decode(m, F, cfg.precision);
    if (cfg.json) {
        Json j = report("christol decode", cfg);
        j["R"] = r.R.to_string();
        j["verified_precision"] = r.relation.verified_precision;
        emit(j);
        return 0;
    }
    std::cout << "R: " << r.R.to_string() << '\n'
              << "verified modulo z^" << r.relation.verified_precision << '\n';
    return 0;
}

int run_christol_span(const ChristolArgs& a, const RunConfig& cfg, const FieldPtr& F)
{
    const BaseContext ctx = read_context(a.ctx, F);
    const Orientation o = orientation_of(ctx.model());
    const ResidueSystem gamma = span_system(read_alphas(a.alphas, F, o), ctx, a.prime_field);
    const SpanChristol sc = span_christol(read_element(a.x, F, o), gamma, cfg.count, a.start);
    const DigitExpansion& d = sc.expansion;
    if (cfg.json) {
        Json j = report("christol span", cfg);
        std::vector<std::string> values;
        for (std::int64_t n = d.start(); n < d.start() + cfg.count; ++n) values.push_back(value_text(d.digit_value(n)));
        j["start"] = d.start();
        j["digits"] = d.prefix(static_cast<std::size_t>(cfg.count));
        j["values"] = values;
        std::vector<std::string> relations;
        for (const OreForm& r : sc.relations) relations.push_back(r.to_string());
        j["relations"] = relations;
        j["automaton"] = Json::parse(sc.automaton.to_json());
        emit(j);
        return 0;
    }
    for (std::int64_t n = d.start(); n < d.start() + cfg.count; ++n) std::cout << value_text(d.digit_value(n)) << '\n';
    return 0;
}

} // namespace

namespace {

constexpr Orientation kDesc = Orientation::Descending;

struct BetaArgs {
    std::string beta;
    std::string x = "1";
};

/// beta as a vdeg spec, a rational expression (made into a spec), or a
/// series literal in 1/z, which is taken as a stream only.
BetaContext read_beta(const std::string& arg, const FieldPtr& F)
{
    const std::string text = inline_or_file(arg);
    if (!text.empty() && text.front() == '{') return BetaContext::from_spec(parse_spec_json(text, F));
    if (!text.empty() && text.front() == '[') {
        SeriesLiteral lit = parse_series_literal(text, F);
        return BetaContext(LaurentStream::finite(F, kDesc, lit.start, std::move(lit.coeffs)));
    }
    return BetaContext::from_spec(spec_from_ratfunc(parse_ratfunc(text, F), kDesc));
}

std::vector<std::string> capabilities(const BetaContext& ctx)
{
    std::vector<std::string> caps{"digits", "bridge"};
    if (ctx.spec()) caps.emplace_back("automaton");
    return caps;
}

void note_capabilities(const BetaContext& ctx, const RunConfig& cfg)
{
    if (cfg.json || ctx.spec()) return;
    std::cerr << "note: beta is given only as a stream; available: digits, bridge (automaton needs a spec)\n";
}

int run_beta_digits(const BetaArgs& a, const RunConfig& cfg, const FieldPtr& F)
{
    const BetaContext ctx = read_beta(a.beta, F);
    note_capabilities(ctx, cfg);
    const BetaExpansion e = d_beta(read_element(a.x, F, kDesc).stream(kDesc), ctx, cfg.count);
    if (cfg.json) {
        Json j = report("beta digits", cfg);
        j["d"] = ctx.d();
        j["capabilities"] = capabilities(ctx);
        std::vector<std::string> digits;
        for (const Poly& p : e.digits) digits.push_back(p.to_string());
        j["digits"] = digits;
        emit(j);
        return 0;
    }
    for (const Poly& p : e.digits) std::cout << p.to_string() << '\n';
    return 0;
}

int run_beta_automaton(const BetaArgs& a, const RunConfig& cfg, const FieldPtr& F)
{
    const BetaContext ctx = read_beta(a.beta, F);
    note_capabilities(ctx, cfg);
    const BetaAutomaton m = beta_automaton(read_element(a.x, F, kDesc).stream(kDesc), ctx, cfg.count);
    if (cfg.json) {
        Json j = report("beta automaton", cfg);
        j["d"] = ctx.d();
        j["capabilities"] = capabilities(ctx);
        j["digits"] = Json::parse(m.digits.to_json());
        Json proj = Json::array();
        for (const Dfao& p : m.projections) proj.push_back(Json::parse(p.to_json()));
        j["projections"] = proj;
        emit(j);
        return 0;
    }
    std::cout << m.digits.to_json() << '\n';
    return 0;
}

int run_beta_bridge(const BetaArgs& a, const RunConfig& cfg, const FieldPtr& F)
{
    const BetaContext ctx = read_beta(a.beta, F);
    note_capabilities(ctx, cfg);
    const BetaBridge b = bridge(read_element(a.x, F, kDesc).stream(kDesc), ctx, cfg.count);
    std::vector<std::string> values;
    for (std::int64_t n = 0; n < cfg.count; ++n) values.push_back(value_text(b.expansion.digit_value(n)));
    if (cfg.json) {
        Json j = report("beta bridge", cfg);
        j["d"] = ctx.d();
        j["capabilities"] = capabilities(ctx);
        j["lead"] = b.lead ? Json(b.lead->to_string()) : Json(nullptr);
        j["values"] = values;
        emit(j);
        return 0;
    }
    if (b.lead) std::cout << "lead: " << b.lead->to_string() << '\n';
    for (const auto& v : values) std::cout << v << '\n';
    return 0;
}

int run_corpus(int samples, const RunConfig& cfg)
{
    CorpusConfig cc;
    cc.seed = cfg.seed;
    cc.rational_samples = samples;
    const auto results = run_acceptance(cc);
    if (cfg.json)
        std::cout << acceptance_json(results, cc) << '\n';
    else
        std::cout << acceptance_text(results);
    return acceptance_ok(results) ? 0 : 1;
}

void add_context_options(CLI::App* app, ContextArgs& c)
{
    app->add_option("--pi", c.pi, "uniformizer: expression, series literal or spec")->capture_default_str();
    app->add_option("--model", c.model, "vz | vp | vdeg")->capture_default_str();
    app->add_option("--P", c.P, "irreducible prime for the vp model");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Digit expansions over function fields"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--p", cfg.p, "field characteristic")->capture_default_str();
    app.add_option("--m", cfg.m, "field extension degree")->capture_default_str();
    app.add_option("-n,--count", cfg.count, "number of digits or coefficients")->capture_default_str();
    app.add_option("--precision", cfg.precision, "verification precision")->capture_default_str();
    app.add_option("--cap", cfg.cap, "state and step cap")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized runs")->capture_default_str();
    app.add_flag("--json", cfg.json, "machine-readable output");
    app.fallthrough();

    std::function<int(const FieldPtr&)> action;
    ExpandArgs ex;
    ResidueArgs ra;
    ChristolArgs ca;
    BetaArgs ba;
    int samples = CorpusConfig{}.rational_samples;

    auto expand_like = [&](const char* name, const char* help, int (*fn)(const ExpandArgs&, const RunConfig&, const FieldPtr&),
                           bool needs_x) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (needs_x) sub->add_option("--x", ex.x, "element: expression, series literal or spec")->required();
        add_context_options(sub, ex.ctx);
        sub->add_option("--gamma", ex.gamma, "span:a,b | fspan:a,b | set:a,b | file (default: standard system)");
        sub->add_option("--start", ex.start, "first digit index");
        sub->add_option("--engine", ex.engine, "auto | exact | series")->capture_default_str();
        sub->callback([&, fn] { action = [&, fn](const FieldPtr& F) { return fn(ex, cfg, F); }; });
        return sub;
    };
    expand_like("expand", "greedy digit expansion", run_expand, true);
    CLI::App* period = expand_like("period", "period detection", run_period, true);
    auto* exact_flag = period->add_flag("--exact", "exact remainder cycle (default)");
    period->add_flag("--bounded", ex.bounded, "candidate period on a digit prefix")->excludes(exact_flag);
    period->add_option("--nmax", ex.n_max, "bounded: digits examined")->capture_default_str();
    period->add_option("--lmax", ex.l_max, "bounded: largest period")->capture_default_str();
    expand_like("property-a", "check property A", run_property_a, false);
    expand_like("witness", "non-periodic rational witness", run_witness, false);

    CLI::App* residue = app.add_subcommand("residue", "residue systems");
    residue->require_subcommand(1);
    auto residue_sub = [&](const char* name, const char* help, int (*fn)(const ResidueArgs&, const RunConfig&, const FieldPtr&)) {
        CLI::App* sub = residue->add_subcommand(name, help);
        add_context_options(sub, ra.ctx);
        sub->callback([&, fn] { action = [&, fn](const FieldPtr& F) { return fn(ra, cfg, F); }; });
        return sub;
    };
    residue_sub("check", "completeness, closure and property A", run_residue_check)
        ->add_option("--gamma", ra.gamma, "residue system");
    CLI::App* rspan = residue_sub("span", "span system", run_residue_span);
    rspan->add_option("--alphas", ra.alphas, "comma-separated generators")->required();
    rspan->add_flag("--prime-field", ra.prime_field, "span over the prime field");
    CLI::App* rtwist = residue_sub("twist", "(1 - pi^L) Gamma", run_residue_twist);
    rtwist->add_option("--gamma", ra.gamma, "residue system");
    rtwist->add_option("-L", ra.L, "twist exponent")->capture_default_str();

    CLI::App* christol = app.add_subcommand("christol", "automata for algebraic series");
    christol->require_subcommand(1);
    auto christol_sub = [&](const char* name, const char* help, int (*fn)(const ChristolArgs&, const RunConfig&, const FieldPtr&)) {
        CLI::App* sub = christol->add_subcommand(name, help);
        sub->callback([&, fn] { action = [&, fn](const FieldPtr& F) { return fn(ca, cfg, F); }; });
        return sub;
    };
    christol_sub("encode", "spec -> DFAO", run_christol_encode)->add_option("--spec", ca.spec, "spec file or JSON")->required();
    christol_sub("decode", "DFAO -> relation", run_christol_decode)->add_option("--dfao", ca.dfao, "DFAO file or JSON")->required();
    CLI::App* cspan = christol_sub("span", "span-system digits via automata", run_christol_span);
    cspan->add_option("--x", ca.x, "element")->required();
    cspan->add_option("--alphas", ca.alphas, "comma-separated generators")->required();
    cspan->add_flag("--prime-field", ca.prime_field, "span over the prime field");
    cspan->add_option("--start", ca.start, "first digit index");
    add_context_options(cspan, ca.ctx);

    CLI::App* beta = app.add_subcommand("beta", "beta-expansions");
    beta->require_subcommand(1);
    auto beta_sub = [&](const char* name, const char* help, int (*fn)(const BetaArgs&, const RunConfig&, const FieldPtr&)) {
        CLI::App* sub = beta->add_subcommand(name, help);
        sub->add_option("--beta", ba.beta, "spec, expression, or series literal in 1/z (stream only)")->required();
        sub->add_option("--x", ba.x, "element of F_q[[1/z]]")->capture_default_str();
        sub->callback([&, fn] { action = [&, fn](const FieldPtr& F) { return fn(ba, cfg, F); }; });
    };
    beta_sub("digits", "digits a_1, a_2, ...", run_beta_digits);
    beta_sub("automaton", "digit automaton", run_beta_automaton);
    beta_sub("bridge", "digits as a (Gamma_d, 1/beta)-expansion", run_beta_bridge);

    CLI::App* corpus = app.add_subcommand("corpus", "acceptance corpus");
    corpus->require_subcommand(1);
    CLI::App* run = corpus->add_subcommand("run", "run every acceptance criterion");
    run->add_option("--samples", samples, "rational samples per setting")->capture_default_str();
    run->callback([&] { action = [&](const FieldPtr&) { return run_corpus(samples, cfg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (cfg.count < 0 || cfg.precision <= 0 || cfg.cap == 0) throw DomainError("caps and counts must be positive");
        return action(make_field(cfg.p, cfg.m));
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
