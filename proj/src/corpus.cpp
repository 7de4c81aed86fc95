#include "fexp/corpus.hpp"
#include "fexp/beta.hpp"
#include "fexp/christol.hpp"
#include "fexp/parse.hpp"

#include "json.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace fexp {

namespace {

constexpr Orientation kAsc = Orientation::Ascending;
constexpr Orientation kDesc = Orientation::Descending;

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Counts checks and keeps the first failure for the report.
struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;

    void check(bool ok, const std::string& what)
    {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = what;
    }
};

struct Fields {
    FieldPtr f2 = make_field(2);
    FieldPtr f3 = make_field(3);
    FieldPtr f4 = make_field(2, 2);
    FieldPtr f8 = make_field(2, 3);
    FieldPtr f9 = make_field(3, 2);
};

RatFunc rf(const std::string& s, const FieldPtr& F) { return parse_ratfunc(s, F); }

RatFunc random_rational(const FieldPtr& F, std::mt19937_64& rng, int max_deg)
{
    for (;;) {
        std::vector<Elem> n(1 + rng() % static_cast<unsigned>(max_deg)), d(1 + rng() % static_cast<unsigned>(max_deg));
        for (auto& c : n) c = static_cast<Elem>(rng() % F->q());
        for (auto& c : d) c = static_cast<Elem>(rng() % F->q());
        Poly dn(F, d);
        if (dn.is_zero()) continue;
        return RatFunc(Poly(F, n), dn);
    }
}

ResidueSystem span_of(const FieldPtr& F, std::initializer_list<const char*> gens, BaseContext ctx)
{
    std::vector<ModelElem> g;
    for (const char* s : gens) g.emplace_back(rf(s, F));
    return span_system(g, std::move(ctx));
}

ResidueSystem span_z2(const FieldPtr& F)
{
    return span_of(F, {"1", "z"}, BaseContext(F, Model::VZ, rf("z^2", F)));
}

using Body = std::function<std::string(Tally&)>;

CriterionResult run_one(const std::string& id, const std::string& title, double limit, const Body& body)
{
    CriterionResult r{id, title, false, false, "", 0, limit};
    Tally tally;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.detail = body(tally);
    } catch (const std::exception& e) {
        tally.check(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.pass = tally.failures == 0 && (limit == 0 || r.seconds < limit);
    std::ostringstream os;
    os << tally.checks - tally.failures << "/" << tally.checks << " checks";
    if (!r.detail.empty()) os << "; " << r.detail;
    if (tally.failures) os << "; first failure: " << tally.first;
    if (limit != 0 && r.seconds >= limit) os << "; over the runtime limit";
    r.detail = os.str();
    return r;
}

std::string rational_periodicity(Tally& t, const Fields& f, const CorpusConfig& cfg)
{
    const FieldPtr& F = f.f2;
    const Poly P = parse_poly("z^2+z+1", F);
    const std::vector<std::pair<std::string, ResidueSystem>> settings{
        {"z^2 span{1,z}", span_z2(F)},
        {"z^2/(1+z) span{1,z}", span_of(F, {"1", "z"}, BaseContext(F, Model::VZ, rf("z^2/(1+z)", F)))},
        {"z F_2", span_of(F, {"1"}, BaseContext(F, Model::VZ, rf("z", F)))},
        {"v_P, P=z^2+z+1", span_of(F, {"1", "z"}, BaseContext(F, Model::VP, RatFunc(P), P))},
    };
    std::mt19937_64 rng(cfg.seed);
    for (const auto& [name, gamma] : settings) {
        for (int i = 0; i < cfg.rational_samples; ++i) {
            const RatFunc x = random_rational(F, rng, 6);
            const std::string what = name + ", x = " + x.to_string();
            const PeriodCertificate cert = detect_period_exact(x, gamma);
            t.check(cert.status == PeriodStatus::Exact, what + ": no exact certificate");
            if (cert.status != PeriodStatus::Exact) continue;
            const DigitExpansion d = expand(ModelElem(x), gamma);
            t.check(certified_expansion(d, cert).prefix(512) == d.prefix(512), what + ": periodic digits differ within 512");
            t.check(resum_periodic(d, cert) == x, what + ": resummation differs from x");
        }
    }
    return std::to_string(settings.size()) + " settings x " + std::to_string(cfg.rational_samples) +
           " rationals; digits compared to 512, resummation exact";
}

std::string lemma21(Tally& t, const Fields& f)
{
    const FieldPtr& F = f.f2;
    const RatFunc pi = rf("z*(1+z)", F);
    const ResidueSystem gamma(BaseContext(F, Model::VZ, pi), {ModelElem(rf("0", F)), ModelElem(rf("1", F))});
    const Witness w = lemma21_witness(gamma);
    t.check(w.x == rf("1+z", F), "witness is " + w.x.to_string() + ", expected 1+z");
    const DigitExpansion d = expand(ModelElem(w.x), gamma);

    // Exact greedy oracle: a_n is the constant term of r_n.
    RatFunc r = w.x;
    for (std::int64_t n = 0; n < 512; ++n) {
        const Elem a = r.is_zero() ? 0 : F->div(r.num()[0], r.den()[0]);
        r = (r - RatFunc::constant(F, a)) / pi;
        t.check(d.digit(n) == a, "digit " + std::to_string(n) + " differs from the greedy oracle");
        const bool support = n == 0 || is_power_of_two(static_cast<std::uint64_t>(n));
        t.check(a == (support ? 1u : 0u), "digit " + std::to_string(n) + " breaks the support {0} u {2^k}");
    }
    t.check(d.prefix(9) == std::vector<Digit>{1, 1, 1, 0, 1, 0, 0, 0, 1}, "prefix is not 1,1,1,0,1,0,0,0,1");
    t.check(detect_period_bounded(d, 4096, 64).status == PeriodStatus::NoneWithinBounds,
            "detect_period_bounded(4096, 64) found a candidate");
    return "pi = z(1+z), Gamma = {0,1}; 512 digits against the greedy oracle; bounds (4096, 64)";
}

std::vector<AlgebraicSpec> spec_corpus(const Fields& f)
{
    return {
        make_spec("w^2+w+z", "z", kAsc, f.f2),
        spec_from_ratfunc(rf("1/(1+z)", f.f2), kAsc),
        spec_from_ratfunc(rf("(1+z^2)/(1+z+z^3)", f.f2), kAsc),
        make_spec("w^3+w+z", "z", kAsc, f.f2),
        make_spec("w^3-w-z", "-z", kAsc, f.f3),
        make_spec("w^4+w+z", "z", kAsc, f.f4),
    };
}

std::string encoder(Tally& t, const Fields& f)
{
    const AlgebraicSpec spec = make_spec("w^2+w+z", "z", kAsc, f.f2);
    const Dfao m = encode(spec, 4096);
    t.check(m.size() <= 4, "minimized automaton has " + std::to_string(m.size()) + " states");
    const LaurentStream series = hensel_root(spec);
    for (std::uint64_t n = 0; n < 4096; ++n) {
        t.check(m.eval(n) == series.coeff(static_cast<std::int64_t>(n)), "differs from hensel_root at " + std::to_string(n));
        t.check(m.eval(n) == (is_power_of_two(n) ? 1u : 0u), "not the power-of-two indicator at " + std::to_string(n));
    }
    return std::to_string(m.size()) + " states (limit 4); n < 4096";
}

std::string round_trip(Tally& t, const Fields& f)
{
    const auto corpus = spec_corpus(f);
    for (const AlgebraicSpec& spec : corpus) {
        const std::string what = spec.R.to_string();
        const Dfao m = encode(spec, 4096);
        const DecodeResult d = decode(m, spec.field(), 1024);
        t.check(d.relation.verified_precision >= 1024, what + ": verified precision below 1024");
        // Independent residual: R'(z, f) by stream arithmetic on the Hensel root.
        const LaurentStream residual = eval_bipoly(d.R, hensel_root(spec));
        bool zero = true;
        for (std::int64_t n = residual.start(); n < 1024 && zero; ++n) zero = residual.coeff(n) == 0;
        t.check(zero, what + ": decoded relation leaves a residual below z^1024");
    }
    return std::to_string(corpus.size()) + " specs; residual exact mod z^1024";
}

std::string span_content(Tally& t, const Fields& f)
{
    const FieldPtr& F = f.f2;
    const ResidueSystem gamma = span_z2(F);
    const ModelElem power(hensel_root(make_spec("w^2+w+z", "z", kAsc, F)));
    SpanChristol sc = span_christol(power, gamma, 512);
    t.check(sc.expansion.prefix(512) == expand(power, gamma).prefix(512), "sum z^(2^n): digits differ from expand within 512");
    for (std::uint64_t k = 0; k < 4096; ++k) {
        // Regrouping oracle: digit k is c_{2k} + c_{2k+1} z.
        const Symbol want = (is_power_of_two(2 * k) ? 1u : 0u) + 2u * (is_power_of_two(2 * k + 1) ? 1u : 0u);
        t.check(sc.automaton.eval(k) == want, "sum z^(2^n): automaton wrong at " + std::to_string(k));
    }
    const std::vector<const char*> samples{"1/(1+z)", "z^-3*(1+z^2)/(1+z+z^4)", "(z+z^5)/(1+z^3+z^7)", "1+z"};
    for (const char* s : samples) {
        const ModelElem x(rf(s, F));
        SpanChristol r = span_christol(x, gamma, 512);
        const DigitExpansion direct = expand(x, gamma);
        t.check(r.expansion.prefix(512) == direct.prefix(512), std::string(s) + ": digits differ from expand within 512");
        for (std::int64_t n = 0; n < 4096; ++n)
            t.check(r.automaton.eval(static_cast<std::uint64_t>(n)) == direct.digit(direct.start() + n),
                    std::string(s) + ": automaton wrong at " + std::to_string(n));
    }
    return "Gamma = span{1,z}, pi = z^2; sum z^(2^n) and " + std::to_string(samples.size()) +
           " rationals; digits to 512, automaton n < 4096";
}

std::string twist_shift(Tally& t, const Fields& f)
{
    const FieldPtr& F = f.f2;
    const ResidueSystem gamma = span_z2(F);
    const RatFunc pi = rf("z^2", F);
    const std::vector<const char*> xs{"1/(1+z)", "(1+z^3)/(1+z+z^2)", "z^-2/(1+z+z^2)", "1+z^3"};
    for (const char* s : xs) {
        const RatFunc x = rf(s, F);
        const DigitExpansion a = expand(ModelElem(x), gamma);
        for (std::int64_t L : {1, 2, 3}) {
            const RatFunc scale = RatFunc::constant(F, 1) - pi.pow(L);
            const DigitExpansion b = convert_expansion(expand(ModelElem(scale * x), gamma), twist_system(gamma, L));
            const std::string what = std::string(s) + ", L = " + std::to_string(L);
            t.check(b.start() == a.start(), what + ": start index differs");
            for (std::int64_t n = a.start(); n < a.start() + 128; ++n)
                t.check(b.digit_value(n).rational() == scale * a.digit_value(n).rational(),
                        what + ": b_n != (1 - pi^L) a_n at n = " + std::to_string(n));
        }
    }
    const ModelElem xi(rf("z^2", F));
    const ResidueSystem shifted = shift_system(gamma, xi);
    std::vector<ModelElem> shift_xs;
    for (const char* s : xs) shift_xs.emplace_back(rf(s, F));
    shift_xs.emplace_back(hensel_root(make_spec("w^2+w+z", "z", kAsc, F)));
    for (const ModelElem& x : shift_xs)
        t.check(shifted_christol(x, gamma, xi, 128).expansion.prefix(128) == expand(x, shifted).prefix(128),
                "shifted digits differ for x = " + x.to_string());
    return "twist L in {1,2,3} on " + std::to_string(xs.size()) + " rationals, shift xi = z^2 on " +
           std::to_string(shift_xs.size()) + " values; 128 digits";
}

std::string power_series_digits(Tally& t, const Fields& f)
{
    const FieldPtr& F = f.f2;
    const ModelElem f1(rf("1/(1+z)", F)), f2(rf("z/(1+z)", F));
    const ResidueSystem sys(BaseContext(F, Model::VZ, rf("z", F)), {f1, f2});
    const ModelElem zero{RatFunc(F)};
    const PowerSeriesDigits d = q2_powerseries_digits(zero, f1, f2, 256);
    const auto prefix = d.expansion.prefix(256);
    for (std::size_t n = 0; n < prefix.size(); ++n)
        t.check(prefix[n] == (n % 2 == 0 ? 1u : 0u), "digit " + std::to_string(n) + " breaks f2, f1, f2, ...");
    const PeriodCertificate cert = detect_period_exact(RatFunc(F), sys);
    t.check(cert.status == PeriodStatus::Exact && cert.period == 2, "exact period is not 2");
    t.check(prefix == expand(zero, sys).prefix(256), "differs from the greedy expansion within 256");
    return "x = 0, f1 = 1/(1+z), f2 = z/(1+z); 256 digits";
}

BetaContext quadratic_beta(const Fields& f)
{
    return BetaContext::from_spec(make_spec("w^2+z*w+1", "z", kDesc, f.f2));
}

std::string beta_digits(Tally& t, const Fields& f)
{
    const BetaContext ctx = quadratic_beta(f);
    const FieldPtr& F = f.f2;
    const BetaExpansion a = d_beta(LaurentStream::finite(F, kDesc, 0, {1}), ctx, 512);
    t.check(a[1] == parse_poly("z", F), "a_1 is " + a[1].to_string());
    t.check(a[2] == parse_poly("1", F), "a_2 is " + a[2].to_string());
    for (std::size_t n = 3; n <= 512; ++n) t.check(a[n].is_zero(), "a_" + std::to_string(n) + " is nonzero");
    // 1 = z/beta + 1/beta^2 by stream arithmetic.
    const LaurentStream pi = inverse(ctx.beta());
    const LaurentStream sum = LaurentStream::from_ratfunc(rf("z", F), kDesc) * pi + pi * pi;
    for (std::int64_t n = std::min<std::int64_t>(sum.start(), 0); n < 512; ++n)
        t.check(sum.coeff(n) == (n == 0 ? 1u : 0u), "z/beta + 1/beta^2 differs from 1 at t^" + std::to_string(n));
    return "beta^2 + z beta + 1 = 0 over F_2; 512 digits exact";
}

// The identity as stated: digit n-1 of the expansion of beta x/z^d equals a_n/z^d.
std::string literal_bridge(Tally& t, const Fields& f)
{
    const BetaContext ctx = quadratic_beta(f);
    const FieldPtr& F = f.f2;
    const LaurentStream x = LaurentStream::finite(F, kDesc, 0, {1});
    const std::int64_t d = ctx.d();
    const BetaExpansion a = d_beta(x, ctx, 512);
    const DigitExpansion e = expand(ModelElem(shift(ctx.beta() * x, d)), ctx.gamma(), Engine::Auto, 0);
    const RatFunc scale(Poly::one(F), Poly::monomial(F, d));
    for (std::int64_t n = 1; n <= 512; ++n)
        t.check(e.digit_value(n - 1).rational() == RatFunc(a[static_cast<std::size_t>(n)]) * scale,
                "digit " + std::to_string(n - 1) + " is " + e.digit_value(n - 1).to_string() + ", a_n/z^d is " +
                    (RatFunc(a[static_cast<std::size_t>(n)]) * scale).to_string());
    return "a_n/z^d may carry a 1/z^d term, which no element of Gamma_d = span{1, ..., 1/z^(d-1)} has; unattainable as stated";
}

std::string corrected_bridge(Tally& t, const Fields& f)
{
    const BetaContext ctx = quadratic_beta(f);
    const FieldPtr& F = f.f2;
    const LaurentStream x = LaurentStream::finite(F, kDesc, 0, {1});
    const BetaBridge b = bridge(x, ctx, 512);  // checks every digit against d_beta
    t.check(b.lead && *b.lead == parse_poly("z", F), "a_1 = z was not split off");
    const BetaExpansion a = d_beta(x, ctx, 512);
    const RatFunc scale(Poly::one(F), Poly::monomial(F, ctx.d() - 1));
    for (std::int64_t n = 2; n <= 512; ++n)
        t.check(b.expansion.digit_value(n - 1).rational() == RatFunc(a[static_cast<std::size_t>(n)]) * scale,
                "digit " + std::to_string(n - 1) + " differs from a_n/z^(d-1)");
    return "expansion of beta (x - a_1/beta)/z^(d-1): digit n-1 = a_n/z^(d-1) for 2 <= n <= 512";
}

std::string beta_auto(Tally& t, const Fields& f)
{
    const BetaContext ctx = quadratic_beta(f);
    const LaurentStream x = LaurentStream::finite(f.f2, kDesc, 0, {1});
    const BetaAutomaton m = beta_automaton(x, ctx, 512);
    const BetaExpansion a = d_beta(x, ctx, 512);
    for (std::size_t n = 1; n <= 512; ++n)
        t.check(m.digits.eval(n) == ctx.symbol(a[n]), "automaton differs from d_beta at n = " + std::to_string(n));
    return std::to_string(m.digits.size()) + " states; n <= 512";
}

std::string beta_profile(Tally& t, const Fields& f)
{
    const BetaContext ctx = quadratic_beta(f);
    const BetaExpansion a = d_beta(LaurentStream::finite(f.f2, kDesc, 0, {1}), ctx, 2048);
    std::vector<Symbol> seq;
    for (std::size_t n = 1; n <= 2048; ++n) seq.push_back(ctx.symbol(a[n]));
    const KernelProfile p = kernel_profile(seq, 2, 8, 8);
    t.check(p.bounded(), "kernel profile not bounded at depth 8");
    return "depth 8, prefix length 8, counts ending at " + std::to_string(p.counts.back());
}

std::vector<Symbol> dfao_values(const Dfao& m, std::size_t count)
{
    std::vector<Symbol> out;
    for (std::uint64_t n = 0; n < count; ++n) out.push_back(m.eval(n));
    return out;
}

std::string negative_control(Tally& t, const Fields& f)
{
    constexpr std::size_t kLength = 1u << 16;
    std::vector<Symbol> squares(kLength, 0);
    for (std::size_t i = 0; i * i < kLength; ++i) squares[i * i] = 1;
    const KernelProfile sq = kernel_profile(squares, 2, 8, 256);
    t.check(sq.strictly_increasing_from(4), "square counts are not strictly increasing from depth 4");

    std::vector<std::pair<std::string, std::vector<Symbol>>> automatic;
    for (const AlgebraicSpec& spec : spec_corpus(f)) {
        if (spec.field()->q() != 2) continue;
        automatic.emplace_back(spec.R.to_string(), dfao_values(encode(spec, 1024), kLength));
    }
    const ModelElem power(hensel_root(make_spec("w^2+w+z", "z", kAsc, f.f2)));
    automatic.emplace_back("span digits", dfao_values(span_christol(power, span_z2(f.f2), 512).automaton, kLength));
    automatic.emplace_back("d_beta(1)",
                           dfao_values(beta_automaton(LaurentStream::finite(f.f2, kDesc, 0, {1}), quadratic_beta(f), 512).digits, kLength));
    for (const auto& [name, seq] : automatic) {
        const KernelProfile p = kernel_profile(seq, 2, 8, 256);
        t.check(p.bounded() && !p.strictly_increasing_from(4), name + ": profile looks like the squares");
    }
    std::ostringstream os;
    os << "squares counts";
    for (std::size_t d = 4; d < sq.counts.size(); ++d) os << " " << sq.counts[d];
    os << " (depths 4..8, prefix 2^16, length 256); " << automatic.size() << " automatic sequences bounded";
    return os.str();
}

// Independent product in F_p[X]/(modulus) on coordinates.
Elem slow_mul(const Field& F, Elem a, Elem b)
{
    const auto ca = F.coords(a), cb = F.coords(b);
    const auto& mod = F.modulus();
    const std::uint32_t p = F.p(), m = F.m();
    std::vector<std::uint32_t> prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    for (std::uint32_t k = 2 * m - 1; k >= m; --k) {
        const std::uint32_t c = prod[k];
        if (c == 0) continue;
        for (std::uint32_t i = 0; i <= m; ++i) prod[k - m + i] = (prod[k - m + i] + (p - c) * mod[i]) % p;
    }
    prod.resize(m);
    return F.from_coords(prod);
}

std::string algebra(Tally& t, const Fields& f, const CorpusConfig& cfg)
{
    for (const FieldPtr& F : {f.f2, f.f4, f.f8, f.f9}) {
        const std::string name = "F_" + std::to_string(F->q());
        for (Elem a = 0; a < F->q(); ++a) {
            t.check(F->add(a, F->neg(a)) == 0, name + ": additive inverse");
            if (a != 0) t.check(F->mul(a, F->inv(a)) == 1, name + ": multiplicative inverse");
            t.check(F->mul(a, 1) == a && F->add(a, 0) == a, name + ": identities");
            for (Elem b = 0; b < F->q(); ++b) {
                t.check(F->add(a, b) == F->add(b, a) && F->mul(a, b) == F->mul(b, a), name + ": commutativity");
                t.check(F->mul(a, b) == slow_mul(*F, a, b), name + ": product differs from the coordinate oracle");
                for (Elem c = 0; c < F->q(); ++c) {
                    t.check(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)), name + ": additive associativity");
                    t.check(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)), name + ": multiplicative associativity");
                    t.check(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)), name + ": distributivity");
                }
            }
        }
    }
    std::mt19937_64 rng(cfg.seed + 10);
    const std::vector<FieldPtr> fields{f.f2, f.f3, f.f9};
    auto random_poly = [&](const FieldPtr& F, int max_deg) {
        std::vector<Elem> c(1 + rng() % static_cast<unsigned>(max_deg));
        for (auto& e : c) e = static_cast<Elem>(rng() % F->q());
        return Poly(F, c);
    };
    for (int i = 0; i < 1000; ++i) {
        const FieldPtr& F = fields[static_cast<std::size_t>(i) % fields.size()];
        const Poly a = random_poly(F, 14);
        Poly b = random_poly(F, 8);
        if (b.is_zero()) b = Poly::one(F);
        const auto [quot, rem] = divmod(a, b);
        t.check(quot * b + rem == a && (rem.is_zero() || rem.degree() < b.degree()), "divmod invariant");

        const std::vector<Poly> primes{parse_poly("z", F), parse_poly("z^2+1", F), parse_poly("z^2+z+2", F)};
        Poly P = primes[rng() % primes.size()];
        if (!is_irreducible(P)) P = parse_poly("z", F);
        const RatFunc x = random_rational(F, rng, 6), y = random_rational(F, rng, 6);
        const Valuation vx = val_p(x, P), vy = val_p(y, P);
        if (vx && vy) {
            t.check(val_p(x * y, P) == Valuation(*vx + *vy), "val_p(xy) != val_p(x) + val_p(y)");
            const Valuation vs = val_p(x + y, P);
            t.check(!vs || *vs >= std::min(*vx, *vy), "val_p(x+y) < min");
        }
    }
    return "field laws exhaustive on F_2, F_4, F_8, F_9 with a coordinate product oracle; 1000 random divmod/valuation cases";
}

} // namespace

std::vector<CriterionResult> run_acceptance(const CorpusConfig& config)
{
    const Fields f;
    std::vector<CriterionResult> out;
    out.push_back(run_one("1", "rational periodicity round-trip", 60, [&](Tally& t) { return rational_periodicity(t, f, config); }));
    out.push_back(run_one("2", "aperiodicity witness", 5, [&](Tally& t) { return lemma21(t, f); }));
    out.push_back(run_one("3", "Christol encoder", 10, [&](Tally& t) { return encoder(t, f); }));
    out.push_back(run_one("4", "Christol decoder round-trip", 0, [&](Tally& t) { return round_trip(t, f); }));
    out.push_back(run_one("5", "span Christol digits", 0, [&](Tally& t) { return span_content(t, f); }));
    out.push_back(run_one("6", "twist and shift coherence", 0, [&](Tally& t) { return twist_shift(t, f); }));
    out.push_back(run_one("7", "q = 2 power-series digits", 0, [&](Tally& t) { return power_series_digits(t, f); }));
    out.push_back(run_one("8a", "beta digits of 1", 30, [&](Tally& t) { return beta_digits(t, f); }));
    CriterionResult literal = run_one("8b", "bridge identity as stated", 30, [&](Tally& t) { return literal_bridge(t, f); });
    literal.known_unattainable = true;
    out.push_back(std::move(literal));
    out.push_back(run_one("8c", "bridge identity, corrected scaling", 30, [&](Tally& t) { return corrected_bridge(t, f); }));
    out.push_back(run_one("8d", "beta automaton", 30, [&](Tally& t) { return beta_auto(t, f); }));
    out.push_back(run_one("8e", "beta kernel profile", 30, [&](Tally& t) { return beta_profile(t, f); }));
    out.push_back(run_one("9", "negative control", 0, [&](Tally& t) { return negative_control(t, f); }));
    out.push_back(run_one("10", "algebra substrate", 0, [&](Tally& t) { return algebra(t, f, config); }));
    return out;
}

std::string acceptance_text(const std::vector<CriterionResult>& results)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    std::size_t passed = 0, excluded = 0;
    for (const auto& r : results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << ": " << r.detail << " (" << r.seconds << " s";
        if (r.limit_seconds > 0) os << ", limit " << r.limit_seconds << " s";
        os << ")";
        if (r.known_unattainable) os << " [known unattainable, excluded from verdict]";
        os << "\n";
        passed += r.pass;
        excluded += r.known_unattainable && !r.pass;
    }
    os << "verdict: " << (acceptance_ok(results) ? "PASS" : "FAIL") << " (" << passed << "/" << results.size()
       << " passed, " << excluded << " known unattainable)\n";
    return os.str();
}

std::string acceptance_json(const std::vector<CriterionResult>& results, const CorpusConfig& config)
{
    nlohmann::ordered_json j;
    j["seed"] = config.seed;
    j["rational_samples"] = config.rational_samples;
    j["criteria"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        // Timings are left out so that reports are identical across runs.
        j["criteria"].push_back({{"id", r.id},
                                 {"title", r.title},
                                 {"pass", r.pass},
                                 {"known_unattainable", r.known_unattainable},
                                 {"limit_seconds", r.limit_seconds},
                                 {"detail", r.detail}});
    }
    j["ok"] = acceptance_ok(results);
    return j.dump(2);
}

bool acceptance_ok(const std::vector<CriterionResult>& results)
{
    for (const auto& r : results)
        if (!r.pass && !r.known_unattainable) return false;
    return true;
}

} // namespace fexp
