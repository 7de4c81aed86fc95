#include "fexp/christol.hpp"
#include "fexp/linalg.hpp"

namespace fexp {

namespace {

using Coeffs = std::vector<Elem>;

// Multiplication by pi on t-coefficients [0, H), either through the
// rational form t^s A/B or by a dense truncated product.
class PiMultiplier {
public:
    PiMultiplier(const BaseContext& ctx, std::size_t H) : F_(ctx.field()), H_(H)
    {
        const Orientation o = ctx.orientation();
        if (ctx.pi().is_rational()) {
            TRational tr = to_t_rational(ctx.pi().rational(), o);
            shift_ = tr.shift;
            num_ = tr.A.coeffs();
            den_ = tr.B.coeffs();
            den0_inv_ = F_->inv(den_[0]);
        } else {
            dense_ = ctx.pi().stream(o).coeffs(0, static_cast<std::int64_t>(H));
        }
    }

    // Only entries at indices >= from are needed afterwards.
    Coeffs apply(const Coeffs& a, std::size_t from) const
    {
        Coeffs out(H_, 0);
        if (!dense_.empty()) {
            for (std::size_t j = 0; j < H_; ++j) {
                if (a[j] == 0) continue;
                for (std::size_t k = from > j ? from - j : 0; j + k < H_; ++k)
                    if (dense_[k] != 0) out[j + k] = F_->add(out[j + k], F_->mul(a[j], dense_[k]));
            }
            return out;
        }
        // (a * A) / B, then shift by t^s.
        Coeffs tmp(H_, 0);
        for (std::size_t j = 0; j < H_; ++j) {
            if (a[j] == 0) continue;
            for (std::size_t k = 0; k < num_.size() && j + k < H_; ++k)
                if (num_[k] != 0) tmp[j + k] = F_->add(tmp[j + k], F_->mul(a[j], num_[k]));
        }
        for (std::size_t j = 0; j < H_; ++j) {
            Elem s = tmp[j];
            for (std::size_t k = 1; k < den_.size() && k <= j; ++k)
                if (den_[k] != 0) s = F_->sub(s, F_->mul(den_[k], tmp[j - k]));
            tmp[j] = F_->mul(s, den0_inv_);
        }
        const auto sh = static_cast<std::size_t>(shift_);
        for (std::size_t j = 0; j + sh < H_; ++j) out[j + sh] = tmp[j];
        return out;
    }

private:
    FieldPtr F_;
    std::size_t H_;
    std::int64_t shift_ = 0;
    Coeffs num_, den_, dense_;
    Elem den0_inv_ = 1;
};

Components components_from_expansion(const ModelElem& x, const ResidueSystem& gamma, std::int64_t count,
                                     std::int64_t m, const FieldPtr& Fc)
{
    Components out{m, Fc, {}};
    const std::size_t u = gamma.span()->generators.size();
    DigitExpansion d = expand(x, gamma, Engine::Auto, m);
    for (Digit a : d.prefix(static_cast<std::size_t>(count))) {
        std::vector<Elem> c(u);
        for (auto& ci : c) {
            ci = a % Fc->q();
            a /= Fc->q();
        }
        out.coords.push_back(std::move(c));
    }
    return out;
}

LaurentStream pi_power(const LaurentStream& pi, std::int64_t k)
{
    if (k >= 0) return power(pi, static_cast<std::uint64_t>(k));
    return power(inverse(pi), static_cast<std::uint64_t>(-k));
}

std::vector<Elem> component_prefix(const Components& c, std::size_t i)
{
    std::vector<Elem> out;
    for (const auto& row : c.coords) out.push_back(row[i]);
    return out;
}

// Christol automaton for a coefficient sequence known only by a prefix;
// the relation is found by search and the automaton is checked against
// the whole prefix.
std::pair<Dfao, OreForm> automaton_from_prefix(const std::vector<Elem>& prefix, const FieldPtr& F, const std::string& what)
{
    auto rel = find_relation(prefix, F);
    if (!rel)
        throw DomainError(what + ": no algebraic relation found on " + std::to_string(prefix.size()) +
                          " coefficients (is the input algebraic?)");
    OreForm ore = homogenize(*rel);
    Dfao m = dfao_minimize(encode_series(ore, F, [&](std::int64_t n) {
        return n < static_cast<std::int64_t>(prefix.size()) ? prefix[static_cast<std::size_t>(n)] : 0;
    }));
    for (std::size_t n = 0; n < prefix.size(); ++n)
        if (m.eval(n) != prefix[n])
            throw DomainError(what + ": automaton disagrees with the computed coefficients at index " + std::to_string(n));
    return {std::move(m), std::move(ore)};
}

} // namespace

Components solve_components(const ModelElem& x, const ResidueSystem& gamma, std::int64_t count,
                            std::optional<std::int64_t> start)
{
    if (!gamma.span()) throw DomainError("component solve needs a span system");
    if (!gamma.complete()) throw DomainError("residue system is not complete");
    const BaseContext& ctx = gamma.context();
    const FieldPtr& F = ctx.field();
    const bool prime = gamma.span()->prime_field;
    const FieldPtr Fc = prime ? make_field(F->p()) : F;
    const std::int64_t m = start ? *start : default_start(x, ctx);
    if (ctx.model() == Model::VP) return components_from_expansion(x, gamma, count, m, Fc);

    const Orientation o = ctx.orientation();
    const auto e = static_cast<std::size_t>(ctx.e());
    const auto H = static_cast<std::size_t>(count) * e + 32;
    const auto& gens = gamma.span()->generators;
    const std::size_t u = gens.size();
    const std::size_t split = prime ? F->m() : 1;  // F_p-coordinates per F_q entry

    // y = x pi^{-m} has valuation >= 0 and digits from index 0.
    const LaurentStream y = m == 0 ? x.stream(o) : x.stream(o) * pi_power(ctx.pi().stream(o), -m);
    for (std::int64_t n = y.start(); n < 0; ++n)
        if (y.coeff(n) != 0) throw DomainError("x has valuation below the start index");
    Coeffs r = y.coeffs(0, static_cast<std::int64_t>(H));
    std::vector<Coeffs> terms;  // alpha_i pi^n
    for (const auto& a : gens) terms.push_back(a.stream(o).coeffs(0, static_cast<std::int64_t>(H)));
    const PiMultiplier times_pi(ctx, H);

    Components out{m, Fc, {}};
    for (std::size_t n = 0; n < static_cast<std::size_t>(count); ++n) {
        // The digit block: coefficients n e .. n e + e - 1.
        Matrix A;
        std::vector<Elem> b;
        for (std::size_t j = n * e; j < (n + 1) * e; ++j) {
            if (split == 1) {
                std::vector<Elem> row;
                for (const auto& t : terms) row.push_back(t[j]);
                A.push_back(std::move(row));
                b.push_back(r[j]);
                continue;
            }
            const auto rc = F->coords(r[j]);
            for (std::size_t c = 0; c < split; ++c) {
                std::vector<Elem> row;
                for (const auto& t : terms) row.push_back(F->coords(t[j])[c]);
                A.push_back(std::move(row));
                b.push_back(rc[c]);
            }
        }
        if (A.size() != u) throw DomainError("generator count does not match the digit block size");
        auto sol = solve_square(Fc, std::move(A), std::move(b));
        if (!sol) throw DomainError("internal error: digit block of the generators is singular");
        for (std::size_t i = 0; i < u; ++i) {
            const Elem c = (*sol)[i];
            if (c == 0) continue;
            for (std::size_t j = n * e; j < H; ++j)
                if (terms[i][j] != 0) r[j] = F->sub(r[j], F->mul(c, terms[i][j]));
        }
        out.coords.push_back(std::move(*sol));
        for (auto& t : terms) t = times_pi.apply(t, (n + 1) * e);
    }
    for (std::size_t j = 0; j < static_cast<std::size_t>(count) * e; ++j)
        if (r[j] != 0) throw DomainError("internal error: component residual has valuation " + std::to_string(j));
    return out;
}

SpanChristol span_christol(const ModelElem& x, const ResidueSystem& gamma, std::int64_t count,
                           std::optional<std::int64_t> start)
{
    const Components comps = solve_components(x, gamma, std::max<std::int64_t>(count, 256), start);
    const FieldPtr& Fc = comps.coeff_field;
    const std::uint32_t base = Fc->q();
    std::vector<Dfao> autos;
    std::vector<OreForm> relations;
    for (std::size_t i = 0; i < gamma.span()->generators.size(); ++i) {
        auto [m, ore] = automaton_from_prefix(component_prefix(comps, i), Fc, "component " + std::to_string(i));
        autos.push_back(std::move(m));
        relations.push_back(std::move(ore));
    }
    Dfao combined = autos[0];
    std::uint32_t weight = 1;
    for (std::size_t i = 1; i < autos.size(); ++i) {
        weight *= base;
        combined = dfao_minimize(dfao_product(combined, autos[i], [weight](Symbol a, Symbol b) { return a + weight * b; }));
    }
    auto sys = std::make_shared<const ResidueSystem>(gamma);
    const std::int64_t m = comps.start;
    DigitExpansion expansion =
        DigitExpansion::from_function(sys, m, [combined, m](std::int64_t n) { return combined.eval(static_cast<std::uint64_t>(n - m)); });
    return SpanChristol{std::move(expansion), std::move(combined), std::move(autos), std::move(relations)};
}

ShiftedChristol shifted_christol(const ModelElem& x, const ResidueSystem& gamma, const ModelElem& xi, std::int64_t count)
{
    const BaseContext& ctx = gamma.context();
    const ResidueSystem shifted = shift_system(gamma, xi);
    const std::int64_t m = default_start(x, ctx);
    // x - pi^m xi / (1 - pi)
    std::optional<ModelElem> y;
    if (x.is_rational() && xi.is_rational() && ctx.pi().is_rational()) {
        const RatFunc& pi = ctx.pi().rational();
        y = ModelElem(x.rational() - pi.pow(m) * xi.rational() / (RatFunc::constant(ctx.field(), 1) - pi));
    } else {
        const Orientation o = ctx.orientation();
        const LaurentStream pi = ctx.pi().stream(o);
        const LaurentStream one = LaurentStream::finite(ctx.field(), o, 0, {1});
        y = ModelElem(x.stream(o) - divide(pi_power(pi, m) * xi.stream(o), one - pi));
    }
    SpanChristol sc = span_christol(*y, gamma, count, m);
    auto sys = std::make_shared<const ResidueSystem>(shifted);
    DigitExpansion inner = sc.expansion;
    DigitExpansion expansion = DigitExpansion::from_function(sys, m, [inner](std::int64_t n) { return inner.digit(n); });
    return ShiftedChristol{std::move(expansion), std::move(sc.automaton)};
}

PowerSeriesDigits q2_powerseries_digits(const ModelElem& x, const ModelElem& f1, const ModelElem& f2, std::int64_t count)
{
    const FieldPtr& F = x.field();
    if (F->q() != 2) throw DomainError("power-series digits are defined over F_2");
    const Orientation o = Orientation::Ascending;
    const LaurentStream s1 = f1.stream(o), s2 = f2.stream(o);
    for (const auto* s : {&s1, &s2})
        for (std::int64_t n = s->start(); n < 0; ++n)
            if (s->coeff(n) != 0) throw DomainError("digits must be power series");
    if (s1.coeff(0) == s2.coeff(0)) throw DomainError("f1 and f2 must have distinct constant terms");
    const ModelElem z = ModelElem(RatFunc::z(F));
    BaseContext ctx(F, Model::VZ, z);
    auto sys = std::make_shared<const ResidueSystem>(ctx, std::vector<ModelElem>{f1, f2});
    const bool first_is_one = s1.coeff(0) == 1;
    const Digit idx_one = first_is_one ? 0 : 1;
    const LaurentStream& one = first_is_one ? s1 : s2;
    const LaurentStream& zero = first_is_one ? s2 : s1;

    const std::int64_t m = default_start(x, ctx);
    const RatFunc geom = RatFunc::z(F).pow(m) / (RatFunc::constant(F, 1) - RatFunc::z(F));
    const LaurentStream sel = divide(x.stream(o) - zero * LaurentStream::from_ratfunc(geom, o), one - zero);
    std::vector<Elem> prefix;
    for (std::int64_t n = 0; n < std::max<std::int64_t>(count, 256); ++n) prefix.push_back(sel.coeff(m + n));
    Dfao selector = automaton_from_prefix(prefix, F, "selector series").first;
    Dfao digits = dfao_map(selector, [idx_one](Symbol s) { return s ? idx_one : 1 - idx_one; });
    DigitExpansion expansion =
        DigitExpansion::from_function(sys, m, [digits, m](std::int64_t n) { return digits.eval(static_cast<std::uint64_t>(n - m)); });
    return PowerSeriesDigits{std::move(expansion), std::move(selector)};
}

} // namespace fexp
