#include "fexp/beta.hpp"

namespace fexp {

namespace {

constexpr Orientation kDesc = Orientation::Descending;

std::int64_t degree_of(const LaurentStream& beta)
{
    if (beta.orientation() != kDesc) throw DomainError("beta must be a series in 1/z (vdeg orientation)");
    auto v = beta.find_valuation();
    if (!v) throw DomainError("beta is zero to the scan depth");
    if (*v >= 0) throw DomainError("beta must have positive degree (got " + std::to_string(-*v) + ")");
    return -*v;
}

RatFunc inv_z_power(const FieldPtr& F, std::int64_t i)
{
    return RatFunc(Poly::one(F), Poly::monomial(F, i));
}

ResidueSystem make_gamma(const LaurentStream& beta, std::int64_t d)
{
    const FieldPtr& F = beta.field();
    std::vector<ModelElem> gens;
    for (std::int64_t i = 0; i < d; ++i) gens.emplace_back(inv_z_power(F, i));
    ResidueSystem gamma = span_system(gens, BaseContext(F, Model::VDeg, ModelElem(inverse(beta))));
    if (!gamma.complete()) throw DomainError("Gamma_d is not a complete residue system for pi = 1/beta");
    return gamma;
}

void require_integral(const LaurentStream& x)
{
    if (x.orientation() != kDesc) throw DomainError("x must be a series in 1/z (vdeg orientation)");
    for (std::int64_t n = x.start(); n < 0; ++n)
        if (x.coeff(n) != 0) throw DomainError("x must lie in F_q[[1/z]] (degree <= 0)");
}

// x~ = x - a_1/beta when the leading digit has degree d.
std::pair<LaurentStream, std::optional<Poly>> split_lead(const LaurentStream& x, const BetaExpansion& a,
                                                         const BetaContext& ctx)
{
    if (a.digits.empty() || a[1].degree() < ctx.d()) return {x, std::nullopt};
    const LaurentStream lead = LaurentStream::from_ratfunc(RatFunc(a[1]), kDesc);
    return {x - divide(lead, ctx.beta()), a[1]};
}

} // namespace

BetaContext::BetaContext(LaurentStream beta, std::optional<AlgebraicSpec> spec)
    : beta_(std::move(beta)), spec_(std::move(spec)), d_(degree_of(beta_)), gamma_(make_gamma(beta_, d_))
{
}

BetaContext BetaContext::from_spec(const AlgebraicSpec& spec)
{
    if (spec.orient != kDesc) throw DomainError("beta spec must use the vdeg model");
    return BetaContext(hensel_root(spec), spec);
}

Symbol BetaContext::symbol(const Poly& a) const
{
    Symbol s = 0;
    for (std::int64_t j = a.degree(); j >= 0; --j) s = s * field()->q() + a[j];
    return s;
}

LaurentStream t_map(const LaurentStream& x, const BetaContext& ctx)
{
    require_integral(x);
    return int_frac_split(ctx.beta() * x).second;
}

BetaExpansion d_beta(const LaurentStream& x, const BetaContext& ctx, std::int64_t count)
{
    require_integral(x);
    const FieldPtr& F = ctx.field();
    const std::int64_t d = ctx.d();
    std::int64_t known = count * d + d + 1;  // y is exact at t^k for k < known
    std::vector<Elem> y = x.coeffs(0, known);
    std::vector<std::pair<std::int64_t, Elem>> b;  // nonzero (j, beta_j)
    const std::vector<Elem> bc = ctx.beta().coeffs(-d, known);
    for (std::int64_t j = -d; j < known; ++j)
        if (bc[static_cast<std::size_t>(j + d)] != 0) b.emplace_back(j, bc[static_cast<std::size_t>(j + d)]);
    BetaExpansion out;
    for (std::int64_t n = 1; n <= count; ++n) {
        // beta y at t^k for -d <= k < known - d, stored at k + d.
        std::vector<Elem> prod(static_cast<std::size_t>(known), 0);
        for (std::int64_t i = 0; i < known; ++i) {
            const Elem yi = y[static_cast<std::size_t>(i)];
            if (yi == 0) continue;
            for (const auto& [j, bj] : b) {
                if (i + j >= known - d) break;
                prod[static_cast<std::size_t>(i + j + d)] = F->add(prod[static_cast<std::size_t>(i + j + d)], F->mul(bj, yi));
            }
        }
        std::vector<Elem> a(static_cast<std::size_t>(d + 1));
        for (std::int64_t k = -d; k <= 0; ++k) a[static_cast<std::size_t>(-k)] = prod[static_cast<std::size_t>(k + d)];
        out.digits.emplace_back(F, std::move(a));
        known -= d;
        std::vector<Elem> next(static_cast<std::size_t>(known), 0);
        for (std::int64_t k = 1; k < known; ++k) next[static_cast<std::size_t>(k)] = prod[static_cast<std::size_t>(k + d)];
        y = std::move(next);
    }
    return out;
}

BetaBridge bridge(const LaurentStream& x, const BetaContext& ctx, std::int64_t count)
{
    const BetaExpansion a = d_beta(x, ctx, count);
    auto [xt, lead] = split_lead(x, a, ctx);
    const std::int64_t d = ctx.d();
    const LaurentStream y = shift(ctx.beta() * xt, d - 1);
    DigitExpansion e = expand(ModelElem(y), ctx.gamma(), Engine::Auto, 0);
    const RatFunc scale = inv_z_power(ctx.field(), d - 1);
    for (std::int64_t n = 1; n <= count; ++n) {
        const RatFunc want = n == 1 && lead ? RatFunc(ctx.field()) : RatFunc(a[static_cast<std::size_t>(n)]) * scale;
        if (!(e.digit_value(n - 1).rational() == want))
            throw DomainError("internal error: bridge digit " + std::to_string(n - 1) + " disagrees with d_beta");
    }
    return BetaBridge{std::move(e), std::move(lead)};
}

BetaAutomaton beta_automaton(const LaurentStream& x, const BetaContext& ctx, std::int64_t count)
{
    if (!ctx.spec()) throw DomainError("beta_automaton needs beta given by a polynomial relation, not only a stream");
    const BetaExpansion a = d_beta(x, ctx, count);
    auto [xt, lead] = split_lead(x, a, ctx);
    const std::int64_t d = ctx.d();
    const std::uint32_t q = ctx.field()->q();

    // x~ / z^{d-1} = sum_n (a_n / z^{d-1}) pi^n; generator i = 1/z^i carries
    // the coefficient of z^{d-1-i} in a_n.
    SpanChristol sc = span_christol(ModelElem(shift(xt, d - 1)), ctx.gamma(), count, 0);
    Dfao digits = dfao_map(sc.automaton, [q, d](Symbol index) {
        Symbol s = 0;
        for (std::int64_t i = 0; i < d; ++i, index /= q) {
            Symbol weight = 1;
            for (std::int64_t j = 0; j < d - 1 - i; ++j) weight *= q;
            s += (index % q) * weight;
        }
        return s;
    });
    if (lead) digits = dfao_override(digits, 1, ctx.symbol(*lead));
    digits = dfao_minimize(digits);
    if (digits.eval(0) != 0) throw DomainError("internal error: digit automaton is nonzero at index 0");
    for (std::int64_t n = 1; n <= count; ++n)
        if (digits.eval(static_cast<std::uint64_t>(n)) != ctx.symbol(a[static_cast<std::size_t>(n)]))
            throw DomainError("internal error: digit automaton disagrees with d_beta at n = " + std::to_string(n));

    BetaAutomaton out{digits, {}};
    Symbol weight = 1;
    for (std::int64_t j = 0; j <= d - (lead ? 0 : 1); ++j, weight *= q)
        out.projections.push_back(dfao_minimize(dfao_map(digits, [q, weight](Symbol s) { return (s / weight) % q; })));
    return out;
}

} // namespace fexp
