#include "fexp/expand.hpp"

#include <algorithm>

namespace fexp {

DigitExpansion::DigitExpansion(std::shared_ptr<const ResidueSystem> system, std::int64_t start, Filler fill)
    : sys_(std::move(system)), start_(start), cache_(std::make_shared<Cache>())
{
    cache_->fill = std::move(fill);
}

DigitExpansion DigitExpansion::from_function(std::shared_ptr<const ResidueSystem> system, std::int64_t start,
                                             std::function<Digit(std::int64_t n)> digit)
{
    return DigitExpansion(std::move(system), start, [start, digit = std::move(digit)](std::vector<Digit>& d, std::size_t count) {
        while (d.size() < count) d.push_back(digit(start + static_cast<std::int64_t>(d.size())));
    });
}

Digit DigitExpansion::digit(std::int64_t n) const
{
    if (n < start_) throw DomainError("digit index " + std::to_string(n) + " below the start " + std::to_string(start_));
    const auto i = static_cast<std::size_t>(n - start_);
    if (i >= cache_->digits.size()) {
        cache_->fill(cache_->digits, i + 1);
        if (cache_->digits.size() <= i) throw DomainError("digit source ended early");
    }
    return cache_->digits[i];
}

std::vector<Digit> DigitExpansion::digits(std::int64_t from, std::int64_t to) const
{
    std::vector<Digit> out;
    if (to <= from) return out;
    digit(to - 1);
    for (std::int64_t n = from; n < to; ++n) out.push_back(digit(n));
    return out;
}

std::vector<Digit> DigitExpansion::prefix(std::size_t count) const
{
    return digits(start_, start_ + static_cast<std::int64_t>(count));
}

ModelElem DigitExpansion::partial_sum(std::int64_t upto) const
{
    const BaseContext& ctx = sys_->context();
    const FieldPtr& F = ctx.field();
    bool rational = ctx.pi().is_rational();
    for (const auto& g : sys_->reps()) rational = rational && g.is_rational();
    if (rational) {
        // Horner from the top: sum a_n pi^n = pi^start (a_start + pi (a_{start+1} + ...))
        const RatFunc& pi = ctx.pi().rational();
        RatFunc acc(F);
        for (std::int64_t n = upto - 1; n >= start_; --n) acc = acc * pi + sys_->reps()[digit(n)].rational();
        return ModelElem(acc * pi.pow(start_));
    }
    const Orientation o = ctx.orientation();
    LaurentStream pi = ctx.pi().stream(o);
    LaurentStream acc = LaurentStream::zero(F, o);
    for (std::int64_t n = upto - 1; n >= start_; --n) acc = acc * pi + sys_->reps()[digit(n)].stream(o);
    LaurentStream scale_by = start_ >= 0 ? power(pi, static_cast<std::uint64_t>(start_))
                                         : power(inverse(pi), static_cast<std::uint64_t>(-start_));
    return ModelElem(acc * scale_by);
}

std::int64_t default_start(const ModelElem& x, const BaseContext& ctx)
{
    Valuation v = ctx.valuation(x);
    if (!v || *v >= 0) return 0;
    const std::int64_t e = ctx.e();
    return -((-*v + e - 1) / e);
}

CarryState::CarryState(const RatFunc& x, std::shared_ptr<const ResidueSystem> gamma, std::int64_t start)
    : sys_(std::move(gamma)), pi_(x.field()), r_(x), n_(start)
{
    const BaseContext& ctx = sys_->context();
    if (!ctx.pi().is_rational()) throw DomainError("exact remainders need a rational pi");
    for (const auto& g : sys_->reps()) {
        if (!g.is_rational()) throw DomainError("exact remainders need rational representatives");
        reps_.push_back(g.rational());
    }
    pi_ = ctx.pi().rational();
    r_ = x * pi_.pow(-start);
    Valuation v = ctx.valuation(r_);
    if (v && *v < 0) throw DomainError("start index " + std::to_string(start) + " is above floor(v(x)/e)");
    pi_ = pi_.inverse();
}

Digit CarryState::step()
{
    auto idx = sys_->index_of(sys_->context().reduce(r_));
    if (!idx) throw DomainError("residue system is not complete: no representative for a remainder");
    r_ = (r_ - reps_[*idx]) * pi_;
    ++n_;
    return static_cast<Digit>(*idx);
}

namespace {

// Everything the truncated-series engine needs, fixed at construction.
struct SeriesPlan {
    std::shared_ptr<const ResidueSystem> sys;
    std::optional<LaurentStream> scaled;  // x * pi^{-start}
    std::int64_t e = 0;
    bool rational_pi = false;
    std::vector<Elem> A, B;  // pi = t^e A/B
    std::optional<LaurentStream> unit_inverse;  // (pi / t^e)^{-1} for series pi
    std::vector<LaurentStream> reps;
};

std::vector<Digit> run_series(const SeriesPlan& plan, std::size_t count)
{
    const FieldPtr& F = plan.sys->context().field();
    const std::int64_t e = plan.e;
    const auto W = static_cast<std::size_t>(static_cast<std::int64_t>(count + 1) * e);
    std::vector<Elem> r = plan.scaled->coeffs(0, static_cast<std::int64_t>(W));
    std::vector<std::vector<Elem>> reps;
    for (const auto& g : plan.reps) reps.push_back(g.coeffs(0, static_cast<std::int64_t>(W)));
    std::vector<Elem> uinv;
    if (!plan.rational_pi) uinv = plan.unit_inverse->coeffs(0, static_cast<std::int64_t>(W));

    const Elem a0inv = plan.rational_pi ? F->inv(plan.A[0]) : 0;
    std::vector<Elem> tmp;
    std::vector<Digit> out;
    out.reserve(count);
    const auto ue = static_cast<std::size_t>(e);
    for (std::size_t n = 0; n < count; ++n) {
        Residue res(r.begin(), r.begin() + e);
        auto idx = plan.sys->index_of(res);
        if (!idx) throw DomainError("residue system is not complete: no representative for a remainder");
        out.push_back(static_cast<Digit>(*idx));
        const auto& g = reps[*idx];
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = F->sub(r[k], g[k]);
        r.erase(r.begin(), r.begin() + e);
        const std::size_t len = r.size();
        if (len < ue) break;
        if (plan.rational_pi) {
            const auto& B = plan.B;
            for (std::size_t k = len; k-- > 0;) {
                Elem acc = 0;
                const std::size_t jmax = std::min(k, B.size() - 1);
                for (std::size_t j = 0; j <= jmax; ++j)
                    if (B[j] != 0 && r[k - j] != 0) acc = F->add(acc, F->mul(B[j], r[k - j]));
                r[k] = acc;
            }
            const auto& A = plan.A;
            for (std::size_t k = 0; k < len; ++k) {
                Elem acc = r[k];
                const std::size_t jmax = std::min(k, A.size() - 1);
                for (std::size_t j = 1; j <= jmax; ++j)
                    if (A[j] != 0 && r[k - j] != 0) acc = F->sub(acc, F->mul(A[j], r[k - j]));
                r[k] = F->mul(acc, a0inv);
            }
        } else {
            tmp.assign(len, 0);
            for (std::size_t i = 0; i < len; ++i) {
                if (r[i] == 0) continue;
                for (std::size_t j = 0; i + j < len; ++j)
                    if (uinv[j] != 0) tmp[i + j] = F->add(tmp[i + j], F->mul(r[i], uinv[j]));
            }
            r.swap(tmp);
        }
    }
    if (out.size() < count) throw DomainError("series engine lost precision (internal error)");
    return out;
}

DigitExpansion series_expansion(const ModelElem& x, std::shared_ptr<const ResidueSystem> sys, std::int64_t start)
{
    const BaseContext& ctx = sys->context();
    if (ctx.model() == Model::VP) throw DomainError("the series engine is not available in the vp model");
    const Orientation o = ctx.orientation();
    auto plan = std::make_shared<SeriesPlan>();
    plan->sys = sys;
    plan->e = ctx.e();
    LaurentStream pi = ctx.pi().stream(o);
    if (ctx.pi().is_rational()) {
        TRational tr = to_t_rational(ctx.pi().rational(), o);
        plan->rational_pi = true;
        plan->A = tr.A.coeffs();
        plan->B = tr.B.coeffs();
    } else {
        plan->unit_inverse = inverse(shift(pi, -plan->e));
    }
    LaurentStream xs = x.stream(o);
    if (start > 0) xs = xs * power(inverse(pi), static_cast<std::uint64_t>(start));
    if (start < 0) xs = xs * power(pi, static_cast<std::uint64_t>(-start));
    for (std::int64_t k = xs.start(); k < 0; ++k)
        if (xs.coeff(k) != 0) throw DomainError("start index " + std::to_string(start) + " is above floor(v(x)/e)");
    plan->scaled = xs;
    for (const auto& g : sys->reps()) plan->reps.push_back(g.stream(o));
    return DigitExpansion(sys, start, [plan](std::vector<Digit>& d, std::size_t count) {
        std::size_t target = std::max({count, 2 * d.size(), std::size_t{64}});
        d = run_series(*plan, target);
    });
}

} // namespace

DigitExpansion expand(const ModelElem& x, const ResidueSystem& gamma, Engine engine, std::optional<std::int64_t> start)
{
    if (!gamma.complete()) throw DomainError("residue system is not complete");
    const BaseContext& ctx = gamma.context();
    const std::int64_t m = start ? *start : default_start(x, ctx);
    auto sys = std::make_shared<const ResidueSystem>(gamma);
    if (engine == Engine::Auto) engine = ctx.model() == Model::VP ? Engine::Exact : Engine::Series;
    if (engine == Engine::Series) return series_expansion(x, sys, m);
    if (!x.is_rational()) throw DomainError("the exact engine needs a rational x");
    auto state = std::make_shared<CarryState>(x.rational(), sys, m);
    return DigitExpansion(sys, m, [state](std::vector<Digit>& d, std::size_t count) {
        while (d.size() < count) d.push_back(state->step());
    });
}

} // namespace fexp
