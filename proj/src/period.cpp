#include "fexp/expand.hpp"

#include <unordered_map>

namespace fexp {

std::string status_name(PeriodStatus s)
{
    switch (s) {
    case PeriodStatus::Exact: return "exact";
    case PeriodStatus::Candidate: return "candidate";
    case PeriodStatus::NoneWithinBounds: return "none-within-bounds";
    case PeriodStatus::Undetermined: return "undetermined";
    }
    return "?";
}

PropertyA property_a_check(const ResidueSystem& gamma)
{
    const BaseContext& ctx = gamma.context();
    PropertyA out;
    out.local_degree = ctx.e() * ctx.f();
    if (!ctx.pi().is_rational()) {
        out.reason = "fails (i): pi is not rational";
        return out;
    }
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (!gamma.reps()[i].is_rational()) {
            out.reason = "fails (i): representative #" + std::to_string(i) + " is not rational";
            return out;
        }
    }
    out.degree = rat_degree(ctx.pi().rational());
    if (out.degree != out.local_degree) {
        out.reason = "fails (ii): [K:F_q(pi)]=" + std::to_string(out.degree) + " > e*f=" + std::to_string(out.local_degree);
        return out;
    }
    out.holds = true;
    return out;
}

PeriodCertificate detect_period_exact(const RatFunc& x, const ResidueSystem& gamma, std::size_t cap,
                                      std::optional<std::int64_t> start)
{
    PropertyA pa = property_a_check(gamma);
    if (!pa.holds) throw DomainError("exact period detection needs property A (" + pa.reason + "); use the bounded detector");
    if (!gamma.complete()) throw DomainError("residue system is not complete");
    const std::int64_t m = start ? *start : default_start(ModelElem(x), gamma.context());
    CarryState state(x, std::make_shared<const ResidueSystem>(gamma), m);
    std::unordered_map<RatFunc, std::int64_t, RatFuncHash> seen;
    while (seen.size() < cap) {
        auto [it, inserted] = seen.emplace(state.remainder(), state.index());
        if (!inserted) {
            PeriodCertificate c;
            c.status = PeriodStatus::Exact;
            c.preperiod = it->second;
            c.period = state.index() - it->second;
            c.note = "remainder at index " + std::to_string(state.index()) + " repeats index " + std::to_string(it->second);
            return c;
        }
        state.step();
    }
    PeriodCertificate c;
    c.status = PeriodStatus::Undetermined;
    c.note = "undetermined, cap " + std::to_string(cap);
    return c;
}

PeriodCertificate detect_period_bounded(const DigitExpansion& d, std::int64_t n_max, std::int64_t l_max)
{
    PeriodCertificate c;
    if (n_max <= 0 || l_max <= 0) throw DomainError("bounded detection needs positive bounds");
    const std::vector<Digit> a = d.prefix(static_cast<std::size_t>(n_max));
    const std::int64_t pre_max = n_max / 2;
    for (std::int64_t L = 1; L <= l_max && L < n_max; ++L) {
        // least N with a_n = a_{n+L} for N <= n < n_max - L
        std::int64_t N = 0;
        for (std::int64_t n = n_max - L - 1; n >= 0; --n) {
            if (a[static_cast<std::size_t>(n)] != a[static_cast<std::size_t>(n + L)]) {
                N = n + 1;
                break;
            }
        }
        if (N <= pre_max) {
            c.status = PeriodStatus::Candidate;
            c.preperiod = d.start() + N;
            c.period = L;
            c.note = "consistent with the first " + std::to_string(n_max) + " digits";
            return c;
        }
    }
    c.status = PeriodStatus::NoneWithinBounds;
    c.note = "no period <= " + std::to_string(l_max) + " with preperiod <= " + std::to_string(pre_max) + " in " +
             std::to_string(n_max) + " digits";
    return c;
}

DigitExpansion periodic_expansion(std::shared_ptr<const ResidueSystem> gamma, std::int64_t start,
                                  std::vector<Digit> prefix, std::int64_t period)
{
    const auto len = static_cast<std::int64_t>(prefix.size());
    if (period <= 0 || period > len) throw DomainError("period must be in 1..prefix length");
    auto data = std::make_shared<const std::vector<Digit>>(std::move(prefix));
    return DigitExpansion::from_function(std::move(gamma), start, [data, start, len, period](std::int64_t n) {
        std::int64_t i = n - start;
        if (i >= len) i = len - period + (i - len) % period;
        return (*data)[static_cast<std::size_t>(i)];
    });
}

DigitExpansion certified_expansion(const DigitExpansion& d, const PeriodCertificate& cert)
{
    if (cert.status != PeriodStatus::Exact && cert.status != PeriodStatus::Candidate)
        throw DomainError("certificate carries no period");
    std::vector<Digit> prefix = d.digits(d.start(), cert.preperiod + cert.period);
    return periodic_expansion(d.system_ptr(), d.start(), std::move(prefix), cert.period);
}

RatFunc resum_periodic(const DigitExpansion& d, const PeriodCertificate& cert)
{
    if (cert.status != PeriodStatus::Exact && cert.status != PeriodStatus::Candidate)
        throw DomainError("certificate carries no period");
    const ResidueSystem& sys = d.system();
    if (!sys.context().pi().is_rational()) throw DomainError("resummation needs a rational pi");
    const FieldPtr& F = sys.context().field();
    const RatFunc& pi = sys.context().pi().rational();
    auto rep = [&](std::int64_t n) {
        const ModelElem& g = sys.reps()[d.digit(n)];
        if (!g.is_rational()) throw DomainError("resummation needs rational representatives");
        return g.rational();
    };
    RatFunc head = d.partial_sum(cert.preperiod).rational();
    RatFunc block(F);
    for (std::int64_t k = cert.period - 1; k >= 0; --k) block = block * pi + rep(cert.preperiod + k);
    RatFunc one = RatFunc::constant(F, 1);
    return head + pi.pow(cert.preperiod) * block / (one - pi.pow(cert.period));
}

} // namespace fexp
