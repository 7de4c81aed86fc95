#include "fexp/spoly.hpp"

namespace fexp {

void spoly_trim(SPoly& a)
{
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

SPoly spoly_add(const SPoly& a, const SPoly& b, const FieldPtr& F)
{
    SPoly out(std::max(a.size(), b.size()), RatFunc(F));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
    spoly_trim(out);
    return out;
}

SPoly spoly_sub(const SPoly& a, const SPoly& b, const FieldPtr& F)
{
    SPoly out(std::max(a.size(), b.size()), RatFunc(F));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] - b[i];
    spoly_trim(out);
    return out;
}

SPoly spoly_mul(const SPoly& a, const SPoly& b, const FieldPtr& F)
{
    if (a.empty() || b.empty()) return {};
    SPoly out(a.size() + b.size() - 1, RatFunc(F));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    spoly_trim(out);
    return out;
}

std::pair<SPoly, SPoly> spoly_divmod(SPoly a, const SPoly& b, const FieldPtr& F)
{
    if (b.empty()) throw DomainError("division by the zero polynomial");
    spoly_trim(a);
    if (a.size() < b.size()) return {{}, a};
    SPoly q(a.size() - b.size() + 1, RatFunc(F));
    const RatFunc lead_inv = b.back().inverse();
    for (std::size_t k = a.size(); k-- >= b.size();) {
        RatFunc c = a[k] * lead_inv;
        if (c.is_zero()) continue;
        q[k - (b.size() - 1)] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[k - (b.size() - 1) + i] = a[k - (b.size() - 1) + i] - c * b[i];
    }
    a.resize(b.size() - 1, RatFunc(F));
    spoly_trim(a);
    spoly_trim(q);
    return {q, a};
}

SPoly spoly_inverse_mod(const SPoly& a, const SPoly& m, const FieldPtr& F)
{
    SPoly r0 = m, r1 = spoly_divmod(a, m, F).second;
    SPoly t0, t1{RatFunc::constant(F, 1)};
    while (!r1.empty()) {
        auto [q, r] = spoly_divmod(r0, r1, F);
        SPoly t2 = spoly_sub(t0, spoly_mul(q, t1, F), F);
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw DomainError("element is not invertible modulo the polynomial");
    RatFunc c = r0[0].inverse();
    for (auto& x : t0) x = x * c;
    return t0;
}

SPoly spoly_pow_mod(const SPoly& a, std::uint64_t e, const SPoly& m, const FieldPtr& F)
{
    SPoly result = spoly_divmod(SPoly{RatFunc::constant(F, 1)}, m, F).second;
    SPoly base = spoly_divmod(a, m, F).second;
    for (; e > 0; e >>= 1) {
        if (e & 1) result = spoly_divmod(spoly_mul(result, base, F), m, F).second;
        if (e > 1) base = spoly_divmod(spoly_mul(base, base, F), m, F).second;
    }
    return result;
}

SPoly spoly_from_constants(const Poly& p)
{
    SPoly out;
    for (std::int64_t i = 0; i <= p.degree(); ++i) out.push_back(RatFunc::constant(p.field(), p[i]));
    spoly_trim(out);
    return out;
}

} // namespace fexp
