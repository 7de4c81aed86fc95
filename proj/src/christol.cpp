#include "fexp/christol.hpp"

namespace fexp {

namespace {

Poly cartier(const Poly& P, std::uint32_t Q, std::uint32_t r)
{
    std::vector<Elem> c;
    for (std::int64_t k = r; k <= P.degree(); k += Q) c.push_back(P[k]);
    return Poly(P.field(), std::move(c));
}

} // namespace

Dfao encode_series(const OreForm& ore, const FieldPtr& F, const std::function<Elem(std::int64_t)>& coeff,
                   std::size_t cap)
{
    const std::uint32_t Q = F->q();
    const std::size_t h = ore.c.size() - 1;
    const Poly& c0 = ore.c[0];
    if (c0.is_zero()) throw DomainError("Ore form needs c_0 != 0");
    if (h == 0) {
        // c_0 f = 0: the zero series.
        return Dfao(Q, {std::vector<StateId>(Q, 0)}, {0});
    }

    // f = c_0 g with g = sum_{i>=1} d_i g^{Q^i}, d_i = -c_i c_0^{Q^i - 2}.
    std::vector<Poly> d(h + 1, Poly(F));
    std::int64_t D = 0;
    std::uint64_t qi = 1;
    for (std::size_t i = 1; i <= h; ++i) {
        qi *= Q;
        d[i] = -(ore.c[i] * c0.pow(qi - 2));
        if (!d[i].is_zero()) D = std::max(D, d[i].degree());
    }
    const std::int64_t bound = std::max<std::int64_t>(c0.degree(), (D + Q - 2) / (Q - 1));

    // g_n for -bound <= n <= 0: with c_0 = z^v u, g_n = [z^{n+v}] f/u.
    const std::int64_t v = c0.low_order();
    const Poly u = Poly(F, std::vector<Elem>(c0.coeffs().begin() + v, c0.coeffs().end()));
    std::vector<Elem> f_over_u(static_cast<std::size_t>(v + 1));
    const Elem u0_inv = F->inv(u[0]);
    for (std::int64_t k = 0; k <= v; ++k) {
        Elem s = coeff(k);
        for (std::int64_t j = 1; j <= k; ++j) s = F->sub(s, F->mul(u[j], f_over_u[static_cast<std::size_t>(k - j)]));
        f_over_u[static_cast<std::size_t>(k)] = F->mul(s, u0_inv);
    }
    auto g_at = [&](std::int64_t n) -> Elem {  // n <= 0
        return n + v < 0 ? 0 : f_over_u[static_cast<std::size_t>(n + v)];
    };

    // A state is (e_0, ..., e_{h-1}) with deg e_i <= bound, standing for
    // sum_i e_i g^{Q^i}; it is stored as h blocks of bound+1 coefficients.
    const auto width = static_cast<std::size_t>(bound + 1);
    using Key = std::vector<Elem>;
    auto component = [&](const Key& s, std::size_t i) {
        return Poly(F, std::vector<Elem>(s.begin() + static_cast<std::ptrdiff_t>(i * width),
                                         s.begin() + static_cast<std::ptrdiff_t>((i + 1) * width)));
    };
    Key start(h * width, 0);
    for (std::int64_t k = 0; k <= c0.degree(); ++k) start[static_cast<std::size_t>(k)] = c0[k];

    auto step = [&](const Key& s, std::uint32_t r) {
        const Poly e0 = component(s, 0);
        Key out(h * width, 0);
        for (std::size_t i = 1; i <= h; ++i) {
            Poly E = e0 * d[i];
            if (i < h) E = E + component(s, i);
            const Poly L = cartier(E, Q, r);
            if (L.degree() > bound) throw DomainError("internal error: Cartier state leaves the degree bound");
            for (std::int64_t k = 0; k <= L.degree(); ++k) out[(i - 1) * width + static_cast<std::size_t>(k)] = L[k];
        }
        return out;
    };
    auto output = [&](const Key& s) -> Symbol {
        // Constant term of sum_i e_i g^{Q^i}: [z^{-k}] g^{Q^i} = g_{-k/Q^i} when Q^i | k.
        Elem acc = 0;
        std::uint64_t qpow = 1;
        for (std::size_t i = 0; i < h; ++i, qpow *= Q)
            for (std::size_t k = 0; k < width; k += qpow) {
                const Elem e = s[i * width + k];
                if (e != 0) acc = F->add(acc, F->mul(e, g_at(-static_cast<std::int64_t>(k / qpow))));
            }
        return acc;
    };
    return close_kernel(start, Q, step, output, cap);
}

Dfao encode(const AlgebraicSpec& spec, std::int64_t check, std::size_t cap)
{
    const OreForm ore = ore_form(spec);
    const LaurentStream f = hensel_root(spec);
    Dfao m = dfao_minimize(encode_series(ore, spec.field(), [&](std::int64_t n) { return f.coeff(n); }, cap));
    for (std::int64_t n = 0; n < check; ++n)
        if (m.eval(static_cast<std::uint64_t>(n)) != f.coeff(n))
            throw DomainError("internal error: automaton disagrees with the series at index " + std::to_string(n));
    return m;
}

Dfao periodic_to_dfao(const DigitExpansion& d, const PeriodCertificate& cert, std::uint32_t k)
{
    if (cert.status != PeriodStatus::Exact) throw DomainError("periodic_to_dfao needs an exact period certificate");
    const std::int64_t upto = std::max(cert.preperiod, d.start()) + cert.period;
    std::vector<Symbol> values;
    for (Digit a : d.digits(d.start(), upto)) values.push_back(a);
    return dfao_minimize(ultimately_periodic_dfao(values, static_cast<std::size_t>(cert.period), k));
}

} // namespace fexp
