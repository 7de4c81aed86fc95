#include "fexp/christol.hpp"
#include "fexp/linalg.hpp"
#include "fexp/spoly.hpp"

#include <sstream>

namespace fexp {

namespace {

std::uint64_t ipow(std::uint64_t b, std::int64_t e)
{
    std::uint64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= b;
    return r;
}

// P(z)^Q = P(z^Q) over F_Q.
Poly frobenius_poly(const Poly& P, std::uint32_t Q)
{
    std::vector<Elem> c;
    for (std::int64_t k = 0; k <= P.degree(); ++k) {
        if (P[k] == 0) continue;
        c.resize(static_cast<std::size_t>(k) * Q + 1, 0);
        c[static_cast<std::size_t>(k) * Q] = P[k];
    }
    return Poly(P.field(), std::move(c));
}

// Cartier operator: sum_n c_{Qn+r} z^n.
Poly cartier(const Poly& P, std::uint32_t Q, std::uint32_t r)
{
    std::vector<Elem> c;
    for (std::int64_t k = r; k <= P.degree(); k += Q) c.push_back(P[k]);
    return Poly(P.field(), std::move(c));
}

Poly content(const std::vector<Poly>& c, const Poly& extra)
{
    Poly g = extra;
    for (const auto& p : c) g = gcd(g, p);
    return g;
}

// Coefficient of z^n in f^{Q^i} from the prefix of f.
Elem frob_coeff(const std::vector<Elem>& f, std::uint64_t qi, std::int64_t n)
{
    if (n < 0 || static_cast<std::uint64_t>(n) % qi != 0) return 0;
    const std::uint64_t idx = static_cast<std::uint64_t>(n) / qi;
    return idx < f.size() ? f[idx] : 0;
}

} // namespace

BiPoly LinearRelation::as_bipoly() const
{
    const FieldPtr& F = constant.field();
    const std::uint32_t Q = F->q();
    std::vector<Poly> coeffs(static_cast<std::size_t>(ipow(Q, static_cast<std::int64_t>(c.size()) - 1)) + 1, Poly(F));
    coeffs[0] = constant;
    for (std::size_t i = 0; i < c.size(); ++i)
        coeffs[static_cast<std::size_t>(ipow(Q, static_cast<std::int64_t>(i)))] = c[i];
    return BiPoly(F, std::move(coeffs));
}

std::int64_t OreForm::max_degree() const
{
    std::int64_t d = 0;
    for (const auto& p : c) d = std::max(d, p.degree());
    return d;
}

std::string OreForm::to_string() const
{
    std::ostringstream os;
    const std::uint32_t Q = c.front().field()->q();
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c[i].to_string() << ")*f^" << ipow(Q, static_cast<std::int64_t>(i));
    }
    os << " = 0";
    return os.str();
}

std::optional<LinearRelation> find_relation(const std::vector<Elem>& prefix, const FieldPtr& F,
                                            const RelationSearch& opts)
{
    const std::uint32_t Q = F->q();
    const auto len = static_cast<std::int64_t>(prefix.size());
    const std::int64_t extra = opts.inhomogeneous ? 1 : 0;
    for (std::int64_t B = 0; B <= opts.max_degree; B = B == 0 ? 1 : 2 * B) {
        for (std::int64_t t = 0; t <= opts.max_t; ++t) {
            const std::int64_t J = t + 1 + extra;
            const std::int64_t U = J * (B + 1);
            if (U + 8 > len) return std::nullopt;
            const std::int64_t E = std::min(len, 2 * U + 16);
            std::vector<std::uint64_t> qi(static_cast<std::size_t>(t + 1));
            for (std::int64_t i = 0; i <= t; ++i) qi[static_cast<std::size_t>(i)] = ipow(Q, i);
            auto basis_coeff = [&](std::int64_t j, std::int64_t n) -> Elem {
                if (j < extra) return n == 0 ? 1 : 0;
                return frob_coeff(prefix, qi[static_cast<std::size_t>(j - extra)], n);
            };
            Matrix A(static_cast<std::size_t>(E), std::vector<Elem>(static_cast<std::size_t>(U), 0));
            for (std::int64_t n = 0; n < E; ++n)
                for (std::int64_t j = 0; j < J; ++j)
                    for (std::int64_t k = 0; k <= B && k <= n; ++k)
                        A[static_cast<std::size_t>(n)][static_cast<std::size_t>(j * (B + 1) + k)] = basis_coeff(j, n - k);
            for (const auto& v : nullspace(F, std::move(A), static_cast<std::size_t>(U))) {
                std::vector<Poly> polys;
                for (std::int64_t j = 0; j < J; ++j)
                    polys.emplace_back(F, std::vector<Elem>(v.begin() + j * (B + 1), v.begin() + (j + 1) * (B + 1)));
                // Check the candidate on the whole prefix.
                bool ok = true;
                for (std::int64_t n = 0; n < len && ok; ++n) {
                    Elem s = 0;
                    for (std::int64_t j = 0; j < J; ++j) {
                        const Poly& p = polys[static_cast<std::size_t>(j)];
                        for (std::int64_t k = 0; k <= p.degree() && k <= n; ++k)
                            if (p[k] != 0) s = F->add(s, F->mul(p[k], basis_coeff(j, n - k)));
                    }
                    ok = s == 0;
                }
                if (!ok) continue;
                LinearRelation rel{extra ? polys[0] : Poly(F), {}, len};
                rel.c.assign(polys.begin() + extra, polys.end());
                const Poly g = content(rel.c, rel.constant);
                rel.constant = rel.constant / g;
                for (auto& p : rel.c) p = p / g;
                Elem lead = 0;
                for (const auto& p : rel.c)
                    if (!p.is_zero()) lead = p.leading();
                if (lead == 0) lead = rel.constant.leading();
                const Elem inv = F->inv(lead);
                rel.constant = rel.constant.scaled(inv);
                for (auto& p : rel.c) p = p.scaled(inv);
                while (!rel.c.empty() && rel.c.back().is_zero()) rel.c.pop_back();
                if (rel.c.empty()) continue;  // only a constant: impossible unless the check is vacuous
                return rel;
            }
        }
    }
    return std::nullopt;
}

OreForm homogenize(const LinearRelation& rel)
{
    const FieldPtr& F = rel.constant.field();
    const std::uint32_t Q = F->q();
    std::vector<Poly> c = rel.c;
    if (!rel.constant.is_zero()) {
        const Poly k = rel.constant.pow(Q - 1);
        std::vector<Poly> h(c.size() + 1, Poly(F));
        for (std::size_t i = 0; i < c.size(); ++i) {
            h[i] = h[i] - k * c[i];
            h[i + 1] = h[i + 1] + frobenius_poly(c[i], Q);
        }
        c = std::move(h);
    }
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.empty()) throw DomainError("relation has no series terms");
    while (c[0].is_zero()) {
        std::size_t i0 = 0;
        while (c[i0].is_zero()) ++i0;
        std::uint32_t r = 0;
        while (cartier(c[i0], Q, r).is_zero()) ++r;
        std::vector<Poly> lowered;
        for (std::size_t i = 1; i < c.size(); ++i) lowered.push_back(cartier(c[i], Q, r));
        c = std::move(lowered);
    }
    while (c.back().is_zero()) c.pop_back();
    const Poly g = content(c, Poly(F));
    const Elem inv = F->inv((c[0] / g).leading());
    for (auto& p : c) p = (p / g).scaled(inv);
    return OreForm{std::move(c), rel.verified_precision};
}

OreForm ore_form(const AlgebraicSpec& spec, std::int64_t V)
{
    const FieldPtr& F = spec.field();
    if (spec.orient != Orientation::Ascending)
        throw DomainError("Ore form needs a power series in z (vz orientation)");
    LaurentStream f = hensel_root(spec);
    auto v = f.find_valuation();
    if (!v) throw DomainError("zero series: the trivial relation w = 0 has no Ore form with c_0 != 0");
    if (*v < 0) throw DomainError("series has a pole at z = 0; shift it to a power series first");

    // Columns 1, w, w^Q, w^{Q^2}, ... reduced modulo R, as vectors over F_q(z).
    const BiPoly& R = spec.R;
    const std::int64_t d = R.w_degree();
    if (d < 1) throw DomainError("R has no w-dependence");
    SPoly Rs;
    for (const auto& p : R.coeffs()) Rs.push_back(RatFunc(p));
    std::vector<SPoly> cols{spoly_divmod(SPoly{RatFunc::constant(F, 1)}, Rs, F).second};
    SPoly cur = spoly_divmod(SPoly{RatFunc(F), RatFunc::constant(F, 1)}, Rs, F).second;
    std::optional<LinearRelation> rel;
    for (std::int64_t t = 0; t < d && !rel; ++t) {
        cols.push_back(cur);
        std::vector<std::vector<RatFunc>> rows(static_cast<std::size_t>(d), std::vector<RatFunc>(cols.size(), RatFunc(F)));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < cols[j].size(); ++i) rows[i][j] = cols[j][i];
        auto ns = nullspace(F, std::move(rows), cols.size());
        if (!ns.empty()) {
            Poly den = Poly::one(F);
            for (const auto& x : ns[0]) den = den * x.den() / gcd(den, x.den());
            LinearRelation r{(ns[0][0] * RatFunc(den)).num(), {}, 0};
            for (std::size_t j = 1; j < ns[0].size(); ++j) r.c.push_back((ns[0][j] * RatFunc(den)).num());
            rel = std::move(r);
        }
        cur = spoly_pow_mod(cur, F->q(), Rs, F);
    }
    if (!rel) throw DomainError("no relation among 1, f, f^q, ... modulo R (is R zero on the branch?)");
    OreForm ore = homogenize(*rel);

    LaurentStream sum = LaurentStream::zero(F, Orientation::Ascending);
    for (std::size_t i = 0; i < ore.c.size(); ++i) {
        LaurentStream fi = i == 0 ? f : frobenius(f, static_cast<std::uint32_t>(F->m() * i));
        sum = sum + LaurentStream::from_ratfunc(RatFunc(ore.c[i]), Orientation::Ascending) * fi;
    }
    for (std::int64_t n = 0; n < V; ++n)
        if (sum.coeff(n) != 0)
            throw DomainError("internal error: Ore relation fails at z^" + std::to_string(n));
    ore.verified_precision = V;
    return ore;
}

DecodeResult decode(const Dfao& m, const FieldPtr& F, std::int64_t V, const RelationSearch& opts)
{
    Dfao M = m;
    if (M.base() != F->q()) {
        if (M.base() != F->p()) throw DomainError("automaton base must be p or q");
        M = dfao_to_power_base(M, F->m());
    }
    std::vector<Elem> prefix(static_cast<std::size_t>(V));
    for (std::int64_t n = 0; n < V; ++n) {
        Symbol s = M.eval(static_cast<std::uint64_t>(n));
        if (s >= F->q()) throw DomainError("automaton output " + std::to_string(s) + " is not a field element");
        prefix[static_cast<std::size_t>(n)] = s;
    }
    auto rel = find_relation(prefix, F, opts);
    if (!rel)
        throw DomainError("no relation with t <= " + std::to_string(opts.max_t) + " and degree <= " +
                          std::to_string(opts.max_degree) + " verified to precision " + std::to_string(V));
    return DecodeResult{rel->as_bipoly(), *rel};
}

} // namespace fexp
