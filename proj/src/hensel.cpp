#include "fexp/hensel.hpp"

#include "fexp/parse.hpp"

#include "json.hpp"

#include <algorithm>

namespace fexp {

namespace {

// Power-series inverse modulo t^n; u[0] != 0.
Poly series_inverse(const Poly& u, std::int64_t n)
{
    const FieldPtr& F = u.field();
    std::vector<Elem> w(static_cast<std::size_t>(n), 0);
    const Elem u0inv = F->inv(u[0]);
    w[0] = u0inv;
    for (std::int64_t k = 1; k < n; ++k) {
        Elem acc = 0;
        std::int64_t jmax = std::min<std::int64_t>(k, u.degree());
        for (std::int64_t j = 1; j <= jmax; ++j) {
            Elem uj = u[j];
            if (uj != 0) acc = F->add(acc, F->mul(uj, w[static_cast<std::size_t>(k - j)]));
        }
        w[static_cast<std::size_t>(k)] = F->neg(F->mul(acc, u0inv));
    }
    return Poly(F, std::move(w));
}

Poly drop_low(const Poly& p, std::int64_t k)
{
    if (p.degree() < k) return Poly(p.field());
    return Poly(p.field(), std::vector<Elem>(p.coeffs().begin() + k, p.coeffs().end()));
}

// R~(t, g) = t^C R(z(t), t^{-a} g) with polynomial coefficients in t.
struct Transformed {
    std::vector<Poly> coeffs;  // by power of g
    std::int64_t a = 0;
};

Transformed transform(const AlgebraicSpec& spec)
{
    Transformed T;
    T.a = std::max<std::int64_t>(0, -spec.seed_start);
    const auto& Rc = spec.R.coeffs();
    std::vector<Poly> base;
    std::vector<std::int64_t> shifts;
    std::int64_t C = 0;
    for (std::size_t j = 0; j < Rc.size(); ++j) {
        const Poly& rj = Rc[j];
        if (spec.orient == Orientation::Ascending) {
            base.push_back(rj);
            shifts.push_back(-T.a * static_cast<std::int64_t>(j));
        } else {
            std::int64_t d = rj.is_zero() ? 0 : rj.degree();
            base.push_back(rj.is_zero() ? rj : rj.reversed(d));
            shifts.push_back(-T.a * static_cast<std::int64_t>(j) - d);
        }
        if (!rj.is_zero()) C = std::max(C, -shifts.back());
    }
    for (std::size_t j = 0; j < base.size(); ++j)
        T.coeffs.push_back(base[j].is_zero() ? base[j] : base[j].shifted(C + shifts[j]));
    return T;
}

Poly eval_trunc(const std::vector<Poly>& c, const Poly& g, std::int64_t W)
{
    Poly acc(g.field());
    for (std::size_t j = c.size(); j-- > 0;) acc = mul_trunc(acc, g, W) + c[j].truncated(W);
    return acc;
}

std::vector<Poly> derivative_coeffs(const std::vector<Poly>& c)
{
    std::vector<Poly> d;
    for (std::size_t j = 1; j < c.size(); ++j) d.push_back(c[j].scaled(c[j].field()->from_int(static_cast<std::int64_t>(j))));
    return d;
}

struct LiftState {
    Transformed T;
    std::vector<Poly> dT;
    std::int64_t delta = 0;
    Poly g;
    std::int64_t known = 0;  // g correct modulo t^known

    void lift_to(std::int64_t target)
    {
        while (known < target) {
            std::int64_t k_new = std::min(target, 2 * known - delta);
            if (k_new <= known) k_new = known + 1;
            const std::int64_t W = k_new + delta;
            Poly num = eval_trunc(T.coeffs, g, W);
            Poly den = eval_trunc(dT, g, W);
            if (num.low_order() != kDegNegInf && num.low_order() < delta)
                throw DomainError("Newton step lost precision (internal error)");
            Poly corr = mul_trunc(drop_low(num, delta), series_inverse(drop_low(den, delta), k_new), k_new);
            g = (g - corr).truncated(k_new);
            known = k_new;
        }
    }
};

} // namespace

AlgebraicSpec make_spec(const std::string& R, const std::string& seed, Orientation o, const FieldPtr& F)
{
    AlgebraicSpec spec{parse_bipoly(R, F), o, 0, {}, 1};
    if (spec.R.w_degree() < 1) throw DomainError("R must involve w");
    if (seed.find('[') != std::string::npos) {
        SeriesLiteral lit = parse_series_literal(seed, F);
        spec.seed_start = lit.start;
        spec.seed = lit.coeffs;
        spec.seed_precision = lit.start + static_cast<std::int64_t>(lit.coeffs.size());
        return spec;
    }
    RatFunc x = parse_ratfunc(seed, F);
    if (x.is_zero()) return spec;
    TRational tr = to_t_rational(x, o);
    if (tr.B.degree() != 0) throw ParseError("seed expression must be a Laurent polynomial in the local parameter");
    Poly A = tr.A.scaled(F->inv(tr.B[0]));
    spec.seed_start = tr.shift;
    spec.seed = A.coeffs();
    spec.seed_precision = tr.shift + A.degree() + 1;
    return spec;
}

AlgebraicSpec parse_spec_json(const std::string& json_text, const FieldPtr& F)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("spec JSON: ") + e.what());
    }
    if (!j.contains("R") || !j.contains("seed")) throw ParseError("spec JSON needs fields R and seed");
    std::string model = j.value("model", "vz");
    Orientation o;
    if (model == "vz") o = Orientation::Ascending;
    else if (model == "vdeg") o = Orientation::Descending;
    else throw ParseError("spec model must be vz or vdeg");
    return make_spec(j["R"].get<std::string>(), j["seed"].get<std::string>(), o, F);
}

std::string spec_to_json(const AlgebraicSpec& spec)
{
    nlohmann::json j;
    j["R"] = spec.R.to_string();
    SeriesLiteral lit{spec.seed_start, spec.seed};
    lit.coeffs.resize(static_cast<std::size_t>(std::max<std::int64_t>(0, spec.seed_precision - spec.seed_start)), 0);
    j["seed"] = format_series_literal(lit, spec.field());
    j["model"] = spec.orient == Orientation::Ascending ? "vz" : "vdeg";
    return j.dump();
}

AlgebraicSpec spec_from_ratfunc(const RatFunc& x, Orientation o)
{
    const FieldPtr& F = x.field();
    AlgebraicSpec spec{BiPoly(F, {-x.num(), x.den()}), o, 0, {}, 1};
    LaurentStream s = LaurentStream::from_ratfunc(x, o);
    spec.seed_start = s.start();
    const std::int64_t len = std::max(x.num().degree(), x.den().degree()) + 2;
    spec.seed = s.coeffs(s.start(), s.start() + len);
    spec.seed_precision = s.start() + len;
    return spec;
}

LaurentStream eval_bipoly(const BiPoly& R, const LaurentStream& f)
{
    std::vector<LaurentStream> c;
    for (const auto& rj : R.coeffs()) c.push_back(LaurentStream::from_ratfunc(RatFunc(rj), f.orientation()));
    return eval_poly(c, f);
}

LaurentStream hensel_root(const AlgebraicSpec& spec, std::int64_t initial_precision)
{
    const FieldPtr& F = spec.field();
    Transformed T = transform(spec);
    std::vector<Poly> dT = derivative_coeffs(T.coeffs);
    const std::int64_t a = T.a;

    std::vector<Elem> g0(static_cast<std::size_t>(std::max<std::int64_t>(0, spec.seed_start + a)), 0);
    g0.insert(g0.end(), spec.seed.begin(), spec.seed.end());
    const std::int64_t sg = spec.seed_precision + a;
    if (sg <= 0) throw DomainError("seed carries no information");
    Poly g = Poly(F, std::move(g0)).truncated(sg);

    bool all_zero = true;
    for (const auto& c : dT) all_zero = all_zero && c.is_zero();
    Poly dval = eval_trunc(dT, g, sg);
    if (all_zero) throw DomainError("multiple root: dR/dw vanishes identically");
    if (dval.is_zero())
        throw DomainError("seed does not identify a branch: dR/dw vanishes to the seed precision (possible multiple root)");
    const std::int64_t delta = dval.low_order();

    Poly rval = eval_trunc(T.coeffs, g, sg + delta);
    if (!rval.is_zero())
        throw DomainError("seed is not consistent with R: residual of order " + std::to_string(rval.low_order()) +
                          " below the seed precision");
    Poly check = eval_trunc(T.coeffs, g, 2 * delta + 1);
    if (!check.is_zero() || sg <= delta) throw DomainError("seed does not identify a branch (Hensel condition fails)");

    auto st = std::make_shared<LiftState>(LiftState{std::move(T), std::move(dT), delta, std::move(g), sg});

    LaurentStream out = LaurentStream::from_filler(F, spec.orient, std::min<std::int64_t>(spec.seed_start, -a),
        [st, a](LaurentStream::State& s, std::int64_t upto) {
            std::int64_t need = upto + a + 1;
            if (need > st->known) st->lift_to(std::max({need, 2 * st->known, std::int64_t{32}}));
            while (s.start + static_cast<std::int64_t>(s.cache.size()) <= upto) {
                std::int64_t n = s.start + static_cast<std::int64_t>(s.cache.size());
                s.cache.push_back(st->g[n + a]);
            }
        });
    if (initial_precision > 0) out.coeff(out.start() + initial_precision - 1);
    return out;
}

} // namespace fexp
