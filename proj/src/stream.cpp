#include "fexp/stream.hpp"

#include <algorithm>

namespace fexp {

namespace {

void require_compatible(const LaurentStream& a, const LaurentStream& b)
{
    if (a.field() != b.field()) throw DomainError("streams over different fields");
    if (a.orientation() != b.orientation()) throw DomainError("streams in different completions");
}

} // namespace

LaurentStream LaurentStream::zero(FieldPtr F, Orientation o) { return finite(std::move(F), o, 0, {}); }

LaurentStream LaurentStream::finite(FieldPtr F, Orientation o, std::int64_t start, std::vector<Elem> c)
{
    auto data = std::make_shared<const std::vector<Elem>>(std::move(c));
    return from_generator(std::move(F), o, start, [data, start](std::int64_t n, const State&) -> Elem {
        auto i = static_cast<std::size_t>(n - start);
        return i < data->size() ? (*data)[i] : 0;
    });
}

LaurentStream LaurentStream::from_filler(FieldPtr F, Orientation o, std::int64_t start, Filler fill)
{
    auto s = std::make_shared<State>();
    s->F = std::move(F);
    s->orient = o;
    s->start = start;
    s->fill = std::move(fill);
    return LaurentStream(std::move(s));
}

LaurentStream LaurentStream::from_generator(FieldPtr F, Orientation o, std::int64_t start, Generator gen)
{
    return from_filler(std::move(F), o, start, [gen = std::move(gen)](State& st, std::int64_t upto) {
        while (st.start + static_cast<std::int64_t>(st.cache.size()) <= upto) {
            std::int64_t n = st.start + static_cast<std::int64_t>(st.cache.size());
            Elem c = gen(n, st);
            st.cache.push_back(c);
        }
    });
}

LaurentStream LaurentStream::rational(FieldPtr F, Orientation o, std::int64_t shift, Poly A, Poly B)
{
    if (B.is_zero() || B[0] == 0) throw DomainError("rational series needs B(0) != 0");
    if (A.is_zero()) return zero(std::move(F), o);
    const Elem b0inv = F->inv(B[0]);
    return from_generator(F, o, shift, [A = std::move(A), B = std::move(B), b0inv, shift](std::int64_t n, const State& st) {
        const FieldPtr& F = st.F;
        std::int64_t k = n - shift;
        Elem acc = A[k];
        std::int64_t jmax = std::min<std::int64_t>(k, B.degree());
        for (std::int64_t j = 1; j <= jmax; ++j) {
            Elem bj = B[j];
            if (bj != 0) acc = F->sub(acc, F->mul(bj, st.at(n - j)));
        }
        return F->mul(acc, b0inv);
    });
}

TRational to_t_rational(const RatFunc& x, Orientation o)
{
    const FieldPtr& F = x.field();
    if (x.is_zero()) return {0, Poly(F), Poly::one(F)};
    const Poly& N = x.num();
    const Poly& D = x.den();
    if (o == Orientation::Ascending) {
        std::int64_t vn = N.low_order(), vd = D.low_order();
        auto strip = [&F](const Poly& p, std::int64_t v) {
            return Poly(F, std::vector<Elem>(p.coeffs().begin() + v, p.coeffs().end()));
        };
        return {vn - vd, strip(N, vn), strip(D, vd)};
    }
    return {D.degree() - N.degree(), N.reversed(N.degree()), D.reversed(D.degree())};
}

RatFunc t_poly_to_ratfunc(const Poly& p, Orientation o)
{
    const FieldPtr& F = p.field();
    if (o == Orientation::Ascending || p.is_zero()) return RatFunc(p);
    // sum c_i z^{-i} = (sum c_i z^{d-i}) / z^d
    std::int64_t d = p.degree();
    return RatFunc(p.reversed(d), Poly::monomial(F, d));
}

LaurentStream LaurentStream::from_ratfunc(const RatFunc& x, Orientation o)
{
    TRational r = to_t_rational(x, o);
    return rational(x.field(), o, r.shift, std::move(r.A), std::move(r.B));
}

Elem LaurentStream::coeff(std::int64_t n) const
{
    if (n < s_->start) return 0;
    if (n >= s_->start + static_cast<std::int64_t>(s_->cache.size())) s_->fill(*s_, n);
    return s_->cache[static_cast<std::size_t>(n - s_->start)];
}

std::vector<Elem> LaurentStream::coeffs(std::int64_t from, std::int64_t to) const
{
    std::vector<Elem> out;
    if (to <= from) return out;
    out.reserve(static_cast<std::size_t>(to - from));
    if (to - 1 >= s_->start) coeff(to - 1);
    for (std::int64_t n = from; n < to; ++n) out.push_back(coeff(n));
    return out;
}

std::optional<std::int64_t> LaurentStream::find_valuation(std::int64_t depth) const
{
    for (std::int64_t n = s_->start; n < s_->start + depth; ++n)
        if (coeff(n) != 0) return n;
    return std::nullopt;
}

Poly LaurentStream::truncation(std::int64_t n) const
{
    return Poly(s_->F, coeffs(0, n));
}

std::string LaurentStream::to_string(std::int64_t upto) const
{
    std::string out;
    const FieldPtr& F = s_->F;
    const std::string var = s_->orient == Orientation::Ascending ? "z" : "z";
    for (std::int64_t n = s_->start; n <= upto; ++n) {
        Elem c = coeff(n);
        if (c == 0) continue;
        std::int64_t e = s_->orient == Orientation::Ascending ? n : -n;
        std::string cs = F->to_string(c);
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        std::string term;
        if (e == 0) term = cs;
        else {
            term = (c == 1 ? "" : cs + "*") + var;
            if (e != 1) term += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
        }
        out += (out.empty() ? "" : "+") + term;
    }
    return (out.empty() ? "0" : out) + " + O(" + var + "^" +
           (s_->orient == Orientation::Ascending ? std::to_string(upto + 1) : "(" + std::to_string(-upto - 1) + ")") + ")";
}

LaurentStream operator+(const LaurentStream& a, const LaurentStream& b)
{
    require_compatible(a, b);
    return LaurentStream::from_generator(a.field(), a.orientation(), std::min(a.start(), b.start()),
        [a, b](std::int64_t n, const LaurentStream::State& st) { return st.F->add(a.coeff(n), b.coeff(n)); });
}

LaurentStream operator-(const LaurentStream& a, const LaurentStream& b)
{
    require_compatible(a, b);
    return LaurentStream::from_generator(a.field(), a.orientation(), std::min(a.start(), b.start()),
        [a, b](std::int64_t n, const LaurentStream::State& st) { return st.F->sub(a.coeff(n), b.coeff(n)); });
}

LaurentStream operator-(const LaurentStream& a)
{
    return LaurentStream::from_generator(a.field(), a.orientation(), a.start(),
        [a](std::int64_t n, const LaurentStream::State& st) { return st.F->neg(a.coeff(n)); });
}

LaurentStream operator*(const LaurentStream& a, const LaurentStream& b)
{
    require_compatible(a, b);
    const std::int64_t sa = a.start(), sb = b.start();
    return LaurentStream::from_generator(a.field(), a.orientation(), sa + sb,
        [a, b, sa, sb](std::int64_t n, const LaurentStream::State& st) {
            const FieldPtr& F = st.F;
            a.coeff(n - sb);
            b.coeff(n - sa);
            Elem acc = 0;
            for (std::int64_t i = sa; i <= n - sb; ++i) {
                Elem x = a.coeff(i);
                if (x != 0) acc = F->add(acc, F->mul(x, b.coeff(n - i)));
            }
            return acc;
        });
}

LaurentStream scale(const LaurentStream& a, Elem c)
{
    return LaurentStream::from_generator(a.field(), a.orientation(), a.start(),
        [a, c](std::int64_t n, const LaurentStream::State& st) { return st.F->mul(a.coeff(n), c); });
}

LaurentStream shift(const LaurentStream& a, std::int64_t k)
{
    return LaurentStream::from_generator(a.field(), a.orientation(), a.start() + k,
        [a, k](std::int64_t n, const LaurentStream::State&) { return a.coeff(n - k); });
}

LaurentStream inverse(const LaurentStream& a, std::int64_t zero_scan)
{
    auto v = a.find_valuation(zero_scan);
    if (!v) throw PossiblyZero(zero_scan);
    const std::int64_t val = *v;
    const FieldPtr& F = a.field();
    const Elem u0inv = F->inv(a.coeff(val));
    return LaurentStream::from_generator(F, a.orientation(), -val,
        [a, val, u0inv](std::int64_t n, const LaurentStream::State& st) {
            const FieldPtr& F = st.F;
            std::int64_t k = n + val;
            if (k == 0) return u0inv;
            a.coeff(val + k);
            Elem acc = 0;
            for (std::int64_t j = 1; j <= k; ++j) {
                Elem u = a.coeff(val + j);
                if (u != 0) acc = F->add(acc, F->mul(u, st.at(n - j)));
            }
            return F->neg(F->mul(acc, u0inv));
        });
}

LaurentStream divide(const LaurentStream& a, const LaurentStream& b, std::int64_t zero_scan)
{
    return a * inverse(b, zero_scan);
}

LaurentStream frobenius(const LaurentStream& a, std::uint32_t k)
{
    std::int64_t e = 1;
    for (std::uint32_t i = 0; i < k; ++i) e *= a.field()->p();
    return LaurentStream::from_generator(a.field(), a.orientation(), a.start() * e,
        [a, e](std::int64_t n, const LaurentStream::State& st) -> Elem {
            if (n % e != 0) return 0;
            return st.F->pow(a.coeff(n / e), e);
        });
}

LaurentStream power(const LaurentStream& a, std::uint64_t e)
{
    LaurentStream result = LaurentStream::finite(a.field(), a.orientation(), 0, {1});
    LaurentStream base = a;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

LaurentStream eval_poly(const std::vector<LaurentStream>& coeffs, const LaurentStream& a)
{
    if (coeffs.empty()) return LaurentStream::zero(a.field(), a.orientation());
    LaurentStream acc = coeffs.back();
    for (std::size_t j = coeffs.size() - 1; j-- > 0;) acc = acc * a + coeffs[j];
    return acc;
}

bool stream_eq(const LaurentStream& a, const LaurentStream& b, std::int64_t n)
{
    require_compatible(a, b);
    for (std::int64_t i = std::min(a.start(), b.start()); i <= n; ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

std::pair<Poly, LaurentStream> int_frac_split(const LaurentStream& x)
{
    if (x.orientation() != Orientation::Descending)
        throw DomainError("integer/fraction split is defined on F_q((1/z)) streams");
    const FieldPtr& F = x.field();
    std::vector<Elem> ip;
    for (std::int64_t n = x.start(); n <= 0; ++n) {
        std::int64_t e = -n;
        if (ip.size() <= static_cast<std::size_t>(e)) ip.resize(static_cast<std::size_t>(e) + 1, 0);
        ip[static_cast<std::size_t>(e)] = x.coeff(n);
    }
    LaurentStream frac = LaurentStream::from_generator(F, Orientation::Descending, std::max<std::int64_t>(x.start(), 1),
        [x](std::int64_t n, const LaurentStream::State&) { return x.coeff(n); });
    return {Poly(F, std::move(ip)), frac};
}

} // namespace fexp
