#include "fexp/poly.hpp"

#include <algorithm>

namespace fexp {

Poly Poly::monomial(FieldPtr F, std::int64_t k, Elem c)
{
    if (k < 0) throw DomainError("negative exponent in polynomial monomial");
    std::vector<Elem> v(static_cast<std::size_t>(k) + 1, 0);
    v.back() = c;
    return Poly(std::move(F), std::move(v));
}

Poly Poly::from_ints(FieldPtr F, const std::vector<std::int64_t>& c)
{
    std::vector<Elem> v;
    v.reserve(c.size());
    for (auto x : c) v.push_back(F->from_int(x));
    return Poly(std::move(F), std::move(v));
}

std::int64_t Poly::low_order() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<std::int64_t>(i);
    return kDegNegInf;
}

Poly Poly::operator+(const Poly& o) const
{
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F_->add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return Poly(F_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const
{
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F_->sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return Poly(F_, std::move(r));
}

Poly Poly::operator-() const
{
    std::vector<Elem> r(c_);
    for (auto& x : r) x = F_->neg(x);
    return Poly(F_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const
{
    if (is_zero() || o.is_zero()) return Poly(F_);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) r[i + j] = F_->add(r[i + j], F_->mul(c_[i], o.c_[j]));
    }
    return Poly(F_, std::move(r));
}

Poly mul_trunc(const Poly& a, const Poly& b, std::int64_t n)
{
    const FieldPtr& F = a.field();
    if (a.is_zero() || b.is_zero() || n <= 0) return Poly(F);
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::size_t len = std::min<std::size_t>(static_cast<std::size_t>(n), x.size() + y.size() - 1);
    std::vector<Elem> r(len, 0);
    for (std::size_t i = 0; i < x.size() && i < len; ++i) {
        if (x[i] == 0) continue;
        std::size_t jmax = std::min(y.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j)
            if (y[j] != 0) r[i + j] = F->add(r[i + j], F->mul(x[i], y[j]));
    }
    return Poly(F, std::move(r));
}

Poly Poly::scaled(Elem c) const
{
    std::vector<Elem> r(c_);
    for (auto& x : r) x = F_->mul(x, c);
    return Poly(F_, std::move(r));
}

Poly Poly::shifted(std::int64_t k) const
{
    if (k < 0) throw DomainError("negative shift of a polynomial");
    if (is_zero()) return *this;
    std::vector<Elem> r(static_cast<std::size_t>(k), 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(F_, std::move(r));
}

Poly Poly::truncated(std::int64_t n) const
{
    if (n <= 0) return Poly(F_);
    if (static_cast<std::size_t>(n) >= c_.size()) return *this;
    return Poly(F_, std::vector<Elem>(c_.begin(), c_.begin() + n));
}

Poly Poly::monic() const
{
    if (is_zero()) return *this;
    return scaled(F_->inv(leading()));
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1) return Poly(F_);
    std::vector<Elem> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = F_->mul(c_[i], F_->from_int(static_cast<std::int64_t>(i)));
    return Poly(F_, std::move(r));
}

Poly Poly::pow(std::uint64_t e) const
{
    Poly result = one(F_), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Elem Poly::eval(Elem x) const
{
    Elem r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = F_->add(F_->mul(r, x), *it);
    return r;
}

Poly Poly::compose(const Poly& g) const
{
    Poly r(F_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + constant(F_, *it);
    return r;
}

Poly Poly::reversed(std::int64_t d) const
{
    if (is_zero()) return *this;
    if (d < degree()) throw DomainError("reversal degree below polynomial degree");
    std::vector<Elem> r(static_cast<std::size_t>(d) + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(d) - i] = c_[i];
    return Poly(F_, std::move(r));
}

std::string Poly::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        std::string coef = F_->to_string(c_[i]);
        bool compound = coef.find('+') != std::string::npos;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += compound && c_.size() > 1 ? "(" + coef + ")" : coef;
            continue;
        }
        if (c_[i] != 1) out += (compound ? "(" + coef + ")" : coef) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g)
{
    if (g.is_zero()) throw DomainError("polynomial division by zero");
    const FieldPtr& F = f.field();
    if (f.degree() < g.degree()) return {Poly(F), f};
    std::vector<Elem> r = f.coeffs();
    const auto& gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    const Elem lc_inv = F->inv(gc.back());
    std::vector<Elem> quo(r.size() - dg, 0);
    for (std::size_t k = r.size(); k-- > dg;) {
        Elem c = F->mul(r[k], lc_inv);
        quo[k - dg] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= dg; ++i) r[k - dg + i] = F->sub(r[k - dg + i], F->mul(c, gc[i]));
    }
    r.resize(dg);
    return {Poly(F, std::move(quo)), Poly(F, std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b)
{
    const FieldPtr& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(F), s1(F);
    Poly t0(F), t1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [qq, rr] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rr);
        Poly s2 = s0 - qq * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - qq * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Elem li = F->inv(r0.leading());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly inverse_mod(const Poly& a, const Poly& m)
{
    auto res = xgcd(a % m, m);
    if (res.g.degree() != 0) throw DomainError("polynomial not invertible modulo " + m.to_string());
    return res.s % m;
}

Poly pow_mod(const Poly& a, std::uint64_t e, const Poly& m)
{
    Poly result = Poly::one(a.field()) % m, base = a % m;
    while (e) {
        if (e & 1) result = (result * base) % m;
        e >>= 1;
        if (e) base = (base * base) % m;
    }
    return result;
}

bool is_irreducible(const Poly& f)
{
    if (f.is_zero() || f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const FieldPtr& F = f.field();
    const Poly z = Poly::monomial(F, 1);
    Poly h = z % f;
    for (std::int64_t i = 1; i <= f.degree() / 2; ++i) {
        h = pow_mod(h, F->q(), f);
        if (gcd(h - z, f).degree() != 0) return false;
    }
    return true;
}

} // namespace fexp
