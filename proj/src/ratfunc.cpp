#include "fexp/ratfunc.hpp"

#include <algorithm>

namespace fexp {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one(num_.field());
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    Elem lc = den_.leading();
    if (lc != 1) {
        Elem li = num_.field()->inv(lc);
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const
{
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const
{
    if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const
{
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const
{
    if (o.is_zero()) throw DomainError("rational function division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const
{
    if (is_zero()) throw DomainError("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(std::int64_t e) const
{
    if (e < 0) return inverse().pow(-e);
    return RatFunc(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)));
}

RatFunc RatFunc::compose(const RatFunc& y) const
{
    const FieldPtr& F = field();
    std::int64_t d = std::max(num_.degree(), den_.degree());
    if (d <= 0) return *this;
    // Homogenize: N(a/b) b^d / (D(a/b) b^d).
    auto homog = [&](const Poly& f) {
        Poly acc(F);
        Poly apow = Poly::one(F);
        std::vector<Poly> bpows{Poly::one(F)};
        for (std::int64_t i = 1; i <= d; ++i) bpows.push_back(bpows.back() * y.den());
        for (std::int64_t i = 0; i <= d; ++i) {
            if (f[i] != 0) acc = acc + (apow * bpows[static_cast<std::size_t>(d - i)]).scaled(f[i]);
            apow = apow * y.num();
        }
        return acc;
    };
    return RatFunc(homog(num_), homog(den_));
}

std::string RatFunc::to_string(const std::string& var) const
{
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::int64_t poly_val(const Poly& f, const Poly& P)
{
    if (f.is_zero()) throw DomainError("valuation of the zero polynomial is infinite");
    std::int64_t k = 0;
    Poly g = f;
    while (true) {
        auto [qq, r] = divmod(g, P);
        if (!r.is_zero()) return k;
        g = std::move(qq);
        ++k;
    }
}

Valuation val_p(const RatFunc& x, const Poly& P)
{
    if (!is_irreducible(P)) throw DomainError("valuation base " + P.to_string() + " is not irreducible");
    if (x.is_zero()) return std::nullopt;
    return poly_val(x.num(), P) - poly_val(x.den(), P);
}

Valuation val_z(const RatFunc& x)
{
    if (x.is_zero()) return std::nullopt;
    return x.num().low_order() - x.den().low_order();
}

Valuation val_deg(const RatFunc& x)
{
    if (x.is_zero()) return std::nullopt;
    return x.den().degree() - x.num().degree();
}

std::int64_t rat_degree(const RatFunc& x)
{
    if (x.is_constant()) throw DomainError("degree of a constant rational map is undefined");
    return std::max(x.num().degree(), x.den().degree());
}

std::size_t RatFuncHash::operator()(const RatFunc& x) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) { h = (h ^ v) * 1099511628211ull; };
    for (auto c : x.num().coeffs()) mix(c);
    mix(0xfeedu);
    for (auto c : x.den().coeffs()) mix(c);
    return h;
}

} // namespace fexp
