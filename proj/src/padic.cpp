#include "fexp/padic.hpp"

namespace fexp {

PiAdicStream::PiAdicStream(Poly P, std::int64_t start, Generator gen)
    : P_(std::move(P)), start_(start), cache_(std::make_shared<Cache>())
{
    if (P_.degree() < 1) throw DomainError("P-adic base must be nonconstant");
    cache_->gen = std::move(gen);
}

Poly PiAdicStream::digit(std::int64_t n) const
{
    if (n < start_) return Poly(P_.field());
    while (start_ + static_cast<std::int64_t>(cache_->digits.size()) <= n)
        cache_->digits.push_back(cache_->gen(start_ + static_cast<std::int64_t>(cache_->digits.size())));
    return cache_->digits[static_cast<std::size_t>(n - start_)];
}

RatFunc PiAdicStream::partial_sum(std::int64_t upto) const
{
    const FieldPtr& F = P_.field();
    RatFunc acc(F);
    RatFunc Pr(P_);
    for (std::int64_t n = upto - 1; n >= start_; --n) acc = acc * Pr + RatFunc(digit(n));
    return acc * Pr.pow(start_);
}

PiAdicStream padic_from_ratfunc(const RatFunc& x, const Poly& P)
{
    Valuation v = val_p(x, P);
    std::int64_t m = v.value_or(0);
    struct State {
        RatFunc rem;
        std::int64_t next;
    };
    auto st = std::make_shared<State>(State{x / RatFunc(P).pow(m), m});
    return PiAdicStream(P, m, [st, P](std::int64_t n) {
        if (n != st->next) throw DomainError("P-adic digits must be generated in order");
        const RatFunc& r = st->rem;
        Poly d = (r.num() * inverse_mod(r.den(), P)) % P;
        st->rem = (r - RatFunc(d)) / RatFunc(P);
        ++st->next;
        return d;
    });
}

PiAdicStream padic_normalize(const std::vector<Poly>& raw, std::int64_t start, const Poly& P)
{
    const FieldPtr& F = P.field();
    std::vector<Poly> out;
    Poly carry(F);
    for (std::size_t i = 0; i < raw.size() || !carry.is_zero(); ++i) {
        Poly v = carry + (i < raw.size() ? raw[i] : Poly(F));
        auto [qq, r] = divmod(v, P);
        out.push_back(r);
        carry = qq;
    }
    auto digits = std::make_shared<const std::vector<Poly>>(std::move(out));
    return PiAdicStream(P, start, [digits, start, F](std::int64_t n) {
        auto i = static_cast<std::size_t>(n - start);
        return i < digits->size() ? (*digits)[i] : Poly(F);
    });
}

} // namespace fexp
