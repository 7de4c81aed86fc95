#pragma once

#include "fexp/poly.hpp"

#include <optional>
#include <string>

namespace fexp {

/// Valuation value; std::nullopt stands for +infinity (the valuation of 0).
using Valuation = std::optional<std::int64_t>;

/// Element of F_q(z) in lowest terms with monic denominator.
class RatFunc {
public:
    explicit RatFunc(FieldPtr F) : num_(F), den_(Poly::one(F)) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}
    RatFunc(Poly num, Poly den);

    static RatFunc constant(FieldPtr F, Elem c) { return RatFunc(Poly::constant(std::move(F), c)); }
    static RatFunc z(FieldPtr F) { return RatFunc(Poly::monomial(std::move(F), 1)); }

    const FieldPtr& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc pow(std::int64_t e) const;
    /// this(y(z)); y must be nonconstant unless this is constant.
    RatFunc compose(const RatFunc& y) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// `num` or `(num)/(den)`.
    std::string to_string(const std::string& var = "z") const;

private:
    struct Canonical {};
    RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_, den_;
};

/// Exponent of the irreducible P in a nonzero polynomial.
std::int64_t poly_val(const Poly& f, const Poly& P);
/// P-adic valuation; throws DomainError if P is not irreducible.
Valuation val_p(const RatFunc& x, const Poly& P);
/// Order at z = 0.
Valuation val_z(const RatFunc& x);
/// The infinite-place valuation -deg = deg den - deg num.
Valuation val_deg(const RatFunc& x);

/// max(deg num, deg den): the degree of z -> x(z), equal to [F_q(z) : F_q(x)].
std::int64_t rat_degree(const RatFunc& x);

struct RatFuncHash {
    std::size_t operator()(const RatFunc& x) const noexcept;
};

} // namespace fexp
