#pragma once

#include "fexp/field.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace fexp {

/// Degree of the zero polynomial.  Ordered below every real degree; code
/// that can see a zero polynomial tests `is_zero()` before using degrees.
inline constexpr std::int64_t kDegNegInf = std::numeric_limits<std::int64_t>::min() / 4;

/// Univariate polynomial over a finite field, coefficients low to high,
/// always normalized (no zero leading coefficient).  The variable is
/// anonymous; printing names it.
class Poly {
public:
    explicit Poly(FieldPtr F) : F_(std::move(F)) {}
    Poly(FieldPtr F, std::vector<Elem> c) : F_(std::move(F)), c_(std::move(c)) { normalize(); }

    static Poly constant(FieldPtr F, Elem c) { return Poly(std::move(F), std::vector<Elem>{c}); }
    static Poly one(FieldPtr F) { return constant(std::move(F), 1); }
    /// c * z^k
    static Poly monomial(FieldPtr F, std::int64_t k, Elem c = 1);
    static Poly from_ints(FieldPtr F, const std::vector<std::int64_t>& c);

    const FieldPtr& field() const { return F_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::int64_t degree() const { return c_.empty() ? kDegNegInf : static_cast<std::int64_t>(c_.size()) - 1; }
    Elem operator[](std::int64_t i) const
    {
        return i >= 0 && i < static_cast<std::int64_t>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0;
    }
    Elem leading() const { return c_.empty() ? 0 : c_.back(); }
    /// Lowest exponent with nonzero coefficient (order at z = 0); kDegNegInf for 0.
    std::int64_t low_order() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Elem c) const;
    /// Multiply by z^k, k >= 0.
    Poly shifted(std::int64_t k) const;
    /// Truncate modulo z^n.
    Poly truncated(std::int64_t n) const;
    Poly monic() const;
    Poly derivative() const;
    Poly pow(std::uint64_t e) const;
    Elem eval(Elem x) const;
    /// this(g(z))
    Poly compose(const Poly& g) const;
    /// z^deg * this(1/z) for a given nominal degree d >= deg.
    Poly reversed(std::int64_t d) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Printer using `var` as the variable name; coefficients from
    /// nonprime fields print as polynomials in g.
    std::string to_string(const std::string& var = "z") const;

private:
    void normalize()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    FieldPtr F_;
    std::vector<Elem> c_;
};

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
inline Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
inline Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

/// Monic gcd (0 only if both are 0).
Poly gcd(const Poly& a, const Poly& b);

struct XgcdResult {
    Poly g, s, t;  // g = s a + t b, g monic
};
XgcdResult xgcd(const Poly& a, const Poly& b);

/// Inverse of a modulo m; throws DomainError when not coprime.
Poly inverse_mod(const Poly& a, const Poly& m);
Poly pow_mod(const Poly& a, std::uint64_t e, const Poly& m);

/// Irreducibility over the coefficient field (Ben-Or style gcd test).
bool is_irreducible(const Poly& f);

/// Multiplication truncated modulo z^n.
Poly mul_trunc(const Poly& a, const Poly& b, std::int64_t n);

} // namespace fexp
