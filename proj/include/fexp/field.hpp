#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fexp {

/// Raw encoding of an element of F_{p^m}: the coordinate vector
/// (c_0, ..., c_{m-1}) w.r.t. the basis 1, g, ..., g^{m-1} packed as
/// c_0 + c_1 p + ... + c_{m-1} p^{m-1}.  0 and 1 encode zero and one.
using Elem = std::uint32_t;

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite field F_q, q = p^m, presented as F_p[g]/(modulus).
///
/// Multiplication goes through log/exp tables over a primitive element
/// found at construction; addition is XOR in characteristic 2 and
/// digit-wise otherwise.  Instances are immutable and shared by pointer.
class Field {
public:
    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    /// Monic modulus over F_p, coefficients low to high (length m+1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    /// Root g of the modulus (equals the integer class of `m==1 ? 0 : p`).
    Elem generator() const { return m_ == 1 ? 0 : p_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::int64_t e) const;
    /// Image of an integer under Z -> F_p -> F_q.
    Elem from_int(std::int64_t n) const;
    /// Coordinates over F_p (length m).
    std::vector<std::uint32_t> coords(Elem a) const;
    Elem from_coords(const std::vector<std::uint32_t>& c) const;
    bool in_prime_field(Elem a) const { return a < p_; }

    std::string to_string(Elem a) const;

    friend std::shared_ptr<const Field> make_field(std::uint32_t, std::uint32_t,
        std::optional<std::vector<std::uint32_t>>);

private:
    Field() = default;
    Elem slow_mul(Elem a, Elem b) const;

    std::uint32_t p_ = 2, m_ = 1, q_ = 2;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> exp_;           // length 2(q-1)
    std::vector<std::uint32_t> log_;  // log_[0] unused
    std::vector<Elem> add_table_;     // q*q when small and p odd
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

/// Builds F_{p^m}.  Without an explicit modulus the lexicographically
/// least monic irreducible of degree m is used (ordering by the packed
/// integer c_0 + c_1 p + ... of the non-leading coefficients).
FieldPtr make_field(std::uint32_t p, std::uint32_t m = 1,
    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// Value-semantic element wrapper for code that wants operators.
class FieldElem {
public:
    FieldElem(FieldPtr F, Elem v) : F_(std::move(F)), v_(v) {}
    const FieldPtr& field() const { return F_; }
    Elem raw() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    FieldElem operator+(const FieldElem& o) const { return {F_, F_->add(v_, o.v_)}; }
    FieldElem operator-(const FieldElem& o) const { return {F_, F_->sub(v_, o.v_)}; }
    FieldElem operator-() const { return {F_, F_->neg(v_)}; }
    FieldElem operator*(const FieldElem& o) const { return {F_, F_->mul(v_, o.v_)}; }
    FieldElem operator/(const FieldElem& o) const { return {F_, F_->div(v_, o.v_)}; }
    FieldElem inverse() const { return {F_, F_->inv(v_)}; }
    FieldElem pow(std::int64_t e) const { return {F_, F_->pow(v_, e)}; }
    bool operator==(const FieldElem& o) const { return F_ == o.F_ && v_ == o.v_; }
    std::string to_string() const { return F_->to_string(v_); }

private:
    FieldPtr F_;
    Elem v_;
};

} // namespace fexp
