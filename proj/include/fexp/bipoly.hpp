#pragma once

#include "fexp/ratfunc.hpp"

#include <string>
#include <vector>

namespace fexp {

/// R(z, w) = sum_j R_j(z) w^j, stored by w-degree.
class BiPoly {
public:
    explicit BiPoly(FieldPtr F) : F_(std::move(F)) {}
    BiPoly(FieldPtr F, std::vector<Poly> c) : F_(std::move(F)), c_(std::move(c)) { normalize(); }

    const FieldPtr& field() const { return F_; }
    const std::vector<Poly>& coeffs() const { return c_; }
    std::int64_t w_degree() const { return c_.empty() ? kDegNegInf : static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Poly coeff(std::int64_t j) const
    {
        return j >= 0 && j < static_cast<std::int64_t>(c_.size()) ? c_[static_cast<std::size_t>(j)] : Poly(F_);
    }
    /// Largest z-degree over all coefficients.
    std::int64_t z_degree() const;
    BiPoly derivative_w() const;
    /// Makes the coefficient gcd 1 and the top w-coefficient monic.
    BiPoly primitive() const;

    bool operator==(const BiPoly& o) const { return c_ == o.c_; }
    std::string to_string() const;

private:
    void normalize()
    {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    FieldPtr F_;
    std::vector<Poly> c_;
};

} // namespace fexp
