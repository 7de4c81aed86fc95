#pragma once

#include "fexp/ratfunc.hpp"

#include <utility>
#include <vector>

namespace fexp {

/// Polynomial in w with coefficients in F_q(z), low to high, trimmed.
using SPoly = std::vector<RatFunc>;

void spoly_trim(SPoly& a);
SPoly spoly_add(const SPoly& a, const SPoly& b, const FieldPtr& F);
SPoly spoly_sub(const SPoly& a, const SPoly& b, const FieldPtr& F);
SPoly spoly_mul(const SPoly& a, const SPoly& b, const FieldPtr& F);
std::pair<SPoly, SPoly> spoly_divmod(SPoly a, const SPoly& b, const FieldPtr& F);
/// a^{-1} mod m; throws DomainError unless gcd(a, m) is constant.
SPoly spoly_inverse_mod(const SPoly& a, const SPoly& m, const FieldPtr& F);
/// a^e mod m.
SPoly spoly_pow_mod(const SPoly& a, std::uint64_t e, const SPoly& m, const FieldPtr& F);
/// A polynomial in z read as a polynomial in w with constant coefficients.
SPoly spoly_from_constants(const Poly& p);

} // namespace fexp
