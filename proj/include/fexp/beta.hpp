#pragma once

#include "fexp/christol.hpp"

#include <optional>
#include <vector>

namespace fexp {

/// beta in F_q((1/z)) of degree d > 0, with Gamma_d = span{1, 1/z, ...,
/// 1/z^{d-1}} over F_q as residue system for pi = 1/beta (degree model).
class BetaContext {
public:
    explicit BetaContext(LaurentStream beta, std::optional<AlgebraicSpec> spec = std::nullopt);
    static BetaContext from_spec(const AlgebraicSpec& spec);

    const LaurentStream& beta() const { return beta_; }
    const std::optional<AlgebraicSpec>& spec() const { return spec_; }
    const FieldPtr& field() const { return beta_.field(); }
    std::int64_t d() const { return d_; }
    const ResidueSystem& gamma() const { return gamma_; }
    /// Alphabet symbol of a digit: sum_j c_j q^j for a = sum_j c_j z^j.
    Symbol symbol(const Poly& a) const;

private:
    LaurentStream beta_;
    std::optional<AlgebraicSpec> spec_;
    std::int64_t d_ = 0;
    ResidueSystem gamma_;
};

/// d_beta(x) = (a_1, a_2, ...) with a_n = [beta T^{n-1} x], so that
/// x = a_1/beta + a_2/beta^2 + ...
struct BetaExpansion {
    std::vector<Poly> digits;  // digits[n - 1] = a_n

    const Poly& operator[](std::size_t n) const { return digits.at(n - 1); }
};

/// T(x) = beta x - [beta x] for x in F_q[[1/z]].
LaurentStream t_map(const LaurentStream& x, const BetaContext& ctx);

/// The first `count` digits of d_beta(x), computed on truncated 1/z-series
/// that lose d coefficients of precision per digit.
BetaExpansion d_beta(const LaurentStream& x, const BetaContext& ctx, std::int64_t count);

/// The (Gamma_d, 1/beta)-expansion of beta x~ / z^{d-1}, whose digit at
/// pi^{n-1} is a_n / z^{d-1}.  When deg a_1 = d (possible only for
/// deg x = 0) the digit a_1 is split off first, x~ = x - a_1/beta, and
/// returned as `lead`; otherwise x~ = x.  Checked digit-for-digit against
/// d_beta.
struct BetaBridge {
    DigitExpansion expansion;
    std::optional<Poly> lead;
};
BetaBridge bridge(const LaurentStream& x, const BetaContext& ctx, std::int64_t count);

struct BetaAutomaton {
    Dfao digits;                   // n -> symbol of a_n (n >= 1), 0 at n = 0
    std::vector<Dfao> projections; // n -> coefficient of z^j in a_n
};

/// Automaton for d_beta(x) from the generalized Christol construction on
/// x~ / z^{d-1} over (Gamma_d, 1/beta); needs beta given by a spec.
/// Checked against d_beta for n <= count.
BetaAutomaton beta_automaton(const LaurentStream& x, const BetaContext& ctx, std::int64_t count);

} // namespace fexp
