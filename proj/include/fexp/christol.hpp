#pragma once

#include "fexp/dfao.hpp"
#include "fexp/expand.hpp"
#include "fexp/hensel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fexp {

/// c_{-1} + sum_{i=0}^{t} c_i f^{Q^i} = 0 with Q the size of the
/// coefficient field; `constant` is c_{-1}.
struct LinearRelation {
    Poly constant;
    std::vector<Poly> c;
    std::int64_t verified_precision = 0;  // holds modulo z^this

    /// R(z, w) = c_{-1} + sum_i c_i w^{Q^i}.
    BiPoly as_bipoly() const;
};

/// Homogeneous relation sum_{i=0}^{h} c_i f^{Q^i} = 0 with c_0 != 0,
/// primitive and with c_0 monic.
struct OreForm {
    std::vector<Poly> c;
    std::int64_t verified_precision = 0;

    std::int64_t h() const { return static_cast<std::int64_t>(c.size()) - 1; }
    std::int64_t max_degree() const;
    std::string to_string() const;
};

struct RelationSearch {
    std::int64_t max_t = 3;          // largest i with f^{Q^i} in the relation
    std::int64_t max_degree = 128;   // cap on deg c_i
    bool inhomogeneous = true;       // allow the constant term c_{-1}
};

/// Hermite-Pade search over the coefficient prefix f_0, f_1, ... (all in
/// F): the first relation found for increasing degree bound B (0, 1, 2,
/// 4, ...) and, for each B, increasing t; it must hold modulo
/// z^{prefix.size()}.
std::optional<LinearRelation> find_relation(const std::vector<Elem>& prefix, const FieldPtr& F,
                                            const RelationSearch& opts = {});

/// Homogenizes (when c_{-1} != 0) by L^Q - c_{-1}^{Q-1} L = 0 for
/// L = sum c_i f^{Q^i} = -c_{-1}, then lowers the relation with Cartier
/// operators until c_0 != 0.
OreForm homogenize(const LinearRelation& rel);

/// Ore relation for the branch named by `spec` (an ascending power series)
/// from exact linear algebra over F_q(z) on 1, w, w^q, ... modulo R,
/// verified modulo z^V by stream arithmetic.
OreForm ore_form(const AlgebraicSpec& spec, std::int64_t V = 1024);

/// Coefficient automaton (base Q) of the power series with the given
/// Ore relation; `coeff` must supply f_n for 0 <= n <= deg c_0.
Dfao encode_series(const OreForm& ore, const FieldPtr& F, const std::function<Elem(std::int64_t)>& coeff,
                   std::size_t cap = 1u << 20);

/// Minimal automaton for the coefficients of the spec's branch, checked
/// against the Hensel coefficients for n < check.
Dfao encode(const AlgebraicSpec& spec, std::int64_t check = 1024, std::size_t cap = 1u << 20);

struct DecodeResult {
    BiPoly R;
    LinearRelation relation;
};

/// A polynomial R with R(z, f) = 0 modulo z^V for the series
/// f = sum dfao(n) z^n, found by Hermite-Pade search (verified, not proved).
DecodeResult decode(const Dfao& m, const FieldPtr& F, std::int64_t V = 1024, const RelationSearch& opts = {});

/// Base-k automaton for digit index n -> a_{start + n} of an expansion
/// with an exact period certificate.
Dfao periodic_to_dfao(const DigitExpansion& d, const PeriodCertificate& cert, std::uint32_t k);

/// Coordinates of the digits of x over the generators of a span system:
/// a_n = sum_i coords[n - start][i] alpha_i, coordinates in the prime
/// field for prime-field spans and in F_q otherwise.
struct Components {
    std::int64_t start = 0;
    FieldPtr coeff_field;
    std::vector<std::vector<Elem>> coords;
};

/// Solves x = sum_i x_i alpha_i, x_i in F_c((pi)), by block forward
/// substitution on truncated t-adic series (vz and vdeg), or from the
/// exact expansion (vp).  The truncation carries 32 extra coefficients
/// and the residual valuation is asserted afterwards.
Components solve_components(const ModelElem& x, const ResidueSystem& gamma, std::int64_t count,
                            std::optional<std::int64_t> start = std::nullopt);

struct SpanChristol {
    DigitExpansion expansion;        // digits read off `automaton`
    Dfao automaton;                  // n -> digit index of a_{start + n}
    std::vector<Dfao> components;    // n -> coordinate i of a_{start + n}
    std::vector<OreForm> relations;  // one per component, in the variable pi
};

/// Digits of x over an additively closed span system, generated by the
/// product of one Christol automaton per component.  Relations are found
/// on max(count, 256) component coefficients.
SpanChristol span_christol(const ModelElem& x, const ResidueSystem& gamma, std::int64_t count,
                           std::optional<std::int64_t> start = std::nullopt);

struct ShiftedChristol {
    DigitExpansion expansion;  // over shift_system(gamma, xi)
    Dfao automaton;
};

/// Digits of x over Gamma + xi as a_n + xi, {a_n} the span digits of
/// x - pi^m xi / (1 - pi).
ShiftedChristol shifted_christol(const ModelElem& x, const ResidueSystem& gamma, const ModelElem& xi,
                                 std::int64_t count);

struct PowerSeriesDigits {
    DigitExpansion expansion;  // over the system {f1, f2} in the given order
    Dfao selector;             // n -> constant term of a_{start + n}
};

/// Digits of x over ({f1, f2}, z) in F_2((z)) via the selector series
/// (x - f2 z^m/(1 - z))/(f1 - f2), where f1 has constant term 1.
PowerSeriesDigits q2_powerseries_digits(const ModelElem& x, const ModelElem& f1, const ModelElem& f2,
                                        std::int64_t count);

} // namespace fexp
