#pragma once

#include "fexp/bipoly.hpp"
#include "fexp/ratfunc.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fexp {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Grammar (whitespace ignored):
///
///   expr  = term { ("+" | "-") term } ;
///   term  = unary { ("*" | "/") unary } ;
///   unary = ("+" | "-") unary | power ;
///   power = atom [ "^" [ "-" ] integer ] ;
///   atom  = integer | "z" | "w" | "g" | "(" expr ")" ;
///
/// `g` is the root of the field modulus (only in nonprime fields), `w`
/// the second variable of a bivariate polynomial.
RatFunc parse_ratfunc(const std::string& text, const FieldPtr& F);
Poly parse_poly(const std::string& text, const FieldPtr& F);
Elem parse_elem(const std::string& text, const FieldPtr& F);

/// Parses R(z, w); denominators in z are cleared by their lcm.
BiPoly parse_bipoly(const std::string& text, const FieldPtr& F);

/// Finite series prefix `[m; c_m, c_{m+1}, ...]`.
struct SeriesLiteral {
    std::int64_t start = 0;
    std::vector<Elem> coeffs;
};
SeriesLiteral parse_series_literal(const std::string& text, const FieldPtr& F);
std::string format_series_literal(const SeriesLiteral& s, const FieldPtr& F);

} // namespace fexp
