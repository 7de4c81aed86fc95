#pragma once

#include "fexp/ratfunc.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace fexp {

/// Base-P digit stream x = sum_{n >= start} d_n P^n, deg d_n < deg P,
/// for an element of the P-adic completion of F_q(z).
class PiAdicStream {
public:
    using Generator = std::function<Poly(std::int64_t n)>;

    PiAdicStream(Poly P, std::int64_t start, Generator gen);

    const Poly& base() const { return P_; }
    std::int64_t start() const { return start_; }
    /// Digit at position n (zero below start()).
    Poly digit(std::int64_t n) const;
    /// sum_{start <= n < upto} d_n P^n
    RatFunc partial_sum(std::int64_t upto) const;

private:
    Poly P_;
    std::int64_t start_;
    struct Cache {
        std::vector<Poly> digits;
        Generator gen;
    };
    std::shared_ptr<Cache> cache_;
};

/// Expansion of a rational function in base P (P irreducible).
PiAdicStream padic_from_ratfunc(const RatFunc& x, const Poly& P);

/// Carry normalization of raw digits of unconstrained degree placed at
/// positions start, start+1, ...: each position is reduced mod P and the
/// quotient carried upward until no carry remains.
PiAdicStream padic_normalize(const std::vector<Poly>& raw, std::int64_t start, const Poly& P);

} // namespace fexp
