#pragma once

#include "fexp/ratfunc.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fexp {

/// Which completion a stream lives in: F_q((z)) or F_q((1/z)).  Either
/// way the stream is a Laurent series in a local parameter t (t = z or
/// t = 1/z) and is indexed by the t-exponent, so a descending stream
/// stores x = sum_n a_n z^{-n} with index n.
enum class Orientation { Ascending, Descending };

inline constexpr std::int64_t kDefaultZeroScan = 1024;

class PossiblyZero : public DomainError {
public:
    explicit PossiblyZero(std::int64_t depth)
        : DomainError("series is possibly zero at depth " + std::to_string(depth)), depth_(depth)
    {
    }
    std::int64_t depth() const { return depth_; }

private:
    std::int64_t depth_;
};

/// Lazily generated, memoized Laurent series.  Copies share the cache.
/// Queries on one stream must not race; forced prefixes never change.
class LaurentStream {
public:
    struct State;
    /// Extends `State::cache` so that it covers index `upto`.
    using Filler = std::function<void(State&, std::int64_t upto)>;
    /// Coefficient at index n, given the already-computed prefix.
    using Generator = std::function<Elem(std::int64_t n, const State&)>;

    struct State {
        FieldPtr F;
        Orientation orient;
        std::int64_t start;
        std::vector<Elem> cache;  // indices start, start+1, ...
        Filler fill;
        Elem at(std::int64_t n) const
        {
            return n < start ? 0 : cache[static_cast<std::size_t>(n - start)];
        }
    };

    static LaurentStream zero(FieldPtr F, Orientation o);
    /// Finitely many coefficients starting at `start`, zero afterwards.
    static LaurentStream finite(FieldPtr F, Orientation o, std::int64_t start, std::vector<Elem> c);
    static LaurentStream from_generator(FieldPtr F, Orientation o, std::int64_t start, Generator gen);
    static LaurentStream from_filler(FieldPtr F, Orientation o, std::int64_t start, Filler fill);
    /// t^shift * A(t)/B(t), B(0) != 0.
    static LaurentStream rational(FieldPtr F, Orientation o, std::int64_t shift, Poly A, Poly B);
    /// Image of a rational function in the completion named by `o`.
    static LaurentStream from_ratfunc(const RatFunc& x, Orientation o);

    const FieldPtr& field() const { return s_->F; }
    Orientation orientation() const { return s_->orient; }
    /// Index below which all coefficients vanish (not necessarily the valuation).
    std::int64_t start() const { return s_->start; }

    Elem coeff(std::int64_t n) const;
    /// Coefficients with indices in [from, to).
    std::vector<Elem> coeffs(std::int64_t from, std::int64_t to) const;
    /// First nonzero index within `depth` coefficients of start().
    std::optional<std::int64_t> find_valuation(std::int64_t depth = kDefaultZeroScan) const;
    /// Truncation as a polynomial in t of the coefficients with indices in [0, n).
    Poly truncation(std::int64_t n) const;

    std::string to_string(std::int64_t upto) const;

private:
    explicit LaurentStream(std::shared_ptr<State> s) : s_(std::move(s)) {}
    std::shared_ptr<State> s_;
};

LaurentStream operator+(const LaurentStream& a, const LaurentStream& b);
LaurentStream operator-(const LaurentStream& a, const LaurentStream& b);
LaurentStream operator-(const LaurentStream& a);
LaurentStream operator*(const LaurentStream& a, const LaurentStream& b);
LaurentStream scale(const LaurentStream& a, Elem c);
/// Multiplication by t^k.
LaurentStream shift(const LaurentStream& a, std::int64_t k);
/// Multiplicative inverse; throws PossiblyZero when no nonzero
/// coefficient is found within `zero_scan` coefficients.
LaurentStream inverse(const LaurentStream& a, std::int64_t zero_scan = kDefaultZeroScan);
LaurentStream divide(const LaurentStream& a, const LaurentStream& b, std::int64_t zero_scan = kDefaultZeroScan);
/// a^(p^k) coefficient-wise: sum a_n^(p^k) t^(n p^k).
LaurentStream frobenius(const LaurentStream& a, std::uint32_t k = 1);
LaurentStream power(const LaurentStream& a, std::uint64_t e);
/// Evaluates a polynomial with stream-valued argument: sum c_j a^j.
LaurentStream eval_poly(const std::vector<LaurentStream>& coeffs, const LaurentStream& a);

/// True iff the coefficients agree at every index <= n.
bool stream_eq(const LaurentStream& a, const LaurentStream& b, std::int64_t n);

/// Descending only: x = [x] + {x} with [x] in F_q[z] and deg {x} < 0.
std::pair<Poly, LaurentStream> int_frac_split(const LaurentStream& x);

/// x = t^shift * A(t)/B(t) with A(0), B(0) nonzero (A = 0 for x = 0).
struct TRational {
    std::int64_t shift = 0;
    Poly A, B;
};
TRational to_t_rational(const RatFunc& x, Orientation o);
/// Polynomial in t viewed as an element of F_q(z).
RatFunc t_poly_to_ratfunc(const Poly& p, Orientation o);

} // namespace fexp
