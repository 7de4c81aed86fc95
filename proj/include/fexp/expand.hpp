#pragma once

#include "fexp/residue.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fexp {

using Digit = std::uint32_t;  // index into ResidueSystem::reps()

/// x = sum_{n >= start} a_n pi^n with a_n drawn from a residue system.
/// Digits are produced lazily and memoized; copies share the cache.
class DigitExpansion {
public:
    /// Appends digits (for indices start, start+1, ...) until the vector
    /// holds at least `count` of them.
    using Filler = std::function<void(std::vector<Digit>& digits, std::size_t count)>;

    DigitExpansion(std::shared_ptr<const ResidueSystem> system, std::int64_t start, Filler fill);
    /// Digits given by a function of the absolute index.
    static DigitExpansion from_function(std::shared_ptr<const ResidueSystem> system, std::int64_t start,
                                        std::function<Digit(std::int64_t n)> digit);

    const ResidueSystem& system() const { return *sys_; }
    const std::shared_ptr<const ResidueSystem>& system_ptr() const { return sys_; }
    std::int64_t start() const { return start_; }

    Digit digit(std::int64_t n) const;
    /// Digits with absolute indices in [from, to).
    std::vector<Digit> digits(std::int64_t from, std::int64_t to) const;
    /// The first `count` digits, starting at start().
    std::vector<Digit> prefix(std::size_t count) const;
    const ModelElem& digit_value(std::int64_t n) const { return sys_->reps()[digit(n)]; }

    /// sum_{start <= n < upto} a_n pi^n (rational when pi and the digits are).
    ModelElem partial_sum(std::int64_t upto) const;

private:
    struct Cache {
        std::vector<Digit> digits;
        Filler fill;
    };
    std::shared_ptr<const ResidueSystem> sys_;
    std::int64_t start_;
    std::shared_ptr<Cache> cache_;
};

enum class Engine {
    Auto,    // exact remainders for vp, truncated series otherwise
    Exact,   // rational remainders r_{n+1} = (r_n - a_n)/pi
    Series,  // truncated t-adic arithmetic, recomputed with doubled width on demand
};

/// Default start index: min(0, floor(v(x)/e)), and 0 for x = 0.
std::int64_t default_start(const ModelElem& x, const BaseContext& ctx);

/// Greedy (Gamma, pi)-expansion of x.  Gamma must be complete.
DigitExpansion expand(const ModelElem& x, const ResidueSystem& gamma, Engine engine = Engine::Auto,
                      std::optional<std::int64_t> start = std::nullopt);

/// Exact remainders r_start, r_{start+1}, ... of the greedy algorithm.
class CarryState {
public:
    CarryState(const RatFunc& x, std::shared_ptr<const ResidueSystem> gamma, std::int64_t start);
    std::int64_t index() const { return n_; }
    const RatFunc& remainder() const { return r_; }
    /// Digit at the current index; advances to the next remainder.
    Digit step();

private:
    std::shared_ptr<const ResidueSystem> sys_;
    RatFunc pi_;
    std::vector<RatFunc> reps_;
    RatFunc r_;
    std::int64_t n_;
};

enum class PeriodStatus { Exact, Candidate, NoneWithinBounds, Undetermined };
std::string status_name(PeriodStatus s);

/// a_n = a_{n+period} for all n >= preperiod (absolute digit indices).
struct PeriodCertificate {
    PeriodStatus status = PeriodStatus::Undetermined;
    std::int64_t preperiod = 0;
    std::int64_t period = 0;
    std::string note;
};

struct PropertyA {
    bool holds = false;
    std::string reason;           // empty when holds
    std::int64_t degree = 0;      // [K : F_q(pi)] when pi is rational
    std::int64_t local_degree = 0;  // e * f
};

/// Condition (i) by typing (pi and all reps rational), condition (ii) as
/// rat_degree(pi) == e*f.
PropertyA property_a_check(const ResidueSystem& gamma);

/// Detects a repeated canonical remainder.  Requires property A.
PeriodCertificate detect_period_exact(const RatFunc& x, const ResidueSystem& gamma,
                                      std::size_t cap = 1'000'000, std::optional<std::int64_t> start = std::nullopt);

/// Candidate (N, L) for the first n_max digits: the least L <= l_max for
/// which some N with N - start <= n_max/2 makes a_n = a_{n+L} hold on the
/// prefix, paired with the least such N.  Never reports Exact.
PeriodCertificate detect_period_bounded(const DigitExpansion& d, std::int64_t n_max, std::int64_t l_max);

/// Expansion with the digits of `prefix` (from start) followed by a repeat
/// of the last `period` of them.
DigitExpansion periodic_expansion(std::shared_ptr<const ResidueSystem> gamma, std::int64_t start,
                                  std::vector<Digit> prefix, std::int64_t period);
/// The periodic expansion described by an exact certificate, read off `d`.
DigitExpansion certified_expansion(const DigitExpansion& d, const PeriodCertificate& cert);

/// Closed form sum_{n<N} a_n pi^n + pi^N (sum_{k<L} a_{N+k} pi^k)/(1 - pi^L).
RatFunc resum_periodic(const DigitExpansion& d, const PeriodCertificate& cert);

/// Data of the non-periodic witness construction, kept for reporting.
struct Witness {
    RatFunc x;
    std::vector<RatFunc> basis;   // theta^0 .. theta^{h-1}
    std::size_t gamma_index = 0;  // the chosen gamma'
    std::int64_t m = 0;           // m(Gamma)
    std::vector<Elem> leading;    // b_{m, gamma'}
    std::vector<Elem> lambda;     // chosen coordinates in Lambda_{gamma'}
};

/// Rational x whose expansion is not ultimately periodic; requires
/// rational pi and reps with rat_degree(pi) > e*f.
Witness lemma21_witness(const ResidueSystem& gamma);

enum class ConvertRoute { Auto, Naive, Recombine };

/// Expansion of the same value with respect to gamma2.  The recombination
/// route applies when gamma2 is an F_q-span system with property A and
/// every digit of the source system has a terminating gamma2-expansion.
DigitExpansion convert_expansion(const DigitExpansion& d, const ResidueSystem& gamma2,
                                 ConvertRoute route = ConvertRoute::Auto);
bool recombination_applies(const ResidueSystem& from, const ResidueSystem& to);

/// Expansion of (1 - pi^L) x over twist_system(Gamma, L) from that of x.
DigitExpansion twist_expansion(const DigitExpansion& d, std::int64_t L);

} // namespace fexp
