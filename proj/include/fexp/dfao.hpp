#pragma once

#include "fexp/field.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fexp {

using Symbol = std::uint32_t;
using StateId = std::uint32_t;

/// Deterministic finite automaton with output reading base-k digits of the
/// index least significant digit first.  Immutable after construction.
class Dfao {
public:
    /// transitions[s][d] is the successor of state s on digit d.
    Dfao(std::uint32_t base, std::vector<std::vector<StateId>> transitions, std::vector<Symbol> outputs,
         StateId initial = 0);

    std::uint32_t base() const { return base_; }
    std::size_t size() const { return outputs_.size(); }
    StateId initial() const { return initial_; }
    StateId next(StateId s, std::uint32_t digit) const { return delta_[s][digit]; }
    Symbol output(StateId s) const { return outputs_[s]; }
    const std::vector<std::vector<StateId>>& transitions() const { return delta_; }
    const std::vector<Symbol>& outputs() const { return outputs_; }

    /// tau(delta*(initial, digits of n)); n = 0 reads the empty word.
    Symbol eval(std::uint64_t n) const { return eval_from(initial_, n); }
    Symbol eval_from(StateId s, std::uint64_t n) const;
    /// The same automaton started elsewhere.
    Dfao with_initial(StateId s) const;

    /// Every state reachable from the initial one keeps its output under
    /// the digit 0, so trailing zero digits never change a value.
    bool padding_consistent() const;

    std::string to_json() const;
    static Dfao from_json(const std::string& text);

    bool operator==(const Dfao& o) const = default;

private:
    std::uint32_t base_;
    std::vector<std::vector<StateId>> delta_;
    std::vector<Symbol> outputs_;
    StateId initial_;
};

/// Automaton whose states are abstract keys closed under the kernel maps
/// key -> step(key, d), explored breadth first from `start`.  Keys are
/// compared with `<`.  Throws DomainError beyond `cap` states.
template <class Key, class Step, class Output>
Dfao close_kernel(const Key& start, std::uint32_t base, Step step, Output output, std::size_t cap = 1u << 20)
{
    std::map<Key, StateId> index{{start, 0}};
    std::vector<Key> keys{start};
    std::vector<std::vector<StateId>> delta;
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        std::vector<StateId> row(base);
        for (std::uint32_t d = 0; d < base; ++d) {
            Key next = step(keys[i], d);
            auto it = index.find(next);
            if (it == index.end()) {
                if (keys.size() >= cap)
                    throw DomainError("kernel closure exceeded the state cap " + std::to_string(cap));
                it = index.emplace(next, static_cast<StateId>(keys.size())).first;
                keys.push_back(std::move(next));
            }
            row[d] = it->second;
        }
        delta.push_back(std::move(row));
        out.push_back(output(keys[i]));
    }
    return Dfao(base, std::move(delta), std::move(out), 0);
}

/// Drops unreachable states and merges equivalent ones (Moore refinement).
/// States are renumbered in breadth-first order from the initial state.
Dfao dfao_minimize(const Dfao& m);

/// One automaton per element of the k-kernel {n -> a(n k^i + j)}; the
/// sequences of distinct results differ.  Needs padding consistency.
std::vector<Dfao> kernel_of_dfao(const Dfao& m);

/// Automaton for n -> combine(a(n), b(n)); same base required.
Dfao dfao_product(const Dfao& a, const Dfao& b, const std::function<Symbol(Symbol, Symbol)>& combine);
/// Automaton for n -> f(a(n)).
Dfao dfao_map(const Dfao& a, const std::function<Symbol(Symbol)>& f);
/// The same sequence with the value at index n0 replaced.
Dfao dfao_override(const Dfao& a, std::uint64_t n0, Symbol value);

/// Reads base k^j digits by grouping j base-k digits (needs padding consistency).
Dfao dfao_to_power_base(const Dfao& m, std::uint32_t j);
/// A base-k automaton for the sequence of a base-k^j automaton.
Dfao dfao_from_power_base(const Dfao& m, std::uint32_t k);

/// Automaton for the ultimately periodic sequence n -> values[n] for
/// n < values.size() and values[n - period] beyond.
Dfao ultimately_periodic_dfao(const std::vector<Symbol>& values, std::size_t period, std::uint32_t k);

struct KernelProfile {
    std::uint32_t k = 2;
    std::uint32_t depth = 0;
    std::size_t length = 0;
    std::vector<std::size_t> counts;  // counts[d]: distinct prefixes among S_{i,j}, i <= d

    /// The last two depths give the same count.
    bool bounded() const { return counts.size() >= 2 && counts.back() == counts[counts.size() - 2]; }
    /// counts[from] < counts[from+1] < ... < counts[depth].
    bool strictly_increasing_from(std::uint32_t from) const;
};

/// Distinct length-`len` prefixes of S_{i,j}(n) = a(n k^i + j) for i <= d,
/// for each d <= depth.  Needs a prefix of length >= len * k^depth.
KernelProfile kernel_profile(const std::vector<Symbol>& prefix, std::uint32_t k, std::uint32_t depth, std::size_t len);

} // namespace fexp
