#include "fexp/dfao.hpp"
#include "fexp/parse.hpp"

#include "json.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fexp {

Dfao::Dfao(std::uint32_t base, std::vector<std::vector<StateId>> transitions, std::vector<Symbol> outputs,
           StateId initial)
    : base_(base), delta_(std::move(transitions)), outputs_(std::move(outputs)), initial_(initial)
{
    if (base_ < 2) throw DomainError("automaton base must be at least 2");
    if (outputs_.empty()) throw DomainError("automaton has no states");
    if (delta_.size() != outputs_.size()) throw DomainError("transition table and outputs disagree in size");
    if (initial_ >= outputs_.size()) throw DomainError("initial state out of range");
    for (const auto& row : delta_) {
        if (row.size() != base_) throw DomainError("transition row does not have one entry per digit");
        for (StateId t : row)
            if (t >= outputs_.size()) throw DomainError("transition target out of range");
    }
}

Symbol Dfao::eval_from(StateId s, std::uint64_t n) const
{
    for (; n > 0; n /= base_) s = delta_[s][n % base_];
    return outputs_[s];
}

Dfao Dfao::with_initial(StateId s) const
{
    return Dfao(base_, delta_, outputs_, s);
}

namespace {

std::vector<StateId> reachable_bfs(const Dfao& m)
{
    std::vector<StateId> order{m.initial()};
    std::vector<bool> seen(m.size(), false);
    seen[m.initial()] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (StateId t : m.transitions()[order[i]])
            if (!seen[t]) {
                seen[t] = true;
                order.push_back(t);
            }
    return order;
}

} // namespace

bool Dfao::padding_consistent() const
{
    for (StateId s : reachable_bfs(*this))
        if (outputs_[delta_[s][0]] != outputs_[s]) return false;
    return true;
}

std::string Dfao::to_json() const
{
    nlohmann::json states = nlohmann::json::array();
    for (std::size_t s = 0; s < size(); ++s)
        states.push_back({{"transitions", delta_[s]}, {"output", outputs_[s]}});
    nlohmann::ordered_json j;
    j["base"] = base_;
    j["states"] = states;
    j["initial"] = initial_;
    return j.dump();
}

Dfao Dfao::from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        std::vector<std::vector<StateId>> delta;
        std::vector<Symbol> out;
        for (const auto& s : j.at("states")) {
            delta.push_back(s.at("transitions").get<std::vector<StateId>>());
            out.push_back(s.at("output").get<Symbol>());
        }
        return Dfao(j.at("base").get<std::uint32_t>(), std::move(delta), std::move(out),
                    j.value("initial", StateId{0}));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed automaton JSON: ") + e.what());
    }
}

Dfao dfao_minimize(const Dfao& m)
{
    const std::vector<StateId> order = reachable_bfs(m);
    std::vector<std::int64_t> pos(m.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<std::int64_t>(i);

    // Moore refinement: class ids from (class, successor classes) signatures.
    std::vector<std::size_t> cls(order.size());
    {
        std::map<Symbol, std::size_t> ids;
        for (std::size_t i = 0; i < order.size(); ++i)
            cls[i] = ids.emplace(m.output(order[i]), ids.size()).first->second;
    }
    std::size_t count = 0;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> next(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            std::vector<std::size_t> sig{cls[i]};
            for (StateId t : m.transitions()[order[i]]) sig.push_back(cls[static_cast<std::size_t>(pos[t])]);
            next[i] = ids.emplace(std::move(sig), ids.size()).first->second;
        }
        cls = std::move(next);
        if (ids.size() == count) break;
        count = ids.size();
    }

    // Renumber classes breadth first from the initial state.
    std::vector<std::int64_t> renum(count, -1);
    std::vector<std::size_t> rep_of;  // new id -> representative position
    std::deque<std::size_t> queue{0};
    renum[cls[0]] = 0;
    rep_of.push_back(0);
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (StateId t : m.transitions()[order[i]]) {
            std::size_t j = static_cast<std::size_t>(pos[t]);
            if (renum[cls[j]] < 0) {
                renum[cls[j]] = static_cast<std::int64_t>(rep_of.size());
                rep_of.push_back(j);
                queue.push_back(j);
            }
        }
    }
    std::vector<std::vector<StateId>> delta;
    std::vector<Symbol> out;
    for (std::size_t i : rep_of) {
        std::vector<StateId> row;
        for (StateId t : m.transitions()[order[i]])
            row.push_back(static_cast<StateId>(renum[cls[static_cast<std::size_t>(pos[t])]]));
        delta.push_back(std::move(row));
        out.push_back(m.output(order[i]));
    }
    return Dfao(m.base(), std::move(delta), std::move(out), 0);
}

std::vector<Dfao> kernel_of_dfao(const Dfao& m)
{
    if (!m.padding_consistent()) throw DomainError("kernel needs a padding-consistent automaton");
    // In a minimal padding-consistent automaton each reachable state is a
    // distinct kernel sequence: state delta*(init, j padded to i digits)
    // computes n -> a(n k^i + j).
    Dfao min = dfao_minimize(m);
    std::vector<Dfao> out;
    for (StateId s = 0; s < min.size(); ++s) out.push_back(dfao_minimize(min.with_initial(s)));
    return out;
}

Dfao dfao_product(const Dfao& a, const Dfao& b, const std::function<Symbol(Symbol, Symbol)>& combine)
{
    if (a.base() != b.base()) throw DomainError("product of automata with different bases");
    using Key = std::pair<StateId, StateId>;
    return close_kernel(
        Key{a.initial(), b.initial()}, a.base(),
        [&](const Key& s, std::uint32_t d) { return Key{a.next(s.first, d), b.next(s.second, d)}; },
        [&](const Key& s) { return combine(a.output(s.first), b.output(s.second)); });
}

Dfao dfao_map(const Dfao& a, const std::function<Symbol(Symbol)>& f)
{
    std::vector<Symbol> out;
    for (Symbol s : a.outputs()) out.push_back(f(s));
    return Dfao(a.base(), a.transitions(), std::move(out), a.initial());
}

Dfao dfao_override(const Dfao& a, std::uint64_t n0, Symbol value)
{
    // Second component: how many digits of n0 matched so far, or -1 once
    // the digits read differ from those of n0 padded with zeros.
    std::vector<std::uint32_t> digits;
    for (std::uint64_t n = n0; n > 0; n /= a.base()) digits.push_back(static_cast<std::uint32_t>(n % a.base()));
    const auto len = static_cast<std::int64_t>(digits.size());
    using Key = std::pair<StateId, std::int64_t>;
    return close_kernel(
        Key{a.initial(), 0}, a.base(),
        [&](const Key& s, std::uint32_t d) {
            std::int64_t matched = s.second;
            if (matched >= 0) {
                const std::uint32_t want = matched < len ? digits[static_cast<std::size_t>(matched)] : 0;
                matched = d == want ? std::min(matched + 1, len) : -1;
            }
            return Key{a.next(s.first, d), matched};
        },
        [&](const Key& s) { return s.second == len ? value : a.output(s.first); });
}

Dfao dfao_to_power_base(const Dfao& m, std::uint32_t j)
{
    if (j == 0) throw DomainError("power must be positive");
    std::uint64_t K = 1;
    for (std::uint32_t i = 0; i < j; ++i) {
        K *= m.base();
        if (K > (1u << 24)) throw DomainError("power base too large");
    }
    std::vector<std::vector<StateId>> delta(m.size(), std::vector<StateId>(K));
    for (StateId s = 0; s < m.size(); ++s)
        for (std::uint64_t D = 0; D < K; ++D) {
            StateId t = s;
            std::uint64_t rest = D;
            for (std::uint32_t i = 0; i < j; ++i, rest /= m.base()) t = m.next(t, static_cast<std::uint32_t>(rest % m.base()));
            delta[s][D] = t;
        }
    return Dfao(static_cast<std::uint32_t>(K), std::move(delta), m.outputs(), m.initial());
}

Dfao dfao_from_power_base(const Dfao& m, std::uint32_t k)
{
    std::uint32_t j = 0;
    std::uint64_t K = 1;
    while (K < m.base()) {
        K *= k;
        ++j;
    }
    if (k < 2 || K != m.base()) throw DomainError("automaton base is not a power of " + std::to_string(k));
    // State: (state of m, partial base-K digit, number of base-k digits in it).
    struct Key {
        StateId s;
        std::uint32_t acc, used;
        auto operator<=>(const Key&) const = default;
    };
    std::vector<std::uint32_t> weight(j, 1);
    for (std::uint32_t i = 1; i < j; ++i) weight[i] = weight[i - 1] * k;
    return close_kernel(
        Key{m.initial(), 0, 0}, k,
        [&](const Key& s, std::uint32_t d) {
            const std::uint32_t acc = s.acc + d * weight[s.used];
            if (s.used + 1 == j) return Key{m.next(s.s, acc), 0, 0};
            return Key{s.s, acc, s.used + 1};
        },
        [&](const Key& s) { return s.used == 0 ? m.output(s.s) : m.output(m.next(s.s, s.acc)); });
}

Dfao ultimately_periodic_dfao(const std::vector<Symbol>& values, std::size_t period, std::uint32_t k)
{
    if (period == 0 || period > values.size()) throw DomainError("period must be in 1..prefix length");
    const std::size_t pre = values.size() - period;
    // A state is a sequence n -> u(n) with the same (pre, period) shape,
    // stored by its first values.size() terms; the kernel map
    // u -> (n -> u(k n + d)) preserves the shape.
    auto at = [pre, period](const std::vector<Symbol>& u, std::size_t n) {
        return n < u.size() ? u[n] : u[pre + (n - pre) % period];
    };
    return close_kernel(
        values, k,
        [&](const std::vector<Symbol>& u, std::uint32_t d) {
            std::vector<Symbol> v(u.size());
            for (std::size_t n = 0; n < v.size(); ++n) v[n] = at(u, k * n + d);
            return v;
        },
        [](const std::vector<Symbol>& u) { return u[0]; });
}

bool KernelProfile::strictly_increasing_from(std::uint32_t from) const
{
    for (std::size_t d = from + 1; d < counts.size(); ++d)
        if (counts[d] <= counts[d - 1]) return false;
    return from < counts.size();
}

KernelProfile kernel_profile(const std::vector<Symbol>& prefix, std::uint32_t k, std::uint32_t depth, std::size_t len)
{
    if (k < 2 || len == 0) throw DomainError("kernel profile needs k >= 2 and len >= 1");
    std::uint64_t kd = 1;
    for (std::uint32_t i = 0; i < depth; ++i) kd *= k;
    if (prefix.size() < len * kd)
        throw DomainError("insufficient prefix: need " + std::to_string(len * kd) + " terms, have " +
                          std::to_string(prefix.size()));
    KernelProfile prof;
    prof.k = k;
    prof.depth = depth;
    prof.length = len;
    std::set<std::vector<Symbol>> seen;
    std::uint64_t ki = 1;
    for (std::uint32_t i = 0; i <= depth; ++i, ki *= k) {
        for (std::uint64_t j = 0; j < ki; ++j) {
            std::vector<Symbol> sub(len);
            for (std::size_t n = 0; n < len; ++n) sub[n] = prefix[n * ki + j];
            seen.insert(std::move(sub));
        }
        prof.counts.push_back(seen.size());
    }
    return prof;
}

} // namespace fexp
