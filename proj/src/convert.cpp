#include "fexp/expand.hpp"

namespace fexp {

namespace {

constexpr std::size_t kMaxComponentDegree = 64;

// Gamma2-digits of gamma (from index 0) when its expansion terminates.
std::optional<std::vector<Digit>> terminating_digits(const RatFunc& gamma, const std::shared_ptr<const ResidueSystem>& to)
{
    CarryState state(gamma, to, 0);
    std::vector<Digit> out;
    while (!state.remainder().is_zero()) {
        if (out.size() >= kMaxComponentDegree) return std::nullopt;
        out.push_back(state.step());
    }
    return out;
}

bool all_rational(const ResidueSystem& s)
{
    if (!s.context().pi().is_rational()) return false;
    for (const auto& g : s.reps())
        if (!g.is_rational()) return false;
    return true;
}

std::optional<std::vector<std::vector<Digit>>> components(const ResidueSystem& from, const ResidueSystem& to)
{
    if (!to.span() || to.span()->prime_field || !all_rational(from) || !all_rational(to)) return std::nullopt;
    if (!to.complete() || !property_a_check(to).holds) return std::nullopt;
    auto to_ptr = std::make_shared<const ResidueSystem>(to);
    std::vector<std::vector<Digit>> out;
    for (const auto& g : from.reps()) {
        Valuation v = from.context().valuation(g);
        if (v && *v < 0) return std::nullopt;
        auto d = terminating_digits(g.rational(), to_ptr);
        if (!d) return std::nullopt;
        out.push_back(std::move(*d));
    }
    return out;
}

DigitExpansion naive_convert(const DigitExpansion& d, const ResidueSystem& gamma2)
{
    auto sys = std::make_shared<const ResidueSystem>(gamma2);
    const std::int64_t start = d.start();
    return DigitExpansion(sys, start, [d, sys, start](std::vector<Digit>& out, std::size_t count) {
        const std::size_t target = std::max({count, 2 * out.size(), std::size_t{64}});
        ModelElem s = d.partial_sum(start + static_cast<std::int64_t>(target));
        out = expand(s, *sys, Engine::Auto, start).prefix(target);
    });
}

DigitExpansion recombine(const DigitExpansion& d, const ResidueSystem& gamma2, std::vector<std::vector<Digit>> comps)
{
    auto sys = std::make_shared<const ResidueSystem>(gamma2);
    const FieldPtr& F = gamma2.context().field();
    const std::size_t dim = gamma2.span()->generators.size();
    std::size_t depth = 0;
    for (const auto& c : comps) depth = std::max(depth, c.size());
    auto table = std::make_shared<const std::vector<std::vector<Digit>>>(std::move(comps));
    const std::int64_t start = d.start();
    return DigitExpansion::from_function(sys, start, [d, F, dim, depth, table, start](std::int64_t n) {
        const Elem q = F->q();
        std::vector<Elem> b(dim, 0);
        for (std::size_t k = 0; k < depth && n - static_cast<std::int64_t>(k) >= start; ++k) {
            const auto& comp = (*table)[d.digit(n - static_cast<std::int64_t>(k))];
            if (k >= comp.size()) continue;
            Digit c = comp[k];
            for (std::size_t i = 0; i < dim; ++i, c /= q) b[i] = F->add(b[i], c % q);
        }
        Digit idx = 0;
        for (std::size_t i = dim; i-- > 0;) idx = idx * q + b[i];
        return idx;
    });
}

} // namespace

bool recombination_applies(const ResidueSystem& from, const ResidueSystem& to)
{
    return components(from, to).has_value();
}

DigitExpansion convert_expansion(const DigitExpansion& d, const ResidueSystem& gamma2, ConvertRoute route)
{
    if (!gamma2.complete()) throw DomainError("target residue system is not complete");
    if (route == ConvertRoute::Naive) return naive_convert(d, gamma2);
    auto comps = components(d.system(), gamma2);
    if (!comps) {
        if (route == ConvertRoute::Recombine)
            throw DomainError("recombination needs an F_q-span target and digits with polynomial components");
        return naive_convert(d, gamma2);
    }
    return recombine(d, gamma2, std::move(*comps));
}

DigitExpansion twist_expansion(const DigitExpansion& d, std::int64_t L)
{
    auto sys = std::make_shared<const ResidueSystem>(twist_system(d.system(), L));
    return DigitExpansion::from_function(sys, d.start(), [d](std::int64_t n) { return d.digit(n); });
}

} // namespace fexp
