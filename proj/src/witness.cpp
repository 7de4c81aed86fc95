#include "fexp/expand.hpp"
#include "fexp/spoly.hpp"

#include <limits>

namespace fexp {


Witness lemma21_witness(const ResidueSystem& gamma)
{
    const BaseContext& ctx = gamma.context();
    const FieldPtr& F = ctx.field();
    PropertyA pa = property_a_check(gamma);
    if (pa.holds) throw DomainError("precondition violated: (Gamma, pi) satisfies condition (ii), so no witness exists");
    if (pa.degree == 0) throw DomainError("precondition violated: " + pa.reason);
    const std::int64_t h = pa.degree;
    const std::int64_t ef = pa.local_degree;

    // theta = z, or 1/z in the vdeg model so that theta lies in A.
    const RatFunc z = RatFunc(Poly::monomial(F, 1));
    const bool inverted = ctx.model() == Model::VDeg;
    auto in_theta = [&](const RatFunc& x) { return inverted ? x.compose(z.inverse()) : x; };
    auto theta_pow = [&](std::int64_t i) { return inverted ? z.pow(-i) : z.pow(i); };

    // Minimal polynomial of theta over F_q(s): N(w) - s D(w), made monic.
    const RatFunc pi_theta = in_theta(ctx.pi().rational());
    const RatFunc s = z;  // the variable of F_q(s) reuses z
    SPoly M(static_cast<std::size_t>(h) + 1, RatFunc(F));
    for (std::int64_t j = 0; j <= h; ++j)
        M[static_cast<std::size_t>(j)] = RatFunc::constant(F, pi_theta.num()[j]) - s * RatFunc::constant(F, pi_theta.den()[j]);
    spoly_trim(M);
    if (static_cast<std::int64_t>(M.size()) != h + 1) throw DomainError("basis construction failed: degree mismatch");
    {
        RatFunc lead_inv = M.back().inverse();
        for (auto& c : M) c = c * lead_inv;
    }

    Witness w{RatFunc(F), {}, 0, 0, {}, {}};
    for (std::int64_t i = 0; i < h; ++i) w.basis.push_back(theta_pow(i));
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<RatFunc> best_coords;
    for (std::size_t g = 0; g < gamma.size(); ++g) {
        const RatFunc gt = in_theta(gamma.reps()[g].rational());
        if (gt.is_zero()) continue;
        const SPoly den_inv = spoly_inverse_mod(spoly_from_constants(gt.den()), M, F);
        SPoly coords = spoly_divmod(spoly_mul(spoly_from_constants(gt.num()), den_inv, F), M, F).second;
        coords.resize(static_cast<std::size_t>(h), RatFunc(F));
        std::int64_t mg = std::numeric_limits<std::int64_t>::max();
        for (const auto& c : coords)
            if (auto v = val_z(c)) mg = std::min(mg, *v);
        if (mg < best) {
            best = mg;
            w.gamma_index = g;
            best_coords = coords;
        }
    }
    if (best_coords.empty()) throw DomainError("basis construction failed: Gamma has no nonzero element");
    w.m = best;
    for (const auto& c : best_coords)
        w.leading.push_back(LaurentStream::from_ratfunc(c, Orientation::Ascending).coeff(w.m));

    // Lambda_{gamma'}: coordinate vectors congruent to gamma' mod pi.
    const Residue target = ctx.reduce(gamma.reps()[w.gamma_index]);
    std::uint64_t total = 1;
    for (std::int64_t i = 0; i < h; ++i) {
        total *= F->q();
        if (total > (1u << 22)) throw DomainError("basis construction failed: q^h too large to enumerate");
    }
    for (std::uint64_t k = 0; k < total; ++k) {
        std::vector<Elem> lambda(static_cast<std::size_t>(h));
        std::uint64_t rem = k;
        for (auto& l : lambda) {
            l = static_cast<Elem>(rem % F->q());
            rem /= F->q();
        }
        if (lambda == w.leading) continue;
        RatFunc x(F);
        for (std::int64_t i = 0; i < h; ++i)
            x = x + w.basis[static_cast<std::size_t>(i)] * RatFunc::constant(F, lambda[static_cast<std::size_t>(i)]);
        if (ctx.reduce(x) != target) continue;
        w.lambda = lambda;
        w.x = x;
        return w;
    }
    throw DomainError("basis construction failed: Lambda has no admissible vector (h=" + std::to_string(h) +
                      ", ef=" + std::to_string(ef) + ")");
}

} // namespace fexp
