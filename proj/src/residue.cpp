#include "fexp/residue.hpp"

#include <algorithm>
#include <unordered_set>

namespace fexp {

std::string model_name(Model m)
{
    switch (m) {
    case Model::VZ: return "vz";
    case Model::VP: return "vp";
    case Model::VDeg: return "vdeg";
    }
    return "?";
}

Model parse_model(const std::string& name)
{
    if (name == "vz") return Model::VZ;
    if (name == "vp") return Model::VP;
    if (name == "vdeg") return Model::VDeg;
    throw DomainError("unknown model '" + name + "' (expected vz, vp or vdeg)");
}

LaurentStream ModelElem::stream(Orientation o) const
{
    if (is_rational()) return LaurentStream::from_ratfunc(rational(), o);
    const auto& s = std::get<LaurentStream>(v_);
    if (s.orientation() != o) throw DomainError("series element lives in the other completion");
    return s;
}

std::optional<Orientation> ModelElem::orientation() const
{
    if (is_rational()) return std::nullopt;
    return std::get<LaurentStream>(v_).orientation();
}

const FieldPtr& ModelElem::field() const
{
    return is_rational() ? rational().field() : std::get<LaurentStream>(v_).field();
}

std::string ModelElem::to_string(std::int64_t precision) const
{
    if (is_rational()) return rational().to_string();
    const auto& s = std::get<LaurentStream>(v_);
    return s.to_string(s.start() + precision - 1);
}

namespace {

template <class Op>
ModelElem combine(const ModelElem& a, const ModelElem& b, Op op)
{
    if (a.is_rational() && b.is_rational()) return ModelElem(op(a.rational(), b.rational()));
    Orientation o = a.is_rational() ? *b.orientation() : *a.orientation();
    return ModelElem(op(a.stream(o), b.stream(o)));
}

} // namespace

ModelElem operator+(const ModelElem& a, const ModelElem& b)
{
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

ModelElem operator-(const ModelElem& a, const ModelElem& b)
{
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

ModelElem operator*(const ModelElem& a, const ModelElem& b)
{
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

BaseContext::BaseContext(FieldPtr F, Model model, ModelElem pi, std::optional<Poly> P)
    : F_(std::move(F)), model_(model), pi_(std::move(pi)), P_(Poly::monomial(F_, 1)), Pe_(F_)
{
    if (model_ == Model::VP) {
        if (!P) throw DomainError("the vp model needs an irreducible P");
        if (!is_irreducible(*P)) throw DomainError("P = " + P->to_string() + " is reducible");
        P_ = P->monic();
        f_ = P_.degree();
        if (!pi_.is_rational()) throw DomainError("the vp model supports rational pi only");
    }
    Valuation v = valuation(pi_);
    if (!v || *v <= 0) throw DomainError("pi must have positive valuation, got v(pi) = " + (v ? std::to_string(*v) : "inf"));
    e_ = *v;
    if (model_ == Model::VP) Pe_ = P_.pow(e_);
    std::uint64_t r = 1;
    for (std::int64_t i = 0; i < e_ * f_; ++i) {
        r *= F_->q();
        if (r > (std::uint64_t{1} << 32)) throw DomainError("residue field too large: q^(ef) exceeds 2^32");
    }
    r_ = r;
}

Orientation BaseContext::orientation() const
{
    if (model_ == Model::VP) throw DomainError("the vp model has no series orientation");
    return model_ == Model::VZ ? Orientation::Ascending : Orientation::Descending;
}

Valuation BaseContext::valuation(const ModelElem& x, std::int64_t depth) const
{
    if (x.is_rational()) {
        switch (model_) {
        case Model::VZ: return val_z(x.rational());
        case Model::VDeg: return val_deg(x.rational());
        case Model::VP: return val_p(x.rational(), P_);
        }
    }
    if (model_ == Model::VP) throw DomainError("series elements are not supported in the vp model");
    return x.stream(orientation()).find_valuation(depth);
}

Residue BaseContext::reduce(const ModelElem& x) const
{
    const std::size_t n = static_cast<std::size_t>(e_ * f_);
    if (model_ == Model::VP) {
        if (!x.is_rational()) throw DomainError("series elements are not supported in the vp model");
        const RatFunc& r = x.rational();
        Valuation v = val_p(r, P_);
        if (v && *v < 0) throw DomainError("cannot reduce an element of negative valuation " + std::to_string(*v));
        Residue out(n, 0);
        if (!v) return out;
        Poly red = (r.num() * inverse_mod(r.den(), Pe_)) % Pe_;
        for (std::size_t i = 0; i < n; ++i) out[i] = red[static_cast<std::int64_t>(i)];
        return out;
    }
    LaurentStream s = x.stream(orientation());
    for (std::int64_t k = s.start(); k < 0; ++k)
        if (s.coeff(k) != 0) throw DomainError("cannot reduce an element of negative valuation " + std::to_string(k));
    return s.coeffs(0, e_);
}

RatFunc BaseContext::residue_value(const Residue& r) const
{
    Poly p(F_, r);
    if (model_ == Model::VDeg) return t_poly_to_ratfunc(p, Orientation::Descending);
    return RatFunc(p);
}

std::string BaseContext::describe() const
{
    std::string s = "model=" + model_name(model_);
    if (model_ == Model::VP) s += " P=" + P_.to_string();
    s += " pi=" + pi_.to_string() + " q=" + std::to_string(F_->q()) + " e=" + std::to_string(e_) +
         " f=" + std::to_string(f_) + " r=" + std::to_string(r_);
    return s;
}

ResidueSystem::ResidueSystem(BaseContext ctx, std::vector<ModelElem> reps, std::optional<SpanData> span)
    : ctx_(std::move(ctx)), reps_(std::move(reps)), span_(std::move(span))
{
    bool distinct = true;
    for (std::size_t i = 0; i < reps_.size(); ++i) {
        auto [it, inserted] = lookup_.emplace(ctx_.reduce(reps_[i]), i);
        distinct = distinct && inserted;
    }
    complete_ = distinct && reps_.size() == ctx_.r();
}

std::optional<std::size_t> ResidueSystem::index_of(const Residue& r) const
{
    auto it = lookup_.find(r);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> ResidueSystem::zero_index() const
{
    for (std::size_t i = 0; i < reps_.size(); ++i) {
        const ModelElem& g = reps_[i];
        if (g.is_rational() ? g.rational().is_zero() : !ctx_.valuation(g).has_value()) return i;
    }
    return std::nullopt;
}

Residue reduce_mod_pi(const ModelElem& x, const BaseContext& ctx) { return ctx.reduce(x); }

bool check_complete(const std::vector<ModelElem>& reps, const BaseContext& ctx)
{
    if (reps.size() != ctx.r()) return false;
    std::map<Residue, int> seen;
    for (const auto& g : reps)
        if (!seen.emplace(ctx.reduce(g), 0).second) return false;
    return true;
}

bool is_additively_closed(const std::vector<RatFunc>& reps)
{
    if (reps.empty()) return false;
    std::unordered_set<RatFunc, RatFuncHash> set(reps.begin(), reps.end());
    for (const auto& a : set)
        for (const auto& b : set)
            if (!set.count(a + b)) return false;
    return true;
}

std::vector<RatFunc> fp_span(const std::vector<RatFunc>& elems, std::size_t limit)
{
    if (elems.empty()) throw DomainError("span of an empty family");
    const FieldPtr& F = elems.front().field();
    std::vector<RatFunc> span{RatFunc(F)};
    std::unordered_set<RatFunc, RatFuncHash> members{RatFunc(F)};
    for (const auto& x : elems) {
        if (members.count(x)) continue;
        std::vector<RatFunc> next;
        for (std::uint32_t c = 0; c < F->p(); ++c) {
            RatFunc cx = x * RatFunc::constant(F, F->from_int(c));
            for (const auto& s : span) next.push_back(s + cx);
        }
        if (next.size() > limit) throw DomainError("span too large to enumerate");
        span = std::move(next);
        members.insert(span.begin(), span.end());
    }
    return span;
}

ResidueSystem span_system(const std::vector<ModelElem>& generators, const BaseContext& ctx, bool prime_field)
{
    if (generators.empty()) throw DomainError("span_system needs at least one generator");
    const FieldPtr& F = ctx.field();
    const std::uint64_t base = prime_field ? F->p() : F->q();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        count *= base;
        if (count > ctx.r()) break;
    }
    if (count != ctx.r())
        throw DomainError("span of " + std::to_string(generators.size()) + " generators has the wrong size for r = " +
                          std::to_string(ctx.r()));

    std::vector<ModelElem> reps;
    reps.reserve(count);
    std::vector<Elem> digits(generators.size(), 0);
    for (std::uint64_t k = 0; k < count; ++k) {
        std::uint64_t rem = k;
        for (auto& d : digits) {
            d = static_cast<Elem>(rem % base);
            rem /= base;
        }
        std::optional<ModelElem> acc;
        for (std::size_t i = 0; i < generators.size(); ++i) {
            if (digits[i] == 0) continue;
            ModelElem term = generators[i] * ModelElem(RatFunc::constant(F, digits[i]));
            acc = acc ? *acc + term : term;
        }
        reps.push_back(acc ? *acc : ModelElem(RatFunc(F)));
    }
    ResidueSystem sys(ctx, std::move(reps), SpanData{generators, prime_field});
    if (!sys.complete()) throw DomainError("dependent generators: their span is not a complete residue system");
    return sys;
}

namespace {

ModelElem twist_factor(const BaseContext& ctx, std::int64_t L)
{
    const FieldPtr& F = ctx.field();
    const ModelElem& pi = ctx.pi();
    if (pi.is_rational()) return ModelElem(RatFunc::constant(F, 1) - pi.rational().pow(L));
    LaurentStream s = pi.stream(ctx.orientation());
    return ModelElem(LaurentStream::finite(F, s.orientation(), 0, {1}) - power(s, static_cast<std::uint64_t>(L)));
}

} // namespace

ResidueSystem twist_system(const ResidueSystem& gamma, std::int64_t L)
{
    if (L <= 0) throw DomainError("twist needs L > 0");
    ModelElem factor = twist_factor(gamma.context(), L);
    std::vector<ModelElem> reps;
    for (const auto& g : gamma.reps()) reps.push_back(factor * g);
    std::optional<SpanData> span;
    if (gamma.span()) {
        span = SpanData{{}, gamma.span()->prime_field};
        for (const auto& a : gamma.span()->generators) span->generators.push_back(factor * a);
    }
    return ResidueSystem(gamma.context(), std::move(reps), std::move(span));
}

ResidueSystem shift_system(const ResidueSystem& gamma, const ModelElem& xi)
{
    Valuation v = gamma.context().valuation(xi);
    if (v && *v < 0) throw DomainError("shift element must have nonnegative valuation");
    std::vector<ModelElem> reps;
    for (const auto& g : gamma.reps()) reps.push_back(g + xi);
    return ResidueSystem(gamma.context(), std::move(reps));
}

} // namespace fexp
