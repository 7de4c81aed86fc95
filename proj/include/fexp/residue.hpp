#pragma once

#include "fexp/stream.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fexp {

/// The three completions of F_q(z) that are modelled concretely.
enum class Model { VZ, VP, VDeg };

std::string model_name(Model m);
Model parse_model(const std::string& name);

/// An element of K_v: either an exact rational function or a lazy series
/// in the model's local parameter (VZ and VDeg only).
class ModelElem {
public:
    ModelElem(RatFunc x) : v_(std::move(x)) {}
    ModelElem(LaurentStream s) : v_(std::move(s)) {}

    bool is_rational() const { return std::holds_alternative<RatFunc>(v_); }
    const RatFunc& rational() const { return std::get<RatFunc>(v_); }
    /// Series image in the completion with orientation `o`.
    LaurentStream stream(Orientation o) const;
    /// Orientation of a series element; nullopt for rational ones.
    std::optional<Orientation> orientation() const;
    const FieldPtr& field() const;

    std::string to_string(std::int64_t precision = 16) const;

private:
    std::variant<RatFunc, LaurentStream> v_;
};

ModelElem operator+(const ModelElem& a, const ModelElem& b);
ModelElem operator-(const ModelElem& a, const ModelElem& b);
ModelElem operator*(const ModelElem& a, const ModelElem& b);

/// Coordinates of an element modulo pi A_v: e*f elements of F_q.
using Residue = std::vector<Elem>;

/// (K_v, pi) with the derived e = v(pi), f and r = q^{ef}.
class BaseContext {
public:
    /// `P` is required (and must be irreducible) for Model::VP.
    BaseContext(FieldPtr F, Model model, ModelElem pi, std::optional<Poly> P = std::nullopt);

    const FieldPtr& field() const { return F_; }
    Model model() const { return model_; }
    const ModelElem& pi() const { return pi_; }
    /// The prime: z for VZ, P for VP, 1/z (as z) for VDeg.
    const Poly& prime() const { return P_; }
    std::int64_t e() const { return e_; }
    std::int64_t f() const { return f_; }
    std::uint64_t r() const { return r_; }
    /// Local-parameter orientation (VZ and VDeg only).
    Orientation orientation() const;

    /// v(x) in this model; nullopt for zero.  Lazy series are scanned to
    /// `depth` coefficients and reported as zero beyond it.
    Valuation valuation(const ModelElem& x, std::int64_t depth = kDefaultZeroScan) const;
    /// Canonical form of x mod pi A_v; requires v(x) >= 0.
    Residue reduce(const ModelElem& x) const;
    /// Residue coordinates as an element of F_q[z] (VZ, VP) or F_q[1/z] (VDeg).
    RatFunc residue_value(const Residue& r) const;

    std::string describe() const;

private:
    FieldPtr F_;
    Model model_;
    ModelElem pi_;
    Poly P_;
    std::int64_t e_ = 0, f_ = 1;
    std::uint64_t r_ = 0;
    Poly Pe_;  // P^e for VP
};

/// Linear-span data kept alongside span systems: generators and whether
/// the coefficients range over F_q or only its prime field.
struct SpanData {
    std::vector<ModelElem> generators;
    bool prime_field = false;
};

/// A finite list Gamma of representatives mod pi; digits are indices
/// into reps().
class ResidueSystem {
public:
    ResidueSystem(BaseContext ctx, std::vector<ModelElem> reps, std::optional<SpanData> span = std::nullopt);

    const BaseContext& context() const { return ctx_; }
    const std::vector<ModelElem>& reps() const { return reps_; }
    std::size_t size() const { return reps_.size(); }
    const std::optional<SpanData>& span() const { return span_; }
    /// True iff |reps| = r and reductions are pairwise distinct.
    bool complete() const { return complete_; }
    /// Index of the representative congruent to a residue; nullopt if none.
    std::optional<std::size_t> index_of(const Residue& r) const;
    /// Index of the representative equal to 0, if present.
    std::optional<std::size_t> zero_index() const;

private:
    BaseContext ctx_;
    std::vector<ModelElem> reps_;
    std::optional<SpanData> span_;
    std::map<Residue, std::size_t> lookup_;
    bool complete_ = false;
};

Residue reduce_mod_pi(const ModelElem& x, const BaseContext& ctx);
bool check_complete(const std::vector<ModelElem>& reps, const BaseContext& ctx);

/// Closure of a set of rational functions under pairwise addition.
bool is_additively_closed(const std::vector<RatFunc>& reps);
/// F_p-span of the given elements (enumerated, so the span must be small).
std::vector<RatFunc> fp_span(const std::vector<RatFunc>& elems, std::size_t limit = 1u << 20);

/// span{alpha_1..alpha_u} over F_q, or over F_p when `prime_field`; the
/// first generator's coefficient varies fastest.
ResidueSystem span_system(const std::vector<ModelElem>& generators, const BaseContext& ctx, bool prime_field = false);
/// (1 - pi^L) Gamma, index-aligned with Gamma.
ResidueSystem twist_system(const ResidueSystem& gamma, std::int64_t L);
/// Gamma + xi, index-aligned with Gamma.
ResidueSystem shift_system(const ResidueSystem& gamma, const ModelElem& xi);

} // namespace fexp
