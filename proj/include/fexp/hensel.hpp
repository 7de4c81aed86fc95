#pragma once

#include "fexp/bipoly.hpp"
#include "fexp/stream.hpp"

#include <string>
#include <vector>

namespace fexp {

/// A root branch of R(z, w) = 0 in F_q((t)), named by a finite prefix.
/// The prefix is known exactly for indices < seed_precision.
struct AlgebraicSpec {
    BiPoly R;
    Orientation orient = Orientation::Ascending;
    std::int64_t seed_start = 0;
    std::vector<Elem> seed;
    std::int64_t seed_precision = 1;

    const FieldPtr& field() const { return R.field(); }
};

/// Seed text is either a series literal `[m; c_m, ...]` or an expression
/// that is a Laurent polynomial in t; in the latter case the seed is
/// known through its last nonzero term (index 0 for the zero seed).
AlgebraicSpec make_spec(const std::string& R, const std::string& seed, Orientation o, const FieldPtr& F);

/// Parses `{"R": "...", "seed": "...", "model": "vz" | "vdeg"}`.
AlgebraicSpec parse_spec_json(const std::string& json_text, const FieldPtr& F);
std::string spec_to_json(const AlgebraicSpec& spec);

/// Spec for the rational x: R = D(z) w - N(z), seed from x's expansion.
AlgebraicSpec spec_from_ratfunc(const RatFunc& x, Orientation o);

/// Newton lifting of the seeded branch.  The returned stream refines its
/// own precision on demand (doubling), so any coefficient may be queried;
/// `initial_precision` coefficients (indices below it) are computed eagerly
/// to surface seed errors early.
LaurentStream hensel_root(const AlgebraicSpec& spec, std::int64_t initial_precision = 64);

/// R(z, f) as a stream for a stream f in the spec's orientation.
LaurentStream eval_bipoly(const BiPoly& R, const LaurentStream& f);

} // namespace fexp
