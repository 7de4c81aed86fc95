#pragma once

#include "fexp/expand.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fexp {

/// Residue system file:
///
///   {"field": {"p", "m"}, "context": {"model", "pi", "P"?},
///    "reps": [literal, ...], "span"?: {"generators": [...], "prime_field"}}
///
/// Only systems with rational pi and representatives serialize.
std::string system_to_json(const ResidueSystem& gamma);
ResidueSystem system_from_json(const std::string& text, const FieldPtr& F);

/// Expansion file: {"system": ..., "start": m, "digits": [index, ...],
/// "values": [literal, ...]} holding the first `count` digits.
std::string expansion_to_json(const DigitExpansion& d, std::size_t count);

struct ExpansionFile {
    std::shared_ptr<const ResidueSystem> system;
    std::int64_t start = 0;
    std::vector<Digit> digits;
};
ExpansionFile expansion_from_json(const std::string& text, const FieldPtr& F);

std::string certificate_to_json(const PeriodCertificate& cert);
PeriodCertificate certificate_from_json(const std::string& text);

} // namespace fexp
