#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qclaw/grading.hpp"
#include "qclaw/seedcore.hpp"

namespace qclaw {

/// A compatible pair loaded from a seed file, with its optional metadata.
struct SeedFile {
    CompatiblePair pair;
    std::vector<std::string> names;  // variable names; empty means x1..xm
    std::optional<GradingVector> grading;
    std::string description;
};

/// Parses the JSON seed schema
///   {"m": int, "n_ex": int, "lambda": [[...]], "b_tilde": [[...]],
///    "names"?: [...], "grading"?: [...], "description"?: "..."}
/// and validates the pair.  Throws ParseError with a located message on
/// malformed input and the check_compatible errors on invalid pairs.
SeedFile parse_seed_json(const std::string& text);
SeedFile load_seed_file(const std::string& path);

/// Serializes back to the schema above (metadata included when present).
std::string seed_to_json(const SeedFile& seed);

}  // namespace qclaw
