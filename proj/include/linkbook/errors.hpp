#pragma once

#include <stdexcept>
#include <string>

namespace linkbook {

/// Malformed input text (JSON syntax, schema violations).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structurally well-formed input that breaks a model invariant
/// (strand-count bookkeeping, open endpoints, sign consistency, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix / page dimension mismatch.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// decode_book hit a page holding more than one chord; split it first.
struct MultiChordPage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace linkbook
