// errors.hpp : exception hierarchy shared by all strata-atlas modules.
//
// Every error raised by the library derives from StrataError, so CLI code can
// catch one type and map it to an exit code.  The distinction that matters in
// practice:
//
//   * ParseError / ValidationError  — bad user input (CLI exit code 2),
//   * ClosureError / DegenerateDiagramError / InconsistencyError — the engine
//     detected an internal contradiction; these are never swallowed because
//     they indicate a bug in the combinatorics, not a bad input.
#pragma once

#include <stdexcept>
#include <string>

namespace strata {

struct StrataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed signature text (grammar-level failure).
struct ParseError : StrataError {
    using StrataError::StrataError;
};

// Well-formed but mathematically inadmissible data: degree mismatch, angle out
// of range, lone-simple-pole residue block, non-canonical boundary data, ...
struct ValidationError : StrataError {
    using StrataError::StrataError;
};

// A family/operation combination that is intentionally unsupported
// (E-signature, non-one-dimensional strata).
struct UnsupportedFamilyError : StrataError {
    using StrataError::StrataError;
};

// A U move produced a boundary point outside the enumerated vertex set of the
// net under construction.  This would falsify the enumeration and must abort.
struct ClosureError : StrataError {
    using StrataError::StrataError;
};

// Contraction was asked to shrink an edge class that does not form a valid
// principal degeneration.  Unreachable from plumb() outputs.
struct DegenerateDiagramError : StrataError {
    using StrataError::StrataError;
};

// An invariant that must be constant on a connected component took two
// different values.  Signals an engine bug.
struct InconsistencyError : StrataError {
    using StrataError::StrataError;
};

} // namespace strata
