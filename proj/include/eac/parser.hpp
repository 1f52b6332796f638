// Parser for the document language: integers, rationals a/b, variables
// x<k> / y<k>, operators + - * ^, parentheses, and the pair/config block
// structure. Errors carry line and column.
#pragma once

#include <string>

#include "eac/documents.hpp"

namespace eac {

/// Parses a whole document (UTF-8 text). Throws ParseError on lexical,
/// syntactic or semantic problems.
Document parse_document(const std::string& text);

/// Parses a single polynomial over the given ring; `letter` is the
/// variable prefix the expression may use ('x' or 'y'). Exposed for
/// tests and the subset-spec flags of the CLI.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, char letter);

} // namespace eac
