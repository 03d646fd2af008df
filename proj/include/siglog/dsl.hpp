#pragma once

#include <string>
#include <string_view>

#include "siglog/signature.hpp"

namespace siglog {

// Concrete syntax of normalized signatures:
//
//   signature = lang WS ns WS cls "::" head "(" paramspec ")" " -> " slot
//   head      = slot | "EquivIn(" token "," token ")"
//   paramspec = "?" | [ param { "," param } [ ",..." ] ] | "..."
//   param     = slot ":" slot
//   slot      = token | ident "?" | "UNK"
//
// Whitespace between lexemes is ignored; `lang`, `ns` and `cls` must be
// separated by at least one space or tab.

/// Throws ParseError, or MixedWildcardParams when `?` is combined with
/// explicit parameters.
Signature parse_signature(std::string_view text);

/// Canonical text. parse_signature(print_signature(s)) == s.
std::string print_signature(const Signature& sig);

}  // namespace siglog
