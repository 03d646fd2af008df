#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "siglog/signature.hpp"

namespace siglog {

/// Raw signature styles accepted by normalize().
///
///   java        `[namespace] [class] rettype name(type name, ...)`
///   python      `[module] [class] name(arg arg ...)`  (commas also accepted)
///   php         `rettype name(type $name, ..)`
///   normalized  the canonical DSL, passed through parse_signature
enum class Dialect { java, python, php, normalized };

std::optional<Dialect> parse_dialect(std::string_view name);
std::string_view dialect_name(Dialect d);

/// Lowercased language tag.
std::string canonical_lang(std::string_view tag);

/// Converts a raw signature into a ground normalized Signature. Missing
/// namespace becomes `core`, missing class `builtin`, missing types and
/// return become UNK. The language tag is lowercased.
///
/// Throws DialectParseError on malformed input and NotGroundAfterNormalize if
/// the text uses wildcard syntax.
Signature normalize(std::string_view raw, Dialect dialect, std::string_view lang_tag);

/// Lowercases a constant language slot and the EquivIn target language so a
/// query lines up with normalized stored data.
Signature canonicalize_query(Signature query);

}  // namespace siglog
