#pragma once

#include <map>
#include <set>
#include <string>

#include "siglog/equiv_store.hpp"
#include "siglog/kb.hpp"
#include "siglog/signature.hpp"

namespace siglog {

/// One answer: the constant bound to each wildcard label, and the matched
/// function.
struct Binding {
  std::map<std::string, std::string> values;
  FunctionKey key;

  auto operator<=>(const Binding&) const = default;
};

using Bindings = std::set<Binding>;

/// Answers a wildcard query by unifying its compiled atoms against the
/// store, one function entity at a time. Constants match only equal
/// constants, UNK matches only UNK, wildcards match anything and must bind
/// consistently. `(?)` accepts any arity, explicit parameters exact arity,
/// and a trailing `...` a minimum arity.
///
/// Throws UnsupportedHead for EquivIn queries.
Bindings answer(const FactStore& store, const Signature& query);

/// Resolves `l N C::EquivIn(f,lang)(...) -> r`: finds the source functions,
/// walks their equivalence classes and binds f', N, C and r for each member
/// in `lang` (compared case-insensitively) that is stored.
///
/// Throws NotEquivHead, or SourceNotFound when no stored function matches
/// the source half.
Bindings answer_equiv(const FactStore& facts, const EquivStore& eqs, const Signature& query);

/// Reference implementation of answer(): rebuilds every stored function's
/// slots from a linear scan of the facts and matches the query slot by
/// slot.
Bindings brute_force_answer(const FactStore& store, const Signature& query);

}  // namespace siglog
