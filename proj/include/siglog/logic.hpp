#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "siglog/signature.hpp"

namespace siglog {

enum class Predicate {
  fun,
  eq,
  lang,
  type,
  var,
  has_param,
  namespace_,
  in_namespace,
  class_,
  in_class,
};

std::string_view predicate_name(Predicate p);
std::size_t predicate_arity(Predicate p);
std::optional<Predicate> parse_predicate(std::string_view name);

/// Variable. Wildcard variables come from `label?` query slots and print
/// with the trailing `?`, so they never collide with the fixed names
/// x1..xn, v, f, n, c.
struct Var {
  std::string name;
  bool wildcard = false;

  auto operator<=>(const Var&) const = default;
};

struct Constant {
  std::string token;

  auto operator<=>(const Constant&) const = default;
};

enum class SkolemKind { function, ret, param, namespace_, class_ };

/// Witness constant standing in for an existential entity in stored facts.
struct Skolem {
  SkolemKind kind = SkolemKind::function;
  std::string id;

  auto operator<=>(const Skolem&) const = default;
};

struct Term;

/// Applied term `name(x1,...,xn)`. The head is the function-name constant,
/// or a wildcard variable in queries. `open` marks an argument list that is
/// only a prefix: the pattern accepts any further arguments.
struct App {
  std::variant<Constant, Var> head;
  std::vector<Term> args;
  bool open = false;

  bool operator==(const App& other) const;
  std::strong_ordering operator<=>(const App& other) const;
};

struct Term {
  std::variant<Var, Constant, Skolem, App> node;

  bool is_var() const { return std::holds_alternative<Var>(node); }
  bool is_constant() const { return std::holds_alternative<Constant>(node); }
  bool is_skolem() const { return std::holds_alternative<Skolem>(node); }
  bool is_app() const { return std::holds_alternative<App>(node); }
  bool is_ground() const;

  bool operator==(const Term& other) const = default;
  std::strong_ordering operator<=>(const Term& other) const;
};

Term var_term(std::string name);
Term wildcard_term(std::string label);
Term const_term(std::string token);
Term skolem_term(SkolemKind kind, std::string id);

struct Atom {
  Predicate pred = Predicate::fun;
  std::vector<Term> args;

  bool operator==(const Atom& other) const = default;
  std::strong_ordering operator<=>(const Atom& other) const;
};

/// Prenex formula `lam x1 ... ex v ... . a1 & a2 & ...`.
struct Formula {
  std::vector<Var> lambdas;
  std::vector<Var> existentials;
  std::vector<Atom> atoms;

  /// True when the parameter list is unconstrained in length: the eq
  /// atom's applied term is open.
  bool arity_open() const;

  bool operator==(const Formula& other) const = default;
};

/// Fixed variable names used by compile().
namespace vars {
inline const Var ret{"v", false};
inline const Var function{"f", false};
inline const Var namespace_{"n", false};
inline const Var class_{"c", false};
Var param(std::size_t position);
}  // namespace vars

/// Translates a Plain-headed signature into its formula. Throws
/// UnsupportedHead for EquivIn signatures.
Formula compile(const Signature& sig);

/// Substitutes `args` for the lambda prefix. Throws ArityMismatch.
Formula beta_apply(const Formula& formula, const std::vector<std::string>& args);

/// Equality up to consistent renaming of bound variables. Binders are
/// matched positionally and atom order is significant.
bool alpha_eq(const Formula& a, const Formula& b);

struct EquivExpansion {
  Formula base;
  Signature target_pattern;
  Atom link;
};

/// Splits `l N C::EquivIn(f,lang)(...) -> r` into the source formula, the
/// pattern `lang N? C?::f'?(?) -> r?` and the link `eq(f,f'?)`.
/// Throws NotEquivHead.
EquivExpansion expand_equiv(const Signature& sig);

/// First problem found in `f` (bad arity, unbound variable, misplaced App,
/// duplicate binder), or nullopt when well-formed.
std::optional<std::string> validate_formula(const Formula& f);

std::string print_term(const Term& t);
std::string print_atom(const Atom& a);
std::string print_formula(const Formula& f);

}  // namespace siglog
