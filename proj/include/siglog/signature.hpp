#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace siglog {

/// Characters allowed in constant tokens and wildcard labels.
bool is_token_char(char c);
bool is_valid_token(std::string_view text);

/// The token the printer uses for unknown slots.
inline constexpr std::string_view kUnkToken = "UNK";

/// One slot of a signature: a constant token, the unknown marker, or a
/// labelled query wildcard. `Const("UNK")` is not representable; the token
/// `UNK` always denotes the unknown marker.
class SlotValue {
 public:
  struct Const {
    std::string token;
    auto operator<=>(const Const&) const = default;
  };
  struct Unk {
    auto operator<=>(const Unk&) const = default;
  };
  struct Wildcard {
    std::string label;
    auto operator<=>(const Wildcard&) const = default;
  };

  SlotValue() : value_(Unk{}) {}

  static SlotValue constant(std::string token);
  static SlotValue unknown() { return SlotValue(Unk{}); }
  static SlotValue wildcard(std::string label);

  bool is_const() const { return std::holds_alternative<Const>(value_); }
  bool is_unk() const { return std::holds_alternative<Unk>(value_); }
  bool is_wildcard() const { return std::holds_alternative<Wildcard>(value_); }

  /// Token of a Const slot. Precondition: is_const().
  const std::string& token() const { return std::get<Const>(value_).token; }
  /// Label of a Wildcard slot. Precondition: is_wildcard().
  const std::string& label() const { return std::get<Wildcard>(value_).label; }

  /// Token for a ground slot: the constant, or `UNK`. Precondition: not a
  /// wildcard.
  std::string ground_token() const;

  /// Concrete-syntax rendering: `tok`, `UNK` or `label?`.
  std::string text() const;

  auto operator<=>(const SlotValue&) const = default;

 private:
  template <typename T>
  explicit SlotValue(T v) : value_(std::move(v)) {}

  std::variant<Const, Unk, Wildcard> value_;
};

struct Param {
  SlotValue type;
  SlotValue name;
  std::size_t position = 1;

  auto operator<=>(const Param&) const = default;
};

/// Function name position: a plain slot, or the EquivIn meta-function naming
/// a source function and a target language.
class FunctionHead {
 public:
  struct Plain {
    SlotValue name;
    auto operator<=>(const Plain&) const = default;
  };
  struct EquivIn {
    std::string base_name;
    std::string target_lang;
    auto operator<=>(const EquivIn&) const = default;
  };

  FunctionHead() : value_(Plain{}) {}

  static FunctionHead plain(SlotValue name) { return FunctionHead(Plain{std::move(name)}); }
  static FunctionHead equiv_in(std::string base_name, std::string target_lang);

  bool is_plain() const { return std::holds_alternative<Plain>(value_); }
  bool is_equiv_in() const { return std::holds_alternative<EquivIn>(value_); }
  const SlotValue& name() const { return std::get<Plain>(value_).name; }
  const EquivIn& equiv_in() const { return std::get<EquivIn>(value_); }

  auto operator<=>(const FunctionHead&) const = default;

 private:
  template <typename T>
  explicit FunctionHead(T v) : value_(std::move(v)) {}

  std::variant<Plain, EquivIn> value_;
};

/// Normalized function signature `l N C::f(t1:p1,...,tn:pn) -> r`.
struct Signature {
  SlotValue lang;
  SlotValue namespace_;
  SlotValue class_name;
  FunctionHead head;
  std::vector<Param> params;
  bool params_wildcard = false;  // parameter list is the single token `?`
  bool vararg = false;           // list ends with `...`
  SlotValue ret;

  auto operator<=>(const Signature&) const = default;
};

/// Throws InvalidSignature if `sig` breaks a structural invariant.
void check_signature(const Signature& sig);

/// Builds the params vector with contiguous positions.
std::vector<Param> make_params(std::vector<std::pair<SlotValue, SlotValue>> typed_names);

bool is_ground(const Signature& sig);

/// Identity of a concrete stored function.
struct FunctionKey {
  std::string lang;
  std::string namespace_;
  std::string class_name;
  std::string name;
  std::size_t arity = 0;

  auto operator<=>(const FunctionKey&) const = default;
};

/// Throws NotGround.
FunctionKey function_key(const Signature& sig);

/// `lang|namespace|class|name|arity`
std::string serialize_key(const FunctionKey& key);
/// Inverse of serialize_key; throws Error on malformed input.
FunctionKey parse_key(std::string_view text);

}  // namespace siglog

template <>
struct std::hash<siglog::FunctionKey> {
  std::size_t operator()(const siglog::FunctionKey& k) const noexcept {
    return std::hash<std::string>{}(siglog::serialize_key(k));
  }
};
