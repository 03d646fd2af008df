#include "siglog/signature.hpp"

#include <charconv>

#include "siglog/errors.hpp"

namespace siglog {

bool is_token_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-' ||
         c == '$' || c == '\'';
}

bool is_valid_token(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text)
    if (!is_token_char(c)) return false;
  return true;
}

SlotValue SlotValue::constant(std::string token) {
  if (!is_valid_token(token))
    throw InvalidSignature("invalid constant token '" + token + "'");
  if (token == kUnkToken)
    throw InvalidSignature("the token UNK denotes the unknown slot, not a constant");
  return SlotValue(Const{std::move(token)});
}

SlotValue SlotValue::wildcard(std::string label) {
  if (!is_valid_token(label))
    throw InvalidSignature("invalid wildcard label '" + label + "'");
  return SlotValue(Wildcard{std::move(label)});
}

std::string SlotValue::ground_token() const {
  if (is_const()) return token();
  if (is_unk()) return std::string(kUnkToken);
  throw NotGround("wildcard slot '" + label() + "?' has no ground token");
}

std::string SlotValue::text() const {
  if (is_const()) return token();
  if (is_unk()) return std::string(kUnkToken);
  return label() + "?";
}

FunctionHead FunctionHead::equiv_in(std::string base_name, std::string target_lang) {
  if (!is_valid_token(base_name))
    throw InvalidSignature("invalid EquivIn function name '" + base_name + "'");
  if (!is_valid_token(target_lang))
    throw InvalidSignature("invalid EquivIn target language '" + target_lang + "'");
  return FunctionHead(EquivIn{std::move(base_name), std::move(target_lang)});
}

void check_signature(const Signature& sig) {
  if (sig.params_wildcard && (!sig.params.empty() || sig.vararg))
    throw InvalidSignature("a wildcard parameter list cannot have explicit parameters");
  for (std::size_t i = 0; i < sig.params.size(); ++i)
    if (sig.params[i].position != i + 1)
      throw InvalidSignature("parameter positions must be contiguous from 1");
  if (sig.head.is_equiv_in() && !sig.lang.is_const())
    throw InvalidSignature("an EquivIn signature needs a constant source language");
  if (sig.head.is_plain() && sig.head.name().is_const() &&
      sig.head.name().token() == "EquivIn")
    throw InvalidSignature("EquivIn is reserved as a function name");
}

std::vector<Param> make_params(std::vector<std::pair<SlotValue, SlotValue>> typed_names) {
  std::vector<Param> out;
  out.reserve(typed_names.size());
  for (auto& [type, name] : typed_names)
    out.push_back(Param{std::move(type), std::move(name), out.size() + 1});
  return out;
}

bool is_ground(const Signature& sig) {
  if (sig.params_wildcard || !sig.head.is_plain()) return false;
  if (sig.lang.is_wildcard() || sig.namespace_.is_wildcard() ||
      sig.class_name.is_wildcard() || sig.ret.is_wildcard() ||
      sig.head.name().is_wildcard())
    return false;
  for (const auto& p : sig.params)
    if (p.type.is_wildcard() || p.name.is_wildcard()) return false;
  return true;
}

FunctionKey function_key(const Signature& sig) {
  if (!is_ground(sig)) throw NotGround("signature is not ground");
  return FunctionKey{sig.lang.ground_token(), sig.namespace_.ground_token(),
                     sig.class_name.ground_token(), sig.head.name().ground_token(),
                     sig.params.size()};
}

std::string serialize_key(const FunctionKey& key) {
  return key.lang + "|" + key.namespace_ + "|" + key.class_name + "|" + key.name +
         "|" + std::to_string(key.arity);
}

FunctionKey parse_key(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto bar = text.find('|', start);
    fields.push_back(text.substr(start, bar == std::string_view::npos ? bar : bar - start));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  if (fields.size() != 5)
    throw Error("function key needs 5 '|'-separated fields: '" + std::string(text) + "'");
  for (std::size_t i = 0; i < 4; ++i)
    if (!is_valid_token(fields[i]))
      throw Error("invalid token '" + std::string(fields[i]) + "' in function key");
  FunctionKey key{std::string(fields[0]), std::string(fields[1]), std::string(fields[2]),
                  std::string(fields[3]), 0};
  auto arity = fields[4];
  auto [ptr, ec] = std::from_chars(arity.data(), arity.data() + arity.size(), key.arity);
  if (ec != std::errc{} || ptr != arity.data() + arity.size() || arity.empty())
    throw Error("invalid arity '" + std::string(arity) + "' in function key");
  return key;
}

}  // namespace siglog
