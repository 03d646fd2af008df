#include "siglog/dsl.hpp"

#include "siglog/errors.hpp"

namespace siglog {
namespace {

constexpr std::string_view kVarargMarker = "...";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

class SignatureParser {
 public:
  explicit SignatureParser(std::string_view text) : in_(text) {}

  Signature parse() {
    Signature sig;
    skip_ws();
    sig.lang = slot("language");
    require_ws();
    sig.namespace_ = slot("namespace");
    require_ws();
    sig.class_name = slot("class");
    skip_ws();
    expect("::");
    skip_ws();
    sig.head = head();
    skip_ws();
    expect("(");
    param_spec(sig);
    expect(")");
    skip_ws();
    expect("->");
    skip_ws();
    sig.ret = slot("return slot");
    skip_ws();
    if (pos_ != in_.size()) fail("end of input");
    if (sig.head.is_equiv_in() && !sig.lang.is_const())
      throw ParseError(0, "constant language before EquivIn", sig.lang.text());
    return sig;
  }

 private:
  [[noreturn]] void fail(std::string expected) const {
    throw ParseError(pos_, std::move(expected), found());
  }

  std::string found() const {
    if (pos_ >= in_.size()) return "end of input";
    std::size_t end = pos_;
    while (end < in_.size() && is_token_char(in_[end])) ++end;
    if (end == pos_) end = pos_ + 1;
    return "'" + std::string(in_.substr(pos_, end - pos_)) + "'";
  }

  char peek() const { return pos_ < in_.size() ? in_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < in_.size() && is_space(in_[pos_])) ++pos_;
  }

  void require_ws() {
    if (!is_space(peek())) fail("whitespace");
    skip_ws();
  }

  void expect(std::string_view lit) {
    if (in_.substr(pos_, lit.size()) != lit) fail("'" + std::string(lit) + "'");
    pos_ += lit.size();
  }

  std::string_view token_run() const {
    std::size_t end = pos_;
    while (end < in_.size() && is_token_char(in_[end])) ++end;
    return in_.substr(pos_, end - pos_);
  }

  std::string token(const char* what) {
    auto run = token_run();
    if (run.empty()) fail(what);
    pos_ += run.size();
    return std::string(run);
  }

  SlotValue slot(const char* what) {
    std::string tok = token(what);
    if (peek() == '?') {
      ++pos_;
      return SlotValue::wildcard(std::move(tok));
    }
    if (tok == kUnkToken) return SlotValue::unknown();
    return SlotValue::constant(std::move(tok));
  }

  FunctionHead head() {
    auto run = token_run();
    if (run == "EquivIn" && pos_ + run.size() < in_.size() && in_[pos_ + run.size()] != '?') {
      pos_ += run.size();
      skip_ws();
      expect("(");
      skip_ws();
      std::string base = token("function name");
      skip_ws();
      expect(",");
      skip_ws();
      std::string target = token("target language");
      skip_ws();
      expect(")");
      return FunctionHead::equiv_in(std::move(base), std::move(target));
    }
    return FunctionHead::plain(slot("function name"));
  }

  // True when the input at pos_ is `...` followed by optional blanks and `)`.
  bool at_vararg_marker() const {
    if (token_run() != kVarargMarker) return false;
    std::size_t p = pos_ + kVarargMarker.size();
    while (p < in_.size() && is_space(in_[p])) ++p;
    return p < in_.size() && in_[p] == ')';
  }

  void vararg_marker(Signature& sig) {
    pos_ += kVarargMarker.size();
    skip_ws();
    sig.vararg = true;
  }

  void param_spec(Signature& sig) {
    skip_ws();
    if (peek() == ')') return;
    if (peek() == '?') {
      ++pos_;
      skip_ws();
      if (peek() != ')')
        throw MixedWildcardParams(pos_, "')' after the whole-list wildcard", found());
      sig.params_wildcard = true;
      return;
    }
    if (at_vararg_marker()) {
      vararg_marker(sig);
      return;
    }
    while (true) {
      Param p;
      p.type = slot("parameter type");
      skip_ws();
      expect(":");
      skip_ws();
      p.name = slot("parameter name");
      p.position = sig.params.size() + 1;
      sig.params.push_back(std::move(p));
      skip_ws();
      if (peek() == ')') return;
      expect(",");
      skip_ws();
      if (peek() == '?')
        throw MixedWildcardParams(pos_, "a parameter", "'?' mixed with explicit parameters");
      if (at_vararg_marker()) {
        vararg_marker(sig);
        return;
      }
    }
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

Signature parse_signature(std::string_view text) {
  return SignatureParser(text).parse();
}

std::string print_signature(const Signature& sig) {
  std::string out = sig.lang.text() + " " + sig.namespace_.text() + " " +
                    sig.class_name.text() + "::";
  if (sig.head.is_equiv_in()) {
    const auto& e = sig.head.equiv_in();
    out += "EquivIn(" + e.base_name + "," + e.target_lang + ")";
  } else {
    out += sig.head.name().text();
  }
  out += "(";
  if (sig.params_wildcard) {
    out += "?";
  } else {
    for (std::size_t i = 0; i < sig.params.size(); ++i) {
      if (i) out += ",";
      out += sig.params[i].type.text() + ":" + sig.params[i].name.text();
    }
    if (sig.vararg) out += sig.params.empty() ? "..." : ",...";
  }
  out += ") -> " + sig.ret.text();
  return out;
}

}  // namespace siglog
