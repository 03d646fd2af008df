#include "siglog/normalizer.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "siglog/dsl.hpp"
#include "siglog/errors.hpp"

namespace siglog {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

struct Word {
  std::string_view text;
  std::size_t offset;
};

class RawSignature {
 public:
  RawSignature(std::string_view raw, Dialect dialect) : raw_(raw), dialect_(dialect) {}

  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    throw DialectParseError(std::string(dialect_name(dialect_)), offset, message);
  }

  // Splits at the parameter parens; returns the words before `(` and the
  // byte range strictly inside the parens.
  void split(std::vector<Word>& head_words, std::size_t& inner_begin,
             std::size_t& inner_end) const {
    auto open = raw_.find('(');
    if (open == std::string_view::npos) fail(raw_.size(), "expected '('");
    auto close = raw_.find(')', open);
    if (close == std::string_view::npos) fail(raw_.size(), "expected ')'");
    for (std::size_t p = close + 1; p < raw_.size(); ++p)
      if (!is_space(raw_[p])) fail(p, "unexpected text after ')'");
    head_words = words(0, open);
    inner_begin = open + 1;
    inner_end = close;
  }

  // Whitespace-separated words in [begin, end).
  std::vector<Word> words(std::size_t begin, std::size_t end) const {
    std::vector<Word> out;
    std::size_t p = begin;
    while (p < end) {
      while (p < end && is_space(raw_[p])) ++p;
      if (p >= end) break;
      std::size_t start = p;
      while (p < end && !is_space(raw_[p])) ++p;
      out.push_back({raw_.substr(start, p - start), start});
    }
    return out;
  }

  // Comma-separated groups in [begin, end). An empty input yields no groups;
  // an empty group between commas is an error.
  std::vector<std::pair<std::size_t, std::size_t>> groups(std::size_t begin,
                                                          std::size_t end) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (words(begin, end).empty()) return out;
    std::size_t start = begin;
    for (std::size_t p = begin; p <= end; ++p) {
      if (p == end || raw_[p] == ',') {
        if (words(start, p).empty()) fail(start, "empty parameter");
        out.emplace_back(start, p);
        start = p + 1;
      }
    }
    return out;
  }

  SlotValue slot(const Word& w) const {
    for (std::size_t i = 0; i < w.text.size(); ++i)
      if (!is_token_char(w.text[i]))
        fail(w.offset + i, "invalid character '" + std::string(1, w.text[i]) + "'");
    if (w.text == kUnkToken) return SlotValue::unknown();
    return SlotValue::constant(std::string(w.text));
  }

 private:
  std::string_view raw_;
  Dialect dialect_;
};

Signature base_signature(std::string_view lang_tag) {
  Signature sig;
  sig.lang = SlotValue::constant(canonical_lang(lang_tag));
  sig.namespace_ = SlotValue::constant("core");
  sig.class_name = SlotValue::constant("builtin");
  sig.ret = SlotValue::unknown();
  return sig;
}

void add_param(Signature& sig, SlotValue type, SlotValue name) {
  sig.params.push_back(Param{std::move(type), std::move(name), sig.params.size() + 1});
}

Signature normalize_java(const RawSignature& raw, std::string_view lang_tag) {
  std::vector<Word> head;
  std::size_t begin = 0, end = 0;
  raw.split(head, begin, end);
  if (head.empty()) raw.fail(begin - 1, "expected a function name before '('");
  if (head.size() > 4) raw.fail(head[4].offset, "too many words before the function name");

  Signature sig = base_signature(lang_tag);
  sig.head = FunctionHead::plain(raw.slot(head.back()));
  if (head.size() >= 2) sig.ret = raw.slot(head[head.size() - 2]);
  if (head.size() >= 3) sig.namespace_ = raw.slot(head[0]);
  if (head.size() == 4) sig.class_name = raw.slot(head[1]);

  for (auto [gb, ge] : raw.groups(begin, end)) {
    auto w = raw.words(gb, ge);
    if (w.size() == 1)
      add_param(sig, SlotValue::unknown(), raw.slot(w[0]));
    else if (w.size() == 2)
      add_param(sig, raw.slot(w[0]), raw.slot(w[1]));
    else
      raw.fail(w[2].offset, "expected 'type name'");
  }
  return sig;
}

Signature normalize_python(const RawSignature& raw, std::string_view lang_tag) {
  std::vector<Word> head;
  std::size_t begin = 0, end = 0;
  raw.split(head, begin, end);
  if (head.empty()) raw.fail(begin - 1, "expected a function name before '('");
  if (head.size() > 3) raw.fail(head[3].offset, "too many words before the function name");

  Signature sig = base_signature(lang_tag);
  sig.head = FunctionHead::plain(raw.slot(head.back()));
  if (head.size() >= 2) sig.namespace_ = raw.slot(head[0]);
  if (head.size() == 3) sig.class_name = raw.slot(head[1]);

  for (auto [gb, ge] : raw.groups(begin, end))
    for (const auto& w : raw.words(gb, ge)) add_param(sig, SlotValue::unknown(), raw.slot(w));
  return sig;
}

Signature normalize_php(const RawSignature& raw, std::string_view lang_tag) {
  std::vector<Word> head;
  std::size_t begin = 0, end = 0;
  raw.split(head, begin, end);
  if (head.empty()) raw.fail(begin - 1, "expected a function name before '('");
  if (head.size() > 2) raw.fail(head[2].offset, "too many words before the function name");

  Signature sig = base_signature(lang_tag);
  sig.head = FunctionHead::plain(raw.slot(head.back()));
  if (head.size() == 2) sig.ret = raw.slot(head[0]);

  auto groups = raw.groups(begin, end);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    auto w = raw.words(groups[g].first, groups[g].second);
    if (w.size() == 1 && (w[0].text == ".." || w[0].text == "...")) {
      if (g + 1 != groups.size()) raw.fail(w[0].offset, "vararg marker must come last");
      sig.vararg = true;
      break;
    }
    if (w.size() > 2) raw.fail(w[2].offset, "expected 'type $name'");
    Word name = w.back();
    if (!name.text.empty() && name.text.front() == '$') {
      name.text.remove_prefix(1);
      ++name.offset;
    }
    if (name.text.empty()) raw.fail(name.offset, "expected a parameter name after '$'");
    add_param(sig, w.size() == 2 ? raw.slot(w[0]) : SlotValue::unknown(), raw.slot(name));
  }
  return sig;
}

}  // namespace

std::optional<Dialect> parse_dialect(std::string_view name) {
  if (name == "java") return Dialect::java;
  if (name == "python") return Dialect::python;
  if (name == "php") return Dialect::php;
  if (name == "normalized") return Dialect::normalized;
  return std::nullopt;
}

std::string_view dialect_name(Dialect d) {
  switch (d) {
    case Dialect::java: return "java";
    case Dialect::python: return "python";
    case Dialect::php: return "php";
    case Dialect::normalized: return "normalized";
  }
  return "unknown";
}

std::string canonical_lang(std::string_view tag) {
  std::string out(tag);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

Signature normalize(std::string_view raw, Dialect dialect, std::string_view lang_tag) {
  std::string_view name = dialect_name(dialect);
  if (std::all_of(raw.begin(), raw.end(), is_space))
    throw DialectParseError(std::string(name), 0, "empty signature");
  if (auto q = raw.find('?'); q != std::string_view::npos)
    throw NotGroundAfterNormalize("wildcard '?' at byte " + std::to_string(q) +
                                  " is only allowed in queries");

  if (dialect == Dialect::normalized) {
    Signature sig;
    try {
      sig = parse_signature(raw);
    } catch (const ParseError& e) {
      throw DialectParseError(std::string(name), e.offset(),
                              "expected " + e.expected() + ", found " + e.found());
    }
    if (!is_ground(sig))
      throw NotGroundAfterNormalize("EquivIn heads are only allowed in queries");
    if (sig.lang.is_const()) sig.lang = SlotValue::constant(canonical_lang(sig.lang.token()));
    return sig;
  }

  if (!is_valid_token(lang_tag))
    throw DialectParseError(std::string(name), 0,
                            "invalid language tag '" + std::string(lang_tag) + "'");
  RawSignature parsed(raw, dialect);
  switch (dialect) {
    case Dialect::java: return normalize_java(parsed, lang_tag);
    case Dialect::python: return normalize_python(parsed, lang_tag);
    case Dialect::php: return normalize_php(parsed, lang_tag);
    case Dialect::normalized: break;
  }
  throw DialectParseError(std::string(name), 0, "unsupported dialect");
}

Signature canonicalize_query(Signature query) {
  if (query.lang.is_const()) query.lang = SlotValue::constant(canonical_lang(query.lang.token()));
  if (query.head.is_equiv_in()) {
    const auto& e = query.head.equiv_in();
    query.head = FunctionHead::equiv_in(e.base_name, canonical_lang(e.target_lang));
  }
  return query;
}

}  // namespace siglog
