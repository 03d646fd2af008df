#include "siglog/corpus.hpp"

#include <fstream>

namespace siglog {

void for_each_line(std::istream& in,
                   const std::function<void(std::size_t, std::string_view)>& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view text = line;
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos || text[first] == '#') continue;
    fn(number, text);
  }
}

bool split_tagged_line(std::string_view line, Dialect& dialect, std::string_view& lang,
                       std::string_view& raw) {
  auto t1 = line.find('\t');
  if (t1 == std::string_view::npos) return false;
  auto t2 = line.find('\t', t1 + 1);
  if (t2 == std::string_view::npos) return false;
  auto d = parse_dialect(line.substr(0, t1));
  if (!d) return false;
  dialect = *d;
  lang = line.substr(t1 + 1, t2 - t1 - 1);
  raw = line.substr(t2 + 1);
  return true;
}

std::vector<CorpusEntry> read_corpus(std::istream& in, const std::string& path,
                                     Dialect default_dialect, std::string_view default_lang) {
  std::vector<CorpusEntry> out;
  for_each_line(in, [&](std::size_t number, std::string_view text) {
    Dialect dialect = default_dialect;
    std::string_view lang = default_lang;
    std::string_view raw = text;
    split_tagged_line(text, dialect, lang, raw);
    try {
      out.push_back({number, normalize(raw, dialect, lang)});
    } catch (const Error& e) {
      throw CorpusError(path, number, e.what());
    }
  });
  return out;
}

std::size_t load_kb(const std::string& path, FactStore& store) {
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot open knowledge base");
  auto entries = read_corpus(in, path, Dialect::normalized, "");
  for (const auto& e : entries) store.ingest(e.sig);
  return entries.size();
}

std::size_t load_equivalences(const std::string& path, EquivStore& eqs) {
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot open equivalence file");
  std::size_t links = 0;
  for_each_line(in, [&](std::size_t number, std::string_view text) {
    auto tab = text.find('\t');
    if (tab == std::string_view::npos)
      throw CorpusError(path, number, "expected two tab-separated function keys");
    try {
      FunctionKey a = parse_key(text.substr(0, tab));
      FunctionKey b = parse_key(text.substr(tab + 1));
      for (auto* k : {&a, &b})
        if (k->lang != kUnkToken) k->lang = canonical_lang(k->lang);
      eqs.add(a, b);
    } catch (const Error& e) {
      throw CorpusError(path, number, e.what());
    }
    ++links;
  });
  return links;
}

}  // namespace siglog
