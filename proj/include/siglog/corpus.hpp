#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "siglog/equiv_store.hpp"
#include "siglog/errors.hpp"
#include "siglog/kb.hpp"
#include "siglog/normalizer.hpp"

namespace siglog {

/// An input error located at `path:line`.
class CorpusError : public Error {
 public:
  CorpusError(const std::string& path, std::size_t line, const std::string& message)
      : Error(path + ":" + std::to_string(line) + ": " + message), path_(path), line_(line) {}

  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

struct CorpusEntry {
  std::size_t line = 0;
  Signature sig;
};

/// Calls `fn(line_number, text)` for every line that is neither blank nor a
/// `#` comment. Line numbers are 1-based; a trailing CR is dropped.
void for_each_line(std::istream& in,
                   const std::function<void(std::size_t, std::string_view)>& fn);

/// Splits `<dialect>\t<lang>\t<raw>`; returns false for any other shape.
bool split_tagged_line(std::string_view line, Dialect& dialect, std::string_view& lang,
                       std::string_view& raw);

/// Reads a corpus of signatures, normalizing every line. Tagged lines carry
/// their own dialect and language; other lines use the defaults. Throws
/// CorpusError naming `path` and the line.
std::vector<CorpusEntry> read_corpus(std::istream& in, const std::string& path,
                                     Dialect default_dialect, std::string_view default_lang);

/// Ingests a normalized-signature file. Returns the number of signatures.
std::size_t load_kb(const std::string& path, FactStore& store);

/// Reads `key<TAB>key` lines (keys as `lang|namespace|class|name|arity`).
/// Language fields are lowercased to match normalized data.
std::size_t load_equivalences(const std::string& path, EquivStore& eqs);

}  // namespace siglog
