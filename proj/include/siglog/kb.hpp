#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "siglog/logic.hpp"
#include "siglog/signature.hpp"

namespace siglog {

// Skolem ids. Components are joined with '.'; a '.' inside a component is
// written as "\.", so ids are unambiguous.
//
//   fn:<lang>.<ns>.<class>.<name>.<arity>     function entity
//   ret:<same id>                             its return value
//   param:<same id>.<j>                       its j-th parameter
//   ns:<lang>.<ns>                            shared by functions of a namespace
//   cls:<lang>.<ns>.<class>                   shared by functions of a class
std::string function_skolem_id(const FunctionKey& key);
std::string namespace_skolem_id(std::string_view lang, std::string_view ns);
std::string class_skolem_id(std::string_view lang, std::string_view ns, std::string_view cls);
std::string param_skolem_id(const FunctionKey& key, std::size_t position);

/// Ground facts with the lookup indexes used by the query engine. Not
/// synchronized; reach it through FactStore::read.
class FactIndex {
 public:
  using Bucket = std::vector<const Atom*>;

  const std::set<Atom>& facts() const { return facts_; }
  const Bucket& with_pred(Predicate p) const;
  const Bucket& with_first(Predicate p, const Term& first) const;
  const Bucket& with_second(Predicate p, const Term& second) const;

  /// Printed signatures ingested under each key.
  const std::map<FunctionKey, std::set<std::string>>& registry() const { return registry_; }
  std::optional<FunctionKey> key_of(const Skolem& function) const;

 private:
  friend class FactStore;

  bool insert(Atom fact);

  std::set<Atom> facts_;
  std::map<Predicate, Bucket> by_pred_;
  std::map<std::pair<Predicate, Term>, Bucket> by_first_;
  std::map<std::pair<Predicate, Term>, Bucket> by_second_;
  std::map<FunctionKey, std::set<std::string>> registry_;
  std::map<std::string, FunctionKey> function_ids_;
};

/// Thread-safe fact store: concurrent readers, exclusive writers.
class FactStore {
 public:
  /// Adds the skolemized atoms of compile(sig). Returns the number of facts
  /// not already present. Throws NotGround.
  std::size_t ingest(const Signature& sig);

  std::size_t size() const;
  bool contains(const FunctionKey& key) const;
  std::vector<FunctionKey> keys() const;
  std::vector<Atom> facts() const;
  /// Lexicographically smallest printed signature stored under `key`.
  std::optional<std::string> signature_text(const FunctionKey& key) const;

  template <typename Fn>
  decltype(auto) read(Fn&& fn) const {
    std::shared_lock lock(mutex_);
    return fn(index_);
  }

 private:
  FactIndex index_;
  mutable std::shared_mutex mutex_;
};

/// Ground atoms of compile(sig) with each bound variable replaced by its
/// skolem constant. Throws NotGround.
std::vector<Atom> skolemize(const Signature& sig);

/// One `pred(arg,...)` line per fact, sorted.
std::vector<std::string> dump_facts(const FactStore& store);

}  // namespace siglog
