#pragma once

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <vector>

#include "siglog/signature.hpp"

namespace siglog {

/// Cross-language equivalence of functions, closed under symmetry and
/// transitivity (union-find). Keys need not be ingested in any fact store.
class EquivStore {
 public:
  void add(const FunctionKey& a, const FunctionKey& b);
  bool equivalent(const FunctionKey& a, const FunctionKey& b) const;
  /// Sorted equivalence class of `key`; always contains `key`.
  std::vector<FunctionKey> members(const FunctionKey& key) const;
  std::size_t size() const;

 private:
  std::size_t intern(const FunctionKey& key);
  std::size_t root(std::size_t id) const;

  std::map<FunctionKey, std::size_t> ids_;
  std::vector<FunctionKey> keys_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
  mutable std::shared_mutex mutex_;
};

}  // namespace siglog
