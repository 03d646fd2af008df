#include "siglog/equiv_store.hpp"

#include <mutex>
#include <utility>

namespace siglog {

std::size_t EquivStore::intern(const FunctionKey& key) {
  auto [it, added] = ids_.emplace(key, keys_.size());
  if (added) {
    keys_.push_back(key);
    parent_.push_back(it->second);
    rank_.push_back(0);
  }
  return it->second;
}

// No path compression so lookups stay read-only; union by rank bounds the
// depth at log2(size).
std::size_t EquivStore::root(std::size_t id) const {
  while (parent_[id] != id) id = parent_[id];
  return id;
}

void EquivStore::add(const FunctionKey& a, const FunctionKey& b) {
  std::unique_lock lock(mutex_);
  std::size_t ra = root(intern(a));
  std::size_t rb = root(intern(b));
  if (ra == rb) return;
  if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
  parent_[rb] = ra;
  if (rank_[ra] == rank_[rb]) ++rank_[ra];
}

bool EquivStore::equivalent(const FunctionKey& a, const FunctionKey& b) const {
  if (a == b) return true;
  std::shared_lock lock(mutex_);
  auto ia = ids_.find(a);
  auto ib = ids_.find(b);
  if (ia == ids_.end() || ib == ids_.end()) return false;
  return root(ia->second) == root(ib->second);
}

std::vector<FunctionKey> EquivStore::members(const FunctionKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = ids_.find(key);
  if (it == ids_.end()) return {key};
  const std::size_t r = root(it->second);
  std::vector<FunctionKey> out;
  for (const auto& [k, id] : ids_)
    if (root(id) == r) out.push_back(k);
  return out;
}

std::size_t EquivStore::size() const {
  std::shared_lock lock(mutex_);
  return keys_.size();
}

}  // namespace siglog
