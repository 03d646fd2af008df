#include "siglog/kb.hpp"

#include <algorithm>
#include <mutex>

#include "siglog/dsl.hpp"
#include "siglog/errors.hpp"

namespace siglog {
namespace {

std::string escape(std::string_view component) {
  std::string out;
  out.reserve(component.size());
  for (char c : component) {
    if (c == '.') out += '\\';
    out += c;
  }
  return out;
}

const FactIndex::Bucket kEmptyBucket;

template <typename Map, typename Key>
const FactIndex::Bucket& bucket(const Map& map, const Key& key) {
  auto it = map.find(key);
  return it == map.end() ? kEmptyBucket : it->second;
}

}  // namespace

std::string function_skolem_id(const FunctionKey& key) {
  return escape(key.lang) + "." + escape(key.namespace_) + "." + escape(key.class_name) + "." +
         escape(key.name) + "." + std::to_string(key.arity);
}

std::string namespace_skolem_id(std::string_view lang, std::string_view ns) {
  return escape(lang) + "." + escape(ns);
}

std::string class_skolem_id(std::string_view lang, std::string_view ns, std::string_view cls) {
  return escape(lang) + "." + escape(ns) + "." + escape(cls);
}

std::string param_skolem_id(const FunctionKey& key, std::size_t position) {
  return function_skolem_id(key) + "." + std::to_string(position);
}

const FactIndex::Bucket& FactIndex::with_pred(Predicate p) const { return bucket(by_pred_, p); }

const FactIndex::Bucket& FactIndex::with_first(Predicate p, const Term& first) const {
  return bucket(by_first_, std::make_pair(p, first));
}

const FactIndex::Bucket& FactIndex::with_second(Predicate p, const Term& second) const {
  return bucket(by_second_, std::make_pair(p, second));
}

std::optional<FunctionKey> FactIndex::key_of(const Skolem& function) const {
  if (function.kind != SkolemKind::function) return std::nullopt;
  auto it = function_ids_.find(function.id);
  if (it == function_ids_.end()) return std::nullopt;
  return it->second;
}

bool FactIndex::insert(Atom fact) {
  auto [it, added] = facts_.insert(std::move(fact));
  if (!added) return false;
  const Atom* a = &*it;
  by_pred_[a->pred].push_back(a);
  if (!a->args.empty()) by_first_[{a->pred, a->args[0]}].push_back(a);
  if (a->args.size() > 1) by_second_[{a->pred, a->args[1]}].push_back(a);
  return true;
}

std::vector<Atom> skolemize(const Signature& sig) {
  const FunctionKey key = function_key(sig);
  const std::string id = function_skolem_id(key);
  std::map<Var, Term> witness{
      {vars::function, skolem_term(SkolemKind::function, id)},
      {vars::ret, skolem_term(SkolemKind::ret, id)},
      {vars::namespace_,
       skolem_term(SkolemKind::namespace_, namespace_skolem_id(key.lang, key.namespace_))},
      {vars::class_, skolem_term(SkolemKind::class_,
                                 class_skolem_id(key.lang, key.namespace_, key.class_name))},
  };
  for (std::size_t j = 1; j <= key.arity; ++j)
    witness.emplace(vars::param(j), skolem_term(SkolemKind::param, param_skolem_id(key, j)));

  auto ground = [&](const Term& t) {
    if (const auto* v = std::get_if<Var>(&t.node)) return witness.at(*v);
    if (const auto* app = std::get_if<App>(&t.node)) {
      App out = *app;
      for (auto& arg : out.args)
        if (const auto* v = std::get_if<Var>(&arg.node)) arg = witness.at(*v);
      return Term{std::move(out)};
    }
    return t;
  };

  std::vector<Atom> out;
  for (const auto& a : compile(sig).atoms) {
    Atom fact{a.pred, {}};
    for (const auto& t : a.args) fact.args.push_back(ground(t));
    out.push_back(std::move(fact));
  }
  return out;
}

std::size_t FactStore::ingest(const Signature& sig) {
  auto facts = skolemize(sig);
  const FunctionKey key = function_key(sig);
  std::unique_lock lock(mutex_);
  std::size_t added = 0;
  for (auto& f : facts) added += index_.insert(std::move(f)) ? 1 : 0;
  index_.registry_[key].insert(print_signature(sig));
  index_.function_ids_.emplace(function_skolem_id(key), key);
  return added;
}

std::size_t FactStore::size() const {
  std::shared_lock lock(mutex_);
  return index_.facts_.size();
}

bool FactStore::contains(const FunctionKey& key) const {
  std::shared_lock lock(mutex_);
  return index_.registry_.count(key) > 0;
}

std::vector<FunctionKey> FactStore::keys() const {
  std::shared_lock lock(mutex_);
  std::vector<FunctionKey> out;
  for (const auto& [k, _] : index_.registry_) out.push_back(k);
  return out;
}

std::vector<Atom> FactStore::facts() const {
  std::shared_lock lock(mutex_);
  return {index_.facts_.begin(), index_.facts_.end()};
}

std::optional<std::string> FactStore::signature_text(const FunctionKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = index_.registry_.find(key);
  if (it == index_.registry_.end() || it->second.empty()) return std::nullopt;
  return *it->second.begin();
}

std::vector<std::string> dump_facts(const FactStore& store) {
  std::vector<std::string> lines;
  store.read([&](const FactIndex& index) {
    lines.reserve(index.facts().size());
    for (const auto& f : index.facts()) lines.push_back(print_atom(f));
  });
  std::sort(lines.begin(), lines.end());
  return lines;
}

}  // namespace siglog
