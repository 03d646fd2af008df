#include "siglog/errors.hpp"
#include "siglog/query.hpp"

namespace siglog {
namespace {

using Values = std::set<std::string>;

// Slot values of one stored function, read back from its facts.
struct StoredFunction {
  Values langs, namespaces, classes, names, returns;
  std::vector<std::pair<Values, Values>> params;  // (types, names) per position
  bool has_applied_term = false;
};

std::string token_of(const Term& t) {
  const auto* c = std::get_if<Constant>(&t.node);
  return c ? c->token : std::string();
}

StoredFunction reconstruct(const std::map<Term, std::vector<Atom>>& by_subject,
                           const FunctionKey& key) {
  const std::string id = function_skolem_id(key);
  const Term fn = skolem_term(SkolemKind::function, id);
  const Term ret = skolem_term(SkolemKind::ret, id);
  static const std::vector<Atom> none;
  auto about = [&](const Term& subject) -> const std::vector<Atom>& {
    auto it = by_subject.find(subject);
    return it == by_subject.end() ? none : it->second;
  };

  StoredFunction out;
  std::vector<Term> ns_entities, class_entities;
  for (const auto& a : about(fn)) {
    switch (a.pred) {
      case Predicate::fun: out.names.insert(token_of(a.args[1])); break;
      case Predicate::lang: out.langs.insert(token_of(a.args[1])); break;
      case Predicate::in_namespace: ns_entities.push_back(a.args[1]); break;
      case Predicate::in_class: class_entities.push_back(a.args[1]); break;
      default: break;
    }
  }
  for (const auto& e : ns_entities)
    for (const auto& a : about(e))
      if (a.pred == Predicate::namespace_) out.namespaces.insert(token_of(a.args[1]));
  for (const auto& e : class_entities)
    for (const auto& a : about(e))
      if (a.pred == Predicate::class_) out.classes.insert(token_of(a.args[1]));

  for (const auto& a : about(ret)) {
    if (a.pred == Predicate::type) out.returns.insert(token_of(a.args[1]));
    if (a.pred == Predicate::eq)
      if (const auto* app = std::get_if<App>(&a.args[1].node))
        if (app->args.size() == key.arity) out.has_applied_term = true;
  }

  for (std::size_t j = 1; j <= key.arity; ++j) {
    const Term p = skolem_term(SkolemKind::param, param_skolem_id(key, j));
    bool linked = false;
    for (const auto& a : about(fn))
      if (a.pred == Predicate::has_param && a.args[1] == p &&
          token_of(a.args[2]) == std::to_string(j))
        linked = true;
    Values types, names;
    if (linked) {
      for (const auto& a : about(p)) {
        if (a.pred == Predicate::type) types.insert(token_of(a.args[1]));
        if (a.pred == Predicate::var) names.insert(token_of(a.args[1]));
      }
    }
    out.params.emplace_back(std::move(types), std::move(names));
  }
  return out;
}

// Enumerates every consistent assignment of wildcard labels over the slots.
void assign(const std::vector<std::pair<const SlotValue*, const Values*>>& slots,
            std::size_t i, std::map<std::string, std::string>& labels, const FunctionKey& key,
            Bindings& out) {
  if (i == slots.size()) {
    out.insert(Binding{labels, key});
    return;
  }
  const SlotValue& q = *slots[i].first;
  const Values& candidates = *slots[i].second;
  if (!q.is_wildcard()) {
    if (candidates.count(q.ground_token())) assign(slots, i + 1, labels, key, out);
    return;
  }
  if (auto it = labels.find(q.label()); it != labels.end()) {
    if (candidates.count(it->second)) assign(slots, i + 1, labels, key, out);
    return;
  }
  for (const auto& c : candidates) {
    labels[q.label()] = c;
    assign(slots, i + 1, labels, key, out);
  }
  labels.erase(q.label());
}

}  // namespace

Bindings brute_force_answer(const FactStore& store, const Signature& query) {
  if (!query.head.is_plain())
    throw UnsupportedHead("EquivIn queries are answered by answer_equiv");

  std::map<Term, std::vector<Atom>> by_subject;
  for (auto& a : store.facts()) by_subject[a.args[0]].push_back(a);

  Bindings out;
  const std::size_t n = query.params.size();
  for (const auto& key : store.keys()) {
    if (!query.params_wildcard && (query.vararg ? key.arity < n : key.arity != n)) continue;
    const StoredFunction fn = reconstruct(by_subject, key);
    if (!fn.has_applied_term) continue;

    std::vector<std::pair<const SlotValue*, const Values*>> slots{
        {&query.lang, &fn.langs},
        {&query.namespace_, &fn.namespaces},
        {&query.class_name, &fn.classes},
        {&query.head.name(), &fn.names},
    };
    if (!query.params_wildcard) {
      for (std::size_t j = 0; j < n; ++j) {
        slots.emplace_back(&query.params[j].type, &fn.params[j].first);
        slots.emplace_back(&query.params[j].name, &fn.params[j].second);
      }
    }
    slots.emplace_back(&query.ret, &fn.returns);

    std::map<std::string, std::string> labels;
    assign(slots, 0, labels, key, out);
  }
  return out;
}

}  // namespace siglog
