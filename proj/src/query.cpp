#include "siglog/query.hpp"

#include <functional>
#include <limits>

#include "siglog/errors.hpp"
#include "siglog/normalizer.hpp"

namespace siglog {
namespace {

using Subst = std::map<Var, Term>;

// Backtracking conjunctive-query evaluation over a FactIndex. Atoms are
// taken greedily by smallest candidate bucket. Binding the function variable
// to a function skolem also binds the return and parameter variables to that
// function's witnesses, so every solution describes a single entity.
class Solver {
 public:
  Solver(const FactIndex& index, const Formula& formula) : index_(index), formula_(formula) {}

  void run(const Subst& seed, const std::function<void(const Subst&)>& emit) {
    emit_ = &emit;
    std::vector<bool> done(formula_.atoms.size(), false);
    search(done, seed, 0);
  }

  bool bind(const Var& var, const Term& value, Subst& s) const {
    auto [it, added] = s.emplace(var, value);
    if (!added) return it->second == value;
    if (var != vars::function) return true;
    const auto* sk = std::get_if<Skolem>(&value.node);
    if (!sk || sk->kind != SkolemKind::function) return true;
    if (!bind(vars::ret, skolem_term(SkolemKind::ret, sk->id), s)) return false;
    for (std::size_t j = 0; j < formula_.lambdas.size(); ++j) {
      Term witness = skolem_term(SkolemKind::param, sk->id + "." + std::to_string(j + 1));
      if (!bind(formula_.lambdas[j], witness, s)) return false;
    }
    return true;
  }

 private:
  bool unify(const Term& pattern, const Term& fact, Subst& s) const {
    if (const auto* v = std::get_if<Var>(&pattern.node)) return bind(*v, fact, s);
    if (const auto* p = std::get_if<App>(&pattern.node)) {
      const auto* f = std::get_if<App>(&fact.node);
      if (!f) return false;
      const auto* fact_head = std::get_if<Constant>(&f->head);
      if (!fact_head) return false;
      if (const auto* hv = std::get_if<Var>(&p->head)) {
        if (!bind(*hv, Term{*fact_head}, s)) return false;
      } else if (std::get<Constant>(p->head) != *fact_head) {
        return false;
      }
      if (p->open ? f->args.size() < p->args.size() : f->args.size() != p->args.size())
        return false;
      for (std::size_t i = 0; i < p->args.size(); ++i)
        if (!unify(p->args[i], f->args[i], s)) return false;
      return true;
    }
    return pattern == fact;
  }

  static const Term* resolve(const Term& t, const Subst& s) {
    if (const auto* v = std::get_if<Var>(&t.node)) {
      auto it = s.find(*v);
      return it == s.end() ? nullptr : &it->second;
    }
    return t.is_ground() ? &t : nullptr;
  }

  const FactIndex::Bucket& candidates(const Atom& a, const Subst& s) const {
    if (const Term* first = resolve(a.args[0], s)) return index_.with_first(a.pred, *first);
    if (a.args.size() > 1)
      if (const Term* second = resolve(a.args[1], s); second && !second->is_app())
        return index_.with_second(a.pred, *second);
    return index_.with_pred(a.pred);
  }

  void search(std::vector<bool>& done, const Subst& s, std::size_t solved) {
    if (solved == formula_.atoms.size()) {
      (*emit_)(s);
      return;
    }
    std::size_t best = done.size();
    const FactIndex::Bucket* best_bucket = nullptr;
    for (std::size_t i = 0; i < done.size(); ++i) {
      if (done[i]) continue;
      const auto& b = candidates(formula_.atoms[i], s);
      if (!best_bucket || b.size() < best_bucket->size()) {
        best = i;
        best_bucket = &b;
      }
    }
    if (best_bucket->empty()) return;

    const Atom& pattern = formula_.atoms[best];
    done[best] = true;
    for (const Atom* fact : *best_bucket) {
      if (fact->args.size() != pattern.args.size()) continue;
      Subst next = s;
      bool ok = true;
      for (std::size_t k = 0; ok && k < pattern.args.size(); ++k)
        ok = unify(pattern.args[k], fact->args[k], next);
      if (ok) search(done, next, solved + 1);
    }
    done[best] = false;
  }

  const FactIndex& index_;
  const Formula& formula_;
  const std::function<void(const Subst&)>* emit_ = nullptr;
};

Bindings solve(const FactIndex& index, const Formula& formula,
               const std::optional<FunctionKey>& only = std::nullopt) {
  Bindings out;
  Solver solver(index, formula);
  Subst seed;
  if (only && !solver.bind(vars::function,
                           skolem_term(SkolemKind::function, function_skolem_id(*only)), seed))
    return out;
  solver.run(seed, [&](const Subst& s) {
    auto f = s.find(vars::function);
    if (f == s.end()) return;
    const auto* sk = std::get_if<Skolem>(&f->second.node);
    if (!sk) return;
    auto key = index.key_of(*sk);
    if (!key) return;
    Binding b{{}, *key};
    for (const auto& v : formula.existentials) {
      if (!v.wildcard) continue;
      auto it = s.find(v);
      if (it == s.end()) return;
      const auto* c = std::get_if<Constant>(&it->second.node);
      if (!c) return;
      b.values.emplace(v.name, c->token);
    }
    out.insert(std::move(b));
  });
  return out;
}

SlotValue slot_from_token(const std::string& token) {
  return token == kUnkToken ? SlotValue::unknown() : SlotValue::constant(token);
}

}  // namespace

Bindings answer(const FactStore& store, const Signature& query) {
  if (!query.head.is_plain())
    throw UnsupportedHead("EquivIn queries are answered by answer_equiv");
  const Formula formula = compile(query);
  return store.read([&](const FactIndex& index) { return solve(index, formula); });
}

Bindings answer_equiv(const FactStore& facts, const EquivStore& eqs, const Signature& query) {
  const EquivExpansion expansion = expand_equiv(query);
  const std::string target_lang = canonical_lang(query.head.equiv_in().target_lang);

  return facts.read([&](const FactIndex& index) {
    const Bindings sources = solve(index, expansion.base);
    if (sources.empty())
      throw SourceNotFound("no stored function matches the source of " +
                           query.head.equiv_in().base_name);

    Bindings out;
    for (const auto& source : sources) {
      for (const auto& member : eqs.members(source.key)) {
        if (canonical_lang(member.lang) != target_lang) continue;
        if (!index.registry().count(member)) continue;
        Signature pattern = expansion.target_pattern;
        pattern.lang = slot_from_token(member.lang);
        for (auto& b : solve(index, compile(pattern), member)) out.insert(std::move(b));
      }
    }
    return out;
  });
}

}  // namespace siglog
