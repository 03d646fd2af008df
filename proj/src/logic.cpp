#include "siglog/logic.hpp"

#include <map>
#include <set>

#include "siglog/errors.hpp"

namespace siglog {

namespace {

struct PredicateInfo {
  Predicate pred;
  std::string_view name;
  std::size_t arity;
};

constexpr PredicateInfo kPredicates[] = {
    {Predicate::fun, "fun", 2},
    {Predicate::eq, "eq", 2},
    {Predicate::lang, "lang", 2},
    {Predicate::type, "type", 2},
    {Predicate::var, "var", 2},
    {Predicate::has_param, "has_param", 3},
    {Predicate::namespace_, "namespace", 2},
    {Predicate::in_namespace, "in_namespace", 2},
    {Predicate::class_, "class", 2},
    {Predicate::in_class, "in_class", 2},
};

const PredicateInfo& info(Predicate p) { return kPredicates[static_cast<std::size_t>(p)]; }

}  // namespace

std::string_view predicate_name(Predicate p) { return info(p).name; }
std::size_t predicate_arity(Predicate p) { return info(p).arity; }

std::optional<Predicate> parse_predicate(std::string_view name) {
  for (const auto& p : kPredicates)
    if (p.name == name) return p.pred;
  return std::nullopt;
}

bool App::operator==(const App& other) const {
  return head == other.head && args == other.args && open == other.open;
}

std::strong_ordering App::operator<=>(const App& other) const {
  if (auto c = head <=> other.head; c != 0) return c;
  if (auto c = args <=> other.args; c != 0) return c;
  return open <=> other.open;
}

std::strong_ordering Term::operator<=>(const Term& other) const { return node <=> other.node; }

std::strong_ordering Atom::operator<=>(const Atom& other) const {
  if (auto c = pred <=> other.pred; c != 0) return c;
  return args <=> other.args;
}

bool Term::is_ground() const {
  if (is_var()) return false;
  if (const auto* app = std::get_if<App>(&node)) {
    if (std::holds_alternative<Var>(app->head)) return false;
    for (const auto& a : app->args)
      if (!a.is_ground()) return false;
  }
  return true;
}

Term var_term(std::string name) { return Term{Var{std::move(name), false}}; }
Term wildcard_term(std::string label) { return Term{Var{std::move(label), true}}; }
Term const_term(std::string token) { return Term{Constant{std::move(token)}}; }
Term skolem_term(SkolemKind kind, std::string id) { return Term{Skolem{kind, std::move(id)}}; }

bool Formula::arity_open() const {
  for (const auto& a : atoms)
    if (a.pred == Predicate::eq && a.args.size() == 2)
      if (const auto* app = std::get_if<App>(&a.args[1].node)) return app->open;
  return false;
}

Var vars::param(std::size_t position) { return Var{"x" + std::to_string(position), false}; }

namespace {

Term slot_term(const SlotValue& s) {
  if (s.is_wildcard()) return wildcard_term(s.label());
  return const_term(s.ground_token());
}

SlotValue slot_from_token(const std::string& token) {
  return token == kUnkToken ? SlotValue::unknown() : SlotValue::constant(token);
}

Atom atom(Predicate p, std::vector<Term> args) { return Atom{p, std::move(args)}; }

void note_wildcard(const SlotValue& s, std::vector<Var>& out, std::set<std::string>& seen) {
  if (s.is_wildcard() && seen.insert(s.label()).second) out.push_back(Var{s.label(), true});
}

}  // namespace

Formula compile(const Signature& sig) {
  if (!sig.head.is_plain())
    throw UnsupportedHead("EquivIn signatures are compiled through expand_equiv");

  Formula out;
  const std::size_t n = sig.params_wildcard ? 0 : sig.params.size();
  for (std::size_t j = 1; j <= n; ++j) out.lambdas.push_back(vars::param(j));

  out.existentials = {vars::ret, vars::function, vars::namespace_, vars::class_};
  std::set<std::string> seen;
  note_wildcard(sig.lang, out.existentials, seen);
  note_wildcard(sig.namespace_, out.existentials, seen);
  note_wildcard(sig.class_name, out.existentials, seen);
  note_wildcard(sig.head.name(), out.existentials, seen);
  if (!sig.params_wildcard) {
    for (const auto& p : sig.params) {
      note_wildcard(p.type, out.existentials, seen);
      note_wildcard(p.name, out.existentials, seen);
    }
  }
  note_wildcard(sig.ret, out.existentials, seen);

  const Term f{vars::function};
  const Term v{vars::ret};
  const Term name = slot_term(sig.head.name());

  App applied;
  if (name.is_var())
    applied.head = std::get<Var>(name.node);
  else
    applied.head = std::get<Constant>(name.node);
  for (std::size_t j = 1; j <= n; ++j) applied.args.push_back(Term{vars::param(j)});
  applied.open = sig.params_wildcard || sig.vararg;

  out.atoms.push_back(atom(Predicate::fun, {f, name}));
  out.atoms.push_back(atom(Predicate::eq, {v, Term{std::move(applied)}}));
  out.atoms.push_back(atom(Predicate::lang, {f, slot_term(sig.lang)}));
  out.atoms.push_back(atom(Predicate::type, {v, slot_term(sig.ret)}));
  out.atoms.push_back(atom(Predicate::class_, {Term{vars::class_}, slot_term(sig.class_name)}));
  out.atoms.push_back(atom(Predicate::in_class, {f, Term{vars::class_}}));
  out.atoms.push_back(
      atom(Predicate::namespace_, {Term{vars::namespace_}, slot_term(sig.namespace_)}));
  out.atoms.push_back(atom(Predicate::in_namespace, {f, Term{vars::namespace_}}));
  for (std::size_t j = 1; j <= n; ++j) {
    const Term x{vars::param(j)};
    const auto& p = sig.params[j - 1];
    out.atoms.push_back(atom(Predicate::var, {x, slot_term(p.name)}));
    out.atoms.push_back(atom(Predicate::type, {x, slot_term(p.type)}));
    out.atoms.push_back(atom(Predicate::has_param, {f, x, const_term(std::to_string(j))}));
  }
  return out;
}

namespace {

Term substitute(const Term& t, const std::map<Var, Term>& sub) {
  if (const auto* v = std::get_if<Var>(&t.node)) {
    auto it = sub.find(*v);
    return it == sub.end() ? t : it->second;
  }
  if (const auto* app = std::get_if<App>(&t.node)) {
    App out = *app;
    for (auto& a : out.args) a = substitute(a, sub);
    return Term{std::move(out)};
  }
  return t;
}

}  // namespace

Formula beta_apply(const Formula& formula, const std::vector<std::string>& args) {
  if (args.size() != formula.lambdas.size())
    throw ArityMismatch("formula takes " + std::to_string(formula.lambdas.size()) +
                        " arguments, got " + std::to_string(args.size()));
  std::map<Var, Term> sub;
  for (std::size_t i = 0; i < args.size(); ++i) sub.emplace(formula.lambdas[i], const_term(args[i]));

  Formula out;
  out.existentials = formula.existentials;
  out.atoms.reserve(formula.atoms.size());
  for (const auto& a : formula.atoms) {
    Atom b{a.pred, {}};
    for (const auto& t : a.args) b.args.push_back(substitute(t, sub));
    out.atoms.push_back(std::move(b));
  }
  return out;
}

namespace {

class AlphaComparer {
 public:
  AlphaComparer(const Formula& a, const Formula& b) : left_(binders(a)), right_(binders(b)) {}

  bool var(const Var& a, const Var& b) const {
    auto ia = left_.find(a);
    auto ib = right_.find(b);
    if (ia == left_.end() || ib == right_.end())
      return ia == left_.end() && ib == right_.end() && a == b;
    return ia->second == ib->second;
  }

  bool term(const Term& a, const Term& b) const {
    if (a.node.index() != b.node.index()) return false;
    if (a.is_var()) return var(std::get<Var>(a.node), std::get<Var>(b.node));
    if (!a.is_app()) return a == b;
    const auto& x = std::get<App>(a.node);
    const auto& y = std::get<App>(b.node);
    if (x.open != y.open || x.args.size() != y.args.size()) return false;
    if (x.head.index() != y.head.index()) return false;
    if (const auto* vx = std::get_if<Var>(&x.head)) {
      if (!var(*vx, std::get<Var>(y.head))) return false;
    } else if (x.head != y.head) {
      return false;
    }
    for (std::size_t i = 0; i < x.args.size(); ++i)
      if (!term(x.args[i], y.args[i])) return false;
    return true;
  }

 private:
  // Binder slot per variable: lambdas first, existentials after.
  static std::map<Var, std::size_t> binders(const Formula& f) {
    std::map<Var, std::size_t> out;
    std::size_t slot = 0;
    for (const auto& v : f.lambdas) out.emplace(v, slot++);
    for (const auto& v : f.existentials) out.emplace(v, slot++);
    return out;
  }

  std::map<Var, std::size_t> left_;
  std::map<Var, std::size_t> right_;
};

}  // namespace

bool alpha_eq(const Formula& a, const Formula& b) {
  if (a.lambdas.size() != b.lambdas.size() || a.existentials.size() != b.existentials.size() ||
      a.atoms.size() != b.atoms.size())
    return false;
  AlphaComparer cmp(a, b);
  for (std::size_t i = 0; i < a.atoms.size(); ++i) {
    const auto& x = a.atoms[i];
    const auto& y = b.atoms[i];
    if (x.pred != y.pred || x.args.size() != y.args.size()) return false;
    for (std::size_t k = 0; k < x.args.size(); ++k)
      if (!cmp.term(x.args[k], y.args[k])) return false;
  }
  return true;
}

EquivExpansion expand_equiv(const Signature& sig) {
  if (!sig.head.is_equiv_in()) throw NotEquivHead("signature head is not EquivIn");
  const auto& e = sig.head.equiv_in();

  Signature base = sig;
  base.head = FunctionHead::plain(slot_from_token(e.base_name));

  Signature target;
  target.lang = slot_from_token(e.target_lang);
  target.namespace_ = SlotValue::wildcard("N");
  target.class_name = SlotValue::wildcard("C");
  target.head = FunctionHead::plain(SlotValue::wildcard("f'"));
  target.params_wildcard = true;
  target.ret = SlotValue::wildcard("r");

  Atom link{Predicate::eq, {const_term(e.base_name), wildcard_term("f'")}};
  return EquivExpansion{compile(base), std::move(target), std::move(link)};
}

namespace {

void collect_vars(const Term& t, std::vector<Var>& out) {
  if (const auto* v = std::get_if<Var>(&t.node)) {
    out.push_back(*v);
  } else if (const auto* app = std::get_if<App>(&t.node)) {
    if (const auto* hv = std::get_if<Var>(&app->head)) out.push_back(*hv);
    for (const auto& a : app->args) collect_vars(a, out);
  }
}

}  // namespace

std::optional<std::string> validate_formula(const Formula& f) {
  std::set<Var> bound;
  for (const auto* list : {&f.lambdas, &f.existentials})
    for (const auto& v : *list)
      if (!bound.insert(v).second) return "variable '" + v.name + "' is bound twice";

  for (const auto& a : f.atoms) {
    const std::string where = print_atom(a);
    if (a.args.size() != predicate_arity(a.pred)) return "wrong arity in " + where;
    for (std::size_t k = 0; k < a.args.size(); ++k) {
      const auto* app = std::get_if<App>(&a.args[k].node);
      if (!app) continue;
      if (a.pred != Predicate::eq || k != 1) return "applied term outside eq in " + where;
      for (const auto& arg : app->args)
        if (arg.is_app()) return "nested applied term in " + where;
    }
    std::vector<Var> used;
    for (const auto& t : a.args) collect_vars(t, used);
    for (const auto& v : used)
      if (!v.wildcard && !bound.count(v)) return "unbound variable '" + v.name + "' in " + where;
  }
  return std::nullopt;
}

namespace {

std::string_view skolem_prefix(SkolemKind k) {
  switch (k) {
    case SkolemKind::function: return "fn";
    case SkolemKind::ret: return "ret";
    case SkolemKind::param: return "param";
    case SkolemKind::namespace_: return "ns";
    case SkolemKind::class_: return "cls";
  }
  return "?";
}

std::string print_var(const Var& v) { return v.wildcard ? v.name + "?" : v.name; }

}  // namespace

std::string print_term(const Term& t) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Var>) {
          return print_var(x);
        } else if constexpr (std::is_same_v<T, Constant>) {
          return x.token;
        } else if constexpr (std::is_same_v<T, Skolem>) {
          return std::string(skolem_prefix(x.kind)) + ":" + x.id;
        } else {
          std::string out = std::holds_alternative<Var>(x.head)
                                ? print_var(std::get<Var>(x.head))
                                : std::get<Constant>(x.head).token;
          out += "(";
          for (std::size_t i = 0; i < x.args.size(); ++i) {
            if (i) out += ",";
            out += print_term(x.args[i]);
          }
          if (x.open) out += x.args.empty() ? "..." : ",...";
          return out + ")";
        }
      },
      t.node);
}

std::string print_atom(const Atom& a) {
  std::string out(predicate_name(a.pred));
  out += "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ",";
    out += print_term(a.args[i]);
  }
  return out + ")";
}

std::string print_formula(const Formula& f) {
  std::string out;
  for (const auto& v : f.lambdas) out += "lam " + print_var(v) + " . ";
  for (const auto& v : f.existentials) out += "ex " + print_var(v) + " . ";
  for (std::size_t i = 0; i < f.atoms.size(); ++i) {
    if (i) out += " & ";
    out += print_atom(f.atoms[i]);
  }
  return out;
}

}  // namespace siglog
