#include <doctest.h>

#include <functional>
#include <map>

#include "generators.hpp"
#include "siglog/dsl.hpp"
#include "siglog/errors.hpp"
#include "siglog/logic.hpp"

using namespace siglog;

namespace {

const char* kJavaMax = "java lang Math::max(long:a,long:b) -> long";

const char* kJavaMaxFormula =
    "lam x1 . lam x2 . ex v . ex f . ex n . ex c . fun(f,max) & eq(v,max(x1,x2)) & "
    "lang(f,java) & type(v,long) & class(c,Math) & in_class(f,c) & namespace(n,lang) & "
    "in_namespace(f,n) & var(x1,a) & type(x1,long) & has_param(f,x1,1) & var(x2,b) & "
    "type(x2,long) & has_param(f,x2,2)";

Formula compiled(const char* text) { return compile(parse_signature(text)); }

Term V(const char* n) { return var_term(n); }
Term K(const char* t) { return const_term(t); }
Atom A(Predicate p, std::vector<Term> args) { return Atom{p, std::move(args)}; }

// The expansion of the java max row, hand-encoded in the canonical
// vocabulary with bound variables spelled y1, y2, w, g, m, k.
Formula renamed_java_max() {
  App applied{Constant{"max"}, {V("y1"), V("y2")}, false};
  Formula f;
  f.lambdas = {Var{"y1"}, Var{"y2"}};
  f.existentials = {Var{"w"}, Var{"g"}, Var{"m"}, Var{"k"}};
  f.atoms = {
      A(Predicate::fun, {V("g"), K("max")}),
      A(Predicate::eq, {V("w"), Term{applied}}),
      A(Predicate::lang, {V("g"), K("java")}),
      A(Predicate::type, {V("w"), K("long")}),
      A(Predicate::class_, {V("k"), K("Math")}),
      A(Predicate::in_class, {V("g"), V("k")}),
      A(Predicate::namespace_, {V("m"), K("lang")}),
      A(Predicate::in_namespace, {V("g"), V("m")}),
      A(Predicate::var, {V("y1"), K("a")}),
      A(Predicate::type, {V("y1"), K("long")}),
      A(Predicate::has_param, {V("g"), V("y1"), K("1")}),
      A(Predicate::var, {V("y2"), K("b")}),
      A(Predicate::type, {V("y2"), K("long")}),
      A(Predicate::has_param, {V("g"), V("y2"), K("2")}),
  };
  return f;
}

}  // namespace

TEST_CASE("predicate table") {
  CHECK(predicate_arity(Predicate::has_param) == 3);
  for (auto p : {Predicate::fun, Predicate::eq, Predicate::lang, Predicate::type, Predicate::var,
                 Predicate::namespace_, Predicate::in_namespace, Predicate::class_,
                 Predicate::in_class}) {
    CHECK(predicate_arity(p) == 2);
    CHECK(parse_predicate(predicate_name(p)) == p);
  }
  CHECK(predicate_name(Predicate::namespace_) == "namespace");
  CHECK_FALSE(parse_predicate("param").has_value());
}

TEST_CASE("compile the java max row") {
  Formula f = compiled(kJavaMax);
  CHECK(print_formula(f) == kJavaMaxFormula);
  CHECK(f.lambdas.size() == 2);
  CHECK(f.existentials.size() == 4);
  CHECK(f.atoms.size() == 14);
  CHECK_FALSE(f.arity_open());
  CHECK_FALSE(validate_formula(f).has_value());
  CHECK(alpha_eq(f, renamed_java_max()));
}

TEST_CASE("compile with zero parameters") {
  Formula f = compiled("java lang Math::now() -> long");
  CHECK(f.lambdas.empty());
  CHECK(f.existentials.size() == 4);
  CHECK(f.atoms.size() == 8);
  CHECK(print_atom(f.atoms[1]) == "eq(v,now())");
}

TEST_CASE("compile a wildcard query") {
  Formula f = compiled("java N? C?::f?(long:a,long:p?) -> long");
  REQUIRE(f.existentials.size() == 8);
  CHECK(f.existentials[4] == Var{"N", true});
  CHECK(f.existentials[5] == Var{"C", true});
  CHECK(f.existentials[6] == Var{"f", true});
  CHECK(f.existentials[7] == Var{"p", true});
  CHECK(f.atoms.size() == 8 + 3 * 2);
  CHECK(print_atom(f.atoms[0]) == "fun(f,f?)");
  CHECK(print_atom(f.atoms[1]) == "eq(v,f?(x1,x2))");
  CHECK(print_atom(f.atoms[6]) == "namespace(n,N?)");
  CHECK(print_atom(f.atoms[11]) == "var(x2,p?)");
  CHECK_FALSE(validate_formula(f).has_value());
}

TEST_CASE("repeated labels share one existential") {
  Formula f = compiled("java N? N?::g(T?:a,T?:b) -> T?");
  CHECK(f.existentials.size() == 6);
  CHECK(f.atoms.size() == 14);
}

TEST_CASE("UNK compiles to the UNK constant") {
  Formula f = compiled("python decimal Context::max(UNK:a,UNK:b) -> UNK");
  CHECK(print_atom(f.atoms[3]) == "type(v,UNK)");
  CHECK(print_atom(f.atoms[9]) == "type(x1,UNK)");
}

TEST_CASE("whole-list wildcard and varargs open the applied term") {
  Formula any = compiled("haskell N? C?::f'?(?) -> r?");
  CHECK(any.lambdas.empty());
  CHECK(any.atoms.size() == 8);
  CHECK(any.arity_open());
  CHECK(print_atom(any.atoms[1]) == "eq(v,f'?(...))");

  Formula va = compiled("php core builtin::max(mixed:value1,mixed:value2,...) -> mixed");
  CHECK(va.arity_open());
  CHECK(va.lambdas.size() == 2);
  CHECK(print_atom(va.atoms[1]) == "eq(v,max(x1,x2,...))");
}

TEST_CASE("compile rejects EquivIn") {
  CHECK_THROWS_AS(compiled("java a b::EquivIn(x,y)(?) -> r?"), UnsupportedHead);
}

TEST_CASE("beta application") {
  Formula f = compiled(kJavaMax);
  Formula g = beta_apply(f, {"4L", "5L"});
  CHECK(g.lambdas.empty());
  CHECK(g.existentials == f.existentials);
  CHECK(g.atoms.size() == f.atoms.size());
  CHECK(g.atoms[1] == A(Predicate::eq, {V("v"), Term{App{Constant{"max"}, {K("4L"), K("5L")}, false}}}));
  CHECK(print_atom(g.atoms[8]) == "var(4L,a)");
  CHECK(print_atom(g.atoms[13]) == "has_param(f,5L,2)");
  CHECK_FALSE(validate_formula(g).has_value());

  Formula now = compiled("java lang Math::now() -> long");
  CHECK(beta_apply(now, {}) == now);

  CHECK_THROWS_AS(beta_apply(f, {"4L"}), ArityMismatch);
}

TEST_CASE("alpha equivalence") {
  Formula f = compiled(kJavaMax);
  CHECK(alpha_eq(f, f));

  Formula reordered = f;
  std::swap(reordered.atoms[0], reordered.atoms[1]);
  CHECK_FALSE(alpha_eq(f, reordered));

  Formula other_const = f;
  other_const.atoms[3] = A(Predicate::type, {V("v"), K("int")});
  CHECK_FALSE(alpha_eq(f, other_const));

  // Renaming that merges two binders is not a renaming.
  Formula merged = renamed_java_max();
  merged.atoms[5] = A(Predicate::in_class, {V("g"), V("m")});
  CHECK_FALSE(alpha_eq(f, merged));

  // Swapping binder order changes which variable each atom refers to.
  Formula swapped = f;
  std::swap(swapped.lambdas[0], swapped.lambdas[1]);
  CHECK_FALSE(alpha_eq(f, swapped));
}

TEST_CASE("alpha_eq is an equivalence relation on generated formulas") {
  testing::SignatureGenerator gen(31);
  auto rename = [](Formula f) {
    std::map<Var, Var> ren;
    for (auto* list : {&f.lambdas, &f.existentials})
      for (auto& v : *list) {
        Var fresh{"z_" + v.name, v.wildcard};
        ren.emplace(v, fresh);
        v = fresh;
      }
    std::function<void(Term&)> go = [&](Term& t) {
      if (auto* v = std::get_if<Var>(&t.node)) {
        if (ren.count(*v)) *v = ren.at(*v);
      } else if (auto* app = std::get_if<App>(&t.node)) {
        if (auto* hv = std::get_if<Var>(&app->head); hv && ren.count(*hv)) app->head = ren.at(*hv);
        for (auto& a : app->args) go(a);
      }
    };
    for (auto& a : f.atoms)
      for (auto& t : a.args) go(t);
    return f;
  };
  for (int i = 0; i < 200; ++i) {
    Signature s = gen.any();
    if (!s.head.is_plain()) continue;
    Formula a = compile(s);
    Formula b = rename(a);
    Formula c = rename(b);
    CHECK(alpha_eq(a, a));
    CHECK(alpha_eq(a, b));
    CHECK(alpha_eq(b, a));
    CHECK(alpha_eq(b, c));
    CHECK(alpha_eq(a, c));
    Signature t = gen.any();
    if (t.head.is_plain()) {
      Formula d = compile(t);
      CHECK(alpha_eq(a, d) == alpha_eq(d, a));
      CHECK(alpha_eq(a, d) == (print_formula(a) == print_formula(d)));
    }
  }
}

TEST_CASE("EquivIn expansion") {
  Signature q = parse_signature(
      "java java.math BigInteger::EquivIn(shiftLeft,haskell)(long:a,long:b) -> long");
  EquivExpansion e = expand_equiv(q);
  CHECK(alpha_eq(e.base, compiled("java java.math BigInteger::shiftLeft(long:a,long:b) -> long")));
  CHECK(print_signature(e.target_pattern) == "haskell N? C?::f'?(?) -> r?");
  CHECK(print_atom(e.link) == "eq(shiftLeft,f'?)");

  EquivExpansion self =
      expand_equiv(parse_signature("java lang Math::EquivIn(max,java)(?) -> r?"));
  CHECK(print_signature(self.target_pattern) == "java N? C?::f'?(?) -> r?");
  CHECK_FALSE(validate_formula(self.base).has_value());

  CHECK_THROWS_AS(expand_equiv(parse_signature(kJavaMax)), NotEquivHead);
}

TEST_CASE("formula validation") {
  Formula f = compiled(kJavaMax);
  Formula bad_arity = f;
  bad_arity.atoms[10].args.pop_back();
  CHECK(validate_formula(bad_arity).has_value());

  Formula unbound = f;
  unbound.existentials.pop_back();
  CHECK(validate_formula(unbound).has_value());

  Formula twice = f;
  twice.existentials.push_back(Var{"v"});
  CHECK(validate_formula(twice).has_value());

  Formula misplaced = f;
  misplaced.atoms[3].args[1] = misplaced.atoms[1].args[1];
  CHECK(validate_formula(misplaced).has_value());
}

TEST_CASE("print a single atom formula") {
  Formula f;
  f.atoms = {A(Predicate::lang, {K("fn"), K("java")})};
  CHECK(print_formula(f) == "lang(fn,java)");
  CHECK(print_term(skolem_term(SkolemKind::namespace_, "java.lang")) == "ns:java.lang");
}

TEST_CASE("compile shape invariants over generated ground signatures") {
  testing::SignatureGenerator gen(4242);
  for (int i = 0; i < 500; ++i) {
    Signature s = gen.ground();
    Formula f = compile(s);
    const std::size_t n = s.params.size();
    CHECK(f.lambdas.size() == n);
    CHECK(f.existentials.size() == 4);
    CHECK(f.atoms.size() == 8 + 3 * n);
    CHECK_FALSE(validate_formula(f).has_value());
    CHECK(print_formula(compile(s)) == print_formula(f));
    std::vector<std::string> args(n, "k");
    Formula g = beta_apply(f, args);
    CHECK(g.atoms.size() == f.atoms.size());
    CHECK(g.existentials.size() == f.existentials.size());
  }
}
