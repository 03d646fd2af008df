// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "generators.hpp"
#include "siglog/dsl.hpp"
#include "siglog/errors.hpp"
#include "siglog/kb.hpp"
#include "siglog/logic.hpp"
#include "siglog/normalizer.hpp"
#include "siglog/query.hpp"

using namespace siglog;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Term V(const char* n) { return var_term(n); }
Term K(const char* t) { return const_term(t); }

Formula hand_encoded_java_max() {
  Formula f;
  f.lambdas = {Var{"p1"}, Var{"p2"}};
  f.existentials = {Var{"r"}, Var{"fn"}, Var{"ns"}, Var{"cl"}};
  auto A = [](Predicate p, std::vector<Term> args) { return Atom{p, std::move(args)}; };
  f.atoms = {
      A(Predicate::fun, {V("fn"), K("max")}),
      A(Predicate::eq, {V("r"), Term{App{Constant{"max"}, {V("p1"), V("p2")}, false}}}),
      A(Predicate::lang, {V("fn"), K("java")}),
      A(Predicate::type, {V("r"), K("long")}),
      A(Predicate::class_, {V("cl"), K("Math")}),
      A(Predicate::in_class, {V("fn"), V("cl")}),
      A(Predicate::namespace_, {V("ns"), K("lang")}),
      A(Predicate::in_namespace, {V("fn"), V("ns")}),
      A(Predicate::var, {V("p1"), K("a")}),
      A(Predicate::type, {V("p1"), K("long")}),
      A(Predicate::has_param, {V("fn"), V("p1"), K("1")}),
      A(Predicate::var, {V("p2"), K("b")}),
      A(Predicate::type, {V("p2"), K("long")}),
      A(Predicate::has_param, {V("fn"), V("p2"), K("2")}),
  };
  return f;
}

void fill(FactStore& s, const std::vector<std::string>& rows) {
  for (const auto& r : rows) s.ingest(parse_signature(r));
}

std::string bindings_text(const Bindings& bs) {
  std::string out;
  for (const auto& b : bs) {
    out += "{" + serialize_key(b.key);
    for (const auto& [k, v] : b.values) out += " " + k + "=" + v;
    out += "}";
  }
  return out;
}

Outcome golden_formula() {
  Signature sig = normalize("lang Math long max(long a,long b)", Dialect::java, "java");
  std::string printed = print_signature(sig);
  if (printed != "java lang Math::max(long:a,long:b) -> long")
    return {false, "normalized to " + printed};
  Formula f = compile(sig);
  if (!alpha_eq(f, hand_encoded_java_max())) return {false, "got " + print_formula(f)};
  return {true, "14 atoms alpha-equivalent"};
}

Outcome beta() {
  Formula f = beta_apply(compile(parse_signature("java lang Math::max(long:a,long:b) -> long")),
                         {"4L", "5L"});
  if (!f.lambdas.empty()) return {false, "lambdas remain"};
  Atom expected{Predicate::eq, {V("v"), Term{App{Constant{"max"}, {K("4L"), K("5L")}, false}}}};
  std::size_t eqs = 0;
  for (const auto& a : f.atoms)
    if (a.pred == Predicate::eq) {
      ++eqs;
      if (!(a == expected)) return {false, "eq atom " + print_atom(a)};
    }
  if (eqs != 1) return {false, std::to_string(eqs) + " eq atoms"};
  return {true, "eq(v,max(4L,5L))"};
}

Outcome wildcard_query() {
  FactStore s;
  fill(s, testing::kMaxRows);
  fill(s, testing::kShiftRows);
  Signature q = parse_signature("java N? C?::f?(long:a,long:p?) -> long");
  Bindings got = answer(s, q);
  Bindings oracle = brute_force_answer(s, q);
  Bindings expected{Binding{{{"N", "lang"}, {"C", "Math"}, {"f", "max"}, {"p", "b"}},
                            FunctionKey{"java", "lang", "Math", "max", 2}}};
  if (got != oracle) return {false, "oracle disagrees: " + bindings_text(oracle)};
  if (got != expected) return {false, "got " + bindings_text(got)};
  return {true, bindings_text(got)};
}

Outcome equiv_in() {
  FactStore s;
  fill(s, testing::kShiftRows);
  EquivStore eq;
  eq.add(testing::kJavaShiftLeft, testing::kHaskellShiftL);
  eq.add(testing::kHaskellShiftL, testing::kClojureShift);
  auto run = [&](const char* target) {
    return answer_equiv(
        s, eq,
        parse_signature(std::string("java java.math BigInteger::EquivIn(shiftLeft,") + target +
                        ")(?) -> r?"));
  };
  Bindings h = run("haskell");
  if (h.size() != 1 || h.begin()->key != testing::kHaskellShiftL) return {false, bindings_text(h)};
  const auto& hv = h.begin()->values;
  if (hv.at("f'") != "shiftL" || hv.at("N") != "Data.Bits" || hv.at("C") != "builtin")
    return {false, bindings_text(h)};
  Bindings c = run("clojure");
  if (c.size() != 1 || c.begin()->key != testing::kClojureShift ||
      c.begin()->values.at("f'") != "bit-shift-left")
    return {false, bindings_text(c)};
  return {true, bindings_text(h) + " " + bindings_text(c)};
}

Outcome round_trip() {
  testing::SignatureGenerator gen(2024);
  std::size_t wild = 0, unk = 0, vararg = 0, equiv = 0, zero = 0, any = 0;
  const std::size_t n = 5000;
  for (std::size_t i = 0; i < n; ++i) {
    Signature s = gen.any();
    std::string text = print_signature(s);
    if (!(parse_signature(text) == s)) return {false, "mismatch on " + text};
    if (!is_ground(s)) ++wild;
    if (text.find("UNK") != std::string::npos) ++unk;
    if (s.vararg) ++vararg;
    if (s.head.is_equiv_in()) ++equiv;
    if (!s.params_wildcard && s.params.empty()) ++zero;
    if (s.params_wildcard) ++any;
  }
  if (!wild || !unk || !vararg || !equiv || !zero || !any) return {false, "coverage gap"};
  return {true, std::to_string(n) + " signatures; wildcard " + std::to_string(wild) + ", UNK " +
                    std::to_string(unk) + ", vararg " + std::to_string(vararg) + ", EquivIn " +
                    std::to_string(equiv) + ", zero params " + std::to_string(zero) +
                    ", (?) " + std::to_string(any)};
}

Outcome atom_counts() {
  testing::SignatureGenerator gen(99);
  const std::size_t n = 5000;
  for (std::size_t i = 0; i < n; ++i) {
    Signature s = gen.ground();
    Formula f = compile(s);
    std::size_t k = s.params.size();
    if (f.lambdas.size() != k || f.existentials.size() != 4 || f.atoms.size() != 8 + 3 * k)
      return {false, "counts wrong for " + print_signature(s)};
    if (auto problem = validate_formula(f)) return {false, *problem};
  }
  return {true, std::to_string(n) + " ground signatures"};
}

Outcome oracle_equivalence() {
  testing::CorpusGenerator gen(7);
  const std::size_t pairs = 600;
  std::size_t non_empty = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    auto sigs = gen.store(200);
    FactStore s;
    for (const auto& sig : sigs) s.ingest(sig);
    Signature q = gen.query(sigs);
    Bindings got = answer(s, q);
    if (got != brute_force_answer(s, q)) return {false, "disagree on " + print_signature(q)};
    if (!got.empty()) ++non_empty;
  }
  return {true, std::to_string(pairs) + " pairs, " + std::to_string(non_empty) + " non-empty"};
}

Outcome determinism() {
  testing::CorpusGenerator gen(5);
  std::vector<Signature> sigs;
  for (int i = 0; i < 2000; ++i) sigs.push_back(gen.stored());
  testing::SignatureGenerator wide(6);
  for (int i = 0; i < 500; ++i) sigs.push_back(wide.ground());
  auto dump = [&] {
    gen.rng().shuffle(sigs);
    FactStore s;
    for (const auto& sig : sigs) s.ingest(sig);
    std::string out;
    for (const auto& line : dump_facts(s)) out += line + "\n";
    return out;
  };
  std::string a = dump(), b = dump();
  if (a != b) return {false, "dumps differ"};
  return {true, std::to_string(a.size()) + " bytes identical"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "java max normalizes and compiles to the hand-encoded formula", 1, golden_formula},
      {"AC2", "beta application substitutes 4L, 5L", 1, beta},
      {"AC3", "wildcard query returns only java max", 1, wildcard_query},
      {"AC4", "EquivIn finds the haskell and clojure equivalents", 1, equiv_in},
      {"AC5", "print/parse round trip", 10, round_trip},
      {"AC6", "ground signatures compile to n lambdas, 4 existentials, 8+3n atoms", 10,
       atom_counts},
      {"AC7", "query engine agrees with the brute-force oracle", 60, oracle_equivalence},
      {"AC8", "fact dump is independent of ingestion order", 5, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.ok && secs < c.limit_s;
    if (o.ok && !pass) o.detail += "; over time limit";
    if (!pass) ++failures;
    std::printf("%s %s: %s (%.3fs < %.0fs) %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_s, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
