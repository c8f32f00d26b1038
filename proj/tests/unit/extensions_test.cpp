#include <functional>
#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "oaf/encodings.hpp"
#include "oaf/extensions.hpp"
#include "oaf/syntax.hpp"
#include "testutil.hpp"

using namespace oaf;
using namespace oaf::testing;

namespace {

const char* kNs = "http://oaf.example.org/test";

Library withLogics() {
  Library lib;
  lib.ns = kNs;
  lib.dependencies = builtinLogics();
  return lib;
}

Term parseIn(const Theory& th, const std::string& text,
             std::vector<std::pair<std::string, Ident>> extra = {}) {
  NameTable names;
  for (const Declaration& d : th.decls) names.add(d.name);
  for (const auto& [local, id] : extra) names.add(local, id);
  return parseTerm(text, names.resolver());
}

NT mapNamedConstants(const NT& t, const std::function<Ident(const Ident&)>& f) {
  switch (t->kind) {
    case NTerm::Const: return nconst(f(*t->ident));
    case NTerm::App: return napp(mapNamedConstants(t->a, f), mapNamedConstants(t->b, f));
    case NTerm::Lam: return nlam(t->name, mapNamedConstants(t->a, f), mapNamedConstants(t->b, f));
    case NTerm::Pi: return npi(t->name, mapNamedConstants(t->a, f), mapNamedConstants(t->b, f));
    default: return t;
  }
}

}  // namespace

TEST_CASE("pattern without parameters") {
  Pattern p{Ident(kNs, "Pat", "single"), {}, {}};
  p.body.push_back(Declaration{p.templateIdent("c"), logicConst(LogicId::HolChurch, "bool'"),
                               std::nullopt, std::nullopt, {}});
  PatternSet set;
  set.add(p);
  PatternInstance inst{Ident(kNs, "Use", "inst"), p.name, {}};
  std::vector<Declaration> out = elaboratePattern(withLogics(), inst, set);
  REQUIRE(out.size() == 1);
  CHECK(out[0].name == Ident(kNs, "Use", "inst/c"));
  CHECK(out[0].type == logicConst(LogicId::HolChurch, "bool'"));
  CHECK(out[0].meta.kind == DeclKind::PatternInstance);
  CHECK(out[0].meta.origin == PatternOrigin{inst.name, p.name});
}

TEST_CASE("HOL typedef pattern") {
  Library lib = withLogics();
  Theory th{Ident::module(kNs, "Typedefs"), logicIdent(LogicId::HolChurch), {}, {}};
  Theory hol = holChurch();
  Term pred = parseIn(hol, "[y:tm bool'] impl y y");
  PatternInstance inst{th.declIdent("nonempty"), typedefPattern().name,
                       {logicConst(LogicId::HolChurch, "bool'"), pred}};
  std::vector<Declaration> out = elaboratePattern(lib, inst);
  REQUIRE(out.size() == 3);

  // Hand-substituted templates.
  std::vector<std::pair<std::string, Ident>> gen = {{"T", th.declIdent("nonempty/T")},
                                                    {"rep", th.declIdent("nonempty/rep")}};
  CHECK(out[0].name == th.declIdent("nonempty/T"));
  CHECK(out[0].type == parseIn(hol, "tp"));
  CHECK(out[1].name == th.declIdent("nonempty/rep"));
  CHECK(out[1].type == parseIn(hol, "tm (arrow T bool')", gen));
  CHECK(out[2].name == th.declIdent("nonempty/rep_prop"));
  CHECK(out[2].type ==
        parseIn(hol, "ded (forall T [x:tm T] ([y:tm bool'] impl y y) (app T bool' rep x))", gen));

  th.decls = out;
  lib.theories.push_back(th);
  CHECK(checkTheory(lib, th.name).ok());
}

TEST_CASE("FOL functor definition pattern") {
  Library lib = withLogics();
  Theory th{Ident::module(kNs, "Defs"), logicIdent(LogicId::FolSoft), {}, {}};
  Term pred = parseIn(folSoft(), "[x:set] [y:set] eq' y x");
  PatternInstance inst{th.declIdent("id"), funcDefinitionPattern().name, {pred}};
  std::vector<Declaration> out = elaboratePattern(lib, inst);
  REQUIRE(out.size() == funcDefinitionPattern().body.size());
  th.decls = out;
  lib.theories.push_back(th);
  CHECK(checkTheory(lib, th.name).ok());
}

TEST_CASE("elaboration errors") {
  Library lib = withLogics();
  Ident home(kNs, "Use", "bad");
  CHECK(errorOf([&] { elaboratePattern(lib, {home, funcDefinitionPattern().name, {}}); }) ==
        ErrorCode::ArityMismatch);
  CHECK(errorOf([&] {
          elaboratePattern(lib, {home, funcDefinitionPattern().name,
                                 {logicConst(LogicId::FolSoft, "not'")}});
        }) == ErrorCode::Mismatch);
  CHECK(errorOf([&] { elaboratePattern(lib, {home, Ident(kNs, "Pat", "none"), {}}); }) ==
        ErrorCode::UnknownIdent);
}

namespace {

struct RandomPattern {
  Pattern pattern;
  NCtx params;
  std::vector<std::pair<std::string, NT>> templates;  // local name, named type
};

RandomPattern randomPattern(TermGen& gen, int id) {
  RandomPattern rp{Pattern{Ident(kNs, "Pat", "rp" + std::to_string(id)), {}, {}}, {}, {}};
  NT a = nconst(genConst("a"));
  std::size_t arity = gen.pick(4);
  for (std::size_t i = 0; i < arity; ++i) {
    std::string x = gen.freshVar();
    std::vector<NT> choices = {a, nconst(genConst("b")), npi("_", a, a)};
    for (const auto& [prev, ty] : rp.params)
      if (ty->kind == NTerm::Const && *ty->ident == genConst("a"))
        choices.push_back(napp(nconst(genConst("p")), nvar(prev)));
    rp.params.emplace_back(x, choices[gen.pick(choices.size())]);
  }
  std::vector<std::string> siblingsOfA;
  std::size_t count = 1 + gen.pick(3);
  for (std::size_t k = 0; k < count; ++k) {
    std::string local = "t" + std::to_string(k);
    NT type;
    switch (gen.pick(3)) {
      case 0: type = a; break;
      case 1: type = napp(nconst(genConst("p")), gen.gen(rp.params, a, 2)); break;
      default:
        if (!siblingsOfA.empty()) {
          type = napp(nconst(genConst("p")),
                      nconst(rp.pattern.templateIdent(siblingsOfA[gen.pick(siblingsOfA.size())])));
        } else {
          type = npi("_", a, nconst(genConst("b")));
        }
    }
    if (type->kind == NTerm::Const && *type->ident == genConst("a")) siblingsOfA.push_back(local);
    rp.templates.emplace_back(local, type);
    Declaration d{rp.pattern.templateIdent(local), toDeBruijn(type, names(rp.params)),
                  std::nullopt, std::nullopt, {}};
    rp.pattern.body.push_back(d);
  }
  rp.pattern.params = toContext(rp.params);
  return rp;
}

std::vector<NT> randomArgs(TermGen& gen, const NCtx& params) {
  std::vector<NT> args;
  for (std::size_t i = 0; i < params.size(); ++i) {
    NT type = params[i].second;
    for (std::size_t j = 0; j < i; ++j) type = nsubst(type, params[j].first, args[j]);
    args.push_back(gen.gen({}, type, 3));
  }
  return args;
}

}  // namespace

TEST_CASE("random patterns agree with per-template substitution") {
  TermGen gen(61);
  for (int round = 0; round < 100; ++round) {
    RandomPattern rp = randomPattern(gen, round);
    PatternSet set;
    set.add(rp.pattern);
    std::vector<NT> args = randomArgs(gen, rp.params);
    Ident instName(kNs, "Inst", "i" + std::to_string(round));
    PatternInstance inst{instName, rp.pattern.name, {}};
    for (const NT& x : args) inst.args.push_back(toDeBruijn(x, {}));

    Library lib = genLibrary();
    std::vector<Declaration> out = elaboratePattern(lib, inst, set);
    REQUIRE(out.size() == rp.templates.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
      NT expected = rp.templates[k].second;
      for (std::size_t i = 0; i < args.size(); ++i)
        expected = nsubst(expected, rp.params[i].first, args[i]);
      expected = mapNamedConstants(expected, [&](const Ident& id) {
        std::string local = rp.pattern.templateName(id);
        return local.empty() ? id : Ident(kNs, "Inst", instName.name() + "/" + local);
      });
      CHECK(out[k].name == Ident(kNs, "Inst", instName.name() + "/" + rp.templates[k].first));
      CHECK(*out[k].type == toDeBruijn(expected, {}));
    }

    // Generated declarations check when appended to the instantiating theory.
    Theory home{Ident::module(kNs, "Inst"), frameworkLF(), {genTheory().name}, out};
    lib.theories.push_back(home);
    CheckReport r = checkTheory(lib, home.name);
    CHECK_MESSAGE(r.ok(), (r.entries.empty() ? r.fatalMessage : r.entries[0].message));
  }
}

TEST_CASE("elaboration commutes with renaming argument constants") {
  // Extra provides fresh constants for the arguments; sigma renames them.
  Library lib = genLibrary();
  Theory extra{Ident::module(kNs, "Extra"), frameworkLF(), {genTheory().name}, {}};
  for (const char* n : {"ea", "ea2"})
    extra.decls.push_back(Declaration{extra.declIdent(n), Term::constant(genConst("a")),
                                      std::nullopt, std::nullopt, {}});
  for (const char* n : {"eb", "eb2"})
    extra.decls.push_back(Declaration{extra.declIdent(n), Term::constant(genConst("b")),
                                      std::nullopt, std::nullopt, {}});
  lib.theories.push_back(extra);

  auto tau = [&](const Ident& id) {
    if (id == genConst("ca")) return Term::constant(extra.declIdent("ea"));
    if (id == genConst("cb")) return Term::constant(extra.declIdent("eb"));
    if (id == genConst("pca"))
      return Term::apply(Term::constant(genConst("mk")), Term::constant(extra.declIdent("ea")));
    return Term::constant(id);
  };
  auto sigma = [&](const Ident& id) {
    if (id == extra.declIdent("ea")) return Term::constant(extra.declIdent("ea2"));
    if (id == extra.declIdent("eb")) return Term::constant(extra.declIdent("eb2"));
    return Term::constant(id);
  };

  TermGen gen(67);
  for (int round = 0; round < 100; ++round) {
    RandomPattern rp = randomPattern(gen, round);
    PatternSet set;
    set.add(rp.pattern);
    std::vector<NT> args = randomArgs(gen, rp.params);
    PatternInstance inst{Ident(kNs, "Extra", "j" + std::to_string(round)), rp.pattern.name, {}};
    PatternInstance renamed = inst;
    for (const NT& x : args) {
      Term arg = mapConstants(toDeBruijn(x, {}), tau);
      inst.args.push_back(arg);
      renamed.args.push_back(mapConstants(arg, sigma));
    }
    std::vector<Declaration> plain = elaboratePattern(lib, inst, set);
    std::vector<Declaration> moved = elaboratePattern(lib, renamed, set);
    REQUIRE(plain.size() == moved.size());
    for (std::size_t k = 0; k < plain.size(); ++k)
      CHECK(mapConstants(*plain[k].type, sigma) == *moved[k].type);
  }
}

TEST_CASE("closeToplevel") {
  Term stmt = Term::constant(genConst("a"));
  CHECK(closeToplevel({Context(), stmt}) == stmt);

  Theory fol = folSoft();
  Context vars;
  vars.push("P", parseIn(fol, "set -> prop"));
  Term body = parseIn(fol, "ded (forallSet [x:set] impl' (#0 x) (#0 x))");
  Term closed = closeToplevel({vars, body});
  CHECK(closed == Term::pi("P", parseIn(fol, "set -> prop"), body));
  CHECK(closed.looseBound() == 0);
  Signature sig = Signature::ofLibrary(withLogics());
  CHECK_NOTHROW(checkClassifier(sig, {}, closed));
}

TEST_CASE("closure typing matches open typing") {
  Signature sig = genSignature();
  TermGen gen(71);
  NT a = nconst(genConst("a"));
  int good = 0, bad = 0;
  for (int round = 0; round < 200; ++round) {
    NCtx vars;
    std::size_t n = 1 + gen.pick(3);
    for (std::size_t i = 0; i < n; ++i) vars.emplace_back(gen.freshVar(), gen.randomType(1));
    // Statements: some well-formed types, some ill-formed.
    std::vector<NT> candidates = {a, napp(nconst(genConst("p")), gen.gen(vars, a, 2)),
                                  nvar(vars[gen.pick(n)].first),
                                  napp(nconst(genConst("p")), nconst(genConst("cb"))),
                                  npi("_", gen.randomType(1), nconst(genConst("b")))};
    NT stmt = candidates[gen.pick(candidates.size())];
    SchematicDecl sd{toContext(vars), toDeBruijn(stmt, names(vars))};
    bool open = !errorOf([&] { checkClassifier(sig, sd.schematicVars, sd.statement); });
    bool closedOk = !errorOf([&] { checkClassifier(sig, {}, closeToplevel(sd)); });
    CHECK(open == closedOk);
    (open ? good : bad)++;
  }
  CHECK(good > 20);
  CHECK(bad > 20);
}

TEST_CASE("instantiating the closure equals substituting the open statement") {
  Signature sig = genSignature();
  TermGen gen(73);
  NT a = nconst(genConst("a"));
  for (int round = 0; round < 100; ++round) {
    std::string x = gen.freshVar();
    NCtx vars = {{x, a}};
    NT stmt = gen.pick(2) ? napp(nconst(genConst("p")), gen.gen(vars, a, 3))
                          : npi("_", napp(nconst(genConst("p")), nvar(x)), nconst(genConst("b")));
    SchematicDecl sd{toContext(vars), toDeBruijn(stmt, {x})};
    Term c = toDeBruijn(gen.gen({}, a, 3), {});
    Term expected = substitute(sd.statement, 0, c);
    // Pi elimination: a proof h of the closure applied to c.
    Context ctx;
    ctx.push("h", closeToplevel(sd));
    CHECK(equal(sig, ctx, infer(sig, ctx, Term::apply(Term::var(0), c)), shift(expected, 1)));
    // The lambda with the same binder spine beta-reduces to the instance.
    Term lam = Term::lambda(x, sd.schematicVars.entries()[0].type, sd.statement);
    CHECK(whnf(sig, Term::apply(lam, c)) == whnf(sig, expected));
    CHECK(groundInstances(sd, {c}, 1) == std::vector<Term>{expected});
  }
}

TEST_CASE("groundInstances") {
  Theory hol = holChurch();
  Context vars;
  vars.push("A", parseIn(hol, "tp"));
  SchematicDecl sd{vars, parseIn(hol, "tm #0 -> tm #0")};
  Signature sig = Signature::ofLibrary(withLogics());
  CHECK(groundInstances(sd, {parseIn(hol, "bool'")}, 0).empty());
  std::vector<Term> out = groundInstances(sd, {parseIn(hol, "bool'")}, 5, &sig);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == parseIn(hol, "tm bool' -> tm bool'"));
  CHECK_NOTHROW(checkClassifier(sig, {}, out[0]));

  std::vector<Term> cands = {parseIn(hol, "bool'"), parseIn(hol, "arrow bool' bool'"),
                             parseIn(hol, "arrow (arrow bool' bool') bool'")};
  std::vector<Term> two = groundInstances(sd, cands, 2, &sig);
  REQUIRE(two.size() == 2);
  CHECK(two[1] == parseIn(hol, "tm (arrow bool' bool') -> tm (arrow bool' bool')"));
  CHECK(errorOf([&] { groundInstances(sd, {parseIn(hol, "tm")}, 3, &sig); }) ==
        ErrorCode::Mismatch);

  Context two_vars = vars;
  two_vars.push("B", parseIn(hol, "tp"));
  CHECK(errorOf([&] { groundInstances({two_vars, parseIn(hol, "tm #0")}, {}, 3); }) ==
        ErrorCode::ArityUnsupported);
}
