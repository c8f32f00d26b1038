#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "named.hpp"
#include "oaf/kernel.hpp"
#include "oaf/syntax.hpp"
#include "properties.hpp"
#include "testutil.hpp"

using namespace oaf;
using namespace oaf::testing;

namespace {

Term C(const std::string& local) { return Term::constant(genConst(local)); }

Term parseGen(const std::string& text) {
  NameTable names;
  for (const Declaration& d : genTheory().decls) names.add(d.name);
  return parseTerm(text, names.resolver());
}

Declaration decl(const Ident& name, std::optional<Term> type, std::optional<Term> def = {}) {
  Declaration d{name, std::move(type), std::move(def), std::nullopt, {}};
  if (d.definiens) d.meta.kind = DeclKind::Definition;
  return d;
}

}  // namespace

TEST_SUITE("substitute") {
  TEST_CASE("replaces the target variable") {
    CHECK(substitute(Term::var(0), 0, C("ca")) == C("ca"));
  }

  TEST_CASE("shifts under a binder") {
    Term t = Term::lambda("x", C("a"), Term::var(1));
    CHECK(substitute(t, 0, C("ca")) == Term::lambda("x", C("a"), C("ca")));
  }

  TEST_CASE("removes the substituted binder from outer indices") {
    // Scope [y, x] with x innermost: [y/x](x y) = y y.
    Term t = Term::apply(Term::var(0), Term::var(1));
    Term got = substitute(t, 0, Term::var(0));
    NT named = nsubst(napp(nvar("x"), nvar("y")), "x", nvar("y"));
    CHECK(got == toDeBruijn(named, {"y"}));
    CHECK(got == Term::apply(Term::var(0), Term::var(0)));
  }

  TEST_CASE("agrees with named substitution on random terms") {
    std::mt19937_64 rng(7);
    std::vector<Ident> consts = {genConst("a"), genConst("ca"), genConst("f")};
    std::vector<std::string> pool = {"u", "v", "w", "x", "z"};
    for (int i = 0; i < 200; ++i) {
      std::size_t depth = rng() % 3;
      std::vector<std::string> outer = {"u", "v"};
      std::vector<std::string> innerNames = {"z0", "z1", "z2"};
      std::vector<std::string> full = outer;
      full.push_back("x");
      for (std::size_t k = 0; k < depth; ++k) full.push_back(innerNames[k]);
      std::vector<std::string> after = outer;
      for (std::size_t k = 0; k < depth; ++k) after.push_back(innerNames[k]);

      NT t = randomNamed(rng, full, consts, pool, 4);
      NT s = randomNamed(rng, outer, consts, pool, 3);
      Term expected = toDeBruijn(nsubst(t, "x", s), after);
      Term got = substitute(toDeBruijn(t, full), static_cast<std::uint32_t>(depth),
                            toDeBruijn(s, outer));
      CHECK_MESSAGE(got == expected, printTerm(toDeBruijn(t, full)));
    }
  }
}

namespace {

// One head step: unfold a defined head or contract a head beta redex.
std::optional<Term> headStep(const Signature& sig, const Term& t) {
  std::vector<Term> args = t.spineArgs();
  const Term& h = t.head();
  if (h.is(Term::Kind::Const)) {
    const Declaration* d = sig.find(h.ident());
    if (d && d->definiens) return Term::apply(*d->definiens, args);
    return std::nullopt;
  }
  if (h.is(Term::Kind::Lambda) && !args.empty()) {
    Term reduced = instantiate(h.body(), args.front());
    return Term::apply(reduced, std::vector<Term>(args.begin() + 1, args.end()));
  }
  return std::nullopt;
}

Term iterateToFixpoint(const Signature& sig, Term t) {
  for (int i = 0; i < 10000; ++i) {
    std::optional<Term> next = headStep(sig, t);
    if (!next) return t;
    t = *next;
  }
  throw std::runtime_error("oracle did not terminate");
}

}  // namespace

TEST_SUITE("whnf") {
  TEST_CASE("beta identity") {
    Signature sig = genSignature();
    Term t = Term::apply(Term::lambda("x", C("a"), Term::var(0)), C("ca"));
    CHECK(whnf(sig, t) == C("ca"));
  }

  TEST_CASE("subtype elimination cancels introduction") {
    Signature sig = genSignature();
    CHECK(whnf(sig, Term::subOut(Term::subIn(C("ca"), C("pca")))) == C("ca"));
  }

  TEST_CASE("unfolds a definition to its lambda") {
    Signature sig = genSignature();
    CHECK(whnf(sig, C("idA")) == Term::lambda("x", C("a"), Term::var(0)));
  }

  TEST_CASE("matches an iterated single-step unfolder on random signatures") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 100; ++round) {
      Signature sig;
      Ident base("http://oaf.example.org/test", "R", "c");
      sig.add(decl(base, Term::type()));
      std::vector<Ident> defs;
      std::size_t n = 1 + rng() % 6;
      for (std::size_t i = 0; i < n; ++i) {
        Ident id("http://oaf.example.org/test", "R", "d" + std::to_string(i));
        Term prev = defs.empty() ? Term::constant(base) : Term::constant(defs[rng() % defs.size()]);
        Term ident = Term::lambda("x", Term::constant(base), Term::var(0));
        std::vector<Term> shapes = {
            ident,
            prev,
            Term::apply(ident, prev),
            Term::lambda("y", Term::constant(base), Term::apply(prev, Term::var(0))),
            Term::apply(Term::lambda("k", Term::type(), Term::var(0)), prev),
        };
        Term def = shapes[rng() % shapes.size()];
        sig.add(decl(id, std::nullopt, def));
        defs.push_back(id);
      }
      Term probe = Term::constant(defs.back());
      if (rng() % 2) probe = Term::apply(probe, Term::constant(base));
      CHECK(whnf(sig, probe) == iterateToFixpoint(sig, probe));
    }
  }

  TEST_CASE("divergence hits the reduction budget") {
    Signature sig;
    Ident loop("http://oaf.example.org/test", "R", "loop");
    sig.add(decl(loop, std::nullopt, Term::constant(loop)));
    CHECK(errorOf([&] { whnf(sig, Term::constant(loop)); }) == ErrorCode::ReductionDepthExceeded);

    // (\x. x x) (\x. x x)
    Term w = Term::lambda("x", Term::type(), Term::apply(Term::var(0), Term::var(0)));
    CHECK(errorOf([&] { whnf(sig, Term::apply(w, w)); }) == ErrorCode::ReductionDepthExceeded);
  }

  TEST_CASE("budget is configurable") {
    Signature sig;
    Ident prev("http://oaf.example.org/test", "R", "c");
    sig.add(decl(prev, Term::type()));
    for (int i = 0; i < 20; ++i) {
      Ident id("http://oaf.example.org/test", "R", "d" + std::to_string(i));
      sig.add(decl(id, std::nullopt, Term::constant(prev)));
      prev = id;
    }
    KernelOptions tight;
    tight.reductionBudget = 10;
    CHECK(errorOf([&] { whnf(sig, Term::constant(prev), tight); }) ==
          ErrorCode::ReductionDepthExceeded);
    CHECK(whnf(sig, Term::constant(prev)).ident().name() == "c");
  }
}

TEST_SUITE("equal") {
  TEST_CASE("reflexivity and eta") {
    Signature sig = genSignature();
    Term t = parseGen("twice idA ca");
    CHECK(equal(sig, {}, t, t));
    Term eta = Term::lambda("x", C("a"), Term::apply(C("f"), Term::var(0)));
    CHECK(equal(sig, {}, eta, C("f")));
    CHECK(equal(sig, {}, C("f"), eta));
    KernelOptions noEta;
    noEta.eta = false;
    CHECK_FALSE(equal(sig, {}, eta, C("f"), noEta));
  }

  TEST_CASE("subtype witnesses are irrelevant") {
    Signature sig = genSignature();
    KernelOptions refine;
    refine.refinement = true;
    Term p1 = C("pca"), p2 = parseGen("mk ca");
    CHECK(equal(sig, {}, Term::subIn(C("ca"), p1), Term::subIn(C("ca"), p2), refine));
    CHECK(equal(sig, {}, Term::subIn(C("ca"), p1),
                Term::subIn(parseGen("idA ca"), parseGen("mk (idA ca)")), refine));
    CHECK_FALSE(equal(sig, {}, Term::subIn(C("ca"), p1),
                      Term::subIn(parseGen("g cb ca"), parseGen("mk (g cb ca)")), refine));
  }

  TEST_CASE("agrees with normalize-and-compare on generated terms") {
    Signature sig = genSignature();
    std::map<Ident, NT> defs = genDefinitions();
    TermGen gen(23);
    std::vector<NT> pool;
    NT a = nconst(genConst("a"));
    for (int i = 0; i < 40; ++i) pool.push_back(gen.gen({}, a, 3));
    // Some deliberate convertible pairs.
    pool.push_back(nconst(genConst("ca")));
    pool.push_back(napp(nconst(genConst("idA")), nconst(genConst("ca"))));

    std::vector<NT> normal;
    std::vector<Term> terms;
    for (const NT& t : pool) {
      normal.push_back(nnormalize(t, defs));
      terms.push_back(toDeBruijn(t, {}));
    }
    KernelOptions refine;
    refine.refinement = true;
    int agreements = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = 0; j < pool.size(); ++j) {
        bool oracle = alphaEqual(normal[i], normal[j]);
        CHECK(equal(sig, {}, terms[i], terms[j]) == oracle);
        // Witness erasure: SubIn pairs are equal iff their elements are.
        Term wi = Term::subIn(terms[i], Term::apply(C("mk"), terms[i]));
        Term wj = Term::subIn(terms[j], C("pca"));
        CHECK(equal(sig, {}, wi, wj, refine) == oracle);
        agreements += oracle ? 1 : 0;
      }
    CHECK(agreements > static_cast<int>(pool.size()));
  }

  TEST_CASE("equivalence relation and congruence under application") {
    Signature sig = genSignature();
    TermGen gen(29);
    NT a = nconst(genConst("a"));
    NT aa = npi("_", a, a);
    std::vector<Term> args, fns;
    for (int i = 0; i < 14; ++i) args.push_back(toDeBruijn(gen.gen({}, a, 3), {}));
    for (int i = 0; i < 10; ++i) fns.push_back(toDeBruijn(gen.gen({}, aa, 3), {}));
    args.push_back(parseGen("idA ca"));
    args.push_back(C("ca"));
    fns.push_back(C("idA"));
    fns.push_back(parseGen("[z:a] z"));

    auto eq = [&](const Term& x, const Term& y) { return equal(sig, {}, x, y); };
    for (const Term& x : args) {
      CHECK(eq(x, x));
      for (const Term& y : args) {
        CHECK(eq(x, y) == eq(y, x));
        if (!eq(x, y)) continue;
        for (const Term& z : args)
          if (eq(y, z)) CHECK(eq(x, z));
      }
    }
    for (const Term& f1 : fns)
      for (const Term& f2 : fns)
        for (const Term& a1 : args)
          for (const Term& a2 : args)
            if (eq(f1, f2) && eq(a1, a2)) CHECK(eq(Term::apply(f1, a1), Term::apply(f2, a2)));
  }
}

TEST_SUITE("infer and check") {
  TEST_CASE("constants and lambdas") {
    Signature sig = genSignature();
    CHECK(infer(sig, {}, C("a")) == Term::type());
    CHECK(infer(sig, {}, Term::lambda("x", C("a"), Term::var(0))) ==
          Term::pi("x", C("a"), C("a")));
    CHECK(infer(sig, {}, parseGen("mk ca")) == parseGen("p ca"));
  }

  TEST_CASE("error cases") {
    Signature sig = genSignature();
    CHECK(errorOf([&] { infer(sig, {}, Term::type()); }) == ErrorCode::NotTyped);
    CHECK(errorOf([&] { infer(sig, {}, Term::constant(genConst("nope"))); }) ==
          ErrorCode::UnknownIdent);
    CHECK(errorOf([&] { check(sig, {}, Term::apply(C("ca"), C("ca")), C("a")); }) ==
          ErrorCode::NotAFunction);
    CHECK(errorOf([&] { check(sig, {}, C("ca"), C("b")); }) == ErrorCode::Mismatch);
    CHECK(errorOf([&] { infer(sig, {}, Term::apply(C("f"), C("cb"))); }) == ErrorCode::Mismatch);
    CHECK(errorOf([&] { infer(sig, {}, Term::var(0)); }) == ErrorCode::IllScoped);
    CHECK(errorOf([&] { infer(sig, {}, Term::subType(C("a"), C("p"))); }) ==
          ErrorCode::ExtensionDisabled);
  }

  TEST_CASE("declared types check") {
    Signature sig = genSignature();
    for (const Declaration& d : genTheory().decls) {
      if (!d.type) continue;
      if (d.type->is(Term::Kind::TypeKind)) {
        CHECK(infer(sig, {}, Term::constant(d.name)) == Term::type());
        continue;
      }
      CHECK_NOTHROW(check(sig, {}, Term::constant(d.name), *d.type));
    }
  }

  TEST_CASE("lambda checks against a pi with a convertible domain") {
    Signature sig = genSignature();
    Term lam = Term::lambda("x", C("a"), Term::apply(C("mk"), Term::var(0)));
    Term expected = parseGen("{y:a} p (idA y)");
    CHECK_NOTHROW(check(sig, {}, lam, expected));
  }

  TEST_CASE("infer agrees with generator types") {
    Signature sig = genSignature();
    TermGen gen(31);
    for (int i = 0; i < 500; ++i) {
      Typed t = gen.closed(5);
      Term term = toDeBruijn(t.term, {});
      Term type = toDeBruijn(t.type, {});
      Term inferred = infer(sig, {}, term);
      CHECK_MESSAGE(equal(sig, {}, inferred, type), printTerm(term));
    }
  }

  TEST_CASE("typing in a context") {
    Signature sig = genSignature();
    Context ctx;
    ctx.push("x", C("a"));
    ctx.push("h", Term::apply(C("p"), Term::var(0)));
    CHECK(infer(sig, ctx, Term::var(0)) == Term::apply(C("p"), Term::var(1)));
    CHECK(infer(sig, ctx, Term::apply(Term::apply(C("use"), Term::var(1)), Term::var(0))) ==
          C("b"));
  }
}

TEST_SUITE("properties") {
  TEST_CASE("kernel properties on generated terms") {
    for (const PropertyOutcome& p :
         {substitutionLemma(101, 200), subjectReduction(102, 200), whnfIdempotence(103, 200),
          alphaInvariance(104, 200)}) {
      INFO(p.name << ": " << p.firstFailure);
      CHECK(p.cases == 200);
      CHECK(p.failures == 0);
    }
  }
}

namespace {

const char* kNs = "http://oaf.example.org/test";

Theory emptyTheory(const std::string& name, std::vector<std::string> includes = {}) {
  Theory th{Ident::module(kNs, name), frameworkLF(), {}, {}};
  for (const std::string& inc : includes) th.includes.push_back(Ident::module(kNs, inc));
  return th;
}

Declaration typeDecl(const Theory& th, const std::string& name) {
  Declaration d{th.declIdent(name), Term::type(), std::nullopt, std::nullopt, {}};
  d.meta.kind = DeclKind::Type;
  return d;
}

}  // namespace

TEST_SUITE("checkTheory") {
  TEST_CASE("test signature passes") {
    Library lib = genLibrary();
    CheckReport r = checkTheory(lib, genTheory().name);
    CHECK(r.ok());
    CHECK(r.entries.size() == genTheory().decls.size());
  }

  TEST_CASE("empty theory passes with no entries") {
    Library lib;
    lib.ns = kNs;
    lib.theories.push_back(emptyTheory("E"));
    CheckReport r = checkTheory(lib, Ident::module(kNs, "E"));
    CHECK(r.ok());
    CHECK(r.entries.empty());
  }

  TEST_CASE("dependency failures are isolated") {
    Library lib = genLibrary();
    Theory th{Ident::module(kNs, "Deps"), frameworkLF(), {genTheory().name}, {}};
    auto axiom = [&](const std::string& name) {
      Declaration d{th.declIdent(name), parseGen("p ca"), std::nullopt, std::nullopt, {}};
      d.meta.kind = DeclKind::Axiom;
      return d;
    };
    auto theorem = [&](const std::string& name, std::vector<Ident> deps) {
      Declaration d{th.declIdent(name), parseGen("p ca"), std::nullopt, dependsOn(deps), {}};
      d.meta.kind = DeclKind::Theorem;
      return d;
    };
    Ident unknown(kNs, "Deps", "nowhere");
    th.decls.push_back(axiom("ax"));
    th.decls.push_back(theorem("t1", {th.declIdent("ax")}));
    th.decls.push_back(theorem("t2", {unknown}));
    th.decls.push_back(theorem("t3", {th.declIdent("t1"), th.declIdent("ax")}));
    th.decls.push_back(theorem("t4", {th.declIdent("ax"), Ident(kNs, "Other", "x")}));
    th.decls.push_back(theorem("t5", {genConst("ca")}));
    lib.theories.push_back(th);

    CheckReport r = checkTheory(lib, th.name);
    REQUIRE(r.entries.size() == 6);

    // Oracle: every dependency must be in the flattened theory, or in scope
    // before the citing declaration (own earlier declarations).
    std::set<Ident> visible;
    for (const Declaration& d : flatten(lib, genTheory().name)) visible.insert(d.name);
    for (std::size_t i = 0; i < th.decls.size(); ++i) {
      const Declaration& d = th.decls[i];
      bool resolves = true;
      if (d.proof)
        for (const Ident& id : std::get<DependsOnProof>(*d.proof).ids)
          resolves = resolves && visible.count(id) != 0;
      const DeclStatus* s = r.find(d.name);
      REQUIRE(s != nullptr);
      if (!resolves) {
        CHECK_FALSE(s->ok);
        CHECK(s->error == ErrorCode::UnknownIdent);
      } else if (d.name.name() != "t5") {
        CHECK(s->ok);
      }
      visible.insert(d.name);
    }
    // Citing a plain constant is an invalid dependency, not a missing one.
    CHECK(r.find(th.declIdent("t5"))->error == ErrorCode::InvalidDependency);
  }

  TEST_CASE("per-declaration errors") {
    Library lib = genLibrary();
    Theory th{Ident::module(kNs, "Bad"), frameworkLF(), {genTheory().name}, {}};
    auto add = [&](const std::string& name, std::optional<Term> type, std::optional<Term> def,
                   DeclKind kind = DeclKind::Constant) {
      Declaration d{th.declIdent(name), std::move(type), std::move(def), std::nullopt, {}};
      d.meta.kind = kind;
      th.decls.push_back(d);
    };
    add("wrongDef", C("a"), C("cb"), DeclKind::Definition);
    add("inferred", std::nullopt, parseGen("f ca"), DeclKind::Definition);
    add("badType", parseGen("ca"), std::nullopt);
    add("usesBad", Term::constant(th.declIdent("badType")), std::nullopt);
    add("usesInferred", Term::apply(Term::apply(C("g"), Term::constant(th.declIdent("inferred"))), C("ca")),
        std::nullopt);
    add("empty", std::nullopt, std::nullopt);
    add("noProof", C("a"), std::nullopt, DeclKind::Theorem);
    add("wrongDef", C("a"), std::nullopt);
    lib.theories.push_back(th);

    CheckReport r = checkTheory(lib, th.name);
    REQUIRE(r.entries.size() == 8);
    CHECK(r.entries[0].error == ErrorCode::Mismatch);
    CHECK(r.entries[1].ok);
    CHECK(r.entries[2].error == ErrorCode::Mismatch);
    CHECK(r.entries[3].error == ErrorCode::UnknownIdent);
    CHECK_FALSE(r.entries[4].ok);  // a b-typed term used as a type
    CHECK(r.entries[5].error == ErrorCode::InvalidDeclaration);
    CHECK(r.entries[6].error == ErrorCode::InvalidDeclaration);
    CHECK(r.entries[7].error == ErrorCode::DuplicateName);
    CHECK(r.failed() == 7);
  }

  TEST_CASE("proof terms are checked against the statement") {
    Library lib = genLibrary();
    Theory th{Ident::module(kNs, "Proofs"), frameworkLF(), {genTheory().name}, {}};
    Declaration good{th.declIdent("good"), parseGen("p (idA ca)"), std::nullopt,
                     Proof(TermProof{parseGen("mk ca")}), {}};
    good.meta.kind = DeclKind::Theorem;
    Declaration bad{th.declIdent("bad"), parseGen("p ca"), std::nullopt,
                    Proof(TermProof{parseGen("mk (g cb ca)")}), {}};
    bad.meta.kind = DeclKind::Theorem;
    th.decls = {good, bad};
    lib.theories.push_back(th);
    CheckReport r = checkTheory(lib, th.name);
    CHECK(r.entries[0].ok);
    CHECK(r.entries[1].error == ErrorCode::Mismatch);
  }

  TEST_CASE("include cycles are fatal") {
    Library lib;
    lib.ns = kNs;
    lib.theories = {emptyTheory("A", {"B"}), emptyTheory("B", {"A"})};
    CheckReport r = checkTheory(lib, Ident::module(kNs, "A"));
    CHECK(r.fatal == ErrorCode::Cycle);
    CHECK_FALSE(r.ok());
  }
}

TEST_SUITE("flatten") {
  TEST_CASE("no includes gives own declarations") {
    Library lib = genLibrary();
    std::vector<Declaration> flat = flatten(lib, genTheory().name);
    REQUIRE(flat.size() == genTheory().decls.size());
    for (std::size_t i = 0; i < flat.size(); ++i) CHECK(flat[i].name == genTheory().decls[i].name);
  }

  TEST_CASE("diamond deduplicates") {
    Library lib;
    lib.ns = kNs;
    Theory a = emptyTheory("A"), b = emptyTheory("B", {"A"}), c = emptyTheory("C", {"A"}),
           d = emptyTheory("D", {"B", "C"});
    a.decls.push_back(typeDecl(a, "x"));
    b.decls.push_back(typeDecl(b, "y"));
    c.decls.push_back(typeDecl(c, "z"));
    d.decls.push_back(typeDecl(d, "w"));
    lib.theories = {a, b, c, d};
    std::vector<std::string> names;
    for (const Declaration& decl : flatten(lib, d.name)) names.push_back(decl.name.str());
    CHECK(names == std::vector<std::string>{a.declIdent("x").str(), b.declIdent("y").str(),
                                            c.declIdent("z").str(), d.declIdent("w").str()});
    CHECK(checkTheory(lib, d.name).ok());
  }

  TEST_CASE("cycles and unknown includes") {
    Library lib;
    lib.ns = kNs;
    lib.theories = {emptyTheory("A", {"B"}), emptyTheory("B", {"C"}), emptyTheory("C", {"A"}),
                    emptyTheory("D", {"Missing"})};
    CHECK(errorOf([&] { flatten(lib, Ident::module(kNs, "A")); }) == ErrorCode::Cycle);
    CHECK(errorOf([&] { flatten(lib, Ident::module(kNs, "D")); }) == ErrorCode::UnknownIdent);
  }

  TEST_CASE("random DAGs match reachability") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 200; ++round) {
      std::size_t n = 1 + rng() % 8;
      Library lib;
      lib.ns = kNs;
      std::vector<std::vector<std::size_t>> edges(n);
      for (std::size_t i = 0; i < n; ++i) {
        Theory th = emptyTheory("T" + std::to_string(i));
        for (std::size_t j = 0; j < i; ++j)
          if (rng() % 3 == 0) {
            edges[i].push_back(j);
            th.includes.push_back(Ident::module(kNs, "T" + std::to_string(j)));
          }
        std::size_t k = rng() % 3;
        for (std::size_t m = 0; m < k; ++m) th.decls.push_back(typeDecl(th, "c" + std::to_string(m)));
        lib.theories.push_back(th);
      }
      std::size_t root = n - 1;
      std::set<std::size_t> reach{root};
      std::deque<std::size_t> queue{root};
      while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : edges[v])
          if (reach.insert(w).second) queue.push_back(w);
      }
      std::multiset<std::string> expected, got;
      for (std::size_t v : reach)
        for (const Declaration& d : lib.theories[v].decls) expected.insert(d.name.str());
      std::vector<Declaration> flat = flatten(lib, lib.theories[root].name);
      for (const Declaration& d : flat) got.insert(d.name.str());
      CHECK(got == expected);
      // Own declarations come last.
      const auto& own = lib.theories[root].decls;
      for (std::size_t i = 0; i < own.size(); ++i)
        CHECK(flat[flat.size() - own.size() + i].name == own[i].name);
    }
  }
}
