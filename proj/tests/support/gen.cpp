#include "gen.hpp"

#include <functional>

#include "oaf/syntax.hpp"

namespace oaf::testing {

namespace {

const char* kGenNs = "http://oaf.example.org/test";

NT c(const std::string& local) { return nconst(genConst(local)); }

bool isConst(const NT& t, const std::string& local) {
  return t->kind == NTerm::Const && *t->ident == genConst(local);
}

bool isArrowAA(const NT& t) {
  return t->kind == NTerm::Pi && isConst(t->a, "a") && isConst(t->b, "a");
}

}  // namespace

Ident genConst(const std::string& local) { return Ident(kGenNs, "Gen", local); }

Theory genTheory() {
  Theory th{Ident::module(kGenNs, "Gen"), frameworkLF(), {}, {}};
  NameTable names;
  auto add = [&](const char* name, const char* type, const char* def = nullptr) {
    Declaration d{th.declIdent(name), parseTerm(type, names.resolver()), std::nullopt,
                  std::nullopt, {}};
    if (def) {
      d.definiens = parseTerm(def, names.resolver());
      d.meta.kind = DeclKind::Definition;
    }
    names.add(d.name);
    th.decls.push_back(std::move(d));
  };
  add("a", "type");
  add("b", "type");
  add("p", "a -> type");
  add("ca", "a");
  add("cb", "b");
  add("f", "a -> b");
  add("g", "b -> a -> a");
  add("h", "(a -> a) -> b");
  add("mk", "{x:a} p x");
  add("use", "{x:a} p x -> b");
  add("idA", "a -> a", "[x:a] x");
  add("twice", "(a -> a) -> a -> a", "[k:a -> a] [x:a] k (k x)");
  add("pca", "p ca", "mk ca");
  return th;
}

std::map<Ident, NT> genDefinitions() {
  NT a = c("a");
  NT aa = npi("_", a, a);
  return {
      {genConst("idA"), nlam("x", a, nvar("x"))},
      {genConst("twice"),
       nlam("k", aa, nlam("x", a, napp(nvar("k"), napp(nvar("k"), nvar("x")))))},
      {genConst("pca"), napp(c("mk"), c("ca"))},
  };
}

Library genLibrary() {
  Library lib;
  lib.ns = kGenNs;
  lib.theories.push_back(genTheory());
  return lib;
}

Signature genSignature() { return Signature::ofLibrary(genLibrary()); }

NT TermGen::randomType(int depth) {
  std::size_t choice = depth <= 0 ? pick(3) : pick(6);
  switch (choice) {
    case 0: return c("a");
    case 1: return c("b");
    case 2: return napp(c("p"), depth <= 0 ? c("ca") : gen({}, c("a"), depth - 1));
    case 3:
    case 4: return npi("_u" + std::to_string(counter_++), randomType(depth - 1), randomType(depth - 1));
    default: {
      std::string y = freshVar();
      return npi(y, c("a"), napp(c("p"), nvar(y)));
    }
  }
}

NT TermGen::gen(const NCtx& ctx, const NT& type, int depth) {
  std::vector<std::function<NT()>> options;
  for (const auto& [name, ty] : ctx) {
    if (alphaEqual(ty, type)) options.push_back([name = name] { return nvar(name); });
    if (depth > 0 && ty->kind == NTerm::Pi && !freeVars(ty->b).count(ty->name) &&
        alphaEqual(ty->b, type)) {
      NT dom = ty->a;
      options.push_back([=, this] { return napp(nvar(name), gen(ctx, dom, depth - 1)); });
    }
  }

  if (type->kind == NTerm::Pi) {
    options.push_back([=, this] {
      std::string z = freshVar();
      NCtx inner = ctx;
      inner.emplace_back(z, type->a);
      return nlam(z, type->a, gen(inner, nsubst(type->b, type->name, nvar(z)), depth - 1));
    });
    if (isArrowAA(type)) {
      options.push_back([] { return c("idA"); });
      if (depth > 0)
        options.push_back([=, this] {
          return napp(c("twice"), gen(ctx, npi("_u", c("a"), c("a")), depth - 1));
        });
    }
  } else if (isConst(type, "a")) {
    options.push_back([] { return c("ca"); });
    if (depth > 0) {
      NT a = c("a"), b = c("b");
      options.push_back([=, this] { return napp(c("idA"), gen(ctx, a, depth - 1)); });
      options.push_back([=, this] {
        return napp(c("g"), {gen(ctx, b, depth - 1), gen(ctx, a, depth - 1)});
      });
      options.push_back([=, this] {
        return napp(c("twice"), {gen(ctx, npi("_u", a, a), depth - 1), gen(ctx, a, depth - 1)});
      });
      options.push_back([=, this] {
        std::string z = freshVar();
        NCtx inner = ctx;
        inner.emplace_back(z, a);
        return napp(nlam(z, a, gen(inner, a, depth - 1)), gen(ctx, a, depth - 1));
      });
    }
  } else if (isConst(type, "b")) {
    options.push_back([] { return c("cb"); });
    if (depth > 0) {
      NT a = c("a");
      options.push_back([=, this] { return napp(c("f"), gen(ctx, a, depth - 1)); });
      options.push_back([=, this] {
        return napp(c("h"), gen(ctx, npi("_u", a, a), depth - 1));
      });
      options.push_back([=, this] {
        NT t = gen(ctx, a, depth - 1);
        return napp(c("use"), {t, gen(ctx, napp(c("p"), t), depth - 1)});
      });
    }
  } else if (type->kind == NTerm::App && isConst(type->a, "p")) {
    NT index = type->b;
    options.push_back([=] { return napp(c("mk"), index); });
    if (depth > 0) {
      // mk applied to a convertible index: the recorded type is only equal
      // to the inferred one up to delta/beta.
      options.push_back([=] { return napp(c("mk"), napp(c("idA"), index)); });
      options.push_back([=, this] {
        std::string z = freshVar();
        return napp(c("mk"), napp(nlam(z, c("a"), nvar(z)), index));
      });
    }
    if (isConst(index, "ca")) options.push_back([] { return c("pca"); });
  }
  if (options.empty()) throw std::logic_error("generator has no option for a type");
  return options[pick(options.size())]();
}

Typed TermGen::closed(int depth) {
  NT ty = randomType(depth / 2);
  return Typed{gen({}, ty, depth), ty};
}

std::vector<std::string> names(const NCtx& ctx) {
  std::vector<std::string> out;
  for (const auto& e : ctx) out.push_back(e.first);
  return out;
}

Context toContext(const NCtx& ctx) {
  Context out;
  std::vector<std::string> scope;
  for (const auto& [name, ty] : ctx) {
    out.push(name, toDeBruijn(ty, scope));
    scope.push_back(name);
  }
  return out;
}

Term rehint(const Term& t, std::mt19937_64& rng) {
  static const char* kHints[] = {"x", "y", "z", "_", "q", "hint", "x"};
  auto hint = [&] { return std::string(kHints[rng() % 7]); };
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Apply: return Term::apply(rehint(t.fn(), rng), rehint(t.arg(), rng));
    case K::Lambda: return Term::lambda(hint(), rehint(t.dom(), rng), rehint(t.body(), rng));
    case K::Pi: return Term::pi(hint(), rehint(t.dom(), rng), rehint(t.body(), rng));
    case K::SubType: return Term::subType(rehint(t.base(), rng), rehint(t.pred(), rng));
    case K::SubIn: return Term::subIn(rehint(t.elem(), rng), rehint(t.witness(), rng));
    case K::SubOut: return Term::subOut(rehint(t.elem(), rng));
    default: return t;
  }
}

}  // namespace oaf::testing
