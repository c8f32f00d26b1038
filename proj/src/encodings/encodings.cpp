#include "oaf/encodings.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "oaf/error.hpp"
#include "oaf/kernel.hpp"
#include "oaf/syntax.hpp"

namespace oaf {

namespace {

struct Entry {
  const char* name;
  DeclKind kind;
  const char* type;
  const char* definiens = nullptr;
};

// Every logic is written as a table in the concrete syntax; entries may refer
// to earlier ones, and to the constants of `base`, by local name.
Theory buildTheory(Ident name, Ident meta, std::initializer_list<Entry> entries,
                   const Theory* base = nullptr) {
  Theory th{std::move(name), std::move(meta), {}, {}};
  NameTable names;
  if (base)
    for (const Declaration& d : base->decls) names.add(d.name);
  for (const Entry& e : entries) {
    Declaration d{th.declIdent(e.name), std::nullopt, std::nullopt, std::nullopt, {}};
    d.type = parseTerm(e.type, names.resolver());
    if (e.definiens) d.definiens = parseTerm(e.definiens, names.resolver());
    d.meta.kind = e.kind;
    names.add(d.name);
    th.decls.push_back(std::move(d));
  }
  return th;
}

constexpr DeclKind kType = DeclKind::Type;
constexpr DeclKind kConst = DeclKind::Constant;
constexpr DeclKind kDef = DeclKind::Definition;
constexpr DeclKind kRule = DeclKind::Axiom;

}  // namespace

Ident logicIdent(LogicId logic) {
  switch (logic) {
    case LogicId::HolChurch: return Ident::module(kLogicNamespace, "HOL");
    case LogicId::DttCurry: return Ident::module(kLogicNamespace, "DTT");
    case LogicId::FolSoft: return Ident::module(kLogicNamespace, "FOL");
    case LogicId::HolCurry: return Ident::module(kLogicNamespace, "HOLC");
  }
  return Ident::module(kLogicNamespace, "HOL");
}

Theory holChurch() {
  return buildTheory(
      logicIdent(LogicId::HolChurch), frameworkLF(),
      {
          {"tp", kType, "type"},
          {"tm", kType, "tp -> type"},
          {"bool'", kType, "tp"},
          {"arrow", kType, "tp -> tp -> tp"},
          {"lam", kConst, "{A:tp} {B:tp} (tm A -> tm B) -> tm (arrow A B)"},
          {"app", kConst, "{A:tp} {B:tp} tm (arrow A B) -> tm A -> tm B"},
          {"forall", kConst, "{A:tp} (tm A -> tm bool') -> tm bool'"},
          {"impl", kConst, "tm bool' -> tm bool' -> tm bool'"},
          {"eq", kConst, "{A:tp} tm A -> tm A -> tm bool'"},
          {"ded", kType, "tm bool' -> type"},
          {"implI", kRule, "{p:tm bool'} {q:tm bool'} (ded p -> ded q) -> ded (impl p q)"},
          {"implE", kRule, "{p:tm bool'} {q:tm bool'} ded (impl p q) -> ded p -> ded q"},
          {"forallI", kRule,
           "{A:tp} {P:tm A -> tm bool'} ({x:tm A} ded (P x)) -> ded (forall A P)"},
          {"forallE", kRule,
           "{A:tp} {P:tm A -> tm bool'} ded (forall A P) -> {x:tm A} ded (P x)"},
          {"beta", kRule,
           "{A:tp} {B:tp} {F:tm A -> tm B} {x:tm A} "
           "ded (eq B (app A B (lam A B F) x) (F x))"},
      });
}

Theory dttCurry() {
  return buildTheory(
      logicIdent(LogicId::DttCurry), frameworkLFRefine(),
      {
          {"expr", kType, "type"},
          {"of", kType, "expr -> expr -> type"},
          {"app'", kConst, "expr -> expr -> expr"},
          {"lam'", kConst, "expr -> (expr -> expr) -> expr"},
          {"pi'", kConst, "expr -> (expr -> expr) -> expr"},
          {"of_app", kRule,
           "{A:expr} {B:expr -> expr} {f:expr} {a:expr} "
           "of f (pi' A B) -> of a A -> of (app' f a) (B a)"},
          {"of_lam", kRule,
           "{A:expr} {B:expr -> expr} {F:expr -> expr} "
           "({x:expr} of x A -> of (F x) (B x)) -> of (lam' A F) (pi' A B)"},
          {"tmOf", kDef, "expr -> type", "[A:expr] sub expr ([e:expr] of e A)"},
      });
}

Theory folSoft() {
  return buildTheory(
      logicIdent(LogicId::FolSoft), frameworkLF(),
      {
          {"set", kType, "type"},
          {"prop", kType, "type"},
          {"ded", kType, "prop -> type"},
          {"in'", kConst, "set -> set -> prop"},
          {"eq'", kConst, "set -> set -> prop"},
          {"and'", kConst, "prop -> prop -> prop"},
          {"or'", kConst, "prop -> prop -> prop"},
          {"impl'", kConst, "prop -> prop -> prop"},
          {"not'", kConst, "prop -> prop"},
          {"forallSet", kConst, "(set -> prop) -> prop"},
          {"existsSet", kConst, "(set -> prop) -> prop"},
          {"implI", kRule, "{p:prop} {q:prop} (ded p -> ded q) -> ded (impl' p q)"},
          {"implE", kRule, "{p:prop} {q:prop} ded (impl' p q) -> ded p -> ded q"},
          {"andI", kRule, "{p:prop} {q:prop} ded p -> ded q -> ded (and' p q)"},
          {"andEl", kRule, "{p:prop} {q:prop} ded (and' p q) -> ded p"},
          {"andEr", kRule, "{p:prop} {q:prop} ded (and' p q) -> ded q"},
          {"forallI", kRule, "{P:set -> prop} ({x:set} ded (P x)) -> ded (forallSet P)"},
          {"forallE", kRule, "{P:set -> prop} ded (forallSet P) -> {x:set} ded (P x)"},
          {"existsI", kRule, "{P:set -> prop} {x:set} ded (P x) -> ded (existsSet P)"},
      });
}

Theory holCurry() {
  Theory dtt = dttCurry();
  return buildTheory(logicIdent(LogicId::HolCurry), logicIdent(LogicId::DttCurry),
                     {
                         {"bool", kConst, "expr"},
                         {"arr", kConst, "expr -> expr -> expr"},
                         {"imp", kConst, "expr -> expr -> expr"},
                         {"eq", kConst, "expr -> expr -> expr"},
                         {"all", kConst, "expr -> (expr -> expr) -> expr"},
                         {"ded", kType, "expr -> type"},
                     },
                     &dtt);
}

Theory logicTheory(LogicId logic) {
  switch (logic) {
    case LogicId::HolChurch: return holChurch();
    case LogicId::DttCurry: return dttCurry();
    case LogicId::FolSoft: return folSoft();
    case LogicId::HolCurry: return holCurry();
  }
  return holChurch();
}

std::vector<Theory> builtinLogics() { return {holChurch(), dttCurry(), folSoft(), holCurry()}; }

Term logicConst(LogicId logic, const std::string& local) {
  return Term::constant(logicIdent(logic).child(local));
}

std::size_t librarySize(const Library& lib) {
  std::size_t n = 0;
  for (const Theory& th : lib.theories)
    for (const Declaration& d : th.decls) {
      if (d.type) n += termSize(*d.type);
      if (d.definiens) n += termSize(*d.definiens);
      if (d.proof)
        if (const auto* pt = std::get_if<TermProof>(&*d.proof)) n += termSize(pt->term);
    }
  return n;
}

Term curryRender(const Term& t) {
  auto hol = [](const char* n) { return logicConst(LogicId::HolChurch, n); };
  auto dtt = [](const char* n) { return logicConst(LogicId::DttCurry, n); };
  auto holc = [](const char* n) { return logicConst(LogicId::HolCurry, n); };
  switch (t.kind()) {
    case Term::Kind::Const: {
      static const std::map<std::string, std::pair<LogicId, const char*>> renamed{
          {"tp", {LogicId::DttCurry, "expr"}},  {"bool'", {LogicId::HolCurry, "bool"}},
          {"arrow", {LogicId::HolCurry, "arr"}}, {"impl", {LogicId::HolCurry, "imp"}},
          {"ded", {LogicId::HolCurry, "ded"}},   {"tm", {LogicId::DttCurry, "tmOf"}},
          {"forall", {LogicId::HolCurry, "all"}}};
      if (t.ident().modulePath() == logicIdent(LogicId::HolChurch))
        if (auto it = renamed.find(t.ident().name()); it != renamed.end())
          return logicConst(it->second.first, it->second.second);
      return t;
    }
    case Term::Kind::Apply: {
      const Term& h = t.head();
      std::vector<Term> args = t.spineArgs();
      std::vector<Term> out;
      for (const Term& a : args) out.push_back(curryRender(a));
      if (h == hol("app") && out.size() >= 4) {
        // app A B f a ... -> app' f a ...
        out.erase(out.begin(), out.begin() + 2);
        return Term::apply(dtt("app'"), out);
      }
      if (h == hol("lam") && out.size() >= 3) {
        out.erase(out.begin() + 1);
        return Term::apply(dtt("lam'"), out);
      }
      if (h == hol("eq") && out.size() >= 3) {
        out.erase(out.begin());
        return Term::apply(holc("eq"), out);
      }
      return Term::apply(curryRender(h), out);
    }
    case Term::Kind::Lambda: return Term::lambda(t.hint(), curryRender(t.dom()), curryRender(t.body()));
    case Term::Kind::Pi: return Term::pi(t.hint(), curryRender(t.dom()), curryRender(t.body()));
    case Term::Kind::SubType: return Term::subType(curryRender(t.base()), curryRender(t.pred()));
    case Term::Kind::SubIn: return Term::subIn(curryRender(t.elem()), curryRender(t.witness()));
    case Term::Kind::SubOut: return Term::subOut(curryRender(t.elem()));
    case Term::Kind::Var:
    case Term::Kind::TypeKind: return t;
  }
  return t;
}

Library curryRendering(const Library& church) {
  Library out = church;
  for (Theory& th : out.theories) {
    if (th.metaTheory == logicIdent(LogicId::HolChurch)) th.metaTheory = logicIdent(LogicId::HolCurry);
    for (Declaration& d : th.decls) {
      if (d.type) d.type = curryRender(*d.type);
      if (d.definiens) d.definiens = curryRender(*d.definiens);
      if (d.proof)
        if (auto* pt = std::get_if<TermProof>(&*d.proof)) pt->term = curryRender(pt->term);
    }
  }
  return out;
}

SizeRatio churchCurrySizeRatio(const Library& church, const Library& curry) {
  std::uint64_t num = librarySize(church);
  std::uint64_t den = librarySize(curry);
  if (num == 0 || den == 0)
    throw Error(ErrorCode::EmptyCorpus, "size ratio of an empty corpus is undefined");
  std::uint64_t g = std::gcd(num, den);
  return SizeRatio{num / g, den / g};
}

std::string encodingCatalog() {
  std::ostringstream out;
  out << "# Logic encodings\n\n"
      << "Generated from the built-in encoding theories; every constant is listed with its\n"
      << "type in the concrete term syntax.\n";
  for (const Theory& th : builtinLogics()) {
    out << "\n## " << th.name.moduleName() << "\n\n"
        << "- identifier: `" << th.name.str() << "`\n"
        << "- meta-theory: `" << (th.metaTheory ? th.metaTheory->str() : "-") << "`\n\n"
        << "| constant | kind | type | definiens |\n"
        << "|---|---|---|---|\n";
    for (const Declaration& d : th.decls) {
      out << "| `" << d.name.name() << "` | " << declKindName(d.meta.kind) << " | `"
          << printTerm(*d.type) << "` | ";
      if (d.definiens) out << "`" << printTerm(*d.definiens) << "`";
      out << " |\n";
    }
  }
  out << "\n## Variants not implemented\n\n"
      << "- Universe-parametric Church encoding: `univ : type`, `tp : univ -> type`,\n"
      << "  `tm : {U:univ} tp U -> type`. Universe constraints have no representation in the\n"
      << "  kernel, so HOL uses the single-universe `tp`/`tm` pair.\n"
      << "- Curry-style HOL with typed object terms (`tp : type`, `tm : type`,\n"
      << "  `of : tm -> tp -> type`). It differs from `DTT` only in separating object types\n"
      << "  from object terms; switching between the two is a renaming of `expr`.\n"
      << "- `HOLC` is not a logic of its own: it gives the HOL connectives untyped Curry-style\n"
      << "  signatures so that a Church-encoded library can be rendered over `DTT` for size\n"
      << "  comparison.\n";
  return out.str();
}

}  // namespace oaf
