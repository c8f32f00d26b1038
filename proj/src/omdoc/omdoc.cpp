#include "oaf/omdoc.hpp"

#include <charconv>
#include <set>

#include "oaf/encodings.hpp"
#include "oaf/error.hpp"
#include "oaf/kernel.hpp"
#include "oaf/xml.hpp"

namespace oaf::omdoc {

namespace {

using xml::Attributes;

// Variables carry the hint of their binder, so the writer threads the
// binder hints down.
void writeTerm(xml::Writer& w, const Term& t, std::vector<std::string>& hints) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      std::string hint =
          t.index() < hints.size() ? hints[hints.size() - 1 - t.index()] : std::string();
      w.empty("OMV", {{"index", std::to_string(t.index())}, {"hint", hint}});
      return;
    }
    case Term::Kind::Apply:
      w.open("OMA");
      writeTerm(w, t.head(), hints);
      for (const Term& a : t.spineArgs()) writeTerm(w, a, hints);
      w.close();
      return;
    case Term::Kind::Lambda:
    case Term::Kind::Pi:
      w.open("OMBIND", {{"binder", t.is(Term::Kind::Lambda) ? "lambda" : "pi"}, {"var", t.hint()}});
      writeTerm(w, t.dom(), hints);
      hints.push_back(t.hint());
      writeTerm(w, t.body(), hints);
      hints.pop_back();
      w.close();
      return;
    case Term::Kind::SubType:
      w.open("OMBIND", {{"binder", "sub"}});
      writeTerm(w, t.base(), hints);
      writeTerm(w, t.pred(), hints);
      w.close();
      return;
    case Term::Kind::SubIn:
      w.open("OMBIND", {{"binder", "subin"}});
      writeTerm(w, t.elem(), hints);
      writeTerm(w, t.witness(), hints);
      w.close();
      return;
    case Term::Kind::SubOut:
      w.open("OMBIND", {{"binder", "subout"}});
      writeTerm(w, t.elem(), hints);
      w.close();
      return;
    case Term::Kind::Const: w.empty("OMS", {{"name", t.ident().str()}}); return;
    case Term::Kind::TypeKind: w.empty("OMBIND", {{"binder", "type"}}); return;
  }
}

void wrapped(xml::Writer& w, const char* name, const Term& t) {
  std::vector<std::string> hints;
  w.open(name);
  writeTerm(w, t, hints);
  w.close();
}

bool isFramework(const Ident& id) { return id == frameworkLF() || id == frameworkLFRefine(); }

}  // namespace

std::vector<Ident> danglingIdents(const Library& lib) {
  std::vector<Ident> out;
  std::set<Ident> seen;
  auto miss = [&](const Ident& id) {
    if (seen.insert(id).second) out.push_back(id);
  };
  auto term = [&](const Term& t) {
    for (const Ident& c : constantsOf(t))
      if (!lib.findDeclaration(c)) miss(c);
  };
  for (const Theory& th : lib.theories) {
    if (th.metaTheory && !isFramework(*th.metaTheory) && !lib.findTheory(*th.metaTheory))
      miss(*th.metaTheory);
    for (const Ident& inc : th.includes)
      if (!lib.findTheory(inc)) miss(inc);
    for (const Declaration& d : th.decls) {
      if (d.name.modulePath() != th.name) miss(d.name);
      if (d.type) term(*d.type);
      if (d.definiens) term(*d.definiens);
      if (!d.proof) continue;
      if (const auto* pt = std::get_if<TermProof>(&*d.proof)) term(pt->term);
      if (const auto* deps = std::get_if<DependsOnProof>(&*d.proof))
        for (const Ident& id : deps->ids)
          if (id.isModule() ? !lib.findMorphism(id) : !lib.findDeclaration(id)) miss(id);
    }
  }
  for (const Morphism& m : lib.morphisms) {
    if (!lib.findTheory(m.from)) miss(m.from);
    if (!lib.findTheory(m.to)) miss(m.to);
    for (const auto& [c, t] : m.assignments) {
      if (!lib.findDeclaration(c)) miss(c);
      term(t);
    }
  }
  return out;
}

std::string serialize(const Library& lib) {
  std::vector<Ident> dangling = danglingIdents(lib);
  if (!dangling.empty())
    throw Error(ErrorCode::DanglingIdent, "unresolved identifier " + dangling.front().str(),
                dangling.front().str());

  xml::Writer w;
  Attributes rootAttrs{{"version", kVersion}, {"namespace", lib.ns}};
  if (lib.theories.empty() && lib.morphisms.empty()) {
    w.empty("omdoc", rootAttrs);
    return w.finish();
  }
  w.open("omdoc", rootAttrs);
  for (const Theory& th : lib.theories) {
    Attributes attrs{{"name", th.name.str()}};
    if (th.metaTheory) attrs.emplace_back("meta", th.metaTheory->str());
    if (th.includes.empty() && th.decls.empty()) {
      w.empty("theory", attrs);
      continue;
    }
    w.open("theory", attrs);
    for (const Ident& inc : th.includes) w.empty("include", {{"from", inc.str()}});
    for (const Declaration& d : th.decls) {
      w.open("constant", {{"name", d.name.name()}, {"kind", std::string(declKindName(d.meta.kind))}});
      if (d.type) wrapped(w, "type", *d.type);
      if (d.definiens) wrapped(w, "definition", *d.definiens);
      if (d.proof) {
        std::string style(proofStyleName(proofStyle(*d.proof)));
        if (const auto* deps = std::get_if<DependsOnProof>(&*d.proof)) {
          if (deps->ids.empty()) {
            w.empty("proof", {{"style", style}});
          } else {
            w.open("proof", {{"style", style}});
            for (const Ident& id : deps->ids) w.empty("ref", {{"name", id.str()}});
            w.close();
          }
        } else if (const auto* pt = std::get_if<TermProof>(&*d.proof)) {
          std::vector<std::string> hints;
          w.open("proof", {{"style", style}});
          writeTerm(w, pt->term, hints);
          w.close();
        } else {
          w.empty("proof", {{"style", style}});
        }
      }
      const Metadata& m = d.meta;
      if (m.sourceRef || !m.comments.empty() || m.notation || m.origin) {
        w.open("metadata");
        if (const auto& r = m.sourceRef)
          w.empty("srcref", {{"file", r->file},
                             {"sl", std::to_string(r->startLine)},
                             {"sc", std::to_string(r->startCol)},
                             {"el", std::to_string(r->endLine)},
                             {"ec", std::to_string(r->endCol)}});
        for (const std::string& c : m.comments) w.textElement("comment", {}, c);
        if (m.notation) w.textElement("notation", {}, *m.notation);
        if (m.origin)
          w.empty("origin", {{"instance", m.origin->instance.str()},
                             {"pattern", m.origin->pattern.str()}});
        w.close();
      }
      w.close();
    }
    w.close();
  }
  for (const Morphism& m : lib.morphisms) {
    Attributes attrs{{"name", m.name.str()}, {"from", m.from.str()}, {"to", m.to.str()}};
    if (m.assignments.empty()) {
      w.empty("morphism", attrs);
      continue;
    }
    w.open("morphism", attrs);
    for (const auto& [c, t] : m.assignments) {
      std::vector<std::string> hints;
      w.open("assignment", {{"name", c.str()}});
      writeTerm(w, t, hints);
      w.close();
    }
    w.close();
  }
  return w.finish();
}

namespace {

using xml::Element;
using xml::violation;

std::string at(const std::string& path, const Element& e, std::size_t i) {
  return xml::childPath(path, e, i);
}

Ident anyIdent(const Element& e, const std::string& path, const char* attr) {
  try {
    return Ident::parse(*e.attribute(attr));
  } catch (const Error& err) {
    violation(path + "/@" + attr, err.what());
  }
}

Ident ident(const Element& e, const std::string& path, const char* attr, bool module) {
  Ident id = anyIdent(e, path, attr);
  if (id.isModule() != module)
      violation(path + "/@" + attr, module ? "expected a module identifier"
                                         : "expected a declaration identifier");
  return id;
}

std::uint32_t number(const Element& e, const std::string& path, const char* attr) {
  const std::string& s = *e.attribute(attr);
  std::uint32_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size())
    violation(path + "/@" + attr, "expected a non-negative integer");
  return v;
}

void leaf(const Element& e, const std::string& path) {
  if (!e.children.empty()) violation(at(path, e.children[0], 0), "unexpected element");
}

void arity(const Element& e, const std::string& path, std::size_t n) {
  if (e.children.size() > n) violation(at(path, e.children[n], n), "unexpected element");
  if (e.children.size() < n)
    violation(path, "expected " + std::to_string(n) + " child terms, found " +
                        std::to_string(e.children.size()));
}

Term readTerm(const Element& e, const std::string& path) {
  xml::checkNoText(e, path);
  if (e.name == "OMS") {
    xml::checkAttributes(e, path, {"name"});
    leaf(e, path);
    return Term::constant(ident(e, path, "name", false));
  }
  if (e.name == "OMV") {
    xml::checkAttributes(e, path, {"index", "hint"});
    leaf(e, path);
    return Term::var(number(e, path, "index"));
  }
  auto kid = [&](std::size_t i) { return readTerm(e.children[i], at(path, e.children[i], i)); };
  if (e.name == "OMA") {
    xml::checkAttributes(e, path, {});
    if (e.children.size() < 2) violation(path, "application needs a head and an argument");
    Term t = kid(0);
    for (std::size_t i = 1; i < e.children.size(); ++i) t = Term::apply(t, kid(i));
    return t;
  }
  if (e.name == "OMBIND") {
    xml::checkAttributes(e, path, {"binder"}, {"var"});
    const std::string* binder = e.attribute("binder");
    const std::string* var = e.attribute("var");
    static const std::set<std::string> binders{"lambda", "pi", "type", "sub", "subin", "subout"};
    if (!binders.count(*binder)) violation(path + "/@binder", "unknown binder " + *binder);
    if (*binder == "lambda" || *binder == "pi") {
      if (!var) violation(path + "/@var", "missing attribute");
      arity(e, path, 2);
      return *binder == "lambda" ? Term::lambda(*var, kid(0), kid(1)) : Term::pi(*var, kid(0), kid(1));
    }
    if (var) violation(path + "/@var", "binder " + *binder + " binds no variable");
    if (*binder == "type") {
      arity(e, path, 0);
      return Term::type();
    }
    if (*binder == "sub") {
      arity(e, path, 2);
      return Term::subType(kid(0), kid(1));
    }
    if (*binder == "subin") {
      arity(e, path, 2);
      return Term::subIn(kid(0), kid(1));
    }
    arity(e, path, 1);  // subout
    return Term::subOut(kid(0));
  }
  violation(path, "unexpected element");
}

// Element holding exactly one term.
Term termIn(const Element& e, const std::string& path) {
  xml::checkAttributes(e, path, {});
  xml::checkNoText(e, path);
  arity(e, path, 1);
  return readTerm(e.children[0], at(path, e.children[0], 0));
}

Metadata readMetadata(const Element& e, const std::string& path, Metadata m) {
  xml::checkAttributes(e, path, {});
  xml::checkNoText(e, path);
  // srcref? comment* notation? origin?
  int stage = -1;
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    const Element& c = e.children[i];
    std::string cp = at(path, c, i);
    int s = c.name == "srcref" ? 0 : c.name == "comment" ? 1 : c.name == "notation" ? 2
          : c.name == "origin" ? 3 : -1;
    if (s < 0) violation(cp, "unexpected element");
    if (s < stage || (s == stage && s != 1)) violation(cp, "element out of order or repeated");
    stage = s;
    leaf(c, cp);
    if (s == 0) {
      xml::checkAttributes(c, cp, {"file", "sl", "sc", "el", "ec"});
      xml::checkNoText(c, cp);
      m.sourceRef = SourceRef{*c.attribute("file"), number(c, cp, "sl"), number(c, cp, "sc"),
                              number(c, cp, "el"), number(c, cp, "ec")};
    } else if (s == 1) {
      xml::checkAttributes(c, cp, {});
      m.comments.push_back(c.text);
    } else if (s == 2) {
      xml::checkAttributes(c, cp, {});
      m.notation = c.text;
    } else {
      xml::checkAttributes(c, cp, {"instance", "pattern"});
      xml::checkNoText(c, cp);
      m.origin = PatternOrigin{ident(c, cp, "instance", false), ident(c, cp, "pattern", false)};
    }
  }
  return m;
}

Declaration readConstant(const Element& e, const std::string& path, const Theory& th) {
  xml::checkAttributes(e, path, {"name", "kind"});
  xml::checkNoText(e, path);
  const std::string& local = *e.attribute("name");
  if (local.empty() || local.find('?') != std::string::npos)
    violation(path + "/@name", "invalid name");
  Declaration d{th.declIdent(local), std::nullopt, std::nullopt, std::nullopt, {}};
  auto kind = parseDeclKind(*e.attribute("kind"));
  if (!kind) violation(path + "/@kind", "unknown kind " + *e.attribute("kind"));
  d.meta.kind = *kind;
  // type? definition? proof? metadata?
  int stage = -1;
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    const Element& c = e.children[i];
    std::string cp = at(path, c, i);
    int s = c.name == "type" ? 0 : c.name == "definition" ? 1 : c.name == "proof" ? 2
          : c.name == "metadata" ? 3 : -1;
    if (s < 0) violation(cp, "unexpected element");
    if (s <= stage) violation(cp, "element out of order or repeated");
    stage = s;
    if (s == 0) d.type = termIn(c, cp);
    if (s == 1) d.definiens = termIn(c, cp);
    if (s == 3) d.meta = readMetadata(c, cp, d.meta);
    if (s == 2) {
      xml::checkAttributes(c, cp, {"style"});
      xml::checkNoText(c, cp);
      const std::string& style = *c.attribute("style");
      if (style == "omitted") {
        leaf(c, cp);
        d.proof = OmittedProof{};
      } else if (style == "dependsOn") {
        DependsOnProof deps;
        for (std::size_t k = 0; k < c.children.size(); ++k) {
          const Element& r = c.children[k];
          std::string rp = at(cp, r, k);
          if (r.name != "ref") violation(rp, "unexpected element");
          xml::checkAttributes(r, rp, {"name"});
          xml::checkNoText(r, rp);
          leaf(r, rp);
          Ident id = anyIdent(r, rp, "name");
          for (const Ident& prev : deps.ids)
            if (prev == id) violation(rp + "/@name", "repeated dependency");
          deps.ids.push_back(id);
        }
        d.proof = deps;
      } else if (style == "term") {
        arity(c, cp, 1);
        d.proof = TermProof{readTerm(c.children[0], at(cp, c.children[0], 0))};
      } else {
        violation(cp + "/@style", "unknown proof style " + style);
      }
    }
  }
  return d;
}

}  // namespace

Library parse(std::string_view bytes) {
  Element root = xml::parse(bytes);
  if (root.name != "omdoc") violation("/" + root.name, "root element must be omdoc");
  const std::string path = "/omdoc";
  xml::checkAttributes(root, path, {"version", "namespace"});
  if (*root.attribute("version") != kVersion)
    throw Error(ErrorCode::UnsupportedVersion,
                "unsupported omdoc version " + *root.attribute("version"),
                *root.attribute("version"));
  xml::checkNoText(root, path);
  Library lib;
  lib.ns = *root.attribute("namespace");
  lib.dependencies = builtinLogics();
  bool morphisms = false;
  for (std::size_t i = 0; i < root.children.size(); ++i) {
    const Element& e = root.children[i];
    std::string p = at(path, e, i);
    if (e.name == "theory") {
      if (morphisms) violation(p, "theories must precede morphisms");
      xml::checkAttributes(e, p, {"name"}, {"meta"});
      xml::checkNoText(e, p);
      Theory th{ident(e, p, "name", true), std::nullopt, {}, {}};
      if (e.attribute("meta")) th.metaTheory = ident(e, p, "meta", true);
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        const Element& c = e.children[k];
        std::string cp = at(p, c, k);
        if (c.name == "include") {
          if (!th.decls.empty()) violation(cp, "includes must precede constants");
          xml::checkAttributes(c, cp, {"from"});
          xml::checkNoText(c, cp);
          leaf(c, cp);
          th.includes.push_back(ident(c, cp, "from", true));
        } else if (c.name == "constant") {
          th.decls.push_back(readConstant(c, cp, th));
        } else {
          violation(cp, "unexpected element");
        }
      }
      lib.theories.push_back(std::move(th));
    } else if (e.name == "morphism") {
      morphisms = true;
      xml::checkAttributes(e, p, {"name", "from", "to"});
      xml::checkNoText(e, p);
      Morphism m{ident(e, p, "name", true), ident(e, p, "from", true), ident(e, p, "to", true), {}};
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        const Element& c = e.children[k];
        std::string cp = at(p, c, k);
        if (c.name != "assignment") violation(cp, "unexpected element");
        xml::checkAttributes(c, cp, {"name"});
        xml::checkNoText(c, cp);
        arity(c, cp, 1);
        Ident src = ident(c, cp, "name", false);
        if (m.assignments.count(src)) violation(cp + "/@name", "repeated assignment");
        m.assignments.emplace(src, readTerm(c.children[0], at(cp, c.children[0], 0)));
      }
      lib.morphisms.push_back(std::move(m));
    } else {
      violation(p, "unexpected element");
    }
  }
  return lib;
}

}  // namespace oaf::omdoc
