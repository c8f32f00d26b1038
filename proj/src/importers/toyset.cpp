#include <charconv>
#include <map>
#include <set>

#include "common.hpp"
#include "oaf/encodings.hpp"
#include "oaf/extensions.hpp"
#include "oaf/importers.hpp"
#include "oaf/syntax.hpp"
#include "oaf/xml.hpp"

namespace oaf {

std::size_t ToysetDoc::recordCount() const {
  std::size_t n = 0;
  for (const ToysetArticle& a : articles) n += a.decls.size();
  return n;
}

namespace {

using xml::violation;

struct Spec {
  std::vector<const char*> required;
  std::vector<const char*> optional;
};

void attributes(const xml::Element& e, const std::string& path, const Spec& spec) {
  xml::checkAttributes(e, path, spec.required, spec.optional);
}

void noText(const xml::Element& e, const std::string& path) { xml::checkNoText(e, path); }

void leaf(const xml::Element& e, const std::string& path) {
  if (!e.children.empty())
    violation(path + "/" + e.children[0].name + "[0]", "unexpected element");
}

std::string nameAttr(const xml::Element& e, const std::string& path) {
  const std::string& n = *e.attribute("name");
  if (!isSurfaceName(n)) violation(path + "/@name", "invalid name '" + n + "'");
  return n;
}

std::uint32_t number(const xml::Element& e, const std::string& path, const char* attr,
                     std::uint32_t min) {
  const std::string& s = *e.attribute(attr);
  std::uint32_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || v < min)
    violation(path + "/@" + attr, "expected an integer >= " + std::to_string(min));
  return v;
}

ToysetDecl readDecl(const xml::Element& e, const std::string& path) {
  static const std::map<std::string, ToysetKind> kinds{
      {"func", ToysetKind::Func},       {"pred", ToysetKind::Pred},
      {"axiom", ToysetKind::Axiom},     {"theorem", ToysetKind::Theorem},
      {"scheme", ToysetKind::Scheme},   {"definition", ToysetKind::Definition}};
  ToysetDecl d;
  d.kind = kinds.at(e.name);
  switch (d.kind) {
    case ToysetKind::Func:
    case ToysetKind::Pred: attributes(e, path, {{"name", "arity"}, {}}); break;
    case ToysetKind::Definition: attributes(e, path, {{"name", "pattern"}, {}}); break;
    default: attributes(e, path, {{"name"}, {}});
  }
  noText(e, path);
  d.name = nameAttr(e, path);
  if (d.kind == ToysetKind::Func || d.kind == ToysetKind::Pred) d.arity = number(e, path, "arity", 0);
  if (d.kind == ToysetKind::Definition) d.pattern = *e.attribute("pattern");

  std::set<std::string> allowed{"src", "comment", "notation"};
  switch (d.kind) {
    case ToysetKind::Axiom: allowed.insert("statement"); break;
    case ToysetKind::Theorem: allowed.insert({"statement", "dep"}); break;
    case ToysetKind::Scheme: allowed.insert({"param", "statement", "dep"}); break;
    case ToysetKind::Definition: allowed.insert("arg"); break;
    default: break;
  }
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    const xml::Element& c = e.children[i];
    std::string cpath = path + "/" + c.name + "[" + std::to_string(i) + "]";
    if (!allowed.count(c.name)) violation(cpath, "unexpected element");
    bool single = c.name == "src" || c.name == "comment" || c.name == "notation" ||
                  c.name == "statement";
    if (single && seen[c.name]++ > 0) violation(cpath, "repeated element");
    leaf(c, cpath);
    if (c.name == "src") {
      attributes(c, cpath, {{"file", "line", "col"}, {}});
      noText(c, cpath);
      d.src = SourcePoint{*c.attribute("file"), number(c, cpath, "line", 1),
                          number(c, cpath, "col", 1)};
    } else if (c.name == "dep") {
      attributes(c, cpath, {{"ref"}, {}});
      noText(c, cpath);
      d.deps.push_back(*c.attribute("ref"));
    } else if (c.name == "param") {
      attributes(c, cpath, {{"name", "type"}, {}});
      noText(c, cpath);
      d.params.push_back({nameAttr(c, cpath), *c.attribute("type")});
    } else {
      attributes(c, cpath, {});
      if (c.name == "comment") d.comment = c.text;
      if (c.name == "notation") d.notation = c.text;
      if (c.name == "statement") d.statement = c.text;
      if (c.name == "arg") d.args.push_back(c.text);
    }
  }
  bool needsStatement = d.kind == ToysetKind::Axiom || d.kind == ToysetKind::Theorem ||
                        d.kind == ToysetKind::Scheme;
  if (needsStatement && !d.statement) violation(path + "/statement", "missing element");
  return d;
}

}  // namespace

ToysetDoc parseToyset(std::string_view bytes) {
  xml::Element root = xml::parse(bytes);
  if (root.name != "export") violation("/" + root.name, "root element must be export");
  attributes(root, "/export", {{"version"}, {"namespace"}});
  ToysetDoc doc;
  doc.version = *root.attribute("version");
  if (doc.version != "1")
    throw Error(ErrorCode::UnsupportedVersion, "unsupported toyset version " + doc.version,
                doc.version);
  if (const std::string* ns = root.attribute("namespace")) {
    if (ns->empty() || ns->find('?') != std::string::npos)
      violation("/export/@namespace", "invalid namespace");
    doc.ns = *ns;
  }
  noText(root, "/export");
  std::set<std::string> articleNames;
  for (std::size_t i = 0; i < root.children.size(); ++i) {
    const xml::Element& ae = root.children[i];
    std::string path = "/export/" + ae.name + "[" + std::to_string(i) + "]";
    if (ae.name != "article") violation(path, "unexpected element");
    attributes(ae, path, {{"name"}, {}});
    noText(ae, path);
    ToysetArticle art;
    art.name = nameAttr(ae, path);
    if (!articleNames.insert(art.name).second)
      violation(path + "/@name", "duplicate article " + art.name);
    std::set<std::string> declNames;
    for (std::size_t k = 0; k < ae.children.size(); ++k) {
      const xml::Element& c = ae.children[k];
      std::string cpath = path + "/" + c.name + "[" + std::to_string(k) + "]";
      if (c.name == "include") {
        attributes(c, cpath, {{"article"}, {}});
        noText(c, cpath);
        leaf(c, cpath);
        art.includes.push_back(*c.attribute("article"));
        continue;
      }
      static const std::set<std::string> declTags{"func",   "pred",   "axiom",
                                                  "theorem", "scheme", "definition"};
      if (!declTags.count(c.name)) violation(cpath, "unexpected element");
      ToysetDecl d = readDecl(c, cpath);
      if (!declNames.insert(d.name).second)
        violation(cpath + "/@name", "duplicate declaration " + d.name);
      art.decls.push_back(std::move(d));
    }
    doc.articles.push_back(std::move(art));
  }
  return doc;
}

namespace {

class ToysetImporter {
 public:
  ToysetImporter(const ToysetDoc& doc, const ImportOptions& opts) : doc_(doc), opts_(opts) {
    result_.library.ns = doc.ns;
    result_.library.dependencies = builtinLogics();
    result_.report.records = doc.recordCount();
  }

  ImportResult run() {
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> includes;
    for (const ToysetArticle& a : doc_.articles) {
      names.push_back(a.name);
      includes.push_back(a.includes);
    }
    importers::Ordering ordering = importers::orderByIncludes(names, includes);
    for (const auto& s : ordering.skipped)
      importers::skipTheory(result_, Ident::module(doc_.ns, names[s.index]),
                            doc_.articles[s.index].decls.size(), s.code, s.message);
    for (std::size_t i : ordering.order) importArticle(doc_.articles[i]);
    importers::finish(result_, names, opts_);
    return std::move(result_);
  }

 private:
  void importArticle(const ToysetArticle& art) {
    Theory th{Ident::module(doc_.ns, art.name), logicIdent(LogicId::FolSoft), {}, {}};
    for (const std::string& inc : art.includes) th.includes.push_back(Ident::module(doc_.ns, inc));
    importers::IncrementalTheory target(result_.library, th, opts_.kernel);
    NameTable names;
    for (const Declaration& d : folSoft().decls) names.add(d.name);
    for (const Theory* t : includeClosure(result_.library, th.name))
      for (const Declaration& d : t->decls) names.add(d.name);

    for (const ToysetDecl& rec : art.decls) {
      Ident id = th.declIdent(rec.name);
      try {
        std::vector<Declaration> decls = translate(th, names, rec);
        DeclStatus status = target.addAll(decls);
        if (!status.ok) {
          result_.report.issues.push_back({status.name, *status.error, status.message});
          continue;
        }
        for (const Declaration& d : decls) names.add(d.name);
      } catch (const Error& e) {
        result_.report.issues.push_back({id, e.code(), e.what()});
      }
    }
  }

  std::vector<Declaration> translate(const Theory& th, const NameTable& names,
                                     const ToysetDecl& rec) const {
    auto fol = [](const char* n) { return logicConst(LogicId::FolSoft, n); };
    auto parse = [&](const std::string& text) { return parseTerm(text, names.resolver()); };
    Declaration d{th.declIdent(rec.name), std::nullopt, std::nullopt, std::nullopt, {}};
    if (rec.src) d.meta.sourceRef = SourceRef::point(rec.src->file, rec.src->line, rec.src->col);
    if (rec.comment) d.meta.comments.push_back(*rec.comment);
    d.meta.notation = rec.notation;
    auto proof = [&]() {
      std::vector<Ident> deps;
      for (const std::string& dep : rec.deps)
        deps.push_back(importers::resolveDependency(result_.library, th.name, dep));
      return dependsOn(deps);
    };

    switch (rec.kind) {
      case ToysetKind::Func:
      case ToysetKind::Pred: {
        Term t = rec.kind == ToysetKind::Func ? fol("set") : fol("prop");
        for (std::uint32_t i = 0; i < rec.arity; ++i) t = Term::arrow(fol("set"), t);
        d.type = t;
        d.meta.kind = DeclKind::Constant;
        return {d};
      }
      case ToysetKind::Axiom:
      case ToysetKind::Theorem:
        d.type = Term::apply(fol("ded"), parse(*rec.statement));
        d.meta.kind = rec.kind == ToysetKind::Axiom ? DeclKind::Axiom : DeclKind::Theorem;
        if (rec.kind == ToysetKind::Theorem) d.proof = proof();
        return {d};
      case ToysetKind::Scheme: {
        // Schematic variables are parsed as a binder prefix and stripped again.
        std::string prefix;
        for (const ToysetParam& p : rec.params) prefix += "{" + p.name + ":" + p.type + "} ";
        SchematicDecl sd{Context(), Term::type()};
        Term probe = parse(prefix + "type");
        for (; probe.is(Term::Kind::Pi); probe = probe.body())
          sd.schematicVars.push(probe.hint(), probe.dom());
        Term stmt = parse(prefix + "ded (" + *rec.statement + ")");
        for (std::size_t i = 0; i < rec.params.size(); ++i) stmt = stmt.body();
        sd.statement = stmt;
        d.type = closeToplevel(sd);
        d.meta.kind = rec.deps.empty() ? DeclKind::Axiom : DeclKind::Theorem;
        if (!rec.deps.empty()) d.proof = proof();
        return {d};
      }
      case ToysetKind::Definition: {
        const Pattern* pattern = nullptr;
        for (const Pattern& p : bundledPatterns().patterns())
          if (p.name.name() == rec.pattern) pattern = &p;
        if (pattern == nullptr)
          throw Error(ErrorCode::UnknownIdent, "unknown pattern " + rec.pattern, rec.pattern);
        PatternInstance inst{d.name, pattern->name, {}};
        for (const std::string& a : rec.args) inst.args.push_back(parse(a));
        std::vector<Declaration> out = elaboratePattern(result_.library, inst);
        for (Declaration& g : out) {
          g.meta.sourceRef = d.meta.sourceRef;
          g.meta.comments = d.meta.comments;
          g.meta.notation = d.meta.notation;
        }
        return out;
      }
    }
    return {};
  }

  const ToysetDoc& doc_;
  ImportOptions opts_;
  ImportResult result_;
};

}  // namespace

ImportResult importToyset(const ToysetDoc& doc, const ImportOptions& opts) {
  return ToysetImporter(doc, opts).run();
}

}  // namespace oaf
