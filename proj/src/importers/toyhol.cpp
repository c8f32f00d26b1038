#include <json.hpp>
#include <map>
#include <set>

#include "common.hpp"
#include "oaf/encodings.hpp"
#include "oaf/importers.hpp"

namespace oaf {

using nlohmann::json;

std::size_t ToyholDoc::recordCount() const {
  std::size_t n = 0;
  for (const ToyholTheory& th : theories) n += th.decls.size();
  return n;
}

namespace {

[[noreturn]] void violation(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, path + ": " + what, path);
}

std::string child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string element(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void requireObject(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) violation(path.empty() ? "$" : path, "expected an object");
  for (const auto& [k, _] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) violation(child(path, k), "unknown field");
  }
}

std::optional<std::string> stringField(const json& obj, const std::string& path, const char* key,
                                       bool required) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) violation(child(path, key), "missing field");
    return std::nullopt;
  }
  if (!it->is_string()) violation(child(path, key), "expected a string");
  return it->get<std::string>();
}

std::vector<std::string> stringList(const json& obj, const std::string& path, const char* key) {
  std::vector<std::string> out;
  auto it = obj.find(key);
  if (it == obj.end()) return out;
  std::string p = child(path, key);
  if (!it->is_array()) violation(p, "expected an array");
  for (std::size_t i = 0; i < it->size(); ++i) {
    if (!(*it)[i].is_string()) violation(element(p, i), "expected a string");
    out.push_back((*it)[i].get<std::string>());
  }
  return out;
}

std::uint32_t positive(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) violation(child(path, key), "missing field");
  if (!it->is_number_integer() || it->get<std::int64_t>() < 1 ||
      it->get<std::int64_t>() > 0xffffffffLL)
    violation(child(path, key), "expected a positive integer");
  return static_cast<std::uint32_t>(it->get<std::int64_t>());
}

std::string name(const json& obj, const std::string& path) {
  std::string n = *stringField(obj, path, "name", true);
  if (!isSurfaceName(n)) violation(child(path, "name"), "invalid name '" + n + "'");
  return n;
}

ToyholDecl readDecl(const json& j, const std::string& path) {
  requireObject(j, path,
                {"kind", "name", "type", "definiens", "deps", "src", "notation", "comment"});
  ToyholDecl d;
  std::string kind = *stringField(j, path, "kind", true);
  static const std::map<std::string, DeclKind> kinds{{"type", DeclKind::Type},
                                                     {"constant", DeclKind::Constant},
                                                     {"definition", DeclKind::Definition},
                                                     {"axiom", DeclKind::Axiom},
                                                     {"theorem", DeclKind::Theorem}};
  auto k = kinds.find(kind);
  if (k == kinds.end()) violation(child(path, "kind"), "unknown kind '" + kind + "'");
  d.kind = k->second;
  d.name = name(j, path);
  d.type = stringField(j, path, "type", false);
  d.definiens = stringField(j, path, "definiens", false);
  if (j.contains("deps")) d.deps = stringList(j, path, "deps");
  if (auto it = j.find("src"); it != j.end()) {
    std::string p = child(path, "src");
    requireObject(*it, p, {"file", "line", "col"});
    d.src = SourcePoint{*stringField(*it, p, "file", true), positive(*it, p, "line"),
                        positive(*it, p, "col")};
  }
  d.notation = stringField(j, path, "notation", false);
  d.comment = stringField(j, path, "comment", false);

  // Which optional fields each kind takes.
  bool needsType = d.kind == DeclKind::Constant || d.kind == DeclKind::Axiom ||
                   d.kind == DeclKind::Theorem;
  bool allowsType = needsType || d.kind == DeclKind::Definition;
  if (needsType && !d.type) violation(child(path, "type"), "missing field");
  if (!allowsType && d.type) violation(child(path, "type"), "not allowed for kind " + kind);
  if (d.kind == DeclKind::Definition && !d.definiens)
    violation(child(path, "definiens"), "missing field");
  if (d.kind != DeclKind::Definition && d.definiens)
    violation(child(path, "definiens"), "not allowed for kind " + kind);
  if (d.kind != DeclKind::Theorem && d.deps)
    violation(child(path, "deps"), "not allowed for kind " + kind);
  return d;
}

}  // namespace

ToyholDoc parseToyhol(std::string_view bytes) {
  json root;
  try {
    root = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Malformed, std::string("invalid JSON: ") + e.what(),
                std::to_string(e.byte));
  }
  requireObject(root, "", {"version", "namespace", "theories"});
  ToyholDoc doc;
  doc.version = *stringField(root, "", "version", true);
  if (doc.version != "1")
    throw Error(ErrorCode::UnsupportedVersion, "unsupported toyhol version " + doc.version,
                doc.version);
  if (auto ns = stringField(root, "", "namespace", false)) {
    if (ns->empty() || ns->find('?') != std::string::npos)
      violation("namespace", "invalid namespace");
    doc.ns = *ns;
  }
  auto theories = root.find("theories");
  if (theories == root.end()) violation("theories", "missing field");
  if (!theories->is_array()) violation("theories", "expected an array");
  std::set<std::string> theoryNames;
  for (std::size_t i = 0; i < theories->size(); ++i) {
    std::string path = element("theories", i);
    const json& tj = (*theories)[i];
    requireObject(tj, path, {"name", "includes", "decls"});
    ToyholTheory th;
    th.name = name(tj, path);
    if (!theoryNames.insert(th.name).second)
      violation(child(path, "name"), "duplicate theory " + th.name);
    th.includes = stringList(tj, path, "includes");
    auto decls = tj.find("decls");
    if (decls == tj.end()) violation(child(path, "decls"), "missing field");
    if (!decls->is_array()) violation(child(path, "decls"), "expected an array");
    std::set<std::string> declNames;
    for (std::size_t k = 0; k < decls->size(); ++k) {
      std::string dpath = element(child(path, "decls"), k);
      ToyholDecl d = readDecl((*decls)[k], dpath);
      if (!declNames.insert(d.name).second)
        violation(child(dpath, "name"), "duplicate declaration " + d.name);
      th.decls.push_back(std::move(d));
    }
    doc.theories.push_back(std::move(th));
  }
  return doc;
}

namespace {

class ToyholImporter {
 public:
  ToyholImporter(const ToyholDoc& doc, const ImportOptions& opts) : doc_(doc), opts_(opts) {
    result_.library.ns = doc.ns;
    result_.library.dependencies = builtinLogics();
    result_.report.records = doc.recordCount();
  }

  ImportResult run() {
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> includes;
    for (const ToyholTheory& th : doc_.theories) {
      names.push_back(th.name);
      includes.push_back(th.includes);
    }
    importers::Ordering ordering = importers::orderByIncludes(names, includes);
    for (const auto& s : ordering.skipped)
      importers::skipTheory(result_, theoryIdent(names[s.index]),
                            doc_.theories[s.index].decls.size(), s.code, s.message);
    for (std::size_t i : ordering.order) importTheory(doc_.theories[i]);
    importers::finish(result_, names, opts_);
    return std::move(result_);
  }

 private:
  Ident theoryIdent(const std::string& n) const { return Ident::module(doc_.ns, n); }

  void importTheory(const ToyholTheory& record) {
    Theory th{theoryIdent(record.name), logicIdent(LogicId::HolChurch), {}, {}};
    SurfaceEnv env;
    for (const std::string& inc : record.includes) th.includes.push_back(theoryIdent(inc));
    importers::IncrementalTheory target(result_.library, th, opts_.kernel);
    // Included theories contribute their names in flatten order.
    for (const Theory* t : includeClosure(result_.library, th.name)) {
      const SurfaceEnv& e = envs_[t->name];
      for (const auto& [k, v] : e.constants) env.constants.insert_or_assign(k, v);
      for (const auto& [k, v] : e.baseTypes) env.baseTypes.insert_or_assign(k, v);
    }
    SurfaceEnv own;
    for (const ToyholDecl& rec : record.decls) {
      Ident id = th.declIdent(rec.name);
      try {
        auto [decl, entry] = translate(th, env, rec);
        DeclStatus status = target.add(decl);
        if (!status.ok) {
          result_.report.issues.push_back({id, *status.error, status.message});
          continue;
        }
        if (rec.kind == DeclKind::Type) {
          env.baseTypes.insert_or_assign(rec.name, id);
          own.baseTypes.insert_or_assign(rec.name, id);
        } else if (entry) {
          env.constants.insert_or_assign(rec.name, *entry);
          own.constants.insert_or_assign(rec.name, *entry);
        }
      } catch (const Error& e) {
        result_.report.issues.push_back({id, e.code(), e.what()});
      }
    }
    envs_[th.name] = std::move(own);
  }

  std::pair<Declaration, std::optional<SurfaceConstant>> translate(const Theory& th,
                                                                   const SurfaceEnv& env,
                                                                   const ToyholDecl& rec) const {
    Ident id = th.declIdent(rec.name);
    Declaration d{id, std::nullopt, std::nullopt, std::nullopt, {}};
    d.meta.kind = rec.kind;
    if (rec.src) d.meta.sourceRef = SourceRef::point(rec.src->file, rec.src->line, rec.src->col);
    if (rec.comment) d.meta.comments.push_back(*rec.comment);
    d.meta.notation = rec.notation;
    Term tm = logicConst(LogicId::HolChurch, "tm");
    std::optional<SurfaceConstant> entry;

    switch (rec.kind) {
      case DeclKind::Type:
        d.type = logicConst(LogicId::HolChurch, "tp");
        break;
      case DeclKind::Constant: {
        SurfaceType t = parseSurfaceType(*rec.type);
        d.type = Term::apply(tm, churchType(env, t));
        entry = SurfaceConstant{id, t};
        break;
      }
      case DeclKind::Definition: {
        ChurchTerm def = inferChurchAnnotations(env, parseSurfaceTerm(*rec.definiens));
        if (rec.type) {
          SurfaceType declared = parseSurfaceType(*rec.type);
          if (!(declared == def.type))
            throw Error(ErrorCode::UnificationFailure,
                        "definiens has type " + printSurfaceType(def.type) + ", declared " +
                            printSurfaceType(declared),
                        *rec.definiens);
        }
        d.type = Term::apply(tm, churchType(env, def.type));
        d.definiens = def.term;
        entry = SurfaceConstant{id, def.type};
        break;
      }
      case DeclKind::Axiom:
      case DeclKind::Theorem: {
        ChurchTerm stmt = inferChurchAnnotations(env, parseSurfaceTerm(*rec.type));
        if (!(stmt.type == SurfaceType::boolean()))
          throw Error(ErrorCode::UnificationFailure,
                      "statement has type " + printSurfaceType(stmt.type) + ", not bool",
                      *rec.type);
        d.type = Term::apply(logicConst(LogicId::HolChurch, "ded"), stmt.term);
        if (rec.kind == DeclKind::Theorem) {
          std::vector<Ident> deps;
          for (const std::string& dep : rec.deps.value_or(std::vector<std::string>{}))
            deps.push_back(importers::resolveDependency(result_.library, th.name, dep));
          d.proof = dependsOn(deps);
        }
        break;
      }
      case DeclKind::PatternInstance:
        throw Error(ErrorCode::InvalidDeclaration, "pattern instances cannot be imported");
    }
    return {std::move(d), std::move(entry)};
  }

  const ToyholDoc& doc_;
  ImportOptions opts_;
  ImportResult result_;
  std::map<Ident, SurfaceEnv> envs_;
};

}  // namespace

ImportResult importToyhol(const ToyholDoc& doc, const ImportOptions& opts) {
  return ToyholImporter(doc, opts).run();
}

}  // namespace oaf
