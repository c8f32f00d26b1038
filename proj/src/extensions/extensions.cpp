#include "oaf/extensions.hpp"

#include "oaf/encodings.hpp"
#include "oaf/error.hpp"
#include "oaf/syntax.hpp"

namespace oaf {

Ident Pattern::templateIdent(const std::string& local) const {
  return Ident(name.ns(), name.moduleName(), name.name() + "/" + local);
}

std::string Pattern::templateName(const Ident& id) const {
  std::string prefix = name.name() + "/";
  if (id.ns() != name.ns() || id.moduleName() != name.moduleName() ||
      id.name().compare(0, prefix.size(), prefix) != 0)
    return {};
  return id.name().substr(prefix.size());
}

void PatternSet::add(Pattern p) {
  for (Pattern& q : patterns_)
    if (q.name == p.name) {
      q = std::move(p);
      return;
    }
  patterns_.push_back(std::move(p));
}

const Pattern* PatternSet::find(const Ident& name) const {
  for (const Pattern& p : patterns_)
    if (p.name == name) return &p;
  return nullptr;
}

namespace {

// Builds a pattern from concrete syntax. Params are written as a binder
// prefix, so template bodies are parsed under the same binders and then
// stripped of them.
class PatternBuilder {
 public:
  PatternBuilder(Ident name, const Theory& logic, std::string params)
      : pattern_{std::move(name), {}, {}}, prefix_(std::move(params)) {
    for (const Declaration& d : logic.decls) names_.add(d.name);
    Term probe = parseTerm(prefix_ + " type", names_.resolver());
    for (; probe.is(Term::Kind::Pi); probe = probe.body())
      pattern_.params.push(probe.hint(), probe.dom());
  }

  PatternBuilder& add(const std::string& local, DeclKind kind, const std::string& type) {
    Term t = parseTerm(prefix_ + " " + type, names_.resolver());
    for (std::size_t i = 0; i < pattern_.params.size(); ++i) t = t.body();
    Declaration d{pattern_.templateIdent(local), t, std::nullopt, std::nullopt, {}};
    d.meta.kind = kind;
    pattern_.body.push_back(d);
    names_.add(local, d.name);
    return *this;
  }

  Pattern build() const { return pattern_; }

 private:
  Pattern pattern_;
  std::string prefix_;
  NameTable names_;
};

}  // namespace

Pattern funcDefinitionPattern() {
  return PatternBuilder(logicIdent(LogicId::FolSoft).child("func-definition"), folSoft(),
                        "{P:set -> set -> prop}")
      .add("f", DeclKind::Constant, "set -> set")
      .add("def", DeclKind::Axiom, "ded (forallSet [x:set] P x (f x))")
      .build();
}

Pattern typedefPattern() {
  return PatternBuilder(logicIdent(LogicId::HolChurch).child("typedef"), holChurch(),
                        "{A:tp} {P:tm A -> tm bool'}")
      .add("T", DeclKind::Type, "tp")
      .add("rep", DeclKind::Constant, "tm (arrow T A)")
      .add("rep_prop", DeclKind::Axiom, "ded (forall T [x:tm T] P (app T A rep x))")
      .build();
}

const PatternSet& bundledPatterns() {
  static const PatternSet set = [] {
    PatternSet s;
    s.add(funcDefinitionPattern());
    s.add(typedefPattern());
    return s;
  }();
  return set;
}

namespace {

// Replaces the pattern parameters (the outermost `args.size()` free
// variables) by closed arguments.
Term instantiateParams(Term t, const std::vector<Term>& args) {
  for (std::size_t i = args.size(); i-- > 0;) t = instantiate(t, args[i]);
  return t;
}

}  // namespace

std::vector<Declaration> elaboratePattern(const Library& lib, const PatternInstance& inst,
                                          const PatternSet& patterns) {
  const Pattern* pattern = patterns.find(inst.pattern);
  if (pattern == nullptr)
    throw Error(ErrorCode::UnknownIdent, "unknown pattern " + inst.pattern.str(),
                inst.pattern.str());
  if (inst.args.size() != pattern->arity())
    throw Error(ErrorCode::ArityMismatch,
                "pattern " + inst.pattern.str() + " takes " + std::to_string(pattern->arity()) +
                    " arguments, got " + std::to_string(inst.args.size()));

  Ident home = inst.name.modulePath();
  Signature sig;
  KernelOptions opts;
  if (lib.findTheory(home)) {
    sig = scopeOf(lib, home);
    opts.refinement = refinementEnabled(lib, home);
  } else {
    sig = Signature::ofLibrary(lib);
  }
  for (std::size_t i = 0; i < inst.args.size(); ++i) {
    std::vector<Term> earlier(inst.args.begin(), inst.args.begin() + static_cast<long>(i));
    Term expected = instantiateParams(pattern->params.entries()[i].type, earlier);
    check(sig, Context(), inst.args[i], expected, opts);
  }

  auto generated = [&](const std::string& local) {
    return Ident(inst.name.ns(), inst.name.moduleName(), inst.name.name() + "/" + local);
  };
  auto rename = [&](const Term& t) {
    return mapConstants(t, [&](const Ident& id) {
      std::string local = pattern->templateName(id);
      return local.empty() ? Term::constant(id) : Term::constant(generated(local));
    });
  };

  std::vector<Declaration> out;
  for (const Declaration& tmpl : pattern->body) {
    Declaration d{generated(pattern->templateName(tmpl.name)), std::nullopt, std::nullopt,
                  std::nullopt, tmpl.meta};
    if (tmpl.type) d.type = rename(instantiateParams(*tmpl.type, inst.args));
    if (tmpl.definiens) d.definiens = rename(instantiateParams(*tmpl.definiens, inst.args));
    d.meta.kind = DeclKind::PatternInstance;
    d.meta.origin = PatternOrigin{inst.name, inst.pattern};
    out.push_back(std::move(d));
  }
  return out;
}

Term closeToplevel(const SchematicDecl& sd) {
  Term t = sd.statement;
  const auto& vars = sd.schematicVars.entries();
  for (std::size_t i = vars.size(); i-- > 0;) t = Term::pi(vars[i].hint, vars[i].type, t);
  return t;
}

std::vector<Term> groundInstances(const SchematicDecl& sd, const std::vector<Term>& candidates,
                                  std::size_t limit, const Signature* sig,
                                  const KernelOptions& opts) {
  if (sd.schematicVars.size() != 1)
    throw Error(ErrorCode::ArityUnsupported,
                "ground instances need exactly one schematic variable, got " +
                    std::to_string(sd.schematicVars.size()));
  std::vector<Term> out;
  for (const Term& c : candidates) {
    if (out.size() >= limit) break;
    if (sig) check(*sig, Context(), c, sd.schematicVars.entries()[0].type, opts);
    out.push_back(instantiate(sd.statement, c));
  }
  return out;
}

}  // namespace oaf
