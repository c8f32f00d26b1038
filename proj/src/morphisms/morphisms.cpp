#include "oaf/morphisms.hpp"

#include <map>
#include <set>

namespace oaf {

namespace {

class Translator {
 public:
  Translator(const Library& lib, const Morphism& m) : m_(m) {
    for (const Theory* th : includeClosure(lib, m.from)) {
      for (const Ident& meta : metaChain(lib, th->name)) {
        if (!lib.findTheory(meta)) continue;  // framework
        for (const Declaration& d : flatten(lib, meta)) shared_.insert(d.name);
      }
      for (const Declaration& d : th->decls) {
        source_.emplace(d.name, &d);
        order_.push_back(&d);
      }
    }
  }

  Term run(const Term& t) {
    return mapConstants(t, [this](const Ident& c) { return constant(c); });
  }

  const std::vector<const Declaration*>& order() const { return order_; }
  bool isSource(const Ident& c) const { return source_.count(c) != 0; }

 private:
  Term constant(const Ident& c) {
    auto src = source_.find(c);
    if (src == source_.end()) {
      if (shared_.count(c)) return Term::constant(c);
      throw Error(ErrorCode::UnassignedConstant,
                  c.str() + " is neither a source constant nor shared", c.str());
    }
    if (auto a = m_.assignments.find(c); a != m_.assignments.end()) return a->second;
    if (auto memo = unfolded_.find(c); memo != unfolded_.end()) return memo->second;
    const Declaration& d = *src->second;
    if (!d.definiens)
      throw Error(ErrorCode::UnassignedConstant, "no assignment for " + c.str(), c.str());
    Term t = run(*d.definiens);
    unfolded_.emplace(c, t);
    return t;
  }

  const Morphism& m_;
  std::map<Ident, const Declaration*> source_;
  std::vector<const Declaration*> order_;
  std::set<Ident> shared_;
  std::map<Ident, Term> unfolded_;
};

DeclStatus failed(const Ident& name, const Error& e) {
  return DeclStatus{name, false, e.code(), e.what()};
}

}  // namespace

Term translate(const Library& lib, const Morphism& m, const Term& t) {
  return Translator(lib, m).run(t);
}

CheckReport checkMorphism(const Library& lib, const Morphism& m, const KernelOptions& opts) {
  CheckReport report{m.name, {}, std::nullopt, {}};
  std::optional<Translator> tr;
  Signature target;
  KernelOptions kopts = opts;
  try {
    tr.emplace(lib, m);
    target = scopeOf(lib, m.to);
    kopts.refinement = opts.refinement || refinementEnabled(lib, m.to);
  } catch (const Error& e) {
    report.fatal = e.code();
    report.fatalMessage = e.what();
    return report;
  }
  for (const Declaration* d : tr->order()) {
    auto a = m.assignments.find(d->name);
    if (a == m.assignments.end()) {
      if (d->definiens || d->meta.kind == DeclKind::Theorem) continue;
      report.entries.push_back(
          DeclStatus{d->name, false, ErrorCode::UnassignedConstant, "no assignment"});
      continue;
    }
    DeclStatus status{d->name, true, std::nullopt, {}};
    try {
      if (d->type)
        check(target, Context{}, a->second, tr->run(*d->type), kopts);
      else
        infer(target, Context{}, a->second, kopts);
    } catch (const Error& e) {
      status = failed(d->name, e);
    }
    report.entries.push_back(std::move(status));
  }
  for (const auto& [c, _] : m.assignments)
    if (!tr->isSource(c))
      report.entries.push_back(DeclStatus{c, false, ErrorCode::UnknownIdent,
                                          "assignment to a constant outside the source"});
  return report;
}

Morphism identityMorphism(const Library& lib, const Ident& theory, Ident name) {
  Morphism m{std::move(name), theory, theory, {}};
  for (const Theory* th : includeClosure(lib, theory))
    for (const Declaration& d : th->decls) m.assignments.emplace(d.name, Term::constant(d.name));
  return m;
}

Morphism compose(const Library& lib, const Morphism& first, const Morphism& second, Ident name) {
  Morphism m{std::move(name), first.from, second.to, {}};
  Translator tr(lib, second);
  for (const auto& [c, t] : first.assignments) m.assignments.emplace(c, tr.run(t));
  return m;
}

Ident installedTheoryName(const Morphism& m) {
  return Ident::module(m.to.ns(), m.to.moduleName() + "_" + m.name.moduleName());
}

Theory installMorphism(const Library& lib, const Morphism& m, const KernelOptions& opts) {
  CheckReport report = checkMorphism(lib, m, opts);
  if (report.fatal) throw Error(*report.fatal, report.fatalMessage, m.name.str());
  for (const DeclStatus& s : report.entries)
    if (!s.ok)
      throw Error(s.error.value_or(ErrorCode::Mismatch),
                  "morphism " + m.name.str() + " fails at " + s.name.str() + ": " + s.message,
                  s.name.str());
  const Theory* target = lib.findTheory(m.to);
  const Theory* source = lib.findTheory(m.from);
  Theory out{installedTheoryName(m), target->metaTheory, {m.to}, {}};
  Translator tr(lib, m);
  for (const Declaration& d : source->decls) {
    if (d.meta.kind != DeclKind::Theorem || !d.type) continue;
    Declaration t{out.declIdent(m.name.moduleName() + "/" + d.name.name()), tr.run(*d.type),
                  std::nullopt, dependsOn({d.name, m.name}), {}};
    t.meta.kind = DeclKind::Theorem;
    out.decls.push_back(std::move(t));
  }
  return out;
}

}  // namespace oaf
