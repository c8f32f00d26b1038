#include "oaf/kernel.hpp"

#include <unordered_set>

#include "oaf/syntax.hpp"

namespace oaf {

Context Context::extended(std::string hint, Term type) const {
  Context c = *this;
  c.push(std::move(hint), std::move(type));
  return c;
}

Term Context::typeOf(std::uint32_t index) const {
  if (index >= entries_.size())
    throw Error(ErrorCode::IllScoped,
                "variable #" + std::to_string(index) + " is not bound in a context of size " +
                    std::to_string(entries_.size()));
  return shift(entries_[entries_.size() - 1 - index].type, index + 1);
}

const std::string& Context::hintOf(std::uint32_t index) const {
  return entries_.at(entries_.size() - 1 - index).hint;
}

void Signature::add(const Declaration& d) {
  if (index_.count(d.name)) return;
  index_.emplace(d.name, decls_.size());
  decls_.push_back(d);
}

const Declaration* Signature::find(const Ident& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &decls_[it->second];
}

Signature Signature::ofLibrary(const Library& lib) {
  Signature sig;
  for (const Theory& t : lib.dependencies)
    for (const Declaration& d : t.decls) sig.add(d);
  for (const Theory& t : lib.theories)
    for (const Declaration& d : t.decls) sig.add(d);
  return sig;
}

Ident frameworkLF() { return Ident::module("http://oaf.example.org/framework", "LF"); }
Ident frameworkLFRefine() { return Ident::module("http://oaf.example.org/framework", "LFR"); }

namespace {

bool isFramework(const Ident& id) { return id == frameworkLF() || id == frameworkLFRefine(); }

// One kernel operation. The reduction budget is shared by every whnf call the
// operation makes, so divergence hidden under binders is caught as well.
class Checker {
 public:
  Checker(const Signature& sig, const KernelOptions& opts) : sig_(sig), opts_(opts) {}

  Term whnf(Term t) {
    using K = Term::Kind;
    for (;;) {
      switch (t.kind()) {
        case K::Apply: {
          Term head = whnf(t.fn());
          if (head.is(K::Lambda)) {
            tick();
            t = instantiate(head.body(), t.arg());
            continue;
          }
          if (head.sameNode(t.fn())) return t;
          return Term::apply(head, t.arg());
        }
        case K::Const: {
          const Declaration* d = sig_.find(t.ident());
          if (d == nullptr || !d->definiens) return t;
          tick();
          t = *d->definiens;
          continue;
        }
        case K::SubOut: {
          Term inner = whnf(t.elem());
          if (inner.is(K::SubIn)) {
            tick();
            t = inner.elem();
            continue;
          }
          if (inner.sameNode(t.elem())) return t;
          return Term::subOut(inner);
        }
        default:
          return t;
      }
    }
  }

  bool equal(const Term& a, const Term& b) {
    using K = Term::Kind;
    if (a == b) return true;
    Term x = whnf(a);
    Term y = whnf(b);
    if (x == y) return true;

    if (opts_.eta) {
      if (x.is(K::Lambda) && !y.is(K::Lambda))
        return equal(x.body(), Term::apply(shift(y, 1), Term::var(0)));
      if (y.is(K::Lambda) && !x.is(K::Lambda))
        return equal(Term::apply(shift(x, 1), Term::var(0)), y.body());
    }
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
      case K::Lambda:
      case K::Pi:
        return equal(x.dom(), y.dom()) && equal(x.body(), y.body());
      case K::SubType:
        return equal(x.base(), y.base()) && equal(x.pred(), y.pred());
      case K::SubIn:
        return equal(x.elem(), y.elem());  // witnesses are irrelevant
      case K::SubOut:
        return equal(x.elem(), y.elem());
      case K::Apply: {
        const Term& hx = x.head();
        const Term& hy = y.head();
        if (hx.kind() != hy.kind()) return false;
        if (hx.is(K::SubOut)) {
          if (!equal(hx.elem(), hy.elem())) return false;
        } else if (!(hx == hy)) {
          return false;
        }
        std::vector<Term> ax = x.spineArgs();
        std::vector<Term> ay = y.spineArgs();
        if (ax.size() != ay.size()) return false;
        for (std::size_t i = 0; i < ax.size(); ++i)
          if (!equal(ax[i], ay[i])) return false;
        return true;
      }
      default:
        return false;  // Const, Var, TypeKind: structural test already failed
    }
  }

  Term infer(const Context& ctx, const Term& t) {
    using K = Term::Kind;
    switch (t.kind()) {
      case K::Const: {
        const Declaration* d = sig_.find(t.ident());
        if (d == nullptr)
          throw Error(ErrorCode::UnknownIdent, "unknown constant " + t.ident().str(),
                      t.ident().str());
        if (d->type) return *d->type;
        if (d->definiens) return infer(Context(), *d->definiens);
        throw Error(ErrorCode::NotTyped, "constant without type " + t.ident().str());
      }
      case K::Var:
        return ctx.typeOf(t.index());
      case K::Apply: {
        Term fnType = whnf(infer(ctx, t.fn()));
        if (!fnType.is(K::Pi))
          throw Error(ErrorCode::NotAFunction,
                      "applied term " + printTerm(t.fn()) + " has non-function type " +
                          printTerm(fnType));
        check(ctx, t.arg(), fnType.dom());
        return instantiate(fnType.body(), t.arg());
      }
      case K::Lambda: {
        requireType(ctx, t.dom());
        Term bodyType = infer(ctx.extended(t.hint(), t.dom()), t.body());
        return Term::pi(t.hint(), t.dom(), bodyType);
      }
      case K::Pi: {
        requireType(ctx, t.dom());
        Context inner = ctx.extended(t.hint(), t.dom());
        Term codType = whnf(infer(inner, t.body()));
        if (!codType.is(K::TypeKind))
          throw Error(ErrorCode::Mismatch,
                      "codomain " + printTerm(t.body()) + " is not a type");
        return Term::type();
      }
      case K::TypeKind:
        throw Error(ErrorCode::NotTyped, "'type' has no type");
      case K::SubType: {
        requireRefinement();
        requireType(ctx, t.base());
        check(ctx, t.pred(), Term::arrow(t.base(), Term::type()));
        return Term::type();
      }
      case K::SubIn:
        requireRefinement();
        throw Error(ErrorCode::NotTyped,
                    "subin has no inferable type; it must be checked against a subtype");
      case K::SubOut: {
        requireRefinement();
        Term elemType = whnf(infer(ctx, t.elem()));
        if (!elemType.is(K::SubType))
          throw Error(ErrorCode::Mismatch,
                      "subout applied to " + printTerm(t.elem()) + " of non-subtype " +
                          printTerm(elemType));
        return elemType.base();
      }
    }
    throw Error(ErrorCode::NotTyped, "unhandled term");
  }

  void check(const Context& ctx, const Term& t, const Term& expected) {
    using K = Term::Kind;
    if (t.is(K::Lambda)) {
      Term target = whnf(expected);
      if (target.is(K::Pi)) {
        requireType(ctx, t.dom());
        if (!equal(t.dom(), target.dom()))
          throw Error(ErrorCode::Mismatch, "binder domain " + printTerm(t.dom()) +
                                               " does not match " + printTerm(target.dom()));
        check(ctx.extended(t.hint(), target.dom()), t.body(), target.body());
        return;
      }
    }
    if (t.is(K::SubIn)) {
      requireRefinement();
      Term target = whnf(expected);
      if (!target.is(K::SubType))
        throw Error(ErrorCode::Mismatch,
                    "subin checked against non-subtype " + printTerm(expected));
      check(ctx, t.elem(), target.base());
      check(ctx, t.witness(), whnf(Term::apply(target.pred(), t.elem())));
      return;
    }
    Term actual = infer(ctx, t);
    if (equal(actual, expected)) return;
    Term target = whnf(expected);
    if (target.is(K::SubType) && equal(actual, target.base()))
      throw Error(ErrorCode::SubtypeWitnessMissing,
                  printTerm(t) + " has the base type of " + printTerm(expected) +
                      " but no subin witness");
    throw Error(ErrorCode::Mismatch, printTerm(t) + " has type " + printTerm(actual) +
                                         ", expected " + printTerm(expected));
  }

  bool isKind(const Context& ctx, const Term& t) {
    if (t.is(Term::Kind::TypeKind)) return true;
    if (!t.is(Term::Kind::Pi)) return false;
    if (!isKindShaped(t)) return false;
    requireType(ctx, t.dom());
    return isKind(ctx.extended(t.hint(), t.dom()), t.body());
  }

  void checkClassifier(const Context& ctx, const Term& t) {
    if (isKindShaped(t)) {
      isKind(ctx, t);
      return;
    }
    requireType(ctx, t);
  }

 private:
  static bool isKindShaped(const Term& t) {
    const Term* cur = &t;
    while (cur->is(Term::Kind::Pi)) cur = &cur->body();
    return cur->is(Term::Kind::TypeKind);
  }

  void requireType(const Context& ctx, const Term& t) {
    Term k = whnf(infer(ctx, t));
    if (!k.is(Term::Kind::TypeKind))
      throw Error(ErrorCode::Mismatch, printTerm(t) + " is not a type");
  }

  void requireRefinement() const {
    if (!opts_.refinement)
      throw Error(ErrorCode::ExtensionDisabled,
                  "predicate subtypes are not enabled for this meta-theory");
  }

  void tick() {
    if (++steps_ > opts_.reductionBudget)
      throw Error(ErrorCode::ReductionDepthExceeded,
                  "reduction budget of " + std::to_string(opts_.reductionBudget) +
                      " steps exceeded");
  }

  const Signature& sig_;
  const KernelOptions& opts_;
  std::size_t steps_ = 0;
};

void visitIncludes(const Library& lib, const Ident& id,
                   std::unordered_map<Ident, int>& state, std::vector<const Theory*>& out) {
  int& s = state[id];
  if (s == 2) return;
  if (s == 1) throw Error(ErrorCode::Cycle, "include cycle through " + id.str(), id.str());
  const Theory* th = lib.findTheory(id);
  if (th == nullptr)
    throw Error(ErrorCode::UnknownIdent, "unknown theory " + id.str(), id.str());
  s = 1;
  for (const Ident& inc : th->includes) visitIncludes(lib, inc, state, out);
  state[id] = 2;
  out.push_back(th);
}

}  // namespace

Term whnf(const Signature& sig, const Term& t, const KernelOptions& opts) {
  return Checker(sig, opts).whnf(t);
}

bool equal(const Signature& sig, const Context&, const Term& a, const Term& b,
           const KernelOptions& opts) {
  return Checker(sig, opts).equal(a, b);
}

Term infer(const Signature& sig, const Context& ctx, const Term& t, const KernelOptions& opts) {
  return Checker(sig, opts).infer(ctx, t);
}

void check(const Signature& sig, const Context& ctx, const Term& t, const Term& expected,
           const KernelOptions& opts) {
  Checker(sig, opts).check(ctx, t, expected);
}

bool isKind(const Signature& sig, const Context& ctx, const Term& t, const KernelOptions& opts) {
  return Checker(sig, opts).isKind(ctx, t);
}

void checkClassifier(const Signature& sig, const Context& ctx, const Term& t,
                     const KernelOptions& opts) {
  Checker(sig, opts).checkClassifier(ctx, t);
}

std::vector<const Theory*> includeClosure(const Library& lib, const Ident& theory) {
  std::unordered_map<Ident, int> state;
  std::vector<const Theory*> out;
  visitIncludes(lib, theory, state, out);
  return out;
}

std::vector<Declaration> flatten(const Library& lib, const Ident& theory) {
  std::vector<Declaration> out;
  for (const Theory* th : includeClosure(lib, theory))
    out.insert(out.end(), th->decls.begin(), th->decls.end());
  return out;
}

std::vector<Ident> metaChain(const Library& lib, const Ident& theory) {
  std::vector<Ident> chain;
  std::unordered_set<Ident> seen{theory};
  const Theory* th = lib.findTheory(theory);
  if (th == nullptr)
    throw Error(ErrorCode::UnknownIdent, "unknown theory " + theory.str(), theory.str());
  std::optional<Ident> next = th->metaTheory;
  while (next) {
    if (!seen.insert(*next).second)
      throw Error(ErrorCode::Cycle, "meta-theory cycle through " + next->str(), next->str());
    chain.push_back(*next);
    if (isFramework(*next)) break;
    const Theory* meta = lib.findTheory(*next);
    if (meta == nullptr)
      throw Error(ErrorCode::UnknownIdent, "unknown meta-theory " + next->str(), next->str());
    next = meta->metaTheory;
  }
  return chain;
}

bool refinementEnabled(const Library& lib, const Ident& theory) {
  for (const Ident& m : metaChain(lib, theory))
    if (m == frameworkLFRefine()) return true;
  return false;
}

Signature scopeOf(const Library& lib, const Ident& theory, bool withOwn) {
  Signature sig;
  for (const Theory* th : includeClosure(lib, theory)) {
    std::vector<Ident> chain = metaChain(lib, th->name);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      if (isFramework(*it)) continue;
      for (const Declaration& d : flatten(lib, *it)) sig.add(d);
    }
  }
  for (const Theory* th : includeClosure(lib, theory)) {
    if (!withOwn && th->name == theory) continue;
    for (const Declaration& d : th->decls) sig.add(d);
  }
  return sig;
}

std::size_t CheckReport::passed() const {
  std::size_t n = 0;
  for (const DeclStatus& s : entries) n += s.ok ? 1 : 0;
  return n;
}

std::size_t CheckReport::failed() const { return entries.size() - passed(); }

const DeclStatus* CheckReport::find(const Ident& name) const {
  for (const DeclStatus& s : entries)
    if (s.name == name) return &s;
  return nullptr;
}

namespace {

bool isJustification(DeclKind k) {
  return k == DeclKind::Axiom || k == DeclKind::Theorem || k == DeclKind::PatternInstance;
}

// DependsOn entries must name visible axioms or theorems. A cited morphism
// additionally makes its source theory's justifications citable, which is
// how translated theorems point back at their originals.
void checkDependencies(const Library& lib, const Signature& sig, const DependsOnProof& deps) {
  std::vector<Signature> cited;
  for (const Ident& id : deps.ids) {
    if (!id.isModule()) continue;
    const Morphism* m = lib.findMorphism(id);
    if (m == nullptr)
      throw Error(ErrorCode::UnknownIdent, "dependency on unknown morphism " + id.str(),
                  id.str());
    cited.push_back(scopeOf(lib, m->from));
  }
  for (const Ident& id : deps.ids) {
    if (id.isModule()) continue;
    const Declaration* d = sig.find(id);
    for (std::size_t i = 0; d == nullptr && i < cited.size(); ++i) d = cited[i].find(id);
    if (d == nullptr)
      throw Error(ErrorCode::UnknownIdent, "dependency on unknown or invisible " + id.str(),
                  id.str());
    if (!isJustification(d->meta.kind))
      throw Error(ErrorCode::InvalidDependency,
                  "dependency " + id.str() + " is a " + std::string(declKindName(d->meta.kind)) +
                      ", not an axiom or theorem",
                  id.str());
  }
}

}  // namespace

DeclStatus checkDeclaration(const Library& lib, const Ident& theory, Signature& sig,
                            const Declaration& decl, const KernelOptions& opts) {
  DeclStatus status{decl.name, true, std::nullopt, {}};
  auto fail = [&](const Error& e) {
    if (!status.ok) return;
    status.ok = false;
    status.error = e.code();
    status.message = e.what();
  };
  Declaration accepted = decl;
  bool typeOk = true;
  try {
    if (sig.contains(decl.name))
      throw Error(ErrorCode::DuplicateName, "duplicate declaration " + decl.name.str());
    if (decl.name.modulePath() != theory)
      throw Error(ErrorCode::InvalidDeclaration,
                  decl.name.str() + " is not named within " + theory.str());
    if (!decl.type && !decl.definiens)
      throw Error(ErrorCode::InvalidDeclaration, "declaration has neither type nor definiens");
    if (decl.meta.sourceRef && !decl.meta.sourceRef->valid())
      throw Error(ErrorCode::InvalidDeclaration, "source reference ends before it starts");
    if (decl.meta.kind == DeclKind::Theorem && !decl.proof)
      throw Error(ErrorCode::InvalidDeclaration, "theorem without proof");
    if (decl.proof && decl.meta.kind != DeclKind::Theorem) {
      if (decl.meta.kind != DeclKind::Axiom || !std::holds_alternative<OmittedProof>(*decl.proof))
        throw Error(ErrorCode::InvalidDeclaration,
                    "only theorems carry proofs; axioms at most an omitted one");
    }
    if (decl.type) checkClassifier(sig, Context(), *decl.type, opts);
  } catch (const Error& e) {
    fail(e);
    typeOk = false;
  }
  if (typeOk && decl.definiens) {
    try {
      if (decl.type)
        check(sig, Context(), *decl.definiens, *decl.type, opts);
      else
        accepted.type = infer(sig, Context(), *decl.definiens, opts);
    } catch (const Error& e) {
      fail(e);
      accepted.definiens.reset();
      typeOk = decl.type.has_value();
    }
  }
  if (typeOk && decl.proof) {
    try {
      if (const auto* pt = std::get_if<TermProof>(&*decl.proof)) {
        if (!accepted.type) throw Error(ErrorCode::InvalidDeclaration, "proof term without statement");
        check(sig, Context(), pt->term, *accepted.type, opts);
      } else if (const auto* deps = std::get_if<DependsOnProof>(&*decl.proof)) {
        checkDependencies(lib, sig, *deps);
      }
    } catch (const Error& e) {
      fail(e);
    }
  }
  if (typeOk && !sig.contains(decl.name)) sig.add(accepted);
  return status;
}

CheckReport checkTheory(const Library& lib, const Ident& theory, KernelOptions opts) {
  CheckReport report{theory, {}, std::nullopt, {}};
  const Theory* th = lib.findTheory(theory);
  Signature sig;
  try {
    if (th == nullptr)
      throw Error(ErrorCode::UnknownIdent, "unknown theory " + theory.str(), theory.str());
    opts.refinement = refinementEnabled(lib, theory);
    sig = scopeOf(lib, theory, false);
  } catch (const Error& e) {
    report.fatal = e.code();
    report.fatalMessage = e.what();
    return report;
  }
  for (const Declaration& decl : th->decls)
    report.entries.push_back(checkDeclaration(lib, theory, sig, decl, opts));
  return report;
}

}  // namespace oaf
