#include "oaf/encodings.hpp"
#include "oaf/importers.hpp"

namespace oaf {

namespace {

Term hol(const char* local) { return logicConst(LogicId::HolChurch, local); }

// Annotated intermediate tree; types may still mention metas.
struct Node {
  enum class Kind { Var, Const, App, Lam, Forall, Impl, Eq, ImplFn, EqFn } kind;
  SurfaceType type;
  std::uint32_t level = 0;  // Var
  std::optional<Ident> id;  // Const
  std::string var;          // Lam, Forall
  std::optional<SurfaceType> binderType;  // Lam, Forall; operand type of Eq, EqFn
  std::vector<Node> kids;
};

class Inference {
 public:
  explicit Inference(const SurfaceEnv& env) : env_(env) {}

  ChurchTerm run(const SurfaceTerm& t) {
    std::vector<std::pair<std::string, SurfaceType>> scope;
    Node root = infer(t, scope);
    requireGround(root);
    SurfaceType type = resolve(root.type);
    if (type.hasMeta())
      throw Error(ErrorCode::AmbiguousType, "result type of " + printSurfaceTerm(t) + " is open",
                  printSurfaceTerm(t));
    return ChurchTerm{emit(root, 0), type};
  }

 private:
  using Scope = std::vector<std::pair<std::string, SurfaceType>>;

  SurfaceType fresh() {
    bindings_.emplace_back();
    return SurfaceType::meta(static_cast<int>(bindings_.size() - 1));
  }

  // Follows bound metas at the top only.
  SurfaceType head(SurfaceType t) const {
    while (t.kind() == SurfaceType::Kind::Meta && bindings_[t.metaId()]) t = *bindings_[t.metaId()];
    return t;
  }

  SurfaceType resolve(const SurfaceType& t) const {
    SurfaceType h = head(t);
    if (h.kind() != SurfaceType::Kind::Arrow) return h;
    return SurfaceType::arrow(resolve(h.from()), resolve(h.to()));
  }

  bool occurs(int id, const SurfaceType& t) const {
    SurfaceType h = head(t);
    switch (h.kind()) {
      case SurfaceType::Kind::Meta: return h.metaId() == id;
      case SurfaceType::Kind::Base: return false;
      case SurfaceType::Kind::Arrow: return occurs(id, h.from()) || occurs(id, h.to());
    }
    return false;
  }

  void unify(const SurfaceType& a, const SurfaceType& b, const SurfaceTerm& where) {
    SurfaceType x = head(a), y = head(b);
    if (x.kind() == SurfaceType::Kind::Meta && y.kind() == SurfaceType::Kind::Meta &&
        x.metaId() == y.metaId())
      return;
    if (x.kind() == SurfaceType::Kind::Meta || y.kind() == SurfaceType::Kind::Meta) {
      if (x.kind() != SurfaceType::Kind::Meta) std::swap(x, y);
      if (occurs(x.metaId(), y)) mismatch(x, y, where, " (occurs check)");
      bindings_[x.metaId()] = y;
      return;
    }
    if (x.kind() != y.kind()) mismatch(x, y, where);
    if (x.kind() == SurfaceType::Kind::Base) {
      if (x.name() != y.name()) mismatch(x, y, where);
      return;
    }
    unify(x.from(), y.from(), where);
    unify(x.to(), y.to(), where);
  }

  [[noreturn]] void mismatch(const SurfaceType& a, const SurfaceType& b, const SurfaceTerm& where,
                             const char* extra = "") const {
    std::string w = printSurfaceTerm(where);
    throw Error(ErrorCode::UnificationFailure,
                "cannot unify " + printSurfaceType(resolve(a)) + " with " +
                    printSurfaceType(resolve(b)) + extra + " in " + w,
                w);
  }

  void validateAnnotation(const SurfaceType& t) const {
    switch (t.kind()) {
      case SurfaceType::Kind::Meta:
        throw Error(ErrorCode::Malformed, "annotations cannot contain inference variables");
      case SurfaceType::Kind::Base:
        if (t.name() != "bool" && !env_.baseTypes.count(t.name()))
          throw Error(ErrorCode::UnknownIdent, "unknown type " + t.name(), t.name());
        return;
      case SurfaceType::Kind::Arrow:
        validateAnnotation(t.from());
        validateAnnotation(t.to());
        return;
    }
  }

  static bool isBuiltin(const SurfaceTerm& t, const Scope& scope, const char* op) {
    if (t.kind() != SurfaceTerm::Kind::Name || t.name() != op) return false;
    for (const auto& [v, _] : scope)
      if (v == op) return false;
    return true;
  }

  Node infer(const SurfaceTerm& t, Scope& scope) {
    const SurfaceType boolean = SurfaceType::boolean();
    switch (t.kind()) {
      case SurfaceTerm::Kind::Name: {
        for (std::size_t i = scope.size(); i-- > 0;)
          if (scope[i].first == t.name())
            return Node{Node::Kind::Var, scope[i].second, static_cast<std::uint32_t>(i), {}, {}, {}, {}};
        if (t.name() == kImpliesName)
          return Node{Node::Kind::ImplFn,
                      SurfaceType::arrow(boolean, SurfaceType::arrow(boolean, boolean)),
                      0, {}, {}, {}, {}};
        if (t.name() == kEqualsName) {
          SurfaceType a = fresh();
          return Node{Node::Kind::EqFn, SurfaceType::arrow(a, SurfaceType::arrow(a, boolean)),
                      0, {}, {}, a, {}};
        }
        auto it = env_.constants.find(t.name());
        if (it == env_.constants.end())
          throw Error(ErrorCode::UnknownIdent, "unknown name " + t.name(), t.name());
        if (it->second.type.hasMeta())
          throw Error(ErrorCode::Malformed, "constant " + t.name() + " has an open type");
        return Node{Node::Kind::Const, it->second.type, 0, it->second.id, {}, {}, {}};
      }
      case SurfaceTerm::Kind::App: {
        if (t.fn().kind() == SurfaceTerm::Kind::App) {
          const SurfaceTerm& op = t.fn().fn();
          if (isBuiltin(op, scope, kImpliesName)) {
            Node p = infer(t.fn().arg(), scope), q = infer(t.arg(), scope);
            unify(p.type, boolean, t.fn().arg());
            unify(q.type, boolean, t.arg());
            return Node{Node::Kind::Impl, boolean, 0, {}, {}, {}, {std::move(p), std::move(q)}};
          }
          if (isBuiltin(op, scope, kEqualsName)) {
            Node a = infer(t.fn().arg(), scope), b = infer(t.arg(), scope);
            unify(a.type, b.type, t);
            SurfaceType operand = a.type;
            return Node{Node::Kind::Eq, boolean, 0, {}, {}, operand, {std::move(a), std::move(b)}};
          }
        }
        Node f = infer(t.fn(), scope), a = infer(t.arg(), scope);
        SurfaceType result = fresh();
        unify(f.type, SurfaceType::arrow(a.type, result), t);
        return Node{Node::Kind::App, result, 0, {}, {}, {}, {std::move(f), std::move(a)}};
      }
      case SurfaceTerm::Kind::Abs:
      case SurfaceTerm::Kind::Binder: {
        if (t.annot()) validateAnnotation(*t.annot());
        SurfaceType dom = t.annot() ? *t.annot() : fresh();
        scope.emplace_back(t.name(), dom);
        Node body = infer(t.body(), scope);
        scope.pop_back();
        if (t.kind() == SurfaceTerm::Kind::Binder) {
          unify(body.type, boolean, t);
          return Node{Node::Kind::Forall, boolean, 0, {}, t.name(), dom, {std::move(body)}};
        }
        SurfaceType type = SurfaceType::arrow(dom, body.type);
        return Node{Node::Kind::Lam, type, 0, {}, t.name(), dom, {std::move(body)}};
      }
    }
    throw Error(ErrorCode::Malformed, "unknown surface term");
  }

  // Outermost open binder first; once every binder and equality is ground,
  // every other type is too.
  void requireGround(const Node& n) const {
    if (n.binderType && resolve(*n.binderType).hasMeta()) {
      bool binder = n.kind == Node::Kind::Lam || n.kind == Node::Kind::Forall;
      std::string name = binder ? n.var : std::string(kEqualsName);
      throw Error(ErrorCode::AmbiguousType,
                  "no ground type for " + name + ": " + printSurfaceType(resolve(*n.binderType)),
                  name);
    }
    for (const Node& k : n.kids) requireGround(k);
  }

  Term type(const SurfaceType& t) const { return churchType(env_, resolve(t)); }

  Term emit(const Node& n, std::uint32_t depth) const {
    switch (n.kind) {
      case Node::Kind::Var: return Term::var(depth - 1 - n.level);
      case Node::Kind::Const: return Term::constant(*n.id);
      case Node::Kind::App: {
        SurfaceType f = resolve(n.kids[0].type);
        return Term::apply(hol("app"), {type(f.from()), type(f.to()), emit(n.kids[0], depth),
                                        emit(n.kids[1], depth)});
      }
      case Node::Kind::Lam: {
        Term a = type(*n.binderType);
        Term body = Term::lambda(n.var, Term::apply(hol("tm"), a), emit(n.kids[0], depth + 1));
        return Term::apply(hol("lam"), {a, type(n.kids[0].type), body});
      }
      case Node::Kind::Forall: {
        Term a = type(*n.binderType);
        Term body = Term::lambda(n.var, Term::apply(hol("tm"), a), emit(n.kids[0], depth + 1));
        return Term::apply(hol("forall"), {a, body});
      }
      case Node::Kind::Impl:
        return Term::apply(hol("impl"), {emit(n.kids[0], depth), emit(n.kids[1], depth)});
      case Node::Kind::Eq:
        return Term::apply(hol("eq"), {type(*n.binderType), emit(n.kids[0], depth),
                                       emit(n.kids[1], depth)});
      case Node::Kind::ImplFn:
      case Node::Kind::EqFn: {
        // Eta-expanded connective: lam A (A -> bool) [x] lam A bool [y] op x y
        bool impl = n.kind == Node::Kind::ImplFn;
        Term b = hol("bool'");
        Term a = impl ? b : type(*n.binderType);
        Term tmA = Term::apply(hol("tm"), a);
        Term core = impl ? Term::apply(hol("impl"), {Term::var(1), Term::var(0)})
                         : Term::apply(hol("eq"), {a, Term::var(1), Term::var(0)});
        Term inner = Term::apply(hol("lam"), {a, b, Term::lambda("y", tmA, core)});
        return Term::apply(hol("lam"), {a, Term::apply(hol("arrow"), {a, b}),
                                        Term::lambda("x", tmA, inner)});
      }
    }
    throw Error(ErrorCode::Malformed, "unknown node");
  }

  const SurfaceEnv& env_;
  std::vector<std::optional<SurfaceType>> bindings_;
};

}  // namespace

Term churchType(const SurfaceEnv& env, const SurfaceType& t) {
  switch (t.kind()) {
    case SurfaceType::Kind::Base: {
      if (t.name() == "bool") return hol("bool'");
      auto it = env.baseTypes.find(t.name());
      if (it == env.baseTypes.end())
        throw Error(ErrorCode::UnknownIdent, "unknown type " + t.name(), t.name());
      return Term::constant(it->second);
    }
    case SurfaceType::Kind::Arrow:
      return Term::apply(hol("arrow"), {churchType(env, t.from()), churchType(env, t.to())});
    case SurfaceType::Kind::Meta:
      throw Error(ErrorCode::AmbiguousType, "open type " + printSurfaceType(t));
  }
  throw Error(ErrorCode::Malformed, "unknown surface type");
}

ChurchTerm inferChurchAnnotations(const SurfaceEnv& env, const SurfaceTerm& t) {
  return Inference(env).run(t);
}

}  // namespace oaf
