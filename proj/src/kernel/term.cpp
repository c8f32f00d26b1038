#include "oaf/term.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

#include "oaf/error.hpp"

namespace oaf {

namespace {

std::uint32_t binderLoose(std::uint32_t inner) { return inner == 0 ? 0 : inner - 1; }

}  // namespace

Term Term::constant(Ident id) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->ident = std::move(id);
  return Term(std::move(n));
}

Term Term::var(std::uint32_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->index = index;
  n->loose = index + 1;
  return Term(std::move(n));
}

Term Term::apply(Term fn, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Apply;
  n->loose = std::max(fn.looseBound(), arg.looseBound());
  n->first = std::move(fn);
  n->second = std::move(arg);
  return Term(std::move(n));
}

Term Term::apply(Term fn, const std::vector<Term>& args) {
  for (const Term& a : args) fn = apply(std::move(fn), a);
  return fn;
}

Term Term::lambda(std::string hint, Term dom, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lambda;
  n->hint = std::move(hint);
  n->loose = std::max(dom.looseBound(), binderLoose(body.looseBound()));
  n->first = std::move(dom);
  n->second = std::move(body);
  return Term(std::move(n));
}

Term Term::pi(std::string hint, Term dom, Term cod) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pi;
  n->hint = std::move(hint);
  n->loose = std::max(dom.looseBound(), binderLoose(cod.looseBound()));
  n->first = std::move(dom);
  n->second = std::move(cod);
  return Term(std::move(n));
}

Term Term::arrow(Term dom, Term cod) {
  return pi("_", std::move(dom), shift(cod, 1));
}

Term Term::type() {
  static const Term kType = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::TypeKind;
    return Term(std::move(n));
  }();
  return kType;
}

Term Term::subType(Term base, Term pred) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::SubType;
  n->loose = std::max(base.looseBound(), pred.looseBound());
  n->first = std::move(base);
  n->second = std::move(pred);
  return Term(std::move(n));
}

Term Term::subIn(Term elem, Term witness) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::SubIn;
  n->loose = std::max(elem.looseBound(), witness.looseBound());
  n->first = std::move(elem);
  n->second = std::move(witness);
  return Term(std::move(n));
}

Term Term::subOut(Term elem) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::SubOut;
  n->loose = elem.looseBound();
  n->first = std::move(elem);
  return Term(std::move(n));
}

const Ident& Term::ident() const {
  assert(is(Kind::Const));
  return *node_->ident;
}

std::uint32_t Term::index() const {
  assert(is(Kind::Var));
  return node_->index;
}

const std::string& Term::hint() const { return node_->hint; }

const Term& Term::fn() const {
  assert(is(Kind::Apply));
  return *node_->first;
}
const Term& Term::arg() const {
  assert(is(Kind::Apply));
  return *node_->second;
}
const Term& Term::dom() const {
  assert(is(Kind::Lambda) || is(Kind::Pi));
  return *node_->first;
}
const Term& Term::body() const {
  assert(is(Kind::Lambda) || is(Kind::Pi));
  return *node_->second;
}
const Term& Term::base() const {
  assert(is(Kind::SubType));
  return *node_->first;
}
const Term& Term::pred() const {
  assert(is(Kind::SubType));
  return *node_->second;
}
const Term& Term::elem() const {
  assert(is(Kind::SubIn) || is(Kind::SubOut));
  return *node_->first;
}
const Term& Term::witness() const {
  assert(is(Kind::SubIn));
  return *node_->second;
}

std::uint32_t Term::looseBound() const { return node_->loose; }

bool Term::mentionsVar(std::uint32_t index) const {
  if (node_->loose <= index) return false;
  switch (kind()) {
    case Kind::Var:
      return node_->index == index;
    case Kind::Lambda:
    case Kind::Pi:
      return dom().mentionsVar(index) || body().mentionsVar(index + 1);
    case Kind::Const:
    case Kind::TypeKind:
      return false;
    case Kind::SubOut:
      return elem().mentionsVar(index);
    default:
      return node_->first->mentionsVar(index) || node_->second->mentionsVar(index);
  }
}

const Term& Term::head() const {
  const Term* t = this;
  while (t->is(Kind::Apply)) t = &t->fn();
  return *t;
}

std::vector<Term> Term::spineArgs() const {
  std::vector<Term> args;
  const Term* t = this;
  while (t->is(Kind::Apply)) {
    args.push_back(t->arg());
    t = &t->fn();
  }
  std::reverse(args.begin(), args.end());
  return args;
}

bool operator==(const Term& a, const Term& b) {
  if (a.sameNode(b)) return true;
  if (a.kind() != b.kind() || a.looseBound() != b.looseBound()) return false;
  switch (a.kind()) {
    case Term::Kind::Const:
      return a.ident() == b.ident();
    case Term::Kind::Var:
      return a.index() == b.index();
    case Term::Kind::TypeKind:
      return true;
    case Term::Kind::SubOut:
      return a.elem() == b.elem();
    default:
      return *a.node_->first == *b.node_->first && *a.node_->second == *b.node_->second;
  }
}

Term shift(const Term& t, std::int64_t amount, std::uint32_t cutoff) {
  if (amount == 0 || t.looseBound() <= cutoff) return t;
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Var: {
      std::int64_t i = static_cast<std::int64_t>(t.index()) + amount;
      if (i < 0) throw Error(ErrorCode::IllScoped, "negative de Bruijn index after shift");
      return Term::var(static_cast<std::uint32_t>(i));
    }
    case K::Apply:
      return Term::apply(shift(t.fn(), amount, cutoff), shift(t.arg(), amount, cutoff));
    case K::Lambda:
      return Term::lambda(t.hint(), shift(t.dom(), amount, cutoff),
                          shift(t.body(), amount, cutoff + 1));
    case K::Pi:
      return Term::pi(t.hint(), shift(t.dom(), amount, cutoff),
                      shift(t.body(), amount, cutoff + 1));
    case K::SubType:
      return Term::subType(shift(t.base(), amount, cutoff), shift(t.pred(), amount, cutoff));
    case K::SubIn:
      return Term::subIn(shift(t.elem(), amount, cutoff), shift(t.witness(), amount, cutoff));
    case K::SubOut:
      return Term::subOut(shift(t.elem(), amount, cutoff));
    case K::Const:
    case K::TypeKind:
      return t;
  }
  return t;
}

Term substitute(const Term& t, std::uint32_t depth, const Term& s) {
  if (t.looseBound() <= depth) return t;
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Var:
      if (t.index() == depth) return shift(s, depth);
      return Term::var(t.index() - 1);  // index > depth here
    case K::Apply:
      return Term::apply(substitute(t.fn(), depth, s), substitute(t.arg(), depth, s));
    case K::Lambda:
      return Term::lambda(t.hint(), substitute(t.dom(), depth, s),
                          substitute(t.body(), depth + 1, s));
    case K::Pi:
      return Term::pi(t.hint(), substitute(t.dom(), depth, s),
                      substitute(t.body(), depth + 1, s));
    case K::SubType:
      return Term::subType(substitute(t.base(), depth, s), substitute(t.pred(), depth, s));
    case K::SubIn:
      return Term::subIn(substitute(t.elem(), depth, s), substitute(t.witness(), depth, s));
    case K::SubOut:
      return Term::subOut(substitute(t.elem(), depth, s));
    case K::Const:
    case K::TypeKind:
      return t;
  }
  return t;
}

Term instantiate(const Term& body, const Term& arg) { return substitute(body, 0, arg); }

std::size_t termSize(const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Apply:
      return termSize(t.fn()) + termSize(t.arg());
    case K::Lambda:
    case K::Pi:
      return 1 + termSize(t.dom()) + termSize(t.body());
    case K::SubType:
      return 1 + termSize(t.base()) + termSize(t.pred());
    case K::SubIn:
      return 1 + termSize(t.elem()) + termSize(t.witness());
    case K::SubOut:
      return 1 + termSize(t.elem());
    default:
      return 1;
  }
}

namespace {

void collectConstants(const Term& t, std::vector<Ident>& out, std::unordered_set<Ident>& seen) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Const:
      if (seen.insert(t.ident()).second) out.push_back(t.ident());
      return;
    case K::Var:
    case K::TypeKind:
      return;
    case K::Apply:
      collectConstants(t.fn(), out, seen);
      collectConstants(t.arg(), out, seen);
      return;
    case K::Lambda:
    case K::Pi:
      collectConstants(t.dom(), out, seen);
      collectConstants(t.body(), out, seen);
      return;
    case K::SubType:
      collectConstants(t.base(), out, seen);
      collectConstants(t.pred(), out, seen);
      return;
    case K::SubIn:
      collectConstants(t.elem(), out, seen);
      collectConstants(t.witness(), out, seen);
      return;
    case K::SubOut:
      collectConstants(t.elem(), out, seen);
      return;
  }
}

}  // namespace

std::vector<Ident> constantsOf(const Term& t) {
  std::vector<Ident> out;
  std::unordered_set<Ident> seen;
  collectConstants(t, out, seen);
  return out;
}

Term mapConstants(const Term& t, const std::function<Term(const Ident&)>& f) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Const: return f(t.ident());
    case K::Apply: return Term::apply(mapConstants(t.fn(), f), mapConstants(t.arg(), f));
    case K::Lambda: return Term::lambda(t.hint(), mapConstants(t.dom(), f), mapConstants(t.body(), f));
    case K::Pi: return Term::pi(t.hint(), mapConstants(t.dom(), f), mapConstants(t.body(), f));
    case K::SubType: return Term::subType(mapConstants(t.base(), f), mapConstants(t.pred(), f));
    case K::SubIn: return Term::subIn(mapConstants(t.elem(), f), mapConstants(t.witness(), f));
    case K::SubOut: return Term::subOut(mapConstants(t.elem(), f));
    default: return t;
  }
}

}  // namespace oaf
