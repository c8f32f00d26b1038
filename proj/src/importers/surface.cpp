#include <cctype>

#include "oaf/importers.hpp"

namespace oaf {

struct SurfaceType::Node {
  Kind kind;
  std::string name;
  int meta = 0;
  std::optional<SurfaceType> from, to;
};

SurfaceType SurfaceType::base(std::string name) {
  return SurfaceType(std::make_shared<const Node>(Node{Kind::Base, std::move(name), 0, {}, {}}));
}

SurfaceType SurfaceType::arrow(SurfaceType from, SurfaceType to) {
  return SurfaceType(
      std::make_shared<const Node>(Node{Kind::Arrow, {}, 0, std::move(from), std::move(to)}));
}

SurfaceType SurfaceType::meta(int id) {
  return SurfaceType(std::make_shared<const Node>(Node{Kind::Meta, {}, id, {}, {}}));
}

SurfaceType::Kind SurfaceType::kind() const { return node_->kind; }
const std::string& SurfaceType::name() const { return node_->name; }
const SurfaceType& SurfaceType::from() const { return *node_->from; }
const SurfaceType& SurfaceType::to() const { return *node_->to; }
int SurfaceType::metaId() const { return node_->meta; }

bool SurfaceType::hasMeta() const {
  switch (kind()) {
    case Kind::Meta: return true;
    case Kind::Base: return false;
    case Kind::Arrow: return from().hasMeta() || to().hasMeta();
  }
  return false;
}

bool operator==(const SurfaceType& a, const SurfaceType& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case SurfaceType::Kind::Base: return a.name() == b.name();
    case SurfaceType::Kind::Meta: return a.metaId() == b.metaId();
    case SurfaceType::Kind::Arrow: return a.from() == b.from() && a.to() == b.to();
  }
  return false;
}

struct SurfaceTerm::Node {
  Kind kind;
  std::string name;
  std::optional<SurfaceType> annot;
  std::optional<SurfaceTerm> first, second;
};

SurfaceTerm SurfaceTerm::name(std::string n) {
  return SurfaceTerm(std::make_shared<const Node>(Node{Kind::Name, std::move(n), {}, {}, {}}));
}

SurfaceTerm SurfaceTerm::app(SurfaceTerm fn, SurfaceTerm arg) {
  return SurfaceTerm(
      std::make_shared<const Node>(Node{Kind::App, {}, {}, std::move(fn), std::move(arg)}));
}

SurfaceTerm SurfaceTerm::abs(std::string var, std::optional<SurfaceType> annot, SurfaceTerm body) {
  return SurfaceTerm(std::make_shared<const Node>(
      Node{Kind::Abs, std::move(var), std::move(annot), std::move(body), {}}));
}

SurfaceTerm SurfaceTerm::forall(std::string var, std::optional<SurfaceType> annot,
                                SurfaceTerm body) {
  return SurfaceTerm(std::make_shared<const Node>(
      Node{Kind::Binder, std::move(var), std::move(annot), std::move(body), {}}));
}

SurfaceTerm SurfaceTerm::implies(SurfaceTerm p, SurfaceTerm q) {
  return app(app(name(kImpliesName), std::move(p)), std::move(q));
}

SurfaceTerm SurfaceTerm::equals(SurfaceTerm a, SurfaceTerm b) {
  return app(app(name(kEqualsName), std::move(a)), std::move(b));
}

SurfaceTerm::Kind SurfaceTerm::kind() const { return node_->kind; }
const std::string& SurfaceTerm::name() const { return node_->name; }
const SurfaceTerm& SurfaceTerm::fn() const { return *node_->first; }
const SurfaceTerm& SurfaceTerm::arg() const { return *node_->second; }
const std::optional<SurfaceType>& SurfaceTerm::annot() const { return node_->annot; }
const SurfaceTerm& SurfaceTerm::body() const { return *node_->first; }

bool operator==(const SurfaceTerm& a, const SurfaceTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case SurfaceTerm::Kind::Name: return a.name() == b.name();
    case SurfaceTerm::Kind::App: return a.fn() == b.fn() && a.arg() == b.arg();
    case SurfaceTerm::Kind::Abs:
    case SurfaceTerm::Kind::Binder:
      return a.name() == b.name() && a.annot() == b.annot() && a.body() == b.body();
  }
  return false;
}

namespace {

bool isNameStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isNameRest(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Binary connective `op` applied to exactly two arguments.
bool isInfix(const SurfaceTerm& t, const char* op) {
  return t.kind() == SurfaceTerm::Kind::App && t.fn().kind() == SurfaceTerm::Kind::App &&
         t.fn().fn().kind() == SurfaceTerm::Kind::Name && t.fn().fn().name() == op;
}

void printType(const SurfaceType& t, bool atom, std::string& out) {
  switch (t.kind()) {
    case SurfaceType::Kind::Base: out += t.name(); return;
    case SurfaceType::Kind::Meta: out += "?" + std::to_string(t.metaId()); return;
    case SurfaceType::Kind::Arrow:
      if (atom) out += '(';
      printType(t.from(), true, out);
      out += " -> ";
      printType(t.to(), false, out);
      if (atom) out += ')';
      return;
  }
}

// Precedence levels: 0 binder, 1 implication, 2 equality, 3 application,
// 4 atom.
void print(const SurfaceTerm& t, int prec, std::string& out) {
  auto wrap = [&](int level, auto&& body) {
    bool paren = prec > level;
    if (paren) out += '(';
    body();
    if (paren) out += ')';
  };
  switch (t.kind()) {
    case SurfaceTerm::Kind::Name:
      if (t.name() == kImpliesName || t.name() == kEqualsName)
        out += "(" + t.name() + ")";
      else
        out += t.name();
      return;
    case SurfaceTerm::Kind::Abs:
    case SurfaceTerm::Kind::Binder:
      wrap(0, [&] {
        out += t.kind() == SurfaceTerm::Kind::Abs ? "\\" : "!";
        out += t.name();
        if (t.annot()) {
          out += ':';
          printType(*t.annot(), false, out);
        }
        out += ". ";
        print(t.body(), 0, out);
      });
      return;
    case SurfaceTerm::Kind::App:
      if (isInfix(t, kImpliesName)) {
        wrap(1, [&] {
          print(t.fn().arg(), 2, out);
          out += " ==> ";
          print(t.arg(), 1, out);
        });
      } else if (isInfix(t, kEqualsName)) {
        wrap(2, [&] {
          print(t.fn().arg(), 3, out);
          out += " = ";
          print(t.arg(), 3, out);
        });
      } else {
        wrap(3, [&] {
          print(t.fn(), 3, out);
          out += ' ';
          print(t.arg(), 4, out);
        });
      }
      return;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  SurfaceTerm term() {
    skip();
    if (peek('\\') || peek('!')) {
      bool lambda = s_[i_] == '\\';
      ++i_;
      std::string var = name("bound variable");
      std::optional<SurfaceType> annot;
      skip();
      if (peek(':')) {
        ++i_;
        annot = type();
      }
      expect(".");
      SurfaceTerm body = term();
      return lambda ? SurfaceTerm::abs(var, annot, body) : SurfaceTerm::forall(var, annot, body);
    }
    SurfaceTerm lhs = equation();
    skip();
    if (accept("==>")) return SurfaceTerm::implies(lhs, term());
    return lhs;
  }

  SurfaceType type() {
    SurfaceType lhs = typeAtom();
    skip();
    if (accept("->")) return SurfaceType::arrow(lhs, type());
    return lhs;
  }

  void end() {
    skip();
    if (i_ != s_.size()) fail("unexpected trailing input");
  }

 private:
  SurfaceTerm equation() {
    SurfaceTerm lhs = application();
    skip();
    if (i_ < s_.size() && s_[i_] == '=' && !startsWith("==>")) {
      ++i_;
      return SurfaceTerm::equals(lhs, application());
    }
    return lhs;
  }

  SurfaceTerm application() {
    SurfaceTerm t = atom();
    for (;;) {
      skip();
      if (i_ >= s_.size() || !(isNameStart(s_[i_]) || s_[i_] == '(')) return t;
      t = SurfaceTerm::app(t, atom());
    }
  }

  SurfaceTerm atom() {
    skip();
    if (accept("(")) {
      skip();
      for (const char* op : {kImpliesName, kEqualsName})
        if (startsWith(op) && rest(op).starts_with(")")) {
          i_ += std::string_view(op).size();
          expect(")");
          return SurfaceTerm::name(op);
        }
      SurfaceTerm t = term();
      expect(")");
      return t;
    }
    return SurfaceTerm::name(name("term"));
  }

  SurfaceType typeAtom() {
    skip();
    if (accept("(")) {
      SurfaceType t = type();
      expect(")");
      return t;
    }
    return SurfaceType::base(name("type"));
  }

  std::string name(const char* what) {
    skip();
    if (i_ >= s_.size() || !isNameStart(s_[i_])) fail(std::string("expected ") + what);
    std::size_t start = i_;
    while (i_ < s_.size() && isNameRest(s_[i_])) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) const { return i_ < s_.size() && s_[i_] == c; }
  std::string_view rest(std::string_view op) const {
    std::size_t j = i_ + op.size();
    while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
    return s_.substr(j);
  }
  bool startsWith(std::string_view tok) const { return s_.substr(i_).starts_with(tok); }
  bool accept(std::string_view tok) {
    if (!startsWith(tok)) return false;
    i_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    skip();
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Malformed,
                msg + " at offset " + std::to_string(i_) + " in \"" + std::string(s_) + "\"",
                std::to_string(i_));
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

std::string printSurfaceType(const SurfaceType& t) {
  std::string out;
  printType(t, false, out);
  return out;
}

std::string printSurfaceTerm(const SurfaceTerm& t) {
  std::string out;
  print(t, 0, out);
  return out;
}

SurfaceType parseSurfaceType(std::string_view text) {
  Parser p(text);
  SurfaceType t = p.type();
  p.end();
  return t;
}

SurfaceTerm parseSurfaceTerm(std::string_view text) {
  Parser p(text);
  SurfaceTerm t = p.term();
  p.end();
  return t;
}

bool isSurfaceName(std::string_view s) {
  if (s.empty() || !isNameStart(s[0])) return false;
  for (char c : s)
    if (!isNameRest(c)) return false;
  return true;
}

}  // namespace oaf
