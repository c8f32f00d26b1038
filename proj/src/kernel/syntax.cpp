#include "oaf/syntax.hpp"

#include <cctype>
#include <set>
#include <vector>

#include "oaf/error.hpp"

namespace oaf {

namespace {

const std::set<std::string, std::less<>> kKeywords{"type", "sub", "subin", "subout"};

bool isPlainName(std::string_view s) {
  if (s.empty() || kKeywords.count(s)) return false;
  for (char c : s)
    if (!isNameChar(c)) return false;
  return true;
}

class Printer {
 public:
  Printer(const Term& root, const PrintOptions& opts) : opts_(opts) {
    for (const Ident& id : constantsOf(root)) taken_.insert(id.name());
  }

  void print(const Term& t, int prec) {
    using K = Term::Kind;
    switch (t.kind()) {
      case K::Const:
        if (!opts_.qualified && isPlainName(t.ident().name()))
          out_ += t.ident().name();
        else
          out_ += "<" + t.ident().str() + ">";
        return;
      case K::Var:
        if (t.index() < names_.size())
          out_ += names_[names_.size() - 1 - t.index()];
        else
          out_ += "#" + std::to_string(t.index() - names_.size());
        return;
      case K::TypeKind:
        out_ += "type";
        return;
      case K::Apply: {
        open(prec >= 2);
        print(t.head(), 2);
        for (const Term& a : t.spineArgs()) {
          out_ += ' ';
          print(a, 2);
        }
        close(prec >= 2);
        return;
      }
      case K::Pi:
        if (!t.body().mentionsVar(0)) {
          open(prec >= 1);
          print(t.dom(), 1);
          out_ += " -> ";
          names_.push_back("_");
          print(t.body(), 0);
          names_.pop_back();
          close(prec >= 1);
          return;
        }
        [[fallthrough]];
      case K::Lambda: {
        open(prec >= 1);
        bool lambda = t.is(K::Lambda);
        std::string name = fresh(t.hint());
        out_ += lambda ? "[" : "{";
        out_ += name + ":";
        print(t.dom(), 0);
        out_ += lambda ? "] " : "} ";
        names_.push_back(name);
        print(t.body(), 0);
        names_.pop_back();
        close(prec >= 1);
        return;
      }
      case K::SubType:
        prefixed("sub", {&t.base(), &t.pred()}, prec);
        return;
      case K::SubIn:
        prefixed("subin", {&t.elem(), &t.witness()}, prec);
        return;
      case K::SubOut:
        prefixed("subout", {&t.elem()}, prec);
        return;
    }
  }

  std::string result() && { return std::move(out_); }

 private:
  void prefixed(const char* keyword, std::initializer_list<const Term*> parts, int prec) {
    open(prec >= 2);
    out_ += keyword;
    for (const Term* p : parts) {
      out_ += ' ';
      print(*p, 2);
    }
    close(prec >= 2);
  }

  void open(bool parens) {
    if (parens) out_ += '(';
  }
  void close(bool parens) {
    if (parens) out_ += ')';
  }

  bool inScope(const std::string& n) const {
    for (const std::string& s : names_)
      if (s == n) return true;
    return false;
  }

  std::string fresh(const std::string& hint) {
    std::string base = isPlainName(hint) && hint != "_" ? hint : "x";
    std::string name = base;
    for (int i = 1; inScope(name) || taken_.count(name) || kKeywords.count(name); ++i)
      name = base + std::to_string(i);
    return name;
  }

  const PrintOptions& opts_;
  std::set<std::string> taken_;
  std::vector<std::string> names_;
  std::string out_;
};

enum class Tok { Name, Index, Qualified, LParen, RParen, LBracket, RBracket, LBrace, RBrace,
                 Colon, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::Malformed, msg + " at offset " + std::to_string(i),
                std::to_string(i));
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", start}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", start}); ++i; continue;
      case '[': out.push_back({Tok::LBracket, "[", start}); ++i; continue;
      case ']': out.push_back({Tok::RBracket, "]", start}); ++i; continue;
      case '{': out.push_back({Tok::LBrace, "{", start}); ++i; continue;
      case '}': out.push_back({Tok::RBrace, "}", start}); ++i; continue;
      case ':': out.push_back({Tok::Colon, ":", start}); ++i; continue;
      default: break;
    }
    if (c == '-') {
      if (i + 1 < s.size() && s[i + 1] == '>') {
        out.push_back({Tok::Arrow, "->", start});
        i += 2;
        continue;
      }
      fail("stray '-'");
    }
    if (c == '<') {
      std::size_t end = s.find('>', i);
      if (end == std::string_view::npos) fail("unterminated qualified name");
      out.push_back({Tok::Qualified, std::string(s.substr(i + 1, end - i - 1)), start});
      i = end + 1;
      continue;
    }
    if (c == '#') {
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start + 1) fail("'#' without index");
      out.push_back({Tok::Index, std::string(s.substr(start + 1, i - start - 1)), start});
      continue;
    }
    if (isNameChar(c)) {
      while (i < s.size() && isNameChar(s[i])) ++i;
      out.push_back({Tok::Name, std::string(s.substr(start, i - start)), start});
      continue;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const NameResolver& resolve)
      : tokens_(tokenize(text)), resolve_(resolve) {}

  Term parseAll() {
    Term t = term();
    if (peek().kind != Tok::End) fail("trailing input '" + peek().text + "'");
    return t;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Malformed, msg + " at offset " + std::to_string(peek().pos),
                std::to_string(peek().pos));
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++pos_;
  }

  bool startsBinder() const {
    return peek().kind == Tok::LBracket || peek().kind == Tok::LBrace;
  }

  bool startsAtom() const {
    switch (peek().kind) {
      case Tok::Name:
      case Tok::Index:
      case Tok::Qualified:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  Term term() {
    if (startsBinder()) return binder();
    Term lhs = application();
    if (peek().kind == Tok::Arrow) {
      ++pos_;
      names_.push_back("");  // the arrow's anonymous binder
      Term rhs = term();
      names_.pop_back();
      return Term::pi("_", lhs, rhs);
    }
    return lhs;
  }

  Term binder() {
    bool lambda = next().kind == Tok::LBracket;
    if (peek().kind != Tok::Name) fail("expected binder name");
    std::string name = next().text;
    expect(Tok::Colon, "':'");
    Term dom = term();
    expect(lambda ? Tok::RBracket : Tok::RBrace, lambda ? "']'" : "'}'");
    names_.push_back(name);
    Term body = term();
    names_.pop_back();
    return lambda ? Term::lambda(name, dom, body) : Term::pi(name, dom, body);
  }

  Term application() {
    Term head = headTerm();
    while (startsAtom() || startsBinder()) {
      if (startsBinder()) return Term::apply(head, binder());
      head = Term::apply(head, atom());
    }
    return head;
  }

  Term headTerm() {
    if (peek().kind == Tok::Name) {
      const std::string& kw = peek().text;
      if (kw == "sub" || kw == "subin") {
        ++pos_;
        Term a = atom();
        Term b = atom();
        return kw == "sub" ? Term::subType(a, b) : Term::subIn(a, b);
      }
      if (kw == "subout") {
        ++pos_;
        return Term::subOut(atom());
      }
    }
    if (!startsAtom()) fail("expected a term");
    return atom();
  }

  Term atom() {
    Token tok = next();
    switch (tok.kind) {
      case Tok::LParen: {
        Term t = term();
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::Index:
        return Term::var(static_cast<std::uint32_t>(std::stoul(tok.text) + names_.size()));
      case Tok::Qualified:
        return Term::constant(Ident::parse(tok.text));
      case Tok::Name: {
        if (tok.text == "type") return Term::type();
        if (kKeywords.count(tok.text)) {
          --pos_;
          fail("'" + tok.text + "' must be parenthesised in argument position");
        }
        for (std::size_t i = names_.size(); i-- > 0;)
          if (names_[i] == tok.text)
            return Term::var(static_cast<std::uint32_t>(names_.size() - 1 - i));
        if (auto id = resolve_(tok.text)) return Term::constant(*id);
        throw Error(ErrorCode::UnknownIdent, "unknown name '" + tok.text + "'", tok.text);
      }
      default:
        --pos_;
        fail("expected a term");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const NameResolver& resolve_;
  std::vector<std::string> names_;
};

}  // namespace

bool isNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '/' ||
         c == '.';
}

std::optional<Ident> NameTable::find(std::string_view local) const {
  auto it = names_.find(local);
  if (it == names_.end()) return std::nullopt;
  return it->second;
}

std::string printTerm(const Term& t, const PrintOptions& opts) {
  Printer p(t, opts);
  p.print(t, 0);
  return std::move(p).result();
}

Term parseTerm(std::string_view text, const NameResolver& resolve) {
  return Parser(text, resolve).parseAll();
}

}  // namespace oaf
