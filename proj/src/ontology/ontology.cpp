#include "oaf/ontology.hpp"

#include <cctype>
#include <deque>
#include <functional>

#include "oaf/error.hpp"
#include "oaf/kernel.hpp"

namespace oaf::ontology {

namespace {

bool keepInIri(unsigned char c) {
  if (std::isalnum(c)) return true;
  switch (c) {
    case '-': case '.': case '_': case '~': case ':': case '/': case '@': case '!':
    case '$': case '&': case '\'': case '(': case ')': case '*': case '+': case ',':
    case ';': case '=': case '#':
      return true;
    default: return false;
  }
}

std::string encode(std::string_view s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (c < 0x80 && keepInIri(c)) {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 15];
    }
  }
  return out;
}

int hexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string decode(std::string_view s, std::string_view whole) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '%') {
      out += s[i];
      continue;
    }
    int hi = i + 1 < s.size() ? hexValue(s[i + 1]) : -1;
    int lo = i + 2 < s.size() ? hexValue(s[i + 2]) : -1;
    if (hi < 0 || lo < 0)
      throw Error(ErrorCode::Malformed, "bad percent escape in " + std::string(whole));
    out += static_cast<char>(hi * 16 + lo);
    i += 2;
  }
  return out;
}

const std::vector<std::size_t> kNone;

std::string kindIri(DeclKind k) { return ulo(declKindName(k)); }

void edges(const TripleStore& store, const std::string& node, bool forward,
           const std::function<void(const std::string&)>& visit) {
  static const std::string uses = ulo(kUses), justified = ulo(kJustifiedBy);
  const auto& idx = forward ? store.bySubject(node) : store.byObject(node);
  for (std::size_t i : idx) {
    const RdfTriple& t = store.triples()[i];
    if (t.literal || (t.predicate != uses && t.predicate != justified)) continue;
    visit(forward ? t.object : t.subject);
  }
}

void requirePresent(const TripleStore& store, const std::string& node, const Ident& id) {
  if (store.bySubject(node).empty() && store.byObject(node).empty())
    throw Error(ErrorCode::UnknownIdent, "no triple mentions " + id.str(), id.str());
}

// Closure over uses/justifiedBy in the given direction, start included.
std::set<std::string> reach(const TripleStore& store, const std::string& start, bool forward) {
  std::set<std::string> seen{start};
  std::deque<std::string> queue{start};
  while (!queue.empty()) {
    std::string n = std::move(queue.front());
    queue.pop_front();
    edges(store, n, forward, [&](const std::string& next) {
      if (seen.insert(next).second) queue.push_back(next);
    });
  }
  return seen;
}

}  // namespace

std::string ulo(std::string_view local) { return std::string(kUloBase) + std::string(local); }

std::string iri(const Ident& id) {
  std::string out = encode(id.ns()) + Ident::kSeparator + encode(id.moduleName());
  if (!id.isModule()) out += Ident::kSeparator + encode(id.name());
  return out;
}

Ident identOfIri(std::string_view text) {
  auto first = text.find(Ident::kSeparator);
  if (first == std::string_view::npos)
    throw Error(ErrorCode::Malformed, "not an identifier IRI: " + std::string(text));
  auto second = text.find(Ident::kSeparator, first + 1);
  std::string ns = decode(text.substr(0, first), text);
  if (second == std::string_view::npos)
    return Ident::module(ns, decode(text.substr(first + 1), text));
  return Ident(ns, decode(text.substr(first + 1, second - first - 1), text),
               decode(text.substr(second + 1), text));
}

bool TripleStore::insert(RdfTriple t) {
  if (!set_.insert(t).second) return false;
  std::size_t pos = triples_.size();
  subjects_[t.subject].push_back(pos);
  if (!t.literal) objects_[t.object].push_back(pos);
  triples_.push_back(std::move(t));
  return true;
}

const std::vector<std::size_t>& TripleStore::bySubject(const std::string& subject) const {
  auto it = subjects_.find(subject);
  return it == subjects_.end() ? kNone : it->second;
}

const std::vector<std::size_t>& TripleStore::byObject(const std::string& object) const {
  auto it = objects_.find(object);
  return it == objects_.end() ? kNone : it->second;
}

TripleStore extractTriples(const Library& lib, const ExtractOptions& opts) {
  TripleStore store;
  auto add = [&](const std::string& s, const char* p, std::string o, bool literal = false) {
    store.insert({s, ulo(p), std::move(o), literal});
  };
  for (const Theory& th : lib.theories) {
    std::string t = iri(th.name);
    for (const Declaration& d : th.decls) add(t, kDeclares, iri(d.name));
    for (const Ident& inc : th.includes) add(t, kIncludes, iri(inc));
    if (th.metaTheory) add(t, kMetaTheory, iri(*th.metaTheory));
    std::string status = "unchecked";
    if (opts.check) status = checkTheory(lib, th.name).ok() ? "checked" : "check-failed";
    add(t, kCheckStatus, status, true);

    for (const Declaration& d : th.decls) {
      std::string s = iri(d.name);
      add(s, kKind, kindIri(d.meta.kind));
      if (d.meta.sourceRef) add(s, kSourceFile, d.meta.sourceRef->file, true);
      auto uses = [&](const Term& term) {
        for (const Ident& c : constantsOf(term)) add(s, kUses, iri(c));
      };
      if (d.type) uses(*d.type);
      if (d.definiens) uses(*d.definiens);
      if (d.proof) {
        if (const auto* deps = std::get_if<DependsOnProof>(&*d.proof))
          for (const Ident& id : deps->ids) add(s, kJustifiedBy, iri(id));
        if (const auto* pt = std::get_if<TermProof>(&*d.proof); pt && opts.includeProofUses)
          uses(pt->term);
      }
    }
  }
  return store;
}

std::set<Ident> transitiveUses(const TripleStore& store, const Ident& id) {
  std::string start = iri(id);
  requirePresent(store, start, id);
  std::set<Ident> out;
  for (const std::string& n : reach(store, start, true)) out.insert(identOfIri(n));
  return out;
}

std::set<Ident> usedBy(const TripleStore& store, const Ident& target,
                       std::optional<DeclKind> kindFilter) {
  std::string start = iri(target);
  requirePresent(store, start, target);
  std::set<std::string> users = reach(store, start, false);
  users.erase(start);
  std::set<Ident> out;
  for (const std::string& u : users) {
    if (kindFilter && !store.contains({u, ulo(kKind), kindIri(*kindFilter), false})) continue;
    out.insert(identOfIri(u));
  }
  return out;
}

namespace {

void escapeLiteral(std::string& out, std::string_view s) {
  static const char* hex = "0123456789ABCDEF";
  for (unsigned char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          out += "\\u00";
          out += hex[c >> 4];
          out += hex[c & 15];
        } else {
          out += static_cast<char>(c);
        }
    }
  }
}

void writeIri(std::string& out, std::string_view s) {
  for (unsigned char c : s)
    if (c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
        c == '^' || c == '`' || c == '\\')
      throw Error(ErrorCode::Malformed, "character not allowed in IRI: " + std::string(s));
  if (s.find(':') == std::string_view::npos)
    throw Error(ErrorCode::Malformed, "IRI is not absolute: " + std::string(s));
  out += '<';
  out += s;
  out += '>';
}

void appendUtf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class LineReader {
 public:
  LineReader(std::string_view line, std::size_t number) : s_(line), number_(number) {}

  RdfTriple triple() {
    RdfTriple t;
    t.subject = iriRef();
    t.predicate = iriRef();
    blanks();
    if (peek() == '"') {
      t.object = literal();
      t.literal = true;
    } else {
      t.object = iriRef();
    }
    blanks();
    if (peek() != '.') fail("expected '.' after object");
    ++pos_;
    blanks();
    if (pos_ < s_.size() && s_[pos_] != '#') fail("trailing characters");
    return t;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void blanks() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Malformed,
                "N-Triples line " + std::to_string(number_) + ": " + what,
                std::to_string(number_));
  }

  std::uint32_t hexDigits(int n) {
    if (pos_ + n > s_.size()) fail("truncated escape");
    std::uint32_t v = 0;
    for (int i = 0; i < n; ++i) {
      int h = hexValue(s_[pos_++]);
      if (h < 0) fail("bad hex digit in escape");
      v = v * 16 + static_cast<std::uint32_t>(h);
    }
    if (v > 0x10FFFF || (v >= 0xD800 && v <= 0xDFFF)) fail("escape is not a code point");
    return v;
  }

  void uchar(std::string& out) {
    char k = peek();
    ++pos_;
    if (k == 'u') appendUtf8(out, hexDigits(4));
    else if (k == 'U') appendUtf8(out, hexDigits(8));
    else fail("bad escape");
  }

  std::string iriRef() {
    blanks();
    if (peek() != '<') fail("expected IRI");
    ++pos_;
    std::string out;
    while (true) {
      if (pos_ >= s_.size()) fail("unterminated IRI");
      unsigned char c = static_cast<unsigned char>(s_[pos_++]);
      if (c == '>') break;
      if (c == '\\') {
        uchar(out);
        continue;
      }
      if (c <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
          c == '`')
        fail("character not allowed in IRI");
      out += static_cast<char>(c);
    }
    if (out.find(':') == std::string::npos) fail("IRI is not absolute");
    return out;
  }

  std::string literal() {
    ++pos_;
    std::string out;
    while (true) {
      if (pos_ >= s_.size()) fail("unterminated literal");
      char c = s_[pos_++];
      if (c == '"') break;
      if (c == '\n' || c == '\r') fail("raw line break in literal");
      if (c != '\\') {
        out += c;
        continue;
      }
      switch (char k = peek()) {
        case 't': out += '\t'; ++pos_; break;
        case 'b': out += '\b'; ++pos_; break;
        case 'n': out += '\n'; ++pos_; break;
        case 'r': out += '\r'; ++pos_; break;
        case 'f': out += '\f'; ++pos_; break;
        case '"': out += '"'; ++pos_; break;
        case '\'': out += '\''; ++pos_; break;
        case '\\': out += '\\'; ++pos_; break;
        default:
          if (k == 'u' || k == 'U') uchar(out);
          else fail("bad escape");
      }
    }
    if (peek() == '@' || peek() == '^') fail("language tags and datatypes are not supported");
    return out;
  }

  std::string_view s_;
  std::size_t number_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string writeNTriples(const TripleStore& store) {
  std::string out;
  for (const RdfTriple& t : store.triples()) {
    writeIri(out, t.subject);
    out += ' ';
    writeIri(out, t.predicate);
    out += ' ';
    if (t.literal) {
      out += '"';
      escapeLiteral(out, t.object);
      out += '"';
    } else {
      writeIri(out, t.object);
    }
    out += " .\n";
  }
  return out;
}

TripleStore readNTriples(std::string_view bytes) {
  TripleStore store;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start < bytes.size()) {
    std::size_t end = bytes.find('\n', start);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(start, end - start);
    start = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    store.insert(LineReader(line, number).triple());
  }
  return store;
}

}  // namespace oaf::ontology
