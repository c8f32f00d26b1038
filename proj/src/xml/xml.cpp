#include "oaf/xml.hpp"

#include <expat.h>

#include <memory>

#include "oaf/error.hpp"

namespace oaf::xml {

const std::string* Element::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes)
    if (k == key) return &v;
  return nullptr;
}

bool Element::hasText() const {
  return text.find_first_not_of(" \t\r\n") != std::string::npos;
}

namespace {

struct ParseState {
  XML_Parser parser = nullptr;
  std::vector<Element*> stack;
  Element root;
  bool haveRoot = false;
  std::string error;
};

void onStart(void* data, const XML_Char* name, const XML_Char** attrs) {
  auto* st = static_cast<ParseState*>(data);
  Element e;
  e.name = name;
  e.line = XML_GetCurrentLineNumber(st->parser);
  for (int i = 0; attrs[i]; i += 2) e.attributes.emplace_back(attrs[i], attrs[i + 1]);
  if (st->stack.empty()) {
    st->root = std::move(e);
    st->haveRoot = true;
    st->stack.push_back(&st->root);
  } else {
    Element* parent = st->stack.back();
    parent->children.push_back(std::move(e));
    st->stack.push_back(&parent->children.back());
  }
}

void onEnd(void* data, const XML_Char*) { static_cast<ParseState*>(data)->stack.pop_back(); }

void onText(void* data, const XML_Char* s, int len) {
  auto* st = static_cast<ParseState*>(data);
  if (!st->stack.empty()) st->stack.back()->text.append(s, static_cast<std::size_t>(len));
}

void onDoctype(void* data, const XML_Char*, const XML_Char*, const XML_Char*, int) {
  auto* st = static_cast<ParseState*>(data);
  st->error = "DOCTYPE declarations are not accepted";
  XML_StopParser(st->parser, XML_FALSE);
}

}  // namespace

Element parse(std::string_view bytes) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, void (*)(XML_Parser)> parser(
      XML_ParserCreate("UTF-8"), XML_ParserFree);
  ParseState st;
  st.parser = parser.get();
  XML_SetUserData(parser.get(), &st);
  XML_SetElementHandler(parser.get(), onStart, onEnd);
  XML_SetCharacterDataHandler(parser.get(), onText);
  XML_SetStartDoctypeDeclHandler(parser.get(), onDoctype);
  if (XML_Parse(parser.get(), bytes.data(), static_cast<int>(bytes.size()), XML_TRUE) ==
      XML_STATUS_ERROR) {
    std::string line = std::to_string(XML_GetCurrentLineNumber(parser.get()));
    std::string msg = st.error.empty() ? XML_ErrorString(XML_GetErrorCode(parser.get())) : st.error;
    throw Error(ErrorCode::Malformed, "XML line " + line + ": " + msg, line);
  }
  if (!st.haveRoot) throw Error(ErrorCode::Malformed, "XML document has no root element");
  return std::move(st.root);
}

void violation(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, path + ": " + what, path);
}

void checkAttributes(const Element& e, const std::string& path,
                     const std::vector<const char*>& required,
                     const std::vector<const char*>& optional) {
  for (const auto& [k, _] : e.attributes) {
    bool known = false;
    for (const char* a : required) known = known || k == a;
    for (const char* a : optional) known = known || k == a;
    if (!known) violation(path + "/@" + k, "unknown attribute");
  }
  for (const char* a : required)
    if (!e.attribute(a)) violation(path + "/@" + a, "missing attribute");
}

void checkNoText(const Element& e, const std::string& path) {
  if (e.hasText()) violation(path, "unexpected character data");
}

std::string childPath(const std::string& parent, const Element& child, std::size_t index) {
  return parent + "/" + child.name + "[" + std::to_string(index) + "]";
}

std::string escape(std::string_view raw, bool attribute) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += attribute ? "&quot;" : "\""; break;
      case '\r': out += "&#13;"; break;
      case '\n': out += attribute ? "&#10;" : "\n"; break;
      case '\t': out += attribute ? "&#9;" : "\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20)
          throw Error(ErrorCode::Malformed, "control character " +
                                                std::to_string(static_cast<int>(c)) +
                                                " cannot be written as XML");
        out += c;
    }
  }
  return out;
}

Writer::Writer() { out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"; }

void Writer::startTag(std::string_view name, const Attributes& attrs) {
  out_.append(2 * stack_.size(), ' ');
  out_ += '<';
  out_ += name;
  for (const auto& [k, v] : attrs) {
    out_ += ' ';
    out_ += k;
    out_ += "=\"";
    out_ += escape(v, true);
    out_ += '"';
  }
}

Writer& Writer::open(std::string_view name, const Attributes& attrs) {
  startTag(name, attrs);
  out_ += ">\n";
  stack_.emplace_back(name);
  return *this;
}

Writer& Writer::empty(std::string_view name, const Attributes& attrs) {
  startTag(name, attrs);
  out_ += "/>\n";
  return *this;
}

Writer& Writer::textElement(std::string_view name, const Attributes& attrs,
                            std::string_view text) {
  startTag(name, attrs);
  out_ += '>';
  out_ += escape(text, false);
  out_ += "</";
  out_ += name;
  out_ += ">\n";
  return *this;
}

Writer& Writer::close() {
  std::string name = std::move(stack_.back());
  stack_.pop_back();
  out_.append(2 * stack_.size(), ' ');
  out_ += "</" + name + ">\n";
  return *this;
}

std::string Writer::finish() {
  while (!stack_.empty()) close();
  return std::move(out_);
}

}  // namespace oaf::xml
