#ifndef OAF_XML_HPP
#define OAF_XML_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oaf::xml {

using Attributes = std::vector<std::pair<std::string, std::string>>;

// Element tree with attributes in document order. `text` is the character
// data directly inside the element, concatenated.
struct Element {
  std::string name;
  Attributes attributes;
  std::vector<Element> children;
  std::string text;
  std::size_t line = 0;

  const std::string* attribute(std::string_view key) const;
  bool hasText() const;  // any non-whitespace character data
};

// Parses a complete document and returns its root. DOCTYPE declarations are
// refused. Throws Malformed with the line number in the message.
Element parse(std::string_view bytes);

// Schema-checking helpers. Paths look like `/root/child[2]/@attr`; every
// failure is a SchemaViolation carrying the path as detail.
[[noreturn]] void violation(const std::string& path, const std::string& what);
void checkAttributes(const Element& e, const std::string& path,
                     const std::vector<const char*>& required,
                     const std::vector<const char*>& optional = {});
void checkNoText(const Element& e, const std::string& path);
std::string childPath(const std::string& parent, const Element& child, std::size_t index);

// Escapes for element content or attribute values. Characters XML 1.0 cannot
// carry at all raise Malformed.
std::string escape(std::string_view raw, bool attribute);

// Indented writer: two spaces per level, `\n` line ends, attributes in the
// order given.
class Writer {
 public:
  Writer();

  Writer& open(std::string_view name, const Attributes& attrs = {});
  Writer& empty(std::string_view name, const Attributes& attrs = {});
  Writer& textElement(std::string_view name, const Attributes& attrs, std::string_view text);
  Writer& close();

  std::string finish();

 private:
  void startTag(std::string_view name, const Attributes& attrs);

  std::string out_;
  std::vector<std::string> stack_;
};

}  // namespace oaf::xml

#endif  // OAF_XML_HPP
