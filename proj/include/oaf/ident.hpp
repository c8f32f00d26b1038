#ifndef OAF_IDENT_HPP
#define OAF_IDENT_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace oaf {

// Global identifier `namespace?module?name`.
//
// Declarations have all three components. Theories and morphisms are
// module-level identifiers: their `name` is empty and they render as
// `namespace?module`. A declaration's module-level parent is the theory that
// declares it.
class Ident {
 public:
  static constexpr char kSeparator = '?';

  Ident(std::string ns, std::string module, std::string name);

  static Ident module(std::string ns, std::string module);
  // Accepts both `ns?module` and `ns?module?name`. Throws Malformed.
  static Ident parse(std::string_view text);

  const std::string& ns() const { return ns_; }
  const std::string& moduleName() const { return module_; }
  const std::string& name() const { return name_; }

  bool isModule() const { return name_.empty(); }
  Ident modulePath() const { return Ident::module(ns_, module_); }
  Ident child(std::string name) const { return Ident(ns_, module_, std::move(name)); }

  std::string str() const;

  friend auto operator<=>(const Ident&, const Ident&) = default;
  friend bool operator==(const Ident&, const Ident&) = default;

 private:
  struct Unchecked {};
  Ident(Unchecked, std::string ns, std::string module, std::string name)
      : ns_(std::move(ns)), module_(std::move(module)), name_(std::move(name)) {}

  std::string ns_;
  std::string module_;
  std::string name_;
};

}  // namespace oaf

template <>
struct std::hash<oaf::Ident> {
  std::size_t operator()(const oaf::Ident& id) const noexcept {
    std::size_t h = std::hash<std::string>{}(id.ns());
    h = h * 31 + std::hash<std::string>{}(id.moduleName());
    return h * 31 + std::hash<std::string>{}(id.name());
  }
};

#endif  // OAF_IDENT_HPP
