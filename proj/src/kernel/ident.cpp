#include "oaf/ident.hpp"

#include "oaf/error.hpp"

namespace oaf {

namespace {

void requireComponent(const std::string& value, const char* what, bool allowEmpty) {
  if (value.empty() && !allowEmpty)
    throw Error(ErrorCode::Malformed, std::string("identifier ") + what + " is empty");
  if (value.find(Ident::kSeparator) != std::string::npos)
    throw Error(ErrorCode::Malformed,
                std::string("identifier ") + what + " contains '?': " + value);
}

}  // namespace

Ident::Ident(std::string ns, std::string module, std::string name)
    : ns_(std::move(ns)), module_(std::move(module)), name_(std::move(name)) {
  requireComponent(ns_, "namespace", false);
  requireComponent(module_, "module", false);
  requireComponent(name_, "name", true);
}

Ident Ident::module(std::string ns, std::string module) {
  return Ident(std::move(ns), std::move(module), std::string());
}

Ident Ident::parse(std::string_view text) {
  auto first = text.find(kSeparator);
  if (first == std::string_view::npos)
    throw Error(ErrorCode::Malformed, "identifier lacks '?': " + std::string(text));
  auto second = text.find(kSeparator, first + 1);
  std::string ns(text.substr(0, first));
  if (second == std::string_view::npos)
    return Ident::module(ns, std::string(text.substr(first + 1)));
  std::string name(text.substr(second + 1));
  if (name.empty())
    throw Error(ErrorCode::Malformed, "identifier has empty name: " + std::string(text));
  return Ident(ns, std::string(text.substr(first + 1, second - first - 1)), name);
}

std::string Ident::str() const {
  std::string out = ns_ + kSeparator + module_;
  if (!name_.empty()) out += kSeparator + name_;
  return out;
}

}  // namespace oaf
