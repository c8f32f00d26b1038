#ifndef OAF_SYNTAX_HPP
#define OAF_SYNTAX_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "oaf/ident.hpp"
#include "oaf/term.hpp"

namespace oaf {

// Concrete term syntax:
//
//   [x:A] t        lambda
//   {x:A} B        dependent function type
//   A -> B         non-dependent function type (right associative)
//   f a b          application (left associative)
//   type           the kind of types
//   sub A P        predicate subtype of A
//   subin e p      subtype introduction
//   subout e       subtype elimination
//   <ns?mod?name>  fully qualified constant
//   #3             free variable 3 of the enclosing context, counted as if
//                  the term's own binders were absent (open terms only)
//
// A binder may appear unparenthesised as the last argument of an
// application; everything to its right belongs to its body.

struct PrintOptions {
  bool qualified = false;  // print every constant as <ns?mod?name>
};

std::string printTerm(const Term& t, const PrintOptions& opts = {});

// Maps a bare name to the constant it denotes, if any.
using NameResolver = std::function<std::optional<Ident>(std::string_view)>;

// Throws Malformed on syntax errors and UnknownIdent on unresolved names.
Term parseTerm(std::string_view text, const NameResolver& resolve);

bool isNameChar(char c);

// Local-name lookup table; a later entry shadows an earlier one.
class NameTable {
 public:
  void add(const Ident& id) { names_.insert_or_assign(id.name(), id); }
  void add(std::string local, const Ident& id) { names_.insert_or_assign(std::move(local), id); }
  std::optional<Ident> find(std::string_view local) const;
  NameResolver resolver() const {
    return [this](std::string_view n) { return find(n); };
  }

 private:
  std::map<std::string, Ident, std::less<>> names_;
};

}  // namespace oaf

#endif  // OAF_SYNTAX_HPP
