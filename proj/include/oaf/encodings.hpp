#ifndef OAF_ENCODINGS_HPP
#define OAF_ENCODINGS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "oaf/library.hpp"

namespace oaf {

enum class LogicId { HolChurch, DttCurry, FolSoft, HolCurry };

// Namespace shared by the built-in logic encodings.
inline constexpr const char* kLogicNamespace = "http://oaf.example.org/logics";

Ident logicIdent(LogicId logic);

// Church-style higher-order logic: object types are LF terms of `tp`, object
// terms of type A are LF terms of `tm A`. Applications and abstractions record
// their argument and result types.
Theory holChurch();

// Curry-style dependent type theory: one LF type `expr` of object terms with
// a separate typing judgment `of`. `tmOf A` is the predicate subtype of expr
// cut out by `of _ A`, so constants can still be declared at their types.
// Requires the predicate-subtype extension.
Theory dttCurry();

// Untyped first-order logic over sets with propositions as a separate LF
// type; predicates `set -> prop` serve as schematic binders.
Theory folSoft();

// HOL connectives over dttCurry's `expr`, untyped in Curry style. Only used
// as the target of the Curry rendering that size comparisons run against.
Theory holCurry();

Theory logicTheory(LogicId logic);
std::vector<Theory> builtinLogics();

// Constants of a logic, by local name.
Term logicConst(LogicId logic, const std::string& local);

struct SizeRatio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const SizeRatio&, const SizeRatio&) = default;
};

// Total term size (see termSize) over every declaration of the library's
// own theories.
std::size_t librarySize(const Library& lib);

// Church-encoded size over Curry-encoded size, reduced. Throws EmptyCorpus
// when either side has no terms.
SizeRatio churchCurrySizeRatio(const Library& church, const Library& curry);

// Curry rendering of a holChurch term over dttCurry and holCurry: object
// types become `expr` terms, the type arguments of `app`, of `lam`'s result
// and of `eq` are dropped, `tm A` becomes `tmOf A`. Other constants are kept.
// The result is not meant to type-check (membership witnesses are not
// produced); it exists to compare sizes.
Term curryRender(const Term& church);

// Every theory re-rendered with holCurry as meta-theory.
Library curryRendering(const Library& church);

// Markdown listing of every constant of every built-in logic with its type in
// the concrete term syntax.
std::string encodingCatalog();

}  // namespace oaf

#endif  // OAF_ENCODINGS_HPP
