#ifndef OAF_OMDOC_HPP
#define OAF_OMDOC_HPP

#include <string>
#include <string_view>
#include <vector>

#include "oaf/library.hpp"

namespace oaf::omdoc {

inline constexpr const char* kVersion = "1";

// Vocabulary:
//
//   omdoc(version, namespace)
//     theory(name, meta?)
//       include(from)
//       constant(name, kind)
//         type > term | definition > term
//         proof(style = omitted | dependsOn > ref(name)* | term > term)
//         metadata > srcref(file, sl, sc, el, ec)? comment* notation? origin(instance, pattern)?
//     morphism(name, from, to) > assignment(name) > term
//
//   term = OMS(name) | OMV(index, hint) | OMA > term term+
//        | OMBIND(binder = lambda | pi, var) > term term
//        | OMBIND(binder = sub) > term term | OMBIND(binder = subin) > term term
//        | OMBIND(binder = subout) > term | OMBIND(binder = type)
//
// Identifiers are written in full except constant names, which are local to
// their theory.

// Throws DanglingIdent when a referenced identifier resolves nowhere in the
// library (its dependencies and the framework included).
std::string serialize(const Library& lib);

// Inverse of serialize. The builtin logics are attached as dependencies.
// Throws Malformed, SchemaViolation (detail: element path such as
// `/omdoc/theory[0]/constannt[2]`), UnsupportedVersion.
Library parse(std::string_view bytes);

// Identifiers the library refers to but does not provide, in first-reference
// order.
std::vector<Ident> danglingIdents(const Library& lib);

}  // namespace oaf::omdoc

#endif  // OAF_OMDOC_HPP
