#ifndef OAF_MORPHISMS_HPP
#define OAF_MORPHISMS_HPP

#include "oaf/kernel.hpp"
#include "oaf/library.hpp"

namespace oaf {

// Source-side constants are those of the include closure of `m.from`.
// Constants of the meta-theories are shared and map to themselves; defined
// constants without an assignment are replaced by their translated
// definiens. Throws UnassignedConstant for anything else without an
// assignment, UnknownIdent if `from` does not resolve.
Term translate(const Library& lib, const Morphism& m, const Term& t);

// One entry per source constant that needs or has an assignment, in flatten
// order, followed by entries for assignments to unknown constants. Assigned
// constants are checked against the translation of their type in the scope
// of `m.to`. Source theorems need no assignment.
CheckReport checkMorphism(const Library& lib, const Morphism& m,
                          const KernelOptions& opts = {});

// Assigns every non-shared source constant to itself.
Morphism identityMorphism(const Library& lib, const Ident& theory, Ident name);

// Assignment-wise translation: c |-> translate(second, first(c)), for every
// constant `first` assigns. Runs first : S -> T, then second : T -> U.
Morphism compose(const Library& lib, const Morphism& first, const Morphism& second, Ident name);

// Theory `<T>_<m>` including T whose declarations `<m>/<th>` are the
// translated statements of the theorems declared in S, each justified by
// DependsOn([th, m]). Throws the first failure of checkMorphism. The result
// checks once it and `m` are part of the library.
Theory installMorphism(const Library& lib, const Morphism& m, const KernelOptions& opts = {});

Ident installedTheoryName(const Morphism& m);

}  // namespace oaf

#endif  // OAF_MORPHISMS_HPP
