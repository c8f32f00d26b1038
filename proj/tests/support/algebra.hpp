#ifndef OAF_TESTS_ALGEBRA_HPP
#define OAF_TESTS_ALGEBRA_HPP

// Morphism fixtures.
//
// Algebra (namespace kAlgebraNs, logic HOL):
//   Monoid:   m, op, e, inv, axioms assoc and unitl, definition sq,
//             theorems unit_sq and unit_idem
//   Integers: int, zero, add, neg, axioms add_assoc and add_zero_l
//   plus      : Monoid -> Integers     (m, op, e, inv |-> int, add, zero, neg)
//   plusBad   : as plus but inv |-> zero
//   negneg    : Integers -> Integers   (neg |-> [x] neg (neg x))
//
// GenImage: a theory over LF receiving the test signature Gen through the
// morphism `image`, which maps every base constant to a non-trivial term.

#include "oaf/library.hpp"

namespace oaf::testing {

inline constexpr const char* kAlgebraNs = "http://oaf.example.org/algebra";

Library algebraLibrary();
Ident algebraIdent(const std::string& module, const std::string& local = {});
// Parses concrete syntax with every constant of the algebra library in scope.
Term algebraTerm(const std::string& text);

Library genImageLibrary();  // Gen, GenImage, morphism image
Ident genImageIdent(const std::string& module, const std::string& local = {});

}  // namespace oaf::testing

#endif  // OAF_TESTS_ALGEBRA_HPP
