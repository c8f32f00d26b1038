#ifndef OAF_TESTS_NAMED_HPP
#define OAF_TESTS_NAMED_HPP

// Named-variable terms used as an independent oracle for the de Bruijn
// kernel: substitution here renames binders to avoid capture instead of
// shifting indices.

#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oaf/term.hpp"

namespace oaf::testing {

struct NTerm;
using NT = std::shared_ptr<const NTerm>;

struct NTerm {
  enum Kind { Const, Var, App, Lam, Pi, Type } kind;
  std::string name;            // variable or binder name
  std::optional<Ident> ident;  // Const
  NT a, b;
};

NT nconst(const Ident& id);
NT nvar(const std::string& name);
NT napp(NT f, NT x);
NT napp(NT f, std::initializer_list<NT> xs);
NT nlam(const std::string& x, NT dom, NT body);
NT npi(const std::string& x, NT dom, NT body);
NT ntype();

std::set<std::string> freeVars(const NT& t);
// Capture-avoiding substitution [s/x]t with renaming of clashing binders.
NT nsubst(const NT& t, const std::string& x, const NT& s);
// Converts to de Bruijn form; `scope` lists the free variables, innermost last.
Term toDeBruijn(const NT& t, std::vector<std::string> scope);
// Alpha-equivalence via de Bruijn conversion over the union of free vars.
bool alphaEqual(const NT& a, const NT& b);

// Full beta-delta-eta normal form by leftmost-outermost reduction on named
// terms. `defs` maps defined constants to their definientia.
NT nnormalize(const NT& t, const std::map<Ident, NT>& defs, int fuel = 10000);

// Random untyped named term over the given free variables and constants.
// Binder names are drawn from `binderPool`, which should overlap the free
// names so that shadowing and capture are exercised.
NT randomNamed(std::mt19937_64& rng, const std::vector<std::string>& free,
               const std::vector<Ident>& constants, const std::vector<std::string>& binderPool,
               int depth);

}  // namespace oaf::testing

#endif  // OAF_TESTS_NAMED_HPP
