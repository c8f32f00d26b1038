#ifndef OAF_EXTENSIONS_HPP
#define OAF_EXTENSIONS_HPP

#include <cstddef>
#include <vector>

#include "oaf/kernel.hpp"
#include "oaf/library.hpp"

namespace oaf {

// Parameterised list of declaration templates. Template types and definientia
// are scoped over `params` (param 0 outermost) and may refer to earlier
// templates by their template identifiers, `pattern-ns?pattern-module?
// <pattern-name>/<template>`.
struct Pattern {
  Ident name;
  Context params;
  std::vector<Declaration> body;

  std::size_t arity() const { return params.size(); }
  Ident templateIdent(const std::string& local) const;
  // Local template name of a template identifier.
  std::string templateName(const Ident& id) const;
};

struct PatternInstance {
  Ident name;  // declaration-level; generated names are `<name>/<template>`
  Ident pattern;
  std::vector<Term> args;
};

// Statement with implicitly bound schematic variables (outermost first).
struct SchematicDecl {
  Context schematicVars;
  Term statement;
};

// Patterns known to the elaborator, by name.
class PatternSet {
 public:
  void add(Pattern p);
  const Pattern* find(const Ident& name) const;
  const std::vector<Pattern>& patterns() const { return patterns_; }

 private:
  std::vector<Pattern> patterns_;
};

// Mizar-style functor definition over folSoft:
//   params  P : set -> set -> prop
//   f   : set -> set
//   def : ded (forallSet [x:set] P x (f x))
Pattern funcDefinitionPattern();

// HOL type definition over holChurch:
//   params  A : tp, P : tm A -> tm bool'
//   T        : tp
//   rep      : tm (arrow T A)
//   rep_prop : ded (forall T [x:tm T] P (app T A rep x))
Pattern typedefPattern();

const PatternSet& bundledPatterns();

// Instantiates the templates of `inst.pattern`. Arguments are checked against
// the parameter types in the scope of the theory that owns `inst.name` (or the
// whole library if that theory is not part of it). Throws UnknownIdent,
// ArityMismatch, or the kernel error of an ill-typed argument.
std::vector<Declaration> elaboratePattern(const Library& lib, const PatternInstance& inst,
                                          const PatternSet& patterns = bundledPatterns());

// Pi-closure of the statement over the schematic variables; the result is
// closed when the statement is well-scoped.
Term closeToplevel(const SchematicDecl& sd);

// Axiom-schema reading: the statement instantiated at each candidate, in
// order, at most `limit` of them. Only single-variable schemas are
// supported (ArityUnsupported otherwise). With a signature, every candidate
// is first checked against the variable's type.
std::vector<Term> groundInstances(const SchematicDecl& sd, const std::vector<Term>& candidates,
                                  std::size_t limit, const Signature* sig = nullptr,
                                  const KernelOptions& opts = {});

}  // namespace oaf

#endif  // OAF_EXTENSIONS_HPP
