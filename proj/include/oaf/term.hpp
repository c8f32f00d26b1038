#ifndef OAF_TERM_HPP
#define OAF_TERM_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oaf/ident.hpp"

namespace oaf {

// Logical-framework expression. Bound variables are de Bruijn indices, so
// alpha-equivalent terms compare equal; binder hints are carried for printing
// only and never take part in comparison.
//
// Terms are immutable and share subterms freely; copying is a refcount bump.
class Term {
 public:
  enum class Kind : std::uint8_t {
    Const,
    Var,
    Apply,
    Lambda,
    Pi,
    TypeKind,
    SubType,  // {x : base | pred x}
    SubIn,    // introduction: element plus witness of the predicate
    SubOut,   // elimination back to the base type
  };

  static Term constant(Ident id);
  static Term var(std::uint32_t index);
  static Term apply(Term fn, Term arg);
  static Term apply(Term fn, const std::vector<Term>& args);
  static Term lambda(std::string hint, Term dom, Term body);
  static Term pi(std::string hint, Term dom, Term cod);
  // Non-dependent function space; `cod` is given in the outer scope.
  static Term arrow(Term dom, Term cod);
  static Term type();
  static Term subType(Term base, Term pred);
  static Term subIn(Term elem, Term witness);
  static Term subOut(Term elem);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  const Ident& ident() const;        // Const
  std::uint32_t index() const;       // Var
  const std::string& hint() const;   // Lambda, Pi
  const Term& fn() const;            // Apply
  const Term& arg() const;           // Apply
  const Term& dom() const;           // Lambda, Pi
  const Term& body() const;          // Lambda body, Pi codomain
  const Term& base() const;          // SubType
  const Term& pred() const;          // SubType
  const Term& elem() const;          // SubIn, SubOut
  const Term& witness() const;       // SubIn

  // Same node; a cheap sufficient test for equality.
  bool sameNode(const Term& other) const { return node_ == other.node_; }

  // Structural equality modulo binder hints.
  friend bool operator==(const Term& a, const Term& b);

  // Head of an application spine and its arguments, outermost last.
  const Term& head() const;
  std::vector<Term> spineArgs() const;

  // Number of free de Bruijn levels: 0 for closed terms.
  std::uint32_t looseBound() const;
  bool mentionsVar(std::uint32_t index) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  std::uint32_t index = 0;
  std::uint32_t loose = 0;
  std::optional<Ident> ident;
  std::string hint;
  std::optional<Term> first;
  std::optional<Term> second;
};

inline Term::Kind Term::kind() const { return node_->kind; }

// Adds `amount` to every variable index >= cutoff.
Term shift(const Term& t, std::int64_t amount, std::uint32_t cutoff = 0);

// Replaces Var(depth) in `t` by `s`, where `s` lives in the context outside
// the `depth` innermost binders of `t`'s context and the replaced binder is
// removed: indices above `depth` drop by one, `s` is lifted by `depth`.
Term substitute(const Term& t, std::uint32_t depth, const Term& s);

// Substitute(body, 0, arg): the beta-contraction of a binder body.
Term instantiate(const Term& body, const Term& arg);

// Number of non-application constructors; applications are counted through
// their spines as in n-ary application notation.
std::size_t termSize(const Term& t);

// Replaces every constant c by f(c). The replacements are inserted under
// binders unchanged, so they must be closed.
Term mapConstants(const Term& t, const std::function<Term(const Ident&)>& f);

// Every constant occurring in `t`, in first-occurrence order, deduplicated.
std::vector<Ident> constantsOf(const Term& t);

}  // namespace oaf

#endif  // OAF_TERM_HPP
