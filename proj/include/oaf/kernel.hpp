#ifndef OAF_KERNEL_HPP
#define OAF_KERNEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "oaf/error.hpp"
#include "oaf/library.hpp"
#include "oaf/term.hpp"

namespace oaf {

struct ContextEntry {
  std::string hint;
  Term type;
};

// Local typing context, innermost entry last. Entry k may only mention
// variables bound by entries before it.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<ContextEntry> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<ContextEntry>& entries() const { return entries_; }

  Context extended(std::string hint, Term type) const;
  void push(std::string hint, Term type) { entries_.push_back({std::move(hint), std::move(type)}); }
  // Type of Var(index), lifted into the full context.
  Term typeOf(std::uint32_t index) const;
  const std::string& hintOf(std::uint32_t index) const;

 private:
  std::vector<ContextEntry> entries_;
};

struct KernelOptions {
  bool eta = true;
  bool refinement = false;  // SubType/SubIn/SubOut admitted
  std::size_t reductionBudget = 100000;
};

// Global constants visible to the checker. Built from a Library or from the
// scope of one theory; lookups never see declarations that were not added.
class Signature {
 public:
  void add(const Declaration& d);
  const Declaration* find(const Ident& id) const;
  bool contains(const Ident& id) const { return index_.count(id) != 0; }
  std::size_t size() const { return decls_.size(); }
  const std::vector<Declaration>& declarations() const { return decls_; }

  // Every declaration of every theory in the library and its dependencies.
  static Signature ofLibrary(const Library& lib);

 private:
  std::vector<Declaration> decls_;
  std::unordered_map<Ident, std::size_t> index_;
};

// Framework identifiers a logic encoding may name as its meta-theory.
// They are built into the kernel and have no declarations.
Ident frameworkLF();
Ident frameworkLFRefine();  // LF with predicate subtypes

Term whnf(const Signature& sig, const Term& t, const KernelOptions& opts = {});
bool equal(const Signature& sig, const Context& ctx, const Term& a, const Term& b,
           const KernelOptions& opts = {});
Term infer(const Signature& sig, const Context& ctx, const Term& t,
           const KernelOptions& opts = {});
void check(const Signature& sig, const Context& ctx, const Term& t, const Term& expected,
           const KernelOptions& opts = {});
// True for `type` and Pi-chains of types ending in `type`; throws on
// ill-formed binder domains.
bool isKind(const Signature& sig, const Context& ctx, const Term& t,
            const KernelOptions& opts = {});
// Accepts a well-formed kind or a term whose type is `type`.
void checkClassifier(const Signature& sig, const Context& ctx, const Term& t,
                     const KernelOptions& opts = {});

// Depth-first include resolution; every theory contributes its declarations
// once, at its first visit, and the requested theory's own come last.
// Throws Cycle or UnknownIdent.
std::vector<Declaration> flatten(const Library& lib, const Ident& theory);

// Theories in flatten order (includes first, `theory` last).
std::vector<const Theory*> includeClosure(const Library& lib, const Ident& theory);

// Chain of meta-theories starting at `theory`'s meta, outermost last.
std::vector<Ident> metaChain(const Library& lib, const Ident& theory);

// Whether predicate subtypes are enabled for terms of `theory`.
bool refinementEnabled(const Library& lib, const Ident& theory);

// Declarations visible in `theory`: its meta-theories' flattened content,
// then the flattened includes, and, if `withOwn`, its own declarations.
Signature scopeOf(const Library& lib, const Ident& theory, bool withOwn = true);

struct DeclStatus {
  Ident name;
  bool ok = true;
  std::optional<ErrorCode> error;
  std::string message;
};

struct CheckReport {
  Ident subject;  // theory or morphism
  std::vector<DeclStatus> entries;
  // Set when the subject could not be checked at all (cycle, unresolved).
  std::optional<ErrorCode> fatal;
  std::string fatalMessage;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return !fatal && failed() == 0; }
  const DeclStatus* find(const Ident& name) const;
};

// Checks one declaration of `theory` against `sig` and, if its type is
// acceptable, adds it to `sig`. `opts.refinement` is taken as given.
DeclStatus checkDeclaration(const Library& lib, const Ident& theory, Signature& sig,
                            const Declaration& decl, const KernelOptions& opts);

// Checks a theory's own declarations in order. Failures are collected per
// declaration; a declaration whose type checks stays in scope for the rest.
CheckReport checkTheory(const Library& lib, const Ident& theory, KernelOptions opts = {});

}  // namespace oaf

#endif  // OAF_KERNEL_HPP
