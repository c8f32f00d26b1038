#ifndef OAF_LIBRARY_HPP
#define OAF_LIBRARY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oaf/ident.hpp"
#include "oaf/term.hpp"

namespace oaf {

struct SourceRef {
  std::string file;
  std::uint32_t startLine = 1;
  std::uint32_t startCol = 1;
  std::uint32_t endLine = 1;
  std::uint32_t endCol = 1;

  static SourceRef point(std::string file, std::uint32_t line, std::uint32_t col,
                         std::uint32_t length = 1);
  bool valid() const;

  friend bool operator==(const SourceRef&, const SourceRef&) = default;
};

enum class DeclKind { Type, Constant, Definition, Axiom, Theorem, PatternInstance };

std::string_view declKindName(DeclKind kind);
std::optional<DeclKind> parseDeclKind(std::string_view name);

// Back-pointer from a generated declaration to the pattern instance that
// produced it.
struct PatternOrigin {
  Ident instance;
  Ident pattern;
  friend bool operator==(const PatternOrigin&, const PatternOrigin&) = default;
};

struct Metadata {
  std::optional<SourceRef> sourceRef;
  std::vector<std::string> comments;
  std::optional<std::string> notation;
  DeclKind kind = DeclKind::Constant;
  std::optional<PatternOrigin> origin;

  friend bool operator==(const Metadata&, const Metadata&) = default;
};

struct OmittedProof {
  friend bool operator==(const OmittedProof&, const OmittedProof&) = default;
};
struct DependsOnProof {
  std::vector<Ident> ids;  // duplicate-free, source order
  friend bool operator==(const DependsOnProof&, const DependsOnProof&) = default;
};
struct TermProof {
  Term term;
  friend bool operator==(const TermProof&, const TermProof&) = default;
};

using Proof = std::variant<OmittedProof, DependsOnProof, TermProof>;

// Drops repeated identifiers, keeping first occurrences.
Proof dependsOn(const std::vector<Ident>& ids);

enum class ProofStyle { Omitted, DependsOn, Term };
ProofStyle proofStyle(const Proof& p);
std::string_view proofStyleName(ProofStyle style);

struct Declaration {
  Ident name;
  std::optional<Term> type;
  std::optional<Term> definiens;
  std::optional<Proof> proof;
  Metadata meta;

  friend bool operator==(const Declaration&, const Declaration&) = default;
};

struct Theory {
  Ident name;  // module-level
  std::optional<Ident> metaTheory;
  std::vector<Ident> includes;
  std::vector<Declaration> decls;

  // Identifier of a declaration named `local` in this theory.
  Ident declIdent(std::string local) const { return name.child(std::move(local)); }
  const Declaration* find(const Ident& id) const;

  friend bool operator==(const Theory&, const Theory&) = default;
};

// Typed map from the constants of `from` to terms over `to`.
struct Morphism {
  Ident name;  // module-level
  Ident from;
  Ident to;
  std::map<Ident, Term> assignments;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

struct Library {
  std::string ns;
  std::vector<Theory> theories;
  std::vector<Morphism> morphisms;
  // Theories the library builds on but does not own (logic encodings).
  // They resolve references but are not part of the library's content and do
  // not take part in equality.
  std::vector<Theory> dependencies;

  const Theory* findTheory(const Ident& id) const;
  const Morphism* findMorphism(const Ident& id) const;
  // Looks through owned theories and dependencies.
  const Declaration* findDeclaration(const Ident& id) const;

  std::size_t declarationCount() const;

  friend bool operator==(const Library& a, const Library& b) {
    return a.ns == b.ns && a.theories == b.theories && a.morphisms == b.morphisms;
  }
};

}  // namespace oaf

#endif  // OAF_LIBRARY_HPP
