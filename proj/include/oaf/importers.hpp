#ifndef OAF_IMPORTERS_HPP
#define OAF_IMPORTERS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oaf/error.hpp"
#include "oaf/kernel.hpp"
#include "oaf/library.hpp"

namespace oaf {

// ---------------------------------------------------------------------------
// Surface syntax of the HOL-like exporter.
//
//   \x:T. t      abstraction (annotation optional)
//   !x:T. t      universal quantifier (annotation optional)
//   p ==> q      implication, right associative, loosest
//   a = b        equality, non-associative
//   f a b        application
//   (==>) (=)    the connectives as unapplied names
//
// Types are `bool`, declared base types, and `A -> B` (right associative).

class SurfaceType {
 public:
  enum class Kind { Base, Arrow, Meta };

  static SurfaceType base(std::string name);
  static SurfaceType arrow(SurfaceType from, SurfaceType to);
  static SurfaceType meta(int id);
  static SurfaceType boolean() { return base("bool"); }

  Kind kind() const;
  const std::string& name() const;  // Base
  const SurfaceType& from() const;  // Arrow
  const SurfaceType& to() const;    // Arrow
  int metaId() const;               // Meta
  bool hasMeta() const;

  friend bool operator==(const SurfaceType& a, const SurfaceType& b);

 private:
  struct Node;
  explicit SurfaceType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class SurfaceTerm {
 public:
  enum class Kind { Name, App, Abs, Binder };

  static SurfaceTerm name(std::string n);
  static SurfaceTerm app(SurfaceTerm fn, SurfaceTerm arg);
  static SurfaceTerm abs(std::string var, std::optional<SurfaceType> annot, SurfaceTerm body);
  static SurfaceTerm forall(std::string var, std::optional<SurfaceType> annot, SurfaceTerm body);
  static SurfaceTerm implies(SurfaceTerm p, SurfaceTerm q);
  static SurfaceTerm equals(SurfaceTerm a, SurfaceTerm b);

  Kind kind() const;
  const std::string& name() const;  // Name; bound variable of Abs and Binder
  const SurfaceTerm& fn() const;    // App
  const SurfaceTerm& arg() const;   // App
  const std::optional<SurfaceType>& annot() const;
  const SurfaceTerm& body() const;

  friend bool operator==(const SurfaceTerm& a, const SurfaceTerm& b);

 private:
  struct Node;
  explicit SurfaceTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline constexpr const char* kImpliesName = "==>";
inline constexpr const char* kEqualsName = "=";

std::string printSurfaceType(const SurfaceType& t);
std::string printSurfaceTerm(const SurfaceTerm& t);
// Throw Malformed.
SurfaceType parseSurfaceType(std::string_view text);
SurfaceTerm parseSurfaceTerm(std::string_view text);
bool isSurfaceName(std::string_view s);

// ---------------------------------------------------------------------------
// Church-annotation inference

struct SurfaceConstant {
  Ident id;
  SurfaceType type;  // ground
};

struct SurfaceEnv {
  std::map<std::string, SurfaceConstant, std::less<>> constants;
  std::map<std::string, Ident, std::less<>> baseTypes;  // besides bool
};

struct ChurchTerm {
  Term term;          // over holChurch, of type tm ⟦type⟧
  SurfaceType type;   // ground
};

// The holChurch type encoding a ground surface type. Throws UnknownIdent for
// undeclared base types.
Term churchType(const SurfaceEnv& env, const SurfaceType& t);

// Simple-type inference by first-order unification, then emission with every
// `app`, `lam`, `forall` and `eq` fully annotated. Throws UnificationFailure
// (detail: the offending subterm), AmbiguousType (detail: the outermost binder
// whose type stays open, or `=`), UnknownIdent.
ChurchTerm inferChurchAnnotations(const SurfaceEnv& env, const SurfaceTerm& t);

// ---------------------------------------------------------------------------
// Export documents

struct SourcePoint {
  std::string file;
  std::uint32_t line = 1;
  std::uint32_t col = 1;
  friend bool operator==(const SourcePoint&, const SourcePoint&) = default;
};

struct ToyholDecl {
  DeclKind kind = DeclKind::Constant;  // Type, Constant, Definition, Axiom, Theorem
  std::string name;
  std::optional<std::string> type;  // surface type; the statement for axioms and theorems
  std::optional<std::string> definiens;
  std::optional<std::vector<std::string>> deps;
  std::optional<SourcePoint> src;
  std::optional<std::string> notation;
  std::optional<std::string> comment;
  friend bool operator==(const ToyholDecl&, const ToyholDecl&) = default;
};

struct ToyholTheory {
  std::string name;
  std::vector<std::string> includes;
  std::vector<ToyholDecl> decls;
  friend bool operator==(const ToyholTheory&, const ToyholTheory&) = default;
};

inline constexpr const char* kToyholNamespace = "http://oaf.example.org/toyhol";
inline constexpr const char* kToysetNamespace = "http://oaf.example.org/toyset";

struct ToyholDoc {
  std::string version = "1";
  std::string ns = kToyholNamespace;
  std::vector<ToyholTheory> theories;
  std::size_t recordCount() const;
  friend bool operator==(const ToyholDoc&, const ToyholDoc&) = default;
};

enum class ToysetKind { Func, Pred, Axiom, Theorem, Scheme, Definition };

struct ToysetParam {
  std::string name;
  std::string type;  // LF syntax
  friend bool operator==(const ToysetParam&, const ToysetParam&) = default;
};

struct ToysetDecl {
  ToysetKind kind = ToysetKind::Func;
  std::string name;
  std::uint32_t arity = 0;                // func, pred
  std::optional<std::string> statement;   // axiom, theorem, scheme (LF syntax, a prop)
  std::vector<ToysetParam> params;        // scheme
  std::vector<std::string> deps;          // theorem, scheme
  std::string pattern;                    // definition
  std::vector<std::string> args;          // definition (LF syntax)
  std::optional<SourcePoint> src;
  std::optional<std::string> notation;
  std::optional<std::string> comment;
  friend bool operator==(const ToysetDecl&, const ToysetDecl&) = default;
};

struct ToysetArticle {
  std::string name;
  std::vector<std::string> includes;
  std::vector<ToysetDecl> decls;
  friend bool operator==(const ToysetArticle&, const ToysetArticle&) = default;
};

struct ToysetDoc {
  std::string version = "1";
  std::string ns = kToysetNamespace;
  std::vector<ToysetArticle> articles;
  std::size_t recordCount() const;
  friend bool operator==(const ToysetDoc&, const ToysetDoc&) = default;
};

// Strict readers. Throw Malformed, SchemaViolation (detail: path of the
// offending field, e.g. `theories[0].decls[0].name` or
// `/export/article[0]/axiom[3]/@name`), UnsupportedVersion.
ToyholDoc parseToyhol(std::string_view bytes);
ToysetDoc parseToyset(std::string_view bytes);

// ---------------------------------------------------------------------------
// Import

struct ImportIssue {
  Ident subject;  // declaration, or theory when the whole theory is skipped
  ErrorCode code;
  std::string message;
};

struct ImportReport {
  std::size_t records = 0;   // declaration records in the document
  std::size_t imported = 0;  // declarations in the library
  std::vector<ImportIssue> issues;  // one per failed record
  bool ok() const { return issues.empty(); }
};

struct ImportOptions {
  // Permit a document with records that yields no declarations.
  bool allowEmpty = false;
  KernelOptions kernel;
};

struct ImportResult {
  Library library;
  ImportReport report;
};

// Records are checked one by one against everything accepted before them;
// failures are reported and left out, successes kept. Throws EmptyOutput when
// records exist but none survive (unless allowed).
ImportResult importToyhol(const ToyholDoc& doc, const ImportOptions& opts = {});
ImportResult importToyset(const ToysetDoc& doc, const ImportOptions& opts = {});

// ---------------------------------------------------------------------------
// Source references

struct SourceScanOptions {
  std::vector<std::string> markers{":=", ":"};
};

struct SourceScanReport {
  std::vector<Ident> recovered;
  std::vector<Ident> missed;
  // Declarations whose name matched in more than one place; the first match
  // was used.
  std::vector<Ident> collisions;
};

struct SourceScanResult {
  Library library;
  SourceScanReport report;
};

// For every declaration without a source reference, looks for the first
// line holding its local name at token boundaries followed by a marker. Files
// are tried in order: those already referenced by the same theory, those whose
// stem is the theory's module name, then all others, each group sorted.
SourceScanResult recoverSourceRefs(const Library& lib,
                                   const std::map<std::string, std::string>& sources,
                                   const SourceScanOptions& opts = {});

// File name safe on case-insensitive file systems: `[a-z0-9._-]` kept, every
// other byte written as `%xx` (lowercase hex).
std::string mangleFileName(std::string_view name);

}  // namespace oaf

#endif  // OAF_IMPORTERS_HPP
