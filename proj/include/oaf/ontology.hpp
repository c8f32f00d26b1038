#ifndef OAF_ONTOLOGY_HPP
#define OAF_ONTOLOGY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oaf/library.hpp"

namespace oaf::ontology {

// Predicates live under this base; `ulo:uses` is `<kUloBase>uses`.
inline constexpr const char* kUloBase = "http://oaf.example.org/ulo#";

// The identifier-level vocabulary.
inline constexpr const char* kDeclares = "declares";
inline constexpr const char* kIncludes = "includes";
inline constexpr const char* kMetaTheory = "metaTheory";
inline constexpr const char* kKind = "kind";
inline constexpr const char* kSourceFile = "sourceFile";
inline constexpr const char* kUses = "uses";
inline constexpr const char* kJustifiedBy = "justifiedBy";
// Provenance: literal "checked", "check-failed" or "unchecked" per theory.
inline constexpr const char* kCheckStatus = "checkStatus";
// Reserved; the toy formats carry no data for them.
inline constexpr const char* kAuthor = "author";
inline constexpr const char* kCheckTime = "checkTime";

std::string ulo(std::string_view local);

// `<namespace>?<module>?<name>` with each component percent-encoded. The
// separators stay literal, so the mapping is invertible.
std::string iri(const Ident& id);
// Inverse of iri. Throws Malformed.
Ident identOfIri(std::string_view iri);

struct RdfTriple {
  std::string subject;
  std::string predicate;
  std::string object;
  bool literal = false;  // object is a plain literal rather than an IRI

  friend auto operator<=>(const RdfTriple&, const RdfTriple&) = default;
  friend bool operator==(const RdfTriple&, const RdfTriple&) = default;
};

// Duplicate-free triple set that remembers insertion order.
class TripleStore {
 public:
  // False if the triple was already present.
  bool insert(RdfTriple t);
  bool contains(const RdfTriple& t) const { return set_.count(t) > 0; }

  const std::vector<RdfTriple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  // Positions into triples().
  const std::vector<std::size_t>& bySubject(const std::string& subject) const;
  const std::vector<std::size_t>& byObject(const std::string& object) const;

  // Set equality; order is ignored.
  friend bool operator==(const TripleStore& a, const TripleStore& b) { return a.set_ == b.set_; }

 private:
  std::vector<RdfTriple> triples_;
  std::set<RdfTriple> set_;
  std::map<std::string, std::vector<std::size_t>> subjects_;
  std::map<std::string, std::vector<std::size_t>> objects_;
};

struct ExtractOptions {
  bool check = true;              // run the kernel and record the outcome
  bool includeProofUses = false;  // count constants of proof terms as uses
};

// Per theory: declares, includes, metaTheory, checkStatus. Per declaration:
// kind, sourceFile (when known), uses (constants of type and definiens),
// justifiedBy (DependsOn entries). Order follows the library.
TripleStore extractTriples(const Library& lib, const ExtractOptions& opts = {});

// Reflexive-transitive closure over uses and justifiedBy from `id`. Throws
// UnknownIdent if `id` occurs in no triple.
std::set<Ident> transitiveUses(const TripleStore& store, const Ident& id);

// Every other identifier whose transitiveUses contains `target`, restricted
// to declarations of the given kind. Throws UnknownIdent as above.
std::set<Ident> usedBy(const TripleStore& store, const Ident& target,
                       std::optional<DeclKind> kindFilter = std::nullopt);

// One `<s> <p> <o> .` line per triple in store order.
std::string writeNTriples(const TripleStore& store);
// Accepts blank lines and `#` comments. Throws Malformed with the 1-based
// line number as detail.
TripleStore readNTriples(std::string_view bytes);

}  // namespace oaf::ontology

#endif  // OAF_ONTOLOGY_HPP
