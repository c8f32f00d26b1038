#include "oaf/library.hpp"

#include <unordered_set>

namespace oaf {

SourceRef SourceRef::point(std::string file, std::uint32_t line, std::uint32_t col,
                           std::uint32_t length) {
  std::uint32_t end = col + (length == 0 ? 0 : length - 1);
  return SourceRef{std::move(file), line, col, line, end};
}

bool SourceRef::valid() const {
  if (startLine == 0 || startCol == 0 || endLine == 0 || endCol == 0) return false;
  return startLine < endLine || (startLine == endLine && startCol <= endCol);
}

std::string_view declKindName(DeclKind kind) {
  switch (kind) {
    case DeclKind::Type: return "type";
    case DeclKind::Constant: return "constant";
    case DeclKind::Definition: return "definition";
    case DeclKind::Axiom: return "axiom";
    case DeclKind::Theorem: return "theorem";
    case DeclKind::PatternInstance: return "patternInstance";
  }
  return "constant";
}

std::optional<DeclKind> parseDeclKind(std::string_view name) {
  for (DeclKind k : {DeclKind::Type, DeclKind::Constant, DeclKind::Definition,
                     DeclKind::Axiom, DeclKind::Theorem, DeclKind::PatternInstance})
    if (declKindName(k) == name) return k;
  return std::nullopt;
}

Proof dependsOn(const std::vector<Ident>& ids) {
  DependsOnProof p;
  std::unordered_set<Ident> seen;
  for (const Ident& id : ids)
    if (seen.insert(id).second) p.ids.push_back(id);
  return p;
}

ProofStyle proofStyle(const Proof& p) {
  if (std::holds_alternative<OmittedProof>(p)) return ProofStyle::Omitted;
  if (std::holds_alternative<DependsOnProof>(p)) return ProofStyle::DependsOn;
  return ProofStyle::Term;
}

std::string_view proofStyleName(ProofStyle style) {
  switch (style) {
    case ProofStyle::Omitted: return "omitted";
    case ProofStyle::DependsOn: return "dependsOn";
    case ProofStyle::Term: return "term";
  }
  return "omitted";
}

const Declaration* Theory::find(const Ident& id) const {
  for (const Declaration& d : decls)
    if (d.name == id) return &d;
  return nullptr;
}

const Theory* Library::findTheory(const Ident& id) const {
  for (const Theory& t : theories)
    if (t.name == id) return &t;
  for (const Theory& t : dependencies)
    if (t.name == id) return &t;
  return nullptr;
}

const Morphism* Library::findMorphism(const Ident& id) const {
  for (const Morphism& m : morphisms)
    if (m.name == id) return &m;
  return nullptr;
}

const Declaration* Library::findDeclaration(const Ident& id) const {
  if (id.isModule()) return nullptr;
  const Theory* th = findTheory(id.modulePath());
  return th ? th->find(id) : nullptr;
}

std::size_t Library::declarationCount() const {
  std::size_t n = 0;
  for (const Theory& t : theories) n += t.decls.size();
  return n;
}

}  // namespace oaf
