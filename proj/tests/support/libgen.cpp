#include "libgen.hpp"

#include <random>
#include <string>
#include <vector>

#include "oaf/encodings.hpp"
#include "oaf/kernel.hpp"

namespace oaf::testing {

namespace {

class LibGen {
 public:
  LibGen(std::uint64_t seed, const LibGenOptions& opts) : rng_(seed), opts_(opts) {}

  Library run() {
    Library lib;
    lib.ns = pick(2) ? "http://gen.example.org/lib" : "http://gen.example.org/a b%";
    lib.dependencies = builtinLogics();
    for (int i = 0; i < opts_.theories; ++i) {
      Theory th{Ident::module(lib.ns, "T" + std::to_string(i)), std::nullopt, {}, {}};
      switch (pick(4)) {
        case 0: th.metaTheory = logicIdent(LogicId::HolChurch); break;
        case 1: th.metaTheory = logicIdent(LogicId::FolSoft); break;
        case 2: th.metaTheory = frameworkLF(); break;
        default: break;
      }
      std::vector<Ident> visible = logicConstants(th.metaTheory);
      for (int j = 0; j < i; ++j)
        if (pick(3) == 0) {
          th.includes.push_back(lib.theories[j].name);
          for (const Declaration& d : lib.theories[j].decls) visible.push_back(d.name);
        }
      int n = opts_.declsPerTheory == 0 ? 0 : static_cast<int>(pick(opts_.declsPerTheory + 1));
      for (int k = 0; k < n; ++k) {
        Declaration d = declaration(th, k, visible);
        visible.push_back(d.name);
        th.decls.push_back(std::move(d));
      }
      lib.theories.push_back(std::move(th));
    }
    if (opts_.morphisms && lib.theories.size() >= 2)
      for (int m = 0; m < 2; ++m) lib.morphisms.push_back(morphism(lib, m));
    return lib;
  }

 private:
  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  std::vector<Ident> logicConstants(const std::optional<Ident>& meta) {
    std::vector<Ident> out;
    if (!meta) return out;
    for (const Theory& th : builtinLogics())
      if (th.name == *meta)
        for (const Declaration& d : th.decls) out.push_back(d.name);
    return out;
  }

  std::string text() {
    static const std::vector<std::string> parts{
        "plain", " lead", "trail ", "a<b", "x & y", "\"q\"", "'s'", "tab\there",
        "line\nbreak", "cr\rret", "\xce\xbb x", "]]>", "", "  ", "{}"};
    std::string s;
    for (std::size_t i = pick(3) + 1; i-- > 0;) s += parts[pick(parts.size())];
    return s;
  }

  std::string hint() {
    static const std::vector<std::string> hints{"x", "y", "", "x'", "_", "long_name", "\xce\xb1"};
    return hints[pick(hints.size())];
  }

  Term term(const std::vector<Ident>& visible, std::uint32_t depth, int budget) {
    std::size_t choice = budget <= 0 ? pick(3) : pick(10);
    switch (choice) {
      case 0:
        if (!visible.empty()) return Term::constant(visible[pick(visible.size())]);
        [[fallthrough]];
      case 1:
        if (depth > 0) return Term::var(static_cast<std::uint32_t>(pick(depth)));
        [[fallthrough]];
      case 2: return Term::type();
      case 3:
      case 4: {
        std::vector<Term> args;
        for (std::size_t i = pick(3) + 1; i-- > 0;) args.push_back(term(visible, depth, budget - 1));
        Term head = term(visible, depth, budget - 1);
        return Term::apply(head, args);
      }
      case 5:
        return Term::lambda(hint(), term(visible, depth, budget - 1),
                            term(visible, depth + 1, budget - 1));
      case 6:
        return Term::pi(hint(), term(visible, depth, budget - 1),
                        term(visible, depth + 1, budget - 1));
      case 7:
        return Term::subType(term(visible, depth, budget - 1), term(visible, depth, budget - 1));
      case 8:
        return Term::subIn(term(visible, depth, budget - 1), term(visible, depth, budget - 1));
      default: return Term::subOut(term(visible, depth, budget - 1));
    }
  }

  Declaration declaration(const Theory& th, int k, const std::vector<Ident>& visible) {
    static const std::vector<std::string> names{"c", "n'", "x_y", "thm", "a.b", "ax-1", "\xce\xb2"};
    Declaration d{th.declIdent(names[pick(names.size())] + std::to_string(k)), std::nullopt,
                  std::nullopt, std::nullopt, {}};
    d.meta.kind = static_cast<DeclKind>(pick(6));
    if (pick(5) != 0) d.type = term(visible, 0, opts_.termDepth);
    if (pick(3) == 0) d.definiens = term(visible, 0, opts_.termDepth);
    switch (pick(4)) {
      case 0: d.proof = OmittedProof{}; break;
      case 1: {
        std::vector<Ident> ids;
        for (std::size_t i = pick(3); i-- > 0 && !visible.empty();)
          ids.push_back(visible[pick(visible.size())]);
        d.proof = dependsOn(ids);
        break;
      }
      case 2: d.proof = TermProof{term(visible, 0, opts_.termDepth)}; break;
      default: break;
    }
    if (pick(2)) {
      std::uint32_t l = static_cast<std::uint32_t>(pick(500) + 1);
      d.meta.sourceRef = SourceRef{"src/" + text() + ".v", l, static_cast<std::uint32_t>(pick(80) + 1),
                                   l + static_cast<std::uint32_t>(pick(3)),
                                   static_cast<std::uint32_t>(pick(80) + 1)};
    }
    for (std::size_t i = pick(3); i-- > 0;) d.meta.comments.push_back(text());
    if (pick(3) == 0) d.meta.notation = text();
    if (pick(6) == 0)
      d.meta.origin = PatternOrigin{th.declIdent("inst" + std::to_string(pick(9))),
                                    logicIdent(LogicId::FolSoft).child("func-definition")};
    return d;
  }

  Morphism morphism(const Library& lib, int m) {
    std::size_t from = pick(lib.theories.size());
    std::size_t to = pick(lib.theories.size());
    Morphism mor{Ident::module(lib.ns, "m" + std::to_string(m)), lib.theories[from].name,
                 lib.theories[to].name, {}};
    std::vector<Ident> target = logicConstants(lib.theories[to].metaTheory);
    for (const Declaration& d : lib.theories[to].decls) target.push_back(d.name);
    for (const Declaration& d : lib.theories[from].decls)
      if (pick(3) != 0) mor.assignments.emplace(d.name, term(target, 0, 2));
    return mor;
  }

  std::mt19937_64 rng_;
  LibGenOptions opts_;
};

std::size_t nodes(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Const:
    case Term::Kind::Var:
    case Term::Kind::TypeKind: return 1;
    case Term::Kind::Apply: return 1 + nodes(t.fn()) + nodes(t.arg());
    case Term::Kind::Lambda:
    case Term::Kind::Pi: return 1 + nodes(t.dom()) + nodes(t.body());
    case Term::Kind::SubType: return 1 + nodes(t.base()) + nodes(t.pred());
    case Term::Kind::SubIn: return 1 + nodes(t.elem()) + nodes(t.witness());
    case Term::Kind::SubOut: return 1 + nodes(t.elem());
  }
  return 1;
}

}  // namespace

Library randomLibrary(std::uint64_t seed, const LibGenOptions& opts) {
  return LibGen(seed, opts).run();
}

std::size_t termNodeCount(const Library& lib) {
  std::size_t n = 0;
  for (const Theory& th : lib.theories)
    for (const Declaration& d : th.decls) {
      if (d.type) n += nodes(*d.type);
      if (d.definiens) n += nodes(*d.definiens);
      if (d.proof)
        if (const auto* p = std::get_if<TermProof>(&*d.proof)) n += nodes(p->term);
    }
  for (const Morphism& m : lib.morphisms)
    for (const auto& [_, t] : m.assignments) n += nodes(t);
  return n;
}

}  // namespace oaf::testing
