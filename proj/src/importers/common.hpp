#ifndef OAF_IMPORTERS_COMMON_HPP
#define OAF_IMPORTERS_COMMON_HPP

#include <string>
#include <vector>

#include "oaf/importers.hpp"

namespace oaf::importers {

struct Ordering {
  std::vector<std::size_t> order;  // processable records, includes first
  struct Skipped {
    std::size_t index;
    ErrorCode code;
    std::string message;
  };
  std::vector<Skipped> skipped;  // unknown include, cycle, or a skipped include
};

// Orders records so that every theory comes after the ones it includes.
// Records are otherwise taken in document order.
Ordering orderByIncludes(const std::vector<std::string>& names,
                         const std::vector<std::vector<std::string>>& includes);

// A theory under construction inside `lib`: declarations are checked
// against everything accepted so far and appended only when they pass.
class IncrementalTheory {
 public:
  IncrementalTheory(Library& lib, Theory th, const KernelOptions& opts);

  DeclStatus add(const Declaration& d);
  // All or nothing; returns the first failure, or an ok status.
  DeclStatus addAll(const std::vector<Declaration>& ds);
  const Ident& name() const { return name_; }

 private:
  Library& lib_;
  std::size_t index_;
  Ident name_;
  Signature sig_;
  KernelOptions opts_;
};

// `name` or `Theory.name`, looked up in the theory and its includes (own
// declarations first). Throws UnknownIdent.
Ident resolveDependency(const Library& lib, const Ident& theory, const std::string& dep);

// Moves theories back into document order and applies the empty-output guard.
void finish(ImportResult& result, const std::vector<std::string>& docOrder,
            const ImportOptions& opts);

void skipTheory(ImportResult& result, const Ident& theory, std::size_t records, ErrorCode code,
                const std::string& message);

}  // namespace oaf::importers

#endif  // OAF_IMPORTERS_COMMON_HPP
