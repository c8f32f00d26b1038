#include "common.hpp"

#include <algorithm>
#include <map>

namespace oaf::importers {

Ordering orderByIncludes(const std::vector<std::string>& names,
                         const std::vector<std::vector<std::string>>& includes) {
  enum class State { Pending, Done, Skipped };
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  std::vector<State> state(names.size(), State::Pending);
  Ordering out;

  for (std::size_t i = 0; i < names.size(); ++i)
    for (const std::string& inc : includes[i])
      if (!index.count(inc) && state[i] == State::Pending) {
        state[i] = State::Skipped;
        out.skipped.push_back({i, ErrorCode::UnknownIdent, "unknown include " + inc});
      }

  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (state[i] != State::Pending) continue;
      bool ready = true;
      for (const std::string& inc : includes[i]) {
        State s = state[index[inc]];
        if (s == State::Skipped) {
          state[i] = State::Skipped;
          out.skipped.push_back(
              {i, ErrorCode::UnknownIdent, "included theory " + inc + " was not imported"});
          progress = true;
          ready = false;
          break;
        }
        if (s == State::Pending) ready = false;
      }
      if (ready && state[i] == State::Pending) {
        state[i] = State::Done;
        out.order.push_back(i);
        progress = true;
      }
    }
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    if (state[i] == State::Pending)
      out.skipped.push_back({i, ErrorCode::Cycle, "theory " + names[i] + " is on an include cycle"});
  std::sort(out.skipped.begin(), out.skipped.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  return out;
}

IncrementalTheory::IncrementalTheory(Library& lib, Theory th, const KernelOptions& opts)
    : lib_(lib), index_(lib.theories.size()), name_(th.name), opts_(opts) {
  lib_.theories.push_back(std::move(th));
  opts_.refinement = refinementEnabled(lib_, name_);
  sig_ = scopeOf(lib_, name_, false);
}

DeclStatus IncrementalTheory::add(const Declaration& d) {
  Signature trial = sig_;
  DeclStatus status = checkDeclaration(lib_, name_, trial, d, opts_);
  if (status.ok) {
    sig_ = std::move(trial);
    lib_.theories[index_].decls.push_back(d);
  }
  return status;
}

DeclStatus IncrementalTheory::addAll(const std::vector<Declaration>& ds) {
  Signature trial = sig_;
  for (const Declaration& d : ds) {
    DeclStatus status = checkDeclaration(lib_, name_, trial, d, opts_);
    if (!status.ok) return status;
  }
  sig_ = std::move(trial);
  for (const Declaration& d : ds) lib_.theories[index_].decls.push_back(d);
  return DeclStatus{ds.empty() ? name_ : ds.front().name, true, std::nullopt, {}};
}

Ident resolveDependency(const Library& lib, const Ident& theory, const std::string& dep) {
  std::vector<const Theory*> closure = includeClosure(lib, theory);
  std::string module, local = dep;
  if (auto dot = dep.find('.'); dot != std::string::npos) {
    module = dep.substr(0, dot);
    local = dep.substr(dot + 1);
  }
  for (auto it = closure.rbegin(); it != closure.rend(); ++it) {
    const Theory* th = *it;
    if (!module.empty() && th->name.moduleName() != module) continue;
    if (const Declaration* d = th->find(th->declIdent(local))) return d->name;
  }
  throw Error(ErrorCode::UnknownIdent, "unresolved dependency " + dep, dep);
}

void finish(ImportResult& result, const std::vector<std::string>& docOrder,
            const ImportOptions& opts) {
  auto rank = [&](const Theory& th) {
    return std::find(docOrder.begin(), docOrder.end(), th.name.moduleName()) - docOrder.begin();
  };
  std::stable_sort(result.library.theories.begin(), result.library.theories.end(),
                   [&](const Theory& a, const Theory& b) { return rank(a) < rank(b); });
  result.report.imported = result.library.declarationCount();
  if (result.report.records > 0 && result.report.imported == 0 && !opts.allowEmpty)
    throw Error(ErrorCode::EmptyOutput,
                "document has " + std::to_string(result.report.records) +
                    " declaration records but none could be imported");
}

void skipTheory(ImportResult& result, const Ident& theory, std::size_t records, ErrorCode code,
                const std::string& message) {
  // Every record of the theory counts as failed.
  for (std::size_t i = 0; i < std::max<std::size_t>(records, 1); ++i)
    result.report.issues.push_back({theory, code, message});
}

}  // namespace oaf::importers
