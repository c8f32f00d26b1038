#include <algorithm>
#include <cctype>
#include <filesystem>
#include <set>

#include "oaf/importers.hpp"

namespace oaf {

namespace {

bool isTokenChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct Match {
  std::uint32_t line;
  std::uint32_t col;
};

// Every occurrence of `name` at token boundaries that is followed, after
// blanks, by one of the markers.
std::vector<Match> scan(const std::string& text, const std::string& name,
                        const std::vector<std::string>& markers) {
  std::vector<Match> out;
  std::uint32_t lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + start, end - start);
    ++lineNo;
    for (std::size_t pos = line.find(name); pos != std::string_view::npos;
         pos = line.find(name, pos + 1)) {
      std::size_t after = pos + name.size();
      if (pos > 0 && isTokenChar(line[pos - 1])) continue;
      if (after < line.size() && isTokenChar(line[after])) continue;
      std::size_t k = after;
      while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
      std::string_view rest = line.substr(k);
      bool marked = std::any_of(markers.begin(), markers.end(),
                                [&](const std::string& m) { return rest.starts_with(m); });
      if (marked) out.push_back({lineNo, static_cast<std::uint32_t>(pos + 1)});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string> candidateFiles(const Theory& th,
                                        const std::map<std::string, std::string>& sources) {
  std::vector<std::string> order;
  std::set<std::string> taken;
  auto take = [&](const std::string& f) {
    if (sources.count(f) && taken.insert(f).second) order.push_back(f);
  };
  std::set<std::string> referenced;
  for (const Declaration& d : th.decls)
    if (d.meta.sourceRef) referenced.insert(d.meta.sourceRef->file);
  for (const std::string& f : referenced) take(f);
  for (const auto& [f, _] : sources)
    if (std::filesystem::path(f).stem().string() == th.name.moduleName()) take(f);
  for (const auto& [f, _] : sources) take(f);
  return order;
}

}  // namespace

SourceScanResult recoverSourceRefs(const Library& lib,
                                   const std::map<std::string, std::string>& sources,
                                   const SourceScanOptions& opts) {
  SourceScanResult result{lib, {}};
  for (Theory& th : result.library.theories) {
    std::vector<std::string> files = candidateFiles(th, sources);
    for (Declaration& d : th.decls) {
      if (d.meta.sourceRef) continue;
      const std::string& local = d.name.name();
      std::optional<SourceRef> first;
      std::size_t hits = 0;
      for (const std::string& f : files) {
        std::vector<Match> ms = scan(sources.at(f), local, opts.markers);
        if (!ms.empty() && !first)
          first = SourceRef::point(f, ms[0].line, ms[0].col, static_cast<std::uint32_t>(local.size()));
        hits += ms.size();
      }
      if (!first) {
        result.report.missed.push_back(d.name);
        continue;
      }
      d.meta.sourceRef = first;
      result.report.recovered.push_back(d.name);
      if (hits > 1) result.report.collisions.push_back(d.name);
    }
  }
  return result;
}

std::string mangleFileName(std::string_view name) {
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (char c : name) {
    auto u = static_cast<unsigned char>(c);
    if ((u >= 'a' && u <= 'z') || (u >= '0' && u <= '9') || c == '.' || c == '_' || c == '-') {
      out += c;
    } else {
      out += '%';
      out += hex[u >> 4];
      out += hex[u & 15];
    }
  }
  return out;
}

}  // namespace oaf
