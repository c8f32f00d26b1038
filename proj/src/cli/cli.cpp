#include "oaf/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "oaf/encodings.hpp"
#include "oaf/importers.hpp"
#include "oaf/kernel.hpp"
#include "oaf/morphisms.hpp"
#include "oaf/omdoc.hpp"
#include "oaf/ontology.hpp"
#include "oaf/syntax.hpp"

namespace fs = std::filesystem;

namespace oaf::cli {

namespace {

struct Config {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;
  std::string split;
  std::string format;
  bool eta = true;
  bool includeProofUses = false;
  std::size_t reductionBudget = 100000;
  std::string sourceDir;
  bool allowEmpty = false;
  bool skipCheck = false;
  std::string id;
  std::string kind;
  std::string morphism;
  std::string theorem;

  KernelOptions kernel() const {
    KernelOptions k;
    k.eta = eta;
    k.reductionBudget = reductionBudget;
    return k;
  }
};

struct Loaded {
  Library lib;
  std::vector<ImportIssue> issues;
  std::size_t records = 0;
};

std::string readBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Malformed, "cannot read " + path, path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool endsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string formatOf(const Config& cfg, const std::string& path) {
  if (!cfg.format.empty()) return cfg.format;
  if (endsWith(path, ".omdoc.xml") || endsWith(path, ".omdoc")) return "omdoc";
  if (endsWith(path, ".json")) return "toyhol-json";
  if (endsWith(path, ".xml")) return "toyset-xml";
  throw Error(ErrorCode::Malformed, "cannot tell the format of " + path + "; use --format", path);
}

constexpr const char* kIndexFile = "index.txt";

// A directory input stands for the files listed in its index, or else its
// `*.omdoc.xml` files in name order.
std::vector<std::string> expandInputs(const std::vector<std::string>& inputs) {
  std::vector<std::string> out;
  for (const std::string& in : inputs) {
    if (!fs::is_directory(in)) {
      out.push_back(in);
      continue;
    }
    if (fs::path index = fs::path(in) / kIndexFile; fs::exists(index)) {
      std::istringstream lines(readBytes(index.string()));
      for (std::string line; std::getline(lines, line);)
        if (!line.empty()) out.push_back((fs::path(in) / line).string());
      continue;
    }
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(in))
      if (entry.is_regular_file() && endsWith(entry.path().string(), ".omdoc.xml"))
        files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    out.insert(out.end(), files.begin(), files.end());
  }
  return out;
}

void merge(Library& into, Library part, bool first) {
  if (first) into.ns = part.ns;
  for (Theory& th : part.theories) {
    if (into.findTheory(th.name) && !std::any_of(into.dependencies.begin(), into.dependencies.end(),
                                                 [&](const Theory& d) { return d.name == th.name; }))
      throw Error(ErrorCode::DuplicateName, "theory " + th.name.str() + " defined twice",
                  th.name.str());
    into.theories.push_back(std::move(th));
  }
  for (Morphism& m : part.morphisms) {
    if (into.findMorphism(m.name))
      throw Error(ErrorCode::DuplicateName, "morphism " + m.name.str() + " defined twice",
                  m.name.str());
    into.morphisms.push_back(std::move(m));
  }
}

std::map<std::string, std::string> readSources(const std::string& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorCode::Malformed, "not a directory: " + dir, dir);
  std::map<std::string, std::string> sources;
  for (const auto& entry : fs::recursive_directory_iterator(dir))
    if (entry.is_regular_file())
      sources.emplace(fs::relative(entry.path(), dir).generic_string(),
                      readBytes(entry.path().string()));
  return sources;
}

Loaded load(const Config& cfg, std::ostream& err) {
  Loaded out;
  out.lib.dependencies = builtinLogics();
  ImportOptions iopts;
  iopts.allowEmpty = true;  // the guard below covers every format
  iopts.kernel = cfg.kernel();
  bool nonEmptyFile = false;
  std::vector<std::string> files = expandInputs(cfg.inputs);
  if (files.empty()) throw Error(ErrorCode::Malformed, "no input files");
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::string bytes = readBytes(files[i]);
    if (bytes.find_first_not_of(" \t\r\n") != std::string::npos) nonEmptyFile = true;
    std::string format = formatOf(cfg, files[i]);
    Library part;
    if (format == "omdoc") {
      part = omdoc::parse(bytes);
      out.records += part.declarationCount();
    } else if (format == "toyhol-json" || format == "toyset-xml") {
      ImportResult r = format == "toyhol-json" ? importToyhol(parseToyhol(bytes), iopts)
                                               : importToyset(parseToyset(bytes), iopts);
      out.records += r.report.records;
      out.issues.insert(out.issues.end(), r.report.issues.begin(), r.report.issues.end());
      part = std::move(r.library);
    } else {
      throw Error(ErrorCode::Malformed, "unknown format " + format, format);
    }
    merge(out.lib, std::move(part), i == 0);
  }
  if (!cfg.sourceDir.empty()) {
    SourceScanResult scan = recoverSourceRefs(out.lib, readSources(cfg.sourceDir));
    out.lib = std::move(scan.library);
    err << "sourceRefsRecovered\t" << scan.report.recovered.size() << "\n";
  }
  if (nonEmptyFile && out.lib.declarationCount() == 0 && !cfg.allowEmpty)
    throw Error(ErrorCode::EmptyOutput,
                "input is not empty but yields no declarations (pass --allow-empty to accept)");
  return out;
}

void writeOutput(const Config& cfg, const std::string& bytes, std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << bytes;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f || !(f << bytes)) throw Error(ErrorCode::Malformed, "cannot write " + cfg.output, cfg.output);
}

void printFailure(std::ostream& err, const Ident& subject, ErrorCode code, const std::string& msg) {
  err << "failure\t" << subject.str() << "\t" << errorCodeName(code) << "\t" << msg << "\n";
}

// Accepts `ns?mod?name`, `Module.name` or a bare local name that is unique.
Ident resolveDeclaration(const Library& lib, const std::string& text) {
  if (text.find(Ident::kSeparator) != std::string::npos) return Ident::parse(text);
  std::vector<Ident> hits;
  auto dot = text.find('.');
  for (const Theory& th : lib.theories)
    for (const Declaration& d : th.decls) {
      bool qualified = dot != std::string::npos && th.name.moduleName() == text.substr(0, dot) &&
                       d.name.name() == text.substr(dot + 1);
      if (qualified || d.name.name() == text) hits.push_back(d.name);
    }
  if (hits.size() == 1) return hits[0];
  if (hits.empty()) throw Error(ErrorCode::UnknownIdent, "no declaration named " + text, text);
  throw Error(ErrorCode::UnknownIdent, "ambiguous name " + text + "; use ns?module?name", text);
}

const Morphism& resolveMorphism(const Library& lib, const std::string& text) {
  for (const Morphism& m : lib.morphisms)
    if (m.name.str() == text || m.name.moduleName() == text) return m;
  throw Error(ErrorCode::UnknownIdent, "no morphism named " + text, text);
}

int runCheck(const Config& cfg, std::ostream& out, std::ostream& err) {
  Loaded in = load(cfg, err);
  const Library& lib = in.lib;
  KernelOptions kopts = cfg.kernel();
  std::vector<std::future<CheckReport>> theories, morphisms;
  for (const Theory& th : lib.theories)
    theories.push_back(std::async(std::launch::async,
                                  [&lib, &th, kopts] { return checkTheory(lib, th.name, kopts); }));
  for (const Morphism& m : lib.morphisms)
    morphisms.push_back(std::async(std::launch::async,
                                   [&lib, &m, kopts] { return checkMorphism(lib, m, kopts); }));

  bool failed = false;
  std::size_t totals[6] = {0, 0, 0, 0, 0, 0};
  out << "theory\tdeclarations\tchecked\tfailed\tomitted\tdependsOn\tterm\n";
  for (std::size_t i = 0; i < lib.theories.size(); ++i) {
    const Theory& th = lib.theories[i];
    CheckReport report = theories[i].get();
    std::size_t issues = 0;
    for (const ImportIssue& is : in.issues)
      if (is.subject.modulePath() == th.name) {
        ++issues;
        printFailure(err, is.subject, is.code, is.message);
      }
    std::size_t decls = th.decls.size() + issues;
    std::size_t bad = issues + (report.fatal ? th.decls.size() : report.failed());
    std::size_t good = decls - bad;
    if (report.fatal) printFailure(err, th.name, *report.fatal, report.fatalMessage);
    for (const DeclStatus& s : report.entries)
      if (!s.ok) printFailure(err, s.name, s.error.value_or(ErrorCode::Mismatch), s.message);
    std::size_t styles[3] = {0, 0, 0};
    for (const Declaration& d : th.decls)
      if (d.proof) ++styles[static_cast<int>(proofStyle(*d.proof))];
    out << th.name.str() << "\t" << decls << "\t" << good << "\t" << bad << "\t" << styles[0]
        << "\t" << styles[1] << "\t" << styles[2] << "\n";
    std::size_t row[6] = {decls, good, bad, styles[0], styles[1], styles[2]};
    for (int k = 0; k < 6; ++k) totals[k] += row[k];
    failed = failed || bad > 0;
  }
  // Issues of theories that were skipped entirely.
  for (const ImportIssue& is : in.issues)
    if (!lib.findTheory(is.subject.isModule() ? is.subject : is.subject.modulePath())) {
      printFailure(err, is.subject, is.code, is.message);
      ++totals[0];
      ++totals[2];
      failed = true;
    }
  out << "total";
  for (std::size_t t : totals) out << "\t" << t;
  out << "\n";
  for (std::size_t i = 0; i < lib.morphisms.size(); ++i) {
    CheckReport report = morphisms[i].get();
    if (report.fatal) printFailure(err, report.subject, *report.fatal, report.fatalMessage);
    for (const DeclStatus& s : report.entries)
      if (!s.ok) printFailure(err, s.name, s.error.value_or(ErrorCode::Mismatch), s.message);
    out << "morphism\t" << report.subject.str() << "\t" << report.passed() << "\t"
        << (report.fatal ? 1 : report.failed()) << "\n";
    failed = failed || !report.ok();
  }
  return failed ? kCheckFailed : kOk;
}

int runImport(const Config& cfg, std::ostream& out, std::ostream& err) {
  Loaded in = load(cfg, err);
  std::string bytes = omdoc::serialize(in.lib);
  writeOutput(cfg, bytes, out);
  err << "records\t" << in.records << "\n"
      << "imported\t" << in.lib.declarationCount() << "\n"
      << "issues\t" << in.issues.size() << "\n";
  for (const ImportIssue& is : in.issues) printFailure(err, is.subject, is.code, is.message);
  return in.issues.empty() ? kOk : kCheckFailed;
}

int runExportOmdoc(const Config& cfg, std::ostream& out, std::ostream& err) {
  Loaded in = load(cfg, err);
  if (cfg.split.empty()) {
    writeOutput(cfg, omdoc::serialize(in.lib), out);
    return kOk;
  }
  fs::create_directories(cfg.split);
  std::map<std::string, std::string> files;
  std::string index;
  auto part = [&](const std::string& module, Library lib) {
    std::string name = mangleFileName(module) + ".omdoc.xml";
    if (!files.emplace(name, omdoc::serialize(lib)).second)
      throw Error(ErrorCode::DuplicateName, "two modules map to file " + name, name);
    index += name + "\n";
  };
  for (const Theory& th : in.lib.theories) {
    Library lib{in.lib.ns, {th}, {}, builtinLogics()};
    for (const Theory& other : in.lib.theories)
      if (other.name != th.name) lib.dependencies.push_back(other);
    part(th.name.moduleName(), std::move(lib));
  }
  for (const Morphism& m : in.lib.morphisms) {
    Library lib{in.lib.ns, {}, {m}, builtinLogics()};
    for (const Theory& th : in.lib.theories) lib.dependencies.push_back(th);
    part(m.name.moduleName(), std::move(lib));
  }
  for (const auto& [name, bytes] : files) {
    std::ofstream f(fs::path(cfg.split) / name, std::ios::binary);
    if (!f || !(f << bytes)) throw Error(ErrorCode::Malformed, "cannot write " + name, name);
    out << name << "\n";
  }
  std::ofstream f(fs::path(cfg.split) / kIndexFile, std::ios::binary);
  if (!f || !(f << index)) throw Error(ErrorCode::Malformed, "cannot write index", kIndexFile);
  return kOk;
}

ontology::TripleStore triplesOf(const Config& cfg, const Library& lib) {
  return ontology::extractTriples(lib, {!cfg.skipCheck, cfg.includeProofUses});
}

int runExportRdf(const Config& cfg, std::ostream& out, std::ostream& err) {
  Loaded in = load(cfg, err);
  writeOutput(cfg, ontology::writeNTriples(triplesOf(cfg, in.lib)), out);
  return kOk;
}

int runDeps(const Config& cfg, std::ostream& out, std::ostream& err, bool reverse) {
  Loaded in = load(cfg, err);
  Ident id = resolveDeclaration(in.lib, cfg.id);
  ontology::TripleStore store = triplesOf(cfg, in.lib);
  std::set<Ident> result;
  if (reverse) {
    std::optional<DeclKind> kind;
    if (!cfg.kind.empty()) {
      kind = parseDeclKind(cfg.kind);
      if (!kind) throw Error(ErrorCode::Malformed, "unknown kind " + cfg.kind, cfg.kind);
    }
    result = ontology::usedBy(store, id, kind);
  } else {
    result = ontology::transitiveUses(store, id);
  }
  std::ostringstream s;
  for (const Ident& r : result) s << r.str() << "\n";
  writeOutput(cfg, s.str(), out);
  return kOk;
}

int runTranslate(const Config& cfg, std::ostream& out, std::ostream& err) {
  Loaded in = load(cfg, err);
  const Morphism& m = resolveMorphism(in.lib, cfg.morphism);
  Ident th = resolveDeclaration(in.lib, cfg.theorem);
  const Declaration* d = nullptr;
  for (const Theory* t : includeClosure(in.lib, m.from))
    if (const Declaration* hit = t->find(th)) d = hit;
  if (d == nullptr || !d->type)
    throw Error(ErrorCode::UnknownIdent,
                th.str() + " is not a typed declaration of " + m.from.str(), th.str());
  CheckReport report = checkMorphism(in.lib, m, cfg.kernel());
  if (!report.ok()) {
    if (report.fatal) printFailure(err, m.name, *report.fatal, report.fatalMessage);
    for (const DeclStatus& s : report.entries)
      if (!s.ok) printFailure(err, s.name, s.error.value_or(ErrorCode::Mismatch), s.message);
    return kCheckFailed;
  }
  writeOutput(cfg, printTerm(translate(in.lib, m, *d->type)) + "\n", out);
  return kOk;
}

int runStats(const Config& cfg, std::ostream& out, std::ostream& err) {
  Loaded in = load(cfg, err);
  const Library& lib = in.lib;
  std::map<DeclKind, std::size_t> kinds;
  std::size_t styles[3] = {0, 0, 0}, unproved = 0, refs = 0;
  for (const Theory& th : lib.theories)
    for (const Declaration& d : th.decls) {
      ++kinds[d.meta.kind];
      if (d.proof) ++styles[static_cast<int>(proofStyle(*d.proof))];
      else ++unproved;
      if (d.meta.sourceRef) ++refs;
    }
  std::size_t decls = lib.declarationCount();
  std::ostringstream s;
  s << "theories\t" << lib.theories.size() << "\n"
    << "morphisms\t" << lib.morphisms.size() << "\n"
    << "declarations\t" << decls << "\n";
  for (DeclKind k : {DeclKind::Type, DeclKind::Constant, DeclKind::Definition, DeclKind::Axiom,
                     DeclKind::Theorem, DeclKind::PatternInstance})
    s << "kind." << declKindName(k) << "\t" << kinds[k] << "\n";
  for (ProofStyle p : {ProofStyle::Omitted, ProofStyle::DependsOn, ProofStyle::Term})
    s << "proof." << proofStyleName(p) << "\t" << styles[static_cast<int>(p)] << "\n";
  s << "proof.none\t" << unproved << "\n"
    << "rdfTriples\t" << triplesOf(cfg, lib).size() << "\n"
    << "sourceRefs\t" << refs << "\n";
  char pct[32];
  std::snprintf(pct, sizeof pct, "%.1f", decls == 0 ? 0.0 : 100.0 * double(refs) / double(decls));
  s << "sourceRefCoverage\t" << pct << "\n";
  writeOutput(cfg, s.str(), out);
  return kOk;
}

void commonOptions(CLI::App* sub, Config& cfg) {
  sub->add_option("inputs", cfg.inputs, "Input files (directories: their *.omdoc.xml files)")
      ->required();
  sub->add_option("--format", cfg.format, "Input format (default: by file extension)")
      ->check(CLI::IsMember({"toyhol-json", "toyset-xml", "omdoc"}))
      ->envname("OAF_FORMAT");
  sub->add_option("-o,--output", cfg.output, "Output file (default: stdout)")->envname("OAF_OUTPUT");
  sub->add_flag("--eta,!--no-eta", cfg.eta, "Eta conversion in the kernel (default on)")
      ->envname("OAF_ETA");
  sub->add_flag("--include-proof-uses", cfg.includeProofUses,
                "Count constants of proof terms as ulo:uses")
      ->envname("OAF_INCLUDE_PROOF_USES");
  sub->add_option("--reduction-budget", cfg.reductionBudget, "Kernel reduction step budget")
      ->check(CLI::PositiveNumber)
      ->envname("OAF_REDUCTION_BUDGET");
  sub->add_option("--source-dir", cfg.sourceDir, "Recover missing source references from here")
      ->envname("OAF_SOURCE_DIR");
  sub->add_flag("--allow-empty", cfg.allowEmpty, "Accept input that yields no declarations")
      ->envname("OAF_ALLOW_EMPTY");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Library export toolchain: import, check, export and query formal libraries", "oaf"};
  app.require_subcommand(1, 1);
  struct Command {
    const char* name;
    const char* help;
  };
  const std::vector<Command> commands{
      {"check", "Check every theory and morphism; per-theory counts"},
      {"import", "Import and write the library as OMDoc; import report on stderr"},
      {"export-omdoc", "Write OMDoc, one file or one file per module (--split)"},
      {"export-rdf", "Write the identifier-level triples as N-Triples"},
      {"deps", "Everything a declaration transitively uses"},
      {"used-by", "Every declaration that transitively uses a declaration"},
      {"translate", "Translate a statement along a morphism"},
      {"stats", "Library statistics as key<TAB>value lines"},
  };
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    commonOptions(sub, cfg);
    sub->callback([&cfg, name = std::string(c.name)] { cfg.command = name; });
    std::string n = c.name;
    if (n == "export-omdoc")
      sub->add_option("--split", cfg.split, "Directory for one file per theory and morphism")
          ->envname("OAF_SPLIT");
    if (n == "export-rdf" || n == "deps" || n == "used-by" || n == "stats")
      sub->add_flag("--skip-check", cfg.skipCheck, "Record theories as unchecked")
          ->envname("OAF_SKIP_CHECK");
    if (n == "deps" || n == "used-by")
      sub->add_option("--id", cfg.id, "Declaration: ns?module?name, Module.name or unique name")
          ->required();
    if (n == "used-by")
      sub->add_option("--kind", cfg.kind, "Only declarations of this kind");
    if (n == "translate") {
      sub->add_option("--morphism", cfg.morphism, "Morphism name")->required();
      sub->add_option("--theorem", cfg.theorem, "Declaration of the source theory")->required();
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kFormatError;
  }

  try {
    if (cfg.command == "check") return runCheck(cfg, out, err);
    if (cfg.command == "import") return runImport(cfg, out, err);
    if (cfg.command == "export-omdoc") return runExportOmdoc(cfg, out, err);
    if (cfg.command == "export-rdf") return runExportRdf(cfg, out, err);
    if (cfg.command == "deps") return runDeps(cfg, out, err, false);
    if (cfg.command == "used-by") return runDeps(cfg, out, err, true);
    if (cfg.command == "translate") return runTranslate(cfg, out, err);
    if (cfg.command == "stats") return runStats(cfg, out, err);
  } catch (const Error& e) {
    err << "error\t" << errorCodeName(e.code()) << "\t" << e.detail() << "\t" << e.what() << "\n";
    return kFormatError;
  } catch (const std::exception& e) {
    err << "error\tInternal\t\t" << e.what() << "\n";
    return kFormatError;
  }
  return kFormatError;
}

}  // namespace oaf::cli
