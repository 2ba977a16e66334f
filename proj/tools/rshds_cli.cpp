#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rshds/certify.hpp"
#include "rshds/constructions.hpp"
#include "rshds/errors.hpp"
#include "rshds/fixtures.hpp"
#include "rshds/io.hpp"

namespace fs = std::filesystem;
using namespace rshds;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct Globals {
  unsigned workers = 1;
  std::uint64_t budget = 1'000'000'000;
  bool budgetGiven = false;
  bool json = false;
  std::string out;
};

void emit(const Globals& g, const CertReport& r) {
  if (g.json) std::cout << toJson(r).dump(2) << "\n";
  else std::cout << toText(r);
}

std::string paramsLine(const ParameterSet& p) {
  return "(v,k,λ)=(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) + ")";
}

struct LoadedDset {
  DsetFile file;
  FiniteGroup group;
  Subgroup subgroupH;
};

LoadedDset loadDset(const std::string& path) {
  DsetFile d = readDset(path);
  FiniteGroup g = loadGroup(parseGroupSpec(d.group), fs::path(path).parent_path());
  Subgroup h = resolveDsetSubgroup(g, d);
  for (Element x : d.elements)
    if (x >= g.order()) throw FormatError("dset-v1: element " + std::to_string(x) + " out of range");
  return {std::move(d), std::move(g), std::move(h)};
}

DsetFile toDsetFile(const std::string& spec, const std::variant<std::string, std::vector<Element>>& subgroup,
                    const std::vector<Element>& elements) {
  return {spec, subgroup, elements};
}

std::variant<std::string, std::vector<Element>> subgroupField(const FiniteGroup& g, const Subgroup& h) {
  if (auto d = distinguishedSubgroup(g); d && *d == h) return std::string("distinguished");
  return generatingSet(h);
}

int cmdConstruct(const Globals& g, const std::string& specText) {
  const GroupSpec spec = parseGroupSpec(specText);
  DifferenceSetCandidate c = [&] {
    switch (spec.kind) {
      case GroupSpec::Kind::Gnk:
        return gnkDifferenceSet(spec.n, spec.k);
      case GroupSpec::Kind::C4n:
        return c4nDifferenceSet(spec.n);
      default:
        throw InvalidArgument("construct: spec must be gnk:n,k or c4n:n");
    }
  }();
  const CertReport ds = checkDifferenceSet(c.group, c.elements);
  std::cout << paramsLine(c.params) << "\n";
  const DsetFile file = toDsetFile(formatGroupSpec(spec), std::string("distinguished"), c.elements);
  if (!g.out.empty()) {
    writeDset(g.out, file);
    std::cout << "wrote " << c.elements.size() << " elements to " << g.out << "\n";
  } else {
    std::cout << dsetJson(file).dump() << "\n";
  }
  if (!ds.pass) {
    emit(g, ds);
    return kFail;
  }
  return kPass;
}

int cmdCertify(const Globals& g, const std::string& path, const std::vector<std::string>& checks) {
  for (const auto& c : checks)
    if (std::find(certificateNames().begin(), certificateNames().end(), c) == certificateNames().end())
      throw InvalidArgument("certify: unknown check '" + c + "'");
  const LoadedDset d = loadDset(path);
  bool all = true;
  for (const CertReport& r : runChecks(d.group, d.subgroupH, d.file.elements, checks)) {
    emit(g, r);
    all = all && r.pass;
  }
  return all ? kPass : kFail;
}

int cmdProfile(const Globals& g, const std::string& path) {
  const LoadedDset d = loadDset(path);
  const CertReport r = cosetProfile(d.group, d.subgroupH, d.file.elements);
  emit(g, r);
  return r.pass ? kPass : kFail;
}

int cmdHyperplaneMatching(const Globals& g, const std::string& specText, const std::string& subArg) {
  const GroupSpec spec = parseGroupSpec(specText);
  const FiniteGroup group = loadGroup(spec);
  const Subgroup h = resolveSubgroupArgument(group, subArg, true);
  const CosetDecomposition dec = cosets(group, h);
  const auto a = findHyperplaneMatching(group, h, dec);
  if (!a) {
    std::cout << "assignment: none\n";
    return kFail;
  }
  if (auto bad = verifyHyperplaneMatching(*a)) throw std::logic_error("hyperplane matching produced an invalid assignment: " + *bad);
  std::cout << "assignment:\n";
  for (std::size_t i = 1; i < dec.index(); ++i) {
    std::cout << "  coset " << i << " t=" << dec.transversal[i] << " partner=" << a->partner[i] << " normal=";
    const F2Vector nv = a->hyperplanes[i].normal;
    for (int b = 1; b <= nv.n; ++b) std::cout << nv.at(b);
    std::cout << "\n";
  }
  const DifferenceSetCandidate c = hyperplaneMatchingDifferenceSet(*a);
  const CertReport ds = checkDifferenceSet(group, c.elements);
  emit(g, ds);
  const DsetFile file = toDsetFile(formatGroupSpec(spec), subgroupField(group, h), c.elements);
  if (!g.out.empty()) {
    writeDset(g.out, file);
    std::cout << "wrote " << c.elements.size() << " elements to " << g.out << "\n";
  }
  return ds.pass ? kPass : kFail;
}

int cmdScreen(const Globals& g, const std::string& specText, std::int64_t h, const std::string& subArg) {
  const FiniteGroup group = loadGroup(parseGroupSpec(specText));
  std::optional<Subgroup> sub;
  if (!subArg.empty()) sub = resolveSubgroupArgument(group, subArg);
  const CertReport r = structuralTests(group, h, sub);
  emit(g, r);
  std::string verdicts;
  for (const char* t : {"T1", "T2", "T3", "T4"})
    verdicts += std::string(verdicts.empty() ? "" : ",") + (r.witnesses[t]["pass"].get<bool>() ? "pass" : "fail");
  std::cout << "verdicts: " << verdicts << "\n";
  return r.pass ? kPass : kFail;
}

int cmdSearch(const Globals& g, const std::string& specText, const std::string& subArg) {
  const GroupSpec spec = parseGroupSpec(specText);
  const FiniteGroup group = loadGroup(spec);
  const Subgroup h = resolveSubgroupArgument(group, subArg);
  SearchOptions opts;
  opts.budget = g.budget;
  opts.allowLargeGroups = g.budgetGiven;
  opts.workers = g.workers;
  if (h.order() == 2) std::cout << "warning: degenerate h = 2: lambda = 0\n";
  SearchResult res;
  try {
    res = exhaustiveSearch(group, h, opts);
  } catch (const BudgetExceeded& e) {
    std::cout << "budget exceeded: nodes=" << e.nodes() << " found=" << e.found() << "\n";
    return kBudget;
  }
  std::cout << "group: " << formatGroupSpec(spec) << " h=" << h.order() << "\n";
  std::cout << "found: " << res.found.size() << "\n";
  std::cout << "nodes: " << res.nodes << "\n";
  for (const auto& c : res.found) {
    std::cout << "  D =";
    for (Element x : c.elements) std::cout << " " << x;
    std::cout << "\n";
  }
  if (!g.out.empty() && !res.found.empty()) {
    writeDset(g.out, toDsetFile(formatGroupSpec(spec), subgroupField(group, h), res.found.front().elements));
    std::cout << "wrote first set to " << g.out << "\n";
  }
  return kPass;
}

int cmdQuotient(const Globals& g, const std::string& path, const std::string& nArg) {
  const LoadedDset d = loadDset(path);
  std::vector<Subgroup> kernels;
  if (nArg == "all") kernels = screeningKernels(d.group);
  else kernels.push_back(resolveSubgroupArgument(d.group, nArg));
  bool all = true;
  for (const Subgroup& n : kernels) {
    const CertReport r = quotientCheck(d.group, d.subgroupH, d.file.elements, n);
    if (!g.json) std::cout << "N = <" << [&] {
      std::string s;
      for (Element x : generatingSet(n)) s += (s.empty() ? "" : ",") + std::to_string(x);
      return s;
    }() << "> of order " << n.order() << "\n";
    emit(g, r);
    all = all && r.pass;
  }
  return all ? kPass : kFail;
}

int cmdParams(std::int64_t h) {
  const ParameterSet p = parameterFormulas(h);
  std::cout << paramsLine(p) << "\n";
  std::cout << "m <= " << mBound(h) << "\n";
  return kPass;
}

int cmdExportHadamard(const Globals& g, const std::string& path) {
  const LoadedDset d = loadDset(path);
  const CertReport r = runChecks(d.group, d.subgroupH, d.file.elements, {"hadamard"}).front();
  if (!r.pass) {
    emit(g, r);
    throw PreconditionError("export-hadamard: input is not a certified m = 0 difference set");
  }
  std::ostringstream text;
  writeHadamard(text, hadamardMatrix(d.group, d.file.elements));
  if (g.out.empty()) {
    std::cout << text.str();
  } else {
    writeTextFile(g.out, text.str());
    std::cout << "wrote " << d.group.order() << "x" << d.group.order() << " matrix to " << g.out << "\n";
  }
  return kPass;
}

int cmdDumpTable(const Globals& g, const std::string& specText, const std::string& builtin) {
  FiniteGroup group = [&] {
    if (!builtin.empty()) {
      auto b = builtinGroup(builtin);
      if (!b) throw InvalidArgument("dump-table: unknown builtin '" + builtin + "'");
      return *b;
    }
    if (specText.empty()) throw InvalidArgument("dump-table: give a group spec or --builtin");
    return loadGroup(parseGroupSpec(specText));
  }();
  const std::string text = cayleyJson(group).dump() + "\n";
  if (g.out.empty()) std::cout << text;
  else {
    writeTextFile(g.out, text);
    std::cout << "wrote order " << group.order() << " table to " << g.out << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and certify relative skew Hadamard difference sets"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--workers", g.workers, "Worker threads for the search")->check(CLI::Range(1U, 256U));
  auto* budgetOpt = app.add_option("--budget", g.budget, "Search node budget");
  app.add_flag("--json", g.json, "Print reports as JSON");
  app.add_option("--out", g.out, "Output path");

  std::string spec, path, sub, builtin;
  std::vector<std::string> checks;
  std::int64_t h = 0;

  auto* construct = app.add_subcommand("construct", "Build a difference set (gnk:n,k or c4n:n)");
  construct->add_option("spec", spec)->required();
  auto* certify = app.add_subcommand("certify", "Run certificates on a dset-v1 file");
  certify->add_option("dset", path)->required();
  certify->add_option("--checks", checks, "Subset of dset,rshds,profile,schur,spectrum,hadamard")->delimiter(',');
  auto* profile = app.add_subcommand("profile", "Coset profile of a dset-v1 file");
  profile->add_option("dset", path)->required();
  auto* matching = app.add_subcommand("thm81", "Hyperplane-matching construction");
  matching->add_option("spec", spec)->required();
  matching->add_option("subgroup", sub, "distinguished | auto | gens=i,j,...")->required();
  auto* screen = app.add_subcommand("screen", "Structural tests T1-T4");
  screen->add_option("spec", spec)->required();
  screen->add_option("hsize", h, "Order h of the candidate subgroup")->required();
  screen->add_option("--subgroup", sub, "Candidate H (distinguished | auto | gens=...)");
  auto* search = app.add_subcommand("search", "Exhaustive search with G = D + D^-1 + H");
  search->add_option("spec", spec)->required();
  search->add_option("subgroup", sub)->required();
  auto* quotientCmd = app.add_subcommand("quotient", "Quotient distribution check");
  quotientCmd->add_option("dset", path)->required();
  quotientCmd->add_option("normal", sub, "Generators of N, or `all` for every screening kernel")->required();
  auto* params = app.add_subcommand("params", "Parameters for a given h");
  params->add_option("hsize", h, "Order h of the candidate subgroup")->required();
  auto* exportH = app.add_subcommand("export-hadamard", "Write the +-1 matrix 2D - J");
  exportH->add_option("dset", path)->required();
  auto* dump = app.add_subcommand("dump-table", "Write a cayley-v1 table");
  dump->add_option("spec", spec);
  dump->add_option("--builtin", builtin, "Fixture group name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  g.budgetGiven = budgetOpt->count() > 0;

  try {
    if (*construct) return cmdConstruct(g, spec);
    if (*certify) return cmdCertify(g, path, checks);
    if (*profile) return cmdProfile(g, path);
    if (*matching) return cmdHyperplaneMatching(g, spec, sub);
    if (*screen) return cmdScreen(g, spec, h, sub);
    if (*search) return cmdSearch(g, spec, sub);
    if (*quotientCmd) return cmdQuotient(g, path, sub);
    if (*params) return cmdParams(h);
    if (*exportH) return cmdExportHadamard(g, path);
    if (*dump) return cmdDumpTable(g, spec, builtin);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const OverflowError& e) {
    std::cerr << "error: arithmetic overflow: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
