#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>

#include "rshds/certify.hpp"
#include "rshds/constructions.hpp"
#include "rshds/errors.hpp"
#include "rshds/io.hpp"
#include "rshds/params.hpp"

namespace py = pybind11;
using namespace rshds;

namespace {

// Reports cross the boundary as JSON text; the Python side parses them.
std::string reportsJson(const std::vector<CertReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(toJson(r));
  return out.dump();
}

FiniteGroup groupFromSpec(const std::string& spec) {
  return loadGroup(parseGroupSpec(spec), std::filesystem::current_path());
}

py::dict paramsDict(const ParameterSet& p) {
  py::dict d;
  d["h"] = p.h;
  d["v"] = p.v;
  d["k"] = p.k;
  d["lambda"] = p.lambda;
  d["m"] = p.m;
  return d;
}

py::dict candidateDict(const std::string& spec, const DifferenceSetCandidate& c) {
  py::dict d;
  d["group"] = spec;
  d["subgroup"] = c.subgroupH.members();
  d["elements"] = c.elements;
  d["params"] = paramsDict(c.params);
  d["provenance"] = std::string(toString(c.provenance));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Relative skew Hadamard difference sets: constructions and certificates";

  // Later registrations take precedence.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const FormatError& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const ValidationError& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("parameter_formulas", [](std::int64_t h) { return paramsDict(parameterFormulas(h)); }, py::arg("h"));
  m.def("m_bound", &mBound, py::arg("h"));

  m.def(
      "construct",
      [](const std::string& spec) {
        const GroupSpec s = parseGroupSpec(spec);
        if (s.kind == GroupSpec::Kind::Gnk) return candidateDict(spec, gnkDifferenceSet(s.n, s.k));
        if (s.kind == GroupSpec::Kind::C4n) return candidateDict(spec, c4nDifferenceSet(s.n));
        throw InvalidArgument("construct: spec must be gnk:n,k or c4n:n");
      },
      py::arg("spec"), "Difference set from the G_{n,k} or C_4^n construction.");

  m.def("group_order", [](const std::string& spec) { return groupFromSpec(spec).order(); }, py::arg("spec"));

  m.def(
      "multiply",
      [](const std::string& spec, Element a, Element b) {
        const FiniteGroup g = groupFromSpec(spec);
        if (a >= g.order() || b >= g.order()) throw InvalidArgument("multiply: element out of range");
        return g.multiply(a, b);
      },
      py::arg("spec"), py::arg("a"), py::arg("b"));

  m.def(
      "certify_json",
      [](const std::string& spec, const std::vector<Element>& elements, const std::string& subgroup,
         const std::vector<std::string>& checks) {
        const FiniteGroup g = groupFromSpec(spec);
        const Subgroup h = resolveSubgroupArgument(g, subgroup);
        return reportsJson(runChecks(g, h, elements, checks));
      },
      py::arg("spec"), py::arg("elements"), py::arg("subgroup") = "distinguished",
      py::arg("checks") = std::vector<std::string>{});

  m.def(
      "screen_json",
      [](const std::string& spec, std::int64_t h, const std::string& subgroup) {
        const FiniteGroup g = groupFromSpec(spec);
        std::optional<Subgroup> sub;
        if (!subgroup.empty()) sub = resolveSubgroupArgument(g, subgroup);
        return toJson(structuralTests(g, h, sub)).dump();
      },
      py::arg("spec"), py::arg("h"), py::arg("subgroup") = "");

  m.def(
      "hyperplane_matching",
      [](const std::string& spec, const std::string& subgroup) -> py::object {
        const FiniteGroup g = groupFromSpec(spec);
        const Subgroup h = resolveSubgroupArgument(g, subgroup, true);
        const auto a = findHyperplaneMatching(g, h, cosets(g, h));
        if (!a) return py::none();
        return candidateDict(spec, hyperplaneMatchingDifferenceSet(*a));
      },
      py::arg("spec"), py::arg("subgroup") = "auto");

  m.def(
      "search",
      [](const std::string& spec, const std::string& subgroup, unsigned workers, std::uint64_t budget,
         bool allowLargeGroups) {
        const FiniteGroup g = groupFromSpec(spec);
        const Subgroup h = resolveSubgroupArgument(g, subgroup);
        SearchOptions o;
        o.workers = workers;
        o.budget = budget;
        o.allowLargeGroups = allowLargeGroups;
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = exhaustiveSearch(g, h, o);
        }
        py::list found;
        for (const auto& c : r.found) found.append(c.elements);
        py::dict d;
        d["found"] = found;
        d["nodes"] = r.nodes;
        return d;
      },
      py::arg("spec"), py::arg("subgroup") = "auto", py::arg("workers") = 1, py::arg("budget") = 1'000'000'000ULL,
      py::arg("allow_large_groups") = false);

  m.def(
      "hadamard_matrix",
      [](const std::string& spec, const std::vector<Element>& elements) {
        return hadamardMatrix(groupFromSpec(spec), elements);
      },
      py::arg("spec"), py::arg("elements"));
}
