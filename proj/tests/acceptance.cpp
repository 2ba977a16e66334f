// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "oracles.hpp"
#include "rshds/certify.hpp"
#include "rshds/constructions.hpp"
#include "rshds/errors.hpp"
#include "rshds/fixtures.hpp"
#include "rshds/io.hpp"
#include "rshds/params.hpp"

using namespace rshds;

namespace {

struct Failed {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failed{why};
}

template <class F>
bool throws(F&& f) {
  try {
    f();
  } catch (const std::exception&) {
    return true;
  }
  return false;
}

/// Full certificate battery for an m = 0 candidate, checked against the oracle.
void certifyCandidate(const DifferenceSetCandidate& c, const ParameterSet& want) {
  const std::string tag = c.group.describe();
  const auto ds = checkDifferenceSet(c.group, c.elements);
  expect(ds.pass && ds.params.k == want.k && ds.params.lambda == want.lambda, tag + ": dset");
  expect(oracle::isDifferenceSet(c.group, c.elements, want.lambda), tag + ": oracle tally");
  const auto rs = checkRSHDS(c.group, c.subgroupH, c.elements);
  expect(rs.pass && rs.params == want && rs.witnesses["m"] == 0, tag + ": rshds");
  const auto prof = cosetProfile(c.group, c.subgroupH, c.elements);
  Json expected = Json::array({0});
  for (std::int64_t i = 1; i < want.h; ++i) expected.push_back(want.h / 2);
  expect(prof.pass && prof.witnesses["profile"] == expected, tag + ": coset profile");
}

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    body();
  } catch (const Failed& f) {
    ok = false;
    detail = f.why;
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << (ok ? "PASS" : "FAIL") << "  " << id << ". " << name << " (" << timing << ")";
  if (!ok) std::cout << ": " << detail;
  std::cout << std::endl;
  if (!ok) ++failures;
}

}  // namespace

int main() {
  criterion(1, "parameter law", [] {
    for (std::int64_t h : {4, 6, 8, 16}) {
      const auto p = parameterFormulas(h);
      expect(p.v == h * h && p.k == h * (h - 1) / 2 && p.lambda == h * (h - 2) / 4 && p.m == 0,
             "formulas at h=" + std::to_string(h));
    }
    expect(throws([] { parameterFormulas(5); }), "odd h accepted");
  });

  criterion(2, "G_{2,0} end to end", [] {
    const auto c = gnkDifferenceSet(2, 0);
    certifyCandidate(c, {4, 16, 6, 2, 0});
  });

  criterion(3, "G_{3,0} and G_{3,1} certificates", [] {
    for (int k : {0, 1}) certifyCandidate(gnkDifferenceSet(3, k), {8, 64, 28, 12, 0});
  });

  criterion(4, "G_{4,0..2} certificates", [] {
    for (int k : {0, 1, 2}) certifyCandidate(gnkDifferenceSet(4, k), {16, 256, 120, 56, 0});
  });

  criterion(5, "Schur ring closure", [] {
    for (auto [n, k] : {std::pair{2, 0}, std::pair{3, 1}}) {
      const auto c = gnkDifferenceSet(n, k);
      const auto [r, s] = checkSchurRing(c.group, c.subgroupH, c.elements);
      expect(r.pass, c.group.describe() + ": schur report");
      for (const auto& row : s.constants)
        for (const auto& entry : row)
          for (std::int64_t v : entry) expect(v >= 0, "negative structure constant");
      const std::int64_t lam = c.params.lambda, kk = c.params.k;
      expect(s.constants[2][3] == std::array<std::int64_t, 4>{kk, lam, lam, lam}, "D D^-1 coordinates");
    }
    const auto c = gnkDifferenceSet(2, 0);
    expect(c.params.lambda == 2 && c.params.k == 6, "(lambda,k) at h=4");
    expect(gnkDifferenceSet(3, 1).params.lambda == 12, "(lambda,k) at h=8");
  });

  criterion(6, "spectrum", [] {
    const std::vector<std::pair<std::pair<int, int>, Json>> cases{{{2, 0}, Json::array({16, 0, 0, 192})},
                                                                  {{3, 1}, Json::array({64, 0, 0, 21504})}};
    for (const auto& [nk, traces] : cases) {
      const auto c = gnkDifferenceSet(nk.first, nk.second);
      const auto r = spectrum(c.group, c.subgroupH, c.elements);
      expect(r.pass, c.group.describe() + ": spectrum report");
      expect(r.witnesses["traces"] == traces, c.group.describe() + ": traces " + r.witnesses["traces"].dump());
      for (const auto& [name, nonzero] : r.witnesses["divisorsNonzero"].items())
        expect(nonzero == true, "divisor annihilates: " + name);
    }
  });

  criterion(7, "Hadamard matrices", [] {
    const auto dir = std::filesystem::temp_directory_path() / "rshds_acceptance";
    for (auto [n, k] : {std::pair{2, 0}, std::pair{3, 0}}) {
      const auto c = gnkDifferenceSet(n, k);
      expect(checkHadamard(c.group, c.subgroupH, c.elements).pass, c.group.describe() + ": hadamard report");
      const auto path = dir / ("h" + std::to_string(c.params.h) + ".txt");
      std::filesystem::create_directories(dir);
      {
        std::ofstream out(path);
        writeHadamard(out, hadamardMatrix(c.group, c.elements));
      }
      std::ifstream in(path);
      const auto m = readHadamard(in);
      const std::int64_t h2 = c.params.h * c.params.h;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
          std::int64_t dot = 0;
          for (std::size_t l = 0; l < m.size(); ++l) dot += m[i][l] * m[j][l];
          expect(dot == (i == j ? h2 : 0), "M M^T entry from file");
        }
    }
    std::filesystem::remove_all(dir);
  });

  criterion(8, "quotient distributions", [] {
    const auto c = gnkDifferenceSet(2, 0);
    const auto kernels = normalSubgroupsOfPrimeIndex(c.group);
    expect(kernels.size() == 3, "three index-2 subgroups");
    for (const auto& k : kernels) {
      expect(c.subgroupH.isSubsetOf(k.subgroup), "H inside kernel");
      int meet = 0;
      for (Element x : c.elements) meet += k.subgroup.contains(x);
      expect(meet == 2, "kernel meets D in lambda points");
      expect(quotientCheck(c.group, c.subgroupH, c.elements, k.subgroup).pass, "prime-index report");
    }
    const auto c3 = gnkDifferenceSet(3, 0);
    bool sawC22 = false;
    for (const Subgroup& s : subgroupsOfOrder(c3.group, 16)) {
      if (!isNormal(c3.group, s) || !c3.subgroupH.isSubsetOf(s)) continue;
      const auto r = quotientCheck(c3.group, c3.subgroupH, c3.elements, s);
      if (r.witnesses["quotientType"] == "C2^2") {
        sawC22 = true;
        expect(r.pass && r.witnesses["profile"]["x"] == Json::array({4, 8, 8, 8}), "C2^2 profile");
      }
      if (r.witnesses["quotientType"] == "C4") expect(r.pass && r.witnesses.contains("family"), "C4 family");
    }
    expect(sawC22, "no C2^2 quotient containing H");
    for (const Subgroup& s : subgroupsOfOrder(c.group, 4)) {
      if (!isNormal(c.group, s)) continue;
      const auto r = quotientCheck(c.group, c.subgroupH, c.elements, s);
      if (r.witnesses["quotientType"] == "C4") expect(r.pass && r.witnesses.contains("family"), "C4 family at h=4");
    }
  });

  criterion(9, "hyperplane-matching construction", [] {
    for (const FiniteGroup& g : {c4PowerGroup(2), elementaryAbelian2(4)}) {
      const Subgroup h = resolveSubgroupArgument(g, "auto", true);
      const auto a = findHyperplaneMatching(g, h, cosets(g, h));
      expect(a.has_value(), g.describe() + ": assignment");
      expect(!verifyHyperplaneMatching(*a), "assignment verifies");
      const auto d = hyperplaneMatchingDifferenceSet(*a);
      const auto inv = oracle::inverseSet(g, d.elements);
      expect(std::vector<Element>(inv.begin(), inv.end()) == d.elements, "D = D^-1");
      const auto r = checkDifferenceSet(g, d.elements);
      expect(r.pass && r.params.v == 16 && r.params.k == 6 && r.params.lambda == 2, "(16,6,2)");
    }
    for (int n = 2; n <= 3; ++n) {
      const auto why = verifyHyperplaneMatching(kappaAssignment(n));
      expect(!why, "kappa assignment n=" + std::to_string(n) + ": " + why.value_or(""));
    }
  });

  criterion(10, "pairing involutions", [] {
    for (int n = 1; n <= 12; ++n)
      for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
        const F2Vector v{n, b};
        expect(dot(v, mu(v)) && mu(mu(v)) == v && !mu(v).isZero(), "mu at n=" + std::to_string(n));
        if (n >= 2) expect(!dot(v, kappa(v)) && kappa(kappa(v)) == v && !kappa(v).isZero(), "kappa");
      }
    for (int n = 2; n <= 12; ++n)
      for (int k = 0; k < n; ++k) expect(h1PairingCheck(n, k) == (k < n - 1), "h1PairingCheck");
  });

  criterion(11, "structural screening", [] {
    const FiniteGroup g = gnkGroup(2, 0);
    expect(structuralTests(g, 4, distinguishedSubgroup(g)).pass, "G_{2,0}");
    const auto r = structuralTests(elementaryAbelian2(4), 4, std::nullopt);
    expect(r.witnesses["T2"]["pass"] == false, "C2^4 T2");
    expect(structuralTests(g36Group(), 6, std::nullopt).pass, "G_{36,1}");
  });

  criterion(12, "nonexistence in G_{36,1}", [] {
    const FiniteGroup g = g36Group();
    const Subgroup h = resolveSubgroupArgument(g, "auto");
    expect(h.order() == 6 && isNormal(g, h), "order-6 normal subgroup");
    SearchOptions opts;
    opts.budget = 1'000'000'000;
    const auto r = exhaustiveSearch(g, h, opts);
    expect(r.found.empty(), "found " + std::to_string(r.found.size()));
    std::cout << "      nodes: " << r.nodes << std::endl;
  });

  criterion(13, "standalone property checks", [] {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
      const int n = 2 + static_cast<int>(rng() % 9);
      const int k = static_cast<int>(rng() % (n - 1));
      const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
      const GnkWord a{rng() & mask, rng() & mask}, b{rng() & mask, rng() & mask}, c{rng() & mask, rng() & mask};
      const GnkWord l = gnkMultiply(n, k, gnkMultiply(n, k, a, b), c), r = gnkMultiply(n, k, a, gnkMultiply(n, k, b, c));
      expect(l.e == r.e && l.f == r.f, "associativity");
    }
    for (int n = 2; n <= 8; ++n)
      for (int k = 0; k < n - 1; ++k) {
        std::set<std::uint64_t> squares;
        for (std::uint64_t s = 1; s <= ((std::uint64_t{1} << n) - 1); s += 2) {
          const GnkWord sq = gnkMultiply(n, k, {s, 0}, {s, 0});
          expect(sq.e == 0 && ((sq.f >> k) & 1U) == 1, "square law coordinate");
          expect(squares.insert(sq.f).second, "distinct squares");
        }
      }
    const FiniteGroup g = g36Group();
    for (int t = 0; t < 20; ++t) {
      const auto d = oracle::randomSubset(rng, g.order(), 1 + rng() % 30);
      const auto x = fromSet(g, d);
      expect(convolve(x, star(x)).coeffs() == oracle::convolveDense(g, x.coeffs(), star(x).coeffs()), "oracle");
      expect(convolve(convolve(x, x), star(x)) == convolve(x, convolve(x, star(x))), "algebra associativity");
    }
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
