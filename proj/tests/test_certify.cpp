#include <doctest.h>

#include "oracles.hpp"
#include "rshds/certify.hpp"
#include "rshds/constructions.hpp"
#include "rshds/errors.hpp"
#include "rshds/fixtures.hpp"
#include "rshds/params.hpp"

using namespace rshds;

namespace {

bool hasFailure(const CertReport& r, const std::string& reason) {
  if (!r.witnesses.contains("failures")) return false;
  for (const auto& f : r.witnesses["failures"])
    if (f["reason"] == reason) return true;
  return false;
}

/// 0/1 coefficient vector of a set.
std::vector<std::int64_t> indicator(const FiniteGroup& g, const std::vector<Element>& s) {
  std::vector<std::int64_t> out(g.order(), 0);
  for (Element x : s) out[x] = 1;
  return out;
}

std::vector<std::vector<std::int64_t>> matrixProduct(const std::vector<std::vector<int>>& a,
                                                     const std::vector<std::vector<int>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][l] * b[j][l];
  return out;
}

}  // namespace

TEST_CASE("parameter formulas") {
  CHECK(parameterFormulas(4) == ParameterSet{4, 16, 6, 2, 0});
  CHECK(parameterFormulas(8) == ParameterSet{8, 64, 28, 12, 0});
  CHECK(parameterFormulas(6) == ParameterSet{6, 36, 15, 6, 0});
  CHECK(parameterFormulas(16) == ParameterSet{16, 256, 120, 56, 0});
  CHECK_THROWS_AS(parameterFormulas(5), InvalidArgument);
  CHECK_THROWS_AS(parameterFormulas(0), InvalidArgument);
  CHECK_THROWS_AS(parameterFormulas(-4), InvalidArgument);
  CHECK(mBound(4) == 0);
  CHECK(mBound(6) == 1);
  CHECK(mBound(8) == 1);
  CHECK(mBound(18) == 4);
  CHECK_THROWS_AS(mBound(7), InvalidArgument);
}

TEST_CASE("difference set check") {
  const auto c = gnkDifferenceSet(2, 0);
  const auto r = checkDifferenceSet(c.group, c.elements);
  CHECK(r.pass);
  CHECK(r.params.k == 6);
  CHECK(r.params.lambda == 2);
  CHECK(r.checkName == "dset");

  const std::vector<Element> single{5};
  const auto rs = checkDifferenceSet(c.group, single);
  CHECK(rs.pass);
  CHECK(rs.params.k == 1);
  CHECK(rs.params.lambda == 0);

  const std::vector<Element> two{1, 2};
  const auto rt = checkDifferenceSet(c.group, two);
  CHECK_FALSE(rt.pass);
  CHECK(hasFailure(rt, "lambda not integral"));

  // Right size, wrong set: the first mismatch is reported.
  std::vector<Element> moved = c.elements;
  moved.back() = 1;
  std::sort(moved.begin(), moved.end());
  const auto rm = checkDifferenceSet(c.group, moved);
  CHECK_FALSE(rm.pass);
  CHECK(oracle::isDifferenceSet(c.group, moved, 2) == rm.pass);
  CHECK(rm.witnesses["failures"][0].contains("mismatch"));

  const std::vector<Element> dup{3, 3};
  CHECK_THROWS_AS(checkDifferenceSet(c.group, dup), InvalidArgument);
}

TEST_CASE("RSHDS check") {
  const auto c = gnkDifferenceSet(3, 1);
  const auto r = checkRSHDS(c.group, c.subgroupH, c.elements);
  CHECK(r.pass);
  CHECK(r.params == ParameterSet{8, 64, 28, 12, 0});
  CHECK(r.witnesses["m"] == 0);
  CHECK(r.witnesses.contains("partition"));

  SUBCASE("self-inverse hyperplane-matching set on C4^2") {
    const auto t = c4nDifferenceSet(2);
    const FiniteGroup g = t.group;
    const auto a = findHyperplaneMatching(g, t.subgroupH, cosets(g, t.subgroupH));
    REQUIRE(a);
    const auto d = hyperplaneMatchingDifferenceSet(*a);
    CHECK(checkDifferenceSet(g, d.elements).pass);
    const auto rr = checkRSHDS(g, d.subgroupH, d.elements);
    CHECK_FALSE(rr.pass);
    CHECK(rr.witnesses.contains("failures"));
  }

  SUBCASE("m = 1 claimed at h = 4") {
    const FiniteGroup g = gnkGroup(2, 0);
    const Subgroup h = *distinguishedSubgroup(g);
    const CosetDecomposition dec = cosets(g, h);
    std::vector<Element> d = dec.members(1);
    std::set<Element> taken;
    for (Element x : dec.members(2)) {
      if (taken.count(g.inverse(x)) || g.inverse(x) == x) continue;
      taken.insert(x);
    }
    REQUIRE(taken.size() == 2);
    d.insert(d.end(), taken.begin(), taken.end());
    std::sort(d.begin(), d.end());
    const auto rr = checkRSHDS(g, h, d);
    CHECK_FALSE(rr.pass);
    CHECK(rr.witnesses["m"] == 1);
    CHECK(hasFailure(rr, "m exceeds floor((h-1)/4)"));
  }

  SUBCASE("wrong group order and D meeting H") {
    const FiniteGroup g = gnkGroup(2, 0);
    const Subgroup small = closure(g, std::vector<Element>{1});
    const auto c20 = gnkDifferenceSet(2, 0);
    const auto wrongOrder = checkRSHDS(g, small, c20.elements);
    CHECK_FALSE(wrongOrder.pass);
    CHECK(hasFailure(wrongOrder, "|G| is not |H|^2"));
    std::vector<Element> bad = c20.elements;
    bad[0] = 1;
    std::sort(bad.begin(), bad.end());
    const auto rr = checkRSHDS(g, c20.subgroupH, bad);
    CHECK_FALSE(rr.pass);
    CHECK(hasFailure(rr, "D meets H"));
  }

  SUBCASE("h = 2 carries a warning") {
    const FiniteGroup g = c4PowerGroup(1);
    const Subgroup h = *distinguishedSubgroup(g);
    const std::vector<Element> d{2};
    const auto rr = checkRSHDS(g, h, d);
    CHECK(rr.pass);
    REQUIRE(rr.warnings.size() == 1);
    CHECK(rr.warnings[0] == "degenerate h = 2: lambda = 0");
  }
}

TEST_CASE("coset profile") {
  const auto c = gnkDifferenceSet(2, 0);
  const auto r = cosetProfile(c.group, c.subgroupH, c.elements);
  CHECK(r.pass);
  CHECK(r.witnesses["profile"] == Json::array({0, 2, 2, 2}));

  const auto c3 = gnkDifferenceSet(3, 0);
  const auto r3 = cosetProfile(c3.group, c3.subgroupH, c3.elements);
  CHECK(r3.pass);
  CHECK(r3.witnesses["profile"] == Json::array({0, 4, 4, 4, 4, 4, 4, 4}));

  std::vector<Element> missing(c.elements.begin() + 1, c.elements.end());
  const auto rm = cosetProfile(c.group, c.subgroupH, missing);
  CHECK_FALSE(rm.pass);
  const auto dec = cosets(c.group, c.subgroupH);
  CHECK(rm.witnesses["failures"][0]["coset"] == dec.cosetOf[c.elements.front()]);
}

TEST_CASE("Schur ring closure") {
  for (auto [n, k] : {std::pair{2, 0}, std::pair{3, 1}}) {
    CAPTURE(n);
    const auto c = gnkDifferenceSet(n, k);
    const auto [r, s] = checkSchurRing(c.group, c.subgroupH, c.elements);
    CHECK(r.pass);
    const std::int64_t h = c.params.h, kk = c.params.k, lam = c.params.lambda;
    // D * D^-1 in basis {1, H-1, D, D^-1}.
    CHECK(s.constants[2][3] == std::array<std::int64_t, 4>{kk, lam, lam, lam});
    CHECK(s.constants[2][2] == std::array<std::int64_t, 4>{0, kk - lam, kk - lam - h / 2, kk - lam - h / 2});
    CHECK(s.constants[1][1] == std::array<std::int64_t, 4>{h - 1, h - 2, 0, 0});
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        CHECK(s.constants[i][j] == s.constants[j][i]);
        for (int l = 0; l < 4; ++l) CHECK(s.constants[i][j][l] >= 0);
      }

    // Each row of the P-matrix is a ring homomorphism on the structure constants.
    const PMatrix p = pMatrix(h);
    for (int row = 0; row < 4; ++row)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          const GaussianInt lhs = p.doubled[row][i] * p.doubled[row][j];
          GaussianInt rhs{0, 0};
          for (int l = 0; l < 4; ++l) rhs = rhs + GaussianInt{2 * s.constants[i][j][l], 0} * p.doubled[row][l];
          CHECK(lhs == rhs);
        }
  }
  SUBCASE("explicit products in G_{2,0} against the dense oracle") {
    const auto c = gnkDifferenceSet(2, 0);
    const auto& g = c.group;
    const auto d = indicator(g, c.elements);
    const auto inv = oracle::inverseSet(g, c.elements);
    const auto dinv = indicator(g, std::vector<Element>(inv.begin(), inv.end()));
    const auto prod = oracle::convolveDense(g, d, dinv);
    for (Element x = 0; x < g.order(); ++x) {
      CHECK(prod[x] == (x == 0 ? 6 : 2));
    }
  }
  SUBCASE("precondition") {
    const auto c = gnkDifferenceSet(2, 0);
    std::vector<Element> d(c.elements.begin() + 1, c.elements.end());
    CHECK_THROWS_AS(checkSchurRing(c.group, c.subgroupH, d), PreconditionError);
    CHECK_THROWS_AS(spectrum(c.group, c.subgroupH, d), PreconditionError);
    CHECK_THROWS_AS(checkHadamard(c.group, c.subgroupH, d), PreconditionError);
  }
}

TEST_CASE("P-matrix") {
  const PMatrix p = pMatrix(4);
  auto row = [&](int r) {
    std::vector<std::string> out;
    for (int c = 0; c < 4; ++c) out.push_back(p.entryString(r, c));
    return out;
  };
  CHECK(row(0) == std::vector<std::string>{"1", "3", "6", "6"});
  CHECK(row(1) == std::vector<std::string>{"1", "3", "-2", "-2"});
  CHECK(row(2) == std::vector<std::string>{"1", "-1", "-2i", "2i"});
  CHECK(row(3) == std::vector<std::string>{"1", "-1", "2i", "-2i"});
  const PMatrix p2 = pMatrix(2);
  CHECK(p2.entryString(2, 2) == "-i");
  const PMatrix p6 = pMatrix(6);
  CHECK(p6.entryString(0, 2) == "15");
  CHECK(p6.entryString(2, 3) == "3i");
  CHECK_THROWS_AS(pMatrix(3), InvalidArgument);
}

TEST_CASE("spectrum") {
  const auto c = gnkDifferenceSet(2, 0);
  const auto r = spectrum(c.group, c.subgroupH, c.elements);
  CHECK(r.pass);
  CHECK(r.witnesses["traces"] == Json::array({16, 0, 0, 192}));
  CHECK(expectedTraces(4) == std::array<std::int64_t, 4>{16, 0, 0, 192});
  // 6^3 + 3(-2)^3 + 6(2i)^3 + 6(-2i)^3
  CHECK(minimalPolynomialOfD(4, 6) == polyMultiply(polyMultiply({-6, 1}, {4, 2}), {16, 0, 4}));
  CHECK(r.witnesses["divisorsNonzero"]["(x-k)(2x+h)"] == true);

  const auto c31 = gnkDifferenceSet(3, 1);
  const auto r31 = spectrum(c31.group, c31.subgroupH, c31.elements);
  CHECK(r31.pass);
  CHECK(r31.witnesses["traces"] == Json::array({64, 0, 0, 21504}));
  CHECK(expectedTraces(8) == std::array<std::int64_t, 4>{64, 0, 0, 21504});

  // Direct traces from the regular representation of D.
  const auto& g = c.group;
  std::int64_t tr3 = 0;
  for (Element y = 0; y < g.order(); ++y)
    for (Element a : c.elements)
      for (Element b : c.elements)
        for (Element e : c.elements)
          if (g.multiply(g.multiply(a, b), e) == 0) tr3 += 1;
  CHECK(tr3 == 192);
}

TEST_CASE("Hadamard") {
  for (auto [n, k] : {std::pair{2, 0}, std::pair{3, 0}}) {
    const auto c = gnkDifferenceSet(n, k);
    const auto r = checkHadamard(c.group, c.subgroupH, c.elements);
    CHECK(r.pass);
    const std::int64_t h = c.params.h;
    CHECK(r.witnesses["rowSum"] == 2 * c.params.k - h * h);
    const auto m = hadamardMatrix(c.group, c.elements);
    const auto mmt = matrixProduct(m, m);
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::int64_t sum = 0;
      for (int e : m[i]) sum += e;
      CHECK(sum == 2 * c.params.k - h * h);
      for (std::size_t j = 0; j < m.size(); ++j) REQUIRE(mmt[i][j] == (i == j ? h * h : 0));
    }
  }
}

TEST_CASE("quotient check") {
  SUBCASE("index-2 kernels of G_{2,0}") {
    const auto c = gnkDifferenceSet(2, 0);
    const auto kernels = normalSubgroupsOfPrimeIndex(c.group);
    REQUIRE(kernels.size() == 3);
    for (const auto& k : kernels) {
      const auto r = quotientCheck(c.group, c.subgroupH, c.elements, k.subgroup);
      CHECK(r.pass);
      CHECK(r.witnesses["hInN"] == true);
      CHECK(r.witnesses["profile"]["x"] == Json::array({2, 4}));
      int inN = 0;
      for (Element x : c.elements) inN += k.subgroup.contains(x);
      CHECK(inN == 2);
    }
  }
  SUBCASE("C2^2 quotients of G_{3,0}") {
    const auto c = gnkDifferenceSet(3, 0);
    int seen = 0;
    for (const Subgroup& s : subgroupsOfOrder(c.group, 16)) {
      if (!isNormal(c.group, s)) continue;
      const auto q = quotient(c.group, s);
      if (swallowingQuotientName(q.group) != std::optional<std::string>("C2^2")) continue;
      if (!c.subgroupH.isSubsetOf(s)) continue;
      ++seen;
      const auto r = quotientCheck(c.group, c.subgroupH, c.elements, s);
      CHECK(r.pass);
      CHECK(r.witnesses["quotientType"] == "C2^2");
      CHECK(r.witnesses["profile"]["x"] == Json::array({4, 8, 8, 8}));
      CHECK(r.witnesses["profile"]["y"] == Json::array({8, 0, 0, 0}));
    }
    CHECK(seen > 0);
  }
  SUBCASE("C4 quotients fall into the three families") {
    for (auto [n, k] : {std::pair{2, 0}, std::pair{3, 0}, std::pair{3, 1}}) {
      const auto c = gnkDifferenceSet(n, k);
      int seen = 0;
      for (const Subgroup& s : subgroupsOfOrder(c.group, c.group.order() / 4)) {
        if (!isNormal(c.group, s)) continue;
        const auto q = quotient(c.group, s);
        bool cyclic = false;
        for (Element x = 0; x < 4; ++x) cyclic |= elementOrder(q.group, x) == 4;
        if (!cyclic) continue;
        ++seen;
        const auto r = quotientCheck(c.group, c.subgroupH, c.elements, s);
        CHECK(r.pass);
        CHECK(r.witnesses["quotientType"] == "C4");
        CHECK(r.witnesses.contains("family"));
      }
      CHECK(seen > 0);
    }
  }
  SUBCASE("non-normal N") {
    const auto c = gnkDifferenceSet(2, 0);
    const FiniteGroup d8 = dihedralGroup(4);
    const Subgroup refl = closure(d8, std::vector<Element>{4});
    CHECK_THROWS_AS(quotientCheck(d8, refl, std::vector<Element>{}, refl), PreconditionError);
  }
}

TEST_CASE("fingerprints separate the swallowing list from same-order groups") {
  const std::vector<std::pair<std::string, FiniteGroup>> listed{
      {"C2^2", elementaryAbelian2(2)},
      {"C2^3", elementaryAbelian2(3)},
      {"S3", dihedralGroup(3)},
      {"C6", directProduct(cyclicGroup(2), cyclicGroup(3))},
      {"C9", cyclicGroup(9)},
      {"C3^2", directProduct(cyclicGroup(3), cyclicGroup(3))},
      {"C10", directProduct(cyclicGroup(5), cyclicGroup(2))},
      {"D10", dihedralGroup(5)},
      {"C2xS3", dihedralGroup(6)},
      {"C2xC6", directProduct(cyclicGroup(6), cyclicGroup(2))},
  };
  for (const auto& [name, g] : listed) {
    CAPTURE(name);
    CHECK(swallowingQuotientName(g) == std::optional<std::string>(name));
  }
  const std::vector<FiniteGroup> others{cyclicGroup(4),
                                        cyclicGroup(8),
                                        directProduct(cyclicGroup(4), cyclicGroup(2)),
                                        dihedralGroup(4),
                                        dicyclicGroup(2),
                                        cyclicGroup(12),
                                        alternatingGroup(4),
                                        dicyclicGroup(3),
                                        cyclicGroup(2),
                                        cyclicGroup(3),
                                        cyclicGroup(5)};
  for (const auto& g : others) {
    CAPTURE(g.order());
    CHECK_FALSE(swallowingQuotientName(g));
  }
}

TEST_CASE("structural screening") {
  const FiniteGroup g20 = gnkGroup(2, 0);
  const auto r = structuralTests(g20, 4, distinguishedSubgroup(g20));
  CHECK(r.pass);
  for (const char* t : {"T1", "T2", "T3", "T4"}) CHECK(r.witnesses[t]["pass"] == true);

  const auto rc = structuralTests(elementaryAbelian2(4), 4, std::nullopt);
  CHECK_FALSE(rc.pass);
  CHECK(rc.witnesses["T2"]["pass"] == false);
  CHECK(rc.witnesses["T2"]["closureOrder"] == 16);

  const FiniteGroup g36 = g36Group();
  const auto r36 = structuralTests(g36, 6, std::nullopt);
  CHECK(r36.pass);
  for (const char* t : {"T1", "T2", "T3", "T4"}) CHECK(r36.witnesses[t]["pass"] == true);
  CHECK(r36.witnesses["T2"]["involutions"] == 1);

  // C6 x C6: H has a complement, and all 3 involutions generate C2^2.
  const auto r66 = structuralTests(directProduct(cyclicGroup(6), cyclicGroup(6)), 6, std::nullopt);
  CHECK_FALSE(r66.pass);
  CHECK(r66.witnesses["T4"]["pass"] == false);

  CHECK_THROWS_AS(structuralTests(g20, 5, std::nullopt), InvalidArgument);
}

TEST_CASE("stochastic matrix of D") {
  for (auto [n, k] : {std::pair{2, 0}, std::pair{3, 1}}) {
    const auto c = gnkDifferenceSet(n, k);
    const auto r = checkStochastic(c.group, c.elements);
    CHECK(r.pass);
    CHECK(r.witnesses["reachable"] == c.group.order());
  }
  const FiniteGroup g = gnkGroup(2, 0);
  const auto h = *distinguishedSubgroup(g);
  const auto r = checkStochastic(g, std::vector<Element>(h.members().begin() + 1, h.members().end()));
  CHECK_FALSE(r.pass);
}

TEST_CASE("invariants on every constructed candidate") {
  std::vector<DifferenceSetCandidate> all;
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < n - 1; ++k) all.push_back(gnkDifferenceSet(n, k));
  for (const auto& c : {c4nDifferenceSet(2), c4nDifferenceSet(3)}) {
    // Self-inverse sets: a difference set with the right coset profile, but not relative skew.
    CHECK(checkDifferenceSet(c.group, c.elements).pass);
    CHECK(cosetProfile(c.group, c.subgroupH, c.elements).pass);
    CHECK_FALSE(checkRSHDS(c.group, c.subgroupH, c.elements).pass);
  }
  for (const auto& c : all) {
    CAPTURE(c.group.describe());
    const auto rs = checkRSHDS(c.group, c.subgroupH, c.elements);
    REQUIRE(rs.pass);
    CHECK(checkDifferenceSet(c.group, c.elements).pass);
    CHECK(cosetProfile(c.group, c.subgroupH, c.elements).pass);
    CHECK(checkSchurRing(c.group, c.subgroupH, c.elements).report.pass);
    CHECK(spectrum(c.group, c.subgroupH, c.elements).pass);
    CHECK(checkHadamard(c.group, c.subgroupH, c.elements).pass);
    CHECK(checkStochastic(c.group, c.elements).pass);
    for (Element x : involutions(c.group)) CHECK(c.subgroupH.contains(x));
    for (const auto& pin : normalSubgroupsOfPrimeIndex(c.group)) {
      CHECK(c.subgroupH.isSubsetOf(pin.subgroup));
      CHECK(quotientCheck(c.group, c.subgroupH, c.elements, pin.subgroup).pass);
    }
  }
}

TEST_CASE("report invariants") {
  std::mt19937_64 rng(7);
  const FiniteGroup g = gnkGroup(2, 0);
  const Subgroup h = *distinguishedSubgroup(g);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = oracle::randomSubset(rng, g.order(), 1 + rng() % 10);
    for (const CertReport& r : {checkDifferenceSet(g, d), checkRSHDS(g, h, d), cosetProfile(g, h, d), checkStochastic(g, d)}) {
      if (!r.pass) {
        REQUIRE(r.witnesses.contains("failures"));
        CHECK_FALSE(r.witnesses["failures"].empty());
      }
    }
  }
  const auto c = gnkDifferenceSet(3, 1);
  CHECK(toJson(checkRSHDS(c.group, c.subgroupH, c.elements)).dump() ==
        toJson(checkRSHDS(c.group, c.subgroupH, c.elements)).dump());
  const auto j = toJson(checkDifferenceSet(c.group, c.elements));
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"checkName", "pass", "params", "witnesses", "warnings"});
  const std::string text = toText(checkDifferenceSet(c.group, c.elements));
  CHECK(text.rfind("dset: PASS\n  params: h=0 v=64 k=28 lambda=12 m=0\n", 0) == 0);
}

TEST_CASE("difference set check agrees with the naive tally") {
  std::mt19937_64 rng(11);
  std::vector<FiniteGroup> groups{gnkGroup(2, 0), c4PowerGroup(2), dihedralGroup(8), dicyclicGroup(4), gnkGroup(3, 1),
                                  directProduct(cyclicGroup(7), cyclicGroup(1)), alternatingGroup(4)};
  for (const auto& g : groups) {
    const auto v = static_cast<std::int64_t>(g.order());
    for (int trial = 0; trial < 40; ++trial) {
      const auto d = oracle::randomSubset(rng, g.order(), 1 + rng() % (g.order() - 1));
      const auto k = static_cast<std::int64_t>(d.size());
      const bool integral = (k * (k - 1)) % (v - 1) == 0;
      const bool want = integral && oracle::isDifferenceSet(g, d, k * (k - 1) / (v - 1));
      CHECK(checkDifferenceSet(g, d).pass == want);
    }
  }
  // Known planar difference set {1, 2, 4} in C7.
  const FiniteGroup c7 = cyclicGroup(7);
  CHECK(checkDifferenceSet(c7, std::vector<Element>{1, 2, 4}).pass);
}
