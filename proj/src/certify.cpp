#include "rshds/certify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rshds/errors.hpp"
#include "rshds/fixtures.hpp"

namespace rshds {

namespace {

using Alg = GroupAlgebraElement;

Json paramsJson(const ParameterSet& p) {
  return Json{{"h", p.h}, {"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"m", p.m}};
}

/// parameterFormulas when h is admissible, otherwise only what can be read off.
ParameterSet looseParams(std::int64_t h, std::int64_t v, std::int64_t k) {
  if (h >= 2 && h % 2 == 0) {
    ParameterSet p = parameterFormulas(h);
    p.v = v;
    p.k = k;
    return p;
  }
  return {h, v, k, 0, 0};
}

Json failure(std::string reason) { return Json{{"reason", std::move(reason)}}; }

void addFailure(CertReport& r, Json entry) {
  r.pass = false;
  r.witnesses["failures"].push_back(std::move(entry));
}

/// First element where a and b differ, as a witness, or null.
Json firstMismatch(const Alg& actual, const Alg& expected) {
  const FiniteGroup& g = actual.group();
  for (Element x = 0; x < g.order(); ++x)
    if (actual[x] != expected[x])
      return Json{{"element", x}, {"name", g.elementName(x)}, {"expected", expected[x]}, {"actual", actual[x]}};
  return nullptr;
}

/// Compare and record a failure named `what` on mismatch.
bool expectEqual(CertReport& r, const std::string& what, const Alg& actual, const Alg& expected) {
  Json m = firstMismatch(actual, expected);
  if (m.is_null()) return true;
  Json f = failure(what);
  f["mismatch"] = std::move(m);
  addFailure(r, std::move(f));
  return false;
}

std::vector<Element> sortedUnique(std::span<const Element> elements, const FiniteGroup& g) {
  std::vector<Element> d(elements.begin(), elements.end());
  std::sort(d.begin(), d.end());
  if (std::adjacent_find(d.begin(), d.end()) != d.end()) throw InvalidArgument("element list has a repeated index");
  if (!d.empty() && d.back() >= g.order()) throw InvalidArgument("element index out of range");
  return d;
}

void requireSameGroup(const FiniteGroup& group, const Subgroup& h) {
  if (!h.group().sameAs(group)) throw InvalidArgument("subgroup belongs to a different group");
}

/// Precondition shared by the m = 0 certificates.
ParameterSet requireRshdsZero(const FiniteGroup& group, const Subgroup& h, std::span<const Element> elements,
                              const char* who) {
  const CertReport r = checkRSHDS(group, h, elements);
  if (!r.pass) throw PreconditionError(std::string(who) + ": candidate is not a relative skew Hadamard difference set");
  if (r.params.m != 0) throw PreconditionError(std::string(who) + ": requires m = 0, got m = " + std::to_string(r.params.m));
  return r.params;
}

}  // namespace

Json toJson(const CertReport& report) {
  Json j;
  j["checkName"] = report.checkName;
  j["pass"] = report.pass;
  j["params"] = paramsJson(report.params);
  j["witnesses"] = report.witnesses.is_null() ? Json::object() : report.witnesses;
  j["warnings"] = report.warnings;
  return j;
}

std::string toText(const CertReport& report) {
  std::ostringstream out;
  const ParameterSet& p = report.params;
  out << report.checkName << ": " << (report.pass ? "PASS" : "FAIL") << "\n";
  out << "  params: h=" << p.h << " v=" << p.v << " k=" << p.k << " lambda=" << p.lambda << " m=" << p.m << "\n";
  if (!report.witnesses.is_null() && !report.witnesses.empty())
    for (const auto& [key, value] : report.witnesses.items()) out << "  " << key << ": " << value.dump() << "\n";
  for (const auto& w : report.warnings) out << "  warning: " << w << "\n";
  return out.str();
}

std::string PMatrix::entryString(int row, int col) const {
  const GaussianInt z = doubled[row][col];
  auto half = [](std::int64_t twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  };
  if (z.im == 0) return half(z.re);
  std::string imag;
  const std::int64_t mag = z.im < 0 ? -z.im : z.im;
  imag = (mag == 2 ? std::string() : half(mag)) + "i";
  if (z.re == 0) return (z.im < 0 ? "-" : "") + imag;
  return half(z.re) + (z.im < 0 ? "-" : "+") + imag;
}

PMatrix pMatrix(std::int64_t h) {
  if (h % 2 != 0 || h < 2) throw InvalidArgument("pMatrix: h must be even and at least 2");
  const std::int64_t k = h * (h - 1) / 2;
  PMatrix p;
  p.doubled[0] = {{{2, 0}, {2 * (h - 1), 0}, {2 * k, 0}, {2 * k, 0}}};
  p.doubled[1] = {{{2, 0}, {2 * (h - 1), 0}, {-h, 0}, {-h, 0}}};
  p.doubled[2] = {{{2, 0}, {-2, 0}, {0, -h}, {0, h}}};
  p.doubled[3] = {{{2, 0}, {-2, 0}, {0, h}, {0, -h}}};
  return p;
}

CertReport checkDifferenceSet(const FiniteGroup& group, std::span<const Element> elements) {
  CertReport r{"dset", true, {}, Json::object(), {}};
  const auto d = sortedUnique(elements, group);
  const auto v = static_cast<std::int64_t>(group.order());
  const auto k = static_cast<std::int64_t>(d.size());
  r.params = {0, v, k, 0, 0};
  r.witnesses["k"] = k;
  if (v < 2) {
    addFailure(r, failure("group of order 1 has no nonidentity differences"));
    return r;
  }
  const std::int64_t numerator = checked::mul(k, k - 1);
  if (numerator % (v - 1) != 0) {
    Json f = failure("lambda not integral");
    f["k(k-1)"] = numerator;
    f["v-1"] = v - 1;
    addFailure(r, std::move(f));
    return r;
  }
  const std::int64_t lambda = numerator / (v - 1);
  r.params.lambda = lambda;
  r.witnesses["lambda"] = lambda;
  const Alg dd = fromSet(group, d);
  const Alg expected = lambda * groupSum(group) + unit(group, k - lambda);
  expectEqual(r, "D D^-1 differs from lambda G + (k - lambda) 1", convolve(dd, star(dd)), expected);
  return r;
}

CertReport checkRSHDS(const FiniteGroup& group, const Subgroup& subgroupH, std::span<const Element> elements) {
  requireSameGroup(group, subgroupH);
  const auto d = sortedUnique(elements, group);
  const auto v = static_cast<std::int64_t>(group.order());
  const auto h = static_cast<std::int64_t>(subgroupH.order());
  CertReport r{"rshds", true, looseParams(h, v, static_cast<std::int64_t>(d.size())), Json::object(), {}};

  if (v != h * h) {
    Json f = failure("|G| is not |H|^2");
    f["order"] = v;
    f["h"] = h;
    addFailure(r, std::move(f));
    return r;
  }
  if (h % 2 != 0) {
    addFailure(r, failure("|H| is odd"));
    return r;
  }
  if (h == 2) r.warnings.push_back("degenerate h = 2: lambda = 0");

  std::vector<std::uint8_t> inD(group.order(), 0);
  for (Element x : d) inD[x] = 1;
  for (Element x : d)
    if (subgroupH.contains(x)) {
      Json f = failure("D meets H");
      f["element"] = x;
      f["name"] = group.elementName(x);
      addFailure(r, std::move(f));
      return r;
    }

  // Per coset: how many of its elements lie in D n D^-1 and in G \ (D u D^-1).
  const CosetDecomposition dec = cosets(group, subgroupH);
  std::vector<std::int64_t> both(dec.index(), 0), neither(dec.index(), 0);
  for (Element x = 0; x < group.order(); ++x) {
    const bool a = inD[x], b = inD[group.inverse(x)];
    if (a && b) ++both[dec.cosetOf[x]];
    if (!a && !b) ++neither[dec.cosetOf[x]];
  }
  Json intersection = Json::array(), complement = Json::array();
  std::int64_t m = 0, mPrime = 0;
  for (std::size_t c = 0; c < dec.index(); ++c) {
    for (auto [count, name, list, tally] :
         {std::tuple{both[c], "D n D^-1", &intersection, &m}, std::tuple{neither[c], "G \\ (D u D^-1)", &complement, &mPrime}}) {
      if (count == h) {
        list->push_back(c);
        ++*tally;
      } else if (count != 0) {
        Json f = failure(std::string(name) + " is not a union of H-cosets");
        f["coset"] = c;
        f["count"] = count;
        addFailure(r, std::move(f));
      }
    }
  }
  if (neither[0] != h) addFailure(r, failure("G \\ (D u D^-1) does not contain H"));
  --mPrime;
  r.params.m = m;
  r.witnesses["m"] = m;
  r.witnesses["intersectionCosets"] = intersection;
  r.witnesses["complementCosets"] = complement;
  if (!r.pass) return r;

  if (m != mPrime) {
    Json f = failure("complement of D u D^-1 is not H plus m cosets");
    f["m"] = m;
    f["complementExtra"] = mPrime;
    addFailure(r, std::move(f));
  }
  if (m > mBound(h)) {
    Json f = failure("m exceeds floor((h-1)/4)");
    f["m"] = m;
    f["bound"] = mBound(h);
    addFailure(r, std::move(f));
  }
  if (m == 0) r.witnesses["partition"] = "G = D + D^-1 + H";

  const CertReport ds = checkDifferenceSet(group, d);
  r.witnesses["differenceSet"] = {{"pass", ds.pass}, {"k", ds.params.k}, {"lambda", ds.params.lambda}};
  if (!ds.pass) {
    Json f = failure("not a difference set");
    f["detail"] = ds.witnesses;
    addFailure(r, std::move(f));
  } else if (ds.params.k != r.params.k || ds.params.lambda != r.params.lambda) {
    addFailure(r, failure("(k, lambda) differ from (h(h-1)/2, h(h-2)/4)"));
  }
  return r;
}

CertReport cosetProfile(const FiniteGroup& group, const Subgroup& subgroupH, std::span<const Element> elements) {
  requireSameGroup(group, subgroupH);
  const auto d = sortedUnique(elements, group);
  const auto h = static_cast<std::int64_t>(subgroupH.order());
  CertReport r{"profile", true, looseParams(h, static_cast<std::int64_t>(group.order()), static_cast<std::int64_t>(d.size())),
               Json::object(), {}};
  const CosetDecomposition dec = cosets(group, subgroupH);
  std::vector<std::int64_t> profile(dec.index(), 0);
  for (Element x : d) ++profile[dec.cosetOf[x]];
  r.witnesses["profile"] = profile;
  if (h % 2 != 0) {
    addFailure(r, failure("|H| is odd"));
    return r;
  }
  if (h == 2) r.warnings.push_back("degenerate h = 2: lambda = 0");
  for (std::size_t c = 0; c < profile.size(); ++c) {
    const std::int64_t expected = c == 0 ? 0 : h / 2;
    if (profile[c] != expected) {
      Json f = failure("coset count");
      f["coset"] = c;
      f["count"] = profile[c];
      f["expected"] = expected;
      addFailure(r, std::move(f));
    }
  }
  return r;
}

SchurResult checkSchurRing(const FiniteGroup& group, const Subgroup& subgroupH, std::span<const Element> elements) {
  requireSameGroup(group, subgroupH);
  const ParameterSet p = requireRshdsZero(group, subgroupH, elements, "schur");
  SchurResult out{{"schur", true, p, Json::object(), {}}, {}};
  CertReport& r = out.report;
  if (p.h == 2) r.warnings.push_back("degenerate h = 2: lambda = 0");

  const Alg one = unit(group);
  const Alg hSet = fromSet(group, subgroupH.members());
  const Alg d = fromSet(group, elements);
  const Alg dInv = star(d);
  const Alg g = groupSum(group);
  const std::array<Alg, 4> basis{one, hSet - one, d, dInv};

  // Class of each element: 0 identity, 1 H \ 1, 2 D, 3 D^-1.
  std::vector<int> cls(group.order(), -1);
  std::array<Element, 4> rep{};
  for (int c = 3; c >= 0; --c)
    for (Element x : basis[c].support()) cls[x] = c;
  for (int c = 0; c < 4; ++c) rep[c] = basis[c].support().front();

  static const char* labels[4] = {"1", "H-1", "D", "D^-1"};
  std::array<std::array<Alg, 4>, 4> products{
      {{basis[0], basis[0], basis[0], basis[0]}, {basis[0], basis[0], basis[0], basis[0]},
       {basis[0], basis[0], basis[0], basis[0]}, {basis[0], basis[0], basis[0], basis[0]}}};
  Json table = Json::object();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Alg prod = convolve(basis[i], basis[j]);
      products[i][j] = prod;
      auto& coeffs = out.structure.constants[i][j];
      for (int c = 0; c < 4; ++c) coeffs[c] = prod[rep[c]];
      for (Element x = 0; x < group.order(); ++x)
        if (prod[x] != coeffs[cls[x]]) {
          Json f = failure("product is not constant on a principal set");
          f["product"] = std::string(labels[i]) + "*" + labels[j];
          f["element"] = x;
          f["class"] = labels[cls[x]];
          addFailure(r, std::move(f));
          break;
        }
      for (int c = 0; c < 4; ++c)
        if (coeffs[c] < 0) {
          Json f = failure("negative structure constant");
          f["product"] = std::string(labels[i]) + "*" + labels[j];
          addFailure(r, std::move(f));
        }
      table[std::string(labels[i]) + "*" + labels[j]] = coeffs;
    }
  r.witnesses["structureConstants"] = table;

  const std::int64_t h = p.h, k = p.k, lambda = p.lambda;
  const Alg hMinus1 = hSet - one;
  expectEqual(r, "H D = (h/2)(G - H)", products[1][2] + d, (h / 2) * (g - hSet));
  expectEqual(r, "D^2 = (k-lambda-h/2)(D+D^-1) + (k-lambda)(H-1)", products[2][2],
              (k - lambda - h / 2) * (d + dInv) + (k - lambda) * hMinus1);
  expectEqual(r, "D D^-1 = lambda D + lambda D^-1 + lambda (H-1) + k 1", products[2][3],
              lambda * d + lambda * dInv + lambda * hMinus1 + unit(group, k));
  expectEqual(r, "D H = H D", convolve(d, hSet), convolve(hSet, d));
  expectEqual(r, "D D^-1 = D^-1 D", products[2][3], products[3][2]);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (out.structure.constants[i][j] != out.structure.constants[j][i]) {
        Json f = failure("structure constants not symmetric");
        f["pair"] = std::string(labels[i]) + "," + labels[j];
        addFailure(r, std::move(f));
      }
  return out;
}

IntPolynomial minimalPolynomialOfD(std::int64_t h, std::int64_t k) {
  return polyMultiply(polyMultiply({-k, 1}, {h, 2}), {checked::mul(h, h), 0, 4});
}

std::array<std::int64_t, 4> expectedTraces(std::int64_t h) {
  if (h % 2 != 0 || h < 2) throw InvalidArgument("expectedTraces: h must be even and at least 2");
  const std::int64_t k = h * (h - 1) / 2;
  const std::int64_t pair = h * (h - 1) / 2;
  // Doubled eigenvalues 2k, -h, ih, -ih; sum of mult * (2 eig)^p, then divide by 2^p.
  const std::array<GaussianInt, 4> eig{{{2 * k, 0}, {-h, 0}, {0, h}, {0, -h}}};
  const std::array<std::int64_t, 4> mult{1, h - 1, pair, pair};
  std::array<std::int64_t, 4> out{};
  for (int p = 0; p < 4; ++p) {
    GaussianInt total{0, 0};
    for (int e = 0; e < 4; ++e) {
      GaussianInt pw{1, 0};
      for (int q = 0; q < p; ++q) pw = pw * eig[e];
      total = total + GaussianInt{mult[e], 0} * pw;
    }
    if (total.im != 0 || total.re % (std::int64_t{1} << p) != 0)
      throw std::logic_error("expectedTraces: trace is not a rational integer");
    out[p] = total.re >> p;
  }
  return out;
}

CertReport spectrum(const FiniteGroup& group, const Subgroup& subgroupH, std::span<const Element> elements) {
  requireSameGroup(group, subgroupH);
  const ParameterSet p = requireRshdsZero(group, subgroupH, elements, "spectrum");
  CertReport r{"spectrum", true, p, Json::object(), {}};
  if (p.h == 2) r.warnings.push_back("degenerate h = 2: lambda = 0");
  const std::int64_t h = p.h, k = p.k, v = p.v;
  const Alg d = fromSet(group, elements);

  const IntPolynomial linK{-k, 1}, linH{h, 2}, quad{h * h, 0, 4};
  const IntPolynomial full = minimalPolynomialOfD(h, k);
  r.witnesses["polynomial"] = full;
  if (Alg value = polyEval(d, full); !value.isZero()) {
    Json f = failure("(x-k)(2x+h)(4x^2+h^2) does not annihilate D");
    f["mismatch"] = firstMismatch(value, Alg(group));
    addFailure(r, std::move(f));
  }
  const std::array<std::pair<const char*, IntPolynomial>, 3> divisors{
      {{"(2x+h)(4x^2+h^2)", polyMultiply(linH, quad)},
       {"(x-k)(4x^2+h^2)", polyMultiply(linK, quad)},
       {"(x-k)(2x+h)", polyMultiply(linK, linH)}}};
  Json nonzero = Json::object();
  for (const auto& [name, poly] : divisors) {
    const bool annihilates = polyEval(d, poly).isZero();
    nonzero[name] = !annihilates;
    if (annihilates) addFailure(r, failure(std::string("proper divisor ") + name + " annihilates D"));
  }
  r.witnesses["divisorsNonzero"] = nonzero;

  const auto expected = expectedTraces(h);
  std::array<Alg, 5> powers{unit(group), d, d, d, d};
  for (int q = 2; q <= 4; ++q) powers[q] = convolve(powers[q - 1], d);
  Json traces = Json::array();
  for (int q = 0; q < 4; ++q) {
    const std::int64_t tr = checked::mul(v, identityCoefficient(powers[q]));
    traces.push_back(tr);
    if (tr != expected[q]) {
      Json f = failure("trace of D^p differs from the eigenvalue sum");
      f["p"] = q;
      f["trace"] = tr;
      f["expected"] = expected[q];
      addFailure(r, std::move(f));
    }
  }
  r.witnesses["traces"] = traces;

  const Alg g = groupSum(group);
  const std::int64_t h2 = h * h, h3 = h2 * h, h4 = h3 * h;
  const std::int64_t c3 = (h4 - 3 * h3 + 2 * h2) / 8;
  expectEqual(r, "D^3 = (h^2/4) D^-1 + (h^4/8 - 3h^3/8 + h^2/4) G", powers[3], (h2 / 4) * star(d) + c3 * g);
  const std::int64_t c4 = checked::mul(h3, h3 - 4 * h2 + 6 * h - 4) / 16;
  expectEqual(r, "D^4 = (h^6/16 - h^5/4 + 3h^4/8 - h^3/4) G + (h^4/16) 1", powers[4], c4 * g + unit(group, h4 / 16));
  return r;
}

CertReport checkHadamard(const FiniteGroup& group, const Subgroup& subgroupH, std::span<const Element> elements) {
  requireSameGroup(group, subgroupH);
  const ParameterSet p = requireRshdsZero(group, subgroupH, elements, "hadamard");
  CertReport r{"hadamard", true, p, Json::object(), {}};
  if (p.h == 2) r.warnings.push_back("degenerate h = 2: lambda = 0");
  const std::int64_t h = p.h;
  const Alg m = 2 * fromSet(group, elements) - groupSum(group);
  expectEqual(r, "M M^T = h^2 1", convolve(m, star(m)), unit(group, h * h));
  if (!polyEval(m, {h * h * h, h * h, h, 1}).isZero()) addFailure(r, failure("(x+h)(x^2+h^2) does not annihilate M"));
  const bool linear = polyEval(m, {h, 1}).isZero();
  const bool quadratic = polyEval(m, {h * h, 0, 1}).isZero();
  if (linear) addFailure(r, failure("M + h annihilates M"));
  if (quadratic) addFailure(r, failure("M^2 + h^2 annihilates M"));
  r.witnesses["rowSum"] = 2 * p.k - p.v;
  r.witnesses["order"] = p.v;
  return r;
}

std::vector<std::vector<int>> hadamardMatrix(const FiniteGroup& group, std::span<const Element> elements) {
  const auto d = sortedUnique(elements, group);
  std::vector<std::uint8_t> inD(group.order(), 0);
  for (Element x : d) inD[x] = 1;
  const std::size_t n = group.order();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, -1));
  for (Element y = 0; y < n; ++y)
    for (Element x = 0; x < n; ++x)
      if (inD[group.multiply(y, group.inverse(x))]) rows[y][x] = 1;
  return rows;
}

std::vector<QuotientProfileEntry> quotientProfile(const Quotient& q, const Subgroup& subgroupH,
                                                  std::span<const Element> elements) {
  std::vector<QuotientProfileEntry> out(q.group.order());
  for (Element x : elements) ++out[q.projection[x]].x;
  for (Element x : subgroupH.members()) ++out[q.projection[x]].y;
  return out;
}

namespace {

struct NamedFingerprint {
  std::string name;
  Fingerprint fp;
};

const std::vector<NamedFingerprint>& swallowingList() {
  static const std::vector<NamedFingerprint> list = [] {
    std::vector<std::pair<std::string, FiniteGroup>> groups{
        {"C2^2", elementaryAbelian2(2)},
        {"C2^3", elementaryAbelian2(3)},
        {"S3", dihedralGroup(3)},
        {"C6", cyclicGroup(6)},
        {"C9", cyclicGroup(9)},
        {"C3^2", directProduct(cyclicGroup(3), cyclicGroup(3))},
        {"C10", cyclicGroup(10)},
        {"D10", dihedralGroup(5)},
        {"C2xS3", directProduct(cyclicGroup(2), dihedralGroup(3))},
        {"C2xC6", directProduct(cyclicGroup(2), cyclicGroup(6))},
    };
    std::vector<NamedFingerprint> out;
    for (auto& [name, g] : groups) out.push_back({name, fingerprint(g)});
    return out;
  }();
  return list;
}

bool hasElementOfOrder(const FiniteGroup& g, std::size_t n) {
  for (Element x = 0; x < g.order(); ++x)
    if (elementOrder(g, x) == n) return true;
  return false;
}

Json profileJson(const std::vector<QuotientProfileEntry>& profile) {
  Json xs = Json::array(), ys = Json::array();
  for (const auto& e : profile) {
    xs.push_back(e.x);
    ys.push_back(e.y);
  }
  return Json{{"x", xs}, {"y", ys}};
}

bool isPrime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::optional<std::string> swallowingQuotientName(const FiniteGroup& quotientGroup) {
  const Fingerprint fp = fingerprint(quotientGroup);
  for (const auto& entry : swallowingList())
    if (entry.fp == fp) return entry.name;
  return std::nullopt;
}

CertReport quotientCheck(const FiniteGroup& group, const Subgroup& subgroupH, std::span<const Element> elements,
                         const Subgroup& normalN) {
  requireSameGroup(group, subgroupH);
  requireSameGroup(group, normalN);
  if (!isNormal(group, normalN)) throw PreconditionError("quotient: N is not normal");
  const auto d = sortedUnique(elements, group);
  const auto h = static_cast<std::int64_t>(subgroupH.order());
  CertReport r{"quotient", true, looseParams(h, static_cast<std::int64_t>(group.order()), static_cast<std::int64_t>(d.size())),
               Json::object(), {}};
  if (h % 2 != 0 || h * h != static_cast<std::int64_t>(group.order()))
    throw PreconditionError("quotient: requires |G| = |H|^2 with |H| even");

  const Quotient q = quotient(group, normalN);
  const auto profile = quotientProfile(q, subgroupH, d);
  const std::size_t u = q.group.order();
  r.witnesses["quotientOrder"] = u;
  r.witnesses["profile"] = profileJson(profile);

  std::int64_t sx = 0, sy = 0;
  for (const auto& e : profile) {
    sx += e.x;
    sy += e.y;
  }
  if (sx != static_cast<std::int64_t>(d.size()) || sy != h) addFailure(r, failure("profile sums differ from (k, h)"));

  const bool hInN = subgroupH.isSubsetOf(normalN);
  r.witnesses["hInN"] = hInN;
  // Require x_0 * den == num0 and x_i * den == numOther for i != 0.
  auto expectX = [&](std::int64_t den, std::int64_t num0, std::int64_t numOther) {
    for (std::size_t i = 0; i < u; ++i) {
      const std::int64_t want = i == 0 ? num0 : numOther;
      if (profile[i].x * den != want) {
        Json f = failure("coset of N meets D in the wrong number of points");
        f["coset"] = i;
        f["x"] = profile[i].x;
        f["expectedTimes" + std::to_string(den)] = want;
        addFailure(r, std::move(f));
        return;
      }
    }
  };
  auto requireHInN = [&] {
    if (!hInN) addFailure(r, failure("H is not contained in N"));
  };

  if (isPrime(u)) {
    const auto p = static_cast<std::int64_t>(u);
    r.witnesses["quotientType"] = "C" + std::to_string(u);
    requireHInN();
    expectX(2 * p, h * (h - p), h * h);
    return r;
  }
  if (u == 4 && hasElementOfOrder(q.group, 4)) {
    r.witnesses["quotientType"] = "C4";
    Element t = 0;
    for (Element x = 0; x < u; ++x)
      if (elementOrder(q.group, x) == 4) {
        t = x;
        break;
      }
    const std::array<Element, 4> order{0, t, q.group.multiply(t, t), q.group.power(t, 3)};
    std::array<std::int64_t, 4> x8{}, y{};
    for (int i = 0; i < 4; ++i) {
      x8[i] = 8 * profile[order[i]].x;
      y[i] = profile[order[i]].y;
    }
    r.witnesses["orderedBy"] = {order[0], order[1], order[2], order[3]};
    const std::int64_t a = h * (h - 2), b = h * (h + 2), s = h * h;
    const std::array<std::int64_t, 4> ySplit{h / 2, 0, h / 2, 0}, yWhole{h, 0, 0, 0};
    std::string family;
    if (y == ySplit && x8 == std::array<std::int64_t, 4>{a, a, a, b}) family = "i";
    else if (y == ySplit && x8 == std::array<std::int64_t, 4>{a, b, a, a}) family = "ii";
    else if (y == yWhole && x8 == std::array<std::int64_t, 4>{s - 4 * h, s, s, s}) family = "iii";
    if (family.empty()) addFailure(r, failure("C4 profile matches none of the three families"));
    else r.witnesses["family"] = family;
    return r;
  }
  if (auto name = swallowingQuotientName(q.group)) {
    r.witnesses["quotientType"] = *name;
    requireHInN();
    if (*name == "C2^2") expectX(8, h * h - 4 * h, h * h);
    if (*name == "C6") expectX(12, h * h - 6 * h, h * h);
    return r;
  }
  r.witnesses["quotientType"] = "unclassified";
  r.warnings.push_back("no claim for this quotient; profile reported only");
  return r;
}

std::vector<Subgroup> screeningKernels(const FiniteGroup& group, bool includeC4) {
  std::vector<Subgroup> out;
  for (auto& pin : normalSubgroupsOfPrimeIndex(group)) out.push_back(std::move(pin.subgroup));
  const std::size_t n = group.order();
  for (std::size_t u : {4, 6, 8, 9, 10, 12}) {
    if (n % u != 0 || u == n) continue;
    for (Subgroup& s : subgroupsOfOrder(group, n / u)) {
      if (!isNormal(group, s)) continue;
      const FiniteGroup qg = quotient(group, s).group;
      const bool c4 = includeC4 && u == 4 && hasElementOfOrder(qg, 4);
      if (c4 || swallowingQuotientName(qg)) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return std::pair(a.order(), a.members()) < std::pair(b.order(), b.members());
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CertReport structuralTests(const FiniteGroup& group, std::int64_t h, const std::optional<Subgroup>& subgroupH) {
  if (h < 1 || static_cast<std::size_t>(h * h) != group.order())
    throw InvalidArgument("screen: |G| = " + std::to_string(group.order()) + " is not h^2 for h = " + std::to_string(h));
  if (subgroupH) requireSameGroup(group, *subgroupH);
  CertReport r{"screen", true, looseParams(h, h * h, h * (h - 1) / 2), Json::object(), {}};
  if (h % 2 != 0) r.warnings.push_back("h is odd; no relative skew Hadamard difference set can exist");
  const auto hs = static_cast<std::size_t>(h);

  // T1: intersection of the H-swallowing kernels.
  Subgroup core = wholeGroup(group);
  const auto kernels = screeningKernels(group, false);
  for (const Subgroup& k : kernels) core = intersection(core, k);
  const bool t1 = core.order() % hs == 0;
  r.witnesses["T1"] = {{"pass", t1}, {"kernels", kernels.size()}, {"intersectionOrder", core.order()}};

  std::vector<Subgroup> candidates;
  if (subgroupH) {
    candidates.push_back(*subgroupH);
  } else {
    for (Subgroup& s : subgroupsOfOrder(group, hs))
      if (isNormal(group, s)) candidates.push_back(std::move(s));
  }

  // T2: the involutions generate a subgroup inside H.
  const auto inv = involutions(group);
  const Subgroup invClosure = closure(group, inv);
  const bool elementary = isElementaryAbelian2(invClosure);
  bool t2 = elementary && hs % invClosure.order() == 0 &&
            std::any_of(candidates.begin(), candidates.end(), [&](const Subgroup& c) { return invClosure.isSubsetOf(c); });
  r.witnesses["T2"] = {{"pass", t2},
                       {"involutions", inv.size()},
                       {"closureOrder", invClosure.order()},
                       {"elementaryAbelian", elementary}};

  // T3: a normal subgroup of order h.
  bool t3 = false;
  std::size_t normalCount = 0;
  if (subgroupH) {
    t3 = subgroupH->order() == hs && isNormal(group, *subgroupH);
    normalCount = t3 ? 1 : 0;
  } else {
    normalCount = candidates.size();
    t3 = normalCount > 0;
  }
  r.witnesses["T3"] = {{"pass", t3}, {"normalSubgroupsOfOrderH", normalCount}};

  // T4: H has no complement.
  const auto sameOrder = subgroupsOfOrder(group, hs);
  Json complementWitness = nullptr;
  bool t4 = false;
  for (const Subgroup& c : candidates) {
    if (c.order() != hs) continue;
    const auto hit = std::find_if(sameOrder.begin(), sameOrder.end(),
                                  [&](const Subgroup& l) { return intersection(c, l).order() == 1; });
    if (hit == sameOrder.end()) {
      t4 = true;
      break;
    }
    if (complementWitness.is_null()) complementWitness = hit->members();
  }
  Json t4j = {{"pass", t4}};
  if (!t4 && !complementWitness.is_null()) t4j["complement"] = complementWitness;
  r.witnesses["T4"] = t4j;

  for (auto [name, ok] : {std::pair{"T1", t1}, std::pair{"T2", t2}, std::pair{"T3", t3}, std::pair{"T4", t4}})
    if (!ok) addFailure(r, failure(std::string(name) + " fails"));
  return r;
}

CertReport checkStochastic(const FiniteGroup& group, std::span<const Element> elements) {
  const auto d = sortedUnique(elements, group);
  const auto k = static_cast<std::int64_t>(d.size());
  CertReport r{"stochastic", true, {0, static_cast<std::int64_t>(group.order()), k, 0, 0}, Json::object(), {}};
  std::vector<std::uint8_t> inD(group.order(), 0);
  for (Element x : d) inD[x] = 1;
  const std::size_t n = group.order();
  std::vector<std::int64_t> rowSum(n, 0), colSum(n, 0);
  for (Element y = 0; y < n; ++y)
    for (Element x = 0; x < n; ++x)
      if (inD[group.multiply(y, group.inverse(x))]) {
        ++rowSum[y];
        ++colSum[x];
      }
  for (std::size_t i = 0; i < n; ++i)
    if (rowSum[i] != k || colSum[i] != k) {
      Json f = failure("row or column sum differs from k");
      f["index"] = i;
      f["row"] = rowSum[i];
      f["column"] = colSum[i];
      addFailure(r, std::move(f));
      break;
    }
  // Edges x -> d x; reachability from the identity.
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Element> stack{group.identity()};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Element x = stack.back();
    stack.pop_back();
    for (Element s : d) {
      const Element y = group.multiply(s, x);
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  r.witnesses["reachable"] = reached;
  if (reached != n) addFailure(r, failure("Cayley digraph of D is not strongly connected"));
  return r;
}

const std::vector<std::string>& certificateNames() {
  static const std::vector<std::string> names{"dset", "rshds", "profile", "schur", "spectrum", "hadamard"};
  return names;
}

std::vector<CertReport> runChecks(const FiniteGroup& group, const Subgroup& subgroupH, std::span<const Element> elements,
                                  const std::vector<std::string>& names) {
  const auto& all = certificateNames();
  for (const auto& n : names)
    if (std::find(all.begin(), all.end(), n) == all.end()) throw InvalidArgument("certify: unknown check '" + n + "'");
  const auto h = static_cast<std::int64_t>(subgroupH.order());
  const ParameterSet fallback{h, static_cast<std::int64_t>(group.order()), static_cast<std::int64_t>(elements.size()), 0, 0};
  auto guarded = [&](const std::string& name, auto&& run) {
    try {
      return run();
    } catch (const PreconditionError& e) {
      CertReport r{name, false, fallback, Json::object(), {}};
      addFailure(r, failure(std::string("precondition: ") + e.what()));
      return r;
    }
  };
  std::vector<CertReport> out;
  for (const auto& name : all) {
    if (!names.empty() && std::find(names.begin(), names.end(), name) == names.end()) continue;
    if (name == "dset") out.push_back(checkDifferenceSet(group, elements));
    else if (name == "rshds") out.push_back(checkRSHDS(group, subgroupH, elements));
    else if (name == "profile") out.push_back(cosetProfile(group, subgroupH, elements));
    else if (name == "schur")
      out.push_back(guarded(name, [&] { return checkSchurRing(group, subgroupH, elements).report; }));
    else if (name == "spectrum") out.push_back(guarded(name, [&] { return spectrum(group, subgroupH, elements); }));
    else out.push_back(guarded(name, [&] { return checkHadamard(group, subgroupH, elements); }));
  }
  return out;
}

}  // namespace rshds
