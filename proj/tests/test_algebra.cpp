#include <doctest.h>

#include "oracles.hpp"
#include "rshds/algebra.hpp"
#include "rshds/constructions.hpp"
#include "rshds/errors.hpp"
#include "rshds/fixtures.hpp"

using namespace rshds;

namespace {

GroupAlgebraElement delta(const FiniteGroup& g, Element x) {
  GroupAlgebraElement e(g);
  e[x] = 1;
  return e;
}

}  // namespace

TEST_CASE("fromSet") {
  const FiniteGroup g = gnkGroup(2, 0);
  CHECK(fromSet(g, std::vector<Element>{}).isZero());
  CHECK(fromSet(g, std::vector<Element>{0}) == unit(g));
  std::vector<Element> all(16);
  for (Element i = 0; i < 16; ++i) all[i] = i;
  CHECK(fromSet(g, all) == groupSum(g));
  CHECK_THROWS_AS(fromSet(g, std::vector<Element>{3, 3}), InvalidArgument);
  CHECK_THROWS_AS(fromSet(g, std::vector<Element>{16}), InvalidArgument);
}

TEST_CASE("convolve examples") {
  const FiniteGroup g = gnkGroup(2, 1 - 1);
  for (Element x = 0; x < 16; ++x)
    for (Element y = 0; y < 16; ++y) CHECK(convolve(delta(g, x), delta(g, y)) == delta(g, g.multiply(x, y)));
  const auto c = gnkDifferenceSet(2, 0);
  const auto h = fromSet(g, c.subgroupH.members());
  CHECK(convolve(h, h) == 4 * h);
  const auto d = fromSet(g, c.elements);
  CHECK(convolve(d, h) == 2 * (groupSum(g) - h));
  CHECK_THROWS_AS(convolve(d, unit(gnkGroup(3, 0))), InvalidArgument);
}

TEST_CASE("star") {
  const FiniteGroup g = g36Group();
  for (Element x = 0; x < g.order(); ++x) CHECK(star(delta(g, x)) == delta(g, g.inverse(x)));
  std::mt19937_64 rng(7);
  const auto s = fromSet(g, oracle::randomSubset(rng, 36, 11));
  CHECK(star(star(s)) == s);
  for (const Subgroup& sub : subgroupsOfOrder(g, 6)) {
    const auto x = fromSet(g, sub.members());
    CHECK(star(x) == x);
  }
}

TEST_CASE("identity coefficient") {
  const auto c = gnkDifferenceSet(2, 0);
  const auto d = fromSet(c.group, c.elements);
  CHECK(identityCoefficient(d) == 0);
  // Brute-force count of pairs with x y^{-1} = 1.
  std::int64_t pairs = 0;
  for (Element x : c.elements)
    for (Element y : c.elements) pairs += c.group.multiply(x, oracle::inverseByScan(c.group, y)) == 0;
  CHECK(pairs == 6);
  CHECK(identityCoefficient(convolve(d, star(d))) == pairs);
  CHECK(identityCoefficient(unit(c.group)) == 1);
}

TEST_CASE("polyEval examples") {
  const auto c = gnkDifferenceSet(2, 0);
  const FiniteGroup& g = c.group;
  const auto d = fromSet(g, c.elements);
  const auto shifted = polyEval(d, {-6, 1});
  CHECK(shifted[0] == -6);
  for (Element x : c.elements) CHECK(shifted[x] == 1);
  const auto h = fromSet(g, c.subgroupH.members());
  CHECK(polyEval(h, {0, 0, 1}) == 4 * h);
  const IntPolynomial p = polyMultiply(polyMultiply({4, 2}, {16, 0, 4}), {-6, 1});
  CHECK(polyEval(d, p).isZero());
  CHECK(polyEval(d, {}).isZero());
}

TEST_CASE("polyMultiply") {
  CHECK(polyMultiply({1, 1}, {-1, 1}) == IntPolynomial{-1, 0, 1});
  CHECK(polyMultiply({}, {1}).empty());
}

TEST_CASE("checked arithmetic raises instead of wrapping") {
  const std::int64_t big = std::int64_t{1} << 62;
  CHECK_THROWS_AS(checked::add(big, big), OverflowError);
  CHECK_THROWS_AS(checked::mul(big, 4), OverflowError);
  CHECK(checked::mul(big, 1) == big);
  const FiniteGroup g = cyclicGroup(2);
  GroupAlgebraElement x(g);
  x[0] = big;
  x[1] = big;
  CHECK_THROWS_AS(convolve(x, x), OverflowError);
  CHECK_THROWS_AS(x + x, OverflowError);
  CHECK_THROWS_AS(4 * x, OverflowError);
}

TEST_CASE("sum of squares at the identity of x star(x)") {
  std::mt19937_64 rng(11);
  const FiniteGroup g = gnkGroup(3, 1);
  for (int trial = 0; trial < 20; ++trial) {
    GroupAlgebraElement x(g);
    std::int64_t squares = 0;
    for (Element e = 0; e < g.order(); ++e) {
      x[e] = static_cast<std::int64_t>(rng() % 7) - 3;
      squares += x[e] * x[e];
    }
    CHECK(identityCoefficient(convolve(x, star(x))) == squares);
  }
}
