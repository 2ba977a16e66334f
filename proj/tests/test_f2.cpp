#include <doctest.h>

#include <bit>

#include <set>

#include "rshds/errors.hpp"
#include "rshds/f2.hpp"

using namespace rshds;

namespace {

F2Vector vec(std::initializer_list<int> coords) {
  F2Vector v{static_cast<int>(coords.size()), 0};
  int i = 0;
  for (int c : coords) v.bits |= std::uint64_t(c & 1) << i++;
  return v;
}

}  // namespace

TEST_CASE("dot") {
  CHECK(dot(vec({1, 0}), vec({1, 0})));
  CHECK_FALSE(dot(vec({1, 1}), vec({1, 1})));
  CHECK_FALSE(dot(vec({1, 1, 1}), vec({1, 1, 0})));
  CHECK_THROWS_AS(dot(vec({1, 1}), vec({1, 1, 0})), InvalidArgument);
}

TEST_CASE("mu examples") {
  CHECK(mu(vec({1, 0})) == vec({1, 0}));
  CHECK(mu(vec({1, 1})) == vec({0, 1}));
  CHECK(mu(vec({0, 1})) == vec({1, 1}));
  CHECK(mu(vec({1, 0, 1})) == vec({0, 1, 1}));
  CHECK(dot(vec({1, 0, 1}), vec({0, 1, 1})));
  CHECK_THROWS_AS(mu(vec({0, 0})), InvalidArgument);
}

TEST_CASE("kappa examples") {
  CHECK(kappa(vec({1, 1})) == vec({1, 1}));
  CHECK(kappa(vec({1, 1, 1})) == vec({1, 1, 0}));
  CHECK(kappa(vec({0, 1, 0})) == vec({1, 0, 1}));
  CHECK_THROWS_AS(kappa(vec({1})), InvalidArgument);
  CHECK_THROWS_AS(kappa(vec({0, 0, 0})), InvalidArgument);
}

TEST_CASE("odd-n exceptional set has six distinct members and is complement-closed") {
  for (int n = 3; n <= 13; n += 2) {
    const F2Vector ones = F2Vector::allOnes(n);
    const F2Vector e1 = F2Vector::prefixOnes(n, 1), e12 = F2Vector::prefixOnes(n, 2);
    const std::set<std::uint64_t> s{0, e1.bits, e12.bits, (ones ^ e1).bits, (ones ^ e12).bits, ones.bits};
    CHECK(s.size() == 6);
    for (std::uint64_t x : s) CHECK(s.count(x ^ ones.bits) == 1);
  }
}

TEST_CASE("mu and kappa are pairing involutions for n <= 14") {
  for (int n = 1; n <= 14; ++n) {
    CAPTURE(n);
    std::vector<std::uint8_t> seenMu(std::size_t{1} << n, 0), seenKappa(std::size_t{1} << n, 0);
    for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
      const F2Vector v{n, b};
      const F2Vector m = mu(v);
      REQUIRE(dot(v, m));
      REQUIRE(mu(m) == v);
      REQUIRE_FALSE(m.isZero());
      seenMu[m.bits]++;
      if (n >= 2) {
        const F2Vector k = kappa(v);
        REQUIRE_FALSE(dot(v, k));
        REQUIRE(kappa(k) == v);
        REQUIRE_FALSE(k.isZero());
        seenKappa[k.bits]++;
      }
    }
    for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
      CHECK(seenMu[b] == 1);
      if (n >= 2) CHECK(seenKappa[b] == 1);
    }
  }
}

TEST_CASE("hyperplane members") {
  CHECK(hyperplaneMembers({vec({1, 0})}) == std::vector<F2Vector>{vec({0, 0}), vec({0, 1})});
  CHECK(hyperplaneMembers({vec({1, 1})}) == std::vector<F2Vector>{vec({0, 0}), vec({1, 1})});
  const auto even = hyperplaneMembers({vec({1, 1, 1})});
  CHECK(even.size() == 4);
  for (F2Vector u : even) CHECK(std::popcount(u.bits) % 2 == 0);
  CHECK_THROWS_AS(hyperplaneMembers({vec({0, 0})}), InvalidArgument);
}

TEST_CASE("hyperplanes are index-2 subgroups and distinct normals give distinct planes") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::vector<std::uint64_t>> planes;
    for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w) {
      const auto m = hyperplaneMembers({{n, w}});
      REQUIRE(m.size() == (std::size_t{1} << (n - 1)));
      std::set<std::uint64_t> bits;
      for (F2Vector u : m) bits.insert(u.bits);
      for (std::uint64_t a : bits)
        for (std::uint64_t b : bits) REQUIRE(bits.count(a ^ b));
      planes.insert(std::vector<std::uint64_t>(bits.begin(), bits.end()));
    }
    CHECK(planes.size() == (std::size_t{1} << n) - 1);
  }
}

TEST_CASE("h1 pairing check") {
  CHECK(h1PairingCheck(3, 1));
  CHECK_FALSE(h1PairingCheck(3, 2));
  CHECK(h1PairingCheck(2, 0));
  for (int n = 2; n <= 12; ++n)
    for (int k = 0; k <= n - 1; ++k) CHECK(h1PairingCheck(n, k) == (k < n - 1));
}

TEST_CASE("rank") {
  CHECK(f2Rank({1, 2, 3}) == 2);
  CHECK(f2Rank({1, 2, 4}) == 3);
  CHECK(f2Rank({0, 0}) == 0);
}
