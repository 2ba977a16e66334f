#include "rshds/fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rshds/errors.hpp"

namespace rshds {

FiniteGroup groupFromOperation(std::size_t order, const std::function<Element(Element, Element)>& op,
                               std::vector<std::string> names) {
  std::vector<Element> table(order * order);
  for (Element x = 0; x < order; ++x)
    for (Element y = 0; y < order; ++y) table[x * order + y] = op(x, y);
  return uncheckedTableGroup(std::move(table), std::move(names));
}

FiniteGroup cyclicGroup(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group: order must be positive");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : "c^" + std::to_string(i));
  return groupFromOperation(n, [n](Element x, Element y) { return static_cast<Element>((x + y) % n); },
                            std::move(names));
}

FiniteGroup elementaryAbelian2(int n) {
  if (n < 0 || n > 10) throw InvalidArgument("elementary abelian group: rank out of range");
  return groupFromOperation(std::size_t{1} << n, [](Element x, Element y) { return x ^ y; });
}

FiniteGroup directProduct(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t nb = b.order();
  std::vector<std::string> names;
  for (Element i = 0; i < a.order(); ++i)
    for (Element j = 0; j < nb; ++j) names.push_back("(" + a.elementName(i) + "," + b.elementName(j) + ")");
  return groupFromOperation(
      a.order() * nb,
      [&](Element x, Element y) {
        return static_cast<Element>(a.multiply(x / nb, y / nb) * nb + b.multiply(x % nb, y % nb));
      },
      std::move(names));
}

FiniteGroup cyclicSemidirect(std::size_t n, std::size_t m, std::size_t r) {
  if (n == 0 || m == 0) throw InvalidArgument("semidirect product: orders must be positive");
  // rpow[j] = r^j mod n
  std::vector<std::size_t> rpow(m + 1, 1 % n);
  for (std::size_t j = 1; j <= m; ++j) rpow[j] = rpow[j - 1] * r % n;
  if (rpow[m] != 1 % n) throw InvalidArgument("semidirect product: r^m must be 1 mod n");
  std::vector<std::string> names;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::string s;
      if (i) s += i == 1 ? "c" : "c^" + std::to_string(i);
      if (j) s += j == 1 ? "a" : "a^" + std::to_string(j);
      names.push_back(s.empty() ? "1" : s);
    }
  // a^j c^k = c^{k r^{-j}} a^j; with a^{-1} c a = c^r we have c a = a c^r, so a^j c^k = c^{k s^j} a^j
  // where s = r^{-1} = r^{m-1}.
  return groupFromOperation(
      n * m,
      [=](Element x, Element y) {
        const std::size_t i = x % n, j = x / n, k = y % n, l = y / n;
        const std::size_t s = rpow[(m - 1) * j % m];
        return static_cast<Element>(((j + l) % m) * n + (i + k * s) % n);
      },
      std::move(names));
}

FiniteGroup dihedralGroup(std::size_t n) { return cyclicSemidirect(n, 2, n - 1); }

FiniteGroup dicyclicGroup(std::size_t n) {
  if (n == 0) throw InvalidArgument("dicyclic group: n must be positive");
  const std::size_t a = 2 * n;
  // a^i x^j at j * 2n + i
  return groupFromOperation(4 * n, [=](Element x, Element y) {
    const std::size_t i = x % a, j = x / a, k = y % a, l = y / a;
    if (j == 0) return static_cast<Element>(l * a + (i + k) % a);
    // x a^k = a^{-k} x
    const std::size_t base = (i + a - k) % a;
    if (l == 0) return static_cast<Element>(a + base);
    return static_cast<Element>((base + n) % a);
  });
}

FiniteGroup alternatingGroup(int n) {
  if (n < 1 || n > 7) throw InvalidArgument("alternating group: degree out of range");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, Element> index;
  for (Element i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string s = "[";
    for (int v : q) s += std::to_string(v);
    names.push_back(s + "]");
  }
  // (xy)(t) = x(y(t)): apply y first.
  return groupFromOperation(
      perms.size(),
      [&](Element x, Element y) {
        std::vector<int> r(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t) r[t] = perms[x][perms[y][t]];
        return index.at(r);
      },
      std::move(names));
}

FiniteGroup g36Group() { return cyclicSemidirect(9, 4, 8); }

std::optional<FiniteGroup> builtinGroup(const std::string& name) {
  if (name == "g36_1") return g36Group();
  if (name == "c4") return cyclicGroup(4);
  if (name == "c6") return cyclicGroup(6);
  if (name == "c16") return cyclicGroup(16);
  if (name == "c2_4") return elementaryAbelian2(4);
  if (name == "c4_2") return directProduct(cyclicGroup(4), cyclicGroup(4));
  if (name == "s3") return dihedralGroup(3);
  if (name == "a4") return alternatingGroup(4);
  if (name == "a5") return alternatingGroup(5);
  if (name == "q8") return dicyclicGroup(2);
  if (name == "d8") return dihedralGroup(4);
  return std::nullopt;
}

std::vector<std::string> builtinGroupNames() {
  return {"a4", "a5", "c16", "c2_4", "c4", "c4_2", "c6", "d8", "g36_1", "q8", "s3"};
}

}  // namespace rshds
