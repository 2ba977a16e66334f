#include "rshds/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <sstream>

#include "rshds/errors.hpp"

namespace rshds {

namespace detail {

// Tables are materialised up to this order; larger G_{n,k} / C_4^n groups
// multiply on the fly.
inline constexpr std::size_t kTableLimit = 1024;

struct GroupData {
  Backend backend = Backend::CayleyTable;
  std::size_t order = 0;
  int n = 0;
  int k = 0;
  std::vector<Element> table;
  std::vector<Element> inverses;
  std::vector<std::string> names;
  std::size_t distinguished = 0;

  Element multiplyDirect(Element a, Element b) const;
};

namespace {

Element c4Add(int n, Element a, Element b) {
  // x_i = e_i + 2 f_i in Z_4.
  const GnkWord x = gnkDecode(n, a);
  const GnkWord y = gnkDecode(n, b);
  GnkWord out;
  for (int i = 0; i < n; ++i) {
    const unsigned xi = ((x.e >> i) & 1U) + 2 * ((x.f >> i) & 1U);
    const unsigned yi = ((y.e >> i) & 1U) + 2 * ((y.f >> i) & 1U);
    const unsigned s = (xi + yi) % 4;
    out.e |= static_cast<std::uint64_t>(s & 1U) << i;
    out.f |= static_cast<std::uint64_t>(s >> 1) << i;
  }
  return gnkEncode(n, out);
}

}  // namespace

Element GroupData::multiplyDirect(Element a, Element b) const {
  switch (backend) {
    case Backend::Gnk:
      return gnkEncode(n, gnkMultiply(n, k, gnkDecode(n, a), gnkDecode(n, b)));
    case Backend::C4Power:
      return c4Add(n, a, b);
    case Backend::CayleyTable:
      break;
  }
  return table[static_cast<std::size_t>(a) * order + b];
}

}  // namespace detail

namespace {

void finalize(detail::GroupData& d) {
  if (d.table.empty() && d.order <= detail::kTableLimit) {
    d.table.resize(d.order * d.order);
    for (std::size_t a = 0; a < d.order; ++a)
      for (std::size_t b = 0; b < d.order; ++b)
        d.table[a * d.order + b] = d.multiplyDirect(static_cast<Element>(a), static_cast<Element>(b));
  }
  d.inverses.assign(d.order, 0);
  if (d.backend == Backend::CayleyTable) {
    for (std::size_t a = 0; a < d.order; ++a) {
      const Element* row = &d.table[a * d.order];
      d.inverses[a] = static_cast<Element>(std::find(row, row + d.order, 0) - row);
    }
  } else {
    // Both 2-group backends have exponent dividing 4.
    for (std::size_t a = 0; a < d.order; ++a) {
      const auto x = static_cast<Element>(a);
      d.inverses[a] = d.multiplyDirect(d.multiplyDirect(x, x), x);
    }
  }
}

std::string joinTriple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

GnkWord gnkMultiply(int n, int k, GnkWord x, GnkWord y) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  std::uint64_t carry = 0;
  // a_j a_1 = a_1 a_j b_{j-1} for 2 <= j <= k+1.
  if (y.e & 1U) {
    const std::uint64_t twisted = ((std::uint64_t{1} << k) - 1) << 1;
    carry ^= (x.e & twisted) >> 1;
  }
  // a_i^2 = b_{i+k}, indices mod n.
  const std::uint64_t common = x.e & y.e;
  carry ^= ((common << k) | (k == 0 ? 0 : common >> (n - k))) & mask;
  return {x.e ^ y.e, x.f ^ y.f ^ carry};
}

FiniteGroup gnkGroup(int n, int k) {
  if (n < 2) throw InvalidArgument("gnk: n must be at least 2");
  if (k < 0) throw InvalidArgument("gnk: k must be non-negative");
  if (k >= n - 1) throw InvalidArgument("gnk: k must satisfy k < n-1 (A + P^{k+1} is singular otherwise)");
  if (n > 12) throw InvalidArgument("gnk: n > 12 not supported");
  auto d = std::make_shared<detail::GroupData>();
  d->backend = Backend::Gnk;
  d->n = n;
  d->k = k;
  d->order = std::size_t{1} << (2 * n);
  d->distinguished = std::size_t{1} << n;
  finalize(*d);
  return FiniteGroup(std::move(d));
}

FiniteGroup c4PowerGroup(int n) {
  if (n < 1) throw InvalidArgument("c4n: n must be at least 1");
  if (n > 12) throw InvalidArgument("c4n: n > 12 not supported");
  auto d = std::make_shared<detail::GroupData>();
  d->backend = Backend::C4Power;
  d->n = n;
  d->order = std::size_t{1} << (2 * n);
  d->distinguished = std::size_t{1} << n;
  finalize(*d);
  return FiniteGroup(std::move(d));
}

FiniteGroup uncheckedTableGroup(std::vector<Element> table, std::vector<std::string> names) {
  auto d = std::make_shared<detail::GroupData>();
  d->order = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(table.size()))));
  d->table = std::move(table);
  d->names = std::move(names);
  finalize(*d);
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::fromCayleyTable(std::vector<Element> table, std::vector<std::string> names) {
  const auto order = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(table.size()))));
  if (order == 0 || order * order != table.size())
    throw ValidationError("cayley table: entry count " + std::to_string(table.size()) + " is not a positive square");
  if (!names.empty() && names.size() != order)
    throw ValidationError("cayley table: names has " + std::to_string(names.size()) + " entries, expected " +
                          std::to_string(order));
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= order)
      throw ValidationError("cayley table: entry out of range at row " + std::to_string(i / order) + ", column " +
                            std::to_string(i % order));

  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(table[a * order + b]); };

  for (std::size_t x = 0; x < order; ++x) {
    if (at(0, x) != x || at(x, 0) != x)
      throw ValidationError("cayley table: identity not at index 0 (witness element " + std::to_string(x) + ")");
  }
  std::vector<std::size_t> seen(order, 0);
  std::size_t stamp = 0;
  for (std::size_t r = 0; r < order; ++r) {
    ++stamp;
    for (std::size_t c = 0; c < order; ++c) {
      if (seen[at(r, c)] == stamp)
        throw ValidationError("cayley table: Latin-square violation, row " + std::to_string(r) + " repeats entry " +
                              std::to_string(at(r, c)));
      seen[at(r, c)] = stamp;
    }
  }
  for (std::size_t c = 0; c < order; ++c) {
    ++stamp;
    for (std::size_t r = 0; r < order; ++r) {
      if (seen[at(r, c)] == stamp)
        throw ValidationError("cayley table: Latin-square violation, column " + std::to_string(c) +
                              " repeats entry " + std::to_string(at(r, c)));
      seen[at(r, c)] = stamp;
    }
  }

  auto checkTriple = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (at(at(a, b), c) != at(a, at(b, c)))
      throw ValidationError("cayley table: associativity violation at triple " + joinTriple(a, b, c));
  };
  if (order <= 512) {
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        for (std::size_t c = 0; c < order; ++c) checkTriple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<std::size_t> pick(0, order - 1);
    for (int i = 0; i < 1'000'000; ++i) checkTriple(pick(rng), pick(rng), pick(rng));
  }

  return uncheckedTableGroup(std::move(table), std::move(names));
}

Backend FiniteGroup::backend() const { return data_->backend; }
std::size_t FiniteGroup::order() const { return data_->order; }
int FiniteGroup::rank() const { return data_->n; }
int FiniteGroup::twist() const { return data_->k; }
std::size_t FiniteGroup::distinguishedOrder() const { return data_->distinguished; }
const std::vector<std::string>& FiniteGroup::names() const { return data_->names; }

Element FiniteGroup::multiply(Element a, Element b) const {
  const auto& d = *data_;
  if (!d.table.empty()) return d.table[static_cast<std::size_t>(a) * d.order + b];
  return d.multiplyDirect(a, b);
}

Element FiniteGroup::inverse(Element a) const { return data_->inverses[a]; }

Element FiniteGroup::power(Element a, long long exponent) const {
  if (exponent < 0) {
    a = inverse(a);
    exponent = -exponent;
  }
  Element result = identity();
  while (exponent > 0) {
    if (exponent & 1) result = multiply(result, a);
    a = multiply(a, a);
    exponent >>= 1;
  }
  return result;
}

std::string FiniteGroup::elementName(Element x) const {
  const auto& d = *data_;
  if (!d.names.empty()) return d.names[x];
  std::ostringstream os;
  switch (d.backend) {
    case Backend::Gnk: {
      const GnkWord w = gnkDecode(d.n, x);
      if (w.e == 0 && w.f == 0) return "1";
      for (int i = 0; i < d.n; ++i)
        if ((w.e >> i) & 1U) os << "a" << i + 1;
      for (int i = 0; i < d.n; ++i)
        if ((w.f >> i) & 1U) os << "b" << i + 1;
      return os.str();
    }
    case Backend::C4Power: {
      const GnkWord w = gnkDecode(d.n, x);
      os << "(";
      for (int i = 0; i < d.n; ++i) {
        if (i) os << ",";
        os << ((w.e >> i) & 1U) + 2 * ((w.f >> i) & 1U);
      }
      os << ")";
      return os.str();
    }
    case Backend::CayleyTable:
      break;
  }
  return std::to_string(x);
}

std::string FiniteGroup::describe() const {
  const auto& d = *data_;
  switch (d.backend) {
    case Backend::Gnk:
      return "gnk:" + std::to_string(d.n) + "," + std::to_string(d.k);
    case Backend::C4Power:
      return "c4n:" + std::to_string(d.n);
    case Backend::CayleyTable:
      break;
  }
  return "table:" + std::to_string(d.order);
}

bool FiniteGroup::sameAs(const FiniteGroup& other) const {
  if (data_ == other.data_) return true;
  const auto& a = *data_;
  const auto& b = *other.data_;
  if (a.backend != b.backend || a.order != b.order) return false;
  if (a.backend == Backend::CayleyTable) return a.table == b.table;
  return a.n == b.n && a.k == b.k;
}

std::optional<std::string> findAxiomViolation(const FiniteGroup& group) {
  const std::size_t n = group.order();
  for (Element x = 0; x < n; ++x) {
    if (group.multiply(0, x) != x || group.multiply(x, 0) != x)
      return "identity fails at " + std::to_string(x);
    const Element y = group.inverse(x);
    if (group.multiply(x, y) != 0 || group.multiply(y, x) != 0) return "inverse fails at " + std::to_string(x);
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = group.multiply(a, b);
      for (Element c = 0; c < n; ++c)
        if (group.multiply(ab, c) != group.multiply(a, group.multiply(b, c)))
          return "associativity fails at " + joinTriple(a, b, c);
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup::Subgroup(FiniteGroup group, std::vector<Element> members)
    : group_(std::move(group)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(group_.order(), 0);
  for (Element x : members_) {
    if (x >= group_.order()) throw InvalidArgument("subgroup: element index out of range");
    mask_[x] = 1;
  }
  if (members_.empty() || members_.front() != 0) throw ValidationError("subgroup: identity missing");
  for (Element a : members_)
    for (Element b : members_)
      if (!mask_[group_.multiply(a, b)])
        throw ValidationError("subgroup: not closed (" + std::to_string(a) + "*" + std::to_string(b) + ")");
}

Subgroup::Subgroup(FiniteGroup group, std::vector<Element> sortedMembers, Trusted)
    : group_(std::move(group)), members_(std::move(sortedMembers)) {
  mask_.assign(group_.order(), 0);
  for (Element x : members_) mask_[x] = 1;
}

bool Subgroup::isSubsetOf(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Element x) { return other.contains(x); });
}

std::optional<Subgroup> distinguishedSubgroup(const FiniteGroup& group) {
  const std::size_t h = group.distinguishedOrder();
  if (h == 0) return std::nullopt;
  std::vector<Element> members(h);
  for (std::size_t i = 0; i < h; ++i) members[i] = static_cast<Element>(i);
  return Subgroup(group, std::move(members), Subgroup::Trusted{});
}

Subgroup trivialSubgroup(const FiniteGroup& group) { return Subgroup(group, {0}, Subgroup::Trusted{}); }

Subgroup wholeGroup(const FiniteGroup& group) {
  std::vector<Element> all(group.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  return Subgroup(group, std::move(all), Subgroup::Trusted{});
}

namespace {

std::vector<Element> closeUnder(const FiniteGroup& group, std::span<const Element> seed,
                                std::span<const Element> generators) {
  std::vector<std::uint8_t> mask(group.order(), 0);
  std::vector<Element> members;
  std::deque<Element> queue;
  auto add = [&](Element x) {
    if (!mask[x]) {
      mask[x] = 1;
      members.push_back(x);
      queue.push_back(x);
    }
  };
  add(0);
  for (Element x : seed) add(x);
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element g : generators) add(group.multiply(x, g));
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

Subgroup closure(const FiniteGroup& group, std::span<const Element> generators) {
  for (Element g : generators)
    if (g >= group.order()) throw InvalidArgument("closure: generator index out of range");
  return Subgroup(group, closeUnder(group, {}, generators), Subgroup::Trusted{});
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> out;
  for (Element x : a.members())
    if (b.contains(x)) out.push_back(x);
  return Subgroup(a.group(), std::move(out), Subgroup::Trusted{});
}

namespace {

std::vector<Element> greedyGenerators(const FiniteGroup& group, std::span<const Element> candidates) {
  std::vector<Element> gens;
  std::vector<std::uint8_t> span(group.order(), 0);
  span[0] = 1;
  for (Element x : candidates) {
    if (span[x]) continue;
    gens.push_back(x);
    for (Element y : closeUnder(group, {}, gens)) span[y] = 1;
  }
  return gens;
}

}  // namespace

std::vector<Element> generatingSet(const FiniteGroup& group) {
  std::vector<Element> all(group.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  return greedyGenerators(group, all);
}

std::vector<Element> generatingSet(const Subgroup& sub) { return greedyGenerators(sub.group(), sub.members()); }

bool isNormal(const FiniteGroup& group, const Subgroup& sub) {
  for (Element g : generatingSet(group)) {
    const Element gi = group.inverse(g);
    for (Element s : sub.members())
      if (!sub.contains(group.multiply(group.multiply(g, s), gi))) return false;
  }
  return true;
}

std::vector<Element> CosetDecomposition::members(std::size_t coset) const {
  const FiniteGroup& g = subgroup.group();
  std::vector<Element> out;
  out.reserve(subgroup.order());
  for (Element h : subgroup.members()) out.push_back(g.multiply(h, transversal[coset]));
  std::sort(out.begin(), out.end());
  return out;
}

CosetDecomposition cosets(const FiniteGroup& group, const Subgroup& sub) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  CosetDecomposition dec{sub, {}, std::vector<std::size_t>(group.order(), kUnset)};
  for (Element g = 0; g < group.order(); ++g) {
    if (dec.cosetOf[g] != kUnset) continue;
    const std::size_t c = dec.transversal.size();
    dec.transversal.push_back(g);
    for (Element h : sub.members()) dec.cosetOf[group.multiply(h, g)] = c;
  }
  return dec;
}

Quotient quotient(const FiniteGroup& group, const Subgroup& normalSub) {
  if (!isNormal(group, normalSub)) throw PreconditionError("quotient: subgroup is not normal");
  CosetDecomposition dec = cosets(group, normalSub);
  const std::size_t q = dec.index();
  std::vector<Element> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      table[a * q + b] =
          static_cast<Element>(dec.cosetOf[group.multiply(dec.transversal[a], dec.transversal[b])]);
  std::vector<Element> projection(group.order());
  for (std::size_t x = 0; x < group.order(); ++x) projection[x] = static_cast<Element>(dec.cosetOf[x]);

  if (q <= 64 && group.order() <= 1024) {
    for (Element x = 0; x < group.order(); ++x)
      for (Element y = 0; y < group.order(); ++y)
        if (projection[group.multiply(x, y)] != table[projection[x] * q + projection[y]])
          throw ValidationError("quotient: projection is not a homomorphism at (" + std::to_string(x) + ", " +
                                std::to_string(y) + ")");
  }
  return Quotient{uncheckedTableGroup(std::move(table)), std::move(projection), std::move(dec)};
}

std::vector<Element> involutions(const FiniteGroup& group) {
  std::vector<Element> out;
  for (Element g = 1; g < group.order(); ++g)
    if (group.multiply(g, g) == 0) out.push_back(g);
  return out;
}

std::size_t elementOrder(const FiniteGroup& group, Element x) {
  std::size_t n = 1;
  for (Element y = x; y != 0; y = group.multiply(y, x)) ++n;
  return n;
}

bool isAbelian(const FiniteGroup& group) {
  const auto gens = generatingSet(group);
  for (Element a : gens)
    for (Element b : gens)
      if (group.multiply(a, b) != group.multiply(b, a)) return false;
  return true;
}

bool isElementaryAbelian2(const Subgroup& sub) {
  const FiniteGroup& g = sub.group();
  for (Element x : sub.members())
    if (g.multiply(x, x) != 0) return false;
  // Exponent 2 forces commutativity.
  return true;
}

Subgroup derivedSubgroup(const FiniteGroup& group) {
  const auto gens = generatingSet(group);
  std::vector<Element> seeds;
  for (Element a : gens)
    for (Element b : gens) {
      const Element c = group.multiply(group.multiply(group.inverse(a), group.inverse(b)), group.multiply(a, b));
      if (c != 0) seeds.push_back(c);
    }
  // Normal closure of the generator commutators.
  for (;;) {
    auto members = closeUnder(group, {}, seeds);
    std::vector<std::uint8_t> mask(group.order(), 0);
    for (Element x : members) mask[x] = 1;
    bool grew = false;
    for (Element g : gens) {
      const Element gi = group.inverse(g);
      for (Element s : members) {
        const Element c = group.multiply(group.multiply(g, s), gi);
        if (!mask[c]) {
          mask[c] = 1;
          seeds.push_back(c);
          grew = true;
        }
      }
    }
    if (!grew) return Subgroup(group, std::move(members), Subgroup::Trusted{});
  }
}

std::vector<Subgroup> subgroupsOfOrder(const FiniteGroup& group, std::size_t m, std::size_t cap) {
  const std::size_t n = group.order();
  if (n > cap)
    throw BudgetExceeded("subgroup enumeration: group order " + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap),
                         0, 0);
  if (m == 0 || n % m != 0) throw InvalidArgument("subgroupsOfOrder: m must divide the group order");
  if (m == 1) return {trivialSubgroup(group)};

  std::vector<Element> candidates;
  for (Element x = 1; x < n; ++x)
    if (m % elementOrder(group, x) == 0) candidates.push_back(x);

  struct Node {
    std::vector<Element> members;
    std::vector<Element> gens;
  };
  std::map<std::vector<Element>, bool> seen;
  std::vector<std::vector<Element>> results;
  std::deque<Node> queue;
  queue.push_back({{0}, {}});
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    std::vector<std::uint8_t> mask(n, 0);
    for (Element x : node.members) mask[x] = 1;
    for (Element x : candidates) {
      if (mask[x]) continue;
      std::vector<Element> gens = node.gens;
      gens.push_back(x);
      auto members = closeUnder(group, node.members, gens);
      if (m % members.size() != 0) continue;
      if (!seen.emplace(members, true).second) continue;
      if (members.size() == m)
        results.push_back(std::move(members));
      else
        queue.push_back({std::move(members), std::move(gens)});
    }
  }
  std::sort(results.begin(), results.end());
  std::vector<Subgroup> out;
  out.reserve(results.size());
  for (auto& r : results) out.emplace_back(group, std::move(r), Subgroup::Trusted{});
  return out;
}

namespace {

std::vector<unsigned> primeDivisors(std::size_t n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; static_cast<std::size_t>(p) * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

}  // namespace

std::vector<PrimeIndexNormal> normalSubgroupsOfPrimeIndex(const FiniteGroup& group) {
  std::vector<PrimeIndexNormal> out;
  if (group.order() == 1) return out;
  const Subgroup derived = derivedSubgroup(group);
  for (unsigned p : primeDivisors(group.order())) {
    // K = G' G^p; G/K is elementary abelian of exponent p.
    std::vector<Element> seeds = generatingSet(derived);
    for (Element g = 0; g < group.order(); ++g) {
      const Element gp = group.power(g, p);
      if (gp != 0) seeds.push_back(gp);
    }
    const Subgroup kernel = closure(group, seeds);
    const Quotient q = quotient(group, kernel);
    const std::size_t qn = q.group.order();
    if (qn == 1) continue;

    // F_p coordinates of the quotient.
    const auto basis = generatingSet(q.group);
    const std::size_t r = basis.size();
    std::vector<std::vector<unsigned>> coords(qn);
    std::vector<unsigned> digits(r, 0);
    for (;;) {
      Element e = 0;
      for (std::size_t i = 0; i < r; ++i) e = q.group.multiply(e, q.group.power(basis[i], digits[i]));
      coords[e] = digits;
      std::size_t i = 0;
      while (i < r && ++digits[i] == p) digits[i++] = 0;
      if (i == r) break;
    }

    // Nonzero functionals, one per line: highest nonzero coordinate equal to 1.
    std::vector<unsigned> phi(r, 0);
    for (;;) {
      std::size_t i = 0;
      while (i < r && ++phi[i] == p) phi[i++] = 0;
      if (i == r) break;
      const auto lead = std::find_if(phi.rbegin(), phi.rend(), [](unsigned v) { return v != 0; });
      if (*lead != 1) continue;
      std::vector<Element> members;
      for (Element g = 0; g < group.order(); ++g) {
        const auto& c = coords[q.projection[g]];
        unsigned s = 0;
        for (std::size_t j = 0; j < r; ++j) s = (s + phi[j] * c[j]) % p;
        if (s == 0) members.push_back(g);
      }
      out.push_back({Subgroup(group, std::move(members), Subgroup::Trusted{}), p});
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimeIndexNormal& a, const PrimeIndexNormal& b) {
    if (a.prime != b.prime) return a.prime < b.prime;
    return a.subgroup.members() < b.subgroup.members();
  });
  return out;
}

Fingerprint fingerprint(const FiniteGroup& group) {
  Fingerprint fp;
  fp.order = group.order();
  fp.abelian = isAbelian(group);
  for (Element x = 0; x < group.order(); ++x) ++fp.orderSpectrum[elementOrder(group, x)];
  return fp;
}

std::optional<F2Coordinates> f2Coordinates(const Subgroup& sub) {
  if (!isElementaryAbelian2(sub)) return std::nullopt;
  const FiniteGroup& g = sub.group();
  F2Coordinates out{sub, generatingSet(sub), std::vector<std::uint64_t>(g.order(), 0), {}};
  const std::size_t dim = out.basis.size();
  if ((std::size_t{1} << dim) != sub.order()) return std::nullopt;
  out.element.assign(sub.order(), 0);
  for (std::uint64_t c = 0; c < sub.order(); ++c) {
    Element e = 0;
    for (std::size_t i = 0; i < dim; ++i)
      if ((c >> i) & 1U) e = g.multiply(e, out.basis[i]);
    out.element[c] = e;
    out.coordinate[e] = c;
  }
  return out;
}

}  // namespace rshds
