#include <algorithm>
#include <bit>

#include "rshds/constructions.hpp"
#include "rshds/errors.hpp"

namespace rshds {

namespace {

/// The unique normal w with {u : u.w = 0} equal to the given coordinate set.
std::uint64_t normalOf(int dim, const std::vector<std::uint64_t>& members) {
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << dim); ++w) {
    const bool ok = std::all_of(members.begin(), members.end(),
                                [&](std::uint64_t u) { return (std::popcount(u & w) & 1) == 0; });
    if (ok) return w;
  }
  return 0;
}

struct Matcher {
  const FiniteGroup& group;
  const CosetDecomposition& dec;
  const F2Coordinates& coords;
  int dim = 0;
  std::size_t h = 0;
  std::vector<std::size_t> partner;
  // conj[i][v] = normal of t_i H_v t_i^{-1}; conjBack[i] inverts it.
  std::vector<std::vector<std::uint64_t>> conj, conjBack;
  // Coordinates of t_i t_{partner(i)}.
  std::vector<std::uint64_t> productCoord;

  std::vector<std::uint64_t> assign;
  std::vector<std::uint8_t> used;
  std::vector<HyperplaneMatching> found;
  std::size_t limit = 1;

  Matcher(const FiniteGroup& g, const CosetDecomposition& d, const F2Coordinates& c)
      : group(g), dec(d), coords(c), dim(c.dimension()), h(d.index()) {
    const std::size_t planes = std::size_t{1} << dim;
    partner.assign(h, 0);
    productCoord.assign(h, 0);
    conj.assign(h, std::vector<std::uint64_t>(planes, 0));
    conjBack.assign(h, std::vector<std::uint64_t>(planes, 0));
    for (std::size_t i = 1; i < h; ++i) {
      const Element t = dec.transversal[i];
      const Element ti = group.inverse(t);
      partner[i] = dec.cosetOf[ti];
      productCoord[i] = coords.coordinate[group.multiply(t, dec.transversal[partner[i]])];
      for (std::uint64_t v = 1; v < planes; ++v) {
        std::vector<std::uint64_t> image;
        for (std::uint64_t u = 0; u < planes; ++u) {
          if (std::popcount(u & v) & 1) continue;
          const Element x = coords.element[u];
          image.push_back(coords.coordinate[group.multiply(group.multiply(t, x), ti)]);
        }
        const std::uint64_t w = normalOf(dim, image);
        conj[i][v] = w;
        conjBack[i][w] = v;
      }
    }
  }

  static bool inPlane(std::uint64_t coord, std::uint64_t normal) { return (std::popcount(coord & normal) & 1) == 0; }

  void record() {
    HyperplaneMatching a{dec, coords, partner, std::vector<Hyperplane>(h, Hyperplane{{dim, 0}})};
    for (std::size_t i = 1; i < h; ++i) a.hyperplanes[i] = {{dim, assign[i]}};
    found.push_back(std::move(a));
  }

  void run(std::size_t i) {
    if (found.size() >= limit) return;
    while (i < h && assign[i] != 0) ++i;
    if (i == h) {
      record();
      return;
    }
    const std::size_t j = partner[i];
    const std::uint64_t planes = std::uint64_t{1} << dim;
    for (std::uint64_t v = 1; v < planes && found.size() < limit; ++v) {
      if (used[v]) continue;
      if (!inPlane(productCoord[i], v)) continue;
      if (j == i) {
        if (conj[i][v] != v) continue;
        assign[i] = v;
        used[v] = 1;
        run(i + 1);
        used[v] = 0;
        assign[i] = 0;
        continue;
      }
      // H_i = t_i H_j t_i^{-1} forces H_j.
      const std::uint64_t w = conjBack[i][v];
      if (w == v || used[w] || assign[j] != 0) continue;
      if (conj[j][v] != w) continue;
      if (!inPlane(productCoord[j], w)) continue;
      assign[i] = v;
      assign[j] = w;
      used[v] = used[w] = 1;
      run(i + 1);
      used[v] = used[w] = 0;
      assign[i] = assign[j] = 0;
    }
  }
};

F2Coordinates checkPreconditions(const FiniteGroup& group, const Subgroup& subgroupH,
                                 const CosetDecomposition& decomposition) {
  if (!subgroupH.group().sameAs(group)) throw PreconditionError("hyperplane matching: subgroup belongs to a different group");
  if (!(decomposition.subgroup == subgroupH)) throw PreconditionError("hyperplane matching: decomposition is for another subgroup");
  auto coords = f2Coordinates(subgroupH);
  if (!coords) throw PreconditionError("hyperplane matching: H is not elementary abelian of 2-power order");
  if (subgroupH.order() < 2) throw PreconditionError("hyperplane matching: H must be nontrivial");
  if (decomposition.index() != subgroupH.order())
    throw PreconditionError("hyperplane matching: index of H (" + std::to_string(decomposition.index()) + ") differs from |H| (" +
                            std::to_string(subgroupH.order()) + ")");
  if (!isNormal(group, subgroupH)) throw PreconditionError("hyperplane matching: H is not normal");
  if (decomposition.transversal.empty() || decomposition.transversal[0] != 0)
    throw PreconditionError("hyperplane matching: transversal must start with the identity");
  return std::move(*coords);
}

}  // namespace

std::vector<HyperplaneMatching> allHyperplaneMatchings(const FiniteGroup& group, const Subgroup& subgroupH,
                                              const CosetDecomposition& decomposition, std::size_t limit) {
  const F2Coordinates coords = checkPreconditions(group, subgroupH, decomposition);
  Matcher m(group, decomposition, coords);
  m.limit = limit;
  m.assign.assign(m.h, 0);
  m.used.assign(std::size_t{1} << m.dim, 0);
  m.run(1);
  return std::move(m.found);
}

std::optional<HyperplaneMatching> findHyperplaneMatching(const FiniteGroup& group, const Subgroup& subgroupH,
                                               const CosetDecomposition& decomposition) {
  auto all = allHyperplaneMatchings(group, subgroupH, decomposition, 1);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::optional<std::string> verifyHyperplaneMatching(const HyperplaneMatching& a) {
  const CosetDecomposition& dec = a.decomposition;
  const FiniteGroup& g = dec.subgroup.group();
  const std::size_t h = dec.index();
  const int dim = a.coordinates.dimension();
  if (h != dec.subgroup.order()) return "index differs from |H|";
  if (a.hyperplanes.size() != h || a.partner.size() != h) return "assignment has wrong length";

  auto planeMembers = [&](std::uint64_t normal) {
    std::vector<Element> out;
    for (F2Vector u : hyperplaneMembers({{dim, normal}})) out.push_back(a.coordinates.element[u.bits]);
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<std::uint64_t> normals;
  for (std::size_t i = 1; i < h; ++i) {
    if (a.hyperplanes[i].normal.isZero()) return "coset " + std::to_string(i) + " has no hyperplane";
    normals.push_back(a.hyperplanes[i].normal.bits);
  }
  std::sort(normals.begin(), normals.end());
  if (std::adjacent_find(normals.begin(), normals.end()) != normals.end()) return "hyperplanes are not distinct";

  for (std::size_t i = 1; i < h; ++i) {
    const Element t = dec.transversal[i];
    const Element ti = g.inverse(t);
    const std::size_t j = dec.cosetOf[ti];
    if (a.partner[i] != j) return "partner of coset " + std::to_string(i) + " is wrong";
    std::vector<Element> conjugated;
    for (Element x : planeMembers(a.hyperplanes[j].normal.bits)) conjugated.push_back(g.multiply(g.multiply(t, x), ti));
    std::sort(conjugated.begin(), conjugated.end());
    const auto target = planeMembers(a.hyperplanes[i].normal.bits);
    if (conjugated != target) return "conjugation condition fails at coset " + std::to_string(i);
    const Element prod = g.multiply(t, dec.transversal[j]);
    if (!std::binary_search(target.begin(), target.end(), prod))
      return "t_i t_j not in H_i at coset " + std::to_string(i);
  }
  return std::nullopt;
}

DifferenceSetCandidate hyperplaneMatchingDifferenceSet(const HyperplaneMatching& a) {
  const CosetDecomposition& dec = a.decomposition;
  const FiniteGroup& g = dec.subgroup.group();
  const int dim = a.coordinates.dimension();
  std::vector<Element> elements;
  for (std::size_t i = 1; i < dec.index(); ++i)
    for (F2Vector u : hyperplaneMembers(a.hyperplanes[i]))
      elements.push_back(g.multiply(a.coordinates.element[u.bits], dec.transversal[i]));
  std::sort(elements.begin(), elements.end());
  return {g, dec.subgroup, std::move(elements), parameterFormulas(std::int64_t{1} << dim), Provenance::HyperplaneMatching, true};
}

}  // namespace rshds
