#include "rshds/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rshds/errors.hpp"

namespace rshds {

const char* toString(Provenance p) {
  switch (p) {
    case Provenance::GnkConstruction:
      return "gnk-construction";
    case Provenance::HyperplaneMatching:
      return "hyperplane-matching";
    case Provenance::C4n:
      return "c4n";
    case Provenance::File:
      return "file";
    case Provenance::Search:
      return "search";
  }
  return "unknown";
}

std::vector<GnkPairing> gnkPairing(int n, int k) {
  const FiniteGroup g = gnkGroup(n, k);
  std::vector<GnkPairing> out;
  std::set<std::uint64_t> normals;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const Element rep = gnkEncode(n, {s, 0});
    const GnkWord sq = gnkDecode(n, g.multiply(rep, rep));
    if (sq.e != 0) throw std::logic_error("gnk: a_S^2 outside H");
    const F2Vector square{n, sq.f};
    if (square.isZero()) throw std::logic_error("gnk: pairing condition violated, a_S^2 = 1 for S = " + std::to_string(s));
    const F2Vector normal = mu(square);
    // a_S^2 must lie outside M_S, and the M_S must be distinct.
    if (!dot(square, normal)) throw std::logic_error("gnk: pairing condition violated, a_S^2 in M_S for S = " + std::to_string(s));
    if (!normals.insert(normal.bits).second)
      throw std::logic_error("gnk: pairing condition violated, repeated maximal subgroup for S = " + std::to_string(s));
    out.push_back({s, square, normal});
  }
  return out;
}

DifferenceSetCandidate gnkDifferenceSet(int n, int k) {
  const FiniteGroup g = gnkGroup(n, k);
  const auto pairing = gnkPairing(n, k);
  std::vector<Element> elements;
  for (const GnkPairing& p : pairing) {
    const Element rep = gnkEncode(n, {p.subset, 0});
    for (F2Vector u : hyperplaneMembers({p.normal})) elements.push_back(g.multiply(rep, gnkEncode(n, {0, u.bits})));
  }
  std::sort(elements.begin(), elements.end());
  return {g, *distinguishedSubgroup(g), std::move(elements), parameterFormulas(std::int64_t{1} << n),
          Provenance::GnkConstruction, false};
}

HyperplaneMatching kappaAssignment(int n) {
  if (n < 2) throw InvalidArgument("c4n difference set: requires n >= 2");
  const FiniteGroup g = c4PowerGroup(n);
  const Subgroup h = *distinguishedSubgroup(g);
  CosetDecomposition dec = cosets(g, h);
  auto coords = *f2Coordinates(h);
  const std::size_t cosetsCount = dec.index();
  HyperplaneMatching a{std::move(dec), std::move(coords), std::vector<std::size_t>(cosetsCount),
                    std::vector<Hyperplane>(cosetsCount, Hyperplane{{n, 0}})};
  for (std::size_t i = 1; i < cosetsCount; ++i) {
    // t_i = a^e has t_i^2 = b^e, whose coordinate vector is e itself.
    const Element t = a.decomposition.transversal[i];
    const GnkWord w = gnkDecode(n, t);
    a.partner[i] = i;
    a.hyperplanes[i] = {kappa({n, w.e})};
  }
  return a;
}

DifferenceSetCandidate c4nDifferenceSet(int n) {
  DifferenceSetCandidate c = hyperplaneMatchingDifferenceSet(kappaAssignment(n));
  c.provenance = Provenance::C4n;
  return c;
}

}  // namespace rshds
