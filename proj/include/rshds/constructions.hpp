#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rshds/f2.hpp"
#include "rshds/group.hpp"
#include "rshds/params.hpp"

namespace rshds {

enum class Provenance { GnkConstruction, HyperplaneMatching, C4n, File, Search };

const char* toString(Provenance p);

struct DifferenceSetCandidate {
  FiniteGroup group;
  Subgroup subgroupH;
  /// Sorted element indices, disjoint from H.
  std::vector<Element> elements;
  ParameterSet params;
  Provenance provenance = Provenance::File;
  /// Set for the hyperplane-matching family, whose sets satisfy D = D^{-1}.
  bool selfInverseExpected = false;
};

/// One coset representative a_S of G_{n,k} and the maximal subgroup of H
/// paired with it.
struct GnkPairing {
  std::uint64_t subset;  // bit i-1 set iff i in S
  F2Vector square;       // coordinates of a_S^2 in H
  F2Vector normal;       // M_S = {u : u . normal = 0}
};

/// The pairing S -> M_S with M_S = hyperplane(mu(a_S^2)), for every nonempty S.
/// Throws std::logic_error if a_S^2 lands in M_S or two M_S coincide.
std::vector<GnkPairing> gnkPairing(int n, int k);

/// D = union over nonempty S of a_S M_S in G_{n,k}; an (h^2, h(h-1)/2, h(h-2)/4)
/// difference set with h = 2^n and G = D + D^{-1} + H.
DifferenceSetCandidate gnkDifferenceSet(int n, int k);

/// Data for the hyperplane-matching construction D = sum_{i >= 1} H_i t_i.
///
/// Coset index 0 is H itself (t_0 = 1); the matched cosets are 1..h-1.
struct HyperplaneMatching {
  CosetDecomposition decomposition;
  F2Coordinates coordinates;
  /// partner[i] = j with t_i^{-1} in H t_j.
  std::vector<std::size_t> partner;
  /// hyperplanes[i] for i >= 1; entry 0 is unused.
  std::vector<Hyperplane> hyperplanes;
};

/// Lexicographically least assignment (by hyperplane normal, in coset order)
/// satisfying t_i H_j t_i^{-1} = H_i and t_i t_j in H_i, or nothing.
///
/// Throws PreconditionError unless H is normal, elementary abelian of order
/// h = 2^n, and of index h. The transversal is the one fixed in `decomposition`.
std::optional<HyperplaneMatching> findHyperplaneMatching(const FiniteGroup& group, const Subgroup& subgroupH,
                                               const CosetDecomposition& decomposition);

/// Every valid assignment, stopping after `limit`.
std::vector<HyperplaneMatching> allHyperplaneMatchings(const FiniteGroup& group, const Subgroup& subgroupH,
                                              const CosetDecomposition& decomposition, std::size_t limit);

/// Independent check of an assignment. Returns the first violated condition.
std::optional<std::string> verifyHyperplaneMatching(const HyperplaneMatching& assignment);

DifferenceSetCandidate hyperplaneMatchingDifferenceSet(const HyperplaneMatching& assignment);

/// Assignment for C_4^n with M_e = hyperplane(kappa(e)) on the coset of a^e.
HyperplaneMatching kappaAssignment(int n);

/// D = union over e != 0 of M_e t_e in C_4^n, with M_e = hyperplane(kappa(e)).
DifferenceSetCandidate c4nDifferenceSet(int n);

struct SearchOptions {
  std::uint64_t budget = 1'000'000'000;
  /// Required for groups of order > 64.
  bool allowLargeGroups = false;
  unsigned workers = 1;
};

struct SearchResult {
  std::vector<DifferenceSetCandidate> found;
  std::uint64_t nodes = 0;
};

/// Enumerates every D with G = D + D^{-1} + H that is a difference set
/// (the m = 0 case), in canonical order.
///
/// The search picks one element from each inverse pair {g, g^{-1}} outside H,
/// keeps each nontrivial H-coset at h/2 chosen elements, and prunes as soon
/// as some difference x y^{-1} occurs more than lambda times.
SearchResult exhaustiveSearch(const FiniteGroup& group, const Subgroup& subgroupH, const SearchOptions& options = {});

}  // namespace rshds
