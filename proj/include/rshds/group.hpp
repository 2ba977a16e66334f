#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rshds {

/// Index of a group element. The identity is always 0.
using Element = std::uint32_t;

enum class Backend { CayleyTable, Gnk, C4Power };

/// Normal form a_1^{e_1} ... a_n^{e_n} b^f of an element of G_{n,k}.
/// Bit i-1 of `e` (resp. `f`) is the exponent of a_i (resp. b_i).
struct GnkWord {
  std::uint64_t e = 0;
  std::uint64_t f = 0;

  friend bool operator==(const GnkWord&, const GnkWord&) = default;
};

/// Element index of a word: coset of H = <b> first, then the b-part.
inline Element gnkEncode(int n, GnkWord w) { return static_cast<Element>((w.e << n) | w.f); }
inline GnkWord gnkDecode(int n, Element x) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return {static_cast<std::uint64_t>(x) >> n, x & mask};
}

/// Multiplication in G_{n,k} on normal forms.
GnkWord gnkMultiply(int n, int k, GnkWord x, GnkWord y);

namespace detail {
struct GroupData;
}

/// An immutable finite group with elements 0..order-1 and identity 0.
///
/// Three backends share one interface: an explicit Cayley table, the
/// two-parameter family G_{n,k} (cocycle multiplication on normal forms),
/// and C_4^n (componentwise addition mod 4). The last two carry a
/// distinguished subgroup H of order 2^n occupying indices 0..2^n-1, and
/// element index = coset index * 2^n + offset within the coset.
///
/// Copies share the underlying data.
class FiniteGroup {
 public:
  /// Validated construction from a row-major table (Latin square, identity at 0,
  /// associativity: full check up to order 512, 10^6 sampled triples above).
  static FiniteGroup fromCayleyTable(std::vector<Element> table,
                                     std::vector<std::string> names = {});

  Backend backend() const;
  std::size_t order() const;
  Element identity() const { return 0; }

  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const;
  Element power(Element a, long long exponent) const;

  /// n for the G_{n,k} and C_4^n backends, 0 otherwise.
  int rank() const;
  /// k for G_{n,k}, 0 otherwise.
  int twist() const;

  /// Order of the distinguished subgroup H (0 when there is none).
  std::size_t distinguishedOrder() const;

  const std::vector<std::string>& names() const;
  std::string elementName(Element x) const;

  /// `gnk:n,k`, `c4n:n`, or `table:<order>` for Cayley-table groups.
  std::string describe() const;

  /// Same backend and parameters, or identical tables.
  bool sameAs(const FiniteGroup& other) const;

 private:
  friend FiniteGroup gnkGroup(int n, int k);
  friend FiniteGroup c4PowerGroup(int n);
  friend FiniteGroup uncheckedTableGroup(std::vector<Element> table,
                                         std::vector<std::string> names);

  explicit FiniteGroup(std::shared_ptr<const detail::GroupData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::GroupData> data_;
};

/// G_{n,k} of order 2^{2n}. Requires n >= 2 and 0 <= k < n-1.
FiniteGroup gnkGroup(int n, int k);

/// C_4^n of order 4^n with H = 2C_4^n. Element index encodes x_i = e_i + 2 f_i.
FiniteGroup c4PowerGroup(int n);

/// Builds a table group without validation. For tables produced internally
/// (quotients, fixtures) whose group axioms hold by construction.
FiniteGroup uncheckedTableGroup(std::vector<Element> table, std::vector<std::string> names = {});

/// Exhaustive axiom check used by tests: associativity over all triples,
/// two-sided identity, and inverses. Returns a description of the first
/// violation or nothing.
std::optional<std::string> findAxiomViolation(const FiniteGroup& group);

class Subgroup {
 public:
  struct Trusted {};

  /// Validates closure under multiplication (a finite nonempty set closed
  /// under products is a subgroup).
  Subgroup(FiniteGroup group, std::vector<Element> members);
  /// For member sets already known to be closed. Members must be sorted.
  Subgroup(FiniteGroup group, std::vector<Element> sortedMembers, Trusted);

  const FiniteGroup& group() const { return group_; }
  std::size_t order() const { return members_.size(); }
  const std::vector<Element>& members() const { return members_; }
  bool contains(Element x) const { return mask_[x] != 0; }
  bool isSubsetOf(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  FiniteGroup group_;
  std::vector<Element> members_;
  std::vector<std::uint8_t> mask_;
};

/// The distinguished H of the G_{n,k} / C_4^n backends.
std::optional<Subgroup> distinguishedSubgroup(const FiniteGroup& group);

Subgroup trivialSubgroup(const FiniteGroup& group);
Subgroup wholeGroup(const FiniteGroup& group);

/// Smallest subgroup containing the generators.
Subgroup closure(const FiniteGroup& group, std::span<const Element> generators);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

/// Greedy generating set: scan elements by index, keep those outside the
/// span of the ones kept so far.
std::vector<Element> generatingSet(const FiniteGroup& group);
std::vector<Element> generatingSet(const Subgroup& sub);

bool isNormal(const FiniteGroup& group, const Subgroup& sub);

struct CosetDecomposition {
  Subgroup subgroup;
  /// Lexicographically least representative of each right coset H g; transversal[0] = identity.
  std::vector<Element> transversal;
  /// Coset index of every group element.
  std::vector<std::size_t> cosetOf;

  std::size_t index() const { return transversal.size(); }
  /// Members of coset i in increasing index order.
  std::vector<Element> members(std::size_t coset) const;
};

/// Right-coset partition H g.
CosetDecomposition cosets(const FiniteGroup& group, const Subgroup& sub);

struct Quotient {
  FiniteGroup group;
  /// Projection onto quotient element indices (= coset indices).
  std::vector<Element> projection;
  CosetDecomposition decomposition;
};

/// G/N as a Cayley-table group. Throws PreconditionError if N is not normal.
Quotient quotient(const FiniteGroup& group, const Subgroup& normalSub);

std::vector<Element> involutions(const FiniteGroup& group);
std::size_t elementOrder(const FiniteGroup& group, Element x);
bool isAbelian(const FiniteGroup& group);
bool isElementaryAbelian2(const Subgroup& sub);

/// Commutator subgroup.
Subgroup derivedSubgroup(const FiniteGroup& group);

/// Default order cap for subgroup enumeration.
inline constexpr std::size_t kSubgroupEnumerationCap = 256;

/// All subgroups of order m, sorted by member set. Throws BudgetExceeded if
/// the group order exceeds `cap`.
std::vector<Subgroup> subgroupsOfOrder(const FiniteGroup& group, std::size_t m,
                                       std::size_t cap = kSubgroupEnumerationCap);

struct PrimeIndexNormal {
  Subgroup subgroup;
  unsigned prime;
};

/// Kernels of all surjections G -> C_p, over all primes p dividing |G|.
/// Sorted by (p, member set).
std::vector<PrimeIndexNormal> normalSubgroupsOfPrimeIndex(const FiniteGroup& group);

/// Isomorphism-invariant summary: order, commutativity, element-order spectrum.
struct Fingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::map<std::size_t, std::size_t> orderSpectrum;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& group);

/// Coordinates of an elementary abelian 2-subgroup as F_2^n.
struct F2Coordinates {
  Subgroup subgroup;
  /// basis[i] has coordinate vector with only bit i set.
  std::vector<Element> basis;
  /// Indexed by group element; meaningful for members only.
  std::vector<std::uint64_t> coordinate;
  /// Indexed by coordinate vector.
  std::vector<Element> element;

  int dimension() const { return static_cast<int>(basis.size()); }
};

/// Nothing if the subgroup is not elementary abelian of 2-power order.
std::optional<F2Coordinates> f2Coordinates(const Subgroup& sub);

}  // namespace rshds
