#pragma once

#include <cstdint>
#include <vector>

namespace rshds {

/// Vector in F_2^n, n <= 64. Coordinate i (1-based) is bit i-1.
struct F2Vector {
  int n = 0;
  std::uint64_t bits = 0;

  bool isZero() const { return bits == 0; }
  bool at(int i) const { return (bits >> (i - 1)) & 1U; }
  static F2Vector allOnes(int n);
  /// (1,...,1,0,...,0) with `count` leading ones.
  static F2Vector prefixOnes(int n, int count);

  friend bool operator==(const F2Vector&, const F2Vector&) = default;
  friend auto operator<=>(const F2Vector& a, const F2Vector& b) { return a.bits <=> b.bits; }
};

F2Vector operator^(F2Vector a, F2Vector b);

/// Maximal subgroup {u : u . normal = 0} of F_2^n.
struct Hyperplane {
  F2Vector normal;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Sum of u_i v_i mod 2.
bool dot(F2Vector u, F2Vector v);

/// Pairing with dot(v, mu(v)) = 1: flip the ones strictly before the last 1 of v.
/// Involution on the nonzero vectors.
F2Vector mu(F2Vector v);

/// Pairing with dot(v, kappa(v)) = 0, an involution on the nonzero vectors.
/// Complement against the all-ones vector, with a fixed exceptional set for
/// odd n. Requires n >= 2.
F2Vector kappa(F2Vector v);

/// All 2^{n-1} members, in increasing bit order.
std::vector<F2Vector> hyperplaneMembers(Hyperplane plane);

/// Rank over F_2 of a matrix given by its columns.
int f2Rank(std::vector<std::uint64_t> columns);

/// Whether A + P^{k+1} is nonsingular, where A = diag(0, I_k, 0) and P is the
/// cyclic shift e_i -> e_{i+1}. This matrix governs injectivity of the
/// squaring map S -> a_S^2 in G_{n,k}.
bool h1PairingCheck(int n, int k);

}  // namespace rshds
