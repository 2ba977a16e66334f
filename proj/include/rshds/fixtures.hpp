#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rshds/group.hpp"

namespace rshds {

/// Table group from a multiplication rule on 0..order-1 (0 must be the identity).
FiniteGroup groupFromOperation(std::size_t order, const std::function<Element(Element, Element)>& op,
                               std::vector<std::string> names = {});

FiniteGroup cyclicGroup(std::size_t n);

/// C_2^n as a table group (XOR on indices).
FiniteGroup elementaryAbelian2(int n);

/// Pairs (a, b) stored at index a * |B| + b.
FiniteGroup directProduct(const FiniteGroup& a, const FiniteGroup& b);

/// C_n x| C_m = <c, a | c^n, a^m, a^{-1} c a = c^r>, element c^i a^j at j * n + i.
/// Requires r^m = 1 mod n.
FiniteGroup cyclicSemidirect(std::size_t n, std::size_t m, std::size_t r);

/// Dihedral group of order 2n.
FiniteGroup dihedralGroup(std::size_t n);

/// Dicyclic group of order 4n: <a, x | a^{2n}, x^2 = a^n, x^{-1} a x = a^{-1}>.
FiniteGroup dicyclicGroup(std::size_t n);

/// Even permutations of {0..n-1} in lexicographic order.
FiniteGroup alternatingGroup(int n);

/// C_9 x| C_4 with a^{-1} c a = c^{-1}; the order-36 group with b = a^2, d = c^6.
FiniteGroup g36Group();

/// Generators c, a of g36Group().
inline constexpr Element kG36C = 1;
inline constexpr Element kG36A = 9;

/// Named fixture groups: g36_1, c4, c6, c16, c2_4, c4_2, s3, a4, a5, q8, d8.
std::optional<FiniteGroup> builtinGroup(const std::string& name);
std::vector<std::string> builtinGroupNames();

}  // namespace rshds
