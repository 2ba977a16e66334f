#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rshds/group.hpp"

namespace rshds {

/// Element of the integer group algebra ZG, stored densely.
///
/// All arithmetic is exact 64-bit with overflow detection (OverflowError);
/// there is no floating point in this module.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(FiniteGroup group);
  GroupAlgebraElement(FiniteGroup group, std::vector<std::int64_t> coeffs);

  const FiniteGroup& group() const { return group_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](Element g) const { return coeffs_[g]; }
  std::int64_t& operator[](Element g) { return coeffs_[g]; }

  bool isZero() const;
  std::vector<Element> support() const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(std::int64_t s, const GroupAlgebraElement& x);
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

 private:
  FiniteGroup group_;
  std::vector<std::int64_t> coeffs_;
};

/// 0/1 indicator of a set. Throws InvalidArgument on a repeated or out-of-range index.
GroupAlgebraElement fromSet(const FiniteGroup& group, std::span<const Element> elements);
/// Scalar multiple of the identity.
GroupAlgebraElement unit(const FiniteGroup& group, std::int64_t scalar = 1);
/// The sum of all group elements.
GroupAlgebraElement groupSum(const FiniteGroup& group);

/// (x*y)[g] = sum over ab = g of x[a] y[b].
GroupAlgebraElement convolve(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

/// star(x)[g] = x[g^{-1}]; transpose in the regular representation.
GroupAlgebraElement star(const GroupAlgebraElement& x);

std::int64_t identityCoefficient(const GroupAlgebraElement& x);

/// Integer polynomial, lowest degree first.
using IntPolynomial = std::vector<std::int64_t>;

IntPolynomial polyMultiply(const IntPolynomial& a, const IntPolynomial& b);

/// Horner evaluation of p at x inside the algebra.
GroupAlgebraElement polyEval(const GroupAlgebraElement& x, const IntPolynomial& p);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace rshds
