#include "rshds/algebra.hpp"

#include <algorithm>

#include "rshds/errors.hpp"

namespace rshds {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("group algebra: 64-bit addition overflow");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("group algebra: 64-bit multiplication overflow");
  return r;
}

}  // namespace checked

namespace {

void requireSameGroup(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (!a.group().sameAs(b.group())) throw InvalidArgument("group algebra: operands live in different groups");
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(FiniteGroup group)
    : group_(std::move(group)), coeffs_(group_.order(), 0) {}

GroupAlgebraElement::GroupAlgebraElement(FiniteGroup group, std::vector<std::int64_t> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_.order()) throw InvalidArgument("group algebra: coefficient count != group order");
}

bool GroupAlgebraElement::isZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

std::vector<Element> GroupAlgebraElement::support() const {
  std::vector<Element> out;
  for (std::size_t g = 0; g < coeffs_.size(); ++g)
    if (coeffs_[g] != 0) out.push_back(static_cast<Element>(g));
  return out;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  requireSameGroup(*this, other);
  for (std::size_t g = 0; g < coeffs_.size(); ++g) coeffs_[g] = checked::add(coeffs_[g], other.coeffs_[g]);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  requireSameGroup(*this, other);
  for (std::size_t g = 0; g < coeffs_.size(); ++g)
    coeffs_[g] = checked::add(coeffs_[g], checked::mul(-1, other.coeffs_[g]));
  return *this;
}

GroupAlgebraElement operator*(std::int64_t s, const GroupAlgebraElement& x) {
  GroupAlgebraElement out(x.group_);
  for (std::size_t g = 0; g < x.coeffs_.size(); ++g) out.coeffs_[g] = checked::mul(s, x.coeffs_[g]);
  return out;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return a.group_.sameAs(b.group_) && a.coeffs_ == b.coeffs_;
}

GroupAlgebraElement fromSet(const FiniteGroup& group, std::span<const Element> elements) {
  GroupAlgebraElement out(group);
  for (Element x : elements) {
    if (x >= group.order()) throw InvalidArgument("fromSet: element index out of range");
    if (out[x] != 0) throw InvalidArgument("fromSet: duplicate element " + std::to_string(x));
    out[x] = 1;
  }
  return out;
}

GroupAlgebraElement unit(const FiniteGroup& group, std::int64_t scalar) {
  GroupAlgebraElement out(group);
  out[group.identity()] = scalar;
  return out;
}

GroupAlgebraElement groupSum(const FiniteGroup& group) {
  return GroupAlgebraElement(group, std::vector<std::int64_t>(group.order(), 1));
}

GroupAlgebraElement convolve(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  requireSameGroup(x, y);
  const FiniteGroup& g = x.group();
  const auto ys = y.support();
  GroupAlgebraElement out(g);
  for (Element a = 0; a < g.order(); ++a) {
    const std::int64_t xa = x[a];
    if (xa == 0) continue;
    for (Element b : ys) {
      const Element ab = g.multiply(a, b);
      out[ab] = checked::add(out[ab], checked::mul(xa, y[b]));
    }
  }
  return out;
}

GroupAlgebraElement star(const GroupAlgebraElement& x) {
  const FiniteGroup& g = x.group();
  GroupAlgebraElement out(g);
  for (Element a = 0; a < g.order(); ++a) out[g.inverse(a)] = x[a];
  return out;
}

std::int64_t identityCoefficient(const GroupAlgebraElement& x) { return x[x.group().identity()]; }

IntPolynomial polyMultiply(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  IntPolynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked::add(out[i + j], checked::mul(a[i], b[j]));
  return out;
}

GroupAlgebraElement polyEval(const GroupAlgebraElement& x, const IntPolynomial& p) {
  const FiniteGroup& g = x.group();
  GroupAlgebraElement acc(g);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = convolve(acc, x);
    acc[g.identity()] = checked::add(acc[g.identity()], *it);
  }
  return acc;
}

}  // namespace rshds
