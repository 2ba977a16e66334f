#include "rshds/f2.hpp"

#include <bit>

#include "rshds/errors.hpp"

namespace rshds {

namespace {

std::uint64_t lowMask(int count) { return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1; }

void requireNonzero(F2Vector v, const char* op) {
  if (v.n < 1 || v.n > 64) throw InvalidArgument(std::string(op) + ": dimension out of range");
  if (v.isZero()) throw InvalidArgument(std::string(op) + ": zero vector");
}

}  // namespace

F2Vector F2Vector::allOnes(int n) { return {n, lowMask(n)}; }
F2Vector F2Vector::prefixOnes(int n, int count) { return {n, lowMask(count)}; }

F2Vector operator^(F2Vector a, F2Vector b) {
  if (a.n != b.n) throw InvalidArgument("f2: dimension mismatch");
  return {a.n, a.bits ^ b.bits};
}

bool dot(F2Vector u, F2Vector v) {
  if (u.n != v.n) throw InvalidArgument("dot: dimension mismatch");
  return std::popcount(u.bits & v.bits) & 1;
}

F2Vector mu(F2Vector v) {
  requireNonzero(v, "mu");
  const int last = std::bit_width(v.bits);
  return F2Vector::prefixOnes(v.n, last - 1) ^ v;
}

F2Vector kappa(F2Vector v) {
  requireNonzero(v, "kappa");
  const int n = v.n;
  if (n < 2) throw InvalidArgument("kappa: requires n >= 2");
  const F2Vector ones = F2Vector::allOnes(n);
  if (n % 2 == 0) return v == ones ? ones : ones ^ v;

  // Odd n: S = {0, (1,0..0), (1,1,0..0), (0,1..1), (0,0,1..1), (1)} is closed
  // under complement; kappa pairs its nonzero members as below.
  const F2Vector e1 = F2Vector::prefixOnes(n, 1);
  const F2Vector e12 = F2Vector::prefixOnes(n, 2);
  const F2Vector tail1 = ones ^ e1;
  const F2Vector tail2 = ones ^ e12;
  if (v == ones) return e12;
  if (v == e12) return ones;
  if (v == e1) return tail2;
  if (v == tail2) return e1;
  if (v == tail1) return tail1;
  return ones ^ v;
}

std::vector<F2Vector> hyperplaneMembers(Hyperplane plane) {
  requireNonzero(plane.normal, "hyperplaneMembers");
  const int n = plane.normal.n;
  if (n > 30) throw InvalidArgument("hyperplaneMembers: dimension too large to enumerate");
  std::vector<F2Vector> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u)
    if (!dot({n, u}, plane.normal)) out.push_back({n, u});
  return out;
}

int f2Rank(std::vector<std::uint64_t> columns) {
  int rank = 0;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == 0) continue;
    ++rank;
    const std::uint64_t pivot = columns[i] & (~columns[i] + 1);
    for (std::size_t j = i + 1; j < columns.size(); ++j)
      if (columns[j] & pivot) columns[j] ^= columns[i];
  }
  return rank;
}

bool h1PairingCheck(int n, int k) {
  if (n < 2 || n > 64) throw InvalidArgument("h1PairingCheck: n out of range");
  if (k < 0 || k > n - 1) throw InvalidArgument("h1PairingCheck: k out of range");
  std::vector<std::uint64_t> columns(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t col = std::uint64_t{1} << ((i + k + 1) % n);  // P^{k+1} e_i
    if (i >= 1 && i <= k) col ^= std::uint64_t{1} << i;         // A e_i
    columns[i] = col;
  }
  return f2Rank(std::move(columns)) == n;
}

}  // namespace rshds
