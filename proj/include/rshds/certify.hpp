#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rshds/algebra.hpp"
#include "rshds/group.hpp"
#include "rshds/json.hpp"
#include "rshds/params.hpp"

namespace rshds {

/// Outcome of one certificate. `witnesses` is check-specific structured data;
/// a failing report always carries at least one witness.
struct CertReport {
  std::string checkName;
  bool pass = false;
  ParameterSet params;
  Json witnesses;
  std::vector<std::string> warnings;
};

/// Stable field order: checkName, pass, params, witnesses, warnings.
Json toJson(const CertReport& report);
/// Human-readable block of lines.
std::string toText(const CertReport& report);

/// Gaussian integer a + bi.
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
  friend GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

/// Eigenmatrix of the four-class scheme; entries stored doubled so that
/// every entry is a Gaussian integer. Columns: 1, H-1, D, D^{-1}.
struct PMatrix {
  std::array<std::array<GaussianInt, 4>, 4> doubled{};

  std::string entryString(int row, int col) const;
};

PMatrix pMatrix(std::int64_t h);

/// Coordinates of C_i * C_j in the basis {1, H-1, D, D^{-1}}.
struct SchurStructure {
  std::array<std::array<std::array<std::int64_t, 4>, 4>, 4> constants{};
};

CertReport checkDifferenceSet(const FiniteGroup& group, std::span<const Element> elements);

CertReport checkRSHDS(const FiniteGroup& group, const Subgroup& subgroupH, std::span<const Element> elements);

CertReport cosetProfile(const FiniteGroup& group, const Subgroup& subgroupH, std::span<const Element> elements);

struct SchurResult {
  CertReport report;
  SchurStructure structure;
};

/// Requires checkRSHDS to pass with m = 0 (PreconditionError otherwise).
SchurResult checkSchurRing(const FiniteGroup& group, const Subgroup& subgroupH, std::span<const Element> elements);

/// (x-k)(2x+h)(4x^2+h^2), lowest degree first.
IntPolynomial minimalPolynomialOfD(std::int64_t h, std::int64_t k);

/// Expected traces of D^0..D^3 from the eigenvalues and multiplicities.
std::array<std::int64_t, 4> expectedTraces(std::int64_t h);

CertReport spectrum(const FiniteGroup& group, const Subgroup& subgroupH, std::span<const Element> elements);

CertReport checkHadamard(const FiniteGroup& group, const Subgroup& subgroupH, std::span<const Element> elements);

/// Rows of 2D - J in the regular representation: entry (y, x) = +1 iff y x^{-1} in D.
std::vector<std::vector<int>> hadamardMatrix(const FiniteGroup& group, std::span<const Element> elements);

struct QuotientProfileEntry {
  std::int64_t x = 0;  // |D cap N g|
  std::int64_t y = 0;  // |H cap N g|
};

std::vector<QuotientProfileEntry> quotientProfile(const Quotient& q, const Subgroup& subgroupH,
                                                  std::span<const Element> elements);

/// Quotients whose kernels are known to swallow H, by fingerprint:
/// C2^2, C2^3, S3, C6, C9, C3^2, C10, D10, C2 x S3, C2 x C6.
std::optional<std::string> swallowingQuotientName(const FiniteGroup& quotientGroup);

CertReport quotientCheck(const FiniteGroup& group, const Subgroup& subgroupH, std::span<const Element> elements,
                         const Subgroup& normalN);

/// Normal subgroups of prime index plus those whose quotient is C4 or in the
/// swallowing list. Requires |G| <= the enumeration cap for the latter.
std::vector<Subgroup> screeningKernels(const FiniteGroup& group, bool includeC4 = true);

/// Tests T1-T4. When `subgroupH` is absent, T2 and T4 pass if some normal
/// subgroup of order h satisfies them.
CertReport structuralTests(const FiniteGroup& group, std::int64_t h, const std::optional<Subgroup>& subgroupH);

/// Every row and column of D sums to k, and the Cayley digraph of D is
/// strongly connected (k^{-1}D irreducible and doubly stochastic).
CertReport checkStochastic(const FiniteGroup& group, std::span<const Element> elements);

/// Check names accepted by runChecks, in the order they run.
const std::vector<std::string>& certificateNames();

/// Runs the named certificates (all when `names` is empty) in certificateNames()
/// order. A certificate whose precondition fails becomes a failing report.
/// InvalidArgument on an unknown name.
std::vector<CertReport> runChecks(const FiniteGroup& group, const Subgroup& subgroupH, std::span<const Element> elements,
                                  const std::vector<std::string>& names = {});

}  // namespace rshds
