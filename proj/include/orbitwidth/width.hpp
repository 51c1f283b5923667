#pragma once

#include <optional>
#include <utility>

#include "orbitwidth/spectrum.hpp"

namespace orbitwidth {

/// Combined two-sided width report for the orbit of a spectrum.
/// `exact` means both bounds are present and agree, i.e. the bound pair
/// pins the width. `degenerate` flags point orbits (all eigenvalues equal),
/// which carry no bounds at all.
struct WidthReport {
  int n = 0;
  FlagType flag;
  std::optional<Rational> upper;
  std::optional<std::pair<int, int>> upper_pair;  // 1-based indices into sorted spectrum
  int upper_pair_count = 0;                       // how many pairs realize the bound
  std::optional<Rational> lower;
  bool lower_applicable = false;
  bool exact = false;
  bool degenerate = false;
  bool regular = false;  // all multiplicities 1
};

/// Positive generator of the additive subgroup of Q generated by all
/// pairwise eigenvalue differences; absent for a point orbit.
std::optional<Rational> difference_gcd(const Spectrum& s);

struct UpperBound {
  Rational value;
  std::pair<int, int> pair;  // lexicographically first realizing pair, 1-based
  int realizing_pairs = 0;
};

/// The divisibility-condition upper bound: present exactly when some pair of
/// eigenvalues realizes the difference gcd, i.e. when every difference is an
/// integer multiple of the smallest positive one. Absent means the condition
/// gives no bound, not that the bound is infinite.
std::optional<UpperBound> upper_bound(const Spectrum& s);

struct LowerBoundResult {
  bool applicable = false;
  std::optional<Rational> value;
};

/// Ball-embedding lower bound: applicable when the sorted spectrum has at
/// most one block of repeated values and at least two distinct values; the
/// value is the minimum positive pairwise difference.
LowerBoundResult lower_bound(const Spectrum& s);

WidthReport width_report(const Spectrum& s);

}  // namespace orbitwidth
