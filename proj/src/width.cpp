#include "orbitwidth/width.hpp"

#include <algorithm>

namespace orbitwidth {

std::optional<Rational> difference_gcd(const Spectrum& s) {
  // All pairwise differences lie in the lattice spanned by gaps between
  // consecutive distinct values, so folding over those gaps suffices.
  std::vector<Rational> levels = s.distinct_values();
  if (levels.size() < 2) return std::nullopt;
  Rational g(0);
  for (size_t i = 0; i + 1 < levels.size(); ++i)
    g = rational_gcd(g, levels[i] - levels[i + 1]);
  return g;
}

std::optional<UpperBound> upper_bound(const Spectrum& s) {
  std::optional<Rational> g = difference_gcd(s);
  if (!g) return std::nullopt;
  UpperBound bound;
  bound.value = *g;
  for (int i = 0; i < s.size(); ++i) {
    for (int j = i + 1; j < s.size(); ++j) {
      if (s[i] - s[j] == *g) {
        if (bound.realizing_pairs == 0) bound.pair = {i + 1, j + 1};
        ++bound.realizing_pairs;
      }
    }
  }
  if (bound.realizing_pairs == 0) return std::nullopt;
  return bound;
}

LowerBoundResult lower_bound(const Spectrum& s) {
  FlagType f = flag_type(s);
  if (f.blocks() < 2) return {};  // point orbit: no positive differences
  int repeated_blocks = 0;
  for (int m : f.multiplicities)
    if (m > 1) ++repeated_blocks;
  if (repeated_blocks > 1) return {};
  std::vector<Rational> levels = s.distinct_values();
  Rational min_gap = levels[0] - levels[1];
  for (size_t i = 1; i + 1 < levels.size(); ++i)
    min_gap = std::min(min_gap, levels[i] - levels[i + 1]);
  return {true, min_gap};
}

WidthReport width_report(const Spectrum& s) {
  WidthReport report;
  report.n = s.size();
  report.flag = flag_type(s);
  report.degenerate = report.flag.blocks() < 2;
  report.regular = std::all_of(report.flag.multiplicities.begin(),
                               report.flag.multiplicities.end(),
                               [](int m) { return m == 1; });
  if (report.degenerate) return report;

  if (auto ub = upper_bound(s)) {
    report.upper = ub->value;
    report.upper_pair = ub->pair;
    report.upper_pair_count = ub->realizing_pairs;
  }
  LowerBoundResult lb = lower_bound(s);
  report.lower_applicable = lb.applicable;
  report.lower = lb.value;
  report.exact = report.upper.has_value() && report.lower.has_value() &&
                 *report.upper == *report.lower;
  return report;
}

}  // namespace orbitwidth
