#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orbitwidth/rational.hpp"

namespace orbitwidth {

/// Multiset of exact rational eigenvalues, stored sorted non-increasing.
/// The orbit only depends on the multiset, so input order is discarded.
class Spectrum {
 public:
  explicit Spectrum(std::vector<Rational> values);

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](int i) const { return values_[static_cast<size_t>(i)]; }

  /// The distinct values, in decreasing order (one per block).
  std::vector<Rational> distinct_values() const;

  friend bool operator==(const Spectrum& a, const Spectrum& b) { return a.values_ == b.values_; }

 private:
  std::vector<Rational> values_;
};

/// Grammar: `value (',' value)*` with value = int | int '/' posint | decimal.
/// Whitespace around tokens is ignored.
Spectrum parse_spectrum(std::string_view text);

/// Canonical comma-separated form; parse(render(s)) == s.
std::string render(const Spectrum& s);

/// Eigenvalue multiplicity structure: cumulative[j] = m_1 + ... + m_{j+1},
/// ending at n. One block per distinct eigenvalue.
struct FlagType {
  std::vector<int> cumulative;
  std::vector<int> multiplicities;

  int n() const { return cumulative.empty() ? 0 : cumulative.back(); }
  int blocks() const { return static_cast<int>(cumulative.size()); }
};

FlagType flag_type(const Spectrum& s);

struct OrbitDimensions {
  long complex_dim = 0;
  long real_dim = 0;
};

/// complex_dim = sum over block pairs i < j of m_i * m_j.
OrbitDimensions orbit_dimensions(const FlagType& f);

}  // namespace orbitwidth
