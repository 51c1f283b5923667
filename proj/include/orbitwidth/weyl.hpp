#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "orbitwidth/spectrum.hpp"

namespace orbitwidth {

/// Hard limit on n for anything that walks cosets of S_n; n! growth.
inline constexpr int kDefaultEnumerationCap = 10;

/// Permutation of {1..n} in one-line notation: images[i] = w(i+1).
struct Permutation {
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }
  /// Coxeter length of w = number of inversions of the one-line word.
  long inversions() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images == b.images; }
};

/// Minimal-length representative of a coset w.W_a together with its length.
struct CosetRep {
  Permutation perm;
  long length = 0;
};

/// Degree-2 homology basis element: the sphere attached to the transposition
/// crossing the j-th block boundary, swapping positions (a_j, a_j + 1).
struct H2Generator {
  int block = 0;  // j, 1-based
  std::pair<int, int> transposition;
};

/// Streams every minimal coset representative of S_n modulo the parabolic
/// subgroup preserving the position blocks of f, in an unspecified but
/// deterministic order. A representative is minimal within its coset exactly
/// when its images increase inside every block.
void for_each_minimal_rep(const FlagType& f,
                          const std::function<void(const Permutation&, long)>& fn,
                          int cap = kDefaultEnumerationCap);

/// All n!/prod(m_j!) minimal representatives, sorted by (length, one-line lex).
std::vector<CosetRep> minimal_coset_reps(const FlagType& f, int cap = kDefaultEnumerationCap);

/// Coefficient k = number of representatives of length k. Sums to the coset
/// count; the top nonzero index is the complex dimension of the orbit.
std::vector<std::int64_t> poincare_polynomial(const FlagType& f, int cap = kDefaultEnumerationCap);

/// The l-1 block-boundary transpositions (a_j, a_j+1). Throws PointOrbit
/// when the flag type has a single block.
std::vector<H2Generator> h2_generators(const FlagType& f);

}  // namespace orbitwidth
