#pragma once

#include <utility>
#include <vector>

#include "orbitwidth/hermitian.hpp"
#include "orbitwidth/spectrum.hpp"
#include "orbitwidth/weyl.hpp"

namespace orbitwidth {

using RationalVector = std::vector<Rational>;

/// Torus moment map: the real diagonal of a Hermitian matrix.
Eigen::VectorXd moment_map(const HermitianMatrix& a);

/// All distinct coordinate permutations of the spectrum, ordered
/// lexicographically descending. These are the torus-fixed points.
std::vector<RationalVector> fixed_points(const Spectrum& s, int cap = kDefaultEnumerationCap);

/// Edge of the moment graph: endpoints u < v differ by swapping positions
/// (i, j), 1-based i < j. `area` is the positive difference of the swapped
/// values and `weight` is the integer vector with
///   vertices[u] - vertices[v] = area * weight,   weight = +-(e_i - e_j).
struct GkmEdge {
  int u = 0;
  int v = 0;
  std::pair<int, int> swap;
  Rational area;
  std::vector<int> weight;
};

struct GkmGraph {
  int n = 0;
  std::vector<RationalVector> vertices;
  std::vector<GkmEdge> edges;
};

/// Moment graph of the orbit: vertices are the fixed points, two vertices are
/// adjacent exactly when they differ by one transposition. Every vertex has
/// degree equal to the complex orbit dimension.
GkmGraph gkm_graph(const Spectrum& s, int cap = kDefaultEnumerationCap);

/// Exact membership test for the moment polytope (the permutohedron of the
/// spectrum), decided by majorization: sorted partial sums of p never exceed
/// those of the spectrum, with equal totals.
bool hull_membership(const RationalVector& p, const Spectrum& s);

}  // namespace orbitwidth
