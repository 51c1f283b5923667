#include "orbitwidth/gkm.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace orbitwidth {

Eigen::VectorXd moment_map(const HermitianMatrix& a) {
  return a.entries().diagonal().real();
}

std::vector<RationalVector> fixed_points(const Spectrum& s, int cap) {
  if (s.size() > cap)
    throw EnumerationCapExceeded("n = " + std::to_string(s.size()) +
                                 " exceeds enumeration cap " + std::to_string(cap));
  // The sorted-descending vector is lexicographically largest, so walking
  // next_permutation under > yields all distinct arrangements in
  // lex-descending order.
  RationalVector v = s.values();
  std::vector<RationalVector> points;
  do {
    points.push_back(v);
  } while (std::next_permutation(v.begin(), v.end(), std::greater<>()));
  return points;
}

GkmGraph gkm_graph(const Spectrum& s, int cap) {
  if (flag_type(s).blocks() < 2)
    throw PointOrbit("point orbit has no moment graph edges");
  GkmGraph g;
  g.n = s.size();
  g.vertices = fixed_points(s, cap);

  auto lex_greater = [](const RationalVector& a, const RationalVector& b) { return a > b; };
  auto index_of = [&](const RationalVector& v) {
    auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), v, lex_greater);
    return static_cast<int>(it - g.vertices.begin());
  };

  const int n = g.n;
  for (int u = 0; u < static_cast<int>(g.vertices.size()); ++u) {
    const RationalVector& from = g.vertices[static_cast<size_t>(u)];
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (from[static_cast<size_t>(i)] == from[static_cast<size_t>(j)]) continue;
        RationalVector to = from;
        std::swap(to[static_cast<size_t>(i)], to[static_cast<size_t>(j)]);
        int v = index_of(to);
        if (u >= v) continue;  // each edge recorded once, from its larger endpoint
        GkmEdge e;
        e.u = u;
        e.v = v;
        e.swap = {i + 1, j + 1};
        Rational diff = from[static_cast<size_t>(i)] - from[static_cast<size_t>(j)];
        e.area = abs(diff);
        e.weight.assign(static_cast<size_t>(n), 0);
        e.weight[static_cast<size_t>(i)] = diff.sign();
        e.weight[static_cast<size_t>(j)] = -diff.sign();
        g.edges.push_back(std::move(e));
      }
    }
  }
  return g;
}

bool hull_membership(const RationalVector& p, const Spectrum& s) {
  if (static_cast<int>(p.size()) != s.size())
    throw DimensionMismatch("point dimension does not match spectrum length");
  RationalVector sorted = p;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  Rational sum_p(0), sum_s(0);
  for (int k = 0; k < s.size(); ++k) {
    sum_p += sorted[static_cast<size_t>(k)];
    sum_s += s[k];
    if (k + 1 < s.size() && sum_p > sum_s) return false;
  }
  return sum_p == sum_s;
}

}  // namespace orbitwidth
