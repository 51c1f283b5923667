#include "orbitwidth/weyl.hpp"

#include <algorithm>
#include <string>

#include "orbitwidth/errors.hpp"

namespace orbitwidth {

long Permutation::inversions() const {
  long count = 0;
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) ++count;
  return count;
}

namespace {

void check_cap(const FlagType& f, int cap) {
  if (f.n() > cap)
    throw EnumerationCapExceeded("n = " + std::to_string(f.n()) +
                                 " exceeds enumeration cap " + std::to_string(cap));
}

}  // namespace

void for_each_minimal_rep(const FlagType& f,
                          const std::function<void(const Permutation&, long)>& fn,
                          int cap) {
  check_cap(f, cap);
  const int n = f.n();
  const int blocks = f.blocks();

  // labels[v-1] = block that receives value v. Walking the distinct
  // multiset permutations of the label word enumerates each coset once.
  std::vector<int> labels;
  labels.reserve(static_cast<size_t>(n));
  std::vector<int> block_start(static_cast<size_t>(blocks));
  for (int j = 0; j < blocks; ++j) {
    labels.insert(labels.end(), static_cast<size_t>(f.multiplicities[static_cast<size_t>(j)]), j);
    block_start[static_cast<size_t>(j)] = j == 0 ? 0 : f.cumulative[static_cast<size_t>(j - 1)];
  }

  Permutation rep;
  rep.images.resize(static_cast<size_t>(n));
  std::vector<int> next_slot(static_cast<size_t>(blocks));
  do {
    // The minimal representative lists each block's values in increasing
    // order; a single pass in value order fills the blocks left to right.
    next_slot = block_start;
    for (int v = 1; v <= n; ++v) {
      int block = labels[static_cast<size_t>(v - 1)];
      rep.images[static_cast<size_t>(next_slot[static_cast<size_t>(block)]++)] = v;
    }
    fn(rep, rep.inversions());
  } while (std::next_permutation(labels.begin(), labels.end()));
}

std::vector<CosetRep> minimal_coset_reps(const FlagType& f, int cap) {
  std::vector<CosetRep> reps;
  for_each_minimal_rep(
      f, [&](const Permutation& p, long length) { reps.push_back({p, length}); }, cap);
  std::sort(reps.begin(), reps.end(), [](const CosetRep& a, const CosetRep& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.perm.images < b.perm.images;
  });
  return reps;
}

std::vector<std::int64_t> poincare_polynomial(const FlagType& f, int cap) {
  std::vector<std::int64_t> coeff(static_cast<size_t>(orbit_dimensions(f).complex_dim) + 1, 0);
  for_each_minimal_rep(
      f, [&](const Permutation&, long length) { ++coeff[static_cast<size_t>(length)]; }, cap);
  return coeff;
}

std::vector<H2Generator> h2_generators(const FlagType& f) {
  if (f.blocks() < 2) throw PointOrbit("single-block spectrum has trivial degree-2 homology");
  std::vector<H2Generator> gens;
  for (int j = 1; j < f.blocks(); ++j) {
    int a = f.cumulative[static_cast<size_t>(j - 1)];
    gens.push_back({j, {a, a + 1}});
  }
  return gens;
}

}  // namespace orbitwidth
