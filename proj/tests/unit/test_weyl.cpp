#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "orbitwidth/serialize.hpp"
#include "orbitwidth/weyl.hpp"

using namespace orbitwidth;

namespace {

FlagType make_flag(std::vector<int> multiplicities) {
  FlagType f;
  f.multiplicities = std::move(multiplicities);
  int total = 0;
  for (int m : f.multiplicities) f.cumulative.push_back(total += m);
  return f;
}

long long multinomial(const FlagType& f) {
  // n! / prod m_j!, computed as a product of binomials to stay integral
  long long result = 1;
  int used = 0;
  for (int m : f.multiplicities) {
    for (int i = 1; i <= m; ++i) result = result * (used + i) / i;
    used += m;
  }
  return result;
}

// Block signature that labels the coset w.W_a: the sorted images per block.
std::vector<int> coset_key(const std::vector<int>& images, const FlagType& f) {
  std::vector<int> key = images;
  int start = 0;
  for (int end : f.cumulative) {
    std::sort(key.begin() + start, key.begin() + end);
    start = end;
  }
  return key;
}

std::vector<std::vector<int>> all_compositions(int n) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = 1; first <= n; ++first)
    for (auto rest : all_compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

}  // namespace

TEST_CASE("minimal coset representatives, small flags") {
  // one block of size 1 and one of size 2: three cosets
  auto reps = minimal_coset_reps(make_flag({1, 2}));
  REQUIRE(reps.size() == 3);
  std::multiset<long> lengths;
  for (const auto& r : reps) lengths.insert(r.length);
  CHECK(lengths == std::multiset<long>{0, 1, 2});

  // trivial parabolic subgroup: every permutation is its own representative
  CHECK(minimal_coset_reps(make_flag({1, 1, 1})).size() == 6);

  // full parabolic subgroup: only the identity
  auto point = minimal_coset_reps(make_flag({3}));
  REQUIRE(point.size() == 1);
  CHECK(point[0].perm.images == std::vector<int>{1, 2, 3});
  CHECK(point[0].length == 0);
}

TEST_CASE("representatives partition the symmetric group, n <= 6") {
  // oracle: enumerate all of S_n, bucket by coset, take the inversion-minimal
  // element of each bucket and demand it is unique and matches the output
  for (int n = 2; n <= 6; ++n) {
    for (const auto& parts : all_compositions(n)) {
      FlagType f = make_flag(parts);
      auto reps = minimal_coset_reps(f);
      CHECK(static_cast<long long>(reps.size()) == multinomial(f));

      std::map<std::vector<int>, std::pair<long, int>> best;  // key -> (min inversions, count at min)
      std::vector<int> word(static_cast<size_t>(n));
      std::iota(word.begin(), word.end(), 1);
      do {
        Permutation p{word};
        long inv = p.inversions();
        auto key = coset_key(word, f);
        auto it = best.find(key);
        if (it == best.end())
          best.emplace(key, std::make_pair(inv, 1));
        else if (inv < it->second.first)
          it->second = {inv, 1};
        else if (inv == it->second.first)
          ++it->second.second;
      } while (std::next_permutation(word.begin(), word.end()));

      REQUIRE(best.size() == reps.size());
      for (const auto& rep : reps) {
        auto it = best.find(coset_key(rep.perm.images, f));
        REQUIRE(it != best.end());
        CHECK(rep.length == it->second.first);
        CHECK(it->second.second == 1);  // the minimum is attained once per coset
        // minimality means block-sorted images
        CHECK(rep.perm.images == it->first);
      }
    }
  }
}

TEST_CASE("representatives are sorted by length then lexicographically") {
  auto reps = minimal_coset_reps(make_flag({1, 2, 1}));
  for (size_t i = 1; i < reps.size(); ++i) {
    bool ordered = reps[i - 1].length < reps[i].length ||
                   (reps[i - 1].length == reps[i].length &&
                    reps[i - 1].perm.images < reps[i].perm.images);
    CHECK(ordered);
  }
}

TEST_CASE("representatives serialize as one-line notation arrays") {
  auto reps = minimal_coset_reps(make_flag({1, 2}));
  auto parsed = nlohmann::json::parse(reps_to_json(reps));
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0] == nlohmann::json({1, 2, 3}));
  CHECK(parsed[1] == nlohmann::json({2, 1, 3}));
  CHECK(parsed[2] == nlohmann::json({3, 1, 2}));
}

TEST_CASE("poincare polynomial") {
  CHECK(poincare_polynomial(make_flag({1, 2})) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(poincare_polynomial(make_flag({1, 1, 1})) == std::vector<std::int64_t>{1, 2, 2, 1});
  CHECK(poincare_polynomial(make_flag({4})) == std::vector<std::int64_t>{1});
}

TEST_CASE("poincare polynomial is palindromic with the right sum and top") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& parts : all_compositions(n)) {
      FlagType f = make_flag(parts);
      auto coeff = poincare_polynomial(f);
      REQUIRE(static_cast<long>(coeff.size()) == orbit_dimensions(f).complex_dim + 1);
      CHECK(coeff.front() == 1);
      CHECK(coeff.back() == 1);  // top cell is unique: the longest representative
      for (size_t i = 0; i < coeff.size(); ++i) CHECK(coeff[i] == coeff[coeff.size() - 1 - i]);
      CHECK(std::accumulate(coeff.begin(), coeff.end(), std::int64_t{0}) == multinomial(f));
    }
  }
}

TEST_CASE("maximum representative length equals the complex dimension") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& parts : all_compositions(n)) {
      FlagType f = make_flag(parts);
      long max_length = 0;
      for_each_minimal_rep(f, [&](const Permutation&, long len) {
        max_length = std::max(max_length, len);
      });
      CHECK(max_length == orbit_dimensions(f).complex_dim);
    }
  }
}

TEST_CASE("enumeration cap") {
  FlagType f = make_flag({5, 6});
  CHECK_THROWS_AS(minimal_coset_reps(f), EnumerationCapExceeded);
  CHECK_NOTHROW(minimal_coset_reps(f, 11));
}

TEST_CASE("degree-2 homology generators sit on block boundaries") {
  auto gens = h2_generators(make_flag({1, 2}));  // a = (1, 3)
  REQUIRE(gens.size() == 1);
  CHECK(gens[0].transposition == std::pair<int, int>{1, 2});

  gens = h2_generators(make_flag({1, 1, 1}));  // a = (1, 2, 3)
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].transposition == std::pair<int, int>{1, 2});
  CHECK(gens[1].transposition == std::pair<int, int>{2, 3});

  gens = h2_generators(make_flag({2, 1, 1}));  // a = (2, 3, 4)
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].transposition == std::pair<int, int>{2, 3});
  CHECK(gens[1].transposition == std::pair<int, int>{3, 4});

  CHECK_THROWS_AS(h2_generators(make_flag({4})), PointOrbit);
}
