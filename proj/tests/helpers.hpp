#pragma once

#include <algorithm>
#include <random>
#include <string_view>

#include "bkl/braid_word.hpp"
#include "bkl/lcf.hpp"
#include "bkl/ncp.hpp"
#include "bkl/parse.hpp"

namespace testing {

inline bkl::BandWord W(std::string_view s) { return bkl::parse_band_word(s); }
inline bkl::Factor P(std::string_view s) { return bkl::parse_partition(s); }

/// Inserts, at a random position, a trivial word built from one defining
/// relation or a free cancellation.
inline bkl::BandWord insert_relator(std::mt19937_64& rng, const bkl::BandWord& w) {
  const int n = w.n;
  std::vector<bkl::BandGenerator> piece;
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> strand(1, n);
  const int k0 = n >= 3 ? kind(rng) : 2;
  if (k0 == 0) {
    int t[3];
    do {
      for (int& x : t) x = strand(rng);
    } while (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]);
    std::sort(t, t + 3);
    const int i = t[0], j = t[1], k = t[2];
    // a_jk a_ij = a_ij a_ik = a_ik a_jk; pick one equation at random
    std::uniform_int_distribution<int> which(0, 2);
    switch (which(rng)) {
      case 0: piece = {{j, k, 1}, {i, j, 1}, {i, k, -1}, {i, j, -1}}; break;
      case 1: piece = {{i, j, 1}, {i, k, 1}, {j, k, -1}, {i, k, -1}}; break;
      default: piece = {{j, k, 1}, {i, j, 1}, {j, k, -1}, {i, k, -1}}; break;
    }
  } else if (k0 == 1 && n >= 4) {
    int t[4];
    do {
      for (int& x : t) x = strand(rng);
      std::sort(t, t + 4);
    } while (t[0] == t[1] || t[1] == t[2] || t[2] == t[3]);
    // disjoint or nested pairs commute
    std::bernoulli_distribution nested(0.5);
    bkl::BandGenerator a{t[0], t[1], 1}, b{t[2], t[3], 1};
    if (nested(rng)) a = {t[0], t[3], 1}, b = {t[1], t[2], 1};
    piece = {a, b, a.inverse(), b.inverse()};
  } else {
    int i = strand(rng), j = strand(rng);
    while (j == i) j = strand(rng);
    if (i > j) std::swap(i, j);
    std::bernoulli_distribution s(0.5);
    bkl::BandGenerator g{i, j, s(rng) ? 1 : -1};
    piece = {g, g.inverse()};
  }
  bkl::BandWord out = w;
  std::uniform_int_distribution<std::size_t> pos(0, w.letters.size());
  out.letters.insert(out.letters.begin() + static_cast<std::ptrdiff_t>(pos(rng)), piece.begin(), piece.end());
  return out;
}

}  // namespace testing
