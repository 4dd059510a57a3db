#include "oracles.hpp"

#include <cstdlib>
#include <map>

namespace oracle {

using bkl::LaurentPoly1;

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

namespace {

FreeWord invert(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

// Replace each x_k in `w` by images[k-1].
FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  FreeWord out;
  for (int x : w) {
    const FreeWord& img = images[std::abs(x) - 1];
    if (x > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      const FreeWord inv = invert(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

}  // namespace

std::vector<FreeWord> artin_action(const bkl::ArtinWord& w) {
  std::vector<FreeWord> images(w.n);
  for (int k = 0; k < w.n; ++k) images[k] = {k + 1};
  for (const auto& g : w.letters) {
    const int i = g.i;
    std::vector<FreeWord> gen(w.n);
    for (int k = 0; k < w.n; ++k) gen[k] = {k + 1};
    if (g.sign > 0) {
      gen[i - 1] = {i, i + 1, -i};
      gen[i] = {i};
    } else {
      gen[i - 1] = {i + 1};
      gen[i] = {-(i + 1), i, i + 1};
    }
    // Acting by w then g: x -> w(g(x)).
    std::vector<FreeWord> next(w.n);
    for (int k = 0; k < w.n; ++k) next[k] = substitute(gen[k], images);
    images = std::move(next);
  }
  return images;
}

std::vector<FreeWord> artin_action(const bkl::BandWord& w) { return artin_action(bkl::band_to_artin(w)); }

bool braids_equal(const bkl::BandWord& a, const bkl::BandWord& b) {
  return a.n == b.n && artin_action(a) == artin_action(b);
}

std::string element_key(const bkl::BandWord& w) {
  std::string key;
  for (const auto& img : artin_action(w)) {
    for (int x : img) key.push_back(static_cast<char>(x));
    key.push_back(0);
  }
  return key;
}

bkl::LaurentPoly1 alexander_fox(const bkl::BandWord& w) {
  const int n = w.n;
  if (n == 1) return 1;
  const auto images = artin_action(w);
  // Relation r_i = image_i x_i^{-1}; row i holds d r_i / d x_j with every x mapped to t.
  bkl::PolyMatrix m(n, std::vector<LaurentPoly1>(n));
  for (int i = 0; i < n; ++i) {
    FreeWord r = images[i];
    r.push_back(-(i + 1));
    int prefix = 0;
    for (int x : r) {
      const int j = std::abs(x) - 1;
      if (x > 0) {
        m[i][j] += LaurentPoly1::t(prefix);
        ++prefix;
      } else {
        --prefix;
        m[i][j] -= LaurentPoly1::t(prefix);
      }
    }
  }
  bkl::PolyMatrix minor(n - 1, std::vector<LaurentPoly1>(n - 1));
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) minor[i][j] = m[i][j];
  return bkl::determinant(std::move(minor));
}

std::vector<bkl::BandWord> all_band_words(int n, int length) {
  std::vector<bkl::BandGenerator> gens;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      gens.push_back({i, j, 1});
      gens.push_back({i, j, -1});
    }
  std::vector<bkl::BandWord> out{bkl::BandWord{n, 0, {}}};
  for (int l = 0; l < length; ++l) {
    std::vector<bkl::BandWord> next;
    next.reserve(out.size() * gens.size());
    for (const auto& w : out)
      for (const auto& g : gens) {
        next.push_back(w);
        next.back().letters.push_back(g);
      }
    out = std::move(next);
  }
  return out;
}

bkl::BandWord random_band_word(std::mt19937_64& rng, int n, int length, double negative_probability) {
  bkl::BandWord w{n, 0, {}};
  std::uniform_int_distribution<int> pick(1, n);
  std::bernoulli_distribution neg(negative_probability);
  for (int k = 0; k < length; ++k) {
    int i = pick(rng);
    int j = pick(rng);
    while (j == i) j = pick(rng);
    if (i > j) std::swap(i, j);
    w.letters.push_back({i, j, neg(rng) ? -1 : 1});
  }
  return w;
}

bkl::BandWord random_artin_as_band(std::mt19937_64& rng, int n, int length) {
  bkl::BandWord w{n, 0, {}};
  std::uniform_int_distribution<int> pick(1, n - 1);
  std::bernoulli_distribution neg(0.5);
  for (int k = 0; k < length; ++k) {
    const int i = pick(rng);
    w.letters.push_back({i, i + 1, neg(rng) ? -1 : 1});
  }
  return w;
}

}  // namespace oracle

namespace oracle {

namespace {

using bkl::LaurentPoly2;
using Perm = std::vector<int>;  // one-line notation, values 1..n
using Element = std::map<Perm, LaurentPoly2>;

void add(Element& e, const Perm& p, const LaurentPoly2& c) {
  if (c.is_zero()) return;
  auto& slot = e[p];
  slot += c;
  if (slot.is_zero()) e.erase(p);
}

struct Hecke {
  int eps;
  LaurentPoly2 vz = LaurentPoly2::monomial(1, 1, 1);
  LaurentPoly2 v2;
  LaurentPoly2 d;
  std::map<Perm, LaurentPoly2> memo;

  explicit Hecke(int e)
      : eps(e),
        v2(LaurentPoly2::monomial(-e, 2, 0)),
        d(LaurentPoly2::monomial(1, -1, -1) + LaurentPoly2::monomial(e, 1, -1)) {}

  // T_p g_i, i is 1-based.
  Element right(const Element& x, int i) const {
    Element out;
    for (const auto& [p, c] : x) {
      Perm q = p;
      std::swap(q[i - 1], q[i]);
      if (p[i - 1] < p[i]) {
        add(out, q, c);
      } else {
        add(out, p, vz * c);
        add(out, q, v2 * c);
      }
    }
    return out;
  }

  Element right_inverse(const Element& x, int i) const {
    // g^-1 = eps v^-1 z - eps v^-2 g
    Element out;
    const auto a = LaurentPoly2::monomial(eps, -1, 1);
    const auto b = LaurentPoly2::monomial(-eps, -2, 0);
    for (const auto& [p, c] : x) add(out, p, a * c);
    for (const auto& [p, c] : right(x, i)) add(out, p, b * c);
    return out;
  }

  Element left(int i, const Element& x) const {
    Element out;
    for (const auto& [p, c] : x) {
      Perm q = p;
      int pi = 0, pj = 0;
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == i) pi = static_cast<int>(k);
        if (p[k] == i + 1) pj = static_cast<int>(k);
      }
      std::swap(q[pi], q[pj]);
      if (pi < pj) {
        add(out, q, c);
      } else {
        add(out, p, vz * c);
        add(out, q, v2 * c);
      }
    }
    return out;
  }

  LaurentPoly2 trace(const Perm& p) {
    const int n = static_cast<int>(p.size());
    if (n == 1) return 1;
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    LaurentPoly2 result;
    if (p.back() == n) {
      result = d * trace(Perm(p.begin(), p.end() - 1));
    } else {
      // p = p0 s_{n-1} ... s_j with p0 fixing n; move g_{n-1} ... out by Markov.
      int j = 0;
      while (p[j] != n) ++j;
      Perm p0 = p;
      p0.erase(p0.begin() + j);
      p0.push_back(n);
      Element y{{Perm(p0.begin(), p0.end() - 1), 1}};
      for (int g = j + 1; g <= n - 2; ++g) y = left(g, y);
      result = trace(y);
    }
    memo.emplace(p, result);
    return result;
  }

  LaurentPoly2 trace(const Element& x) {
    LaurentPoly2 s;
    for (const auto& [p, c] : x) s += c * trace(p);
    return s;
  }
};

}  // namespace

bkl::LaurentPoly2 homfly_closure(const bkl::BandWord& w, int eps) {
  const auto a = bkl::band_to_artin(w);
  Hecke h(eps);
  Perm id(a.n);
  for (int k = 0; k < a.n; ++k) id[k] = k + 1;
  Element x{{id, 1}};
  for (const auto& g : a.letters) x = g.sign > 0 ? h.right(x, g.i) : h.right_inverse(x, g.i);
  return h.trace(x);
}

}  // namespace oracle
