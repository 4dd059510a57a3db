#include "bkl/lcf.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace bkl {

// ---------------------------------------------------------------------------
// FactorWord

FactorWord to_factor_word(const BandWord& w) {
  validate(w);
  FactorWord out{w.n, w.delta_power, {}};
  out.factors.reserve(w.letters.size());
  for (const auto& g : w.letters) out.factors.push_back({Factor::band(w.n, g.i, g.j), g.sign});
  return out;
}

FactorWord inverse(const FactorWord& w) {
  // (d^r X)^{-1} = d^{-r} tau^{-r}(X^{-1})
  FactorWord out{w.n, -w.delta_power, {}};
  out.factors.reserve(w.factors.size());
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
    out.factors.push_back({tau(it->factor, -w.delta_power), -it->sign});
  return out;
}

FactorWord concat(const FactorWord& a, const FactorWord& b) {
  if (a.n != b.n) throw DomainError("strand count mismatch");
  FactorWord out{a.n, a.delta_power + b.delta_power, {}};
  out.factors.reserve(a.factors.size() + b.factors.size());
  for (const auto& f : a.factors) out.factors.push_back({tau(f.factor, b.delta_power), f.sign});
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

BandWord to_band_word(const FactorWord& w) {
  BandWord out{w.n, w.delta_power, {}};
  for (const auto& sf : w.factors) {
    BandWord part = factor_to_word(sf.factor);
    if (sf.sign < 0) part = inverse(part);
    out.letters.insert(out.letters.end(), part.letters.begin(), part.letters.end());
  }
  return out;
}

std::string to_string(const FactorWord& w) {
  std::ostringstream os;
  bool first = true;
  if (w.delta_power != 0) {
    os << "d^" << w.delta_power;
    first = false;
  }
  for (const auto& sf : w.factors) {
    if (!first) os << ' ';
    first = false;
    os << to_string(sf.factor);
    if (sf.sign < 0) os << "^-1";
  }
  if (first) os << 'e';
  return os.str();
}

// ---------------------------------------------------------------------------
// Normal form of a positive factor sequence

namespace {

struct Positive {
  int extra_delta = 0;
  std::vector<Factor> seq;
};

// Moves the delta at index i to the front: A_1..A_{i-1} d = d tau(A_1)..tau(A_{i-1}).
void absorb_delta_at(Positive& p, std::size_t i) {
  for (std::size_t k = 0; k < i; ++k) p.seq[k] = tau(p.seq[k]);
  p.seq.erase(p.seq.begin() + static_cast<long>(i));
  ++p.extra_delta;
}

void drop_trivial(Positive& p) {
  std::vector<Factor> kept;
  kept.reserve(p.seq.size());
  for (std::size_t i = 0; i < p.seq.size(); ++i) {
    const Factor& f = p.seq[i];
    if (f.is_identity()) continue;
    if (f.is_delta()) {
      for (auto& g : kept) g = tau(g);
      ++p.extra_delta;
      continue;
    }
    kept.push_back(f);
  }
  p.seq = std::move(kept);
}

// Applies left_weight_pair at (i, i+1). Returns true if anything changed.
bool weight_at(Positive& p, std::size_t i) {
  auto [a, b] = left_weight_pair(p.seq[i], p.seq[i + 1]);
  if (a == p.seq[i]) return false;
  const bool a_delta = a.is_delta();
  const bool b_trivial = b.is_identity();
  p.seq[i] = a;
  p.seq[i + 1] = b;
  if (b_trivial) p.seq.erase(p.seq.begin() + static_cast<long>(i) + 1);
  if (a_delta) absorb_delta_at(p, i);
  return true;
}

void passes(Positive& p) {
  drop_trivial(p);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < p.seq.size(); ++i)
      if (weight_at(p, i)) changed = true;
  }
}

void random_pairs(Positive& p, std::uint64_t seed) {
  drop_trivial(p);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> bad;
  for (;;) {
    bad.clear();
    for (std::size_t i = 0; i + 1 < p.seq.size(); ++i)
      if (!is_left_weighted(p.seq[i], p.seq[i + 1])) bad.push_back(i);
    if (bad.empty()) return;
    std::uniform_int_distribution<std::size_t> pick(0, bad.size() - 1);
    weight_at(p, bad[pick(rng)]);
  }
}

void append_factor(Positive& p, const Factor& x) {
  if (x.is_identity()) return;
  p.seq.push_back(x);
  for (std::size_t i = p.seq.size() - 1; i-- > 0;) {
    auto [a, b] = left_weight_pair(p.seq[i], p.seq[i + 1]);
    if (a == p.seq[i]) break;
    p.seq[i] = a;
    p.seq[i + 1] = b;
  }
  while (!p.seq.empty() && p.seq.back().is_identity()) p.seq.pop_back();
  std::size_t lead = 0;
  while (lead < p.seq.size() && p.seq[lead].is_delta()) ++lead;
  if (lead > 0) {
    p.seq.erase(p.seq.begin(), p.seq.begin() + static_cast<long>(lead));
    p.extra_delta += static_cast<int>(lead);
  }
}

// Left multiplication of a normal sequence by x, sweeping left to right.
void prepend_factor(Positive& p, const Factor& x) {
  if (x.is_identity()) return;
  Factor carry = x;
  std::size_t i = 0;
  for (; i < p.seq.size() && !carry.is_identity(); ++i) {
    auto [a, b] = left_weight_pair(carry, p.seq[i]);
    p.seq[i] = a;
    carry = b;
  }
  if (!carry.is_identity()) p.seq.push_back(carry);
  drop_trivial(p);
}

Lcf finish(int n, int r, Positive p) {
  // Leaves an already-normal sequence untouched in one pass.
  passes(p);
  return Lcf{n, r + p.extra_delta, std::move(p.seq)};
}

}  // namespace

Lcf normalize(const FactorWord& w, SweepOrder order, std::uint64_t seed) {
  if (w.n < 1 || w.n > kMaxStrands) throw DomainError("strand count out of range");
  if (w.n == 1) return identity_lcf(1);

  // X^{-1} = X'' d^{-1} with X X'' = d; every d^{-1} is then pushed to the
  // front via A d^{-1} = d^{-1} tau^{-1}(A).
  const std::size_t m = w.factors.size();
  std::vector<int> after(m + 1, 0);
  for (std::size_t t = m; t-- > 0;) after[t] = after[t + 1] + (w.factors[t].sign < 0 ? 1 : 0);

  Positive p;
  p.seq.reserve(m);
  for (std::size_t t = 0; t < m; ++t) {
    const auto& sf = w.factors[t];
    const Factor base = sf.sign > 0 ? sf.factor : right_complement(sf.factor);
    p.seq.push_back(tau(base, -after[t]));
  }
  const int r = w.delta_power - after[0];

  switch (order) {
    case SweepOrder::kInsertion: {
      Positive nf;
      nf.seq.reserve(m);
      for (const auto& f : p.seq) append_factor(nf, f);
      return finish(w.n, r, std::move(nf));
    }
    case SweepOrder::kLeftToRightPasses:
      passes(p);
      return Lcf{w.n, r + p.extra_delta, std::move(p.seq)};
    case SweepOrder::kRandomPairs:
      random_pairs(p, seed);
      return Lcf{w.n, r + p.extra_delta, std::move(p.seq)};
  }
  return {};
}

Lcf lcf(const BandWord& w) { return normalize(to_factor_word(w)); }

Lcf lcf(const BandWord& w, SweepOrder order, std::uint64_t seed) {
  return normalize(to_factor_word(w), order, seed);
}

Lcf lcf(const ArtinWord& w) {
  validate(w);
  return lcf(artin_to_band(w));
}

Lcf identity_lcf(int n) { return Lcf{n, 0, {}}; }

Lcf delta_power_lcf(int n, int r) { return Lcf{n, n == 1 ? 0 : r, {}}; }

InfSupLen inf_sup_len(const Lcf& f) { return {f.inf, f.sup(), f.canonical_length()}; }

bool equal(const BandWord& a, const BandWord& b) {
  if (a.n != b.n) throw DomainError("cannot compare braids on different strand counts");
  return lcf(a) == lcf(b);
}

FactorWord to_factor_word(const Lcf& f) {
  FactorWord out{f.n, f.inf, {}};
  out.factors.reserve(f.factors.size());
  for (const auto& a : f.factors) out.factors.push_back({a, 1});
  return out;
}

Lcf multiply(const Lcf& a, const Lcf& b) {
  if (a.n != b.n) throw DomainError("strand count mismatch");
  if (a.n == 1) return a;
  // d^r A d^s B = d^{r+s} tau^s(A) B
  Positive p;
  p.seq.reserve(a.factors.size() + b.factors.size());
  for (const auto& f : a.factors) p.seq.push_back(tau(f, b.inf));
  for (const auto& f : b.factors) append_factor(p, f);
  return finish(a.n, a.inf + b.inf, std::move(p));
}

Lcf invert(const Lcf& f) { return normalize(inverse(to_factor_word(f))); }

Lcf conjugate(const Lcf& f, const BandWord& u) {
  if (u.n != f.n) throw DomainError("strand count mismatch");
  const FactorWord fu = to_factor_word(u);
  return normalize(concat(concat(inverse(fu), to_factor_word(f)), fu));
}

Lcf conjugate_by_factor(const Lcf& f, const Factor& u) {
  if (u.n() != f.n) throw DomainError("strand count mismatch");
  if (f.n == 1 || u.is_identity()) return f;
  // u^{-1} d^r A = d^{r-1} tau^{-1}(right_complement(tau^r(u))) A
  Positive p;
  p.seq = f.factors;
  prepend_factor(p, tau(right_complement(tau(u, f.inf)), -1));
  append_factor(p, u);
  return finish(f.n, f.inf - 1, std::move(p));
}

BandWord lcf_to_word(const Lcf& f) { return to_band_word(to_factor_word(f)); }

int writhe(const Lcf& f) {
  int sum = f.inf * (f.n - 1);
  for (const auto& a : f.factors) sum += a.length();
  return sum;
}

Permutation permutation_of(const Lcf& f) { return permutation_of(lcf_to_word(f)); }

bool is_valid_lcf(const Lcf& f) {
  if (f.n == 1) return f.inf == 0 && f.factors.empty();
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (f.factors[i].n() != f.n) return false;
    if (f.factors[i].is_identity() || f.factors[i].is_delta()) return false;
    if (i + 1 < f.factors.size() && !is_left_weighted(f.factors[i], f.factors[i + 1])) return false;
  }
  return true;
}

std::string to_string(const Lcf& f) {
  std::ostringstream os;
  bool first = true;
  if (f.inf != 0) {
    os << "d^" << f.inf;
    first = false;
  }
  for (const auto& a : f.factors) {
    if (!first) os << ' ';
    first = false;
    os << to_string(a);
  }
  if (first) os << 'e';
  return os.str();
}

Lcf parse_lcf(std::string_view text, int n) {
  Lcf out{n, 0, {}};
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  for (skip(); pos < text.size(); skip()) {
    const std::size_t start = pos;
    if (text[pos] == 'e') {
      ++pos;
      continue;
    }
    if (text[pos] == 'd') {
      ++pos;
      int r = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t end = pos;
        if (end < text.size() && (text[end] == '-' || text[end] == '+')) ++end;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        try {
          r = std::stoi(std::string(text.substr(pos, end - pos)));
        } catch (const std::exception&) {
          throw ParseError("bad delta exponent", pos);
        }
        pos = end;
      }
      out.inf += r;
      continue;
    }
    if (text[pos] != '{') throw ParseError("expected 'd', 'e' or a partition", start);
    const std::size_t close = text.find('}', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated partition", pos);
    Factor a = parse_partition(text.substr(pos, close - pos + 1));
    if (a.n() != n) throw ParseError("partition size does not match B" + std::to_string(n), start);
    out.factors.push_back(a);
    pos = close + 1;
  }
  if (!is_valid_lcf(out)) throw DomainError("text is not a left-canonical form");
  return out;
}

std::string canonical_key(const Lcf& f) {
  std::string key;
  key.reserve(5 + f.factors.size() * static_cast<std::size_t>(f.n));
  key.push_back(static_cast<char>(f.n));
  const auto inf = static_cast<std::uint32_t>(f.inf);
  for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((inf >> (8 * b)) & 0xff));
  for (const auto& a : f.factors) a.append_key(key);
  return key;
}

}  // namespace bkl
