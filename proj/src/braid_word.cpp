#include "bkl/braid_word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bkl {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1]) throw DomainError("not a permutation");
    seen[v - 1] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p(n);
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::cycle_up(int n) {
  Permutation p(n);
  for (int k = 1; k <= n; ++k) p.images_[k - 1] = k % n + 1;
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.n() != n()) throw DomainError("permutation size mismatch");
  Permutation out(n());
  for (int p = 1; p <= n(); ++p) out.images_[p - 1] = next.image(image(p));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(n());
  for (int p = 1; p <= n(); ++p) out.images_[image(p) - 1] = p;
  return out;
}

bool Permutation::is_identity() const {
  for (int p = 1; p <= n(); ++p)
    if (image(p) != p) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (int p = 1; p <= n(); ++p) {
    if (seen[p - 1]) continue;
    int len = 0;
    for (int q = p; !seen[q - 1]; q = image(q)) {
      seen[q - 1] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

int Permutation::cycle_count() const { return static_cast<int>(cycle_type().size()); }

// ---------------------------------------------------------------------------
// Words

void validate(const BandWord& w) {
  if (w.n < 1 || w.n > kMaxStrands)
    throw DomainError("strand count " + std::to_string(w.n) + " out of range [1, " +
                      std::to_string(kMaxStrands) + "]");
  for (const auto& g : w.letters) {
    if (g.sign != 1 && g.sign != -1) throw DomainError("band sign must be +1 or -1");
    if (!(1 <= g.i && g.i < g.j && g.j <= w.n))
      throw DomainError("band " + to_string(g) + " invalid for B" + std::to_string(w.n));
  }
}

void validate(const ArtinWord& w) {
  if (w.n < 1 || w.n > kMaxStrands) throw DomainError("strand count out of range");
  for (const auto& g : w.letters) {
    if (g.sign != 1 && g.sign != -1) throw DomainError("Artin sign must be +1 or -1");
    if (g.i < 1 || g.i >= w.n)
      throw DomainError("s(" + std::to_string(g.i) + ") invalid for B" + std::to_string(w.n));
  }
}

BandWord make_band_word(int n, std::vector<BandGenerator> letters, int delta_power) {
  BandWord w{n, delta_power, std::move(letters)};
  validate(w);
  return w;
}

ArtinWord band_to_artin(const BandGenerator& g, int n) {
  ArtinWord out{n, {}};
  for (int k = g.j - 1; k > g.i; --k) out.letters.push_back({k, 1});
  out.letters.push_back({g.i, g.sign});
  for (int k = g.i + 1; k < g.j; ++k) out.letters.push_back({k, -1});
  return out;
}

ArtinWord band_to_artin(const BandWord& w) {
  ArtinWord out{w.n, {}};
  for (const auto& g : expand_delta(w).letters) {
    auto part = band_to_artin(g, w.n);
    out.letters.insert(out.letters.end(), part.letters.begin(), part.letters.end());
  }
  return out;
}

BandWord artin_to_band(const ArtinWord& w) {
  BandWord out{w.n, 0, {}};
  out.letters.reserve(w.letters.size());
  for (const auto& s : w.letters) out.letters.push_back({s.i, s.i + 1, s.sign});
  return out;
}

std::vector<BandGenerator> delta_letters(int n, int power) {
  std::vector<BandGenerator> out;
  if (n < 2 || power == 0) return out;
  const int reps = power > 0 ? power : -power;
  out.reserve(static_cast<std::size_t>(reps) * (n - 1));
  for (int r = 0; r < reps; ++r) {
    if (power > 0) {
      for (int k = n - 1; k >= 1; --k) out.push_back({k, k + 1, 1});
    } else {
      for (int k = 1; k <= n - 1; ++k) out.push_back({k, k + 1, -1});
    }
  }
  return out;
}

BandWord expand_delta(const BandWord& w) {
  BandWord out{w.n, 0, delta_letters(w.n, w.delta_power)};
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return out;
}

BandGenerator tau(const BandGenerator& g, int n, int k) {
  const int shift = ((k % n) + n) % n;
  int a = (g.i - 1 + shift) % n + 1;
  int b = (g.j - 1 + shift) % n + 1;
  if (a > b) std::swap(a, b);
  return {a, b, g.sign};
}

BandWord inverse(const BandWord& w) {
  // (d^r X)^{-1} = X^{-1} d^{-r} = d^{-r} tau^{-r}(X^{-1})
  BandWord out{w.n, -w.delta_power, {}};
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(tau(it->inverse(), w.n, -w.delta_power));
  return out;
}

BandWord concat(const BandWord& a, const BandWord& b) {
  if (a.n != b.n) throw DomainError("strand count mismatch");
  // d^r X d^s Y = d^{r+s} tau^s(X) Y
  BandWord out{a.n, a.delta_power + b.delta_power, {}};
  out.letters.reserve(a.letters.size() + b.letters.size());
  for (const auto& g : a.letters) out.letters.push_back(tau(g, a.n, b.delta_power));
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BandWord conjugate_word(const BandWord& w, const BandWord& u) {
  return concat(concat(inverse(u), w), u);
}

Permutation permutation_of(const BandWord& w) {
  Permutation p(w.n);
  if (w.n >= 2) {
    const int r = ((w.delta_power % w.n) + w.n) % w.n;
    for (int k = 0; k < r; ++k) p = p.then(Permutation::cycle_up(w.n));
  }
  for (const auto& g : w.letters) p = p.then(Permutation::transposition(w.n, g.i, g.j));
  return p;
}

Permutation permutation_of(const ArtinWord& w) {
  Permutation p(w.n);
  for (const auto& s : w.letters) p = p.then(Permutation::transposition(w.n, s.i, s.i + 1));
  return p;
}

int writhe(const BandWord& w) {
  int sum = w.delta_power * (w.n - 1);
  for (const auto& g : w.letters) sum += g.sign;
  return sum;
}

int self_linking(const BandWord& w) { return writhe(w) - w.n; }

int nb_of_word(const BandWord& w) {
  if (w.delta_power < 0 && w.n > 1)
    throw DomainError("nb of a word with negative delta power is ambiguous; expand delta first");
  return static_cast<int>(
      std::count_if(w.letters.begin(), w.letters.end(), [](const auto& g) { return g.sign < 0; }));
}

int letter_count(const BandWord& w) {
  const int r = w.delta_power < 0 ? -w.delta_power : w.delta_power;
  return static_cast<int>(w.letters.size()) + r * (w.n - 1);
}

std::string to_string(const BandGenerator& g) {
  std::ostringstream os;
  os << (g.sign > 0 ? 'a' : 'A') << '(' << g.i << ',' << g.j << ')';
  return os.str();
}

std::string to_string(const BandWord& w) {
  std::ostringstream os;
  os << 'B' << w.n << ':';
  if (w.delta_power != 0) {
    os << " d";
    if (w.delta_power != 1) os << '^' << w.delta_power;
  }
  for (const auto& g : w.letters) os << ' ' << to_string(g);
  return os.str();
}

std::string to_string(const ArtinWord& w) {
  std::ostringstream os;
  os << 'B' << w.n << ':';
  for (const auto& s : w.letters) os << ' ' << (s.sign > 0 ? 's' : 'S') << '(' << s.i << ')';
  return os.str();
}

}  // namespace bkl
