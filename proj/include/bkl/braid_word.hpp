#pragma once

// Braid words in Birman-Ko-Lee band generators and Artin generators, plus the
// elementary invariants that can be read directly off a word.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bkl {

/// Largest strand count supported by the fixed-capacity factor storage.
inline constexpr int kMaxStrands = 32;

/// A malformed word or partition string. `position()` is a byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input that is well-formed but outside an operation's contract.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a_{i,j}^{sign}, 1 <= i < j <= n.
struct BandGenerator {
  int i = 1;
  int j = 2;
  int sign = 1;

  BandGenerator inverse() const { return {i, j, -sign}; }
  bool positive() const { return sign > 0; }
  friend bool operator==(const BandGenerator&, const BandGenerator&) = default;
};

/// delta^{delta_power} followed by `letters`, read left to right.
struct BandWord {
  int n = 1;
  int delta_power = 0;
  std::vector<BandGenerator> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty() && delta_power == 0; }
  friend bool operator==(const BandWord&, const BandWord&) = default;
};

/// sigma_i^{sign}, 1 <= i <= n-1.
struct ArtinGenerator {
  int i = 1;
  int sign = 1;
  friend bool operator==(const ArtinGenerator&, const ArtinGenerator&) = default;
};

struct ArtinWord {
  int n = 1;
  std::vector<ArtinGenerator> letters;
  friend bool operator==(const ArtinWord&, const ArtinWord&) = default;
};

/// Permutation of strand positions {1..n}. `image(p)` is where the strand
/// starting at position p ends up.
class Permutation {
 public:
  explicit Permutation(int n = 0);
  static Permutation from_images(std::vector<int> images);
  static Permutation transposition(int n, int a, int b);
  static Permutation cycle_up(int n);  // 1 -> 2 -> ... -> n -> 1

  int n() const { return static_cast<int>(images_.size()); }
  int image(int p) const { return images_[p - 1]; }
  const std::vector<int>& images() const { return images_; }

  /// Apply *this first, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Sorted cycle lengths, fixed points included.
  std::vector<int> cycle_type() const;
  int cycle_count() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Throws DomainError unless every letter satisfies 1 <= i < j <= n.
void validate(const BandWord& w);
void validate(const ArtinWord& w);

BandWord make_band_word(int n, std::vector<BandGenerator> letters, int delta_power = 0);

/// a_{i,j}^{+-1} = (s_{j-1}...s_{i+1}) s_i^{+-1} (s_{j-1}...s_{i+1})^{-1}.
ArtinWord band_to_artin(const BandGenerator& g, int n);
/// Letterwise expansion; delta^r becomes (s_{n-1}...s_1)^r.
ArtinWord band_to_artin(const BandWord& w);
BandWord artin_to_band(const ArtinWord& w);

/// Positive word for delta = a_{n-1,n} ... a_{1,2}.
std::vector<BandGenerator> delta_letters(int n, int power);
/// Same element with delta_power folded into explicit letters.
BandWord expand_delta(const BandWord& w);

/// tau^k(a_{i,j}) = a_{i+k,j+k} with indices taken mod n.
BandGenerator tau(const BandGenerator& g, int n, int k = 1);

BandWord inverse(const BandWord& w);
BandWord concat(const BandWord& a, const BandWord& b);
/// u^{-1} w u.
BandWord conjugate_word(const BandWord& w, const BandWord& u);

Permutation permutation_of(const BandWord& w);
Permutation permutation_of(const ArtinWord& w);

int writhe(const BandWord& w);
int self_linking(const BandWord& w);
/// Number of negative letters. Words carrying delta^{-r} must be expanded first.
int nb_of_word(const BandWord& w);
/// Letters after expanding delta powers.
int letter_count(const BandWord& w);

std::string to_string(const BandGenerator& g);
std::string to_string(const BandWord& w);
std::string to_string(const ArtinWord& w);

}  // namespace bkl
