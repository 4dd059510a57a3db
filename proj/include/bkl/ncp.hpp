#pragma once

// Canonical factors of the band-generator Garside structure on B_n, stored as
// noncrossing partitions of {1..n}.
//
// A block {i_1 < ... < i_k} is the braid a_{i_{k-1},i_k} ... a_{i_1,i_2}; its
// underlying permutation is the increasing cycle i_1 -> i_2 -> ... -> i_k -> i_1.
// The factor is stored as that permutation, which makes products, complements
// and the rotation tau cheap. All values are immutable once built.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bkl/braid_word.hpp"

namespace bkl {

using Blocks = std::vector<std::vector<int>>;

class NoncrossingPartition {
 public:
  NoncrossingPartition() = default;

  static NoncrossingPartition identity(int n);
  static NoncrossingPartition delta(int n);
  /// The single band a_{i,j} viewed as a factor.
  static NoncrossingPartition band(int n, int i, int j);
  /// Throws DomainError if `blocks` is not a noncrossing partition of {1..n}.
  static NoncrossingPartition from_blocks(int n, const Blocks& blocks);
  /// Accepts a permutation whose cycles are increasing cycles on noncrossing
  /// blocks; throws DomainError otherwise.
  static NoncrossingPartition from_permutation(const Permutation& p);

  int n() const { return n_; }
  /// Next element of p's block in cyclically increasing order (1-based).
  int next(int p) const { return next_[p - 1] + 1; }
  /// Smallest element of p's block (1-based).
  int block_min(int p) const;

  Blocks blocks() const;
  int block_count() const;
  /// Band word length, n - #blocks.
  int length() const { return n_ - block_count(); }
  bool is_identity() const;
  bool is_delta() const;

  Permutation permutation() const;

  friend bool operator==(const NoncrossingPartition& a, const NoncrossingPartition& b) {
    return a.n_ == b.n_ && a.next_ == b.next_;
  }
  friend bool operator<(const NoncrossingPartition& a, const NoncrossingPartition& b) {
    return std::make_pair(a.n_, a.next_) < std::make_pair(b.n_, b.next_);
  }

  std::size_t hash() const;
  /// Appends n raw bytes that identify the factor for a fixed n.
  void append_key(std::string& out) const;

 private:
  friend class FactorAccess;
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxStrands> next_{};  // 0-based images
};

using Factor = NoncrossingPartition;

bool is_noncrossing(int n, const Blocks& blocks);

BandWord factor_to_word(const Factor& p);
int factor_length(const Factor& p);

/// A refines B, i.e. A is a (left and right) divisor of B.
bool refines(const Factor& a, const Factor& b);
Factor meet(const Factor& a, const Factor& b);
Factor join(const Factor& a, const Factor& b);

/// A'' with A A'' = delta.
Factor right_complement(const Factor& a);
/// A' with A' A = delta.
Factor left_complement(const Factor& a);

/// tau^k(A) = delta^{-k} A delta^k; shifts every index by +k mod n.
Factor tau(const Factor& a, int k = 1);
Factor tau_inv(const Factor& a);

/// The factor equal to the product a*s. Requires s to refine right_complement(a).
Factor compose_simple(const Factor& a, const Factor& s);
/// The factor t with s*t = b. Requires s to refine b.
Factor left_quotient(const Factor& s, const Factor& b);

/// Maximally left-weights the pair: moves meet(right_complement(a), b) into a.
std::pair<Factor, Factor> left_weight_pair(const Factor& a, const Factor& b);
bool is_left_weighted(const Factor& a, const Factor& b);
/// a2*b2 equals a*b and a divides a2.
bool is_more_left_weighted(const Factor& a, const Factor& b, const Factor& a2, const Factor& b2);

/// Default enumeration cap; Catalan(12) = 208012 factors.
inline constexpr int kDefaultFactorCap = 12;

/// All noncrossing partitions of {1..n}, sorted. Memoized per n.
const std::vector<Factor>& enumerate_factors(int n, int cap = kDefaultFactorCap);

/// `{1,3|2|4}`.
std::string to_string(const Factor& p);
/// Parses `{1,3|2|4}`; n is the number of listed elements.
Factor parse_partition(std::string_view text);

}  // namespace bkl

template <>
struct std::hash<bkl::NoncrossingPartition> {
  std::size_t operator()(const bkl::NoncrossingPartition& p) const noexcept { return p.hash(); }
};
