#include "bkl/ncp.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

namespace bkl {

using Raw = std::array<std::uint8_t, kMaxStrands>;

class FactorAccess {
 public:
  static const Raw& raw(const Factor& f) { return f.next_; }
  static Factor make(int n, const Raw& next) {
    Factor f;
    f.n_ = static_cast<std::uint8_t>(n);
    f.next_ = next;
    return f;
  }
};

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxStrands) throw DomainError("strand count out of range");
}

void check_same_n(const Factor& a, const Factor& b) {
  if (a.n() != b.n()) throw DomainError("canonical factors on different strand counts");
}

// Block minimum of every element, 0-based.
Raw labels(const Factor& f) {
  const Raw& next = FactorAccess::raw(f);
  const int n = f.n();
  Raw lab{};
  for (int p = 0; p < n; ++p) {
    if (next[p] > p) continue;  // p is the block maximum, next[p] the minimum
    const int lo = next[p];
    int q = lo;
    do {
      lab[q] = static_cast<std::uint8_t>(lo);
      q = next[q];
    } while (q != lo);
  }
  return lab;
}

Raw inverse_of(const Factor& f) {
  const Raw& next = FactorAccess::raw(f);
  Raw inv{};
  for (int p = 0; p < f.n(); ++p) inv[next[p]] = static_cast<std::uint8_t>(p);
  return inv;
}

bool crosses(const std::vector<int>& x, const std::vector<int>& y) {
  // x, y sorted and disjoint: crossing iff some a<b<c<d alternates between them.
  for (std::size_t ia = 0; ia < x.size(); ++ia)
    for (std::size_t ic = ia + 1; ic < x.size(); ++ic) {
      bool inside = false;
      bool outside = false;
      for (int v : y) {
        if (v > x[ia] && v < x[ic])
          inside = true;
        else
          outside = true;
      }
      if (inside && outside) return true;
    }
  return false;
}

Factor from_blocks_unchecked(int n, const Blocks& blocks) {
  Raw next{};
  for (auto block : blocks) {
    std::sort(block.begin(), block.end());
    for (std::size_t k = 0; k < block.size(); ++k)
      next[block[k] - 1] = static_cast<std::uint8_t>(block[(k + 1) % block.size()] - 1);
  }
  return FactorAccess::make(n, next);
}

}  // namespace

// ---------------------------------------------------------------------------

NoncrossingPartition NoncrossingPartition::identity(int n) {
  check_n(n);
  Raw next{};
  for (int p = 0; p < n; ++p) next[p] = static_cast<std::uint8_t>(p);
  return FactorAccess::make(n, next);
}

NoncrossingPartition NoncrossingPartition::delta(int n) {
  check_n(n);
  Raw next{};
  for (int p = 0; p < n; ++p) next[p] = static_cast<std::uint8_t>((p + 1) % n);
  return FactorAccess::make(n, next);
}

NoncrossingPartition NoncrossingPartition::band(int n, int i, int j) {
  check_n(n);
  if (!(1 <= i && i < j && j <= n)) throw DomainError("band indices out of range");
  Factor f = identity(n);
  f.next_[i - 1] = static_cast<std::uint8_t>(j - 1);
  f.next_[j - 1] = static_cast<std::uint8_t>(i - 1);
  return f;
}

NoncrossingPartition NoncrossingPartition::from_blocks(int n, const Blocks& blocks) {
  check_n(n);
  if (!is_noncrossing(n, blocks)) throw DomainError("blocks do not form a noncrossing partition");
  return from_blocks_unchecked(n, blocks);
}

NoncrossingPartition NoncrossingPartition::from_permutation(const Permutation& p) {
  const int n = p.n();
  check_n(n);
  Blocks blocks;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int s = 1; s <= n; ++s) {
    if (seen[s - 1]) continue;
    std::vector<int> cycle;
    for (int q = s; !seen[q - 1]; q = p.image(q)) {
      seen[q - 1] = true;
      cycle.push_back(q);
    }
    // s is the smallest unseen element, so the cycle is increasing iff it is sorted.
    if (!std::is_sorted(cycle.begin(), cycle.end()))
      throw DomainError("permutation cycle is not increasing");
    blocks.push_back(std::move(cycle));
  }
  return from_blocks(n, blocks);
}

int NoncrossingPartition::block_min(int p) const { return labels(*this)[p - 1] + 1; }

Blocks NoncrossingPartition::blocks() const {
  Blocks out;
  for (int p = 0; p < n_; ++p) {
    if (next_[p] > p) continue;
    std::vector<int> block;
    const int lo = next_[p];
    int q = lo;
    do {
      block.push_back(q + 1);
      q = next_[q];
    } while (q != lo);
    out.push_back(std::move(block));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int NoncrossingPartition::block_count() const {
  int count = 0;
  for (int p = 0; p < n_; ++p)
    if (next_[p] <= p) ++count;
  return count;
}

bool NoncrossingPartition::is_identity() const {
  for (int p = 0; p < n_; ++p)
    if (next_[p] != p) return false;
  return true;
}

bool NoncrossingPartition::is_delta() const { return n_ > 0 && block_count() == 1; }

Permutation NoncrossingPartition::permutation() const {
  std::vector<int> images(n_);
  for (int p = 0; p < n_; ++p) images[p] = next_[p] + 1;
  return Permutation::from_images(std::move(images));
}

std::size_t NoncrossingPartition::hash() const {
  std::size_t h = n_;
  for (int p = 0; p < n_; ++p) h = h * 131 + next_[p];
  return h;
}

void NoncrossingPartition::append_key(std::string& out) const {
  out.append(reinterpret_cast<const char*>(next_.data()), n_);
}

// ---------------------------------------------------------------------------

bool is_noncrossing(int n, const Blocks& blocks) {
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw DomainError("empty block");
    for (int v : blocks[b]) {
      if (v < 1 || v > n) throw DomainError("block element out of range");
      if (owner[v] != -1) throw DomainError("blocks are not disjoint");
      owner[v] = static_cast<int>(b);
    }
  }
  for (int v = 1; v <= n; ++v)
    if (owner[v] == -1) throw DomainError("blocks do not cover 1..n");

  std::vector<std::vector<int>> sorted = blocks;
  for (auto& b : sorted) std::sort(b.begin(), b.end());
  for (std::size_t x = 0; x < sorted.size(); ++x)
    for (std::size_t y = x + 1; y < sorted.size(); ++y)
      if (crosses(sorted[x], sorted[y])) return false;
  return true;
}

BandWord factor_to_word(const Factor& p) {
  BandWord w{p.n(), 0, {}};
  Blocks bl = p.blocks();
  for (auto it = bl.rbegin(); it != bl.rend(); ++it) {
    const auto& block = *it;
    for (std::size_t k = block.size(); k-- > 1;) w.letters.push_back({block[k - 1], block[k], 1});
  }
  return w;
}

int factor_length(const Factor& p) { return p.length(); }

bool refines(const Factor& a, const Factor& b) {
  check_same_n(a, b);
  const Raw lb = labels(b);
  const Raw& na = FactorAccess::raw(a);
  for (int p = 0; p < a.n(); ++p)
    if (lb[na[p]] != lb[p]) return false;
  return true;
}

Factor meet(const Factor& a, const Factor& b) {
  check_same_n(a, b);
  const Raw lb = labels(b);
  const Raw& na = FactorAccess::raw(a);
  Raw next{};
  for (int p = 0; p < a.n(); ++p) {
    int q = na[p];
    while (q != p && lb[q] != lb[p]) q = na[q];
    next[p] = static_cast<std::uint8_t>(q);
  }
  return FactorAccess::make(a.n(), next);
}

Factor join(const Factor& a, const Factor& b) {
  check_same_n(a, b);
  const int n = a.n();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (int p = 1; p <= n; ++p) {
    unite(p - 1, a.next(p) - 1);
    unite(p - 1, b.next(p) - 1);
  }
  // Merge crossing blocks until the partition is noncrossing; each merge
  // lowers the block count, so this terminates.
  for (bool changed = true; changed;) {
    changed = false;
    std::map<int, std::vector<int>> groups;
    for (int p = 0; p < n; ++p) groups[find(p)].push_back(p + 1);
    std::vector<std::vector<int>> bl;
    for (auto& [root, members] : groups) bl.push_back(members);
    for (std::size_t x = 0; x < bl.size() && !changed; ++x)
      for (std::size_t y = x + 1; y < bl.size() && !changed; ++y)
        if (crosses(bl[x], bl[y])) {
          unite(bl[x].front() - 1, bl[y].front() - 1);
          changed = true;
        }
  }
  std::map<int, std::vector<int>> groups;
  for (int p = 0; p < n; ++p) groups[find(p)].push_back(p + 1);
  Blocks bl;
  for (auto& [root, members] : groups) bl.push_back(std::move(members));
  return from_blocks_unchecked(n, bl);
}

Factor right_complement(const Factor& a) {
  const int n = a.n();
  const Raw inv = inverse_of(a);
  Raw next{};
  for (int p = 0; p < n; ++p) next[p] = static_cast<std::uint8_t>((inv[p] + 1) % n);
  return FactorAccess::make(n, next);
}

Factor left_complement(const Factor& a) {
  const int n = a.n();
  const Raw inv = inverse_of(a);
  Raw next{};
  for (int p = 0; p < n; ++p) next[p] = inv[(p + 1) % n];
  return FactorAccess::make(n, next);
}

Factor tau(const Factor& a, int k) {
  const int n = a.n();
  const int shift = ((k % n) + n) % n;
  if (shift == 0) return a;
  const Raw& na = FactorAccess::raw(a);
  Raw next{};
  for (int p = 0; p < n; ++p)
    next[(p + shift) % n] = static_cast<std::uint8_t>((na[p] + shift) % n);
  return FactorAccess::make(n, next);
}

Factor tau_inv(const Factor& a) { return tau(a, -1); }

Factor compose_simple(const Factor& a, const Factor& s) {
  check_same_n(a, s);
  if (!refines(s, right_complement(a)))
    throw DomainError("product " + to_string(a) + " * " + to_string(s) + " is not a canonical factor");
  const Raw& na = FactorAccess::raw(a);
  const Raw& ns = FactorAccess::raw(s);
  Raw next{};
  for (int p = 0; p < a.n(); ++p) next[p] = ns[na[p]];
  return FactorAccess::make(a.n(), next);
}

Factor left_quotient(const Factor& s, const Factor& b) {
  check_same_n(s, b);
  if (!refines(s, b)) throw DomainError(to_string(s) + " does not divide " + to_string(b));
  const Raw inv = inverse_of(s);
  const Raw& nb = FactorAccess::raw(b);
  Raw next{};
  for (int q = 0; q < b.n(); ++q) next[q] = nb[inv[q]];
  return FactorAccess::make(b.n(), next);
}

std::pair<Factor, Factor> left_weight_pair(const Factor& a, const Factor& b) {
  const Factor s = meet(right_complement(a), b);
  if (s.is_identity()) return {a, b};
  return {compose_simple(a, s), left_quotient(s, b)};
}

bool is_left_weighted(const Factor& a, const Factor& b) {
  return meet(right_complement(a), b).is_identity();
}

bool is_more_left_weighted(const Factor& a, const Factor& b, const Factor& a2, const Factor& b2) {
  if (!refines(a, a2)) return false;
  return a.permutation().then(b.permutation()) == a2.permutation().then(b2.permutation()) &&
         a.length() + b.length() == a2.length() + b2.length();
}

// ---------------------------------------------------------------------------

namespace {

// Each element either opens a block or joins a block that is still open; joining
// block X closes every block opened after X, which is exactly what keeps the
// partition noncrossing. Every partition arises from one choice sequence.
void enumerate_rec(int n, int p, std::vector<int>& owner, std::vector<std::vector<int>>& blocks,
                   std::vector<int>& open, std::vector<Factor>& out) {
  if (p > n) {
    out.push_back(from_blocks_unchecked(n, blocks));
    return;
  }
  blocks.push_back({p});
  open.push_back(static_cast<int>(blocks.size()) - 1);
  enumerate_rec(n, p + 1, owner, blocks, open, out);
  open.pop_back();
  blocks.pop_back();

  for (std::size_t k = 0; k < open.size(); ++k) {
    const int b = open[k];
    std::vector<int> closed(open.begin() + static_cast<long>(k) + 1, open.end());
    open.resize(k + 1);
    blocks[b].push_back(p);
    enumerate_rec(n, p + 1, owner, blocks, open, out);
    blocks[b].pop_back();
    open.insert(open.end(), closed.begin(), closed.end());
  }
}

}  // namespace

const std::vector<Factor>& enumerate_factors(int n, int cap) {
  check_n(n);
  if (n > cap)
    throw DomainError("enumerating canonical factors of B" + std::to_string(n) +
                      " exceeds the cap n <= " + std::to_string(cap));
  static std::mutex mutex;
  static std::map<int, std::vector<Factor>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Factor> out;
  std::vector<int> owner;
  std::vector<std::vector<int>> blocks;
  std::vector<int> open;
  enumerate_rec(n, 1, owner, blocks, open, out);
  std::sort(out.begin(), out.end());
  return cache.emplace(n, std::move(out)).first->second;
}

std::string to_string(const Factor& p) {
  std::string out = "{";
  bool first_block = true;
  for (const auto& block : p.blocks()) {
    if (!first_block) out += '|';
    first_block = false;
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(block[k]);
    }
  }
  out += '}';
  return out;
}

Factor parse_partition(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '{') throw ParseError("partition must start with '{'", pos);
  ++pos;
  Blocks blocks(1);
  int count = 0;
  for (;;) {
    skip();
    if (pos >= text.size()) throw ParseError("unterminated partition", pos);
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw ParseError("expected integer", pos);
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    blocks.back().push_back(v);
    ++count;
    skip();
    if (pos >= text.size()) throw ParseError("unterminated partition", pos);
    const char c = text[pos++];
    if (c == ',') continue;
    if (c == '|') {
      blocks.emplace_back();
      continue;
    }
    if (c == '}') break;
    throw ParseError(std::string("unexpected '") + c + "' in partition", pos - 1);
  }
  if (count > kMaxStrands) throw ParseError("too many elements", 0);
  try {
    return Factor::from_blocks(count, blocks);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace bkl
