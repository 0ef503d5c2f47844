#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pa/scalar.hpp"

namespace pa {

struct MalformedPartition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LevelError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OrderError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Block = std::vector<int>;
using Permutation = std::vector<int>; // one-based images of 1..k

// Set partition of [1, 2k]: vertices 1..k form the bottom row, k+1..2k the top
// row. Stored as a restricted-growth string of block labels.
class SetPartition {
public:
  SetPartition() = default;

  static SetPartition from_blocks(int k, const std::vector<Block> &blocks);
  // Arbitrary labels; relabelled into restricted-growth form.
  static SetPartition from_labels(int k, const std::vector<int> &labels);
  // "1,4|2|3"; k is half the largest vertex unless given.
  static SetPartition parse(std::string_view text, int k = -1);

  int k() const { return k_; }
  int size() const { return 2 * k_; }
  int num_blocks() const { return blocks_; }
  int label(int vertex) const { return labels_[static_cast<std::size_t>(vertex - 1)]; }
  const std::vector<std::uint8_t> &labels() const { return labels_; }
  std::vector<Block> blocks() const;
  std::string str() const;

  friend bool operator==(const SetPartition &, const SetPartition &) = default;
  friend std::strong_ordering operator<=>(const SetPartition &a, const SetPartition &b);

private:
  int k_ = 0;
  int blocks_ = 0;
  std::vector<std::uint8_t> labels_;
};

struct Level {
  enum class Kind { Integer, Half };
  Kind kind = Kind::Integer;
  int k = 0;

  static Level integer(int k) { return {Kind::Integer, k}; }
  static Level half(int k) { return {Kind::Half, k}; }
  // "3" or "5/2"
  static Level parse(std::string_view text);

  bool is_half() const { return kind == Kind::Half; }
  // k of the stored partitions
  int param() const { return is_half() ? k + 1 : k; }
  bool admits(const SetPartition &p) const;
  std::string str() const;

  friend bool operator==(const Level &, const Level &) = default;
};

struct ConcatResult {
  bool match = false;
  SetPartition product;
  int removed = 0;
  std::vector<Block> top_only_blocks;    // of pi1, numbered as in the product
  std::vector<Block> bottom_only_blocks; // of pi2, numbered as in the product
};

bool refines(const SetPartition &pi, const SetPartition &rho);
std::vector<SetPartition> coarsenings(const SetPartition &pi);
Integer mobius(const SetPartition &pi, const SetPartition &rho);
int propagating_number(const SetPartition &pi);
ConcatResult concat(const SetPartition &pi1, const SetPartition &pi2);
// Product partition and removed-component count only.
SetPartition compose(const SetPartition &pi1, const SetPartition &pi2, int &removed);
bool middle_match(const SetPartition &pi1, const SetPartition &pi2);
SetPartition permute(const SetPartition &pi, const Permutation &sigma_top,
                     const Permutation &sigma_bottom);
bool is_rook(const SetPartition &pi);
bool is_permutation(const SetPartition &pi);
std::vector<SetPartition> enumerate(const Level &level);

Integer bell(int m);
Integer stirling2(int m, int j);
Integer count_partitions_max_blocks(int m, int n);

// Convenience constructors.
SetPartition identity_partition(int k);
SetPartition singletons_partition(int k);
SetPartition permutation_partition(const Permutation &sigma);
bool is_bijection(const Permutation &sigma);
Permutation inverse(const Permutation &sigma);

// Restricted-growth strings of length m in lexicographic order.
template <class F> void for_each_rgs(int m, F &&f) {
  std::vector<int> a(static_cast<std::size_t>(m), 0);
  if (m == 0) {
    f(a);
    return;
  }
  std::vector<int> mx(static_cast<std::size_t>(m), 0);
  while (true) {
    f(a);
    int i = m - 1;
    while (i > 0 && a[i] == mx[i - 1] + 1)
      --i;
    if (i == 0)
      return;
    ++a[i];
    mx[i] = mx[i - 1] > a[i] ? mx[i - 1] : a[i];
    for (int j = i + 1; j < m; ++j) {
      a[j] = 0;
      mx[j] = mx[i];
    }
  }
}

// Coarsening of pi obtained by merging blocks with the given grouping:
// group[b] is the new label of block b (block order as in labels()).
SetPartition merge_blocks(const SetPartition &pi, const std::vector<int> &group);

// Block sizes of rho measured in blocks of pi; requires pi refines rho.
std::vector<int> block_multiplicities(const SetPartition &pi, const SetPartition &rho);

} // namespace pa

template <> struct std::hash<pa::SetPartition> {
  std::size_t operator()(const pa::SetPartition &p) const noexcept {
    std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(p.k());
    for (auto v : p.labels()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};
