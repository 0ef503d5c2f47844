#include "pa/setpart.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace pa {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

// Relabel arbitrary labels into restricted-growth form; returns block count.
int canonicalize(const std::vector<int> &in, std::vector<std::uint8_t> &out) {
  out.resize(in.size());
  std::vector<std::pair<int, int>> seen;
  int next = 0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    int lab = -1;
    for (auto &[from, to] : seen)
      if (from == in[i]) {
        lab = to;
        break;
      }
    if (lab < 0) {
      lab = next++;
      seen.emplace_back(in[i], lab);
    }
    out[i] = static_cast<std::uint8_t>(lab);
  }
  return next;
}

void check_same_k(const SetPartition &a, const SetPartition &b) {
  if (a.k() != b.k())
    throw LevelError("partitions at different levels: k=" + std::to_string(a.k()) +
                     " and k=" + std::to_string(b.k()));
}

} // namespace

SetPartition SetPartition::from_labels(int k, const std::vector<int> &labels) {
  if (k < 0 || static_cast<int>(labels.size()) != 2 * k)
    throw MalformedPartition("label sequence length does not equal 2k");
  if (2 * k > 250)
    throw MalformedPartition("k too large");
  SetPartition p;
  p.k_ = k;
  p.blocks_ = canonicalize(labels, p.labels_);
  return p;
}

SetPartition SetPartition::from_blocks(int k, const std::vector<Block> &blocks) {
  if (k < 0 || 2 * k > 250)
    throw MalformedPartition("k out of range");
  std::vector<int> lab(static_cast<std::size_t>(2 * k), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw MalformedPartition("empty block");
    for (int v : blocks[b]) {
      if (v < 1 || v > 2 * k)
        throw MalformedPartition("vertex " + std::to_string(v) + " out of range [1," +
                                 std::to_string(2 * k) + "]");
      if (lab[v - 1] >= 0)
        throw MalformedPartition("vertex " + std::to_string(v) + " appears twice");
      lab[v - 1] = static_cast<int>(b);
    }
  }
  for (int v = 1; v <= 2 * k; ++v)
    if (lab[v - 1] < 0)
      throw MalformedPartition("vertex " + std::to_string(v) + " missing");
  return from_labels(k, lab);
}

SetPartition SetPartition::parse(std::string_view text, int k) {
  std::vector<Block> blocks;
  Block cur;
  std::string num;
  int maxv = 0;
  auto flush_num = [&] {
    if (num.empty())
      throw MalformedPartition("malformed partition text '" + std::string(text) + "'");
    if (num.size() > 4)
      throw MalformedPartition("vertex out of range in '" + std::string(text) + "'");
    int v = std::stoi(num);
    maxv = std::max(maxv, v);
    cur.push_back(v);
    num.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)))
      continue;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      num.push_back(c);
    } else if (c == ',') {
      flush_num();
    } else if (c == '|') {
      flush_num();
      blocks.push_back(std::move(cur));
      cur.clear();
    } else {
      throw MalformedPartition("unexpected character '" + std::string(1, c) + "' in partition");
    }
  }
  flush_num();
  blocks.push_back(std::move(cur));
  if (k < 0) {
    if (maxv % 2 != 0)
      throw MalformedPartition("partition covers an odd number of vertices");
    k = maxv / 2;
  }
  return from_blocks(k, blocks);
}

std::vector<Block> SetPartition::blocks() const {
  std::vector<Block> out(static_cast<std::size_t>(blocks_));
  for (int v = 1; v <= 2 * k_; ++v)
    out[labels_[v - 1]].push_back(v);
  return out;
}

std::string SetPartition::str() const {
  std::string out;
  bool first_block = true;
  for (const auto &b : blocks()) {
    if (!first_block)
      out += '|';
    first_block = false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i)
        out += ',';
      out += std::to_string(b[i]);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const SetPartition &a, const SetPartition &b) {
  if (auto c = a.k_ <=> b.k_; c != 0)
    return c;
  return a.labels_ <=> b.labels_;
}

Level Level::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  auto all_digits = [](const std::string &t) {
    return !t.empty() && t.size() < 4 &&
           std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!all_digits(s))
      throw LevelError("malformed level '" + std::string(text) + "'");
    int k = std::stoi(s);
    if (k < 1)
      throw LevelError("level must be positive");
    return integer(k);
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!all_digits(num) || den != "2")
    throw LevelError("malformed level '" + std::string(text) + "'");
  int twice = std::stoi(num);
  if (twice % 2 != 1)
    throw LevelError("half level numerator must be odd");
  return half((twice - 1) / 2);
}

bool Level::admits(const SetPartition &p) const {
  if (p.k() != param())
    return false;
  if (!is_half())
    return true;
  int q = param();
  return p.label(q) == p.label(2 * q);
}

std::string Level::str() const {
  if (!is_half())
    return std::to_string(k);
  return std::to_string(2 * k + 1) + "/2";
}

bool refines(const SetPartition &pi, const SetPartition &rho) {
  check_same_k(pi, rho);
  std::vector<int> image(static_cast<std::size_t>(pi.num_blocks()), -1);
  const auto &a = pi.labels();
  const auto &b = rho.labels();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int &img = image[a[i]];
    if (img < 0)
      img = b[i];
    else if (img != b[i])
      return false;
  }
  return true;
}

SetPartition merge_blocks(const SetPartition &pi, const std::vector<int> &group) {
  std::vector<int> lab(pi.labels().size());
  for (std::size_t i = 0; i < lab.size(); ++i)
    lab[i] = group[pi.labels()[i]];
  return SetPartition::from_labels(pi.k(), lab);
}

std::vector<SetPartition> coarsenings(const SetPartition &pi) {
  std::vector<SetPartition> out;
  for_each_rgs(pi.num_blocks(), [&](const std::vector<int> &g) { out.push_back(merge_blocks(pi, g)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> block_multiplicities(const SetPartition &pi, const SetPartition &rho) {
  check_same_k(pi, rho);
  if (!refines(pi, rho))
    throw OrderError(pi.str() + " does not refine " + rho.str());
  std::vector<int> count(static_cast<std::size_t>(rho.num_blocks()), 0);
  std::vector<char> seen(static_cast<std::size_t>(pi.num_blocks()), 0);
  for (std::size_t i = 0; i < pi.labels().size(); ++i) {
    int b = pi.labels()[i];
    if (!seen[b]) {
      seen[b] = 1;
      ++count[rho.labels()[i]];
    }
  }
  return count;
}

Integer mobius(const SetPartition &pi, const SetPartition &rho) {
  Integer out(1);
  for (int b : block_multiplicities(pi, rho)) {
    Integer f(1);
    for (int i = 2; i < b; ++i)
      f *= i;
    if ((b - 1) % 2)
      f = -f;
    out *= f;
  }
  return out;
}

int propagating_number(const SetPartition &pi) {
  int k = pi.k();
  std::vector<char> bottom(static_cast<std::size_t>(pi.num_blocks()), 0);
  std::vector<char> top(static_cast<std::size_t>(pi.num_blocks()), 0);
  for (int v = 1; v <= k; ++v)
    bottom[pi.label(v)] = 1;
  for (int v = k + 1; v <= 2 * k; ++v)
    top[pi.label(v)] = 1;
  int pn = 0;
  for (int b = 0; b < pi.num_blocks(); ++b)
    pn += bottom[b] && top[b];
  return pn;
}

SetPartition compose(const SetPartition &pi1, const SetPartition &pi2, int &removed) {
  check_same_k(pi1, pi2);
  const int k = pi1.k();
  // nodes: 0..k-1 output bottom, k..2k-1 middle, 2k..3k-1 output top
  UnionFind uf(3 * k);
  auto join = [&](const SetPartition &p, int bottom_offset, int top_offset) {
    std::vector<int> first(static_cast<std::size_t>(p.num_blocks()), -1);
    for (int v = 1; v <= 2 * k; ++v) {
      int node = v <= k ? bottom_offset + v - 1 : top_offset + v - k - 1;
      int &f = first[p.label(v)];
      if (f < 0)
        f = node;
      else
        uf.unite(f, node);
    }
  };
  join(pi1, k, 2 * k);
  join(pi2, 0, k);

  std::vector<char> outer(static_cast<std::size_t>(3 * k), 0);
  std::vector<int> lab(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i) {
    lab[i] = uf.find(i);
    lab[k + i] = uf.find(2 * k + i);
    outer[lab[i]] = 1;
    outer[lab[k + i]] = 1;
  }
  removed = 0;
  for (int i = k; i < 2 * k; ++i)
    if (uf.find(i) == i && !outer[i])
      ++removed;
  return SetPartition::from_labels(k, lab);
}

bool middle_match(const SetPartition &pi1, const SetPartition &pi2) {
  check_same_k(pi1, pi2);
  const int k = pi1.k();
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      if ((pi1.label(i) == pi1.label(j)) != (pi2.label(k + i) == pi2.label(k + j)))
        return false;
  return true;
}

ConcatResult concat(const SetPartition &pi1, const SetPartition &pi2) {
  ConcatResult r;
  r.product = compose(pi1, pi2, r.removed);
  r.match = middle_match(pi1, pi2);
  const int k = pi1.k();
  for (const auto &b : pi1.blocks())
    if (b.front() > k)
      r.top_only_blocks.push_back(b);
  for (const auto &b : pi2.blocks())
    if (b.back() <= k)
      r.bottom_only_blocks.push_back(b);
  return r;
}

SetPartition permute(const SetPartition &pi, const Permutation &sigma_top,
                     const Permutation &sigma_bottom) {
  const int k = pi.k();
  if (static_cast<int>(sigma_top.size()) != k || static_cast<int>(sigma_bottom.size()) != k ||
      !is_bijection(sigma_top) || !is_bijection(sigma_bottom))
    throw std::invalid_argument("permute: inputs must be permutations of [1,k]");
  std::vector<int> lab(static_cast<std::size_t>(2 * k));
  for (int j = 1; j <= k; ++j) {
    lab[sigma_bottom[j - 1] - 1] = pi.label(j);
    lab[k + sigma_top[j - 1] - 1] = pi.label(k + j);
  }
  return SetPartition::from_labels(k, lab);
}

bool is_rook(const SetPartition &pi) {
  for (const auto &b : pi.blocks()) {
    if (b.size() > 2)
      return false;
    if (b.size() == 2 && !(b[0] <= pi.k() && b[1] > pi.k()))
      return false;
  }
  return true;
}

bool is_permutation(const SetPartition &pi) {
  return is_rook(pi) && propagating_number(pi) == pi.k();
}

std::vector<SetPartition> enumerate(const Level &level) {
  std::vector<SetPartition> out;
  const int q = level.param();
  if (q < 0)
    throw LevelError("negative level");
  const int free = level.is_half() ? 2 * q - 1 : 2 * q;
  std::vector<int> lab(static_cast<std::size_t>(2 * q));
  for_each_rgs(free, [&](const std::vector<int> &a) {
    std::copy(a.begin(), a.end(), lab.begin());
    if (level.is_half())
      lab[2 * q - 1] = lab[q - 1];
    out.push_back(SetPartition::from_labels(q, lab));
  });
  return out;
}

Integer stirling2(int m, int j) {
  if (m < 0 || j < 0)
    return 0;
  std::vector<Integer> row(static_cast<std::size_t>(j + 1), 0);
  row[0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (int t = std::min(i, j); t >= 1; --t)
      row[t] = t * row[t] + row[t - 1];
    row[0] = 0;
  }
  return row[j];
}

Integer bell(int m) {
  Integer total = 0;
  for (int j = 0; j <= m; ++j)
    total += stirling2(m, j);
  return total;
}

Integer count_partitions_max_blocks(int m, int n) {
  Integer total = 0;
  for (int j = 0; j <= std::min(m, n); ++j)
    total += stirling2(m, j);
  return total;
}

SetPartition identity_partition(int k) {
  std::vector<int> lab(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i)
    lab[i] = lab[k + i] = i;
  return SetPartition::from_labels(k, lab);
}

SetPartition singletons_partition(int k) {
  std::vector<int> lab(static_cast<std::size_t>(2 * k));
  std::iota(lab.begin(), lab.end(), 0);
  return SetPartition::from_labels(k, lab);
}

SetPartition permutation_partition(const Permutation &sigma) {
  const int k = static_cast<int>(sigma.size());
  if (!is_bijection(sigma))
    throw std::invalid_argument("not a permutation");
  std::vector<int> lab(static_cast<std::size_t>(2 * k));
  for (int i = 1; i <= k; ++i) {
    lab[i - 1] = i;
    lab[k + sigma[i - 1] - 1] = i;
  }
  return SetPartition::from_labels(k, lab);
}

bool is_bijection(const Permutation &sigma) {
  std::vector<char> hit(sigma.size(), 0);
  for (int v : sigma) {
    if (v < 1 || v > static_cast<int>(sigma.size()) || hit[v - 1])
      return false;
    hit[v - 1] = 1;
  }
  return true;
}

Permutation inverse(const Permutation &sigma) {
  Permutation inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i)
    inv[sigma[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

} // namespace pa
