#include "pa/schurweyl.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pa/json_io.hpp"
#include "pa/linalg.hpp"

namespace pa {

SparseMatrix::SparseMatrix(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 0)
    throw RepresentationError("matrix shape needs n >= 1 and k >= 0");
  dim_ = 1;
  for (int i = 0; i < k; ++i)
    dim_ *= static_cast<std::uint64_t>(n);
}

SparseMatrix SparseMatrix::identity(int n, int k) {
  SparseMatrix m(n, k);
  for (std::uint64_t i = 0; i < m.dim_; ++i)
    m.entries_.emplace(Key{i, i}, Scalar(1));
  return m;
}

std::uint64_t SparseMatrix::encode(const Tuple &t) const {
  if (static_cast<int>(t.size()) != k_)
    throw RepresentationError("tuple length differs from k");
  std::uint64_t code = 0;
  for (int v : t) {
    if (v < 1 || v > n_)
      throw RepresentationError("tuple entry out of range");
    code = code * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(v - 1);
  }
  return code;
}

Tuple SparseMatrix::decode(std::uint64_t code) const {
  Tuple t(static_cast<std::size_t>(k_));
  for (int i = k_ - 1; i >= 0; --i) {
    t[i] = static_cast<int>(code % static_cast<std::uint64_t>(n_)) + 1;
    code /= static_cast<std::uint64_t>(n_);
  }
  return t;
}

Scalar SparseMatrix::at(std::uint64_t row, std::uint64_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Scalar() : it->second;
}

void SparseMatrix::add(std::uint64_t row, std::uint64_t col, const Scalar &v) {
  if (v.is_zero())
    return;
  auto [it, inserted] = entries_.try_emplace(Key{row, col}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero())
      entries_.erase(it);
  }
}

void SparseMatrix::set(std::uint64_t row, std::uint64_t col, const Scalar &v) {
  if (v.is_zero())
    entries_.erase({row, col});
  else
    entries_[{row, col}] = v;
}

void SparseMatrix::check_shape(const SparseMatrix &o) const {
  if (n_ != o.n_ || k_ != o.k_)
    throw RepresentationError("matrix shape mismatch");
}

SparseMatrix &SparseMatrix::operator+=(const SparseMatrix &o) {
  check_shape(o);
  for (const auto &[key, v] : o.entries_)
    add(key.first, key.second, v);
  return *this;
}

SparseMatrix &SparseMatrix::operator-=(const SparseMatrix &o) {
  check_shape(o);
  for (const auto &[key, v] : o.entries_)
    add(key.first, key.second, -v);
  return *this;
}

SparseMatrix &SparseMatrix::operator*=(const Scalar &s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto &[key, v] : entries_)
    v *= s;
  return *this;
}

SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b) {
  a.check_shape(b);
  SparseMatrix c(a.n_, a.k_);
  std::vector<std::vector<std::pair<std::uint64_t, const Scalar *>>> brow(b.dim_);
  for (const auto &[key, v] : b.entries_)
    brow[key.first].emplace_back(key.second, &v);
  std::vector<Scalar> acc(a.dim_);
  std::vector<char> hit(a.dim_, 0);
  std::vector<std::uint64_t> touched;
  auto flush = [&](std::uint64_t row) {
    std::sort(touched.begin(), touched.end());
    for (auto col : touched) {
      if (!acc[col].is_zero())
        c.entries_.emplace_hint(c.entries_.end(), SparseMatrix::Key{row, col}, acc[col]);
      acc[col] = Scalar();
      hit[col] = 0;
    }
    touched.clear();
  };
  bool open = false;
  std::uint64_t cur = 0;
  for (const auto &[key, v] : a.entries_) {
    if (open && key.first != cur)
      flush(cur);
    cur = key.first;
    open = true;
    for (const auto &[col, bv] : brow[key.second]) {
      if (!hit[col]) {
        hit[col] = 1;
        touched.push_back(col);
      }
      acc[col].add_mul(v, *bv);
    }
  }
  if (open)
    flush(cur);
  return c;
}

namespace {

// Calls f(values) for every assignment of values in [1,n] to the blocks of pi;
// injective assignments only when distinct is set. A pinned block (label >= 0)
// always receives pin_value.
template <class F>
void for_each_assignment(int blocks, int n, bool distinct, int pinned, int pin_value, F &&f) {
  std::vector<int> val(static_cast<std::size_t>(blocks), 0);
  std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
  if (pinned >= 0)
    used[pin_value] = distinct ? 1 : 0;
  auto rec = [&](auto &&self, int b) -> void {
    if (b == blocks) {
      f(val);
      return;
    }
    if (b == pinned) {
      val[b] = pin_value;
      self(self, b + 1);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (distinct && used[v])
        continue;
      val[b] = v;
      used[v] = 1;
      self(self, b + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
}

// Matrix of pi on tuples of length `cols`, taken from vertices 1..cols
// (bottom) and k+1..k+cols (top).
SparseMatrix phi_partition(const SetPartition &pi, int n, bool distinct, int cols, int pinned,
                           const Scalar &coeff, SparseMatrix *into) {
  const int k = pi.k();
  SparseMatrix local(n, cols);
  SparseMatrix &m = into ? *into : local;
  if (distinct && pi.num_blocks() > n)
    return local;
  const std::uint64_t base = static_cast<std::uint64_t>(n);
  for_each_assignment(pi.num_blocks(), n, distinct, pinned, n, [&](const std::vector<int> &val) {
    std::uint64_t row = 0, col = 0;
    for (int i = 1; i <= cols; ++i) {
      col = col * base + static_cast<std::uint64_t>(val[pi.label(i)] - 1);
      row = row * base + static_cast<std::uint64_t>(val[pi.label(k + i)] - 1);
    }
    m.add(row, col, coeff);
  });
  return local;
}

} // namespace

SparseMatrix phi_orbit(const SetPartition &pi, int n) {
  return phi_partition(pi, n, true, pi.k(), -1, Scalar(1), nullptr);
}

SparseMatrix phi_diagram(const SetPartition &pi, int n) {
  return phi_partition(pi, n, false, pi.k(), -1, Scalar(1), nullptr);
}

namespace {

void check_xi(const Element &a, int n) {
  if (a.xi() != Scalar(n))
    throw RepresentationError("element has xi = " + a.xi().str() + " but the representation uses n = " +
                              std::to_string(n));
}

} // namespace

SparseMatrix phi(const Element &a, int n) {
  if (a.level().is_half())
    return phi_half(a, n);
  check_xi(a, n);
  const bool distinct = a.basis() == Basis::Orbit;
  SparseMatrix m(n, a.level().k);
  for (const auto &[p, c] : a.terms())
    phi_partition(p, n, distinct, p.k(), -1, c, &m);
  return m;
}

SparseMatrix phi_half(const Element &a, int n) {
  if (!a.level().is_half())
    throw LevelError("phi_half expects a half-integer level");
  check_xi(a, n);
  const bool distinct = a.basis() == Basis::Orbit;
  const int k = a.level().k;
  SparseMatrix m(n, k);
  for (const auto &[p, c] : a.terms())
    phi_partition(p, n, distinct, k, p.label(k + 1), c, &m);
  return m;
}

SparseMatrix perm_matrix(const Permutation &sigma, int n, int k) {
  if (static_cast<int>(sigma.size()) != n || !is_bijection(sigma))
    throw std::invalid_argument("perm_matrix expects a permutation of [1,n]");
  SparseMatrix m(n, k);
  for (std::uint64_t col = 0; col < m.dim(); ++col) {
    Tuple t = m.decode(col);
    for (int &v : t)
      v = sigma[v - 1];
    m.set(m.encode(t), col, Scalar(1));
  }
  return m;
}

std::vector<Element> kernel_basis(const Level &level, int n) {
  std::vector<Element> out;
  for (const auto &p : enumerate(level))
    if (p.num_blocks() > n)
      out.push_back(Element::single(level, Basis::Orbit, Scalar(n), p));
  return out;
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  Permutation p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 1);
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Permutation> commutant_permutations(const Level &level, int n, int trials) {
  const int movable = level.is_half() ? n - 1 : n;
  long order = 1;
  for (int i = 2; i <= movable; ++i)
    order *= i;
  std::vector<Permutation> out;
  auto extend = [&](Permutation p) {
    if (level.is_half())
      p.push_back(n);
    return p;
  };
  if (trials >= order) {
    for (auto &p : all_permutations(movable))
      out.push_back(extend(p));
    return out;
  }
  std::mt19937_64 rng(0x5eed0000ull + static_cast<unsigned>(n));
  Permutation p(static_cast<std::size_t>(movable));
  std::iota(p.begin(), p.end(), 1);
  for (int t = 0; t < trials; ++t) {
    std::shuffle(p.begin(), p.end(), rng);
    out.push_back(extend(p));
  }
  return out;
}

CheckResult check_commutes(const std::string &name, const SparseMatrix &m,
                           const std::vector<Permutation> &perms) {
  for (const auto &s : perms) {
    SparseMatrix P = perm_matrix(s, m.n(), m.k());
    if (!(m * P == P * m))
      return {name, false, matrix_to_json(m)};
  }
  return {name, true, std::nullopt};
}

Report commutant_check(const Level &level, int n, int trials) {
  Report rep;
  auto perms = commutant_permutations(level, n, trials);
  for (const auto &p : enumerate(level)) {
    Element x = Element::single(level, Basis::Orbit, Scalar(n), p);
    rep.checks.push_back(check_commutes("Phi(x_" + p.str() + ") commutes with S_n", phi(x, n), perms));
  }
  return rep;
}

long centralizer_dim(const Level &level, int n) {
  long count = 0;
  for (const auto &p : enumerate(level))
    count += p.num_blocks() <= n;
  return count;
}

long image_rank(const Level &level, int n) {
  const int k = level.k;
  SparseMatrix probe(n, k);
  const std::uint64_t d = probe.dim();
  std::vector<Vector> rows;
  for (const auto &p : enumerate(level)) {
    Element x = Element::single(level, Basis::Orbit, Scalar(n), p);
    SparseMatrix m = phi(x, n);
    if (m.is_zero())
      continue;
    Vector v(d * d);
    for (const auto &[key, c] : m.entries())
      v[key.first * d + key.second] = c;
    rows.push_back(std::move(v));
  }
  return static_cast<long>(rank(std::move(rows)));
}

} // namespace pa
