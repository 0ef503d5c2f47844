#include "pa/ideal.hpp"

#include <algorithm>

#include "pa/idempotent.hpp"
#include "pa/json_io.hpp"
#include "pa/parallel.hpp"
#include "pa/schurweyl.hpp"

namespace pa {

DiagramBasisIndex::DiagramBasisIndex(const Level &level) : level_(level), parts_(enumerate(level)) {
  lookup_.reserve(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i)
    lookup_.emplace(parts_[i], i);
  if (parts_.size() <= static_cast<std::size_t>(kIdealSizeGuard)) {
    table_.resize(parts_.size() * parts_.size());
    filled_.assign(parts_.size() * parts_.size(), 0);
  }
}

std::size_t DiagramBasisIndex::index(const SetPartition &p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end())
    throw LevelError("partition " + p.str() + " is not in level " + level_.str());
  return it->second;
}

Vector DiagramBasisIndex::to_vector(const Element &e) const {
  if (e.basis() != Basis::Diagram)
    throw BasisMismatch("expected a diagram-basis element");
  Vector v(parts_.size());
  for (const auto &[p, c] : e.terms())
    v[index(p)] = c;
  return v;
}

Element DiagramBasisIndex::to_element(const Vector &v, const Scalar &xi) const {
  Element e(level_, Basis::Diagram, xi);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      e.add(parts_[i], v[i]);
  return e;
}

DiagramBasisIndex::Product DiagramBasisIndex::product(std::size_t i, std::size_t j) const {
  const std::size_t slot = i * parts_.size() + j;
  if (!table_.empty() && filled_[slot])
    return table_[slot];
  int removed = 0;
  SetPartition p = compose(parts_[i], parts_[j], removed);
  Product out{static_cast<std::uint32_t>(index(p)), static_cast<std::uint8_t>(removed)};
  if (!table_.empty()) {
    table_[slot] = out;
    filled_[slot] = 1;
  }
  return out;
}

namespace {

void check_size(const DiagramBasisIndex &idx, const ClosureOptions &options) {
  if (static_cast<long>(idx.size()) > kIdealSizeGuard && !options.override_size_guard)
    throw SizeGuardError("level " + idx.level().str() + " has dimension " +
                         std::to_string(idx.size()) +
                         " > 5000; pass the size-guard override to proceed");
}

struct Sparse {
  std::vector<std::size_t> idx;
  std::vector<Scalar> val;
};

// Reduced echelon basis over Z/(2^61-1). Used as a filter: a vector that is
// independent here is independent over Q of the same integral vectors.
class ModEchelon {
public:
  static constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;

  explicit ModEchelon(std::size_t n) : n_(n) {}

  // False if some entry has a denominator divisible by P.
  static bool convert(const Vector &v, std::vector<std::uint64_t> &out) {
    out.assign(v.size(), 0);
    try {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
          out[i] = v[i].mod_m61();
    } catch (const std::domain_error &) {
      return false;
    }
    return true;
  }

  // Reduces w in place; returns its leading column or n if it vanished.
  std::size_t reduce(std::vector<std::uint64_t> &w) const {
    for (const auto &r : rows_) {
      const std::uint64_t f = w[r.pivot];
      if (!f)
        continue;
      const std::uint64_t g = P - f;
      for (std::size_t j : r.nz)
        w[j] = add(w[j], mul(g, r.v[j]));
    }
    for (std::size_t j = 0; j < n_; ++j)
      if (w[j])
        return j;
    return n_;
  }

  // w must already be reduced with leading column p.
  void insert(std::vector<std::uint64_t> w, std::size_t p) {
    const std::uint64_t inv = pow(w[p], P - 2);
    Row row;
    row.pivot = p;
    for (std::size_t j = p; j < n_; ++j)
      if (w[j]) {
        w[j] = mul(w[j], inv);
        row.nz.push_back(j);
      }
    row.v = std::move(w);
    for (auto &r : rows_) {
      const std::uint64_t f = r.v[p];
      if (!f)
        continue;
      const std::uint64_t g = P - f;
      for (std::size_t j : row.nz)
        r.v[j] = add(r.v[j], mul(g, row.v[j]));
      r.nz.clear();
      for (std::size_t j = r.pivot; j < n_; ++j)
        if (r.v[j])
          r.nz.push_back(j);
    }
    rows_.push_back(std::move(row));
  }

private:
  struct Row {
    std::vector<std::uint64_t> v;
    std::vector<std::size_t> nz;
    std::size_t pivot = 0;
  };

  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = a + b;
    return r >= P ? r - P : r;
  }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = (static_cast<std::uint64_t>(t) & P) + static_cast<std::uint64_t>(t >> 61);
    return r >= P ? r - P : r;
  }
  static std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1)
        r = mul(r, a);
    return r;
  }

  std::size_t n_;
  std::vector<Row> rows_;
};

Sparse sparsify(const Vector &v) {
  Sparse s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      s.idx.push_back(i);
      s.val.push_back(v[i]);
    }
  return s;
}

} // namespace

SubspaceBasis ideal_closure(const std::vector<Element> &generators, const Level &level, int n,
                            const ClosureOptions &options) {
  DiagramBasisIndex idx(level);
  check_size(idx, options);
  const Scalar xin(n);
  const std::size_t N = idx.size();

  std::vector<Scalar> xi_pow(static_cast<std::size_t>(2 * level.param() + 2));
  xi_pow[0] = Scalar(1);
  for (std::size_t r = 1; r < xi_pow.size(); ++r)
    xi_pow[r] = xi_pow[r - 1] * xin;

  SubspaceBasis out{level, xin, EchelonBasis(N), {}};
  std::vector<Vector> frontier;
  // With a known bound, products that vanish modulo the filter prime are
  // skipped; reaching the bound still certifies the result exactly.
  const bool filtered = options.stop_at_dim.has_value();
  ModEchelon modp(N);
  std::vector<std::uint64_t> wm;
  auto add_vector = [&](const Vector &v) {
    if (!filtered)
      return out.rows.insert(v);
    std::size_t lead = N;
    if (ModEchelon::convert(v, wm)) {
      lead = modp.reduce(wm);
      if (lead == N)
        return false;
    }
    if (!out.rows.insert(v))
      return false;
    if (lead != N)
      modp.insert(std::move(wm), lead);
    return true;
  };
  for (const auto &g : generators) {
    if (!(g.level() == level))
      throw LevelError("generator level " + g.level().str() + " differs from " + level.str());
    if (g.xi() != xin)
      throw XiError("generator xi differs from n");
    Vector v = idx.to_vector(to_basis(g, Basis::Diagram));
    if (add_vector(v))
      frontier.push_back(std::move(v));
  }
  out.rounds.push_back(out.dim());
  if (options.on_round)
    options.on_round(out.dim());
  if (options.stop_at_dim && out.dim() >= *options.stop_at_dim)
    return out;

  const std::size_t chunk = 64;
  std::vector<Vector> batch(chunk);
  while (!frontier.empty()) {
    std::vector<Sparse> sparse;
    for (const auto &v : frontier)
      sparse.push_back(sparsify(v));
    std::vector<Vector> fresh;
    for (int side = 0; side < 2; ++side) {
      for (std::size_t j0 = 0; j0 < N; j0 += chunk) {
        const std::size_t jn = std::min(N, j0 + chunk);
        for (const auto &s : sparse) {
          parallel_for(jn - j0, [&](std::size_t t) {
            const std::size_t j = j0 + t;
            Vector &w = batch[t];
            w.assign(N, Scalar());
            for (std::size_t a = 0; a < s.idx.size(); ++a) {
              auto pr = side == 0 ? idx.product(j, s.idx[a]) : idx.product(s.idx[a], j);
              if (pr.removed == 0)
                w[pr.index] += s.val[a];
              else
                w[pr.index].add_mul(s.val[a], xi_pow[pr.removed]);
            }
          });
          for (std::size_t t = 0; t < jn - j0; ++t)
            if (add_vector(batch[t])) {
              fresh.push_back(batch[t]);
              if (options.stop_at_dim && out.dim() >= *options.stop_at_dim) {
                out.rounds.push_back(out.dim());
                if (options.on_round)
                  options.on_round(out.dim());
                return out;
              }
            }
        }
      }
    }
    out.rounds.push_back(out.dim());
    if (options.on_round)
      options.on_round(out.dim());
    frontier = std::move(fresh);
  }
  if (filtered) {
    // bound not reached: the filter may have dropped something, redo exactly
    ClosureOptions exact = options;
    exact.stop_at_dim.reset();
    return ideal_closure(generators, level, n, exact);
  }
  return out;
}

PhiKernelTest::PhiKernelTest(const DiagramBasisIndex &idx, int n) : up_(idx.size()) {
  std::unordered_map<SetPartition, std::uint32_t> target;
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (idx.at(i).num_blocks() <= n)
      target.emplace(idx.at(i), static_cast<std::uint32_t>(target.size()));
  targets_ = target.size();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (const auto &rho : coarsenings(idx.at(i))) {
      auto it = target.find(rho);
      if (it != target.end())
        up_[i].push_back(it->second);
    }
  }
}

bool PhiKernelTest::vanishes(const Vector &v) const {
  if (v.size() != up_.size())
    throw std::invalid_argument("vector length does not match the level");
  std::vector<Scalar> acc(targets_);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      for (auto t : up_[i])
        acc[t] += v[i];
  return std::all_of(acc.begin(), acc.end(), [](const Scalar &x) { return x.is_zero(); });
}

std::vector<Element> subspace_elements(const SubspaceBasis &s) {
  DiagramBasisIndex idx(s.level);
  std::vector<Element> out;
  for (const auto &row : s.rows.rows())
    out.push_back(idx.to_element(row, s.n));
  return out;
}

namespace {

Report closure_report(const std::string &label, const std::vector<Element> &gens,
                      const Level &level, int n, ClosureOptions options) {
  Report rep;
  const long total = static_cast<long>(enumerate(level).size());
  const long kernel = total - centralizer_dim(level, n);
  if (options.stop_at_kernel_dim)
    options.stop_at_dim = kernel;
  SubspaceBasis s = ideal_closure(gens, level, n, options);
  rep.rounds = s.rounds;
  rep.dim = s.dim();
  rep.kernel_dim = kernel;
  const std::string tag = " (level " + level.str() + ", n=" + std::to_string(n) + ")";
  rep.add("dim " + label + " = dim ker Phi" + tag, s.dim() == kernel);
  if (options.stop_at_kernel_dim)
    rep.add("closure stopped on reaching dim ker Phi" + tag, true);
  DiagramBasisIndex idx(level);
  PhiKernelTest test(idx, n);
  bool vanish = true;
  std::optional<std::string> bad;
  for (std::size_t i = 0; i < s.rows.dim() && vanish; ++i)
    if (!test.vanishes(s.rows.row(i))) {
      vanish = false;
      bad = element_to_json(idx.to_element(s.rows.row(i), Scalar(n)));
    }
  rep.add("Phi vanishes on " + label + tag, vanish, bad);
  bool gens_in_kernel = true;
  for (const auto &g : gens)
    gens_in_kernel = gens_in_kernel && test.vanishes(idx.to_vector(to_basis(g, Basis::Diagram)));
  rep.add("generator lies in ker Phi" + tag, gens_in_kernel);
  bool rounds_ok = true;
  for (std::size_t i = 1; i < s.rounds.size(); ++i)
    rounds_ok = rounds_ok && s.rounds[i] >= s.rounds[i - 1];
  rep.add("closure dimensions are nondecreasing" + tag, rounds_ok);
  return rep;
}

} // namespace

Report verify_kernel_generation(const Level &level, int n, const ClosureOptions &options) {
  Element e = essential_idempotent(level, n);
  return closure_report("<e>", {to_diagram(e)}, level, n, options);
}

Element enn_generator(const Level &level, int n) {
  const int k = level.param();
  if (n < 1 || k < n)
    throw std::invalid_argument("e_{n,n} generation needs k >= n >= 1");
  if (level.is_half() && n <= 1)
    throw std::invalid_argument("half-level e_{n,n} generation needs n > 1");
  Element base = to_diagram(essential_idempotent(Level::integer(n), n));
  Element g = juxtapose(base, k - n, StrandKind::Diagram);
  return level.is_half() ? restrict_to_half(g) : g;
}

Report verify_enn_generation(const Level &level, int n, const ClosureOptions &options) {
  Element g = enn_generator(level, n);
  return closure_report("<e_{n,n} (x) |^(k-n)>", {g}, level, n, options);
}

SubspaceBasis propagating_ideal(const Level &level, int ell, const Scalar &xi) {
  if (ell < 0 || ell > level.param())
    throw std::invalid_argument("propagating ideal needs 0 <= l <= k");
  DiagramBasisIndex idx(level);
  SubspaceBasis out{level, xi, EchelonBasis(idx.size()), {}};
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (propagating_number(idx.at(i)) <= ell) {
      Vector v(idx.size());
      v[i] = Scalar(1);
      out.rows.insert(std::move(v));
    }
  out.rounds.push_back(out.dim());
  return out;
}

Report verify_propagating_ideal(const Level &level, int ell, const Scalar &xi) {
  Report rep;
  SubspaceBasis s = propagating_ideal(level, ell, xi);
  DiagramBasisIndex idx(level);
  bool closed = true;
  std::optional<std::string> bad;
  for (std::size_t i = 0; i < idx.size() && closed; ++i) {
    if (propagating_number(idx.at(i)) > ell)
      continue;
    for (std::size_t j = 0; j < idx.size() && closed; ++j) {
      for (auto pr : {idx.product(i, j), idx.product(j, i)}) {
        if (xi.is_zero() && pr.removed > 0)
          continue;
        if (propagating_number(idx.at(pr.index)) > ell) {
          closed = false;
          bad = idx.at(i).str() + " times " + idx.at(j).str();
        }
      }
    }
  }
  rep.dim = s.dim();
  rep.rounds = s.rounds;
  rep.add("J_" + std::to_string(ell) + " is a two-sided ideal (level " + level.str() + ")", closed,
          bad ? std::optional<std::string>("\"" + *bad + "\"") : std::nullopt);
  return rep;
}

} // namespace pa
