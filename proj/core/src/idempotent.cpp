#include "pa/idempotent.hpp"

#include <algorithm>

#include "pa/json_io.hpp"

namespace pa {

SetPartition essential_partition(int k, int n) {
  if (k < 1 || n < 0 || 2 * k <= n)
    throw UndefinedIdempotent("e_{k,n} needs 2k > n (k=" + std::to_string(k) +
                              ", n=" + std::to_string(n) + ")");
  if (k > n)
    return identity_partition(k);
  const int isolated = n + 1 - k;
  std::vector<int> lab(static_cast<std::size_t>(2 * k));
  for (int i = 1; i <= k; ++i) {
    if (i <= isolated) {
      lab[i - 1] = 2 * i;
      lab[k + i - 1] = 2 * i + 1;
    } else {
      lab[i - 1] = lab[k + i - 1] = 2 * i;
    }
  }
  return SetPartition::from_labels(k, lab);
}

Element essential_idempotent(const Level &level, int n) {
  if (!level.is_half())
    return Element::single(level, Basis::Orbit, Scalar(n), essential_partition(level.k, n));
  const int k = level.k + 1;
  if (2 * k - 1 <= n)
    throw UndefinedIdempotent("e_{k-1/2,n} needs 2k-1 > n");
  return Element::single(level, Basis::Orbit, Scalar(n), essential_partition(k, n));
}

Scalar c_const(int k, int n) {
  if (k < 1 || n < 0 || 2 * k <= n)
    throw UndefinedIdempotent("c_{k,n} needs 2k > n");
  if (k > n)
    return Scalar(1);
  const unsigned m = static_cast<unsigned>(n + 1 - k);
  Scalar f = factorial(m);
  return m % 2 ? -f : f;
}

Scalar hook_dim_two_row(int n, int k) {
  if (k < 0 || 2 * k > n + 1)
    throw std::invalid_argument("hook_dim_two_row needs 0 <= 2k <= n+1");
  return Scalar(n - 2 * k + 1) / Scalar(n - k + 1) * binomial(n, k);
}

Scalar xi_coefficient(int pn_value, int k, int n) {
  if (pn_value < 0 || pn_value > k)
    throw std::invalid_argument("propagating number out of range");
  Scalar den = falling_factorial(Scalar(n), static_cast<unsigned>(2 * k - pn_value));
  if (den.is_zero())
    throw PoleError("(n)_{2k-pn} vanishes at n=" + std::to_string(n));
  Scalar num = factorial(static_cast<unsigned>(k - pn_value));
  if ((k - pn_value) % 2)
    num = -num;
  return num / den;
}

Scalar xi_term_coefficient(int t, int k, int n) {
  if (k < 1 || n < 2 * k - 1)
    throw PoleError("Xi_{k,n} is only constructed for n >= 2k-1 (k=" + std::to_string(k) +
                    ", n=" + std::to_string(n) + ")");
  if (t < 0 || t > k)
    throw std::invalid_argument("propagating number out of range");
  Scalar sign((k - t) % 2 ? -1 : 1);
  if (t == 0)
    return sign / falling_factorial(Scalar(n - k + 1), static_cast<unsigned>(k));
  return sign * factorial(static_cast<unsigned>(k - t)) / factorial(static_cast<unsigned>(k)) *
         Scalar(n - 2 * k + 1) /
         falling_factorial(Scalar(n - k + 1), static_cast<unsigned>(k + 1 - t));
}

std::vector<SetPartition> rook_partitions(int k) {
  std::vector<SetPartition> out;
  std::vector<int> match(static_cast<std::size_t>(k), 0); // bottom i -> top column or 0
  std::vector<char> used(static_cast<std::size_t>(k + 1), 0);
  auto rec = [&](auto &&self, int i) -> void {
    if (i == k) {
      std::vector<int> lab(static_cast<std::size_t>(2 * k));
      for (int b = 0; b < k; ++b)
        lab[b] = b;
      for (int t = 0; t < k; ++t)
        lab[k + t] = k + t;
      for (int b = 0; b < k; ++b)
        if (match[b])
          lab[k + match[b] - 1] = b;
      out.push_back(SetPartition::from_labels(k, lab));
      return;
    }
    match[i] = 0;
    self(self, i + 1);
    for (int t = 1; t <= k; ++t) {
      if (used[t])
        continue;
      used[t] = 1;
      match[i] = t;
      self(self, i + 1);
      used[t] = 0;
    }
    match[i] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Element xi(int k, int n) {
  std::vector<Scalar> coeff;
  for (int t = 0; t <= k; ++t)
    coeff.push_back(xi_term_coefficient(t, k, n));
  Element out(Level::integer(k), Basis::Orbit, Scalar(n));
  for (const auto &p : rook_partitions(k))
    out.add(p, coeff[propagating_number(p)]);
  return out;
}

Element xi_half(int k, int n) {
  if (k < 0)
    throw std::invalid_argument("negative k");
  if (k == 0)
    return Element::single(Level::half(0), Basis::Orbit, Scalar(n), identity_partition(1));
  Element base = juxtapose(xi(k, n - 1), 1, StrandKind::Orbit);
  Element out(Level::half(k), Basis::Orbit, Scalar(n));
  for (const auto &[p, c] : base.terms())
    out.add(p, c);
  return out;
}

std::map<SetPartition, Scalar> xi_diagram_coefficients(int k, int n) {
  return to_diagram(xi(k, n)).terms();
}

CycleType cycle_type(const Permutation &sigma) {
  CycleType ct;
  std::vector<char> seen(sigma.size(), 0);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i])
      continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j] - 1)) {
      seen[j] = 1;
      ++len;
    }
    ct.push_back(len);
  }
  std::sort(ct.rbegin(), ct.rend());
  return ct;
}

long fixed_subsets(const CycleType &ct, int t) {
  if (t < 0)
    return 0;
  std::vector<long> poly(static_cast<std::size_t>(t + 1), 0);
  poly[0] = 1;
  for (int len : ct)
    for (int d = t; d >= len; --d)
      poly[d] += poly[d - len];
  return poly[t];
}

long two_row_character(const CycleType &ct, int n, int j) {
  int total = 0;
  for (int c : ct)
    total += c;
  if (total != n)
    throw std::invalid_argument("cycle type does not sum to n");
  if (j < 0 || 2 * j > n)
    throw std::invalid_argument("two-row shape needs 0 <= j <= n/2");
  return fixed_subsets(ct, j) - fixed_subsets(ct, j - 1);
}

SparseMatrix epsilon_image(int n, int j, const Level &level) {
  if (n > 8)
    throw SizeGuardError("epsilon_image sums over n!; n <= 8 only");
  const int m = level.is_half() ? n - 1 : n;
  if (m < 0 || j < 0 || 2 * j > m)
    throw std::invalid_argument("two-row shape [m-j, j] needs 0 <= j <= m/2");
  const int k = level.k;
  Scalar scale = hook_dim_two_row(m, j) / factorial(static_cast<unsigned>(m));
  std::map<CycleType, Scalar> weight;
  SparseMatrix out(n, k);
  std::vector<Scalar> column_acc;
  for (auto sigma : all_permutations(m)) {
    CycleType ct = cycle_type(sigma);
    auto it = weight.find(ct);
    if (it == weight.end())
      it = weight.emplace(ct, scale * Scalar(two_row_character(ct, m, j))).first;
    if (it->second.is_zero())
      continue;
    if (level.is_half())
      sigma.push_back(n);
    for (std::uint64_t col = 0; col < out.dim(); ++col) {
      Tuple t = out.decode(col);
      for (int &v : t)
        v = sigma[v - 1];
      out.add(out.encode(t), col, it->second);
    }
  }
  return out;
}

namespace {

std::optional<std::string> witness_if(bool ok, const Element &e) {
  if (ok)
    return std::nullopt;
  return element_to_json(e);
}

} // namespace

Report verify_steps(int k, int n) {
  Report rep;
  const Level level = Level::integer(k);
  const Scalar xin(n);
  Element X = xi(k, n);
  Element XD = to_diagram(X);
  const Element zero(level, Basis::Diagram, xin);
  std::string tag = " (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
  for (int i = 1; i < k; ++i) {
    Element s = generator(Generator::s(i), level, xin);
    Element l = mul_diagram(s, XD), r = mul_diagram(XD, s);
    rep.add("s_" + std::to_string(i) + " Xi = Xi" + tag, l == XD, witness_if(l == XD, l));
    rep.add("Xi s_" + std::to_string(i) + " = Xi" + tag, r == XD, witness_if(r == XD, r));
  }
  std::vector<Generator> killers{Generator::p(1)};
  if (k >= 2)
    killers.push_back(Generator::b(1));
  for (const auto &g : killers) {
    Element e = generator(g, level, xin);
    Element l = mul_diagram(e, XD), r = mul_diagram(XD, e);
    rep.add(g.str() + " Xi = 0" + tag, l.is_zero(), witness_if(l.is_zero(), l));
    rep.add("Xi " + g.str() + " = 0" + tag, r.is_zero(), witness_if(r.is_zero(), r));
  }
  Element sq = mul_orbit(X, X);
  rep.add("Xi^2 = Xi" + tag, sq == X, witness_if(sq == X, sq));
  return rep;
}

Report verify_xief(int k) {
  Report rep;
  Scalar c = Scalar(k % 2 ? -1 : 1) / factorial(static_cast<unsigned>(k));
  {
    const int n = 2 * k - 1;
    Element lhs = xi(k, n);
    Element rhs = c * essential_idempotent(Level::integer(k), n);
    rep.add("Xi_{k,2k-1} = ((-1)^k/k!) e_{k,2k-1} (k=" + std::to_string(k) + ")", lhs == rhs,
            witness_if(lhs == rhs, lhs));
  }
  {
    const int n = 2 * k;
    Element lhs = xi_half(k, n);
    Element rhs = c * essential_idempotent(Level::half(k), n);
    rep.add("Xi_{k+1/2,2k} = ((-1)^k/k!) e_{k+1/2,2k} (k=" + std::to_string(k) + ")", lhs == rhs,
            witness_if(lhs == rhs, lhs));
  }
  return rep;
}

Report verify_square_identity(int n, int ell) {
  if (n < 1 || ell < 0)
    throw std::invalid_argument("square identity needs n >= 1 and ell >= 0");
  Report rep;
  const Level level = Level::integer(n + ell);
  Element A = juxtapose(essential_idempotent(Level::integer(n), n), ell, StrandKind::Orbit);
  Element sq = mul_orbit(A, A);
  Element rhs = Scalar(-(ell + 1)) * A;
  if (ell > 0)
    rhs -= Scalar(ell) * essential_idempotent(level, n);
  std::string tag = " (n=" + std::to_string(n) + ", l=" + std::to_string(ell) + ")";
  rep.add("(e_{n,n} (x) |^l)^2 = -(l+1) e_{n,n} (x) |^l - l e_{n+l,n}" + tag, sq == rhs,
          witness_if(sq == rhs, sq));
  if (ell == 0)
    rep.add("c_{n,n} = -1" + tag, c_const(n, n) == Scalar(-1));
  return rep;
}

SetPartition noncentrality_witness(int k) {
  if (k < 2)
    throw std::invalid_argument("witness needs k >= 2");
  std::vector<Block> blocks;
  for (int i = 1; i <= k - 2; ++i)
    blocks.push_back({i, k + i});
  blocks.push_back({k - 1});
  blocks.push_back({k, 2 * k - 1, 2 * k});
  return SetPartition::from_blocks(k, blocks);
}

Report verify_noncentrality(int k, int n) {
  if (2 * k <= n)
    throw UndefinedIdempotent("verify_noncentrality needs 2k > n");
  Report rep;
  const Level level = Level::integer(k);
  const Scalar xin(n);
  const std::string tag = " (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
  Element e = essential_idempotent(level, n);

  std::optional<bool> witness_separates;
  if (k >= 2) {
    SymElement es = to_symbolic(e).retagged(level);
    SymElement xs = SymElement::single(level, Basis::Orbit, Symbolic{}, noncentrality_witness(k));
    SymElement left = mul_orbit(es, xs);
    SymElement right = mul_orbit(xs, es);
    rep.add("e x_pi over generic xi" + tag, true, element_to_json(left));
    rep.add("x_pi e over generic xi" + tag, true, element_to_json(right));
    Element ln = to_numeric(left, xin), rn = to_numeric(right, xin);
    witness_separates = !(ln == rn);
    rep.add("e x_pi at xi=n" + tag, true, element_to_json(ln));
    rep.add("x_pi e at xi=n" + tag, true, element_to_json(rn));
  }

  if (2 * k - 1 > n) {
    bool separated = witness_separates.value_or(false);
    if (separated)
      rep.add("witness pi separates x_pi e from e x_pi" + tag, true);
    if (!separated) {
      Element ed = to_diagram(e);
      std::vector<Generator> gens;
      for (int i = 1; i < k; ++i)
        gens.push_back(Generator::s(i));
      gens.push_back(Generator::p(1));
      if (k >= 2)
        gens.push_back(Generator::b(1));
      for (const auto &g : gens) {
        Element d = generator(g, level, xin);
        Element l = mul_diagram(d, ed), r = mul_diagram(ed, d);
        if (!(l == r)) {
          rep.add("generator " + g.str() + " does not commute with e" + tag, true,
                  element_to_json(to_orbit(l - r)));
          separated = true;
          break;
        }
      }
    }
    rep.add("e_{k,n} is not central" + tag, separated);
    return rep;
  }

  // n = 2k-1: e commutes with every orbit basis element
  bool central = true;
  std::optional<std::string> bad;
  for (const auto &p : enumerate(level)) {
    Element x = Element::single(level, Basis::Orbit, xin, p);
    Element l = mul_orbit(x, e), r = mul_orbit(e, x);
    if (!(l == r)) {
      central = false;
      bad = element_to_json(x);
      break;
    }
  }
  rep.add("e_{k,2k-1} commutes with every basis element" + tag, central, bad);
  return rep;
}

} // namespace pa
