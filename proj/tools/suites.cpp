#include "suites.hpp"

#include <random>

#include "pa/ideal.hpp"
#include "pa/idempotent.hpp"
#include "pa/json_io.hpp"
#include "pa/schurweyl.hpp"

namespace pa::suites {

namespace {

std::string kn(int k, int n) { return " (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")"; }

SymScalar poly(std::initializer_list<int> c) {
  std::vector<Scalar> v;
  for (int x : c)
    v.emplace_back(x);
  return SymScalar(std::move(v));
}

SymElement sym_orbit(int k, std::initializer_list<std::pair<const char *, SymScalar>> terms) {
  SymElement e(Level::integer(k), Basis::Orbit, Symbolic{});
  for (const auto &[p, c] : terms)
    e.add(SetPartition::parse(p, k), c);
  return e;
}

SymElement sym_x(int k, const char *p) {
  return SymElement::single(Level::integer(k), Basis::Orbit, Symbolic{}, SetPartition::parse(p, k));
}

void expect(Report &rep, const std::string &name, const SymElement &got, const SymElement &want) {
  bool ok = got == want;
  rep.add(name, ok, ok ? std::nullopt : std::optional<std::string>(element_to_json(got)));
}

template <class T> const T &pick(const std::vector<T> &v, std::mt19937_64 &rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

Report presentation_suite(std::initializer_list<int> ks) {
  Report rep;
  for (int k : ks)
    for (int xi : {2, 3, 5, 7})
      rep.append(check_presentation(k, Scalar(xi)),
                 "k=" + std::to_string(k) + ", xi=" + std::to_string(xi) + ": ");
  return rep;
}

Report basis_change(int kmax) {
  Report rep;
  for (int k = 1; k <= kmax; ++k) {
    const Level level = Level::integer(k);
    bool d_ok = true, x_ok = true;
    for (const auto &p : enumerate(level)) {
      SymElement d = SymElement::single(level, Basis::Diagram, Symbolic{}, p);
      SymElement x = SymElement::single(level, Basis::Orbit, Symbolic{}, p);
      d_ok = d_ok && to_diagram(to_orbit(d)) == d;
      x_ok = x_ok && to_orbit(to_diagram(x)) == x;
    }
    rep.add("to_diagram(to_orbit(d_pi)) = d_pi, all pi (k=" + std::to_string(k) + ")", d_ok);
    rep.add("to_orbit(to_diagram(x_pi)) = x_pi, all pi (k=" + std::to_string(k) + ")", x_ok);
  }
  for (int k : {2, 3}) {
    if (k > kmax)
      break;
    bool ok = true;
    auto parts = enumerate(Level::integer(k));
    for (const auto &pi : parts) {
      auto up = coarsenings(pi);
      for (const auto &rho : parts) {
        Integer s = 0;
        for (const auto &sigma : up)
          if (refines(sigma, rho))
            s += mobius(sigma, rho);
        ok = ok && s == (pi == rho ? 1 : 0);
      }
    }
    rep.add("zeta * mu = identity on Pi_" + std::to_string(2 * k), ok);
  }
  return rep;
}

Report conjugation_k2() {
  Report rep;
  const Level level = Level::integer(2);
  auto parts = enumerate(level);
  long bad = 0;
  std::optional<std::string> witness;
  for (const auto &a : parts)
    for (const auto &b : parts) {
      SymElement da = SymElement::single(level, Basis::Diagram, Symbolic{}, a);
      SymElement db = SymElement::single(level, Basis::Diagram, Symbolic{}, b);
      if (!(to_orbit(mul_diagram(da, db)) == mul_orbit(to_orbit(da), to_orbit(db)))) {
        ++bad;
        if (!witness)
          witness = "\"" + a.str() + " * " + b.str() + "\"";
      }
    }
  rep.add("symbolic conjugation identity, all 225 pairs (k=2)", bad == 0, witness);
  return rep;
}

Report conjugation_k3(int pairs) {
  Report rep;
  const Level level = Level::integer(3);
  auto parts = enumerate(level);
  std::mt19937_64 rng(20240603);
  const int xis[] = {2, 3, 5, 7};
  long bad = 0;
  std::optional<std::string> witness;
  for (int t = 0; t < pairs; ++t) {
    const Scalar xi(xis[t % 4]);
    const auto &a = pick(parts, rng);
    const auto &b = pick(parts, rng);
    Element da = Element::single(level, Basis::Diagram, xi, a);
    Element db = Element::single(level, Basis::Diagram, xi, b);
    if (!(to_orbit(mul_diagram(da, db)) == mul_orbit(to_orbit(da), to_orbit(db)))) {
      ++bad;
      if (!witness)
        witness = "\"" + a.str() + " * " + b.str() + " at xi=" + xi.str() + "\"";
    }
  }
  rep.add("conjugation identity, " + std::to_string(pairs) + " random pairs (k=3, xi in {2,3,5,7})",
          bad == 0, witness);
  return rep;
}

Report multiplication_examples() {
  Report rep;
  // (1) k=3
  {
    SymElement x = sym_x(3, "1,2,3|4,5,6");
    expect(rep, "example (1): x_pi^2 = (xi-2) x_pi + (xi-1) x_{123456}", mul_orbit(x, x),
           sym_orbit(3, {{"1,2,3|4,5,6", poly({-2, 1})}, {"1,2,3,4,5,6", poly({-1, 1})}}));
  }
  // (2) k=4, two removed components, 1 + 4 + 2 coarsenings
  {
    SymElement a = sym_x(4, "1|2,8|3,4|5|6,7");
    SymElement b = sym_x(4, "1,3|2,6|4|5|7,8");
    SymScalar c2 = poly({30, -11, 1}), c1 = poly({20, -9, 1}), c0 = poly({12, -7, 1});
    expect(rep, "example (2): seven-term expansion", mul_orbit(a, b),
           sym_orbit(4, {{"1,3|2,8|4|5|6,7", c2},
                         {"1,3,5|2,8|4|6,7", c1},
                         {"1,3|2,8|4,5|6,7", c1},
                         {"1,3,6,7|2,8|4|5", c1},
                         {"1,3|2,8|4,6,7|5", c1},
                         {"1,3,5|2,8|4,6,7", c0},
                         {"1,3,6,7|2,8|4,5", c0}}));
  }
  // (3) k=4, a non-top-only vertex may not be merged
  {
    SymElement a = sym_x(4, "1,5|2,6|3,8|4|7");
    SymElement b = sym_x(4, "1,7|2,5|3|4|6|8");
    expect(rep, "example (3): three-term expansion", mul_orbit(a, b),
           sym_orbit(4, {{"1,8|2,5|3|4|6|7", poly({-6, 1})},
                         {"1,8|2,5|3,7|4|6", poly({-5, 1})},
                         {"1,8|2,5|3|4,7|6", poly({-5, 1})}}));
  }
  // (4) k=6
  {
    SymElement a = sym_x(6, "1|2,3,7|4,5|6,9,11|8,10|12");
    SymElement b = sym_x(6, "1,3|2,7|4,5,6,12|8,9|10|11");
    expect(rep, "example (4) left: middle mismatch gives 0", mul_orbit(a, b),
           SymElement(Level::integer(6), Basis::Orbit, Symbolic{}));
    SymElement c = sym_x(6, "1|2,7|3,8|4,12|5,10|6|9,11");
    SymElement d = sym_x(6, "1,8|2,7|3,11|4,9|5,12|6,10");
    expect(rep, "example (4) right: single term", mul_orbit(c, d),
           sym_orbit(6, {{"1,7|2|3,10|4,8|5|6,12|9,11", SymScalar(1)}}));
  }
  return rep;
}

Report homomorphism(int k, int n, int random_pairs, std::mt19937_64 &rng) {
  Report rep;
  const Level level = Level::integer(k);
  auto parts = enumerate(level);
  std::vector<std::pair<SetPartition, SetPartition>> pairs;
  if (random_pairs < 0) {
    for (const auto &a : parts)
      for (const auto &b : parts)
        pairs.emplace_back(a, b);
  } else {
    for (int t = 0; t < random_pairs; ++t)
      pairs.emplace_back(pick(parts, rng), pick(parts, rng));
  }
  const Scalar xi(n);
  bool ok = true;
  std::optional<std::string> witness;
  for (const auto &[a, b] : pairs) {
    Element da = Element::single(level, Basis::Diagram, xi, a);
    Element db = Element::single(level, Basis::Diagram, xi, b);
    if (!(phi(mul_diagram(da, db), n) == phi(da, n) * phi(db, n))) {
      ok = false;
      witness = "\"" + a.str() + " * " + b.str() + "\"";
      break;
    }
  }
  rep.add("Phi(ab) = Phi(a) Phi(b), " + std::to_string(pairs.size()) + " pairs" + kn(k, n), ok,
          witness);
  return rep;
}

Report representation(bool quick_only) {
  Report rep;
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 5; ++n)
    rep.append(homomorphism(2, n, -1, rng));
  if (!quick_only)
    for (int n = 3; n <= 6; ++n)
      rep.append(homomorphism(3, n, 75, rng));
  struct Case {
    Level level;
    int n, trials;
  };
  std::vector<Case> cases = {{Level::integer(1), 2, 2}, {Level::integer(2), 3, 6},
                             {Level::half(1), 3, 2}, {Level::half(2), 3, 2}};
  if (!quick_only)
    cases.push_back({Level::integer(3), 3, 6});
  for (const auto &c : cases) {
    Report r = commutant_check(c.level, c.n, c.trials);
    rep.add("image commutes with S_n (level " + c.level.str() + ", n=" + std::to_string(c.n) + ")",
            r.pass(), r.pass() ? std::nullopt : r.checks.front().witness);
  }
  struct Rank {
    int k, n;
    long want;
  };
  std::vector<Rank> ranks = {{2, 2, 8}, {2, 3, 14}, {2, 4, 15}};
  if (!quick_only)
    ranks.push_back({3, 3, 122});
  for (const auto &r : ranks) {
    const Level level = Level::integer(r.k);
    long cd = centralizer_dim(level, r.n), ir = image_rank(level, r.n);
    rep.add("image_rank = centralizer_dim = " + std::to_string(r.want) + kn(r.k, r.n),
            cd == r.want && ir == r.want,
            "{\"centralizer_dim\":" + std::to_string(cd) + ",\"image_rank\":" + std::to_string(ir) +
                "}");
  }
  return rep;
}

Report kernel_sizes() {
  Report rep;
  struct Case {
    int k, n;
    std::size_t want;
  };
  for (const auto &c : std::vector<Case>{{2, 3, 1}, {3, 3, 81}, {3, 4, 16}}) {
    auto got = kernel_basis(Level::integer(c.k), c.n).size();
    rep.add("|kernel_basis| = " + std::to_string(c.want) + kn(c.k, c.n), got == c.want,
            std::to_string(got));
  }
  return rep;
}

Report essential_squares(int kmax) {
  Report rep;
  auto square = [&](int k, int n) {
    const Level level = Level::integer(k);
    Element e = essential_idempotent(level, n);
    Element sq = mul_orbit(e, e);
    Element want = c_const(k, n) * e;
    rep.add("e^2 = c_{k,n} e" + kn(k, n), sq == want,
            sq == want ? std::nullopt : std::optional<std::string>(element_to_json(sq)));
  };
  for (int k = 1; k <= kmax; ++k)
    for (int n = 1; n < 2 * k; ++n)
      square(k, n);
  if (kmax >= 4) {
    rep.add("c_{5,6} = 2", c_const(5, 6) == Scalar(2), c_const(5, 6).str());
    square(5, 6);
  }
  return rep;
}

Report generation(bool quick_only, const Options &options) {
  Report rep;
  auto kernel = [&](const Level &level, int n) {
    rep.append(verify_kernel_generation(level, n));
  };
  auto enn = [&](int k, int n, long want, const ClosureOptions &co = {}) {
    Report r = verify_enn_generation(Level::integer(k), n, co);
    rep.append(r);
    rep.add("closure dimension " + std::to_string(want) + kn(k, n), r.dim && *r.dim == want,
            r.dim ? std::to_string(*r.dim) : "null");
  };
  kernel(Level::integer(2), 2);
  kernel(Level::integer(2), 3);
  kernel(Level::half(2), 2);
  kernel(Level::half(2), 3);
  enn(2, 2, 7);
  if (!quick_only) {
    kernel(Level::integer(3), 3);
    kernel(Level::integer(3), 4);
    enn(3, 2, 171);
    enn(3, 3, 81);
  }
  if (options.large_closure) {
    ClosureOptions co;
    co.override_size_guard = true;
    co.stop_at_kernel_dim = true;
    enn(4, 3, 3046, co);
  }
  return rep;
}

Report xi_suite(int kmax, int xief_max) {
  Report rep;
  for (int k = 1; k <= kmax; ++k)
    for (int n = 2 * k - 1; n <= 2 * k + 3; ++n)
      rep.append(verify_steps(k, n));
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 7}}) {
    if (k > kmax)
      continue;
    auto a = xi_diagram_coefficients(k, n);
    const Scalar want = Scalar(1) / factorial(static_cast<unsigned>(k));
    bool ok = true;
    for (const auto &p : enumerate(Level::integer(k)))
      if (is_permutation(p)) {
        auto it = a.find(p);
        ok = ok && it != a.end() && it->second == want;
      }
    rep.add("a(perm) = 1/k! on every permutation" + kn(k, n), ok);
  }
  for (int k = 1; k <= xief_max; ++k)
    rep.append(verify_xief(k));
  return rep;
}

Report projector(bool quick_only) {
  Report rep;
  std::vector<std::pair<int, int>> full = {{1, 2}, {1, 3}, {2, 4}, {2, 5}};
  if (!quick_only)
    full.emplace_back(3, 6);
  for (auto [k, n] : full) {
    bool ok = phi(xi(k, n), n) == epsilon_image(n, k, Level::integer(k));
    rep.add("Phi(Xi_{k,n}) = image of eps_[n-k,k]" + kn(k, n), ok);
  }
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 5}}) {
    bool ok = phi_half(xi_half(k, n), n) == epsilon_image(n, k, Level::half(k));
    rep.add("Phi(Xi_{k+1/2,n}) = image of eps_[n-1-k,k]" + kn(k, n), ok);
  }
  return rep;
}

Report squares(int lmax) {
  Report rep;
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l <= lmax; ++l)
      rep.append(verify_square_identity(n, l));
  return rep;
}

Report centrality(bool quick_only) {
  Report rep;
  if (!quick_only) {
    const int k = 5;
    const SymElement zero(Level::integer(k), Basis::Orbit, Symbolic{});
    struct Case {
      int n;
      const char *tau;
      SymScalar coeff;
    };
    for (const auto &c : std::vector<Case>{{7, "1|2|3|4|5,9,10|6|7|8", SymScalar(1)},
                                           {8, "1|2|3|4|5,9,10|6|7|8", poly({-8, 1})},
                                           {9, "1|2|3|4|5|6|7|8|9,10", poly({-9, 1})}}) {
      SymElement e = to_symbolic(essential_idempotent(Level::integer(k), c.n));
      SymElement x = SymElement::single(Level::integer(k), Basis::Orbit, Symbolic{},
                                        noncentrality_witness(k));
      expect(rep, "e x_pi = 0 over generic xi" + kn(k, c.n), mul_orbit(e, x), zero);
      SymElement want = c.coeff.is_zero() ? zero : sym_orbit(k, {{c.tau, c.coeff}});
      expect(rep, "x_pi e matches the displayed witness" + kn(k, c.n), mul_orbit(x, e), want);
      rep.append(verify_noncentrality(k, c.n));
    }
    Element e9 = essential_idempotent(Level::integer(5), 9);
    Element x9 = Element::single(Level::integer(5), Basis::Orbit, Scalar(9), noncentrality_witness(5));
    rep.add("coefficient n-(2k-1) vanishes: x_pi e = e x_pi = 0 (k=5, n=9)",
            mul_orbit(x9, e9).is_zero() && mul_orbit(e9, x9).is_zero());
  }
  rep.append(verify_noncentrality(2, 3));
  if (!quick_only)
    rep.append(verify_noncentrality(3, 5));
  return rep;
}

} // namespace

const std::vector<Criterion> &criteria() {
  static const std::vector<Criterion> list = {
      {1, "presentation relations"},
      {2, "basis change inverse"},
      {3, "orbit multiplication"},
      {4, "representation"},
      {5, "kernel dimensions"},
      {6, "essential idempotents"},
      {7, "principal generation"},
      {8, "Xi suite"},
      {9, "projector equality"},
      {10, "square identity"},
      {11, "centrality dichotomy"},
  };
  return list;
}

Report run_criterion(int id, const Options &options) {
  Report rep;
  switch (id) {
  case 1:
    return presentation_suite({2, 3, 4});
  case 2:
    return basis_change(3);
  case 3:
    rep.append(conjugation_k2());
    rep.append(conjugation_k3(500));
    rep.append(multiplication_examples());
    return rep;
  case 4:
    return representation(false);
  case 5:
    return kernel_sizes();
  case 6:
    return essential_squares(4);
  case 7:
    return generation(false, options);
  case 8:
    return xi_suite(3, 4);
  case 9:
    return projector(false);
  case 10:
    return squares(2);
  case 11:
    return centrality(false);
  default:
    throw std::invalid_argument("no criterion " + std::to_string(id));
  }
}

Report quick() {
  Report rep;
  rep.append(presentation_suite({2}), "[presentation] ");
  rep.append(basis_change(2), "[basis] ");
  rep.append(conjugation_k2(), "[orbit] ");
  rep.append(multiplication_examples(), "[orbit] ");
  rep.append(representation(true), "[phi] ");
  rep.append(essential_squares(2), "[essential] ");
  rep.append(generation(true, {}), "[ideal] ");
  rep.append(xi_suite(2, 2), "[xi] ");
  rep.append(projector(true), "[projector] ");
  rep.append(squares(2), "[square] ");
  rep.append(centrality(true), "[centrality] ");
  return rep;
}

Report full(const Options &options) {
  Report rep;
  for (const auto &c : criteria())
    rep.append(run_criterion(c.id, options), "[" + std::to_string(c.id) + "] ");
  return rep;
}

} // namespace pa::suites
