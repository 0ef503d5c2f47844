#include "pa/algebra.hpp"

#include <sstream>

#include "pa/json_io.hpp"

namespace pa {

std::string basis_name(Basis b) { return b == Basis::Diagram ? "diagram" : "orbit"; }

Basis parse_basis(std::string_view text) {
  if (text == "diagram" || text == "d")
    return Basis::Diagram;
  if (text == "orbit" || text == "x")
    return Basis::Orbit;
  throw BasisMismatch("unknown basis '" + std::string(text) + "'");
}

template <class C> std::string BasicElement<C>::str() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  const char *sym = basis_ == Basis::Diagram ? "d" : "x";
  bool first = true;
  for (const auto &[p, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << sym << "[" << p.str() << "]";
  }
  return os.str();
}

template <class C>
BasicElement<C> mul_diagram(const BasicElement<C> &a, const BasicElement<C> &b) {
  a.check_compatible(b);
  if (a.basis() != Basis::Diagram)
    throw BasisMismatch("mul_diagram requires diagram-basis operands");
  BasicElement<C> out(a.level(), Basis::Diagram, a.xi());
  std::map<SetPartition, C> acc;
  for (const auto &[p1, c1] : a.terms())
    for (const auto &[p2, c2] : b.terms()) {
      int removed = 0;
      SetPartition p = compose(p1, p2, removed);
      C c = c1 * c2;
      if (removed)
        c *= CoeffTraits<C>::xi_power(a.xi(), removed);
      auto [it, inserted] = acc.try_emplace(std::move(p), c);
      if (!inserted)
        it->second += c;
    }
  for (auto &[p, c] : acc)
    if (!c.is_zero())
      out.add(p, c);
  return out;
}

template <class C>
void mul_orbit_terms(const SetPartition &p1, const SetPartition &p2, const C &coeff,
                     const typename CoeffTraits<C>::Xi &xi, std::map<SetPartition, C> &out) {
  if (!middle_match(p1, p2))
    return;
  const int k = p1.k();
  int removed = 0;
  SetPartition prod = compose(p1, p2, removed);

  // product labels of the top-only blocks of p1 and bottom-only blocks of p2
  std::vector<int> tops, bottoms;
  {
    std::vector<char> low(static_cast<std::size_t>(p1.num_blocks()), 0);
    for (int v = 1; v <= k; ++v)
      low[p1.label(v)] = 1;
    std::vector<char> done(static_cast<std::size_t>(p1.num_blocks()), 0);
    for (int v = k + 1; v <= 2 * k; ++v) {
      int b = p1.label(v);
      if (!low[b] && !done[b]) {
        done[b] = 1;
        tops.push_back(prod.label(v));
      }
    }
  }
  {
    std::vector<char> high(static_cast<std::size_t>(p2.num_blocks()), 0);
    for (int v = k + 1; v <= 2 * k; ++v)
      high[p2.label(v)] = 1;
    std::vector<char> done(static_cast<std::size_t>(p2.num_blocks()), 0);
    for (int v = 1; v <= k; ++v) {
      int b = p2.label(v);
      if (!high[b] && !done[b]) {
        done[b] = 1;
        bottoms.push_back(prod.label(v));
      }
    }
  }

  std::vector<int> group(static_cast<std::size_t>(prod.num_blocks()));
  for (int i = 0; i < prod.num_blocks(); ++i)
    group[i] = i;
  std::vector<char> used(bottoms.size(), 0);
  const int base_blocks = prod.num_blocks();

  auto emit = [&](int merged) {
    int blocks = base_blocks - merged;
    C c = coeff;
    if (removed)
      c *= CoeffTraits<C>::shifted_falling(xi, blocks, removed);
    if (c.is_zero())
      return;
    SetPartition rho = merged ? merge_blocks(prod, group) : prod;
    auto [it, inserted] = out.try_emplace(std::move(rho), c);
    if (!inserted)
      it->second += c;
  };

  // partial injective matchings tops -> bottoms
  auto rec = [&](auto &&self, std::size_t i, int merged) -> void {
    if (i == tops.size()) {
      emit(merged);
      return;
    }
    self(self, i + 1, merged);
    for (std::size_t j = 0; j < bottoms.size(); ++j) {
      if (used[j])
        continue;
      used[j] = 1;
      group[bottoms[j]] = tops[i];
      self(self, i + 1, merged + 1);
      group[bottoms[j]] = bottoms[j];
      used[j] = 0;
    }
  };
  rec(rec, 0, 0);
}

template <class C>
BasicElement<C> mul_orbit(const BasicElement<C> &a, const BasicElement<C> &b) {
  a.check_compatible(b);
  if (a.basis() != Basis::Orbit)
    throw BasisMismatch("mul_orbit requires orbit-basis operands");
  std::map<SetPartition, C> acc;
  for (const auto &[p1, c1] : a.terms())
    for (const auto &[p2, c2] : b.terms())
      mul_orbit_terms<C>(p1, p2, c1 * c2, a.xi(), acc);
  BasicElement<C> out(a.level(), Basis::Orbit, a.xi());
  for (auto &[p, c] : acc)
    if (!c.is_zero())
      out.add(p, c);
  return out;
}

template <class C> BasicElement<C> mul(const BasicElement<C> &a, const BasicElement<C> &b) {
  return a.basis() == Basis::Diagram ? mul_diagram(a, b) : mul_orbit(a, b);
}

template <class C> BasicElement<C> to_orbit(const BasicElement<C> &a) {
  if (a.basis() != Basis::Diagram)
    throw BasisMismatch("to_orbit expects a diagram-basis element");
  std::map<SetPartition, C> acc;
  for (const auto &[p, c] : a.terms())
    for_each_rgs(p.num_blocks(), [&](const std::vector<int> &g) {
      auto [it, inserted] = acc.try_emplace(merge_blocks(p, g), c);
      if (!inserted)
        it->second += c;
    });
  BasicElement<C> out(a.level(), Basis::Orbit, a.xi());
  for (auto &[p, c] : acc)
    if (!c.is_zero())
      out.add(p, c);
  return out;
}

template <class C> BasicElement<C> to_diagram(const BasicElement<C> &a) {
  if (a.basis() != Basis::Orbit)
    throw BasisMismatch("to_diagram expects an orbit-basis element");
  std::map<SetPartition, C> acc;
  std::vector<Scalar> signed_fact(64);
  signed_fact[1] = Scalar(1);
  for (int b = 2; b < 64; ++b)
    signed_fact[b] = signed_fact[b - 1] * Scalar(-(b - 1));
  for (const auto &[p, c] : a.terms()) {
    std::vector<int> count(static_cast<std::size_t>(p.num_blocks()));
    for_each_rgs(p.num_blocks(), [&](const std::vector<int> &g) {
      std::fill(count.begin(), count.end(), 0);
      for (int x : g)
        ++count[x];
      Scalar mu(1);
      for (int b : count)
        if (b > 1)
          mu *= signed_fact[b];
      C term = c;
      term *= C(mu);
      auto [it, inserted] = acc.try_emplace(merge_blocks(p, g), term);
      if (!inserted)
        it->second += term;
    });
  }
  BasicElement<C> out(a.level(), Basis::Diagram, a.xi());
  for (auto &[p, c] : acc)
    if (!c.is_zero())
      out.add(p, c);
  return out;
}

template <class C> BasicElement<C> to_basis(const BasicElement<C> &a, Basis basis) {
  if (a.basis() == basis)
    return a;
  return basis == Basis::Orbit ? to_orbit(a) : to_diagram(a);
}

template <class C>
BasicElement<C> juxtapose(const BasicElement<C> &a, int strands, StrandKind kind) {
  if (a.level().is_half())
    throw LevelError("juxtapose expects an integer level; embed half levels first");
  if (strands < 0)
    throw std::invalid_argument("negative strand count");
  Basis target = kind == StrandKind::Diagram ? Basis::Diagram : Basis::Orbit;
  BasicElement<C> src = to_basis(a, target);
  if (strands == 0)
    return src;
  const int k = a.level().k;
  const int k2 = k + strands;
  BasicElement<C> out(Level::integer(k2), target, a.xi());
  std::vector<int> lab(static_cast<std::size_t>(2 * k2));
  for (const auto &[p, c] : src.terms()) {
    for (int i = 1; i <= k; ++i) {
      lab[i - 1] = p.label(i);
      lab[k2 + i - 1] = p.label(k + i);
    }
    for (int j = 1; j <= strands; ++j)
      lab[k + j - 1] = lab[k2 + k + j - 1] = 2 * k + j;
    out.add(SetPartition::from_labels(k2, lab), c);
  }
  return out;
}

template <class C> BasicElement<C> embed_half(const BasicElement<C> &a) {
  if (!a.level().is_half())
    throw LevelError("embed_half expects a half-integer level");
  return a.retagged(Level::integer(a.level().k + 1));
}

template <class C> BasicElement<C> restrict_to_half(const BasicElement<C> &a) {
  if (a.level().is_half() || a.level().k < 1)
    throw LevelError("restrict_to_half expects an integer level k >= 1");
  Level target = Level::half(a.level().k - 1);
  for (const auto &[p, c] : a.terms())
    if (!target.admits(p))
      throw LevelError("partition " + p.str() + " violates the constraint of level " +
                       target.str());
  return a.retagged(target);
}

template <class C>
BasicElement<C> identity(const Level &level, typename CoeffTraits<C>::Xi xi) {
  return BasicElement<C>::single(level, Basis::Diagram, xi, identity_partition(level.param()));
}

template <class C>
BasicElement<C> orbit_identity_diagram(const Level &level, typename CoeffTraits<C>::Xi xi) {
  return BasicElement<C>::single(level, Basis::Orbit, xi, identity_partition(level.param()));
}

#define PA_INSTANTIATE(C)                                                                          \
  template class BasicElement<C>;                                                                  \
  template BasicElement<C> mul_diagram(const BasicElement<C> &, const BasicElement<C> &);          \
  template BasicElement<C> mul_orbit(const BasicElement<C> &, const BasicElement<C> &);            \
  template BasicElement<C> mul(const BasicElement<C> &, const BasicElement<C> &);                  \
  template BasicElement<C> to_orbit(const BasicElement<C> &);                                      \
  template BasicElement<C> to_diagram(const BasicElement<C> &);                                    \
  template BasicElement<C> to_basis(const BasicElement<C> &, Basis);                               \
  template BasicElement<C> juxtapose(const BasicElement<C> &, int, StrandKind);                    \
  template BasicElement<C> embed_half(const BasicElement<C> &);                                    \
  template BasicElement<C> restrict_to_half(const BasicElement<C> &);                              \
  template BasicElement<C> identity<C>(const Level &, typename CoeffTraits<C>::Xi);                \
  template BasicElement<C> orbit_identity_diagram<C>(const Level &, typename CoeffTraits<C>::Xi);  \
  template void mul_orbit_terms<C>(const SetPartition &, const SetPartition &, const C &,          \
                                   const typename CoeffTraits<C>::Xi &,                            \
                                   std::map<SetPartition, C> &);

PA_INSTANTIATE(Scalar)
PA_INSTANTIATE(SymScalar)

#undef PA_INSTANTIATE

Element to_numeric(const SymElement &a, const Scalar &xi) {
  Element out(a.level(), a.basis(), xi);
  for (const auto &[p, c] : a.terms())
    out.add(p, eval(c, xi));
  return out;
}

SymElement to_symbolic(const Element &a) {
  SymElement out(a.level(), a.basis(), Symbolic{});
  for (const auto &[p, c] : a.terms())
    out.add(p, SymScalar(c));
  return out;
}

Generator Generator::parse(std::string_view text) {
  if (text.size() < 2)
    throw std::invalid_argument("malformed generator '" + std::string(text) + "'");
  Generator g;
  switch (text[0]) {
  case 's':
    g.kind = Kind::S;
    break;
  case 'p':
    g.kind = Kind::P;
    break;
  case 'b':
    g.kind = Kind::B;
    break;
  default:
    throw std::invalid_argument("malformed generator '" + std::string(text) + "'");
  }
  std::string rest(text.substr(1));
  for (char c : rest)
    if (c < '0' || c > '9')
      throw std::invalid_argument("malformed generator '" + std::string(text) + "'");
  if (rest.size() > 3)
    throw std::invalid_argument("generator index out of range");
  g.index = std::stoi(rest);
  return g;
}

std::string Generator::str() const {
  const char *c = kind == Kind::S ? "s" : kind == Kind::P ? "p" : "b";
  return c + std::to_string(index);
}

Element generator(const Generator &which, const Level &level, const Scalar &xi) {
  const int q = level.param();
  const int i = which.index;
  std::vector<int> lab(static_cast<std::size_t>(2 * q));
  for (int c = 1; c <= q; ++c)
    lab[c - 1] = lab[q + c - 1] = c;
  Scalar coeff(1);
  switch (which.kind) {
  case Generator::Kind::S:
    if (i < 1 || i > q - 1)
      throw std::out_of_range("s_" + std::to_string(i) + " out of range at level " + level.str());
    lab[q + i - 1] = i + 1;
    lab[q + i] = i;
    break;
  case Generator::Kind::P:
    if (i < 1 || i > q)
      throw std::out_of_range("p_" + std::to_string(i) + " out of range at level " + level.str());
    if (xi.is_zero())
      throw XiError("p_i needs xi != 0 (coefficient 1/xi)");
    lab[q + i - 1] = 2 * q + 1;
    coeff = Scalar(1) / xi;
    break;
  case Generator::Kind::B:
    if (i < 1 || i > q - 1)
      throw std::out_of_range("b_" + std::to_string(i) + " out of range at level " + level.str());
    lab[i] = lab[q + i] = i;
    break;
  }
  SetPartition p = SetPartition::from_labels(q, lab);
  if (!level.admits(p))
    throw LevelError(which.str() + " does not lie in level " + level.str());
  return Element::single(level, Basis::Diagram, xi, p, coeff);
}

Element p_half_index(int twice_l, int k, const Scalar &xi) {
  Level level = Level::integer(k);
  if (twice_l < 1 || twice_l > 2 * k + 1)
    throw std::out_of_range("p index out of range");
  if (twice_l % 2 == 0)
    return generator(Generator::p(twice_l / 2), level, xi);
  int i = (twice_l - 1) / 2;
  if (i == 0 || i == k)
    return identity<Scalar>(level, xi);
  return generator(Generator::b(i), level, xi);
}

namespace {

std::string half_name(int twice) {
  if (twice % 2 == 0)
    return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

} // namespace

Report check_presentation(int k, const Scalar &xi, const std::map<std::string, Element> &overrides) {
  if (xi.is_zero())
    throw XiError("presentation requires xi != 0");
  Report rep;
  Level level = Level::integer(k);
  auto gen = [&](Generator g) {
    auto it = overrides.find(g.str());
    return it != overrides.end() ? it->second : generator(g, level, xi);
  };
  auto p = [&](int twice) {
    if (twice % 2 == 0) {
      auto it = overrides.find("p" + std::to_string(twice / 2));
      if (it != overrides.end())
        return it->second;
    } else if (int i = (twice - 1) / 2; i >= 1 && i < k) {
      auto it = overrides.find("b" + std::to_string(i));
      if (it != overrides.end())
        return it->second;
    }
    return p_half_index(twice, k, xi);
  };
  const Element I = identity<Scalar>(level, xi);
  auto check = [&](const std::string &name, const Element &lhs, const Element &rhs) {
    bool ok = lhs == rhs;
    rep.add(name, ok, ok ? std::nullopt : std::optional<std::string>(element_to_json(lhs)));
  };
  auto m = [](const Element &a, const Element &b) { return mul_diagram(a, b); };

  std::vector<Element> s(static_cast<std::size_t>(k + 1));
  for (int i = 1; i < k; ++i)
    s[i] = gen(Generator::s(i));
  // twice the index: p_l for l in {1, 3/2, ..., k}
  std::vector<Element> P(static_cast<std::size_t>(2 * k + 2));
  for (int t = 1; t <= 2 * k + 1; ++t)
    P[t] = p(t);

  // (a)
  for (int i = 1; i < k; ++i)
    check("s_i^2 = I_k (i=" + std::to_string(i) + ")", m(s[i], s[i]), I);
  for (int i = 1; i < k; ++i)
    for (int j = i + 2; j < k; ++j)
      check("s_i s_j = s_j s_i (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")",
            m(s[i], s[j]), m(s[j], s[i]));
  for (int i = 1; i + 1 < k; ++i)
    check("s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1} (i=" + std::to_string(i) + ")",
          m(m(s[i], s[i + 1]), s[i]), m(m(s[i + 1], s[i]), s[i + 1]));

  // (b)
  for (int l = 2; l <= 2 * k; ++l)
    check("p_l^2 = p_l (l=" + half_name(l) + ")", m(P[l], P[l]), P[l]);
  for (int l = 2; l <= 2 * k; ++l)
    for (int n = l + 2; n <= 2 * k; ++n)
      check("p_l p_m = p_m p_l (l=" + half_name(l) + ", m=" + half_name(n) + ")", m(P[l], P[n]),
            m(P[n], P[l]));
  for (int l = 2; l <= 2 * k; ++l)
    for (int d : {-1, 1})
      check("p_l p_{l+-1/2} p_l = p_l (l=" + half_name(l) + ", m=" + half_name(l + d) + ")",
            m(m(P[l], P[l + d]), P[l]), P[l]);

  // (c)
  for (int i = 1; i < k; ++i) {
    std::string tag = " (i=" + std::to_string(i) + ")";
    check("s_i p_i p_{i+1} = p_i p_{i+1}" + tag, m(s[i], m(P[2 * i], P[2 * i + 2])),
          m(P[2 * i], P[2 * i + 2]));
    check("s_i p_i s_i = p_{i+1}" + tag, m(m(s[i], P[2 * i]), s[i]), P[2 * i + 2]);
    check("s_i p_{i+1/2} = p_{i+1/2}" + tag, m(s[i], P[2 * i + 1]), P[2 * i + 1]);
    check("p_{i+1/2} s_i = p_{i+1/2}" + tag, m(P[2 * i + 1], s[i]), P[2 * i + 1]);
  }
  for (int i = 1; i + 1 < k; ++i)
    check("s_i s_{i+1} p_{i+1/2} s_{i+1} s_i = p_{i+3/2} (i=" + std::to_string(i) + ")",
          m(m(m(m(s[i], s[i + 1]), P[2 * i + 1]), s[i + 1]), s[i]), P[2 * i + 3]);
  for (int i = 1; i < k; ++i)
    for (int l = 2; l <= 2 * k; ++l) {
      int rel = l - 2 * i; // twice (l - i)
      if (rel >= -1 && rel <= 3)
        continue;
      check("s_i p_l = p_l s_i (i=" + std::to_string(i) + ", l=" + half_name(l) + ")",
            m(s[i], P[l]), m(P[l], s[i]));
    }
  return rep;
}

} // namespace pa
