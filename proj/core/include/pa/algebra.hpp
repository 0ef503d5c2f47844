#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pa/report.hpp"
#include "pa/scalar.hpp"
#include "pa/setpart.hpp"

namespace pa {

enum class Basis { Diagram, Orbit };
enum class StrandKind { Diagram, Orbit };

std::string basis_name(Basis b);
Basis parse_basis(std::string_view text);

struct BasisMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct XiError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Marker for the symbolic parameter.
struct Symbolic {
  friend bool operator==(Symbolic, Symbolic) { return true; }
};

template <class C> struct CoeffTraits;

template <> struct CoeffTraits<Scalar> {
  using Xi = Scalar;
  static Scalar xi_power(const Scalar &xi, int r) { return xi.pow(static_cast<unsigned>(r)); }
  // (xi - m)_r
  static Scalar shifted_falling(const Scalar &xi, int m, int r) {
    return falling_factorial(xi - Scalar(m), static_cast<unsigned>(r));
  }
  static std::string xi_str(const Scalar &xi) { return xi.str(); }
};

template <> struct CoeffTraits<SymScalar> {
  using Xi = Symbolic;
  static SymScalar xi_power(Symbolic, int r) {
    std::vector<Scalar> c(static_cast<std::size_t>(r + 1));
    c.back() = Scalar(1);
    return SymScalar(std::move(c));
  }
  static SymScalar shifted_falling(Symbolic, int m, int r) {
    return falling_factorial(SymScalar::xi() - SymScalar(Scalar(m)), static_cast<unsigned>(r));
  }
  static std::string xi_str(Symbolic) { return "symbolic"; }
};

// Sparse linear combination of basis elements of P_k(xi) or P_{k+1/2}(xi).
template <class C> class BasicElement {
public:
  using Coeff = C;
  using Xi = typename CoeffTraits<C>::Xi;
  using Terms = std::map<SetPartition, C>;

  BasicElement() = default;
  BasicElement(Level level, Basis basis, Xi xi) : level_(level), basis_(basis), xi_(xi) {}

  static BasicElement single(Level level, Basis basis, Xi xi, const SetPartition &p,
                             C coeff = C(Scalar(1))) {
    BasicElement e(level, basis, xi);
    e.add(p, coeff);
    return e;
  }

  const Level &level() const { return level_; }
  Basis basis() const { return basis_; }
  const Xi &xi() const { return xi_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coeff(const SetPartition &p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? C() : it->second;
  }

  void add(const SetPartition &p, const C &c) {
    if (!level_.admits(p))
      throw LevelError("partition " + p.str() + " does not belong to level " + level_.str());
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  // Accumulate without pruning; call prune() afterwards.
  void accumulate(const SetPartition &p, const C &c) {
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted)
      it->second += c;
  }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }

  BasicElement &operator+=(const BasicElement &o) {
    check_compatible(o);
    for (const auto &[p, c] : o.terms_)
      add(p, c);
    return *this;
  }
  BasicElement &operator-=(const BasicElement &o) {
    check_compatible(o);
    for (const auto &[p, c] : o.terms_)
      add(p, -c);
    return *this;
  }
  BasicElement &operator*=(const C &s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto &[p, c] : terms_)
      c *= s;
    return *this;
  }
  friend BasicElement operator+(BasicElement a, const BasicElement &b) { return a += b; }
  friend BasicElement operator-(BasicElement a, const BasicElement &b) { return a -= b; }
  friend BasicElement operator*(const C &s, BasicElement a) { return a *= s; }

  friend bool operator==(const BasicElement &a, const BasicElement &b) {
    return a.level_ == b.level_ && a.basis_ == b.basis_ && a.xi_ == b.xi_ && a.terms_ == b.terms_;
  }

  BasicElement retagged(Level level) const {
    BasicElement out(level, basis_, xi_);
    for (const auto &[p, c] : terms_)
      out.add(p, c);
    return out;
  }

  void check_compatible(const BasicElement &o) const {
    if (!(level_ == o.level_))
      throw LevelError("level mismatch: " + level_.str() + " vs " + o.level_.str());
    if (basis_ != o.basis_)
      throw BasisMismatch("basis mismatch");
    if (!(xi_ == o.xi_))
      throw XiError("xi mismatch: " + CoeffTraits<C>::xi_str(xi_) + " vs " +
                    CoeffTraits<C>::xi_str(o.xi_));
  }

  std::string str() const;

private:
  Level level_;
  Basis basis_ = Basis::Diagram;
  Xi xi_{};
  Terms terms_;
};

using Element = BasicElement<Scalar>;
using SymElement = BasicElement<SymScalar>;

template <class C> BasicElement<C> mul_diagram(const BasicElement<C> &a, const BasicElement<C> &b);
template <class C> BasicElement<C> mul_orbit(const BasicElement<C> &a, const BasicElement<C> &b);
// Dispatches on the (shared) basis of a and b.
template <class C> BasicElement<C> mul(const BasicElement<C> &a, const BasicElement<C> &b);
template <class C> BasicElement<C> to_orbit(const BasicElement<C> &a);
template <class C> BasicElement<C> to_diagram(const BasicElement<C> &a);
template <class C> BasicElement<C> to_basis(const BasicElement<C> &a, Basis basis);
template <class C>
BasicElement<C> juxtapose(const BasicElement<C> &a, int strands, StrandKind kind);
template <class C> BasicElement<C> embed_half(const BasicElement<C> &a);
template <class C> BasicElement<C> restrict_to_half(const BasicElement<C> &a);
template <class C>
BasicElement<C> identity(const Level &level, typename CoeffTraits<C>::Xi xi);
template <class C>
BasicElement<C> orbit_identity_diagram(const Level &level, typename CoeffTraits<C>::Xi xi);

// Orbit-basis product of two single terms, coefficients included.
template <class C>
void mul_orbit_terms(const SetPartition &p1, const SetPartition &p2, const C &coeff,
                     const typename CoeffTraits<C>::Xi &xi, std::map<SetPartition, C> &out);

Element to_numeric(const SymElement &a, const Scalar &xi);
SymElement to_symbolic(const Element &a);

// Generators s_i, p_l (integer l), b_i = p_{i+1/2}.
struct Generator {
  enum class Kind { S, P, B };
  Kind kind = Kind::S;
  int index = 1;

  static Generator s(int i) { return {Kind::S, i}; }
  static Generator p(int i) { return {Kind::P, i}; }
  static Generator b(int i) { return {Kind::B, i}; }
  // "s1", "p2", "b1"
  static Generator parse(std::string_view text);
  std::string str() const;
};

Element generator(const Generator &which, const Level &level, const Scalar &xi);

// p_l for half-integer or integer l given as twice its value; p_{1/2}, p_{k+1/2} = I.
Element p_half_index(int twice_l, int k, const Scalar &xi);

// Test hook: overrides maps generator names ("s1", "p2", "b1") to replacements.
Report check_presentation(int k, const Scalar &xi,
                          const std::map<std::string, Element> &overrides = {});

} // namespace pa
