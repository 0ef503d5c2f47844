#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pa {

using Integer = mpz_class;

// Exact rational. Values whose numerator and denominator fit in int64 are
// kept inline; anything larger lives in a GMP rational. The representation
// is canonical, so equality is structural.
class Scalar {
public:
  Scalar() = default;
  Scalar(int v) : num_(v) {}
  Scalar(long v) : num_(v) { if (v == INT64_MIN) promote_int(v); }
  Scalar(long long v) : num_(v) { if (v == INT64_MIN) promote_int(v); }
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(const mpz_class &v);
  explicit Scalar(const mpq_class &v);

  Scalar(const Scalar &o);
  Scalar(Scalar &&o) noexcept = default;
  Scalar &operator=(const Scalar &o);
  Scalar &operator=(Scalar &&o) noexcept = default;
  ~Scalar() = default;

  // "p/q" or "p"; whitespace around the value is ignored.
  static Scalar parse(std::string_view text);

  std::string str() const;
  mpq_class to_mpq() const;
  Integer numerator() const;
  Integer denominator() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  Scalar operator-() const;
  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  Scalar &operator/=(const Scalar &o);

  // this += a * b without a temporary on the inline path
  void add_mul(const Scalar &a, const Scalar &b);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

  friend bool operator==(const Scalar &a, const Scalar &b);
  friend std::strong_ordering operator<=>(const Scalar &a, const Scalar &b);

  Scalar pow(unsigned e) const;

  // Residue modulo the prime 2^61 - 1; throws std::domain_error when the
  // denominator is divisible by it.
  std::uint64_t mod_m61() const;

private:
  void promote_int(std::int64_t v);
  void set_big(mpq_class q);
  bool small() const { return !big_; }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

// (x)_ell = x (x-1) ... (x-ell+1)
Scalar falling_factorial(const Scalar &x, unsigned ell);
Scalar factorial(unsigned m);
Scalar binomial(long n, long r);

// Polynomial in the indeterminate xi, lowest degree first.
class SymScalar {
public:
  SymScalar() = default;
  SymScalar(const Scalar &c);
  SymScalar(int c) : SymScalar(Scalar(c)) {}
  explicit SymScalar(std::vector<Scalar> coeffs);

  static SymScalar xi();

  const std::vector<Scalar> &coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Scalar coeff(std::size_t d) const { return d < c_.size() ? c_[d] : Scalar(); }

  SymScalar operator-() const;
  SymScalar &operator+=(const SymScalar &o);
  SymScalar &operator-=(const SymScalar &o);
  SymScalar &operator*=(const SymScalar &o);
  void add_mul(const SymScalar &a, const SymScalar &b);

  friend SymScalar operator+(SymScalar a, const SymScalar &b) { return a += b; }
  friend SymScalar operator-(SymScalar a, const SymScalar &b) { return a -= b; }
  friend SymScalar operator*(const SymScalar &a, const SymScalar &b);
  friend bool operator==(const SymScalar &a, const SymScalar &b) = default;

  std::string str() const;

private:
  void trim();
  std::vector<Scalar> c_;
};

std::ostream &operator<<(std::ostream &os, const SymScalar &s);

SymScalar falling_factorial(const SymScalar &x, unsigned ell);
Scalar eval(const SymScalar &p, const Scalar &x);

} // namespace pa
