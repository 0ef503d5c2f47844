#include "pa/scalar.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace pa {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0)
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from128(i128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool mpz_fits64(const mpz_class &z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63;
}

std::int64_t mpz_to64(const mpz_class &z) {
  // caller guarantees fit; long is 64-bit on the supported platforms
  return static_cast<std::int64_t>(z.get_si());
}

} // namespace

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0)
    throw std::domain_error("zero denominator");
  if (num == INT64_MIN || den == INT64_MIN) {
    set_big(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Scalar::Scalar(const mpz_class &v) { set_big(mpq_class(v)); }

Scalar::Scalar(const mpq_class &v) {
  mpq_class q(v);
  q.canonicalize();
  set_big(std::move(q));
}

Scalar::Scalar(const Scalar &o) : num_(o.num_), den_(o.den_) {
  if (o.big_)
    big_ = std::make_unique<mpq_class>(*o.big_);
}

Scalar &Scalar::operator=(const Scalar &o) {
  if (this == &o)
    return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_)
    big_ = std::make_unique<mpq_class>(*o.big_);
  else
    big_.reset();
  return *this;
}

void Scalar::promote_int(std::int64_t v) {
  set_big(mpq_class(mpz_class(static_cast<long>(v))));
}

void Scalar::set_big(mpq_class q) {
  const mpz_class &n = q.get_num();
  const mpz_class &d = q.get_den();
  if (mpz_fits64(n) && mpz_fits64(d)) {
    num_ = mpz_to64(n);
    den_ = mpz_to64(d);
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(q));
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.empty())
    throw std::invalid_argument("empty scalar");
  auto valid_int = [](std::string_view t) {
    std::size_t i = 0;
    if (!t.empty() && (t[0] == '-' || t[0] == '+'))
      i = 1;
    if (i == t.size())
      return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  if (num[0] == '+')
    num.erase(0, 1);
  if (den[0] == '+')
    den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const {
  if (big_) {
    std::string out = big_->get_num().get_str();
    if (big_->get_den() != 1)
      out += "/" + big_->get_den().get_str();
    return out;
  }
  std::string out = std::to_string(num_);
  if (den_ != 1)
    out += "/" + std::to_string(den_);
  return out;
}

mpq_class Scalar::to_mpq() const {
  if (big_)
    return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Integer Scalar::numerator() const {
  return big_ ? big_->get_num() : Integer(static_cast<long>(num_));
}

Integer Scalar::denominator() const {
  return big_ ? big_->get_den() : Integer(static_cast<long>(den_));
}

namespace {

constexpr std::uint64_t kM61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = (static_cast<std::uint64_t>(t) & kM61) + static_cast<std::uint64_t>(t >> 61);
  return r >= kM61 ? r - kM61 : r;
}

std::uint64_t powmod61(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod61(a, a))
    if (e & 1)
      r = mulmod61(r, a);
  return r;
}

std::uint64_t residue61(std::int64_t v) {
  std::int64_t r = v % static_cast<std::int64_t>(kM61);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(kM61) : r);
}

std::uint64_t residue61(const mpz_class &v) {
  mpz_class r = v % mpz_class(static_cast<unsigned long>(kM61));
  if (r < 0)
    r += static_cast<unsigned long>(kM61);
  return r.get_ui();
}

} // namespace

std::uint64_t Scalar::mod_m61() const {
  std::uint64_t n = big_ ? residue61(big_->get_num()) : residue61(num_);
  std::uint64_t d = big_ ? residue61(big_->get_den()) : residue61(den_);
  if (d == 0)
    throw std::domain_error("denominator divisible by 2^61-1");
  return d == 1 ? n : mulmod61(n, powmod61(d, kM61 - 2));
}

bool Scalar::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Scalar::sign() const {
  if (big_)
    return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Scalar Scalar::operator-() const {
  Scalar r;
  if (big_) {
    r.set_big(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Scalar &Scalar::operator+=(const Scalar &o) {
  if (small() && o.small()) {
    if (den_ == 1 && o.den_ == 1) {
      i128 s = static_cast<i128>(num_) + o.num_;
      if (fits(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
      set_big(mpq_class(mpz_from128(s)));
      return *this;
    }
    i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
    i128 d = static_cast<i128>(den_) * o.den_;
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    u128 g = gcd128(uabs(n), static_cast<u128>(d));
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    set_big(mpq_class(mpz_from128(n), mpz_from128(d)));
    return *this;
  }
  set_big(to_mpq() + o.to_mpq());
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) { return *this += -o; }

Scalar &Scalar::operator*=(const Scalar &o) {
  if (small() && o.small()) {
    if (num_ == 0)
      return *this;
    if (o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t a = num_, b = den_, c = o.num_, d = o.den_;
    if (b != 1 || d != 1) {
      std::int64_t g1 = std::gcd(a < 0 ? -a : a, d);
      std::int64_t g2 = std::gcd(c < 0 ? -c : c, b);
      a /= g1;
      d /= g1;
      c /= g2;
      b /= g2;
    }
    i128 n = static_cast<i128>(a) * c;
    i128 q = static_cast<i128>(b) * d;
    if (fits(n) && fits(q)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(q);
      return *this;
    }
    set_big(mpq_class(mpz_from128(n), mpz_from128(q)));
    return *this;
  }
  set_big(to_mpq() * o.to_mpq());
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) {
  if (o.is_zero())
    throw std::domain_error("division by zero");
  if (o.small()) {
    Scalar inv;
    inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
    inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
    return *this *= inv;
  }
  set_big(to_mpq() / o.to_mpq());
  return *this;
}

void Scalar::add_mul(const Scalar &a, const Scalar &b) {
  if (small() && a.small() && b.small() && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    i128 s = static_cast<i128>(a.num_) * b.num_ + num_;
    if (fits(s)) {
      num_ = static_cast<std::int64_t>(s);
      return;
    }
  }
  Scalar t(a);
  t *= b;
  *this += t;
}

bool operator==(const Scalar &a, const Scalar &b) {
  if (a.small() && b.small())
    return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.small() != b.small())
    return false;
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Scalar &a, const Scalar &b) {
  if (a.small() && b.small()) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar r(1), b(*this);
  while (e) {
    if (e & 1u)
      r *= b;
    e >>= 1;
    if (e)
      b *= b;
  }
  return r;
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.str(); }

Scalar falling_factorial(const Scalar &x, unsigned ell) {
  Scalar r(1);
  Scalar t(x);
  for (unsigned i = 0; i < ell; ++i) {
    r *= t;
    if (r.is_zero())
      break;
    t -= Scalar(1);
  }
  return r;
}

Scalar factorial(unsigned m) { return falling_factorial(Scalar(static_cast<long>(m)), m); }

Scalar binomial(long n, long r) {
  if (r < 0 || n < 0 || r > n)
    return Scalar();
  Scalar out(1);
  for (long i = 1; i <= r; ++i) {
    out *= Scalar(n - r + i);
    out /= Scalar(i);
  }
  return out;
}

SymScalar::SymScalar(const Scalar &c) {
  if (!c.is_zero())
    c_.push_back(c);
}

SymScalar::SymScalar(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

SymScalar SymScalar::xi() { return SymScalar(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

void SymScalar::trim() {
  while (!c_.empty() && c_.back().is_zero())
    c_.pop_back();
}

SymScalar SymScalar::operator-() const {
  SymScalar r(*this);
  for (auto &c : r.c_)
    c = -c;
  return r;
}

SymScalar &SymScalar::operator+=(const SymScalar &o) {
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] += o.c_[i];
  trim();
  return *this;
}

SymScalar &SymScalar::operator-=(const SymScalar &o) { return *this += -o; }

SymScalar operator*(const SymScalar &a, const SymScalar &b) {
  if (a.is_zero() || b.is_zero())
    return SymScalar();
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j].add_mul(a.c_[i], b.c_[j]);
  return SymScalar(std::move(out));
}

SymScalar &SymScalar::operator*=(const SymScalar &o) {
  *this = *this * o;
  return *this;
}

void SymScalar::add_mul(const SymScalar &a, const SymScalar &b) { *this += a * b; }

std::string SymScalar::str() const {
  if (c_.empty())
    return "0";
  std::string out;
  for (std::size_t d = c_.size(); d-- > 0;) {
    const Scalar &c = c_[d];
    if (c.is_zero())
      continue;
    std::string mag = c.abs().str();
    if (!out.empty())
      out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0)
      out += "-";
    if (d == 0)
      out += mag;
    else {
      if (mag != "1")
        out += mag + "*";
      out += d == 1 ? "xi" : "xi^" + std::to_string(d);
    }
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const SymScalar &s) { return os << s.str(); }

SymScalar falling_factorial(const SymScalar &x, unsigned ell) {
  SymScalar r(Scalar(1));
  for (unsigned i = 0; i < ell; ++i)
    r *= x - SymScalar(Scalar(static_cast<long>(i)));
  return r;
}

Scalar eval(const SymScalar &p, const Scalar &x) {
  Scalar r;
  const auto &c = p.coeffs();
  for (std::size_t d = c.size(); d-- > 0;) {
    r *= x;
    r += c[d];
  }
  return r;
}

} // namespace pa
