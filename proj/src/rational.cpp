#include "mz/rational.hpp"

#include <limits>
#include <ostream>

#include "mz/errors.hpp"

namespace mz {
namespace {

using u128 = unsigned __int128;

u128 abs128(__int128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class mpz_from_i128(__int128 v) {
  u128 m = abs128(v);
  auto hi = static_cast<std::uint64_t>(m >> 64);
  auto lo = static_cast<std::uint64_t>(m);
  mpz_class r = hi;
  r <<= 64;
  r += mpz_class(static_cast<unsigned long>(lo));
  if (v < 0) r = -r;
  return r;
}

mpz_class mpz_from_i64(std::int64_t v) {
  return mpz_from_i128(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw UsageError("rational with zero denominator");
  *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  const mpz_class& n = c.get_num();
  const mpz_class& d = c.get_den();
  if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
    num_ = n.get_si();
    den_ = d.get_si();
  } else {
    big_ = std::make_shared<const mpq_class>(std::move(c));
  }
}

Rational Rational::from_i128(__int128 n, __int128 d) {
  if (d == 0) throw UsageError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  if (d != 1) {
    u128 g = gcd128(abs128(n), u128(d));
    if (g > 1) {
      n /= static_cast<__int128>(g);
      d /= static_cast<__int128>(g);
    }
  }
  Rational r;
  if (fits64(n) && fits64(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_string(std::string_view s) {
  std::string str(s);
  mpq_class q;
  if (q.set_str(str, 10) != 0) throw UsageError("malformed rational: " + str);
  if (q.get_den() == 0) throw UsageError("rational with zero denominator: " + str);
  return Rational(q);
}

bool Rational::is_integer() const {
  if (!big_) return den_ == 1;
  return big_->get_den() == 1;
}

int Rational::sign() const {
  if (!big_) return (num_ > 0) - (num_ < 0);
  return sgn(*big_);
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from_i64(num_); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from_i64(den_); }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_from_i64(num_), mpz_from_i64(den_));
  return q;
}

double Rational::to_double() const {
  if (!big_) return static_cast<double>(num_) / static_cast<double>(den_);
  return big_->get_d();
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw ConsistencyError("rational " + to_string() + " is not an integer");
  if (!big_) return num_;
  throw ConsistencyError("integer " + to_string() + " exceeds int64");
}

std::string Rational::to_string() const {
  if (!big_) {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  return big_->get_str();
}

Rational Rational::operator-() const {
  if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational r = *this;
    r.num_ = -num_;
    return r;
  }
  return Rational(mpq_class(-to_mpq()));
}

Rational Rational::inverse() const {
  if (is_zero()) throw UsageError("inverse of zero rational");
  if (!big_) return from_i128(den_, num_);
  return Rational(mpq_class(1 / *big_));
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Rational result(1);
  Rational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      return Rational::from_i128(static_cast<__int128>(a.num_) + b.num_, 1);
    }
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      return Rational::from_i128(static_cast<__int128>(a.num_) - b.num_, 1);
    }
    __int128 n = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    return Rational::from_i128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw UsageError("division by zero rational");
  if (!a.big_ && !b.big_) {
    return Rational::from_i128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
  // Canonical forms: a value that fits inline is never stored big.
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace mz
