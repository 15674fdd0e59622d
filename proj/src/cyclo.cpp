#include "mz/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "mz/errors.hpp"

namespace mz {

struct CyclotomicBasis {
  int n = 1;
  int phi = 1;
  // reduced[k] = zeta_n^k in the power basis, sparse (index, coefficient).
  std::vector<std::vector<std::pair<int, std::int64_t>>> reduced;
};

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::vector<std::int64_t>>& poly_cache() {
  static std::map<int, std::vector<std::int64_t>> cache;
  return cache;
}

std::map<int, std::shared_ptr<const CyclotomicBasis>>& basis_cache() {
  static std::map<int, std::shared_ptr<const CyclotomicBasis>> cache;
  return cache;
}

// Caller holds the registry lock.
const std::vector<std::int64_t>& cyclotomic_locked(int n) {
  auto& cache = poly_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto div = cyclotomic_locked(d);
    const int dd = static_cast<int>(div.size()) - 1;
    const int top = static_cast<int>(num.size()) - 1;
    std::vector<std::int64_t> quot(static_cast<std::size_t>(top - dd + 1), 0);
    for (int k = top; k >= dd; --k) {
      const std::int64_t c = num[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      quot[static_cast<std::size_t>(k - dd)] = c;
      for (int i = 0; i <= dd; ++i) num[static_cast<std::size_t>(k - dd + i)] -= c * div[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < dd; ++i) {
      if (num[static_cast<std::size_t>(i)] != 0) throw ConsistencyError("cyclotomic division left a remainder");
    }
    num = std::move(quot);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

std::shared_ptr<const CyclotomicBasis> basis_for(int n) {
  if (n < 1) throw UsageError("cyclotomic conductor must be >= 1, got " + std::to_string(n));
  std::lock_guard lock(registry_mutex());
  auto& cache = basis_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  const auto& phi_poly = cyclotomic_locked(n);
  auto b = std::make_shared<CyclotomicBasis>();
  b->n = n;
  b->phi = static_cast<int>(phi_poly.size()) - 1;
  b->reduced.resize(static_cast<std::size_t>(n));
  // Dense running remainder of x^k mod Phi_n.
  std::vector<std::int64_t> cur(static_cast<std::size_t>(b->phi), 0);
  if (b->phi == 0) throw ConsistencyError("degenerate cyclotomic polynomial");
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    auto& out = b->reduced[static_cast<std::size_t>(k)];
    for (int i = 0; i < b->phi; ++i) {
      if (cur[static_cast<std::size_t>(i)] != 0) out.emplace_back(i, cur[static_cast<std::size_t>(i)]);
    }
    // multiply by x
    const std::int64_t top = cur[static_cast<std::size_t>(b->phi - 1)];
    for (int i = b->phi - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < b->phi; ++i) cur[static_cast<std::size_t>(i)] -= top * phi_poly[static_cast<std::size_t>(i)];
    }
  }
  cache.emplace(n, b);
  return b;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  if (n < 1) throw UsageError("cyclotomic index must be >= 1");
  std::lock_guard lock(registry_mutex());
  return cyclotomic_locked(n);
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CycNumber::CycNumber(int n) : n_(n), basis_(basis_for(n)), coeffs_(static_cast<std::size_t>(basis_->phi)) {}

CycNumber::CycNumber(int n, const Rational& value) : CycNumber(n) { coeffs_[0] = value; }

CycNumber CycNumber::root_of_unity(int n, long k) {
  CycNumber z(n);
  z.add_root(k, Rational(1));
  return z;
}

void CycNumber::add_root(long k, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [i, a] : basis_->reduced[static_cast<std::size_t>(mod(k, n_))]) {
    coeffs_[static_cast<std::size_t>(i)] += c * Rational(a);
  }
}

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::optional<Rational> CycNumber::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return std::nullopt;
  }
  return coeffs_[0];
}

std::complex<double> CycNumber::to_complex() const {
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / n_;
    sum += coeffs_[i].to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

CycNumber CycNumber::conj() const {
  CycNumber r(n_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    r.add_root(-static_cast<long>(i), coeffs_[i]);
  }
  return r;
}

CycNumber CycNumber::lift(int m) const {
  if (m % n_ != 0) {
    throw UsageError("cannot lift Q(zeta_" + std::to_string(n_) + ") into Q(zeta_" + std::to_string(m) + ")");
  }
  if (m == n_) return *this;
  const long step = m / n_;
  CycNumber r(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.add_root(static_cast<long>(i) * step, coeffs_[i]);
  return r;
}

void CycNumber::check_same(const CycNumber& o) const {
  if (n_ != o.n_) {
    throw UsageError("mixed cyclotomic conductors " + std::to_string(n_) + " and " + std::to_string(o.n_));
  }
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!o.coeffs_[i].is_zero()) coeffs_[i] += o.coeffs_[i];
  }
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!o.coeffs_[i].is_zero()) coeffs_[i] -= o.coeffs_[i];
  }
  return *this;
}

CycNumber operator+(const CycNumber& a, const CycNumber& b) {
  CycNumber r = a;
  r += b;
  return r;
}

CycNumber operator-(const CycNumber& a, const CycNumber& b) {
  CycNumber r = a;
  r -= b;
  return r;
}

CycNumber operator*(const CycNumber& a, const Rational& s) {
  CycNumber r = a;
  if (s.is_zero()) {
    for (auto& c : r.coeffs_) c = Rational();
    return r;
  }
  for (auto& c : r.coeffs_) {
    if (!c.is_zero()) c *= s;
  }
  return r;
}

namespace {

bool small_integral(const std::vector<Rational>& v) {
  for (const auto& c : v) {
    if (!c.is_small() || !c.is_integer()) return false;
  }
  return true;
}

}  // namespace

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  a.check_same(b);
  const int phi = a.basis_->phi;
  const int n = a.n_;
  const auto& red = a.basis_->reduced;
  CycNumber r(n);
  if (small_integral(a.coeffs_) && small_integral(b.coeffs_)) {
    // Character values live in Z[zeta_n]; keep the whole product in 128-bit integers.
    std::vector<__int128> prod(static_cast<std::size_t>(2 * phi - 1), 0);
    for (int i = 0; i < phi; ++i) {
      const std::int64_t ai = a.coeffs_[static_cast<std::size_t>(i)].to_int64();
      if (ai == 0) continue;
      for (int j = 0; j < phi; ++j) {
        const std::int64_t bj = b.coeffs_[static_cast<std::size_t>(j)].to_int64();
        if (bj != 0) prod[static_cast<std::size_t>(i + j)] += static_cast<__int128>(ai) * bj;
      }
    }
    std::vector<__int128> out(static_cast<std::size_t>(phi), 0);
    for (int d = 0; d < 2 * phi - 1; ++d) {
      const __int128 c = prod[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      if (d < phi) {
        out[static_cast<std::size_t>(d)] += c;
      } else {
        for (const auto& [i, coef] : red[static_cast<std::size_t>(d % n)]) out[static_cast<std::size_t>(i)] += c * coef;
      }
    }
    constexpr __int128 lim = static_cast<__int128>(1) << 62;
    bool ok = true;
    for (auto v : out) ok = ok && v < lim && v > -lim;
    if (ok) {
      for (int i = 0; i < phi; ++i) r.coeffs_[static_cast<std::size_t>(i)] = Rational(static_cast<std::int64_t>(out[static_cast<std::size_t>(i)]));
      return r;
    }
  }
  std::vector<Rational> prod(static_cast<std::size_t>(2 * phi - 1));
  for (int i = 0; i < phi; ++i) {
    const Rational& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; j < phi; ++j) {
      const Rational& bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (!bj.is_zero()) prod[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  for (int d = 0; d < 2 * phi - 1; ++d) {
    const Rational& c = prod[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    if (d < phi) {
      r.coeffs_[static_cast<std::size_t>(d)] += c;
    } else {
      for (const auto& [i, coef] : red[static_cast<std::size_t>(d % n)]) r.coeffs_[static_cast<std::size_t>(i)] += c * Rational(coef);
    }
  }
  return r;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
}

}  // namespace mz
