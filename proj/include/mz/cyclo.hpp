#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mz/rational.hpp"

namespace mz {

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
/// Cached; the returned reference stays valid for the program lifetime.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

int euler_phi(int n);

struct CyclotomicBasis;

/// Exact element of Q(zeta_n), stored in the power basis 1, zeta, ..., zeta^{phi(n)-1}
/// (canonical remainder modulo Phi_n). Equality is coefficient equality.
class CycNumber {
 public:
  CycNumber() : CycNumber(1) {}
  explicit CycNumber(int n);
  CycNumber(int n, const Rational& value);

  static CycNumber root_of_unity(int n, long k);

  int conductor() const { return n_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;
  std::complex<double> to_complex() const;

  CycNumber conj() const;
  // Embed into Q(zeta_m) for a multiple m of the conductor.
  CycNumber lift(int m) const;

  CycNumber operator-() const;
  friend CycNumber operator+(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator-(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(const CycNumber& a, const Rational& r);
  friend CycNumber operator*(const Rational& r, const CycNumber& a) { return a * r; }
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }
  CycNumber& operator*=(const Rational& r) { return *this = *this * r; }

  // this += c * zeta^k, without materialising the root of unity.
  void add_root(long k, const Rational& c);

  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

 private:
  void check_same(const CycNumber& o) const;

  int n_;
  std::shared_ptr<const CyclotomicBasis> basis_;
  std::vector<Rational> coeffs_;
};

}  // namespace mz
