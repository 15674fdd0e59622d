#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace mz {

/// Element of F_q, addressed by its rank in the canonical order
/// (lexicographic on polynomial-basis coefficients, constant term first).
struct FieldElement {
  std::uint32_t v = 0;
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// Element a + b*t of F_{q^2}, where t is delta (q odd, t^2 = Delta) or
/// omega (q even, t^2 = t + Omega). Rank is a*q + b with a, b base ranks.
struct ExtElement {
  std::uint32_t v = 0;
  friend auto operator<=>(ExtElement, ExtElement) = default;
};

struct PrimePower {
  int p = 0;
  int e = 0;
  long q = 0;
};

// Factor q as p^e; nullopt when q is not a prime power >= 2.
std::optional<PrimePower> factor_prime_power(long q);
bool is_prime(long n);
std::vector<long> prime_factors(long n);

struct FieldCaps {
  long max_q = 1L << 20;
  // |F_{q^2}| bound for the table-backed extension.
  long max_ext_order = 1L << 22;
};

class FiniteField {
 public:
  static std::shared_ptr<const FiniteField> build(int p, int e, const FieldCaps& caps = {});
  static std::shared_ptr<const FiniteField> build_q(long q, const FieldCaps& caps = {});

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  // Defining polynomial, low degree first, monic.
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return one_; }
  FieldElement primitive_root() const { return exp_[1 % (q_ - 1)]; }

  FieldElement from_coeffs(std::span<const int> c) const;
  std::vector<int> coeffs(FieldElement x) const;
  // Image of an integer in the prime subfield.
  FieldElement from_int(long k) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, long k) const;

  // Discrete log against primitive_root(), in [0, q-1). Throws on zero.
  long dlog(FieldElement x) const;
  FieldElement exp(long k) const;
  long order(FieldElement x) const;
  // Every element is a square when q is even; zero counts as a square.
  bool is_square(FieldElement x) const;
  // Tr_{F_q/F_p}(x) as an integer in [0, p).
  int absolute_trace(FieldElement x) const { return abs_trace_[x.v]; }

 private:
  FiniteField() = default;

  int p_ = 0;
  int e_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  FieldElement one_;
  std::vector<FieldElement> exp_;
  std::vector<std::int32_t> log_;
  std::vector<std::uint32_t> add_table_;  // only for small composite fields
  std::vector<int> abs_trace_;
};

class QuadraticExtension {
 public:
  static std::shared_ptr<const QuadraticExtension> build(std::shared_ptr<const FiniteField> base,
                                                         const FieldCaps& caps = {});

  const FiniteField& base() const { return *base_; }
  const std::shared_ptr<const FiniteField>& base_ptr() const { return base_; }
  int q() const { return base_->q(); }
  long order() const { return static_cast<long>(q()) * q(); }
  bool odd() const { return odd_; }
  // Delta (q odd) or Omega (q even).
  FieldElement nonresidue() const { return nonresidue_; }
  // delta or omega.
  ExtElement generator_t() const { return make(base_->zero(), base_->one()); }

  ExtElement make(FieldElement a, FieldElement b) const { return {a.v * static_cast<std::uint32_t>(q()) + b.v}; }
  FieldElement a(ExtElement x) const { return {x.v / static_cast<std::uint32_t>(q())}; }
  FieldElement b(ExtElement x) const { return {x.v % static_cast<std::uint32_t>(q())}; }
  ExtElement embed(FieldElement x) const { return make(x, base_->zero()); }
  bool is_in_base_field(ExtElement x) const { return b(x) == base_->zero(); }

  ExtElement zero() const { return {0}; }
  ExtElement one() const { return embed(base_->one()); }
  ExtElement add(ExtElement x, ExtElement y) const;
  ExtElement neg(ExtElement x) const;
  ExtElement mul(ExtElement x, ExtElement y) const;
  ExtElement inv(ExtElement x) const;
  ExtElement pow(ExtElement x, long k) const;

  ExtElement frobenius(ExtElement x) const;
  FieldElement norm(ExtElement x) const;
  FieldElement trace(ExtElement x) const;

  ExtElement primitive_root() const { return exp_[1]; }
  long dlog(ExtElement x) const;
  ExtElement exp(long k) const;
  // k with N(G) = g^k, G and g the fixed primitive roots.
  long norm_log() const { return norm_log_; }
  bool is_square(ExtElement x) const;

 private:
  QuadraticExtension() = default;
  ExtElement mul_slow(ExtElement x, ExtElement y) const;

  std::shared_ptr<const FiniteField> base_;
  bool odd_ = true;
  FieldElement nonresidue_;
  std::vector<ExtElement> exp_;
  std::vector<std::int32_t> log_;
  long norm_log_ = 0;
};

}  // namespace mz
