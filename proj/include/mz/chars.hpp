#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "mz/cyclo.hpp"
#include "mz/ffield.hpp"

namespace mz {

/// Multiplicative character of F_q^x (ext = false, exponent mod q-1) or of
/// F_{q^2}^x (ext = true, exponent mod q^2-1). The character sends the fixed
/// primitive root to exp(2 pi i * exp / modulus).
struct MulChar {
  bool ext = false;
  long exp = 0;
  friend auto operator<=>(const MulChar&, const MulChar&) = default;
};

struct CharOrbit {
  MulChar rep;  // smallest exponent in the orbit
  int size = 1;
};

/// Character groups of F^x and E^x over a fixed quadratic extension.
/// All values are reported as powers of zeta_n with n = q^2 - 1.
class CharacterGroups {
 public:
  explicit CharacterGroups(std::shared_ptr<const QuadraticExtension> ext);

  const FiniteField& base() const { return ext_->base(); }
  const QuadraticExtension& ext() const { return *ext_; }
  const std::shared_ptr<const QuadraticExtension>& ext_ptr() const { return ext_; }
  int q() const { return q_; }
  long base_order() const { return q_ - 1; }
  long ext_order() const { return static_cast<long>(q_) * q_ - 1; }
  int conductor() const { return static_cast<int>(ext_order()); }

  std::vector<MulChar> all_chars(bool ext) const;
  MulChar trivial(bool ext) const { return {ext, 0}; }
  MulChar make(bool ext, long exponent) const;
  bool is_trivial(const MulChar& c) const { return c.exp == 0; }

  MulChar product(const MulChar& a, const MulChar& b) const;
  MulChar inverse(const MulChar& a) const;
  MulChar power(const MulChar& a, long k) const;
  // nu composed with Frobenius, i.e. nu^q.
  MulChar frobenius(const MulChar& nu) const;

  bool is_primitive(const MulChar& nu) const;
  MulChar restrict_to_base(const MulChar& nu) const;
  MulChar compose_norm(const MulChar& mu) const;

  // Order-two characters; q odd only.
  MulChar quadratic_char() const;
  MulChar epsilon_E() const;

  // mu ~ mu^{-1} orbits of base characters with mu^2 != 1.
  std::vector<CharOrbit> enumerate_M() const;
  // nu ~ nu^{-1} orbits of primitive nu trivial on F^x.
  std::vector<CharOrbit> enumerate_N() const;

  // k with chi(x) = zeta_n^k.
  long exponent_at(const MulChar& c, FieldElement x) const;
  long exponent_at(const MulChar& c, ExtElement x) const;
  CycNumber value(const MulChar& c, FieldElement x) const;
  CycNumber value(const MulChar& c, ExtElement x) const;

  // Characteristic function of F inside E.
  bool in_base(ExtElement x) const { return ext_->is_in_base_field(x); }

 private:
  long modulus(const MulChar& c) const { return c.ext ? ext_order() : base_order(); }

  std::shared_ptr<const QuadraticExtension> ext_;
  int q_ = 0;
  long base_in_ext_ = 0;  // m with embed(g) = G^{(q+1) m}
};

struct IdentityCheck {
  std::string name;
  long cases = 0;
  long failures = 0;
  bool ok() const { return failures == 0; }
};

// The orthogonality-type sums used to evaluate zeta functions with insertions,
// checked pointwise over all field elements.
std::vector<IdentityCheck> check_character_sum_identities(const CharacterGroups& ch);

}  // namespace mz
