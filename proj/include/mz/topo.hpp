#pragma once

#include <vector>

#include "mz/cyclo.hpp"
#include "mz/grp.hpp"
#include "mz/rational.hpp"
#include "mz/reptheory.hpp"

namespace mz {

/// Closed surface of the given genus with disks removed; each boundary circle
/// carries a prescribed holonomy class (class index into the group).
struct SurfaceSpec {
  bool orientable = true;
  long genus = 0;
  std::vector<int> boundaries;

  // 2 - 2g or 2 - g, before removing disks.
  long euler_characteristic() const { return orientable ? 2 - 2 * genus : 2 - genus; }
  void validate(const Group& g) const;
};

enum class CountKind { Raw, PerGroupOrder, Quotient };

struct HomCount {
  Rational value;
  CountKind kind = CountKind::Raw;
};

// |Hom(pi_1, G)| with boundary holonomies in the prescribed classes.
HomCount hom_count(const CharacterTable& t, const SurfaceSpec& spec);
// The same divided by |G|.
HomCount hom_count_per_order(const CharacterTable& t, const SurfaceSpec& spec);
// Number of conjugation orbits on the Hom-set (GL(2) only), via the centralizer decomposition.
HomCount quotient_count(const CharacterTable& t, const SurfaceSpec& spec);

/// Centralizer C(k) of a non-central GL(2) class representative, which is
/// abelian, with its character group. Characters are indexed 0..order-1 and
/// take values in Q(zeta_{p(q^2-1)}).
///   split torus  diag(a, d)          rho_(i,j) = mu_i(a) mu_j(d)
///   unipotent    [[a, b], [0, a]]    rho_(i,t) = mu_i(a) psi(t b / a),  psi = additive character
///   elliptic     a I + c M           rho_e = nu_e(a + c lambda)
class AbelianCentralizer {
 public:
  AbelianCentralizer(std::shared_ptr<const Group> group, int cls);

  const Group& group() const { return *group_; }
  int centralized_class() const { return cls_; }
  CentralizerKind kind() const { return kind_; }
  long order() const { return static_cast<long>(elements_.size()); }
  const std::vector<Mat2>& elements() const { return elements_; }
  int conductor() const { return conductor_; }

  // Exponent k with rho(h) = zeta_conductor^k.
  long exponent(long rho, const Mat2& h) const;
  CycNumber character(long rho, const Mat2& h) const;
  // rho^2 = 1, equivalently nu_2(rho) = 1 (abelian groups have no quaternionic characters).
  bool is_real(long rho) const;
  // Sum of rho over H meet the class of gamma.
  CycNumber class_sum(long rho, int gamma_cls) const;
  bool contains(const Mat2& h) const;

 private:
  std::shared_ptr<const Group> group_;
  int cls_;
  CentralizerKind kind_;
  int conductor_;
  ExtElement lambda_{};
  std::vector<Mat2> elements_;
  std::vector<int> element_class_;
};

// Tr Ind_H^G(rho)(gamma) = (|C(gamma)| / |H|) sum_{h in H, h ~ gamma} rho(h).
CycNumber induced_char_value(const AbelianCentralizer& h, long rho, int gamma_cls);

}  // namespace mz
