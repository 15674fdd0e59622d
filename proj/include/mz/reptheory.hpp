#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mz/chars.hpp"
#include "mz/cyclo.hpp"
#include "mz/grp.hpp"
#include "mz/rational.hpp"

namespace mz {

enum class IrrepType : int { Linear = 1, Principal = 2, Steinberg = 3, Cuspidal = 4 };

/// Irreducible representation of GL(2,F_q), by parameters:
///   Linear(mu = a), Principal(mu1 = a, mu2 = b) with a < b, Steinberg(mu = a)
///   (all base-character exponents), Cuspidal(nu = a) with a the smaller of the
///   exponents of nu and conj nu. PGL(2) irreps are the GL(2) irreps with trivial
///   central character and use the same encoding.
struct Irrep {
  IrrepType type = IrrepType::Linear;
  long a = 0;
  long b = 0;
  friend auto operator<=>(const Irrep&, const Irrep&) = default;
};

long irrep_dimension(const Irrep& pi, int q);
Irrep canonical_irrep(const CharacterGroups& ch, Irrep pi);
std::vector<Irrep> enumerate_irreps_gl(const CharacterGroups& ch);
std::vector<Irrep> enumerate_irreps_pgl(const CharacterGroups& ch);
// Central character as a base-character exponent.
long central_character(const CharacterGroups& ch, const Irrep& pi);
// Character value on a GL(2) class label (PGL classes pass their canonical lift).
CycNumber char_value(const CharacterGroups& ch, const Irrep& pi, const ConjClass& c);
// Frobenius-Schur indicator from the case rules (+1 or 0; -1 never occurs).
int fs_indicator_rule(const CharacterGroups& ch, const Irrep& pi, bool pgl);
Irrep contragredient(const CharacterGroups& ch, const Irrep& pi);
// chi_mu tensor pi.
Irrep twist(const CharacterGroups& ch, const Irrep& pi, long mu);
std::string irrep_label(const Irrep& pi);
// Inverse of irrep_label; parameters are not canonicalized.
Irrep parse_irrep_label(std::string_view label);

/// <pi pi'> and <pi pi' pi''> from the closed formulas. The triple version
/// rejects Linear arguments; closed_form_bracket first strips Linear factors
/// through the tensoring rules.
Rational closed_form_pair(const CharacterGroups& ch, const Irrep& x, const Irrep& y);
Rational closed_form_triple(const CharacterGroups& ch, const Irrep& x, const Irrep& y, const Irrep& z);
Rational closed_form_bracket(const CharacterGroups& ch, const Irrep& x, const Irrep& y, const Irrep& z);

class CharacterTable {
 public:
  static std::shared_ptr<const CharacterTable> build(std::shared_ptr<const Group> group);

  const Group& group() const { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const { return group_; }
  const CharacterGroups& chars() const { return chars_; }
  int conductor() const { return chars_.conductor(); }

  int num_irreps() const { return static_cast<int>(irreps_.size()); }
  const std::vector<Irrep>& irreps() const { return irreps_; }
  const Irrep& irrep(int i) const { return irreps_.at(static_cast<std::size_t>(i)); }
  int irrep_index(const Irrep& pi) const;
  long dim(int i) const { return dims_.at(static_cast<std::size_t>(i)); }
  int fs(int i) const { return fs_.at(static_cast<std::size_t>(i)); }
  int contragredient_index(int i) const { return contra_.at(static_cast<std::size_t>(i)); }
  const CycNumber& value(int irrep, int cls) const {
    return values_[static_cast<std::size_t>(irrep) * group_->classes().size() + static_cast<std::size_t>(cls)];
  }

  // (1/|G|) sum_c |c| chi(c^2), exact.
  Rational fs_by_sum(int i) const;
  // (1/|G|) sum_c |c| chi chi' chi'' (c), unconjugated.
  Rational triple_bracket(int i, int j, int k) const;
  Rational pair_bracket(int i, int j) const;
  // Multiplicity of irrep k in i (x) j.
  long fusion_coeff(int i, int j, int k) const;

 private:
  CharacterTable(std::shared_ptr<const Group> group);

  std::shared_ptr<const Group> group_;
  CharacterGroups chars_;
  std::vector<Irrep> irreps_;
  std::vector<long> dims_;
  std::vector<int> fs_;
  std::vector<int> contra_;
  std::vector<CycNumber> values_;
};

}  // namespace mz
