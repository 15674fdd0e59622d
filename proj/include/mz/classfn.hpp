#pragma once

#include <memory>
#include <vector>

#include "mz/cyclo.hpp"
#include "mz/grp.hpp"
#include "mz/reptheory.hpp"

namespace mz {

/// Function on the conjugacy classes of a group, with values in Q(zeta_n).
class ClassFunction {
 public:
  ClassFunction(std::shared_ptr<const Group> group, int conductor);

  static ClassFunction from_rationals(std::shared_ptr<const Group> group, int conductor,
                                      const std::vector<Rational>& values);
  // 1 on the class, 0 elsewhere.
  static ClassFunction indicator(std::shared_ptr<const Group> group, int conductor, int cls);
  static ClassFunction character(const CharacterTable& t, int irrep);
  // |G| sum_pi chi_pi / dim pi: number of (A, B) with ABA^-1B^-1 = k.
  static ClassFunction theta_torus_spectral(const CharacterTable& t);
  // sum_pi nu_2(pi) chi_pi: number of h with h^2 = k.
  static ClassFunction theta_square_spectral(const CharacterTable& t);

  const Group& group() const { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const { return group_; }
  int conductor() const { return conductor_; }
  int num_classes() const { return static_cast<int>(values_.size()); }
  const CycNumber& operator[](int c) const { return values_.at(static_cast<std::size_t>(c)); }
  CycNumber& operator[](int c) { return values_.at(static_cast<std::size_t>(c)); }
  const std::vector<CycNumber>& values() const { return values_; }
  // Value at the identity class.
  const CycNumber& at_identity() const { return (*this)[group_->identity_class()]; }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator*(const Rational& r) const;
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

  // a_pi = (1/|G|) sum_c |c| f(c) conj(chi_pi(c)); f = sum_pi a_pi chi_pi.
  std::vector<CycNumber> fourier(const CharacterTable& t) const;
  static ClassFunction from_fourier(const CharacterTable& t, const std::vector<CycNumber>& coeffs);
  // (f * g)(x) = (1/|G|) sum_y f(xy) g(y^-1), computed coefficientwise as a_pi b_pi / dim pi.
  ClassFunction convolve(const CharacterTable& t, const ClassFunction& g) const;

 private:
  void check_compatible(const ClassFunction& o) const;

  std::shared_ptr<const Group> group_;
  int conductor_;
  std::vector<CycNumber> values_;
};

}  // namespace mz
