#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "mz/rational.hpp"
#include "mz/reptheory.hpp"

namespace mz {

using Complex = std::complex<double>;

/// Exact at integer arguments, floating point otherwise.
struct ZetaValue {
  std::optional<Rational> exact;
  Complex approx;

  static ZetaValue of(const Rational& r) { return {r, Complex(r.to_double(), 0.0)}; }
  static ZetaValue of(Complex z) { return {std::nullopt, z}; }
};

// sum over irreps of dim^{-s}
Rational zeta(const CharacterTable& t, long s);
Complex zeta(const CharacterTable& t, Complex s);

Rational zeta_closed(GroupKind kind, int q, long s);
Complex zeta_closed(GroupKind kind, int q, Complex s);

// sum over irreps of prod_j chi(gamma_j) / dim^{s+r}; class indices into t.group().
Rational zeta_insert(const CharacterTable& t, const std::vector<int>& classes, long s);
Complex zeta_insert(const CharacterTable& t, const std::vector<int>& classes, Complex s);

// Closed forms for the insertion patterns that have one; UsageError otherwise.
Rational zeta_insert_closed(const Group& g, const std::vector<int>& classes, long s);
Complex zeta_insert_closed(const Group& g, const std::vector<int>& classes, Complex s);
// Whether zeta_insert_closed accepts this insertion list.
bool has_insert_closed_form(const Group& g, const std::vector<int>& classes);

// Restriction to irreps with the given Frobenius-Schur indicator.
Rational zeta_fs(const CharacterTable& t, int indicator, long s);
Complex zeta_fs(const CharacterTable& t, int indicator, Complex s);
Rational zeta_fs_closed(GroupKind kind, int q, int indicator, long s);
Complex zeta_fs_closed(GroupKind kind, int q, int indicator, Complex s);

// Zeta function of the quantum double D(GL(2,F_q)), via centralizers.
Rational zeta_double(const CharacterTable& t, long s);
Complex zeta_double(const CharacterTable& t, Complex s);
Rational zeta_double_closed(int q, long s);
Complex zeta_double_closed(int q, Complex s);

}  // namespace mz
