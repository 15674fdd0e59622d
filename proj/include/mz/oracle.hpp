#pragma once

#include <memory>
#include <vector>

#include "mz/classfn.hpp"
#include "mz/grp.hpp"
#include "mz/rational.hpp"
#include "mz/reptheory.hpp"
#include "mz/topo.hpp"

namespace mz {

struct OracleConfig {
  EnumCaps caps;
  // Worker threads for the enumeration loops.
  int jobs = 1;
};

/// Brute-force counterpart of the formula paths. Builds everything from the
/// element list of the group; character values enter only in the FS, fusion
/// and induced-character sums, which are defined through them.
class Oracle {
 public:
  Oracle(std::shared_ptr<const Group> group, const OracleConfig& config = {});

  const Group& group() const { return *group_; }
  const GroupElements& elements() const { return *elems_; }
  const OracleConfig& config() const { return config_; }

  // theta(k) = |{(A, B) : ABA^-1B^-1 = k}|, by enumerating G^2.
  const ClassFunction& theta_torus() const;
  // theta(k) = |{h : h^2 = k}|.
  const ClassFunction& theta_square() const;
  // Preload theta values (e.g. from a cache); checked against the element count.
  void set_theta(const std::vector<Rational>& torus, const std::vector<Rational>& square);
  bool has_theta_torus() const { return theta_torus_ != nullptr; }

  // a[i][j][k] = |{x in C_i : x^-1 z_k in C_j}| for a fixed z_k in C_k.
  long structure_constant(int i, int j, int k) const;
  // Unnormalized class convolution (f * g)(z) = sum_x f(x) g(x^-1 z), via structure constants.
  ClassFunction convolve(const ClassFunction& f, const ClassFunction& g) const;

  // |Hom| as a convolution of theta functions and class indicators, evaluated at e.
  Rational hom_count(const SurfaceSpec& spec) const;
  // |Hom| by enumerating all generator tuples (small cases only).
  Rational direct_hom_count(const SurfaceSpec& spec) const;
  // Conjugation orbits on Hom: Burnside over centralizer fixed sets.
  Rational quotient_count_burnside(const SurfaceSpec& spec) const;
  // Conjugation orbits on Hom: explicit partition of the enumerated Hom-set.
  Rational quotient_count_orbits(const SurfaceSpec& spec) const;

  // (1/|G|) sum_g chi(g^2) as an element sum.
  Rational fs(const CharacterTable& t, int irrep) const;
  // (1/|G|) sum_g chi_i chi_j chi_k (g), unconjugated.
  Rational triple(const CharacterTable& t, int i, int j, int k) const;
  // Multiplicity of k in i (x) j: (1/|G|) sum_g chi_i chi_j conj(chi_k) (g).
  Rational fusion(const CharacterTable& t, int i, int j, int k) const;
  // (1/|H|) sum_{x in G, x gamma x^-1 in H} rho(x gamma x^-1).
  CycNumber induced_char_value(const AbelianCentralizer& h, long rho, int gamma_cls) const;

 private:
  void build_structure_constants() const;
  std::vector<long> centralizer_of(long k) const;
  Rational subgroup_hom_count(const std::vector<long>& sub, const SurfaceSpec& spec) const;
  void check_pairs(long count, const char* what) const;

  std::shared_ptr<const Group> group_;
  OracleConfig config_;
  std::unique_ptr<GroupElements> elems_;
  int conductor_;
  mutable std::unique_ptr<ClassFunction> theta_torus_;
  mutable std::unique_ptr<ClassFunction> theta_square_;
  mutable std::vector<long> structure_;
};

}  // namespace mz
