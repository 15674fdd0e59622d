#include "mz/chars.hpp"

#include "mz/errors.hpp"

namespace mz {
namespace {

long lmod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

CharacterGroups::CharacterGroups(std::shared_ptr<const QuadraticExtension> ext) : ext_(std::move(ext)) {
  q_ = ext_->q();
  const long d = ext_->dlog(ext_->embed(ext_->base().primitive_root()));
  if (d % (q_ + 1) != 0) throw ConsistencyError("F^x is not the (q+1)-th powers of E^x");
  base_in_ext_ = d / (q_ + 1);
}

std::vector<MulChar> CharacterGroups::all_chars(bool ext) const {
  const long m = ext ? ext_order() : base_order();
  std::vector<MulChar> out;
  out.reserve(static_cast<std::size_t>(m));
  for (long a = 0; a < m; ++a) out.push_back({ext, a});
  return out;
}

MulChar CharacterGroups::make(bool ext, long exponent) const {
  MulChar c{ext, 0};
  c.exp = lmod(exponent, modulus(c));
  return c;
}

MulChar CharacterGroups::product(const MulChar& a, const MulChar& b) const {
  if (a.ext != b.ext) throw UsageError("product of characters of different groups");
  return make(a.ext, a.exp + b.exp);
}

MulChar CharacterGroups::inverse(const MulChar& a) const { return make(a.ext, -a.exp); }

MulChar CharacterGroups::power(const MulChar& a, long k) const {
  return make(a.ext, static_cast<long>((static_cast<__int128>(a.exp) * k) % modulus(a)));
}

MulChar CharacterGroups::frobenius(const MulChar& nu) const {
  if (!nu.ext) return nu;
  return power(nu, q_);
}

bool CharacterGroups::is_primitive(const MulChar& nu) const {
  if (!nu.ext) throw UsageError("primitivity is defined for characters of E^x");
  return nu.exp % (q_ + 1) != 0;
}

MulChar CharacterGroups::restrict_to_base(const MulChar& nu) const {
  if (!nu.ext) throw UsageError("restriction expects a character of E^x");
  return make(false, static_cast<long>((static_cast<__int128>(nu.exp) * base_in_ext_) % base_order()));
}

MulChar CharacterGroups::compose_norm(const MulChar& mu) const {
  if (mu.ext) throw UsageError("composition with the norm expects a character of F^x");
  const __int128 e = static_cast<__int128>(mu.exp) * ext_->norm_log() * (q_ + 1);
  return make(true, static_cast<long>(e % ext_order()));
}

MulChar CharacterGroups::quadratic_char() const {
  if (q_ % 2 == 0) throw UsageError("the quadratic character of F^x needs q odd");
  return {false, (q_ - 1) / 2};
}

MulChar CharacterGroups::epsilon_E() const {
  if (q_ % 2 == 0) throw UsageError("the quadratic character of E^x needs q odd");
  return {true, ext_order() / 2};
}

std::vector<CharOrbit> CharacterGroups::enumerate_M() const {
  std::vector<CharOrbit> out;
  const long m = base_order();
  for (long a = 1; a < m; ++a) {
    const long b = m - a;
    if ((2 * a) % m == 0 || b < a) continue;
    out.push_back({{false, a}, 2});
  }
  return out;
}

std::vector<CharOrbit> CharacterGroups::enumerate_N() const {
  std::vector<CharOrbit> out;
  const long n = ext_order();
  for (long b = 0; b < n; b += q_ - 1) {
    if (b % (q_ + 1) == 0) continue;
    if (n - b < b) continue;
    out.push_back({{true, b}, (2 * b) % n == 0 ? 1 : 2});
  }
  return out;
}

long CharacterGroups::exponent_at(const MulChar& c, FieldElement x) const {
  const long n = ext_order();
  const long d = base().dlog(x);
  if (!c.ext) return static_cast<long>((static_cast<__int128>(c.exp) * d * (q_ + 1)) % n);
  // F^x sits in E^x as the (q+1)-th powers.
  return static_cast<long>((static_cast<__int128>(c.exp) * d % n) * base_in_ext_ % n * (q_ + 1) % n);
}

long CharacterGroups::exponent_at(const MulChar& c, ExtElement x) const {
  if (!c.ext) throw UsageError("base character evaluated on E^x");
  return static_cast<long>((static_cast<__int128>(c.exp) * ext_->dlog(x)) % ext_order());
}

CycNumber CharacterGroups::value(const MulChar& c, FieldElement x) const {
  return CycNumber::root_of_unity(conductor(), exponent_at(c, x));
}

CycNumber CharacterGroups::value(const MulChar& c, ExtElement x) const {
  return CycNumber::root_of_unity(conductor(), exponent_at(c, x));
}

std::vector<IdentityCheck> check_character_sum_identities(const CharacterGroups& ch) {
  const FiniteField& F = ch.base();
  const QuadraticExtension& E = ch.ext();
  const long q = ch.q();
  const long n = ch.ext_order();
  const int cond = ch.conductor();
  auto delta = [&](FieldElement x) { return Rational(x == F.one() ? 1 : 0); };

  IdentityCheck single{"sum_mu mu(x) = (q-1) delta(x)"};
  IdentityCheck pairs{"sum_{mu1 != mu2} mu1(x) mu2(x) = ((q-1)^2 delta(x) - (q-1) delta(x^2)) / 2"};
  IdentityCheck prim{"sum_{nu primitive, nu ~ nu^q} nu(x) = ((q^2-1) delta(x) - (q-1) delta(x^2)) / 2"};
  const auto base = ch.all_chars(false);
  std::vector<MulChar> prim_reps;
  for (const auto& nu : ch.all_chars(true)) {
    if (ch.is_primitive(nu) && ch.frobenius(nu).exp >= nu.exp) prim_reps.push_back(nu);
  }
  for (long k = 0; k < q - 1; ++k) {
    const FieldElement x = F.exp(k);
    const Rational dx = delta(x), dx2 = delta(F.mul(x, x));
    CycNumber s1(cond, Rational(0)), s2(cond, Rational(0)), s3(cond, Rational(0));
    for (const auto& mu : base) s1.add_root(ch.exponent_at(mu, x), Rational(1));
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = i + 1; j < base.size(); ++j) {
        s2.add_root(ch.exponent_at(base[i], x) + ch.exponent_at(base[j], x), Rational(1));
      }
    }
    for (const auto& nu : prim_reps) s3.add_root(ch.exponent_at(nu, E.embed(x)), Rational(1));
    ++single.cases;
    ++pairs.cases;
    ++prim.cases;
    if (s1 != CycNumber(cond, Rational(q - 1) * dx)) ++single.failures;
    if (s2 != CycNumber(cond, (Rational((q - 1) * (q - 1)) * dx - Rational(q - 1) * dx2) / Rational(2))) {
      ++pairs.failures;
    }
    if (s3 != CycNumber(cond, (Rational(n) * dx - Rational(q - 1) * dx2) / Rational(2))) ++prim.failures;
  }

  const bool odd = q % 2 == 1;
  IdentityCheck cusp{odd ? "sum_{nu in N} (nu(l) + nu(conj l)) = (q+1) phi_F(l) - 1 - eps_E(l)"
                         : "sum_{nu in N} (nu(l) + nu(conj l)) = (q+1) phi_F(l) - 1"};
  const auto orbits = ch.enumerate_N();
  for (long k = 0; k < n; ++k) {
    const ExtElement l = E.exp(k);
    CycNumber sum(cond, Rational(0));
    for (const auto& o : orbits) {
      sum.add_root(ch.exponent_at(o.rep, l), Rational(1));
      sum.add_root(ch.exponent_at(o.rep, E.frobenius(l)), Rational(1));
    }
    Rational expected = Rational(q + 1) * Rational(E.is_in_base_field(l) ? 1 : 0) - Rational(1);
    if (odd) expected -= Rational(E.is_square(l) ? 1 : -1);
    ++cusp.cases;
    if (sum != CycNumber(cond, expected)) ++cusp.failures;
  }
  return {single, pairs, prim, cusp};
}

}  // namespace mz
