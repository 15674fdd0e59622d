#include "mz/topo.hpp"

#include "mz/errors.hpp"
#include "mz/zeta.hpp"

namespace mz {

void SurfaceSpec::validate(const Group& g) const {
  if (genus < 0) throw UsageError("genus must be non-negative");
  if (!orientable && genus < 1) throw UsageError("a non-orientable surface needs genus >= 1");
  for (int c : boundaries) {
    if (c < 0 || c >= g.num_classes()) throw UsageError("boundary class index out of range");
  }
}

namespace {

Rational orbit_product(const Group& g, const std::vector<int>& classes) {
  Rational p(1);
  for (int c : classes) p *= Rational(g.class_info(c).size);
  return p;
}

void check_count(const Rational& v, const char* what) {
  if (!v.is_integer() || v.sign() < 0) {
    throw ConsistencyError(std::string(what) + " is not a non-negative integer: " + v.to_string());
  }
}

Rational to_rational(const CycNumber& z, const char* what) {
  auto r = z.as_rational();
  if (!r) throw ConsistencyError(std::string(what) + " is not rational");
  return *r;
}

// sum over irreps of nu_2^g-weighted prod chi(gamma_j) dim^{e}, restricted to nu_2 != 0 when non-orientable.
Rational weighted_character_sum(const CharacterTable& t, const SurfaceSpec& spec, long dim_exponent) {
  CycNumber acc(t.conductor(), Rational(0));
  for (int i = 0; i < t.num_irreps(); ++i) {
    Rational weight = Rational(t.dim(i)).pow(dim_exponent);
    if (!spec.orientable) {
      const int nu = t.fs(i);
      if (nu == 0) continue;
      if (nu < 0 && spec.genus % 2 == 1) weight = -weight;
    }
    CycNumber prod(t.conductor(), weight);
    for (int c : spec.boundaries) prod *= t.value(i, c);
    acc += prod;
  }
  return to_rational(acc, "character sum");
}

}  // namespace

HomCount hom_count(const CharacterTable& t, const SurfaceSpec& spec) {
  const Group& g = t.group();
  spec.validate(g);
  const long r = static_cast<long>(spec.boundaries.size());
  const Rational order(g.order());
  const Rational orbits = orbit_product(g, spec.boundaries);
  Rational value;
  if (spec.orientable) {
    value = order.pow(2 * spec.genus - 1) * orbits * weighted_character_sum(t, spec, 2 - 2 * spec.genus - r);
  } else {
    value = order.pow(spec.genus - 1) * orbits * weighted_character_sum(t, spec, 2 - spec.genus - r);
  }
  check_count(value, "hom count");
  return {value, CountKind::Raw};
}

HomCount hom_count_per_order(const CharacterTable& t, const SurfaceSpec& spec) {
  return {hom_count(t, spec).value / Rational(t.group().order()), CountKind::PerGroupOrder};
}

HomCount quotient_count(const CharacterTable& t, const SurfaceSpec& spec) {
  const auto& gptr = t.group_ptr();
  const Group& g = *gptr;
  spec.validate(g);
  if (g.is_pgl()) throw UsageError("quotient counts are implemented for GL(2) only");
  const long r = static_cast<long>(spec.boundaries.size());
  const long gen = spec.genus;
  const Rational order(g.order());
  const Rational prefactor = orbit_product(g, spec.boundaries) / order.pow(r + 1);
  // Exponent of |C(k)| in the centralizer decomposition.
  const long c_exp = spec.orientable ? 2 * gen + r - 1 : gen + r - 1;

  Rational total(0);
  for (int k = 0; k < g.num_classes(); ++k) {
    const auto& info = g.class_info(k);
    Rational inner;
    if (info.cls.type == ClassType::Central) {
      // C(k) = G: Ind is the identity and the irreps are those of G.
      const long dim_exp = spec.orientable ? 2 - 2 * gen - r : 2 - gen - r;
      inner = weighted_character_sum(t, spec, dim_exp);
    } else {
      const AbelianCentralizer h(gptr, k);
      CycNumber acc(h.conductor(), Rational(0));
      for (long rho = 0; rho < h.order(); ++rho) {
        if (!spec.orientable && !h.is_real(rho)) continue;
        CycNumber prod(h.conductor(), Rational(1));
        for (int c : spec.boundaries) {
          prod *= induced_char_value(h, rho, c);
          if (prod.is_zero()) break;
        }
        acc += prod;
      }
      inner = to_rational(acc, "induced character sum");
    }
    total += Rational(info.size) * Rational(info.centralizer_order).pow(c_exp) * inner;
  }
  total *= prefactor;
  check_count(total, "quotient count");

  if (spec.orientable && r == 0) {
    const Rational via_double = order.pow(2 * gen - 2) * zeta_double(t, 2 * gen - 2);
    if (via_double != total) {
      throw ConsistencyError("quotient count disagrees with the quantum double zeta value");
    }
  }
  return {total, CountKind::Quotient};
}

// ---------------------------------------------------------------------------

AbelianCentralizer::AbelianCentralizer(std::shared_ptr<const Group> group, int cls)
    : group_(std::move(group)), cls_(cls) {
  const Group& g = *group_;
  if (g.is_pgl()) throw UsageError("centralizer characters are tabulated for GL(2) only");
  const FiniteField& F = g.F();
  const int q = g.q();
  const auto& info = g.class_info(cls);
  conductor_ = F.p() * (q * q - 1);
  const std::uint32_t uq = static_cast<std::uint32_t>(q);
  switch (info.cls.type) {
    case ClassType::Central:
      throw UsageError("the centralizer of a central class is the whole group");
    case ClassType::Diagonal:
      kind_ = CentralizerKind::SplitTorus;
      for (long i = 0; i < q - 1; ++i) {
        for (long j = 0; j < q - 1; ++j) elements_.push_back({F.exp(i), F.zero(), F.zero(), F.exp(j)});
      }
      break;
    case ClassType::Unipotent:
      kind_ = CentralizerKind::Unipotent;
      for (long i = 0; i < q - 1; ++i) {
        for (std::uint32_t b = 0; b < uq; ++b) elements_.push_back({F.exp(i), {b}, F.zero(), F.exp(i)});
      }
      break;
    case ClassType::Elliptic: {
      kind_ = CentralizerKind::EllipticTorus;
      lambda_ = info.cls.lambda;
      const Mat2 m = g.class_matrix(info.cls);
      for (std::uint32_t a = 0; a < uq; ++a) {
        for (std::uint32_t c = 0; c < uq; ++c) {
          if (a == 0 && c == 0) continue;
          const FieldElement fa{a}, fc{c};
          elements_.push_back({F.add(fa, F.mul(fc, m.a)), F.mul(fc, m.b), F.mul(fc, m.c), F.add(fa, F.mul(fc, m.d))});
        }
      }
      break;
    }
  }
  if (order() != info.centralizer_order) throw ConsistencyError("centralizer order disagrees with the class size");
  element_class_.reserve(elements_.size());
  for (const Mat2& h : elements_) element_class_.push_back(g.classify(h));
}

bool AbelianCentralizer::contains(const Mat2& h) const {
  const Group& g = *group_;
  const FiniteField& F = g.F();
  if (g.det(h) == F.zero()) return false;
  switch (kind_) {
    case CentralizerKind::SplitTorus:
      return h.b == F.zero() && h.c == F.zero();
    case CentralizerKind::Unipotent:
      return h.c == F.zero() && h.a == h.d;
    case CentralizerKind::EllipticTorus: {
      const Mat2 m = g.class_matrix(g.class_info(cls_).cls);
      return g.mul(h, m) == g.mul(m, h);
    }
    case CentralizerKind::Full:
      return true;
  }
  return false;
}

long AbelianCentralizer::exponent(long rho, const Mat2& h) const {
  if (rho < 0 || rho >= order()) throw UsageError("centralizer character index out of range");
  if (!contains(h)) throw UsageError("matrix does not lie in the centralizer");
  const Group& g = *group_;
  const FiniteField& F = g.F();
  const long q = g.q();
  const long p = F.p();
  const long n = q * q - 1;
  const long N = conductor_;
  long e = 0;
  switch (kind_) {
    case CentralizerKind::SplitTorus: {
      const long i = rho / (q - 1), j = rho % (q - 1);
      e = p * (q + 1) * ((i * F.dlog(h.a) + j * F.dlog(h.d)) % (q - 1));
      break;
    }
    case CentralizerKind::Unipotent: {
      const long i = rho / q;
      const FieldElement t{static_cast<std::uint32_t>(rho % q)};
      const FieldElement u = F.mul(t, F.div(h.b, h.a));
      e = p * (q + 1) * ((i * F.dlog(h.a)) % (q - 1)) + n * F.absolute_trace(u);
      break;
    }
    case CentralizerKind::EllipticTorus: {
      const QuadraticExtension& E = g.E();
      const ExtElement z = E.add(E.embed(h.a), E.mul(E.embed(h.c), lambda_));
      e = p * ((rho * E.dlog(z)) % n);
      break;
    }
    case CentralizerKind::Full:
      throw ConsistencyError("full centralizer in abelian path");
  }
  return ((e % N) + N) % N;
}

CycNumber AbelianCentralizer::character(long rho, const Mat2& h) const {
  return CycNumber::root_of_unity(conductor_, exponent(rho, h));
}

bool AbelianCentralizer::is_real(long rho) const {
  const long q = group_->q();
  switch (kind_) {
    case CentralizerKind::SplitTorus:
      return (2 * (rho / (q - 1))) % (q - 1) == 0 && (2 * (rho % (q - 1))) % (q - 1) == 0;
    case CentralizerKind::Unipotent:
      return (2 * (rho / q)) % (q - 1) == 0 && (group_->F().p() == 2 || rho % q == 0);
    case CentralizerKind::EllipticTorus:
      return (2 * rho) % (q * q - 1) == 0;
    case CentralizerKind::Full:
      break;
  }
  throw ConsistencyError("full centralizer in abelian path");
}

CycNumber AbelianCentralizer::class_sum(long rho, int gamma_cls) const {
  CycNumber acc(conductor_, Rational(0));
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (element_class_[i] == gamma_cls) acc.add_root(exponent(rho, elements_[i]), Rational(1));
  }
  return acc;
}

CycNumber induced_char_value(const AbelianCentralizer& h, long rho, int gamma_cls) {
  const Rational scale(h.group().class_info(gamma_cls).centralizer_order, h.order());
  return h.class_sum(rho, gamma_cls) * scale;
}

}  // namespace mz
