#include "mz/reptheory.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>

#include "mz/errors.hpp"

namespace mz {
namespace {

long lmod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

long irrep_dimension(const Irrep& pi, int q) {
  switch (pi.type) {
    case IrrepType::Linear:
      return 1;
    case IrrepType::Principal:
      return q + 1;
    case IrrepType::Steinberg:
      return q;
    case IrrepType::Cuspidal:
      return q - 1;
  }
  throw ConsistencyError("unknown irrep type");
}

Irrep canonical_irrep(const CharacterGroups& ch, Irrep pi) {
  const long m = ch.base_order();
  switch (pi.type) {
    case IrrepType::Linear:
    case IrrepType::Steinberg:
      return {pi.type, lmod(pi.a, m), 0};
    case IrrepType::Principal: {
      long a = lmod(pi.a, m), b = lmod(pi.b, m);
      if (a == b) throw UsageError("I(mu, mu) is not irreducible");
      if (b < a) std::swap(a, b);
      return {pi.type, a, b};
    }
    case IrrepType::Cuspidal: {
      const MulChar nu = ch.make(true, pi.a);
      if (!ch.is_primitive(nu)) throw UsageError("cuspidal parameter must be a primitive character");
      return {pi.type, std::min(nu.exp, ch.frobenius(nu).exp), 0};
    }
  }
  throw ConsistencyError("unknown irrep type");
}

std::vector<Irrep> enumerate_irreps_gl(const CharacterGroups& ch) {
  const long m = ch.base_order();
  std::vector<Irrep> out;
  for (long a = 0; a < m; ++a) out.push_back({IrrepType::Linear, a, 0});
  for (long a = 0; a < m; ++a) {
    for (long b = a + 1; b < m; ++b) out.push_back({IrrepType::Principal, a, b});
  }
  for (long a = 0; a < m; ++a) out.push_back({IrrepType::Steinberg, a, 0});
  for (const auto& nu : ch.all_chars(true)) {
    if (!ch.is_primitive(nu)) continue;
    if (ch.frobenius(nu).exp < nu.exp) continue;
    out.push_back({IrrepType::Cuspidal, nu.exp, 0});
  }
  return out;
}

long central_character(const CharacterGroups& ch, const Irrep& pi) {
  const long m = ch.base_order();
  switch (pi.type) {
    case IrrepType::Linear:
    case IrrepType::Steinberg:
      return lmod(2 * pi.a, m);
    case IrrepType::Principal:
      return lmod(pi.a + pi.b, m);
    case IrrepType::Cuspidal:
      return ch.restrict_to_base(ch.make(true, pi.a)).exp;
  }
  throw ConsistencyError("unknown irrep type");
}

std::vector<Irrep> enumerate_irreps_pgl(const CharacterGroups& ch) {
  std::vector<Irrep> out;
  for (const auto& pi : enumerate_irreps_gl(ch)) {
    if (central_character(ch, pi) == 0) out.push_back(pi);
  }
  return out;
}

CycNumber char_value(const CharacterGroups& ch, const Irrep& pi, const ConjClass& c) {
  const int q = ch.q();
  CycNumber r(ch.conductor());
  const MulChar mu1{false, pi.a};
  const MulChar mu2{false, pi.b};
  const MulChar nu{true, pi.a};
  auto e = [&](const MulChar& chr, FieldElement x) { return ch.exponent_at(chr, x); };
  switch (pi.type) {
    case IrrepType::Linear:
    case IrrepType::Steinberg: {
      const bool st = pi.type == IrrepType::Steinberg;
      switch (c.type) {
        case ClassType::Central:
          r.add_root(2 * e(mu1, c.x), Rational(st ? q : 1));
          break;
        case ClassType::Unipotent:
          if (!st) r.add_root(2 * e(mu1, c.x), Rational(1));
          break;
        case ClassType::Diagonal:
          r.add_root(e(mu1, c.x) + e(mu1, c.y), Rational(1));
          break;
        case ClassType::Elliptic:
          r.add_root(e(mu1, ch.ext().norm(c.lambda)), Rational(st ? -1 : 1));
          break;
      }
      break;
    }
    case IrrepType::Principal:
      switch (c.type) {
        case ClassType::Central:
          r.add_root(e(mu1, c.x) + e(mu2, c.x), Rational(q + 1));
          break;
        case ClassType::Unipotent:
          r.add_root(e(mu1, c.x) + e(mu2, c.x), Rational(1));
          break;
        case ClassType::Diagonal:
          r.add_root(e(mu1, c.x) + e(mu2, c.y), Rational(1));
          r.add_root(e(mu1, c.y) + e(mu2, c.x), Rational(1));
          break;
        case ClassType::Elliptic:
          break;
      }
      break;
    case IrrepType::Cuspidal:
      switch (c.type) {
        case ClassType::Central:
          r.add_root(e(nu, c.x), Rational(q - 1));
          break;
        case ClassType::Unipotent:
          r.add_root(e(nu, c.x), Rational(-1));
          break;
        case ClassType::Diagonal:
          break;
        case ClassType::Elliptic:
          r.add_root(ch.exponent_at(nu, c.lambda), Rational(-1));
          r.add_root(ch.exponent_at(nu, ch.ext().frobenius(c.lambda)), Rational(-1));
          break;
      }
      break;
  }
  return r;
}

int fs_indicator_rule(const CharacterGroups& ch, const Irrep& pi, bool pgl) {
  if (pgl) return 1;
  const long m = ch.base_order();
  const int q = ch.q();
  switch (pi.type) {
    case IrrepType::Linear:
    case IrrepType::Steinberg:
      return (2 * pi.a) % m == 0 ? 1 : 0;
    case IrrepType::Principal: {
      if ((pi.a + pi.b) % m == 0) return 1;
      if (q % 2 == 1 && pi.a == 0 && pi.b == (q - 1) / 2) return 1;
      return 0;
    }
    case IrrepType::Cuspidal:
      return ch.restrict_to_base(ch.make(true, pi.a)).exp == 0 ? 1 : 0;
  }
  throw ConsistencyError("unknown irrep type");
}

Irrep contragredient(const CharacterGroups& ch, const Irrep& pi) {
  return canonical_irrep(ch, {pi.type, -pi.a, -pi.b});
}

Irrep parse_irrep_label(std::string_view label) {
  const auto bad = [&] { return UsageError("malformed irrep label '" + std::string(label) + "'"); };
  const auto open = label.find('(');
  if (open == std::string_view::npos || label.back() != ')') throw bad();
  const std::string_view head = label.substr(0, open);
  const std::string_view args = label.substr(open + 1, label.size() - open - 2);
  std::vector<long> params;
  std::size_t start = 0;
  while (start <= args.size()) {
    const std::size_t comma = std::min(args.find(',', start), args.size());
    const std::string_view part = args.substr(start, comma - start);
    long v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) throw bad();
    params.push_back(v);
    start = comma + 1;
  }
  if (head == "chi" && params.size() == 1) return {IrrepType::Linear, params[0], 0};
  if (head == "I" && params.size() == 2) return {IrrepType::Principal, params[0], params[1]};
  if (head == "St" && params.size() == 1) return {IrrepType::Steinberg, params[0], 0};
  if (head == "C" && params.size() == 1) return {IrrepType::Cuspidal, params[0], 0};
  throw bad();
}

Irrep twist(const CharacterGroups& ch, const Irrep& pi, long mu) {
  switch (pi.type) {
    case IrrepType::Linear:
    case IrrepType::Steinberg:
      return canonical_irrep(ch, {pi.type, pi.a + mu, 0});
    case IrrepType::Principal:
      return canonical_irrep(ch, {pi.type, pi.a + mu, pi.b + mu});
    case IrrepType::Cuspidal:
      return canonical_irrep(ch, {pi.type, pi.a + ch.compose_norm(ch.make(false, mu)).exp, 0});
  }
  throw ConsistencyError("unknown irrep type");
}

std::string irrep_label(const Irrep& pi) {
  switch (pi.type) {
    case IrrepType::Linear:
      return "chi(" + std::to_string(pi.a) + ")";
    case IrrepType::Principal:
      return "I(" + std::to_string(pi.a) + "," + std::to_string(pi.b) + ")";
    case IrrepType::Steinberg:
      return "St(" + std::to_string(pi.a) + ")";
    case IrrepType::Cuspidal:
      return "C(" + std::to_string(pi.a) + ")";
  }
  throw ConsistencyError("unknown irrep type");
}

// ---------------------------------------------------------------------------
// Closed formulas for brackets.

namespace {

struct Deltas {
  const CharacterGroups& ch;
  // delta on base characters, argument an exponent sum.
  int d(long e) const { return lmod(e, ch.base_order()) == 0 ? 1 : 0; }
  // delta on E^x characters.
  int dE(long e) const { return lmod(e, ch.ext_order()) == 0 ? 1 : 0; }
  long res(long nu) const { return ch.restrict_to_base(ch.make(true, nu)).exp; }
  long bar(long nu) const { return ch.frobenius(ch.make(true, nu)).exp; }
  long lift(long mu) const { return ch.compose_norm(ch.make(false, mu)).exp; }
};

}  // namespace

Rational closed_form_pair(const CharacterGroups& ch, const Irrep& x, const Irrep& y) {
  if (x.type != y.type) return Rational(0);
  const Deltas D{ch};
  switch (x.type) {
    case IrrepType::Linear:
    case IrrepType::Steinberg:
      return Rational(D.d(x.a + y.a));
    case IrrepType::Principal:
      return Rational(D.d(x.a + y.a) * D.d(x.b + y.b) + D.d(x.a + y.b) * D.d(x.b + y.a));
    case IrrepType::Cuspidal:
      return Rational(D.dE(x.a + y.a) + D.dE(x.a + D.bar(y.a)));
  }
  throw ConsistencyError("unknown irrep type");
}

Rational closed_form_triple(const CharacterGroups& ch, const Irrep& x, const Irrep& y, const Irrep& z) {
  std::array<Irrep, 3> v{x, y, z};
  for (const auto& pi : v) {
    if (pi.type == IrrepType::Linear) throw UsageError("closed triple formula needs non-linear arguments");
  }
  std::stable_sort(v.begin(), v.end(), [](const Irrep& l, const Irrep& r) { return l.type < r.type; });
  const Deltas D{ch};
  const auto& [p, s, t] = v;
  using T = IrrepType;
  long r = 0;
  if (p.type == T::Principal && s.type == T::Principal && t.type == T::Principal) {
    const long m1 = p.a, m2 = p.b, n1 = s.a, n2 = s.b, r1 = t.a, r2 = t.b;
    r = D.d(m1 + m2 + n1 + n2 + r1 + r2) + D.d(m1 + n1 + r1) * D.d(m2 + n2 + r2) +
        D.d(m2 + n1 + r1) * D.d(m1 + n2 + r2) + D.d(m1 + n2 + r1) * D.d(m2 + n1 + r2) +
        D.d(m1 + n1 + r2) * D.d(m2 + n2 + r1);
  } else if (p.type == T::Principal && s.type == T::Principal && t.type == T::Steinberg) {
    const long m1 = p.a, m2 = p.b, n1 = s.a, n2 = s.b, rho = t.a;
    r = D.d(m1 + m2 + n1 + n2 + 2 * rho) + D.d(m1 + n1 + rho) * D.d(m2 + n2 + rho) +
        D.d(m1 + n2 + rho) * D.d(m2 + n1 + rho);
  } else if (p.type == T::Principal && s.type == T::Principal && t.type == T::Cuspidal) {
    r = D.d(p.a + p.b + s.a + s.b + D.res(t.a));
  } else if (p.type == T::Principal && s.type == T::Steinberg && t.type == T::Steinberg) {
    const long m1 = p.a, m2 = p.b, nu = s.a, rho = t.a;
    r = D.d(m1 + m2 + 2 * nu + 2 * rho) + D.d(m1 + nu + rho) * D.d(m2 + nu + rho);
  } else if (p.type == T::Steinberg && s.type == T::Steinberg && t.type == T::Steinberg) {
    r = D.d(2 * p.a + 2 * s.a + 2 * t.a);
  } else if (p.type == T::Principal && s.type == T::Steinberg && t.type == T::Cuspidal) {
    r = D.d(p.a + p.b + 2 * s.a + D.res(t.a));
  } else if (p.type == T::Principal && s.type == T::Cuspidal && t.type == T::Cuspidal) {
    r = D.d(p.a + p.b + D.res(s.a) + D.res(t.a));
  } else if (p.type == T::Steinberg && s.type == T::Steinberg && t.type == T::Cuspidal) {
    r = D.d(2 * p.a + 2 * s.a + D.res(t.a));
  } else if (p.type == T::Steinberg && s.type == T::Cuspidal && t.type == T::Cuspidal) {
    const long mu = D.lift(p.a);
    r = D.d(2 * p.a + D.res(s.a) + D.res(t.a)) - D.dE(mu + s.a + t.a) - D.dE(mu + s.a + D.bar(t.a));
  } else {
    const long m = p.a, n = s.a, o = t.a;
    r = D.d(D.res(m) + D.res(n) + D.res(o)) -
        (D.dE(m + n + o) + D.dE(D.bar(m) + n + o) + D.dE(m + D.bar(n) + o) + D.dE(m + n + D.bar(o)));
  }
  return Rational(r);
}

Rational closed_form_bracket(const CharacterGroups& ch, const Irrep& x, const Irrep& y, const Irrep& z) {
  std::array<Irrep, 3> v{x, y, z};
  for (int i = 0; i < 3; ++i) {
    if (v[static_cast<std::size_t>(i)].type != IrrepType::Linear) continue;
    // <a b chi_mu> = <a, b (x) chi_mu>
    const long mu = v[static_cast<std::size_t>(i)].a;
    const Irrep& a = v[static_cast<std::size_t>((i + 1) % 3)];
    const Irrep& b = v[static_cast<std::size_t>((i + 2) % 3)];
    return closed_form_pair(ch, a, twist(ch, b, mu));
  }
  return closed_form_triple(ch, x, y, z);
}

// ---------------------------------------------------------------------------

CharacterTable::CharacterTable(std::shared_ptr<const Group> group) : group_(std::move(group)), chars_(group_->E_ptr()) {}

std::shared_ptr<const CharacterTable> CharacterTable::build(std::shared_ptr<const Group> group) {
  std::shared_ptr<CharacterTable> t(new CharacterTable(std::move(group)));
  const Group& G = *t->group_;
  const bool pgl = G.is_pgl();
  t->irreps_ = pgl ? enumerate_irreps_pgl(t->chars_) : enumerate_irreps_gl(t->chars_);
  if (static_cast<int>(t->irreps_.size()) != G.num_classes()) {
    throw ConsistencyError("irrep count differs from class count for " + G.name());
  }
  std::map<Irrep, int> index;
  for (std::size_t i = 0; i < t->irreps_.size(); ++i) index[t->irreps_[i]] = static_cast<int>(i);
  for (const auto& pi : t->irreps_) {
    t->dims_.push_back(irrep_dimension(pi, G.q()));
    t->fs_.push_back(fs_indicator_rule(t->chars_, pi, pgl));
    t->contra_.push_back(index.at(contragredient(t->chars_, pi)));
  }
  t->values_.reserve(t->irreps_.size() * G.classes().size());
  for (const auto& pi : t->irreps_) {
    for (const auto& info : G.classes()) t->values_.push_back(char_value(t->chars_, pi, info.cls));
  }
  return t;
}

int CharacterTable::irrep_index(const Irrep& pi) const {
  const Irrep c = canonical_irrep(chars_, pi);
  auto it = std::find(irreps_.begin(), irreps_.end(), c);
  if (it == irreps_.end()) throw UsageError(irrep_label(c) + " is not an irrep of " + group_->name());
  return static_cast<int>(it - irreps_.begin());
}

namespace {

Rational require_rational(const CycNumber& z, const char* what) {
  auto r = z.as_rational();
  if (!r) throw ConsistencyError(std::string(what) + " is not rational");
  return *r;
}

}  // namespace

Rational CharacterTable::fs_by_sum(int i) const {
  CycNumber acc(conductor());
  const auto& cls = group_->classes();
  for (int c = 0; c < group_->num_classes(); ++c) {
    acc += value(i, group_->square_class(c)) * Rational(cls[static_cast<std::size_t>(c)].size);
  }
  return require_rational(acc, "Frobenius-Schur sum") / Rational(group_->order());
}

Rational CharacterTable::triple_bracket(int i, int j, int k) const {
  CycNumber acc(conductor());
  const auto& cls = group_->classes();
  for (int c = 0; c < group_->num_classes(); ++c) {
    const CycNumber& a = value(i, c);
    if (a.is_zero()) continue;
    const CycNumber& b = value(j, c);
    if (b.is_zero()) continue;
    const CycNumber& d = value(k, c);
    if (d.is_zero()) continue;
    acc += a * b * d * Rational(cls[static_cast<std::size_t>(c)].size);
  }
  return require_rational(acc, "triple bracket") / Rational(group_->order());
}

Rational CharacterTable::pair_bracket(int i, int j) const {
  CycNumber acc(conductor());
  const auto& cls = group_->classes();
  for (int c = 0; c < group_->num_classes(); ++c) {
    acc += value(i, c) * value(j, c) * Rational(cls[static_cast<std::size_t>(c)].size);
  }
  return require_rational(acc, "pair bracket") / Rational(group_->order());
}

long CharacterTable::fusion_coeff(int i, int j, int k) const {
  const Rational r = triple_bracket(i, j, contragredient_index(k));
  if (!r.is_integer() || r.sign() < 0) throw ConsistencyError("fusion coefficient " + r.to_string() + " is not a natural number");
  return r.to_int64();
}

}  // namespace mz
