#include "mz/zeta.hpp"

#include <cmath>

#include "mz/errors.hpp"

namespace mz {
namespace {

// Arithmetic policy: exact rationals for integer s, doubles otherwise.
template <class S>
struct Num;

template <>
struct Num<long> {
  using T = Rational;
  static T ipow(long base, long s) { return Rational(base).pow(-s); }
  static T lit(const Rational& r) { return r; }
  static long shift(long s, long k) { return s + k; }
  static T from_cyc(const CycNumber& z) {
    auto r = z.as_rational();
    if (!r) throw ConsistencyError("zeta sum at an integer argument is not rational");
    return *r;
  }
};

template <>
struct Num<Complex> {
  using T = Complex;
  static T ipow(long base, Complex s) { return std::exp(-s * std::log(static_cast<double>(base))); }
  static T lit(const Rational& r) { return {r.to_double(), 0.0}; }
  static Complex shift(Complex s, long k) { return s + static_cast<double>(k); }
  static T from_cyc(const CycNumber& z) { return z.to_complex(); }
};

template <class S>
typename Num<S>::T zeta_impl(const CharacterTable& t, S s, int indicator, bool filter) {
  using N = Num<S>;
  typename N::T acc = N::lit(Rational(0));
  for (int i = 0; i < t.num_irreps(); ++i) {
    if (filter && t.fs(i) != indicator) continue;
    acc += N::ipow(t.dim(i), s);
  }
  return acc;
}

template <class S>
typename Num<S>::T zeta_closed_impl(GroupKind kind, int q, S s) {
  using N = Num<S>;
  using R = Rational;
  const long Q = q;
  if (kind == GroupKind::GL2) {
    return N::lit(R(Q - 1)) + N::lit(R((Q - 1) * (Q - 2), 2)) * N::ipow(Q + 1, s) + N::lit(R(Q - 1)) * N::ipow(Q, s) +
           N::lit(R((Q - 1) * Q, 2)) * N::ipow(Q - 1, s);
  }
  if (q % 2 == 1) {
    return N::lit(R(2)) + N::lit(R(Q - 3, 2)) * N::ipow(Q + 1, s) + N::lit(R(2)) * N::ipow(Q, s) +
           N::lit(R(Q - 1, 2)) * N::ipow(Q - 1, s);
  }
  return N::lit(R(1)) + N::lit(R(Q - 2, 2)) * N::ipow(Q + 1, s) + N::ipow(Q, s) + N::lit(R(Q, 2)) * N::ipow(Q - 1, s);
}

template <class S>
typename Num<S>::T zeta_insert_impl(const CharacterTable& t, const std::vector<int>& classes, S s) {
  using N = Num<S>;
  if (classes.empty()) throw UsageError("insertion list must be nonempty");
  const long r = static_cast<long>(classes.size());
  CycNumber exact(t.conductor(), Rational(0));
  typename N::T acc = N::lit(Rational(0));
  for (int i = 0; i < t.num_irreps(); ++i) {
    CycNumber prod(t.conductor(), Rational(1));
    for (int c : classes) prod *= t.value(i, c);
    if (prod.is_zero()) continue;
    if constexpr (std::is_same_v<S, long>) {
      exact += prod * Rational(t.dim(i)).pow(-(s + r));
    } else {
      acc += N::from_cyc(prod) * N::ipow(t.dim(i), N::shift(s, r));
    }
  }
  if constexpr (std::is_same_v<S, long>) return N::from_cyc(exact);
  else return acc;
}

// ---- closed forms with insertions ----

struct Insertions {
  std::vector<ConjClass> central, unipotent, diagonal, elliptic;
};

Insertions sort_insertions(const Group& g, const std::vector<int>& classes) {
  if (classes.empty()) throw UsageError("insertion list must be nonempty");
  Insertions ins;
  const FiniteField& F = g.F();
  for (int c : classes) {
    const ConjClass& cls = g.class_info(c).cls;
    switch (cls.type) {
      case ClassType::Central:
        // The identity contributes chi(e)/dim = 1 and drops out.
        if (cls.x != F.one()) ins.central.push_back(cls);
        break;
      case ClassType::Unipotent:
        ins.unipotent.push_back(cls);
        break;
      case ClassType::Diagonal:
        ins.diagonal.push_back(cls);
        break;
      case ClassType::Elliptic:
        ins.elliptic.push_back(cls);
        break;
    }
  }
  return ins;
}

std::size_t count(const Insertions& ins) {
  return ins.central.size() + ins.unipotent.size() + ins.diagonal.size() + ins.elliptic.size();
}



bool pgl_form_exists(const Insertions& ins) {
  const std::size_t n = count(ins);
  if (n == 0) return true;
  if (!ins.unipotent.empty()) return n == 1;
  return true;
}

template <class S>
typename Num<S>::T gl_insert_closed(const Group& g, const std::vector<int>& classes, S s) {
  using N = Num<S>;
  using R = Rational;
  const FiniteField& F = g.F();
  const QuadraticExtension& E = g.E();
  const long q = g.q();
  const Insertions ins = sort_insertions(g, classes);
  const std::size_t n = count(ins);
  if (n == 0) return zeta_closed_impl(GroupKind::GL2, g.q(), s);
  if (n > 1) {
    FieldElement d = F.one();
    for (int c : classes) d = F.mul(d, g.det(g.class_info(c).rep));
    if (d != F.one()) return N::lit(R(0));
    throw UsageError("no closed form for several GL(2) insertions with det(product) = 1");
  }
  auto delta = [&](FieldElement x) { return R(x == F.one() ? 1 : 0); };
  auto lit = [](const R& r) { return N::lit(r); };
  if (!ins.central.empty()) {
    const FieldElement x = ins.central[0].x;
    const R dx = delta(x), dx2 = delta(F.mul(x, x));
    return lit(R(q - 1) * dx2) + lit(R(1, 2)) * N::ipow(q + 1, s) * lit(R((q - 1) * (q - 1)) * dx - R(q - 1) * dx2) +
           N::ipow(q, s) * lit(R(q - 1) * dx2) +
           lit(R(1, 2)) * N::ipow(q - 1, s) * lit(R(q * q - 1) * dx - R(q - 1) * dx2);
  }
  const S s1 = N::shift(s, 1);
  if (!ins.unipotent.empty()) {
    const FieldElement x = ins.unipotent[0].x;
    const R dx = delta(x), dx2 = delta(F.mul(x, x));
    return lit(R(q - 1) * dx2) + lit(R(1, 2)) * N::ipow(q + 1, s1) * lit(R((q - 1) * (q - 1)) * dx - R(q - 1) * dx2) -
           lit(R(1, 2)) * N::ipow(q - 1, s1) * lit(R(q * q - 1) * dx - R(q - 1) * dx2);
  }
  if (!ins.diagonal.empty()) {
    const FieldElement x = ins.diagonal[0].x, y = ins.diagonal[0].y;
    const R dxy = delta(F.mul(x, y)), dd = delta(x) * delta(y);
    return lit(R(q - 1) * dxy) + N::ipow(q + 1, s1) * lit(R((q - 1) * (q - 1)) * dd - R(q - 1) * dxy) +
           N::ipow(q, s1) * lit(R(q - 1) * dxy);
  }
  const ExtElement lam = ins.elliptic[0].lambda;
  const R dN = delta(E.norm(lam));
  const R dl = R(lam == E.one() ? 1 : 0);
  return lit(R(q - 1) * dN) - lit(R(q - 1) * dN) * N::ipow(q, s1) - lit(R(q * q - 1) * dl) * N::ipow(q - 1, s1) +
         lit(R(q - 1) * dN) * N::ipow(q - 1, s1);
}

template <class S>
typename Num<S>::T pgl_insert_closed(const Group& g, const std::vector<int>& classes, S s) {
  using N = Num<S>;
  using R = Rational;
  const FiniteField& F = g.F();
  const QuadraticExtension& E = g.E();
  const long q = g.q();
  const bool odd = q % 2 == 1;
  const Insertions ins = sort_insertions(g, classes);
  if (!ins.central.empty()) throw ConsistencyError("PGL(2) has a single central class");
  const long r = static_cast<long>(count(ins));
  if (r == 0) return zeta_closed_impl(GroupKind::PGL2, g.q(), s);
  if (!pgl_form_exists(ins)) throw UsageError("no closed form for a unipotent insertion combined with others");
  auto lit = [](const R& v) { return N::lit(v); };
  auto eps = [&](FieldElement x) { return R(F.is_square(x) ? 1 : -1); };
  const S sr = N::shift(s, r);
  const R sign_r = R(r % 2 == 0 ? 1 : -1);

  if (!ins.unipotent.empty()) {
    if (odd) return lit(R(2)) + lit(R(q - 3, 2)) * N::ipow(q + 1, sr) - lit(R(q - 1, 2)) * N::ipow(q - 1, sr);
    return lit(R(1)) + lit(R(q - 2, 2)) * N::ipow(q + 1, sr) - lit(R(q, 2)) * N::ipow(q - 1, sr);
  }
  const std::size_t m = ins.diagonal.size();
  const std::size_t ne = ins.elliptic.size();
  if (m > 0 && ne > 0) {
    const R sign_n = R(ne % 2 == 0 ? 1 : -1);
    const typename N::T head = lit(R(1)) + lit(sign_n) * N::ipow(q, sr);
    if (!odd) return head;
    FieldElement prod = F.one();
    for (const auto& c : ins.diagonal) prod = F.mul(prod, c.x);
    for (const auto& c : ins.elliptic) prod = F.mul(prod, E.norm(c.lambda));
    return head * lit(R(1) + eps(prod));
  }
  if (m > 0) {
    FieldElement prod = F.one();
    for (const auto& c : ins.diagonal) prod = F.mul(prod, c.x);
    R sum(0);
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
      FieldElement z = F.one();
      for (std::size_t i = 0; i < m; ++i) {
        const FieldElement x = ins.diagonal[i].x;
        z = F.mul(z, (mask >> i) & 1 ? F.inv(x) : x);
      }
      sum += R(q - 1) * R(z == F.one() ? 1 : 0) - R(1);
      if (odd) sum -= eps(z);
    }
    const R lead = odd ? R(1) + eps(prod) : R(1);
    return lit(lead) * (lit(R(1)) + N::ipow(q, sr)) + lit(sum / R(2)) * N::ipow(q + 1, sr);
  }
  FieldElement norm_prod = F.one();
  for (const auto& c : ins.elliptic) norm_prod = F.mul(norm_prod, E.norm(c.lambda));
  R sum(0);
  for (unsigned long mask = 0; mask < (1UL << ne); ++mask) {
    ExtElement z = E.one();
    for (std::size_t i = 0; i < ne; ++i) {
      const ExtElement l = ins.elliptic[i].lambda;
      z = E.mul(z, (mask >> i) & 1 ? E.frobenius(l) : l);
    }
    sum += R(q + 1) * R(E.is_in_base_field(z) ? 1 : 0) - R(1);
    if (odd) sum -= R(E.is_square(z) ? 1 : -1);
  }
  const typename N::T head = lit(R(1)) + lit(sign_r) * N::ipow(q, sr);
  const typename N::T tail = lit(sign_r * sum / R(2)) * N::ipow(q - 1, sr);
  if (odd) return head * lit(R(1) + eps(norm_prod)) + tail;
  return head + tail;
}

template <class S>
typename Num<S>::T zeta_fs_closed_impl(GroupKind kind, int q, int indicator, S s) {
  using N = Num<S>;
  using R = Rational;
  if (indicator == -1) return N::lit(R(0));
  if (indicator != 0 && indicator != 1) throw UsageError("Frobenius-Schur indicator must be -1, 0 or +1");
  if (kind == GroupKind::PGL2) return indicator == 1 ? zeta_closed_impl(kind, q, s) : N::lit(R(0));
  const long Q = q;
  typename N::T plus;
  if (q % 2 == 1) {
    plus = N::lit(R(2)) + N::lit(R(Q - 1, 2)) * N::ipow(Q + 1, s) + N::lit(R(2)) * N::ipow(Q, s) +
           N::lit(R(Q - 1, 2)) * N::ipow(Q - 1, s);
  } else {
    plus = N::lit(R(1)) + N::lit(R(Q - 2, 2)) * N::ipow(Q + 1, s) + N::ipow(Q, s) + N::lit(R(Q, 2)) * N::ipow(Q - 1, s);
  }
  if (indicator == 1) return plus;
  return zeta_closed_impl(kind, q, s) - plus;
}

template <class S>
typename Num<S>::T zeta_double_impl(const CharacterTable& t, S s) {
  using N = Num<S>;
  const Group& g = t.group();
  if (g.is_pgl()) throw UsageError("the quantum double zeta function is implemented for GL(2) only");
  typename N::T acc = N::lit(Rational(0));
  for (int c = 0; c < g.num_classes(); ++c) {
    const auto& info = g.class_info(c);
    const Centralizer cz = g.centralizer(c);
    if (cz.kind == CentralizerKind::Full) {
      for (int i = 0; i < t.num_irreps(); ++i) acc += N::ipow(info.size * t.dim(i), s);
    } else {
      // Abelian centralizer: |C| one-dimensional irreps, each giving dimension |O|.
      acc += N::lit(Rational(cz.order)) * N::ipow(info.size, s);
    }
  }
  return acc;
}

template <class S>
typename Num<S>::T zeta_double_closed_impl(int q, S s) {
  using N = Num<S>;
  using R = Rational;
  const long Q = q;
  return N::lit(R(Q - 1)) * zeta_closed_impl(GroupKind::GL2, q, s) +
         N::lit(R(Q * (Q - 1) * (Q - 1))) * N::ipow((Q - 1) * (Q + 1), s) +
         N::lit(R((Q - 1) * (Q - 1) * (Q - 1) * (Q - 2), 2)) * N::ipow(Q * (Q + 1), s) +
         N::lit(R(Q * (Q - 1) * (Q - 1) * (Q + 1), 2)) * N::ipow(Q * (Q - 1), s);
}

}  // namespace

Rational zeta(const CharacterTable& t, long s) { return zeta_impl(t, s, 0, false); }
Complex zeta(const CharacterTable& t, Complex s) { return zeta_impl(t, s, 0, false); }

Rational zeta_closed(GroupKind kind, int q, long s) { return zeta_closed_impl(kind, q, s); }
Complex zeta_closed(GroupKind kind, int q, Complex s) { return zeta_closed_impl(kind, q, s); }

Rational zeta_insert(const CharacterTable& t, const std::vector<int>& classes, long s) {
  return zeta_insert_impl(t, classes, s);
}
Complex zeta_insert(const CharacterTable& t, const std::vector<int>& classes, Complex s) {
  return zeta_insert_impl(t, classes, s);
}

bool has_insert_closed_form(const Group& g, const std::vector<int>& classes) {
  const Insertions ins = sort_insertions(g, classes);
  if (g.is_pgl()) return pgl_form_exists(ins);
  if (count(ins) <= 1) return true;
  FieldElement d = g.F().one();
  for (int c : classes) d = g.F().mul(d, g.det(g.class_info(c).rep));
  return d != g.F().one();
}

Rational zeta_insert_closed(const Group& g, const std::vector<int>& classes, long s) {
  return g.is_pgl() ? pgl_insert_closed(g, classes, s) : gl_insert_closed(g, classes, s);
}
Complex zeta_insert_closed(const Group& g, const std::vector<int>& classes, Complex s) {
  return g.is_pgl() ? pgl_insert_closed(g, classes, s) : gl_insert_closed(g, classes, s);
}

Rational zeta_fs(const CharacterTable& t, int indicator, long s) { return zeta_impl(t, s, indicator, true); }
Complex zeta_fs(const CharacterTable& t, int indicator, Complex s) { return zeta_impl(t, s, indicator, true); }
Rational zeta_fs_closed(GroupKind kind, int q, int indicator, long s) { return zeta_fs_closed_impl(kind, q, indicator, s); }
Complex zeta_fs_closed(GroupKind kind, int q, int indicator, Complex s) {
  return zeta_fs_closed_impl(kind, q, indicator, s);
}

Rational zeta_double(const CharacterTable& t, long s) { return zeta_double_impl(t, s); }
Complex zeta_double(const CharacterTable& t, Complex s) { return zeta_double_impl(t, s); }
Rational zeta_double_closed(int q, long s) { return zeta_double_closed_impl(q, s); }
Complex zeta_double_closed(int q, Complex s) { return zeta_double_closed_impl(q, s); }

}  // namespace mz
