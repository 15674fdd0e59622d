#include "mz/ffield.hpp"

#include <string>

#include "mz/errors.hpp"

namespace mz {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<PrimePower> factor_prime_power(long q) {
  if (q < 2) return std::nullopt;
  auto ps = prime_factors(q);
  if (ps.size() != 1) return std::nullopt;
  PrimePower pp{static_cast<int>(ps[0]), 0, q};
  while (q > 1) {
    q /= ps[0];
    ++pp.e;
  }
  return pp;
}

namespace {

using Poly = std::vector<int>;  // low degree first, over F_p

// r = a * b mod f (f monic of degree e), all with e coefficients except f.
Poly polymulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  const std::size_t e = f.size() - 1;
  std::vector<long> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j) prod[i + j] += static_cast<long>(a[i]) * b[j];
  }
  for (auto& v : prod) v %= p;
  for (std::size_t k = 2 * e - 1; k >= e; --k) {
    const long c = prod[k] % p;
    if (c != 0) {
      for (std::size_t i = 0; i <= e; ++i) prod[k - e + i] = ((prod[k - e + i] - c * f[i]) % p + p) % p;
    }
    if (k == e) break;
  }
  Poly r(e);
  for (std::size_t i = 0; i < e; ++i) r[i] = static_cast<int>(((prod[i] % p) + p) % p);
  return r;
}

Poly polypowmod(Poly base, long k, const Poly& f, int p) {
  Poly result(f.size() - 1, 0);
  result[0] = 1;
  while (k > 0) {
    if (k & 1) result = polymulmod(result, base, f, p);
    k >>= 1;
    if (k) base = polymulmod(base, base, f, p);
  }
  return result;
}

// Does monic g (degree d) divide f (degree e)?
bool divides(const Poly& g, Poly f, int p) {
  const int d = static_cast<int>(g.size()) - 1;
  const int e = static_cast<int>(f.size()) - 1;
  for (int k = e; k >= d; --k) {
    const int c = f[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (int i = 0; i <= d; ++i) {
      auto& slot = f[static_cast<std::size_t>(k - d + i)];
      slot = static_cast<int>(((slot - static_cast<long>(c) * g[static_cast<std::size_t>(i)]) % p + p) % p);
    }
  }
  for (int i = 0; i < d; ++i) {
    if (f[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

// Coefficient vector for rank t: constant term is the most significant digit.
Poly digits_of(long t, int p, int e) {
  Poly c(static_cast<std::size_t>(e));
  for (int i = e - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = static_cast<int>(t % p);
    t /= p;
  }
  return c;
}

long rank_of(const Poly& c, int p) {
  long t = 0;
  for (int v : c) t = t * p + v;
  return t;
}

bool irreducible(const Poly& f, int p) {
  const int e = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= e / 2; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long t = 0; t < count; ++t) {
      Poly g = digits_of(t, p, d);
      g.push_back(1);
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

long lmod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::shared_ptr<const FiniteField> FiniteField::build(int p, int e, const FieldCaps& caps) {
  if (!is_prime(p)) throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw UsageError("field degree must be >= 1");
  long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > caps.max_q) {
      throw CapExceeded("field order " + std::to_string(p) + "^" + std::to_string(e) + " exceeds cap " +
                        std::to_string(caps.max_q));
    }
  }
  std::shared_ptr<FiniteField> f(new FiniteField());
  f->p_ = p;
  f->e_ = e;
  f->q_ = static_cast<int>(q);

  // Smallest monic irreducible, lower coefficients compared constant term first.
  for (long t = 0; t < q; ++t) {
    Poly cand = digits_of(t, p, e);
    cand.push_back(1);
    if (e == 1 || irreducible(cand, p)) {
      f->modulus_ = cand;
      break;
    }
  }
  const Poly& mod = f->modulus_;
  Poly one_poly(static_cast<std::size_t>(e), 0);
  one_poly[0] = 1;
  f->one_ = {static_cast<std::uint32_t>(rank_of(one_poly, p))};

  const auto factors = prime_factors(q - 1);
  long g_rank = -1;
  for (long t = 1; t < q && g_rank < 0; ++t) {
    Poly c = digits_of(t, p, e);
    bool primitive = true;
    for (long r : factors) {
      if (polypowmod(c, (q - 1) / r, mod, p) == one_poly) {
        primitive = false;
        break;
      }
    }
    if (primitive) g_rank = t;
  }
  if (g_rank < 0) throw ConsistencyError("no primitive root found");

  f->exp_.resize(static_cast<std::size_t>(q - 1));
  f->log_.assign(static_cast<std::size_t>(q), -1);
  Poly g = digits_of(g_rank, p, e);
  Poly cur = one_poly;
  for (long k = 0; k < q - 1; ++k) {
    const long r = rank_of(cur, p);
    f->exp_[static_cast<std::size_t>(k)] = {static_cast<std::uint32_t>(r)};
    f->log_[static_cast<std::size_t>(r)] = static_cast<std::int32_t>(k);
    cur = polymulmod(cur, g, mod, p);
  }

  if (e > 1 && q <= 1024) {
    f->add_table_.resize(static_cast<std::size_t>(q * q));
    for (long a = 0; a < q; ++a) {
      Poly da = digits_of(a, p, e);
      for (long b = 0; b < q; ++b) {
        Poly db = digits_of(b, p, e);
        Poly s(static_cast<std::size_t>(e));
        for (int i = 0; i < e; ++i) s[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
        f->add_table_[static_cast<std::size_t>(a * q + b)] = static_cast<std::uint32_t>(rank_of(s, p));
      }
    }
  }

  f->abs_trace_.resize(static_cast<std::size_t>(q));
  for (long x = 0; x < q; ++x) {
    FieldElement acc = f->zero();
    FieldElement term{static_cast<std::uint32_t>(x)};
    for (int i = 0; i < e; ++i) {
      acc = f->add(acc, term);
      term = f->pow(term, p);
    }
    const Poly d = f->coeffs(acc);
    for (int i = 1; i < e; ++i) {
      if (d[static_cast<std::size_t>(i)] != 0) throw ConsistencyError("absolute trace left the prime field");
    }
    f->abs_trace_[static_cast<std::size_t>(x)] = d[0];
  }
  return f;
}

std::shared_ptr<const FiniteField> FiniteField::build_q(long q, const FieldCaps& caps) {
  auto pp = factor_prime_power(q);
  if (!pp) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  return build(pp->p, pp->e, caps);
}

FieldElement FiniteField::from_coeffs(std::span<const int> c) const {
  if (static_cast<int>(c.size()) != e_) throw UsageError("coefficient vector has wrong length");
  long t = 0;
  for (int v : c) t = t * p_ + lmod(v, p_);
  return {static_cast<std::uint32_t>(t)};
}

std::vector<int> FiniteField::coeffs(FieldElement x) const { return digits_of(x.v, p_, e_); }

FieldElement FiniteField::from_int(long k) const {
  long t = lmod(k, p_);
  for (int i = 1; i < e_; ++i) t *= p_;
  return {static_cast<std::uint32_t>(t)};
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
  if (e_ == 1) return {static_cast<std::uint32_t>((a.v + b.v) % static_cast<std::uint32_t>(p_))};
  if (!add_table_.empty()) return {add_table_[static_cast<std::size_t>(a.v) * static_cast<std::size_t>(q_) + b.v]};
  long ra = a.v, rb = b.v, out = 0, scale = 1;
  for (int i = 0; i < e_; ++i) {
    out += ((ra % p_ + rb % p_) % p_) * scale;
    ra /= p_;
    rb /= p_;
    scale *= p_;
  }
  return {static_cast<std::uint32_t>(out)};
}

FieldElement FiniteField::neg(FieldElement a) const {
  if (e_ == 1) return {static_cast<std::uint32_t>((p_ - a.v % p_) % p_)};
  long ra = a.v, out = 0, scale = 1;
  for (int i = 0; i < e_; ++i) {
    out += ((p_ - ra % p_) % p_) * scale;
    ra /= p_;
    scale *= p_;
  }
  return {static_cast<std::uint32_t>(out)};
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const {
  if (a.v == 0 || b.v == 0) return zero();
  return exp_[static_cast<std::size_t>((log_[a.v] + log_[b.v]) % (q_ - 1))];
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.v == 0) throw UsageError("inverse of zero in F_q");
  return exp_[static_cast<std::size_t>((q_ - 1 - log_[a.v]) % (q_ - 1))];
}

FieldElement FiniteField::pow(FieldElement a, long k) const {
  if (a.v == 0) {
    if (k < 0) throw UsageError("negative power of zero");
    return k == 0 ? one() : zero();
  }
  return exp_[static_cast<std::size_t>(lmod(static_cast<long>(log_[a.v]) * lmod(k, q_ - 1), q_ - 1))];
}

long FiniteField::dlog(FieldElement x) const {
  if (x.v == 0) throw UsageError("discrete log of zero");
  return log_[x.v];
}

FieldElement FiniteField::exp(long k) const { return exp_[static_cast<std::size_t>(lmod(k, q_ - 1))]; }

long FiniteField::order(FieldElement x) const {
  const long l = dlog(x);
  long g = q_ - 1, a = l;
  while (a != 0) {
    long t = g % a;
    g = a;
    a = t;
  }
  return (q_ - 1) / g;
}

bool FiniteField::is_square(FieldElement x) const {
  if (p_ == 2 || x.v == 0) return true;
  return dlog(x) % 2 == 0;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const QuadraticExtension> QuadraticExtension::build(std::shared_ptr<const FiniteField> base,
                                                                    const FieldCaps& caps) {
  const long q = base->q();
  if (q * q > caps.max_ext_order) {
    throw CapExceeded("extension order " + std::to_string(q * q) + " exceeds cap " + std::to_string(caps.max_ext_order));
  }
  std::shared_ptr<QuadraticExtension> ext(new QuadraticExtension());
  ext->base_ = std::move(base);
  const FiniteField& F = *ext->base_;
  ext->odd_ = F.p() != 2;
  if (ext->odd_) {
    for (long t = 1; t < q; ++t) {
      FieldElement x{static_cast<std::uint32_t>(t)};
      if (!F.is_square(x)) {
        ext->nonresidue_ = x;
        break;
      }
    }
  } else {
    std::vector<bool> image(static_cast<std::size_t>(q), false);
    for (long t = 0; t < q; ++t) {
      FieldElement x{static_cast<std::uint32_t>(t)};
      image[F.add(F.mul(x, x), x).v] = true;
    }
    for (long t = 0; t < q; ++t) {
      if (!image[static_cast<std::size_t>(t)]) {
        ext->nonresidue_ = {static_cast<std::uint32_t>(t)};
        break;
      }
    }
  }

  const long order = q * q - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](ExtElement x, long k) {
    ExtElement r = ext->one();
    while (k > 0) {
      if (k & 1) r = ext->mul_slow(r, x);
      k >>= 1;
      if (k) x = ext->mul_slow(x, x);
    }
    return r;
  };
  ExtElement G{};
  bool found = false;
  for (long t = 1; t <= order && !found; ++t) {
    ExtElement cand{static_cast<std::uint32_t>(t)};
    bool primitive = true;
    for (long r : factors) {
      if (slow_pow(cand, order / r) == ext->one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      G = cand;
      found = true;
    }
  }
  if (!found) throw ConsistencyError("no primitive root of the quadratic extension");

  ext->exp_.resize(static_cast<std::size_t>(order));
  ext->log_.assign(static_cast<std::size_t>(q * q), -1);
  ExtElement cur = ext->one();
  for (long k = 0; k < order; ++k) {
    ext->exp_[static_cast<std::size_t>(k)] = cur;
    ext->log_[cur.v] = static_cast<std::int32_t>(k);
    cur = ext->mul_slow(cur, G);
  }
  if (cur != ext->one()) throw ConsistencyError("extension generator has wrong order");
  ext->norm_log_ = F.dlog(ext->norm(G));
  return ext;
}

ExtElement QuadraticExtension::add(ExtElement x, ExtElement y) const {
  const FiniteField& F = *base_;
  return make(F.add(a(x), a(y)), F.add(b(x), b(y)));
}

ExtElement QuadraticExtension::neg(ExtElement x) const {
  const FiniteField& F = *base_;
  return make(F.neg(a(x)), F.neg(b(x)));
}

ExtElement QuadraticExtension::mul_slow(ExtElement x, ExtElement y) const {
  const FiniteField& F = *base_;
  const FieldElement xa = a(x), xb = b(x), ya = a(y), yb = b(y);
  const FieldElement bb = F.mul(xb, yb);
  FieldElement ra = F.add(F.mul(xa, ya), F.mul(bb, nonresidue_));
  FieldElement rb = F.add(F.mul(xa, yb), F.mul(xb, ya));
  if (!odd_) rb = F.add(rb, bb);  // omega^2 = omega + Omega
  return make(ra, rb);
}

ExtElement QuadraticExtension::mul(ExtElement x, ExtElement y) const {
  if (x.v == 0 || y.v == 0) return zero();
  const long n = order() - 1;
  return exp_[static_cast<std::size_t>((static_cast<long>(log_[x.v]) + log_[y.v]) % n)];
}

ExtElement QuadraticExtension::inv(ExtElement x) const {
  if (x.v == 0) throw UsageError("inverse of zero in F_{q^2}");
  const long n = order() - 1;
  return exp_[static_cast<std::size_t>((n - log_[x.v]) % n)];
}

ExtElement QuadraticExtension::pow(ExtElement x, long k) const {
  if (x.v == 0) {
    if (k < 0) throw UsageError("negative power of zero");
    return k == 0 ? one() : zero();
  }
  const long n = order() - 1;
  return exp_[static_cast<std::size_t>(lmod(static_cast<long>(log_[x.v]) * lmod(k, n), n))];
}

ExtElement QuadraticExtension::frobenius(ExtElement x) const {
  const FiniteField& F = *base_;
  if (odd_) return make(a(x), F.neg(b(x)));
  // conj(omega) = omega + 1
  return make(F.add(a(x), b(x)), b(x));
}

FieldElement QuadraticExtension::norm(ExtElement x) const {
  const ExtElement n = mul(x, frobenius(x));
  if (!is_in_base_field(n)) throw ConsistencyError("norm left the base field");
  return a(n);
}

FieldElement QuadraticExtension::trace(ExtElement x) const {
  const ExtElement t = add(x, frobenius(x));
  if (!is_in_base_field(t)) throw ConsistencyError("trace left the base field");
  return a(t);
}

long QuadraticExtension::dlog(ExtElement x) const {
  if (x.v == 0) throw UsageError("discrete log of zero");
  return log_[x.v];
}

ExtElement QuadraticExtension::exp(long k) const { return exp_[static_cast<std::size_t>(lmod(k, order() - 1))]; }

bool QuadraticExtension::is_square(ExtElement x) const {
  if (!odd_ || x.v == 0) return true;
  return dlog(x) % 2 == 0;
}

}  // namespace mz
