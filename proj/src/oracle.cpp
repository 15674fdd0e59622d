#include "mz/oracle.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "mz/errors.hpp"

namespace mz {
namespace {

// Splits [0, n) into contiguous ranges, runs body(begin, end) on each and folds the results.
template <class T, class Body, class Combine>
T parallel_reduce(long n, int jobs, T init, Body body, Combine combine) {
  const long workers = std::max(1L, std::min<long>(jobs, n));
  if (workers == 1) return combine(std::move(init), body(0L, n));
  std::vector<T> partial(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  for (long w = 0; w < workers; ++w) {
    const long begin = n * w / workers, end = n * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] { partial[static_cast<std::size_t>(w)] = body(begin, end); });
  }
  for (auto& th : threads) th.join();
  for (auto& p : partial) init = combine(std::move(init), std::move(p));
  return init;
}

std::vector<long> add_vectors(std::vector<long> a, const std::vector<long>& b) {
  if (a.empty()) return b;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

long commutator(const GroupElements& el, long a, long b) {
  return el.mul(el.mul(a, b), el.mul(el.inv(a), el.inv(b)));
}

std::vector<Rational> rational_values(const ClassFunction& f) {
  std::vector<Rational> out;
  out.reserve(f.values().size());
  for (const auto& v : f.values()) {
    auto r = v.as_rational();
    if (!r) throw UsageError("oracle convolution expects rational class functions");
    out.push_back(*r);
  }
  return out;
}

// Odometer over slots; each slot ranges over its own candidate list.
template <class Visit>
void for_each_tuple(const std::vector<const std::vector<long>*>& slots, long first_begin, long first_end, Visit visit) {
  if (slots.empty()) {
    if (first_begin == 0 && first_end > 0) visit(std::vector<long>{});
    return;
  }
  std::vector<std::size_t> pos(slots.size(), 0);
  pos[0] = static_cast<std::size_t>(first_begin);
  if (first_begin >= first_end) return;
  for (const auto* s : slots) {
    if (s->empty()) return;
  }
  std::vector<long> tuple(slots.size());
  while (true) {
    for (std::size_t i = 0; i < slots.size(); ++i) tuple[i] = (*slots[i])[pos[i]];
    visit(tuple);
    std::size_t i = slots.size();
    while (i > 0) {
      --i;
      ++pos[i];
      const std::size_t limit = i == 0 ? static_cast<std::size_t>(first_end) : slots[i]->size();
      if (pos[i] < limit) break;
      if (i == 0) return;
      pos[i] = 0;
    }
  }
}

}  // namespace

Oracle::Oracle(std::shared_ptr<const Group> group, const OracleConfig& config)
    : group_(std::move(group)), config_(config) {
  elems_ = std::make_unique<GroupElements>(group_, config_.caps);
  conductor_ = group_->q() * group_->q() - 1;
}

void Oracle::check_pairs(long count, const char* what) const {
  if (count > config_.caps.max_pairs) {
    throw CapExceeded(std::string(what) + " on " + group_->name() + " needs " + std::to_string(count) +
                      " enumeration steps, cap is " + std::to_string(config_.caps.max_pairs));
  }
}

const ClassFunction& Oracle::theta_torus() const {
  if (theta_torus_) return *theta_torus_;
  const GroupElements& el = *elems_;
  const long n = el.size();
  check_pairs(n * n, "commutator enumeration");
  const std::size_t nc = static_cast<std::size_t>(group_->num_classes());
  auto counts = parallel_reduce(
      n, config_.jobs, std::vector<long>{},
      [&](long begin, long end) {
        std::vector<long> c(nc, 0);
        for (long a = begin; a < end; ++a) {
          for (long b = 0; b < n; ++b) ++c[static_cast<std::size_t>(el.class_of(commutator(el, a, b)))];
        }
        return c;
      },
      add_vectors);
  std::vector<Rational> values;
  for (std::size_t c = 0; c < nc; ++c) {
    values.push_back(Rational(counts[c], group_->class_info(static_cast<int>(c)).size));
  }
  theta_torus_ = std::make_unique<ClassFunction>(ClassFunction::from_rationals(group_, conductor_, values));
  return *theta_torus_;
}

const ClassFunction& Oracle::theta_square() const {
  if (theta_square_) return *theta_square_;
  const GroupElements& el = *elems_;
  const std::size_t nc = static_cast<std::size_t>(group_->num_classes());
  std::vector<long> counts(nc, 0);
  for (long h = 0; h < el.size(); ++h) ++counts[static_cast<std::size_t>(el.class_of(el.mul(h, h)))];
  std::vector<Rational> values;
  for (std::size_t c = 0; c < nc; ++c) {
    values.push_back(Rational(counts[c], group_->class_info(static_cast<int>(c)).size));
  }
  theta_square_ = std::make_unique<ClassFunction>(ClassFunction::from_rationals(group_, conductor_, values));
  return *theta_square_;
}

void Oracle::set_theta(const std::vector<Rational>& torus, const std::vector<Rational>& square) {
  auto t = ClassFunction::from_rationals(group_, conductor_, torus);
  auto s = ClassFunction::from_rationals(group_, conductor_, square);
  // A cached table must still account for every pair and every element.
  Rational total_t(0), total_s(0);
  for (int c = 0; c < group_->num_classes(); ++c) {
    total_t += torus[static_cast<std::size_t>(c)] * Rational(group_->class_info(c).size);
    total_s += square[static_cast<std::size_t>(c)] * Rational(group_->class_info(c).size);
  }
  const Rational order(group_->order());
  if (total_t != order * order || total_s != order) throw UsageError("cached theta values fail the counting check");
  theta_torus_ = std::make_unique<ClassFunction>(std::move(t));
  theta_square_ = std::make_unique<ClassFunction>(std::move(s));
}

void Oracle::build_structure_constants() const {
  if (!structure_.empty()) return;
  const GroupElements& el = *elems_;
  const long nc = group_->num_classes();
  std::vector<long> reps(static_cast<std::size_t>(nc), -1);
  for (long x = 0; x < el.size(); ++x) {
    auto& r = reps[static_cast<std::size_t>(el.class_of(x))];
    if (r < 0) r = x;
  }
  structure_ = parallel_reduce(
      nc, config_.jobs, std::vector<long>{},
      [&](long begin, long end) {
        std::vector<long> a(static_cast<std::size_t>(nc * nc * nc), 0);
        for (long k = begin; k < end; ++k) {
          const long z = reps[static_cast<std::size_t>(k)];
          for (long x = 0; x < el.size(); ++x) {
            const long i = el.class_of(x), j = el.class_of(el.mul(el.inv(x), z));
            ++a[static_cast<std::size_t>((i * nc + j) * nc + k)];
          }
        }
        return a;
      },
      add_vectors);
}

long Oracle::structure_constant(int i, int j, int k) const {
  build_structure_constants();
  const long nc = group_->num_classes();
  return structure_[static_cast<std::size_t>((i * nc + j) * nc + k)];
}

ClassFunction Oracle::convolve(const ClassFunction& f, const ClassFunction& g) const {
  build_structure_constants();
  const int nc = group_->num_classes();
  const auto fv = rational_values(f), gv = rational_values(g);
  std::vector<Rational> out(static_cast<std::size_t>(nc), Rational(0));
  for (int i = 0; i < nc; ++i) {
    if (fv[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < nc; ++j) {
      if (gv[static_cast<std::size_t>(j)].is_zero()) continue;
      const Rational w = fv[static_cast<std::size_t>(i)] * gv[static_cast<std::size_t>(j)];
      for (int k = 0; k < nc; ++k) {
        const long a = structure_[static_cast<std::size_t>((i * nc + j) * nc + k)];
        if (a != 0) out[static_cast<std::size_t>(k)] += w * Rational(a);
      }
    }
  }
  return ClassFunction::from_rationals(group_, conductor_, out);
}

Rational Oracle::hom_count(const SurfaceSpec& spec) const {
  spec.validate(*group_);
  ClassFunction f = ClassFunction::indicator(group_, conductor_, group_->identity_class());
  const ClassFunction& theta = spec.orientable ? theta_torus() : theta_square();
  for (long i = 0; i < spec.genus; ++i) f = convolve(f, theta);
  for (int c : spec.boundaries) f = convolve(f, ClassFunction::indicator(group_, conductor_, c));
  return *f.at_identity().as_rational();
}

Rational Oracle::direct_hom_count(const SurfaceSpec& spec) const {
  spec.validate(*group_);
  const GroupElements& el = *elems_;
  std::vector<long> all(static_cast<std::size_t>(el.size()));
  for (long i = 0; i < el.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<long>> class_elems(static_cast<std::size_t>(group_->num_classes()));
  for (long i = 0; i < el.size(); ++i) class_elems[static_cast<std::size_t>(el.class_of(i))].push_back(i);

  const long gens = spec.orientable ? 2 * spec.genus : spec.genus;
  std::vector<const std::vector<long>*> slots(static_cast<std::size_t>(gens), &all);
  const std::size_t r = spec.boundaries.size();
  for (std::size_t j = 0; j + 1 < r; ++j) slots.push_back(&class_elems[static_cast<std::size_t>(spec.boundaries[j])]);
  long steps = 1;
  for (const auto* s : slots) {
    steps *= static_cast<long>(s->size());
    check_pairs(steps, "tuple enumeration");
  }
  const int last = r > 0 ? spec.boundaries.back() : -1;
  const long first_size = slots.empty() ? 1 : static_cast<long>(slots[0]->size());
  const long e = el.identity();
  const long count = parallel_reduce(
      first_size, config_.jobs, 0L,
      [&](long begin, long end) {
        long c = 0;
        for_each_tuple(slots, begin, end, [&](const std::vector<long>& t) {
          long w = e;
          std::size_t pos = 0;
          for (long i = 0; i < (spec.orientable ? spec.genus : 0); ++i, pos += 2) {
            w = el.mul(w, commutator(el, t[pos], t[pos + 1]));
          }
          for (long i = 0; i < (spec.orientable ? 0 : spec.genus); ++i, ++pos) w = el.mul(w, el.mul(t[pos], t[pos]));
          for (; pos < t.size(); ++pos) w = el.mul(w, t[pos]);
          // The last boundary holonomy is forced to be w^-1.
          if (last < 0 ? w == e : el.class_of(el.inv(w)) == last) ++c;
        });
        return c;
      },
      [](long a, long b) { return a + b; });
  return Rational(count);
}

std::vector<long> Oracle::centralizer_of(long k) const {
  const GroupElements& el = *elems_;
  std::vector<long> out;
  for (long x = 0; x < el.size(); ++x) {
    if (el.mul(x, k) == el.mul(k, x)) out.push_back(x);
  }
  return out;
}

Rational Oracle::subgroup_hom_count(const std::vector<long>& sub, const SurfaceSpec& spec) const {
  const GroupElements& el = *elems_;
  const long h = static_cast<long>(sub.size());
  check_pairs(h * h, "subgroup enumeration");
  std::vector<long> pos(static_cast<std::size_t>(el.size()), -1);
  for (long i = 0; i < h; ++i) pos[static_cast<std::size_t>(sub[static_cast<std::size_t>(i)])] = i;
  auto at = [&](long g) {
    const long p = pos[static_cast<std::size_t>(g)];
    if (p < 0) throw ConsistencyError("subgroup is not closed under multiplication");
    return static_cast<std::size_t>(p);
  };
  // Element-level functions on H and their convolution (f * g)(xy) += f(x) g(y).
  using Fn = std::vector<Rational>;
  auto convolve_h = [&](const Fn& f, const Fn& g) {
    Fn out(static_cast<std::size_t>(h), Rational(0));
    for (long x = 0; x < h; ++x) {
      if (f[static_cast<std::size_t>(x)].is_zero()) continue;
      for (long y = 0; y < h; ++y) {
        if (g[static_cast<std::size_t>(y)].is_zero()) continue;
        out[at(el.mul(sub[static_cast<std::size_t>(x)], sub[static_cast<std::size_t>(y)]))] +=
            f[static_cast<std::size_t>(x)] * g[static_cast<std::size_t>(y)];
      }
    }
    return out;
  };
  Fn theta(static_cast<std::size_t>(h), Rational(0));
  for (long a = 0; a < h; ++a) {
    if (spec.orientable) {
      for (long b = 0; b < h; ++b) {
        theta[at(commutator(el, sub[static_cast<std::size_t>(a)], sub[static_cast<std::size_t>(b)]))] += Rational(1);
      }
    } else {
      const long x = sub[static_cast<std::size_t>(a)];
      theta[at(el.mul(x, x))] += Rational(1);
    }
  }
  Fn f(static_cast<std::size_t>(h), Rational(0));
  f[at(el.identity())] = Rational(1);
  for (long i = 0; i < spec.genus; ++i) f = convolve_h(f, theta);
  for (int c : spec.boundaries) {
    Fn ind(static_cast<std::size_t>(h), Rational(0));
    for (long i = 0; i < h; ++i) {
      if (el.class_of(sub[static_cast<std::size_t>(i)]) == c) ind[static_cast<std::size_t>(i)] = Rational(1);
    }
    f = convolve_h(f, ind);
  }
  return f[at(el.identity())];
}

Rational Oracle::quotient_count_burnside(const SurfaceSpec& spec) const {
  spec.validate(*group_);
  const GroupElements& el = *elems_;
  std::vector<long> reps(static_cast<std::size_t>(group_->num_classes()), -1);
  std::vector<long> sizes(static_cast<std::size_t>(group_->num_classes()), 0);
  for (long x = 0; x < el.size(); ++x) {
    const auto c = static_cast<std::size_t>(el.class_of(x));
    if (reps[c] < 0) reps[c] = x;
    ++sizes[c];
  }
  Rational total(0);
  std::optional<Rational> whole;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const std::vector<long> cent = centralizer_of(reps[c]);
    Rational fix;
    if (static_cast<long>(cent.size()) == el.size()) {
      if (!whole) whole = hom_count(spec);
      fix = *whole;
    } else {
      fix = subgroup_hom_count(cent, spec);
    }
    total += Rational(sizes[c]) * fix;
  }
  return total / Rational(el.size());
}

Rational Oracle::quotient_count_orbits(const SurfaceSpec& spec) const {
  spec.validate(*group_);
  const GroupElements& el = *elems_;
  std::vector<long> all(static_cast<std::size_t>(el.size()));
  for (long i = 0; i < el.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<long>> class_elems(static_cast<std::size_t>(group_->num_classes()));
  for (long i = 0; i < el.size(); ++i) class_elems[static_cast<std::size_t>(el.class_of(i))].push_back(i);

  const long gens = spec.orientable ? 2 * spec.genus : spec.genus;
  std::vector<const std::vector<long>*> slots(static_cast<std::size_t>(gens), &all);
  for (int c : spec.boundaries) slots.push_back(&class_elems[static_cast<std::size_t>(c)]);
  long steps = 1;
  for (const auto* s : slots) {
    steps *= static_cast<long>(s->size());
    check_pairs(steps, "explicit orbit enumeration");
  }
  std::set<std::vector<long>> homs;
  const long e = el.identity();
  const long first_size = slots.empty() ? 1 : static_cast<long>(slots[0]->size());
  for_each_tuple(slots, 0, first_size, [&](const std::vector<long>& t) {
    long w = e;
    std::size_t pos = 0;
    for (long i = 0; i < (spec.orientable ? spec.genus : 0); ++i, pos += 2) {
      w = el.mul(w, commutator(el, t[pos], t[pos + 1]));
    }
    for (long i = 0; i < (spec.orientable ? 0 : spec.genus); ++i, ++pos) w = el.mul(w, el.mul(t[pos], t[pos]));
    for (; pos < t.size(); ++pos) w = el.mul(w, t[pos]);
    if (w == e) homs.insert(t);
  });
  check_pairs(static_cast<long>(homs.size()) * el.size(), "orbit partition");
  std::set<std::vector<long>> seen;
  long orbits = 0;
  for (const auto& t : homs) {
    if (seen.count(t)) continue;
    ++orbits;
    for (long g = 0; g < el.size(); ++g) {
      std::vector<long> u(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) u[i] = el.mul(el.mul(g, t[i]), el.inv(g));
      seen.insert(std::move(u));
    }
  }
  return Rational(orbits);
}

Rational Oracle::fs(const CharacterTable& t, int irrep) const {
  const GroupElements& el = *elems_;
  CycNumber acc(t.conductor(), Rational(0));
  std::vector<long> counts(static_cast<std::size_t>(group_->num_classes()), 0);
  for (long g = 0; g < el.size(); ++g) ++counts[static_cast<std::size_t>(el.class_of(el.mul(g, g)))];
  for (int c = 0; c < group_->num_classes(); ++c) {
    if (counts[static_cast<std::size_t>(c)] != 0) acc += t.value(irrep, c) * Rational(counts[static_cast<std::size_t>(c)]);
  }
  auto r = (acc * Rational(1, el.size())).as_rational();
  if (!r || !r->is_integer()) throw ConsistencyError("Frobenius-Schur sum is not an integer");
  return *r;
}

namespace {

Rational element_bracket(const GroupElements& el, const CharacterTable& t, int i, int j, int k, bool conj_last) {
  std::vector<long> counts(static_cast<std::size_t>(t.group().num_classes()), 0);
  for (long g = 0; g < el.size(); ++g) ++counts[static_cast<std::size_t>(el.class_of(g))];
  CycNumber acc(t.conductor(), Rational(0));
  for (int c = 0; c < t.group().num_classes(); ++c) {
    const CycNumber last = conj_last ? t.value(k, c).conj() : t.value(k, c);
    acc += t.value(i, c) * t.value(j, c) * last * Rational(counts[static_cast<std::size_t>(c)]);
  }
  auto r = (acc * Rational(1, el.size())).as_rational();
  if (!r || !r->is_integer() || r->sign() < 0) throw ConsistencyError("bracket sum is not a non-negative integer");
  return *r;
}

}  // namespace

Rational Oracle::triple(const CharacterTable& t, int i, int j, int k) const {
  return element_bracket(*elems_, t, i, j, k, false);
}

Rational Oracle::fusion(const CharacterTable& t, int i, int j, int k) const {
  return element_bracket(*elems_, t, i, j, k, true);
}

CycNumber Oracle::induced_char_value(const AbelianCentralizer& h, long rho, int gamma_cls) const {
  const GroupElements& el = *elems_;
  const long gamma = el.index_of(group_->class_info(gamma_cls).rep);
  CycNumber acc(h.conductor(), Rational(0));
  for (long x = 0; x < el.size(); ++x) {
    const Mat2& y = el.element(el.mul(el.mul(x, gamma), el.inv(x)));
    if (h.contains(y)) acc.add_root(h.exponent(rho, y), Rational(1));
  }
  return acc * Rational(1, h.order());
}

}  // namespace mz
