#include "mz/grp.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "mz/errors.hpp"

namespace mz {

std::shared_ptr<const Group> Group::build(GroupKind kind, long q, const FieldCaps& caps) {
  auto F = FiniteField::build_q(q, caps);
  auto E = QuadraticExtension::build(F, caps);
  std::shared_ptr<Group> gl(new Group());
  gl->kind_ = GroupKind::GL2;
  gl->F_ = F;
  gl->E_ = E;
  gl->order_ = q * (q - 1) * (q - 1) * (q + 1);
  gl->build_gl_classes();
  gl->finish();
  if (kind == GroupKind::GL2) return gl;

  std::shared_ptr<Group> pgl(new Group());
  pgl->kind_ = GroupKind::PGL2;
  pgl->F_ = F;
  pgl->E_ = E;
  pgl->order_ = q * (q - 1) * (q + 1);
  pgl->nonscalar_class_ = gl->nonscalar_class_;
  pgl->build_pgl_classes(*gl);
  pgl->finish();
  return pgl;
}

std::string Group::name() const {
  return std::string(is_pgl() ? "PGL" : "GL") + "(2," + std::to_string(q()) + ")";
}

ExtElement Group::canonical_elliptic_gl(ExtElement lambda) const {
  const ExtElement bar = E_->frobenius(lambda);
  return E_->dlog(bar) < E_->dlog(lambda) ? bar : lambda;
}

ExtElement Group::canonical_elliptic_pgl(ExtElement lambda) const {
  const FiniteField& F = *F_;
  ExtElement scaled;
  if (E_->odd()) {
    const FieldElement t = E_->trace(lambda);
    if (t == F.zero()) {
      // Every trace-zero class is the class of delta.
      scaled = E_->generator_t();
    } else {
      scaled = E_->mul(lambda, E_->embed(F.div(F.from_int(2), t)));
    }
  } else {
    // Square roots are x -> x^{q/2} in characteristic 2.
    const FieldElement root = F.pow(E_->norm(lambda), q() / 2);
    scaled = E_->mul(lambda, E_->embed(F.inv(root)));
  }
  return canonical_elliptic_gl(scaled);
}

void Group::build_gl_classes() {
  const FiniteField& F = *F_;
  const int qq = q();
  const long n = E_->order() - 1;
  classes_.clear();
  for (long k = 0; k < qq - 1; ++k) {
    ConjClass c{ClassType::Central, F.exp(k), F.zero(), {}};
    classes_.push_back({c, {}, 1, 0, {}});
  }
  for (long k = 0; k < qq - 1; ++k) {
    ConjClass c{ClassType::Unipotent, F.exp(k), F.zero(), {}};
    classes_.push_back({c, {}, static_cast<long>(qq - 1) * (qq + 1), 0, {}});
  }
  for (long i = 0; i < qq - 1; ++i) {
    for (long j = i + 1; j < qq - 1; ++j) {
      ConjClass c{ClassType::Diagonal, F.exp(i), F.exp(j), {}};
      classes_.push_back({c, {}, static_cast<long>(qq) * (qq + 1), 0, {}});
    }
  }
  for (long k = 0; k < n; ++k) {
    const ExtElement lam = E_->exp(k);
    if (E_->is_in_base_field(lam)) continue;
    if (E_->dlog(E_->frobenius(lam)) < k) continue;
    ConjClass c{ClassType::Elliptic, F.zero(), F.zero(), lam};
    classes_.push_back({c, {}, static_cast<long>(qq) * (qq - 1), 0, {}});
  }

  nonscalar_class_.assign(static_cast<std::size_t>(qq) * qq, ConjClass{});
  for (const auto& info : classes_) {
    if (info.cls.type == ClassType::Central) continue;
    const Mat2 m = class_matrix(info.cls);
    nonscalar_class_[static_cast<std::size_t>(trace(m).v) * qq + det(m).v] = info.cls;
  }
}

void Group::build_pgl_classes(const Group& gl) {
  std::map<ConjClass, long> sizes;
  for (const auto& info : gl.classes()) sizes[project(info.cls)] += info.size;
  classes_.clear();
  for (const auto& [cls, total] : sizes) {
    if (total % (q() - 1) != 0) throw ConsistencyError("PGL class size is not an integer");
    classes_.push_back({cls, {}, total / (q() - 1), 0, {}});
  }
  auto key = [this](const ClassInfo& c) {
    const long dx = c.cls.type == ClassType::Elliptic ? 0 : F_->dlog(c.cls.x);
    const long dl = c.cls.type == ClassType::Elliptic ? E_->dlog(c.cls.lambda) : 0;
    return std::tuple(static_cast<int>(c.cls.type), dx, dl);
  };
  std::sort(classes_.begin(), classes_.end(), [&](const ClassInfo& a, const ClassInfo& b) { return key(a) < key(b); });
}

void Group::finish() {
  index_.clear();
  long total = 0;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    auto& info = classes_[i];
    info.rep = normalize(class_matrix(info.cls));
    info.label = class_label(info.cls);
    if (order_ % info.size != 0) throw ConsistencyError("class size does not divide the group order");
    info.centralizer_order = order_ / info.size;
    total += info.size;
    index_[info.cls] = static_cast<int>(i);
  }
  if (total != order_) throw ConsistencyError("class equation fails for " + name());
  identity_class_ = index_.at(ConjClass{ClassType::Central, F_->one(), F_->zero(), {}});
  square_class_.resize(classes_.size());
  inverse_class_.resize(classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const Mat2& r = classes_[i].rep;
    square_class_[i] = classify(mul(r, r));
    inverse_class_[i] = classify(inv(r));
  }
}

int Group::class_index(const ConjClass& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) throw UsageError("not a canonical class of " + name());
  return it->second;
}

ConjClass Group::classify_gl(const Mat2& m) const {
  const FiniteField& F = *F_;
  if (det(m) == F.zero()) throw UsageError("singular matrix has no conjugacy class");
  if (m.b == F.zero() && m.c == F.zero() && m.a == m.d) return {ClassType::Central, m.a, F.zero(), {}};
  return nonscalar_class_[static_cast<std::size_t>(trace(m).v) * q() + det(m).v];
}

ConjClass Group::project(const ConjClass& gl) const {
  const FiniteField& F = *F_;
  switch (gl.type) {
    case ClassType::Central:
      return {ClassType::Central, F.one(), F.zero(), {}};
    case ClassType::Unipotent:
      return {ClassType::Unipotent, F.one(), F.zero(), {}};
    case ClassType::Diagonal: {
      FieldElement z = F.div(gl.x, gl.y);
      const FieldElement zi = F.inv(z);
      if (F.dlog(zi) < F.dlog(z)) z = zi;
      return {ClassType::Diagonal, z, F.one(), {}};
    }
    case ClassType::Elliptic:
      return {ClassType::Elliptic, F.zero(), F.zero(), canonical_elliptic_pgl(gl.lambda)};
  }
  throw ConsistencyError("unknown class type");
}

int Group::classify(const Mat2& m) const {
  const ConjClass c = classify_gl(m);
  return class_index(is_pgl() ? project(c) : c);
}

Centralizer Group::centralizer(int i) const {
  if (is_pgl()) throw UsageError("centralizer structure is only tabulated for GL(2)");
  const auto& info = class_info(i);
  switch (info.cls.type) {
    case ClassType::Central:
      return {CentralizerKind::Full, order_};
    case ClassType::Unipotent:
      return {CentralizerKind::Unipotent, info.centralizer_order};
    case ClassType::Diagonal:
      return {CentralizerKind::SplitTorus, info.centralizer_order};
    case ClassType::Elliptic:
      return {CentralizerKind::EllipticTorus, info.centralizer_order};
  }
  throw ConsistencyError("unknown class type");
}

Mat2 Group::identity() const { return scalar(F_->one()); }

Mat2 Group::scalar(FieldElement x) const { return {x, F_->zero(), F_->zero(), x}; }

Mat2 Group::mul(const Mat2& x, const Mat2& y) const {
  const FiniteField& F = *F_;
  Mat2 r{F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
         F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
  return normalize(r);
}

Mat2 Group::inv(const Mat2& x) const {
  const FiniteField& F = *F_;
  const FieldElement di = F.inv(det(x));
  return normalize({F.mul(x.d, di), F.neg(F.mul(x.b, di)), F.neg(F.mul(x.c, di)), F.mul(x.a, di)});
}

FieldElement Group::det(const Mat2& x) const { return F_->sub(F_->mul(x.a, x.d), F_->mul(x.b, x.c)); }

FieldElement Group::trace(const Mat2& x) const { return F_->add(x.a, x.d); }

Mat2 Group::normalize(const Mat2& x) const {
  if (!is_pgl()) return x;
  const FiniteField& F = *F_;
  const FieldElement lead = x.a != F.zero() ? x.a : x.b;
  if (lead == F.one()) return x;
  const FieldElement s = F.inv(lead);
  return {F.mul(x.a, s), F.mul(x.b, s), F.mul(x.c, s), F.mul(x.d, s)};
}

Mat2 Group::class_matrix(const ConjClass& c) const {
  const FiniteField& F = *F_;
  switch (c.type) {
    case ClassType::Central:
      return scalar(c.x);
    case ClassType::Unipotent:
      return {c.x, F.one(), F.zero(), c.x};
    case ClassType::Diagonal:
      return {c.x, F.zero(), F.zero(), c.y};
    case ClassType::Elliptic:
      return {F.zero(), F.neg(E_->norm(c.lambda)), F.one(), E_->trace(c.lambda)};
  }
  throw ConsistencyError("unknown class type");
}

std::string Group::class_label(const ConjClass& c) const {
  const FiniteField& F = *F_;
  switch (c.type) {
    case ClassType::Central:
      return "c1:" + std::to_string(F.dlog(c.x));
    case ClassType::Unipotent:
      return "c2:" + std::to_string(F.dlog(c.x));
    case ClassType::Diagonal:
      return "c3:" + std::to_string(F.dlog(c.x)) + "," + std::to_string(F.dlog(c.y));
    case ClassType::Elliptic:
      return "c4:" + std::to_string(E_->dlog(c.lambda));
  }
  throw ConsistencyError("unknown class type");
}

namespace {

long parse_index(std::string_view text, std::string_view spec) {
  long v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty() || v < 0) {
    throw UsageError("malformed class spec '" + std::string(spec) + "'");
  }
  return v;
}

}  // namespace

int parse_class_spec(const Group& g, std::string_view spec) {
  const auto bad = [&](const std::string& why) { return UsageError("class spec '" + std::string(spec) + "': " + why); };
  if (spec.size() < 4 || spec[0] != 'c' || spec[2] != ':') throw bad("expected c1:k, c2:k, c3:i,j or c4:k");
  const FiniteField& F = g.F();
  const QuadraticExtension& E = g.E();
  const std::string_view body = spec.substr(3);
  const long m = g.q() - 1;
  ConjClass c;
  switch (spec[1]) {
    case '1':
    case '2': {
      const long k = parse_index(body, spec);
      if (k >= m) throw bad("index must be below q-1");
      c = {spec[1] == '1' ? ClassType::Central : ClassType::Unipotent, F.exp(k), F.zero(), {}};
      break;
    }
    case '3': {
      const auto comma = body.find(',');
      if (comma == std::string_view::npos) throw bad("c3 needs two indices");
      long i = parse_index(body.substr(0, comma), spec), j = parse_index(body.substr(comma + 1), spec);
      if (i >= m || j >= m) throw bad("indices must be below q-1");
      if (i == j) throw bad("equal eigenvalues give a central class");
      if (j < i) std::swap(i, j);
      c = {ClassType::Diagonal, F.exp(i), F.exp(j), {}};
      break;
    }
    case '4': {
      const long k = parse_index(body, spec);
      if (k >= E.order() - 1) throw bad("index must be below q^2-1");
      const ExtElement lam = E.exp(k);
      if (E.is_in_base_field(lam)) throw bad("eigenvalue lies in the base field");
      const ExtElement bar = E.frobenius(lam);
      c = {ClassType::Elliptic, F.zero(), F.zero(), E.dlog(bar) < k ? bar : lam};
      break;
    }
    default:
      throw bad("unknown class type");
  }
  return g.class_index(g.is_pgl() ? g.project(c) : c);
}

// ---------------------------------------------------------------------------

GroupElements::GroupElements(std::shared_ptr<const Group> group, const EnumCaps& caps) : group_(std::move(group)) {
  const Group& G = *group_;
  if (G.order() > caps.max_group_order) {
    throw CapExceeded("enumerating " + G.name() + " needs " + std::to_string(G.order()) + " elements, cap is " +
                      std::to_string(caps.max_group_order));
  }
  const std::uint32_t q = static_cast<std::uint32_t>(G.q());
  lookup_.assign(static_cast<std::size_t>(q) * q * q * q, -1);
  elems_.reserve(static_cast<std::size_t>(G.order()));
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      for (std::uint32_t c = 0; c < q; ++c) {
        for (std::uint32_t d = 0; d < q; ++d) {
          const Mat2 m{{a}, {b}, {c}, {d}};
          if (G.det(m) == G.F().zero()) continue;
          if (G.normalize(m) != m) continue;
          lookup_[encode(m)] = static_cast<std::int32_t>(elems_.size());
          elems_.push_back(m);
        }
      }
    }
  }
  if (static_cast<long>(elems_.size()) != G.order()) throw ConsistencyError("element count disagrees with |G|");
  class_of_.resize(elems_.size());
  inv_.resize(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    class_of_[i] = G.classify(elems_[i]);
    inv_[i] = index_of(G.inv(elems_[i]));
  }
  identity_ = index_of(G.identity());
}

std::uint32_t GroupElements::encode(const Mat2& m) const {
  const std::uint32_t q = static_cast<std::uint32_t>(group_->q());
  return ((m.a.v * q + m.b.v) * q + m.c.v) * q + m.d.v;
}

long GroupElements::index_of(const Mat2& m) const {
  const std::int32_t i = lookup_[encode(group_->normalize(m))];
  if (i < 0) throw UsageError("matrix is not an element of " + group_->name());
  return i;
}

long GroupElements::mul(long i, long j) const { return index_of(group_->mul(element(i), element(j))); }

}  // namespace mz
