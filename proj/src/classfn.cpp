#include "mz/classfn.hpp"

#include "mz/errors.hpp"

namespace mz {

ClassFunction::ClassFunction(std::shared_ptr<const Group> group, int conductor)
    : group_(std::move(group)), conductor_(conductor) {
  values_.assign(static_cast<std::size_t>(group_->num_classes()), CycNumber(conductor_, Rational(0)));
}

ClassFunction ClassFunction::from_rationals(std::shared_ptr<const Group> group, int conductor,
                                            const std::vector<Rational>& values) {
  ClassFunction f(std::move(group), conductor);
  if (static_cast<int>(values.size()) != f.num_classes()) throw UsageError("class function needs one value per class");
  for (int c = 0; c < f.num_classes(); ++c) f[c] = CycNumber(conductor, values[static_cast<std::size_t>(c)]);
  return f;
}

ClassFunction ClassFunction::indicator(std::shared_ptr<const Group> group, int conductor, int cls) {
  ClassFunction f(std::move(group), conductor);
  f[cls] = CycNumber(conductor, Rational(1));
  return f;
}

ClassFunction ClassFunction::character(const CharacterTable& t, int irrep) {
  ClassFunction f(t.group_ptr(), t.conductor());
  for (int c = 0; c < f.num_classes(); ++c) f[c] = t.value(irrep, c);
  return f;
}

ClassFunction ClassFunction::theta_torus_spectral(const CharacterTable& t) {
  std::vector<CycNumber> coeffs;
  const Rational order(t.group().order());
  for (int i = 0; i < t.num_irreps(); ++i) coeffs.emplace_back(t.conductor(), order / Rational(t.dim(i)));
  return from_fourier(t, coeffs);
}

ClassFunction ClassFunction::theta_square_spectral(const CharacterTable& t) {
  std::vector<CycNumber> coeffs;
  for (int i = 0; i < t.num_irreps(); ++i) coeffs.emplace_back(t.conductor(), Rational(t.fs(i)));
  return from_fourier(t, coeffs);
}

void ClassFunction::check_compatible(const ClassFunction& o) const {
  if (group_ != o.group_ || conductor_ != o.conductor_) {
    throw UsageError("class functions live on different groups or fields");
  }
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  check_compatible(o);
  ClassFunction r = *this;
  for (int c = 0; c < num_classes(); ++c) r[c] += o[c];
  return r;
}

ClassFunction ClassFunction::operator*(const Rational& s) const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v *= s;
  return r;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group_ == b.group_ && a.values_ == b.values_;
}

std::vector<CycNumber> ClassFunction::fourier(const CharacterTable& t) const {
  if (&t.group() != group_.get()) throw UsageError("character table belongs to another group");
  if (t.conductor() != conductor_) throw UsageError("class function and table use different conductors");
  const Rational inv_order = Rational(group_->order()).inverse();
  std::vector<CycNumber> a;
  a.reserve(static_cast<std::size_t>(t.num_irreps()));
  for (int i = 0; i < t.num_irreps(); ++i) {
    CycNumber acc(conductor_, Rational(0));
    for (int c = 0; c < num_classes(); ++c) {
      if (values_[static_cast<std::size_t>(c)].is_zero()) continue;
      acc += values_[static_cast<std::size_t>(c)] * t.value(i, c).conj() * Rational(group_->class_info(c).size);
    }
    a.push_back(acc * inv_order);
  }
  return a;
}

ClassFunction ClassFunction::from_fourier(const CharacterTable& t, const std::vector<CycNumber>& coeffs) {
  if (static_cast<int>(coeffs.size()) != t.num_irreps()) throw UsageError("need one Fourier coefficient per irrep");
  ClassFunction f(t.group_ptr(), t.conductor());
  for (int i = 0; i < t.num_irreps(); ++i) {
    const CycNumber& a = coeffs[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    for (int c = 0; c < f.num_classes(); ++c) f[c] += a * t.value(i, c);
  }
  return f;
}

ClassFunction ClassFunction::convolve(const CharacterTable& t, const ClassFunction& g) const {
  check_compatible(g);
  std::vector<CycNumber> a = fourier(t);
  const std::vector<CycNumber> b = g.fourier(t);
  for (int i = 0; i < t.num_irreps(); ++i) {
    auto& ai = a[static_cast<std::size_t>(i)];
    ai = ai * b[static_cast<std::size_t>(i)] * Rational(1, t.dim(i));
  }
  return from_fourier(t, a);
}

}  // namespace mz
