#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mz/ffield.hpp"

namespace mz {

enum class GroupKind { GL2, PGL2 };

struct Mat2 {
  FieldElement a, b, c, d;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

enum class ClassType : int { Central = 1, Unipotent = 2, Diagonal = 3, Elliptic = 4 };

/// Conjugacy class label. In GL(2):
///   Central(x), Unipotent(x), Diagonal(x, y) with dlog x < dlog y, Elliptic(lambda)
///   with lambda the smaller-dlog member of {lambda, conj lambda}.
/// In PGL(2) the same tags name the canonical lifts:
///   Central(1) = identity, Unipotent(1), Diagonal(x, 1) with dlog x <= dlog x^{-1},
///   Elliptic(lambda) with lambda normalised (Tr = 0 or 2 for q odd, N = 1 for q even).
struct ConjClass {
  ClassType type = ClassType::Central;
  FieldElement x, y;
  ExtElement lambda;
  friend auto operator<=>(const ConjClass&, const ConjClass&) = default;
};

struct ClassInfo {
  ConjClass cls;
  Mat2 rep;
  long size = 0;
  long centralizer_order = 0;
  std::string label;
};

// Structure of the centralizer of a GL(2) class representative.
enum class CentralizerKind { Full, Unipotent, SplitTorus, EllipticTorus };

struct Centralizer {
  CentralizerKind kind;
  long order;
};

class Group {
 public:
  static std::shared_ptr<const Group> build(GroupKind kind, long q, const FieldCaps& caps = {});

  GroupKind kind() const { return kind_; }
  bool is_pgl() const { return kind_ == GroupKind::PGL2; }
  int q() const { return F_->q(); }
  long order() const { return order_; }
  const FiniteField& F() const { return *F_; }
  const QuadraticExtension& E() const { return *E_; }
  const std::shared_ptr<const QuadraticExtension>& E_ptr() const { return E_; }
  std::string name() const;

  const std::vector<ClassInfo>& classes() const { return classes_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const ClassInfo& class_info(int i) const { return classes_.at(static_cast<std::size_t>(i)); }
  int class_index(const ConjClass& c) const;
  int identity_class() const { return identity_class_; }

  // Canonical GL(2) class of an invertible matrix (ignores the group kind).
  ConjClass classify_gl(const Mat2& m) const;
  // PGL(2) class of the image of a GL(2) class.
  ConjClass project(const ConjClass& gl) const;
  // Index of the class of m in this group.
  int classify(const Mat2& m) const;

  int square_class(int i) const { return square_class_.at(static_cast<std::size_t>(i)); }
  int inverse_class(int i) const { return inverse_class_.at(static_cast<std::size_t>(i)); }
  // GL(2) only.
  Centralizer centralizer(int i) const;

  Mat2 identity() const;
  Mat2 mul(const Mat2& x, const Mat2& y) const;
  Mat2 inv(const Mat2& x) const;
  FieldElement det(const Mat2& x) const;
  FieldElement trace(const Mat2& x) const;
  // PGL: scale so the first nonzero entry is 1; GL: identity map.
  Mat2 normalize(const Mat2& x) const;
  Mat2 scalar(FieldElement x) const;
  Mat2 class_matrix(const ConjClass& c) const;

  std::string class_label(const ConjClass& c) const;

 private:
  Group() = default;
  void build_gl_classes();
  void build_pgl_classes(const Group& gl);
  void finish();
  ExtElement canonical_elliptic_gl(ExtElement lambda) const;
  ExtElement canonical_elliptic_pgl(ExtElement lambda) const;

  GroupKind kind_ = GroupKind::GL2;
  std::shared_ptr<const FiniteField> F_;
  std::shared_ptr<const QuadraticExtension> E_;
  long order_ = 0;
  std::vector<ClassInfo> classes_;
  std::map<ConjClass, int> index_;
  // (trace, det) -> GL class of a non-scalar matrix with that characteristic polynomial.
  std::vector<ConjClass> nonscalar_class_;
  std::vector<int> square_class_;
  std::vector<int> inverse_class_;
  int identity_class_ = 0;
};

struct EnumCaps {
  long max_group_order = 1L << 16;
  // Bound on |G|^2-sized enumerations (commutators, pair counts).
  long max_pairs = 250000;
};

/// Class from its text label: "c1:k", "c2:k", "c3:i,j" or "c4:k", where k, i, j are
/// discrete logs (base field for c1..c3, extension field for c4). PGL(2) accepts
/// any GL(2) label and returns the class of its image.
int parse_class_spec(const Group& g, std::string_view spec);

/// All elements of the group in a fixed order, with class membership and
/// a product routine addressed by element index.
class GroupElements {
 public:
  GroupElements(std::shared_ptr<const Group> group, const EnumCaps& caps = {});

  const Group& group() const { return *group_; }
  long size() const { return static_cast<long>(elems_.size()); }
  const Mat2& element(long i) const { return elems_[static_cast<std::size_t>(i)]; }
  int class_of(long i) const { return class_of_[static_cast<std::size_t>(i)]; }
  long index_of(const Mat2& m) const;
  long mul(long i, long j) const;
  long inv(long i) const { return inv_[static_cast<std::size_t>(i)]; }
  long identity() const { return identity_; }

 private:
  std::uint32_t encode(const Mat2& m) const;

  std::shared_ptr<const Group> group_;
  std::vector<Mat2> elems_;
  std::vector<int> class_of_;
  std::vector<std::int32_t> lookup_;
  std::vector<long> inv_;
  long identity_ = 0;
};

}  // namespace mz
