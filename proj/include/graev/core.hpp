#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graev/errors.hpp"
#include "graev/rational.hpp"

namespace graev {

/// A finite set of named points with a distinguished basepoint and an exact
/// pseudometric. Construction performs no axiom checks; see validate_space.
class PointedSpace {
 public:
  PointedSpace() = default;
  PointedSpace(std::vector<std::string> names, std::size_t basepoint,
               std::vector<std::vector<Rational>> dist);

  std::size_t size() const { return names_.size(); }
  std::size_t basepoint() const { return basepoint_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::vector<Rational>>& matrix() const { return dist_; }
  const Rational& dist(std::size_t i, std::size_t j) const { return dist_[i][j]; }

  /// Index of a named point; throws InputError when absent.
  std::size_t index_of(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::size_t basepoint_ = 0;
  std::vector<std::vector<Rational>> dist_;
};

struct AxiomViolation {
  enum class Kind { negative, nonzero_diagonal, asymmetric, triangle };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;  // middle point of a triangle violation
  std::string message;
};

struct ValidationReport {
  bool ok() const { return violations.empty(); }
  std::vector<AxiomViolation> violations;
};

/// Checks every pseudometric axiom and reports all violations at once.
/// Throws StructureError when the matrix shape or basepoint index is wrong.
ValidationReport validate_space(const PointedSpace& space);

/// Reduced integer or rational combination of the non-basepoint points of a
/// space. Word (integer scalars) models the free abelian group A(X,*);
/// LinComb (rational scalars) models the vector space L(X,*).
template <typename Scalar>
class Combination {
 public:
  using Coeffs = std::map<std::size_t, Scalar>;

  Combination() = default;
  Combination(std::size_t point_count, std::size_t basepoint)
      : point_count_(point_count), basepoint_(basepoint) {}

  /// Zero entries are dropped; the basepoint and out-of-range indices are rejected.
  static Combination from_coeffs(const PointedSpace& space, const Coeffs& coeffs) {
    Combination c(space.size(), space.basepoint());
    for (const auto& [index, value] : coeffs) c.add(index, value);
    return c;
  }

  /// Single generator 1*x (the basepoint maps to zero).
  static Combination generator(const PointedSpace& space, std::size_t index) {
    Combination c(space.size(), space.basepoint());
    if (index != space.basepoint()) c.add(index, Scalar(1));
    return c;
  }

  std::size_t point_count() const { return point_count_; }
  std::size_t basepoint() const { return basepoint_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar coeff(std::size_t index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Scalar(0) : it->second;
  }

  bool compatible_with(const PointedSpace& space) const {
    return point_count_ == space.size() && basepoint_ == space.basepoint();
  }
  bool compatible_with(const Combination& other) const {
    return point_count_ == other.point_count_ && basepoint_ == other.basepoint_;
  }

  void add(std::size_t index, const Scalar& value) {
    if (index >= point_count_) throw StructureError("point index out of range");
    if (index == basepoint_) throw StructureError("the basepoint cannot carry a coefficient");
    Scalar& slot = coeffs_[index];
    slot += value;
    if (slot == Scalar(0)) coeffs_.erase(index);
  }

  Combination scaled(const Scalar& factor) const {
    Combination out(point_count_, basepoint_);
    if (factor == Scalar(0)) return out;
    for (const auto& [index, value] : coeffs_) out.coeffs_.emplace(index, value * factor);
    return out;
  }

  Combination operator-() const { return scaled(Scalar(-1)); }

  friend bool operator==(const Combination& a, const Combination& b) {
    return a.point_count_ == b.point_count_ && a.basepoint_ == b.basepoint_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t point_count_ = 0;
  std::size_t basepoint_ = 0;
  Coeffs coeffs_;
};

using Word = Combination<std::int64_t>;
using LinComb = Combination<Rational>;

/// u + sign*v, reduced. sign must be +1 or -1.
template <typename Scalar>
Combination<Scalar> combine(const Combination<Scalar>& u, const Combination<Scalar>& v, int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("sign must be +1 or -1");
  if (!u.compatible_with(v)) throw StructureError("combinations over different spaces");
  Combination<Scalar> out = u;
  for (const auto& [index, value] : v.coeffs()) out.add(index, sign > 0 ? value : Scalar(-value));
  return out;
}

inline Word word_combine(const Word& u, const Word& v, int sign) { return combine(u, v, sign); }

template <typename Scalar>
Combination<Scalar> operator+(const Combination<Scalar>& u, const Combination<Scalar>& v) {
  return combine(u, v, 1);
}
template <typename Scalar>
Combination<Scalar> operator-(const Combination<Scalar>& u, const Combination<Scalar>& v) {
  return combine(u, v, -1);
}

/// Canonical inclusion A(X,*) -> L(X,*).
LinComb word_to_lincomb(const Word& w);

/// Sum of |k| over the coefficients of w.
std::int64_t letter_count(const Word& w);

/// Throws StructureError unless c lives over space.
template <typename Scalar>
void require_compatible(const PointedSpace& space, const Combination<Scalar>& c) {
  if (!c.compatible_with(space)) throw StructureError("combination does not live over this space");
}

}  // namespace graev
