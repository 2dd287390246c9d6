// Symbolic perturbation of coordinates.
//
// Every input coordinate gets a globally unique index i and is replaced by
// x_i + eps^(2^i), where eps is a positive infinitesimal.  A product of
// distinct perturbations eps^(2^i) * eps^(2^j) * ... has exponent sum 2^i +
// 2^j + ..., which is a unique binary number, so two different index sets
// never produce the same power of eps.  Smaller exponents dominate: the sign
// of a polynomial in eps is the sign of its lowest-order nonzero term.
//
// With this perturbation no orientation determinant can vanish, so the
// predicates below never return Sign::Zero.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sos/exact.hpp"

namespace sos {

/// Index i of a perturbed coordinate; the coordinate carries eps^(2^i).
struct PerturbationIndex {
  std::uint64_t value = 0;
  friend auto operator<=>(const PerturbationIndex&, const PerturbationIndex&) = default;
};

/// x + eps^(2^index).
struct PerturbedScalar {
  Rational value;
  PerturbationIndex index;
};

template <std::size_t D>
using Point = std::array<Rational, D>;
using Point2 = Point<2>;
using Point3 = Point<3>;

template <std::size_t D>
struct IndexedPoint {
  std::array<PerturbedScalar, D> coords;
  std::uint64_t point_id = 0;

  const Rational& operator[](std::size_t axis) const { return coords[axis].value; }
  Point<D> position() const {
    Point<D> p;
    for (std::size_t a = 0; a < D; ++a) p[a] = coords[a].value;
    return p;
  }
};
using IndexedPoint2 = IndexedPoint<2>;
using IndexedPoint3 = IndexedPoint<3>;

/// Point #k gets coordinate indices D*k .. D*k + D-1.
template <std::size_t D>
IndexedPoint<D> make_indexed(const Point<D>& p, std::uint64_t point_id) {
  IndexedPoint<D> out;
  out.point_id = point_id;
  for (std::size_t a = 0; a < D; ++a) out.coords[a] = {p[a], {D * point_id + a}};
  return out;
}

/// Indexes points in input order, starting at point id `first_id`.  Duplicate
/// values are fine; they get different indices.
template <std::size_t D>
std::vector<IndexedPoint<D>> assign_indices(std::span<const Point<D>> points, std::uint64_t first_id = 0) {
  std::vector<IndexedPoint<D>> out;
  out.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) out.push_back(make_indexed<D>(points[k], first_id + k));
  return out;
}

/// Exponent sum_{i in S} 2^i of eps, stored as the index set S (never as the
/// materialized integer, since indices can be large).  Ordered like the
/// integer it denotes.
class EpsExponent {
 public:
  EpsExponent() = default;
  /// Throws ContractViolation when an index repeats.
  static EpsExponent from_indices(std::vector<std::uint64_t> indices);

  /// Indices in decreasing order.
  const std::vector<std::uint64_t>& indices() const { return desc_; }
  bool empty() const { return desc_.empty(); }

  friend bool operator==(const EpsExponent&, const EpsExponent&) = default;
  friend std::strong_ordering operator<=>(const EpsExponent& a, const EpsExponent& b);

 private:
  std::vector<std::uint64_t> desc_;
};

/// Finite sum of coefficient * eps^exponent; zero coefficients are dropped.
class EpsPolynomial {
 public:
  void add(const EpsExponent& e, const Rational& coefficient);

  const std::map<EpsExponent, Rational>& terms() const { return terms_; }
  /// Coefficient of eps^0, i.e. the unperturbed value.
  Rational constant_term() const;
  bool empty() const { return terms_.empty(); }

 private:
  std::map<EpsExponent, Rational> terms_;
};

/// Sign of the lowest-order nonzero term; Zero only for the empty polynomial.
Sign eps_poly_sign(const EpsPolynomial& p);

enum class Order { Less, Greater };

/// (a.value + eps^(2^i)) vs (b.value + eps^(2^j)).  Values decide when they
/// differ; otherwise the larger index carries the smaller infinitesimal.
/// Throws ContractViolation when i == j.
Order compare_perturbed(const PerturbedScalar& a, const PerturbedScalar& b);

/// Orientation determinant |a 1; b 1; c 1| of the perturbed points, fully
/// expanded in eps.
EpsPolynomial expand_orient2d(const IndexedPoint2& a, const IndexedPoint2& b, const IndexedPoint2& c);
EpsPolynomial expand_orient3d(const IndexedPoint3& a, const IndexedPoint3& b, const IndexedPoint3& c,
                              const IndexedPoint3& d);

/// Positive iff a, b, c turn counterclockwise after perturbation.  Never Zero.
/// Throws ContractViolation when the six indices are not pairwise distinct.
Sign sos_orient2d(const IndexedPoint2& a, const IndexedPoint2& b, const IndexedPoint2& c);

/// Sign of |a 1; b 1; c 1; d 1| after perturbation.  Never Zero.
Sign sos_orient3d(const IndexedPoint3& a, const IndexedPoint3& b, const IndexedPoint3& c, const IndexedPoint3& d);

Rational orient2d_exact(const Point2& a, const Point2& b, const Point2& c);
Rational orient3d_exact(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

}  // namespace sos
