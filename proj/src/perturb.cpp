#include "sos/perturb.hpp"

#include <algorithm>
#include <string>

namespace sos {

EpsExponent EpsExponent::from_indices(std::vector<std::uint64_t> indices) {
  std::sort(indices.begin(), indices.end(), std::greater<>());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw ContractViolation("eps exponent with a repeated perturbation index");
  EpsExponent e;
  e.desc_ = std::move(indices);
  return e;
}

// Both index lists are sorted high to low.  The first position where they
// differ is the highest differing bit of the two binary numbers; a list that
// runs out first is missing bits and is therefore smaller.
std::strong_ordering operator<=>(const EpsExponent& a, const EpsExponent& b) {
  const std::size_t n = std::min(a.desc_.size(), b.desc_.size());
  for (std::size_t k = 0; k < n; ++k)
    if (a.desc_[k] != b.desc_[k]) return a.desc_[k] <=> b.desc_[k];
  return a.desc_.size() <=> b.desc_.size();
}

void EpsPolynomial::add(const EpsExponent& e, const Rational& coefficient) {
  if (coefficient.sign() == Sign::Zero) return;
  auto [it, inserted] = terms_.try_emplace(e, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.sign() == Sign::Zero) terms_.erase(it);
  }
}

Rational EpsPolynomial::constant_term() const {
  const auto it = terms_.find(EpsExponent{});
  return it == terms_.end() ? Rational{} : it->second;
}

Sign eps_poly_sign(const EpsPolynomial& p) {
  if (p.terms().empty()) return Sign::Zero;
  return p.terms().begin()->second.sign();
}

Order compare_perturbed(const PerturbedScalar& a, const PerturbedScalar& b) {
  if (a.index == b.index) throw ContractViolation("compare_perturbed: coordinate compared with itself");
  if (a.value != b.value) return a.value < b.value ? Order::Less : Order::Greater;
  return a.index > b.index ? Order::Less : Order::Greater;
}

namespace {

// Entry of a homogeneous orientation matrix: a perturbed coordinate, or the
// constant 1 of the last column.
struct Entry {
  const PerturbedScalar* coord = nullptr;
};

template <std::size_t N>
using EntryMatrix = std::array<std::array<Entry, N>, N>;

int permutation_parity(const std::array<int, 4>& perm, std::size_t n) {
  int inversions = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// Leibniz expansion; each product of (value + eps^(2^i)) factors is expanded
// over all subsets of its perturbed factors.
template <std::size_t N>
EpsPolynomial expand(const EntryMatrix<N>& m) {
  EpsPolynomial poly;
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    const int parity = permutation_parity(perm, N);
    std::array<const PerturbedScalar*, N> factors{};
    std::size_t nf = 0;
    for (std::size_t r = 0; r < N; ++r)
      if (const auto* c = m[r][perm[r]].coord) factors[nf++] = c;

    for (unsigned mask = 0; mask < (1u << nf); ++mask) {
      Rational coeff(parity);
      std::vector<std::uint64_t> indices;
      for (std::size_t f = 0; f < nf; ++f) {
        if (mask & (1u << f))
          indices.push_back(factors[f]->index.value);
        else
          coeff *= factors[f]->value;
      }
      if (coeff.sign() == Sign::Zero) continue;
      poly.add(EpsExponent::from_indices(std::move(indices)), coeff);
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + N));
  return poly;
}

template <std::size_t D>
void require_distinct(std::initializer_list<const IndexedPoint<D>*> points, const char* who) {
  std::vector<std::uint64_t> idx;
  for (const auto* p : points)
    for (const auto& c : p->coords) idx.push_back(c.index.value);
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw ContractViolation(std::string(who) + ": coordinate perturbation indices are not pairwise distinct");
}

}  // namespace

EpsPolynomial expand_orient2d(const IndexedPoint2& a, const IndexedPoint2& b, const IndexedPoint2& c) {
  require_distinct<2>({&a, &b, &c}, "orient2d");
  EntryMatrix<3> m;
  const IndexedPoint2* rows[] = {&a, &b, &c};
  for (int r = 0; r < 3; ++r) m[r] = {Entry{&rows[r]->coords[0]}, Entry{&rows[r]->coords[1]}, Entry{}};
  return expand<3>(m);
}

EpsPolynomial expand_orient3d(const IndexedPoint3& a, const IndexedPoint3& b, const IndexedPoint3& c,
                              const IndexedPoint3& d) {
  require_distinct<3>({&a, &b, &c, &d}, "orient3d");
  EntryMatrix<4> m;
  const IndexedPoint3* rows[] = {&a, &b, &c, &d};
  for (int r = 0; r < 4; ++r)
    m[r] = {Entry{&rows[r]->coords[0]}, Entry{&rows[r]->coords[1]}, Entry{&rows[r]->coords[2]}, Entry{}};
  return expand<4>(m);
}

Rational orient2d_exact(const Point2& a, const Point2& b, const Point2& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

Rational orient3d_exact(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  // |a 1; b 1; c 1; d 1| = -|b-a; c-a; d-a|
  const Rational bx = b[0] - a[0], by = b[1] - a[1], bz = b[2] - a[2];
  const Rational cx = c[0] - a[0], cy = c[1] - a[1], cz = c[2] - a[2];
  const Rational dx = d[0] - a[0], dy = d[1] - a[1], dz = d[2] - a[2];
  const Rational det = bx * (cy * dz - cz * dy) - by * (cx * dz - cz * dx) + bz * (cx * dy - cy * dx);
  return -det;
}

// The constant term of the expansion is the unperturbed determinant and has
// the lowest possible exponent, so a nonzero exact value settles the sign.
Sign sos_orient2d(const IndexedPoint2& a, const IndexedPoint2& b, const IndexedPoint2& c) {
  require_distinct<2>({&a, &b, &c}, "sos_orient2d");
  const Sign exact = orient2d_exact(a.position(), b.position(), c.position()).sign();
  if (exact != Sign::Zero) return exact;
  return eps_poly_sign(expand_orient2d(a, b, c));
}

Sign sos_orient3d(const IndexedPoint3& a, const IndexedPoint3& b, const IndexedPoint3& c, const IndexedPoint3& d) {
  require_distinct<3>({&a, &b, &c, &d}, "sos_orient3d");
  const Sign exact = orient3d_exact(a.position(), b.position(), c.position(), d.position()).sign();
  if (exact != Sign::Zero) return exact;
  return eps_poly_sign(expand_orient3d(a, b, c, d));
}

}  // namespace sos
