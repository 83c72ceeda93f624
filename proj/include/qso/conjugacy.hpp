#pragma once

#include "qso/permutation.hpp"
#include "qso/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace qso {

/// T^p with (T^p)_{ij,k} = P_{p(i)p(j),p(k)}.
///
/// With p(x) = (x_{p(1)}, ..., x_{p(m)}) this satisfies
/// apply(T^p, p(x)) = p(apply(T, x)), and
/// conjugate(conjugate(T, q), p) = conjugate(T, compose(q, p)).
template <typename Scalar>
HeredityTensor<Scalar> conjugate(const HeredityTensor<Scalar>& t, const Permutation& p) {
  if (p.size() != t.dim()) throw std::invalid_argument("permutation size differs from tensor");
  HeredityTensor<Scalar> out(t.dim());
  for (int i = 0; i < t.dim(); ++i)
    for (int j = i; j < t.dim(); ++j)
      for (int k = 0; k < t.dim(); ++k) out.set(i, j, k, t(p(i), p(j), p(k)));
  return out;
}

/// max_{ijk} |P1_{ij,k} - P2_{ij,k}|
template <typename Scalar>
double max_coefficient_difference(const HeredityTensor<Scalar>& x, const HeredityTensor<Scalar>& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("tensor dimensions differ");
  double worst = 0.0;
  for (int k = 0; k < x.dim(); ++k)
    worst = std::max(worst, static_cast<double>((x.slice(k) - y.slice(k)).cwiseAbs().maxCoeff()));
  return worst;
}

/// First permutation (lexicographic) with conjugate(t1, p) within tol of t2.
template <typename Scalar>
std::optional<Permutation> are_conjugate(const HeredityTensor<Scalar>& t1,
                                         const HeredityTensor<Scalar>& t2, double tol = 1e-12) {
  if (t1.dim() != t2.dim()) return std::nullopt;
  for (const Permutation& p : all_permutations(t1.dim()))
    if (max_coefficient_difference(conjugate(t1, p), t2) <= tol) return p;
  return std::nullopt;
}

}  // namespace qso
