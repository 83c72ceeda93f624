#pragma once

#include "qso/permutation.hpp"
#include "qso/simplex.hpp"

#include <Eigen/Core>

#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qso {

/// Cubic heredity matrix P_{ij,k} of a quadratic stochastic operator.
///
/// Stored as m output slices Q_k with (Q_k)_{ij} = P_{ij,k}, so that the
/// operator reads x'_k = x^T Q_k x. `set` and `set_row` write symmetric
/// pairs; `from_flat` stores whatever it is given so that validate() can
/// report defects in externally supplied data.
template <typename Scalar>
class HeredityTensor {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit HeredityTensor(int m) : m_(m), slices_(static_cast<std::size_t>(m), Matrix::Zero(m, m)) {
    if (m < 1) throw std::invalid_argument("tensor dimension must be >= 1");
  }

  /// Row-major (i, j, k) layout: index (i*m + j)*m + k.
  static HeredityTensor from_flat(int m, std::span<const Scalar> values) {
    if (m < 1 || values.size() != static_cast<std::size_t>(m) * m * m)
      throw std::invalid_argument("flat tensor needs m^3 entries");
    HeredityTensor t(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
          t.slices_[static_cast<std::size_t>(k)](i, j) =
              values[static_cast<std::size_t>((i * m + j) * m + k)];
    return t;
  }

  int dim() const { return m_; }
  Scalar operator()(int i, int j, int k) const { return slices_[static_cast<std::size_t>(k)](i, j); }
  const Matrix& slice(int k) const { return slices_[static_cast<std::size_t>(k)]; }

  void set(int i, int j, int k, Scalar value) {
    slices_[static_cast<std::size_t>(k)](i, j) = value;
    slices_[static_cast<std::size_t>(k)](j, i) = value;
  }

  /// Row vector P_ij = (P_{ij,1}, ..., P_{ij,m}).
  Vector row(int i, int j) const {
    Vector r(m_);
    for (int k = 0; k < m_; ++k) r[k] = (*this)(i, j, k);
    return r;
  }

  template <typename Derived>
  void set_row(int i, int j, const Eigen::MatrixBase<Derived>& r) {
    if (r.size() != m_) throw std::invalid_argument("row length must equal m");
    for (int k = 0; k < m_; ++k) set(i, j, k, static_cast<Scalar>(r[k]));
  }

  std::vector<Scalar> flat() const {
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(m_) * m_ * m_);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j)
        for (int k = 0; k < m_; ++k) out.push_back((*this)(i, j, k));
    return out;
  }

  template <typename NewScalar>
  HeredityTensor<NewScalar> cast() const {
    HeredityTensor<NewScalar> t(m_);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j)
        for (int k = 0; k < m_; ++k)
          t.set(i, j, k, static_cast<NewScalar>((*this)(i, j, k)));
    return t;
  }

 private:
  int m_;
  std::vector<Matrix> slices_;
};

using HeredityTensord = HeredityTensor<double>;

/// x'_k = sum_{i,j} P_{ij,k} x_i x_j, without renormalization.
template <typename Scalar, typename Derived>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> evaluate(const HeredityTensor<Scalar>& t,
                                                   const Eigen::MatrixBase<Derived>& x) {
  detail::require_same_dim(t.dim(), x.size());
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(t.dim());
  for (int k = 0; k < t.dim(); ++k) out[k] = x.dot(t.slice(k) * x);
  return out;
}

template <typename Scalar>
SimplexPoint<Scalar> apply(const HeredityTensor<Scalar>& t, const SimplexPoint<Scalar>& x) {
  return SimplexPoint<Scalar>(evaluate(t, x.coords()));
}

// ---------------------------------------------------------------------------
// Heredity conditions

struct TensorViolation {
  enum class Kind { negative, asymmetric, not_stochastic };
  Kind kind;
  int i, j, k;  // 0-based; k = -1 for stochasticity defects
  double magnitude;
};

struct ValidationReport {
  std::vector<TensorViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Reports every violation of P >= 0, P_{ij,k} = P_{ji,k} and sum_k P_{ij,k} = 1.
template <typename Scalar>
ValidationReport validate(const HeredityTensor<Scalar>& t, double tol = kZeroThreshold) {
  ValidationReport report;
  const int m = t.dim();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Scalar sum(0);
      for (int k = 0; k < m; ++k) {
        const double p = static_cast<double>(t(i, j, k));
        if (!(p >= 0.0))
          report.violations.push_back({TensorViolation::Kind::negative, i, j, k, p});
        if (i < j) {
          const double q = static_cast<double>(t(j, i, k));
          if (!(std::abs(p - q) <= tol))
            report.violations.push_back({TensorViolation::Kind::asymmetric, i, j, k, p - q});
        }
        sum += t(i, j, k);
      }
      const double defect = static_cast<double>(sum) - 1.0;
      if (!(std::abs(defect) <= tol))
        report.violations.push_back({TensorViolation::Kind::not_stochastic, i, j, -1, defect});
    }
  return report;
}

inline std::string to_string(TensorViolation::Kind kind) {
  switch (kind) {
    case TensorViolation::Kind::negative: return "negative";
    case TensorViolation::Kind::asymmetric: return "asymmetric";
    case TensorViolation::Kind::not_stochastic: return "not_stochastic";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Volterra structure

/// Whether output k is Volterra: P_{ij,k} = 0 whenever k is neither i nor j.
template <typename Scalar>
bool is_volterra_index(const HeredityTensor<Scalar>& t, int k) {
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      if (i != k && j != k && static_cast<double>(t(i, j, k)) > kZeroThreshold) return false;
  return true;
}

template <typename Scalar>
bool volterra_check(const HeredityTensor<Scalar>& t) {
  for (int k = 0; k < t.dim(); ++k)
    if (!is_volterra_index(t, k)) return false;
  return true;
}

/// Skew-symmetric interaction matrix of a Volterra operator: x'_k = x_k (1 + sum_i a_ki x_i).
template <typename Scalar>
class VolterraCoefficients {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  explicit VolterraCoefficients(Matrix a) : a_(std::move(a)) {}

  const Matrix& matrix() const { return a_; }
  Scalar operator()(int k, int i) const { return a_(k, i); }

  template <typename Derived>
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> evaluate(const Eigen::MatrixBase<Derived>& x) const {
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    return x.cwiseProduct(Vector::Ones(x.size()) + a_ * x);
  }

 private:
  Matrix a_;
};

class NotVolterraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// a_ki = 2 P_{ik,k} - 1 for i != k, a_kk = 0.
template <typename Scalar>
VolterraCoefficients<Scalar> volterra_coefficients(const HeredityTensor<Scalar>& t) {
  if (!volterra_check(t)) throw NotVolterraError("tensor is not a Volterra operator");
  typename VolterraCoefficients<Scalar>::Matrix a =
      VolterraCoefficients<Scalar>::Matrix::Zero(t.dim(), t.dim());
  for (int k = 0; k < t.dim(); ++k)
    for (int i = 0; i < t.dim(); ++i)
      if (i != k) a(k, i) = Scalar(2) * t(i, k, k) - Scalar(1);
  return VolterraCoefficients<Scalar>(std::move(a));
}

/// Canonical-form coefficients with the diagonal convention a_kk = P_{kk,k} - 1.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> canonical_coefficients(
    const HeredityTensor<Scalar>& t) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(t.dim(), t.dim());
  for (int k = 0; k < t.dim(); ++k)
    for (int i = 0; i < t.dim(); ++i)
      a(k, i) = (i == k) ? t(k, k, k) - Scalar(1) : Scalar(2) * t(i, k, k) - Scalar(1);
  return a;
}

struct EllVolterraStructure {
  IndexSet volterra_indices;
  /// Non-Volterra output k -> first pair (i0 <= j0), both != k, with P_{i0 j0,k} > 0.
  std::map<int, std::pair<int, int>> witnesses;
  int ell = 0;
};

template <typename Scalar>
std::optional<EllVolterraStructure> ell_volterra_structure(const HeredityTensor<Scalar>& t) {
  EllVolterraStructure s;
  std::vector<int> volterra;
  for (int k = 0; k < t.dim(); ++k) {
    if (is_volterra_index(t, k)) {
      volterra.push_back(k);
      continue;
    }
    std::optional<std::pair<int, int>> witness;
    for (int i = 0; i < t.dim() && !witness; ++i)
      for (int j = i; j < t.dim() && !witness; ++j)
        if (i != k && j != k && static_cast<double>(t(i, j, k)) > kZeroThreshold)
          witness = std::make_pair(i, j);
    if (!witness) return std::nullopt;
    s.witnesses.emplace(k, *witness);
  }
  s.ell = static_cast<int>(volterra.size());
  s.volterra_indices = IndexSet(std::move(volterra));
  return s;
}

/// Evaluates the l-Volterra canonical form
///   x'_k = x_k (1 + sum_i a_ki x_i) [+ sum_{i,j != k} P_{ij,k} x_i x_j for non-Volterra k].
/// Agrees with evaluate() on the simplex.
template <typename Scalar, typename Derived>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> evaluate_canonical_form(
    const HeredityTensor<Scalar>& t, const EllVolterraStructure& s,
    const Eigen::MatrixBase<Derived>& x) {
  const auto a = canonical_coefficients(t);
  const int m = t.dim();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(m);
  for (int k = 0; k < m; ++k) {
    out[k] = x[k] * (Scalar(1) + a.row(k).dot(x));
    if (s.volterra_indices.contains(k)) continue;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != k && j != k) out[k] += t(i, j, k) * x[i] * x[j];
  }
  return out;
}

/// V0 with (V0(x))_k = (V(x))_{tau(k)}, i.e. P0_{ij,k} = P_{ij,tau(k)}.
template <typename Scalar>
HeredityTensor<Scalar> relabel_outputs(const HeredityTensor<Scalar>& t, const Permutation& tau) {
  HeredityTensor<Scalar> out(t.dim());
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      for (int k = 0; k < t.dim(); ++k) out.set(i, j, k, t(i, j, tau(k)));
  return out;
}

struct PermutedStructure {
  Permutation tau;
  EllVolterraStructure structure;
};

/// Searches every output relabeling tau for the largest l; ties go to the
/// lexicographically smallest tau. Empty when no relabeling has a Volterra output.
template <typename Scalar>
std::optional<PermutedStructure> permuted_ell_volterra_check(const HeredityTensor<Scalar>& t) {
  std::optional<PermutedStructure> best;
  for (const Permutation& tau : all_permutations(t.dim())) {
    auto s = ell_volterra_structure(relabel_outputs(t, tau));
    if (!s || s->ell == 0) continue;
    if (!best || s->ell > best->structure.ell) best = PermutedStructure{tau, std::move(*s)};
  }
  return best;
}

enum class StructureKind { volterra, ell_volterra, permuted_volterra, permuted_ell_volterra, none };

inline std::string to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::volterra: return "Volterra";
    case StructureKind::ell_volterra: return "l-Volterra";
    case StructureKind::permuted_volterra: return "permuted Volterra";
    case StructureKind::permuted_ell_volterra: return "permuted l-Volterra";
    case StructureKind::none: return "none";
  }
  return "unknown";
}

struct StructuralClass {
  StructureKind kind = StructureKind::none;
  int ell = 0;
  Permutation tau = Permutation::identity(1);
  IndexSet volterra_indices;
};

/// Strongest structure: plain (l-)Volterra unless some non-identity output
/// relabeling gives a strictly larger l.
template <typename Scalar>
StructuralClass classify_structure(const HeredityTensor<Scalar>& t) {
  const int m = t.dim();
  StructuralClass c;
  c.tau = Permutation::identity(m);
  const auto plain = ell_volterra_structure(t);
  const int plain_ell = plain ? plain->ell : 0;
  const auto permuted = permuted_ell_volterra_check(t);
  if (permuted && !permuted->tau.is_identity() && permuted->structure.ell > plain_ell) {
    c.kind = permuted->structure.ell == m ? StructureKind::permuted_volterra
                                          : StructureKind::permuted_ell_volterra;
    c.ell = permuted->structure.ell;
    c.tau = permuted->tau;
    c.volterra_indices = permuted->structure.volterra_indices;
  } else if (plain_ell > 0) {
    c.kind = plain_ell == m ? StructureKind::volterra : StructureKind::ell_volterra;
    c.ell = plain_ell;
    c.volterra_indices = plain->volterra_indices;
  }
  return c;
}

}  // namespace qso
