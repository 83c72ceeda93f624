#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qso {

/// Coordinates at or below this magnitude count as zero in support tests.
inline constexpr double kZeroThreshold = 1e-12;
/// Largest simplex defect (negative mass or sum error) silently repaired on construction.
inline constexpr double kRenormalizeLimit = 1e-9;

class SimplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point of the probability simplex S^{m-1}.
///
/// Construction clamps coordinates in [-1e-12, 0) to zero and divides by the
/// sum, provided the total defect is within 1e-9; anything worse throws
/// SimplexError. Instances are immutable.
template <typename Scalar>
class SimplexPoint {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit SimplexPoint(Vector coords) : coords_(std::move(coords)) { normalize(); }

  SimplexPoint(std::initializer_list<Scalar> coords)
      : coords_(static_cast<Eigen::Index>(coords.size())) {
    std::copy(coords.begin(), coords.end(), coords_.data());
    normalize();
  }

  Eigen::Index dim() const { return coords_.size(); }
  const Vector& coords() const { return coords_; }
  Scalar operator[](Eigen::Index i) const { return coords_[i]; }

  template <typename NewScalar>
  SimplexPoint<NewScalar> cast() const {
    return SimplexPoint<NewScalar>(coords_.template cast<NewScalar>());
  }

  friend bool operator==(const SimplexPoint& x, const SimplexPoint& y) {
    return x.coords_.size() == y.coords_.size() && x.coords_ == y.coords_;
  }

 private:
  void normalize() {
    if (coords_.size() < 1) throw SimplexError("simplex point needs at least one coordinate");
    Scalar sum(0);
    for (Eigen::Index i = 0; i < coords_.size(); ++i) {
      const Scalar c = coords_[i];
      if (!std::isfinite(static_cast<double>(c)))
        throw SimplexError("simplex coordinate " + std::to_string(i + 1) + " is not finite");
      if (c < Scalar(-kZeroThreshold))
        throw SimplexError("simplex coordinate " + std::to_string(i + 1) + " is negative (" +
                           std::to_string(static_cast<double>(c)) + ")");
      if (c < Scalar(0)) coords_[i] = Scalar(0);
      sum += coords_[i];
    }
    using std::abs;
    if (abs(sum - Scalar(1)) > Scalar(kRenormalizeLimit))
      throw SimplexError("simplex coordinates sum to " + std::to_string(static_cast<double>(sum)));
    coords_ /= sum;
  }

  Vector coords_;
};

using SimplexPointd = SimplexPoint<double>;

/// Sorted set of 0-based indices from {0, ..., m-1}.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> members) : members_(members) { canonicalize(); }
  explicit IndexSet(std::vector<int> members) : members_(std::move(members)) { canonicalize(); }

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int i) const { return std::binary_search(members_.begin(), members_.end(), i); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  void canonicalize() {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw std::invalid_argument("index set has duplicate members");
    if (!members_.empty() && members_.front() < 0)
      throw std::invalid_argument("index set member out of range");
  }

  std::vector<int> members_;
};

/// Vertex e_i of S^{m-1}; i is 0-based.
template <typename Scalar = double>
SimplexPoint<Scalar> vertex(int i, int m) {
  if (m < 1 || i < 0 || i >= m)
    throw std::out_of_range("vertex index " + std::to_string(i + 1) + " outside 1.." +
                            std::to_string(m));
  typename SimplexPoint<Scalar>::Vector v = SimplexPoint<Scalar>::Vector::Zero(m);
  v[i] = Scalar(1);
  return SimplexPoint<Scalar>(std::move(v));
}

/// Indices whose coordinate exceeds the zero threshold.
template <typename Derived>
IndexSet support(const Eigen::MatrixBase<Derived>& x) {
  std::vector<int> members;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (static_cast<double>(x[i]) > kZeroThreshold) members.push_back(static_cast<int>(i));
  return IndexSet(std::move(members));
}

template <typename Scalar>
IndexSet support(const SimplexPoint<Scalar>& x) {
  return support(x.coords());
}

namespace detail {
inline void require_same_dim(Eigen::Index a, Eigen::Index b) {
  if (a != b)
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
}
}  // namespace detail

/// x ~ y: equal supports.
template <typename Scalar>
bool equivalent(const SimplexPoint<Scalar>& x, const SimplexPoint<Scalar>& y) {
  detail::require_same_dim(x.dim(), y.dim());
  return support(x) == support(y);
}

/// x ⊥ y: disjoint supports.
template <typename Scalar>
bool singular(const SimplexPoint<Scalar>& x, const SimplexPoint<Scalar>& y) {
  detail::require_same_dim(x.dim(), y.dim());
  const IndexSet sx = support(x), sy = support(y);
  for (int i : sy.members())
    if (sx.contains(i)) return false;
  return true;
}

template <typename Scalar>
Scalar l1_distance(const SimplexPoint<Scalar>& x, const SimplexPoint<Scalar>& y) {
  detail::require_same_dim(x.dim(), y.dim());
  return (x.coords() - y.coords()).cwiseAbs().sum();
}

/// Deterministic uniform sampler on S^{m-1} (sorted uniform gaps).
///
/// Uses mt19937_64 and a fixed 53-bit mantissa mapping, so the stream is
/// identical across standard library implementations.
class SimplexSampler {
 public:
  SimplexSampler(int m, std::uint64_t seed) : m_(m), rng_(seed) {
    if (m < 2) throw std::invalid_argument("sampler needs m >= 2");
  }

  int dim() const { return m_; }

  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  SimplexPointd next() { return next_on_face(all_indices()); }

  /// Uniform point on the face spanned by the given vertices; other coordinates are exactly 0.
  SimplexPointd next_on_face(const IndexSet& face) {
    const auto& idx = face.members();
    if (idx.empty() || idx.back() >= m_) throw std::invalid_argument("bad face for sampler");
    std::vector<double> cuts(idx.size() + 1);
    cuts.front() = 0.0;
    cuts.back() = 1.0;
    for (std::size_t i = 1; i + 1 < cuts.size(); ++i) cuts[i] = uniform();
    std::sort(cuts.begin() + 1, cuts.end() - 1);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(m_);
    for (std::size_t i = 0; i < idx.size(); ++i) v[idx[i]] = cuts[i + 1] - cuts[i];
    return SimplexPointd(std::move(v));
  }

 private:
  IndexSet all_indices() const {
    std::vector<int> all(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) all[static_cast<std::size_t>(i)] = i;
    return IndexSet(std::move(all));
  }

  int m_;
  std::mt19937_64 rng_;
};

inline std::vector<SimplexPointd> sample(int m, std::uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
  SimplexSampler sampler(m, seed);
  std::vector<SimplexPointd> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(sampler.next());
  return out;
}

}  // namespace qso
