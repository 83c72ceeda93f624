#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qso {

/// Bijection of {0, ..., m-1}, stored by images.
///
/// Ordering is lexicographic on the image sequence, which is the order
/// all_permutations() enumerates. Printed in 1-based cycle notation,
/// e.g. "(1)(2 3)".
class Permutation {
 public:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
      if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("not a permutation image");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> image(static_cast<std::size_t>(m));
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
  }

  /// Builds from 1-based cycles such as {{1}, {2, 3}}; omitted points are fixed.
  static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> image(static_cast<std::size_t>(m));
    std::iota(image.begin(), image.end(), 0);
    for (const auto& cycle : cycles)
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int from = cycle[i] - 1;
        const int to = cycle[(i + 1) % cycle.size()] - 1;
        if (from < 0 || from >= m || to < 0 || to >= m)
          throw std::invalid_argument("cycle element out of range");
        image[static_cast<std::size_t>(from)] = to;
      }
    return Permutation(std::move(image));
  }

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (image_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>((*this)(i))] = i;
    return Permutation(std::move(inv));
  }

  /// pi(x) = (x_{pi(1)}, ..., x_{pi(m)}).
  template <typename Derived>
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> permute(
      const Eigen::MatrixBase<Derived>& x) const {
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> y(x.size());
    for (int k = 0; k < size(); ++k) y[k] = x[(*this)(k)];
    return y;
  }

  std::string cycle_notation() const {
    std::string out;
    std::vector<bool> done(image_.size(), false);
    for (int start = 0; start < size(); ++start) {
      if (done[static_cast<std::size_t>(start)]) continue;
      out += '(';
      int i = start;
      bool first = true;
      do {
        if (!first) out += ' ';
        out += std::to_string(i + 1);
        done[static_cast<std::size_t>(i)] = true;
        first = false;
        i = (*this)(i);
      } while (i != start);
      out += ')';
    }
    return out;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// (p o q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> image(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) image[static_cast<std::size_t>(i)] = p(q(i));
  return Permutation(std::move(image));
}

/// All m! permutations in lexicographic order, identity first.
inline std::vector<Permutation> all_permutations(int m) {
  std::vector<int> image(static_cast<std::size_t>(m));
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace qso
