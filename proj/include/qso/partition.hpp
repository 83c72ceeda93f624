#pragma once

#include "qso/permutation.hpp"
#include "qso/simplex.hpp"
#include "qso/tensor.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qso {

/// Coupled index (i, j) with i < j, 0-based.
using IndexPair = std::pair<int, int>;

inline IndexPair normalized_pair(int i, int j) { return {std::min(i, j), std::max(i, j)}; }

/// Partition {A_1, ..., A_N} of P_m = {(i, j) : i < j}, N <= m.
class CoupledIndexPartition {
 public:
  CoupledIndexPartition(int m, std::vector<std::vector<IndexPair>> blocks)
      : m_(m), blocks_(std::move(blocks)) {
    if (blocks_.empty() || static_cast<int>(blocks_.size()) > m_)
      throw std::invalid_argument("partition must have between 1 and m blocks");
    std::set<IndexPair> seen;
    for (auto& block : blocks_) {
      if (block.empty()) throw std::invalid_argument("partition block is empty");
      for (auto& [i, j] : block) {
        if (i < 0 || j >= m_ || i >= j) throw std::invalid_argument("pair outside P_m");
        if (!seen.insert({i, j}).second) throw std::invalid_argument("partition blocks overlap");
      }
      std::sort(block.begin(), block.end());
    }
    if (static_cast<int>(seen.size()) != m_ * (m_ - 1) / 2)
      throw std::invalid_argument("partition blocks do not cover P_m");
  }

  int dim() const { return m_; }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<std::vector<IndexPair>>& blocks() const { return blocks_; }

  /// Image of the partition under p, pairs renormalized to i < j.
  CoupledIndexPartition permuted(const Permutation& p) const {
    std::vector<std::vector<IndexPair>> out;
    for (const auto& block : blocks_) {
      std::vector<IndexPair> b;
      for (auto [i, j] : block) b.push_back(normalized_pair(p(i), p(j)));
      out.push_back(std::move(b));
    }
    return CoupledIndexPartition(m_, std::move(out));
  }

  std::set<std::set<IndexPair>> as_set() const {
    std::set<std::set<IndexPair>> s;
    for (const auto& block : blocks_) s.emplace(block.begin(), block.end());
    return s;
  }

  friend bool operator==(const CoupledIndexPartition& x, const CoupledIndexPartition& y) {
    return x.m_ == y.m_ && x.as_set() == y.as_set();
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (b) out += ", ";
      out += "{";
      for (std::size_t p = 0; p < blocks_[b].size(); ++p) {
        if (p) out += ",";
        out += "(" + std::to_string(blocks_[b][p].first + 1) + "," +
               std::to_string(blocks_[b][p].second + 1) + ")";
      }
      out += "}";
    }
    return out + "}";
  }

 private:
  int m_;
  std::vector<std::vector<IndexPair>> blocks_;
};

/// The five partitions xi_1, ..., xi_5 of P_3, in the standard order.
inline std::vector<CoupledIndexPartition> standard_partitions() {
  const IndexPair p12{0, 1}, p13{0, 2}, p23{1, 2};
  return {
      CoupledIndexPartition(3, {{p12}, {p13}, {p23}}),
      CoupledIndexPartition(3, {{p23}, {p12, p13}}),
      CoupledIndexPartition(3, {{p13}, {p12, p23}}),
      CoupledIndexPartition(3, {{p12}, {p13, p23}}),
      CoupledIndexPartition(3, {{p12, p13, p23}}),
  };
}

struct XiViolation {
  std::string condition;  // "i", "ii" or "iv"
  IndexPair first;
  IndexPair second;
  std::string detail;
};

struct XiCheckReport {
  std::vector<XiViolation> violations;
  /// pi with P_ii = e_{pi(i)}, when condition (iv) holds.
  std::optional<Permutation> diagonal_permutation;
  bool pass() const { return violations.empty(); }
};

namespace detail {
template <typename Scalar>
bool rows_equivalent(const HeredityTensor<Scalar>& t, IndexPair x, IndexPair y) {
  return support(t.row(x.first, x.second)) == support(t.row(y.first, y.second));
}

template <typename Scalar>
bool rows_singular(const HeredityTensor<Scalar>& t, IndexPair x, IndexPair y) {
  const IndexSet sx = support(t.row(x.first, x.second)), sy = support(t.row(y.first, y.second));
  for (int k : sy.members())
    if (sx.contains(k)) return false;
  return true;
}

/// Index of the vertex equal to v within the zero threshold, if any.
template <typename Derived>
std::optional<int> vertex_index(const Eigen::MatrixBase<Derived>& v) {
  const IndexSet s = support(v);
  if (s.size() != 1) return std::nullopt;
  const int k = s.members().front();
  using std::abs;
  if (abs(static_cast<double>(v[k]) - 1.0) > kZeroThreshold) return std::nullopt;
  return k;
}
}  // namespace detail

/// Checks the xi^(s) conditions with the point partition of the diagonal:
/// (i) rows within a block are equivalent, (ii) rows in different blocks are
/// singular, (iv) P_ii = e_{pi(i)} for a permutation pi.
template <typename Scalar>
XiCheckReport xi_s_check(const HeredityTensor<Scalar>& t, const CoupledIndexPartition& xi) {
  if (t.dim() != xi.dim()) throw std::invalid_argument("tensor and partition dimensions differ");
  XiCheckReport report;
  const auto& blocks = xi.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t p = 0; p < blocks[b].size(); ++p)
      for (std::size_t q = p + 1; q < blocks[b].size(); ++q)
        if (!detail::rows_equivalent(t, blocks[b][p], blocks[b][q]))
          report.violations.push_back({"i", blocks[b][p], blocks[b][q], "rows not equivalent"});
    for (std::size_t c = b + 1; c < blocks.size(); ++c)
      for (auto x : blocks[b])
        for (auto y : blocks[c])
          if (!detail::rows_singular(t, x, y))
            report.violations.push_back({"ii", x, y, "rows in different blocks share support"});
  }
  std::vector<int> image;
  std::vector<bool> used(static_cast<std::size_t>(t.dim()), false);
  bool diagonal_ok = true;
  for (int i = 0; i < t.dim(); ++i) {
    const auto v = detail::vertex_index(t.row(i, i));
    if (!v) {
      report.violations.push_back({"iv", {i, i}, {i, i}, "diagonal row is not a vertex"});
      diagonal_ok = false;
      continue;
    }
    if (used[static_cast<std::size_t>(*v)]) {
      report.violations.push_back(
          {"iv", {i, i}, {i, i}, "diagonal row repeats vertex e" + std::to_string(*v + 1)});
      diagonal_ok = false;
    }
    used[static_cast<std::size_t>(*v)] = true;
    image.push_back(*v);
  }
  if (diagonal_ok) report.diagonal_permutation = Permutation(std::move(image));
  return report;
}

/// Permutations p with p(xi) = xi as a set of blocks.
inline std::vector<Permutation> partition_stabilizer(const CoupledIndexPartition& xi) {
  std::vector<Permutation> out;
  for (const Permutation& p : all_permutations(xi.dim()))
    if (xi.permuted(p) == xi) out.push_back(p);
  return out;
}

}  // namespace qso
