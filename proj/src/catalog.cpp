#include "qso/catalog.hpp"

#include "qso/conjugacy.hpp"
#include "qso/partition.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qso {
namespace {

using Row = std::array<double, 3>;

// Rows P_12, P_13, P_23 of table I_c.
std::array<Row, 3> off_diagonal_rows(int c, double a) {
  const double b = 1.0 - a;
  switch (c) {
    case 1: return {{{a, b, 0}, {a, b, 0}, {0, 0, 1}}};
    case 2: return {{{0, a, b}, {0, a, b}, {1, 0, 0}}};
    case 3: return {{{a, 0, b}, {a, 0, b}, {0, 1, 0}}};
    case 4: return {{{0, 0, 1}, {0, 0, 1}, {a, b, 0}}};
    case 5: return {{{1, 0, 0}, {1, 0, 0}, {0, a, b}}};
    case 6: return {{{0, 1, 0}, {0, 1, 0}, {a, 0, b}}};
  }
  throw std::invalid_argument("case_one outside 1..6");
}

// Vertex index of P_11, P_22, P_33 in table II_c.
std::array<int, 3> diagonal_vertices(int c) {
  switch (c) {
    case 1: return {0, 1, 2};
    case 2: return {1, 0, 2};
    case 3: return {2, 1, 0};
    case 4: return {0, 2, 1};
    case 5: return {2, 0, 1};
    case 6: return {1, 2, 0};
  }
  throw std::invalid_argument("case_two outside 1..6");
}

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  }
  std::vector<int> parent;
};

}  // namespace

OperatorSpec OperatorSpec::from_id(int id, double a) {
  if (id < 1 || id > kCatalogSize)
    throw std::out_of_range("catalog id " + std::to_string(id) + " outside 1..36");
  OperatorSpec spec{(id - 1) / 6 + 1, (id - 1) % 6 + 1, a};
  spec.validate();
  return spec;
}

void OperatorSpec::validate() const {
  if (case_one < 1 || case_one > 6) throw std::invalid_argument("case_one outside 1..6");
  if (case_two < 1 || case_two > 6) throw std::invalid_argument("case_two outside 1..6");
  if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("parameter a outside [0,1]");
}

HeredityTensord build_operator(const OperatorSpec& spec) {
  spec.validate();
  HeredityTensord t(3);
  const auto rows = off_diagonal_rows(spec.case_one, spec.a);
  const std::array<IndexPair, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t r = 0; r < 3; ++r)
    for (int k = 0; k < 3; ++k)
      t.set(pairs[r].first, pairs[r].second, k, rows[r][static_cast<std::size_t>(k)]);
  const auto diag = diagonal_vertices(spec.case_two);
  for (int i = 0; i < 3; ++i) t.set(i, i, diag[static_cast<std::size_t>(i)], 1.0);
  return t;
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), end);
}

std::vector<std::string> render_polynomial(const HeredityTensord& t) {
  std::vector<std::string> out;
  const int m = t.dim();
  for (int k = 0; k < m; ++k) {
    std::string line = "x" + std::to_string(k + 1) + "' =";
    bool any = false;
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        const double c = (i == j) ? t(i, i, k) : t(i, j, k) + t(j, i, k);
        if (c == 0.0) continue;
        line += any ? " + " : " ";
        if (c != 1.0) line += format_number(c) + "*";
        line += (i == j) ? "x" + std::to_string(i + 1) + "^2"
                         : "x" + std::to_string(i + 1) + "*x" + std::to_string(j + 1);
        any = true;
      }
    if (!any) line += " 0";
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<ConjugacyClass> classify_catalog(double a, ParameterMatching matching) {
  std::vector<HeredityTensord> ops, reflected;
  for (int n = 1; n <= kCatalogSize; ++n) {
    ops.push_back(catalog_operator(n, a));
    reflected.push_back(catalog_operator(n, 1.0 - a));
  }
  UnionFind uf(kCatalogSize);
  std::vector<ConjugacyLink> links;
  for (int n = 0; n < kCatalogSize; ++n)
    for (int m = n + 1; m < kCatalogSize; ++m) {
      const auto& from = ops[static_cast<std::size_t>(n)];
      if (auto p = are_conjugate(from, ops[static_cast<std::size_t>(m)])) {
        links.push_back({n + 1, m + 1, *p, false});
        uf.unite(n, m);
      } else if (matching == ParameterMatching::reflected_parameter) {
        if (auto q = are_conjugate(from, reflected[static_cast<std::size_t>(m)])) {
          links.push_back({n + 1, m + 1, *q, true});
          uf.unite(n, m);
        }
      }
    }
  std::map<int, ConjugacyClass> by_root;
  for (int n = 0; n < kCatalogSize; ++n) by_root[uf.find(n)].members.push_back(n + 1);
  for (const auto& link : links) by_root[uf.find(link.from - 1)].links.push_back(link);
  std::vector<ConjugacyClass> classes;
  for (auto& [root, cls] : by_root) classes.push_back(std::move(cls));
  std::sort(classes.begin(), classes.end(),
            [](const ConjugacyClass& x, const ConjugacyClass& y) { return x.members < y.members; });
  return classes;
}

const std::vector<std::vector<int>>& printed_classes() {
  static const std::vector<std::vector<int>> classes{
      {1, 13},  {2, 15},  {3, 14},  {4, 16},  {5, 18},  {6, 17},  {7},      {8, 9},  {10},     {11, 12},
      {19, 31}, {20, 33}, {21, 32}, {22, 34}, {23, 36}, {24, 35}, {25},     {26, 27}, {28},    {29, 30},
  };
  return classes;
}

std::optional<int> printed_label(const std::vector<int>& members) {
  std::vector<int> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  const auto& printed = printed_classes();
  for (std::size_t i = 0; i < printed.size(); ++i)
    if (printed[i] == sorted) return static_cast<int>(i) + 1;
  return std::nullopt;
}

bool matches_printed(const std::vector<ConjugacyClass>& classes) {
  std::set<std::vector<int>> got, want(printed_classes().begin(), printed_classes().end());
  for (const auto& c : classes) got.insert(c.members);
  return got == want;
}

bool is_degenerate_parameter(double a) { return a == 0.0 || a == 0.5 || a == 1.0; }

}  // namespace qso
