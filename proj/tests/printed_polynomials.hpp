#pragma once

// The 36 catalog operators as printed in the reference table, one string per output coordinate,
// and a parser that expands them into homogeneous quadratic forms.
//
// Grammar: terms joined by '+', each one of
//   x_i^2 | <c>x_ix_j | <c>x_i(1-x_i)   with <c> in {2, 2a, 2(1-a)}.

#include <Eigen/Core>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace printed {

inline const std::array<std::array<const char*, 3>, 36> kFormulas{{
    {"x_1^2+2ax_1(1-x_1)", "x_2^2+2(1-a)x_1(1-x_1)", "x_3^2+2x_2x_3"},
    {"x_2^2+2ax_1(1-x_1)", "x_1^2+2(1-a)x_1(1-x_1)", "x_3^2+2x_2x_3"},
    {"x_3^2+2ax_1(1-x_1)", "x_2^2+2(1-a)x_1(1-x_1)", "x_1^2+2x_2x_3"},
    {"x_1^2+2ax_1(1-x_1)", "x_3^2+2(1-a)x_1(1-x_1)", "x_2^2+2x_2x_3"},
    {"x_2^2+2ax_1(1-x_1)", "x_3^2+2(1-a)x_1(1-x_1)", "x_1^2+2x_2x_3"},
    {"x_3^2+2ax_1(1-x_1)", "x_1^2+2(1-a)x_1(1-x_1)", "x_2^2+2x_2x_3"},
    {"x_1^2+2x_2x_3", "x_2^2+2ax_1(1-x_1)", "x_3^2+2(1-a)x_1(1-x_1)"},
    {"x_2^2+2x_2x_3", "x_1^2+2ax_1(1-x_1)", "x_3^2+2(1-a)x_1(1-x_1)"},
    {"x_3^2+2x_2x_3", "x_2^2+2ax_1(1-x_1)", "x_1^2+2(1-a)x_1(1-x_1)"},
    {"x_1^2+2x_2x_3", "x_3^2+2ax_1(1-x_1)", "x_2^2+2(1-a)x_1(1-x_1)"},
    {"x_2^2+2x_2x_3", "x_3^2+2ax_1(1-x_1)", "x_1^2+2(1-a)x_1(1-x_1)"},
    {"x_3^2+2x_2x_3", "x_1^2+2ax_1(1-x_1)", "x_2^2+2(1-a)x_1(1-x_1)"},
    {"x_1^2+2ax_1(1-x_1)", "x_2^2+2x_2x_3", "x_3^2+2(1-a)x_1(1-x_1)"},
    {"x_2^2+2ax_1(1-x_1)", "x_1^2+2x_2x_3", "x_3^2+2(1-a)x_1(1-x_1)"},
    {"x_3^2+2ax_1(1-x_1)", "x_2^2+2x_2x_3", "x_1^2+2(1-a)x_1(1-x_1)"},
    {"x_1^2+2ax_1(1-x_1)", "x_3^2+2x_2x_3", "x_2^2+2(1-a)x_1(1-x_1)"},
    // Subscripts restored in the last term (printed as x(1-x)).
    {"x_2^2+2ax_1(1-x_1)", "x_3^2+2x_2x_3", "x_1^2+2(1-a)x_1(1-x_1)"},
    {"x_3^2+2ax_1(1-x_1)", "x_1^2+2x_2x_3", "x_2^2+2(1-a)x_1(1-x_1)"},
    {"x_1^2+2ax_2x_3", "x_2^2+2(1-a)x_2x_3", "x_3^2+2x_1(1-x_1)"},
    {"x_2^2+2ax_2x_3", "x_1^2+2(1-a)x_2x_3", "x_3^2+2x_1(1-x_1)"},
    {"x_3^2+2ax_2x_3", "x_2^2+2(1-a)x_2x_3", "x_1^2+2x_1(1-x_1)"},
    {"x_1^2+2ax_2x_3", "x_3^2+2(1-a)x_2x_3", "x_2^2+2x_1(1-x_1)"},
    {"x_2^2+2ax_2x_3", "x_3^2+2(1-a)x_2x_3", "x_1^2+2x_1(1-x_1)"},
    {"x_3^2+2ax_2x_3", "x_1^2+2(1-a)x_2x_3", "x_2^2+2x_1(1-x_1)"},
    {"x_1^2+2x_1(1-x_1)", "x_2^2+2ax_2x_3", "x_3^2+2(1-a)x_2x_3"},
    {"x_2^2+2x_1(1-x_1)", "x_1^2+2ax_2x_3", "x_3^2+2(1-a)x_2x_3"},
    {"x_3^2+2x_1(1-x_1)", "x_2^2+2ax_2x_3", "x_1^2+2(1-a)x_2x_3"},
    {"x_1^2+2x_1(1-x_1)", "x_3^2+2ax_2x_3", "x_2^2+2(1-a)x_2x_3"},
    {"x_2^2+2x_1(1-x_1)", "x_3^2+2ax_2x_3", "x_1^2+2(1-a)x_2x_3"},
    {"x_3^2+2x_1(1-x_1)", "x_1^2+2ax_2x_3", "x_2^2+2(1-a)x_2x_3"},
    {"x_1^2+2ax_2x_3", "x_2^2+2x_1(1-x_1)", "x_3^2+2(1-a)x_2x_3"},
    {"x_2^2+2ax_2x_3", "x_1^2+2x_1(1-x_1)", "x_3^2+2(1-a)x_2x_3"},
    {"x_3^2+2ax_2x_3", "x_2^2+2x_1(1-x_1)", "x_1^2+2(1-a)x_2x_3"},
    {"x_1^2+2ax_2x_3", "x_3^2+2x_1(1-x_1)", "x_2^2+2(1-a)x_2x_3"},
    {"x_2^2+2ax_2x_3", "x_3^2+2x_1(1-x_1)", "x_1^2+2(1-a)x_2x_3"},
    {"x_3^2+2ax_2x_3", "x_1^2+2x_1(1-x_1)", "x_2^2+2(1-a)x_2x_3"},
}};

struct Term {
  enum class Shape { square, product, self_complement } shape;
  double factor;  // 1 for squares, else 2, 2a or 2(1-a)
  int i, j;       // 0-based; j unused unless product
};

namespace detail {
inline int read_index(const std::string& s, std::size_t& pos) {
  if (s.compare(pos, 2, "x_") != 0 || pos + 2 >= s.size()) throw std::invalid_argument("expected x_i in " + s);
  const int i = s[pos + 2] - '1';
  if (i < 0 || i > 2) throw std::invalid_argument("bad index in " + s);
  pos += 3;
  return i;
}
}  // namespace detail

inline Term parse_term(const std::string& s, double a) {
  std::size_t pos = 0;
  double factor = 1.0;
  if (s.rfind("2(1-a)", 0) == 0) {
    factor = 2.0 * (1.0 - a);
    pos = 6;
  } else if (s.rfind("2a", 0) == 0) {
    factor = 2.0 * a;
    pos = 2;
  } else if (s.rfind("2", 0) == 0) {
    factor = 2.0;
    pos = 1;
  }
  const int i = detail::read_index(s, pos);
  const std::string rest = s.substr(pos);
  if (factor == 1.0 && rest == "^2" && pos == 3) return {Term::Shape::square, 1.0, i, i};
  if (rest == "(1-x_" + std::to_string(i + 1) + ")") return {Term::Shape::self_complement, factor, i, i};
  std::size_t p2 = 0;
  const int j = detail::read_index(rest, p2);
  if (p2 != rest.size()) throw std::invalid_argument("trailing text in " + s);
  return {Term::Shape::product, factor, i, j};
}

inline std::vector<Term> parse(const std::string& formula, double a) {
  std::vector<Term> terms;
  std::size_t start = 0;
  while (start <= formula.size()) {
    const std::size_t plus = formula.find('+', start);
    terms.push_back(parse_term(formula.substr(start, plus - start), a));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return terms;
}

/// Symmetric Q with x^T Q x equal to the formula on the simplex (1 - x_i = sum_{j != i} x_j).
inline Eigen::Matrix3d quadratic_form(const std::string& formula, double a) {
  Eigen::Matrix3d q = Eigen::Matrix3d::Zero();
  for (const Term& t : parse(formula, a)) switch (t.shape) {
      case Term::Shape::square: q(t.i, t.i) += 1.0; break;
      case Term::Shape::product:
        q(t.i, t.j) += t.factor / 2.0;
        q(t.j, t.i) += t.factor / 2.0;
        break;
      case Term::Shape::self_complement:
        for (int j = 0; j < 3; ++j)
          if (j != t.i) {
            q(t.i, j) += t.factor / 2.0;
            q(j, t.i) += t.factor / 2.0;
          }
        break;
    }
  return q;
}

/// Direct evaluation of the formula as printed.
inline double evaluate(const std::string& formula, double a, const Eigen::Vector3d& x) {
  double v = 0.0;
  for (const Term& t : parse(formula, a)) switch (t.shape) {
      case Term::Shape::square: v += x[t.i] * x[t.i]; break;
      case Term::Shape::product: v += t.factor * x[t.i] * x[t.j]; break;
      case Term::Shape::self_complement: v += t.factor * x[t.i] * (1.0 - x[t.i]); break;
    }
  return v;
}

}  // namespace printed
