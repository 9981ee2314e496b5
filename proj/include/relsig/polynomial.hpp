#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relsig/rational.hpp"
#include "relsig/subset.hpp"

namespace relsig {

class TriPoly;

/// Dense univariate polynomial with exact rational coefficients. The zero
/// polynomial stores no coefficients; otherwise the leading coefficient is
/// nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(Rational value);
  static UniPoly monomial(std::size_t degree, Rational coeff = Rational(1));

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; 0 for the zero polynomial.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  /// Coefficient of x^k (0 beyond the stored degree).
  Rational coefficient(std::size_t k) const;

  Rational evaluate(const Rational& at) const;
  UniPoly derivative() const;

  /// Reflection within the degree window `bound`: coefficient of x^k moves
  /// to x^(bound-k). Throws std::invalid_argument when degree() > bound;
  /// the window matters, it is not inferred from the actual degree.
  UniPoly reflect(std::size_t bound) const;

  /// Exact composition x <- x + 1 by binomial expansion.
  UniPoly shift_plus_1() const;

  /// Exact value of the integral over [0, 1].
  Rational integrate01() const;

  UniPoly pow(unsigned exponent) const;

  UniPoly operator+(const UniPoly& other) const;
  UniPoly operator-(const UniPoly& other) const;
  UniPoly operator*(const UniPoly& other) const;
  UniPoly operator*(const Rational& scale) const;
  UniPoly operator-() const;
  bool operator==(const UniPoly& other) const = default;

  /// Canonical text form, terms by ascending degree: "4*x + 18*x^2 + 4*x^3".
  std::string to_string(std::string_view var = "x") const;

 private:
  std::vector<Rational> coeffs_;  // index = degree
};

/// Dense bivariate polynomial; entry (i, j) is the coefficient of x^i z^j
/// where x is the first argument and z the second. Stored rectangularly and
/// trimmed so the outermost row and column are nonzero.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<std::vector<Rational>> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t deg_x() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::size_t deg_z() const {
    return coeffs_.empty() ? 0 : coeffs_.front().size() - 1;
  }
  Rational coefficient(std::size_t i, std::size_t j) const;

  /// Formal partial derivative in the first argument.
  BiPoly derivative_x() const;

  /// Reflection of the first argument within the window `bound`, applied to
  /// every z-slice. Throws std::invalid_argument when deg_x() > bound.
  BiPoly reflect_x(std::size_t bound) const;

  /// Exact composition x <- x + 1.
  BiPoly shift_x_plus_1() const;

  /// Exact composition x <- scale(t)*x + offset, producing a polynomial in
  /// (t, x, z).
  TriPoly compose_affine_x(const UniPoly& scale, const Rational& offset) const;

  /// Coefficient of x^k as a polynomial in z.
  UniPoly coefficient_of_x(std::size_t k) const;

  /// Evaluation of the first argument, leaving a polynomial in z.
  UniPoly evaluate_x(const Rational& at) const;

  Rational evaluate(const Rational& x, const Rational& z) const;

  /// Diagonal section: the univariate polynomial p(t) = this(t, t).
  UniPoly diagonal() const;

  /// Integral of the first argument over [0, 1], leaving a polynomial in
  /// the second.
  UniPoly integrate_x01() const;

  bool operator==(const BiPoly& other) const = default;

  std::string to_string(std::string_view var_x = "x",
                        std::string_view var_z = "z") const;

 private:
  std::vector<std::vector<Rational>> coeffs_;  // [i][j] = x^i z^j
};

/// Dense trivariate polynomial in (t, x, z).
class TriPoly {
 public:
  TriPoly() = default;
  explicit TriPoly(std::vector<std::vector<std::vector<Rational>>> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t deg_t() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::size_t deg_x() const {
    return coeffs_.empty() ? 0 : coeffs_.front().size() - 1;
  }
  std::size_t deg_z() const {
    return coeffs_.empty() ? 0 : coeffs_.front().front().size() - 1;
  }
  Rational coefficient(std::size_t a, std::size_t b, std::size_t c) const;

  /// Multiplication by x (shifts every x-degree up by one).
  TriPoly times_x() const;

  /// Reflection of the t-argument within the window `bound`.
  TriPoly reflect_t(std::size_t bound) const;

  /// Identification z := t, collapsing to a polynomial in (t, x).
  BiPoly substitute_z_equals_t() const;

  Rational evaluate(const Rational& t, const Rational& x,
                    const Rational& z) const;

  bool operator==(const TriPoly& other) const = default;

  std::string to_string(std::string_view var_t = "t",
                        std::string_view var_x = "x",
                        std::string_view var_z = "z") const;

 private:
  std::vector<std::vector<std::vector<Rational>>> coeffs_;  // [t][x][z]
};

/// Multilinear polynomial in standard form: sum over subsets A of
/// d(A) * prod_{i in A} x_i. Sparse, keyed by subset mask; zero coefficients
/// are never stored.
class MultilinearPoly {
 public:
  MultilinearPoly() : var_count_(0) {}
  MultilinearPoly(unsigned var_count, std::map<Mask, Rational> terms);

  unsigned var_count() const { return var_count_; }
  const std::map<Mask, Rational>& terms() const { return terms_; }

  /// Coefficient d(A) of the monomial over subset `a` (0 when absent).
  Rational coefficient(Mask a) const;

  /// Evaluation at an arbitrary rational point (point[i] feeds variable i+1).
  Rational evaluate(std::span<const Rational> point) const;

  /// Evaluation at the 0/1 vertex given by subset `a`: sum of d(B) over
  /// B contained in `a`.
  Rational evaluate_vertex(Mask a) const;

  /// Formal partial derivative in the 1-indexed variable `component`; the
  /// result no longer involves that variable.
  MultilinearPoly partial_derivative(unsigned component) const;

  bool operator==(const MultilinearPoly& other) const = default;

  /// Canonical text form: "x1*x4 + x2*x5 - ... + 2*x1*x2*x3*x4*x5".
  std::string to_string() const;

 private:
  unsigned var_count_;
  std::map<Mask, Rational> terms_;
};

/// Identification of variables: those in `m_set` become x, the rest become
/// z. Coefficient of x^a z^b collects d(A) over |A & m_set| = a,
/// |A \ m_set| = b.
BiPoly identify(const MultilinearPoly& h, Mask m_set);

/// Diagonal section h(t, ..., t) as a univariate polynomial.
UniPoly diagonal(const MultilinearPoly& h);

}  // namespace relsig
