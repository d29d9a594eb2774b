#pragma once

#include <span>
#include <utility>
#include <vector>

#include "quadlab/rational.hpp"

namespace quadlab {

// Exact inertia (p, q) of a symmetric rational matrix via congruence
// elimination. Throws std::domain_error if the matrix is degenerate.
std::pair<int, int> signature_of(const RatMat& gram);

// A rational nondegenerate indefinite quadratic form Q together with the
// target level m != 0; the variety under study is {Q = m}.
class QuadraticForm {
 public:
  // gram must be symmetric and nondegenerate; the form must be indefinite
  // (p >= 1 and q >= 1) and m nonzero.
  static QuadraticForm from_gram(RatMat gram, Rational m);

  // Diagonal form with entries +/-1.
  static QuadraticForm diagonal(const std::vector<int>& signs, Rational m);

  int dim() const { return gram_.rows(); }  // = d + 1
  int d() const { return dim() - 1; }
  const RatMat& gram() const { return gram_; }
  const Rational& m() const { return m_; }
  int p() const { return p_; }
  int q() const { return q_; }

  // The main statements assume d >= 3; callers outside the low-dimensional
  // worked examples must check this flag.
  bool meets_dimension_hypothesis() const { return d() >= 3; }

  bool is_diagonal_pm1() const;
  // Diagonal entry signs; only valid when is_diagonal_pm1().
  std::vector<int> diagonal_signs() const;

  Rational evaluate(std::span<const Rational> x) const;

  // Polar form B with B(x, x) = Q(x), i.e. B(x,y) = (Q(x+y)-Q(x)-Q(y))/2.
  Rational bilinear(std::span<const Rational> x, std::span<const Rational> y) const;

  // Convenience overloads for integer vectors.
  Rational evaluate_int(std::span<const long long> x) const;

 private:
  QuadraticForm(RatMat gram, Rational m, int p, int q)
      : gram_(std::move(gram)), m_(std::move(m)), p_(p), q_(q) {}

  RatMat gram_;
  Rational m_;
  int p_, q_;
};

}  // namespace quadlab
