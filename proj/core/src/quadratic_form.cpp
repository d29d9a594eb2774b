#include "quadlab/quadratic_form.hpp"

#include <stdexcept>

namespace quadlab {

std::pair<int, int> signature_of(const RatMat& gram) {
  if (!gram.is_symmetric()) throw std::invalid_argument("gram matrix must be symmetric");
  RatMat a = gram;
  const int n = a.rows();
  int pos = 0, neg = 0;
  for (int k = 0; k < n; ++k) {
    if (a.at(k, k) == 0) {
      int dj = -1;
      for (int j = k + 1; j < n; ++j)
        if (a.at(j, j) != 0) {
          dj = j;
          break;
        }
      if (dj >= 0) {
        // Congruence by the transposition (k dj).
        for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(dj, j));
        for (int i = 0; i < n; ++i) std::swap(a.at(i, k), a.at(i, dj));
      } else {
        int oj = -1;
        for (int j = k + 1; j < n; ++j)
          if (a.at(k, j) != 0) {
            oj = j;
            break;
          }
        if (oj < 0) throw std::domain_error("degenerate quadratic form");
        // All trailing diagonal entries vanish; x_k += x_oj creates the
        // pivot 2*a(k,oj) on the diagonal.
        for (int j = 0; j < n; ++j) a.at(k, j) += a.at(oj, j);
        for (int i = 0; i < n; ++i) a.at(i, k) += a.at(i, oj);
      }
    }
    const Rational pivot = a.at(k, k);
    if (pivot > 0)
      ++pos;
    else
      ++neg;
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      Rational f = a.at(i, k) / pivot;
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      for (int j = k; j < n; ++j) a.at(j, i) = a.at(i, j);
    }
  }
  return {pos, neg};
}

QuadraticForm QuadraticForm::from_gram(RatMat gram, Rational m) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("gram matrix must be square");
  if (!gram.is_symmetric()) throw std::invalid_argument("gram matrix must be symmetric");
  if (m == 0) throw std::invalid_argument("target level m must be nonzero");
  auto [p, q] = signature_of(gram);  // throws if degenerate
  if (p < 1 || q < 1) throw std::invalid_argument("form must be indefinite");
  return QuadraticForm(std::move(gram), std::move(m), p, q);
}

QuadraticForm QuadraticForm::diagonal(const std::vector<int>& signs, Rational m) {
  const int n = static_cast<int>(signs.size());
  RatMat gram(n, n);
  for (int i = 0; i < n; ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw std::invalid_argument("diagonal entries must be +1 or -1");
    gram.at(i, i) = signs[i];
  }
  return from_gram(std::move(gram), std::move(m));
}

bool QuadraticForm::is_diagonal_pm1() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      if (i == j) {
        if (gram_.at(i, i) != 1 && gram_.at(i, i) != -1) return false;
      } else if (gram_.at(i, j) != 0) {
        return false;
      }
    }
  return true;
}

std::vector<int> QuadraticForm::diagonal_signs() const {
  std::vector<int> signs(dim());
  for (int i = 0; i < dim(); ++i) signs[i] = gram_.at(i, i) > 0 ? 1 : -1;
  return signs;
}

Rational QuadraticForm::evaluate(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != dim()) throw std::invalid_argument("vector length must equal dim");
  Rational sum = 0;
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < dim(); ++j)
      if (x[j] != 0) row += gram_.at(i, j) * x[j];
    sum += x[i] * row;
  }
  return sum;
}

Rational QuadraticForm::bilinear(std::span<const Rational> x, std::span<const Rational> y) const {
  if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
    throw std::invalid_argument("vector length must equal dim");
  Rational sum = 0;
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < dim(); ++j)
      if (y[j] != 0) row += gram_.at(i, j) * y[j];
    sum += x[i] * row;
  }
  return sum;
}

Rational QuadraticForm::evaluate_int(std::span<const long long> x) const {
  RatVec v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i];
  return evaluate(v);
}

}  // namespace quadlab
