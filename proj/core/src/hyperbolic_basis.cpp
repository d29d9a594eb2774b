#include "quadlab/hyperbolic_basis.hpp"

#include <stdexcept>

namespace quadlab {

RatMat HyperbolicBasis::normal_form_gram(int dim, int p) {
  RatMat g(dim, dim);
  g.at(0, dim - 1) = 1;
  g.at(dim - 1, 0) = 1;
  for (int i = 1; i < dim - 1; ++i) g.at(i, i) = (i <= p - 1) ? 1 : -1;
  return g;
}

RatVec HyperbolicBasis::column(int j) const {
  RatVec v(dim());
  for (int i = 0; i < dim(); ++i) v[i] = columns_.at(i, j);
  return v;
}

HyperbolicBasis HyperbolicBasis::finish(const QuadraticForm& form, RatMat columns) {
  RatMat gf = columns.transposed() * form.gram() * columns;
  if (!(gf == normal_form_gram(form.dim(), form.p())))
    throw std::domain_error("basis does not bring the form to hyperbolic normal shape");
  RatMat inv = rat_inverse(columns);
  return HyperbolicBasis(std::move(columns), std::move(inv), form.p());
}

HyperbolicBasis HyperbolicBasis::build(const QuadraticForm& form) {
  if (!form.is_diagonal_pm1())
    throw std::invalid_argument(
        "automatic construction needs a diagonal +/-1 form; supply an isotropic pair otherwise");
  const int n = form.dim();
  const auto signs = form.diagonal_signs();
  int plus_axis = -1, minus_axis = -1;
  for (int i = 0; i < n; ++i) {
    if (signs[i] > 0 && plus_axis < 0) plus_axis = i;
    if (signs[i] < 0 && minus_axis < 0) minus_axis = i;
  }
  RatMat cols(n, n);
  // f_1 = e_+ + e_-, f_{d+1} = (e_+ - e_-)/2: an isotropic pair with
  // B(f_1, f_{d+1}) = 1.
  cols.at(plus_axis, 0) = 1;
  cols.at(minus_axis, 0) = 1;
  cols.at(plus_axis, n - 1) = Rational(1, 2);
  cols.at(minus_axis, n - 1) = Rational(-1, 2);
  int next = 1;
  for (int i = 0; i < n; ++i)
    if (signs[i] > 0 && i != plus_axis) cols.at(i, next++) = 1;
  for (int i = 0; i < n; ++i)
    if (signs[i] < 0 && i != minus_axis) cols.at(i, next++) = 1;
  return finish(form, std::move(cols));
}

HyperbolicBasis HyperbolicBasis::build(const QuadraticForm& form, const RatVec& iso1, const RatVec& iso2) {
  const int n = form.dim();
  if (static_cast<int>(iso1.size()) != n || static_cast<int>(iso2.size()) != n)
    throw std::invalid_argument("isotropic pair has wrong dimension");
  if (form.evaluate(iso1) != 0 || form.evaluate(iso2) != 0)
    throw std::invalid_argument("supplied vectors are not isotropic");
  Rational b = form.bilinear(iso1, iso2);
  if (b == 0) throw std::invalid_argument("isotropic pair must have B(f1, f_last) != 0");

  RatVec f1 = iso1;
  RatVec flast(n);
  for (int i = 0; i < n; ++i) flast[i] = iso2[i] / b;

  // Middle block: null space of x -> (B(f1,x), B(flast,x)).
  RatMat constraints(2, n);
  for (int j = 0; j < n; ++j) {
    RatVec ej(n);
    ej[j] = 1;
    constraints.at(0, j) = form.bilinear(f1, ej);
    constraints.at(1, j) = form.bilinear(flast, ej);
  }
  std::vector<RatVec> mid = rat_kernel(constraints);
  if (static_cast<int>(mid.size()) != n - 2)
    throw std::domain_error("isotropic pair does not span a hyperbolic plane");

  // Congruence diagonalization of the middle Gram.
  std::vector<RatVec> ortho;
  std::vector<Rational> diag;
  for (std::size_t i = 0; i < mid.size(); ++i) {
    RatVec w = mid[i];
    for (std::size_t k = 0; k < ortho.size(); ++k) {
      Rational c = form.bilinear(w, ortho[k]) / diag[k];
      if (c == 0) continue;
      for (int j = 0; j < n; ++j) w[j] -= c * ortho[k][j];
    }
    Rational qw = form.evaluate(w);
    if (qw == 0) {
      // Mix in a later, not yet reduced vector to create a nonzero length.
      bool fixed = false;
      for (std::size_t r = i + 1; r < mid.size() && !fixed; ++r) {
        RatVec u = mid[r];
        for (std::size_t k = 0; k < ortho.size(); ++k) {
          Rational c = form.bilinear(u, ortho[k]) / diag[k];
          if (c == 0) continue;
          for (int j = 0; j < n; ++j) u[j] -= c * ortho[k][j];
        }
        if (form.bilinear(w, u) != 0) {
          for (int j = 0; j < n; ++j) w[j] += u[j];
          qw = form.evaluate(w);
          fixed = qw != 0;
        }
      }
      if (!fixed) throw std::domain_error("middle block diagonalization failed");
    }
    ortho.push_back(std::move(w));
    diag.push_back(qw);
  }
  // Scale each middle vector to Q = +/-1; only possible when |Q(w)| is a
  // rational square.
  for (std::size_t i = 0; i < ortho.size(); ++i) {
    Rational root;
    if (!rational_sqrt(abs(diag[i]), &root))
      throw std::domain_error(
          "middle block is not rationally normalizable to +/-1; supply a different pair");
    for (int j = 0; j < n; ++j) ortho[i][j] /= root;
    diag[i] = diag[i] > 0 ? 1 : -1;
  }

  RatMat cols(n, n);
  for (int i = 0; i < n; ++i) cols.at(i, 0) = f1[i];
  for (int i = 0; i < n; ++i) cols.at(i, n - 1) = flast[i];
  // Plus axes first, then minus, preserving discovery order.
  int next = 1;
  for (std::size_t k = 0; k < ortho.size(); ++k) {
    if (diag[k] > 0) {
      for (int i = 0; i < n; ++i) cols.at(i, next) = ortho[k][i];
      ++next;
    }
  }
  for (std::size_t k = 0; k < ortho.size(); ++k) {
    if (diag[k] < 0) {
      for (int i = 0; i < n; ++i) cols.at(i, next) = ortho[k][i];
      ++next;
    }
  }
  return finish(form, std::move(cols));
}

std::optional<std::pair<RatVec, RatVec>> find_isotropic_pair(const QuadraticForm& form, int height) {
  const int n = form.dim();
  constexpr std::size_t kMaxCollected = 1024;
  std::vector<RatVec> isotropic;

  std::vector<long long> x(n, -height);
  bool more = true;
  while (more && isotropic.size() < kMaxCollected) {
    bool zero = true;
    for (long long c : x) zero = zero && c == 0;
    if (!zero && form.evaluate_int(x) == 0) {
      RatVec r(n);
      for (int i = 0; i < n; ++i) r[i] = x[i];
      isotropic.push_back(std::move(r));
    }
    more = false;
    for (int i = n - 1; i >= 0; --i) {
      if (x[i] < height) {
        ++x[i];
        for (int j = i + 1; j < n; ++j) x[j] = -height;
        more = true;
        break;
      }
    }
  }
  for (std::size_t a = 0; a < isotropic.size(); ++a)
    for (std::size_t b = a + 1; b < isotropic.size(); ++b)
      if (form.bilinear(isotropic[a], isotropic[b]) != 0)
        return std::make_pair(isotropic[a], isotropic[b]);
  return std::nullopt;
}

}  // namespace quadlab
