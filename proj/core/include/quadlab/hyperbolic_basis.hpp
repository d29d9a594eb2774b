#pragma once

#include <optional>
#include <utility>

#include "quadlab/quadratic_form.hpp"

namespace quadlab {

// Basis f_1..f_{d+1} in which Q reads
//   2 x_1 x_{d+1} + x_2^2 + ... + x_p^2 - x_{p+1}^2 - ... - x_d^2,
// i.e. (f_1, f_{d+1}) is an isotropic pair with B(f_1, f_{d+1}) = 1 and the
// middle block is orthonormal up to sign, plus axes first.
class HyperbolicBasis {
 public:
  // Supported input class: diagonal forms with entries +/-1.
  static HyperbolicBasis build(const QuadraticForm& form);

  // General rational forms: caller supplies an isotropic pair (candidates
  // for f_1 and f_{d+1}); fails if the middle block cannot be scaled to
  // +/-1 over the rationals.
  static HyperbolicBasis build(const QuadraticForm& form, const RatVec& iso1, const RatVec& iso2);

  const RatMat& columns() const { return columns_; }
  const RatMat& inverse() const { return inverse_; }
  int p() const { return p_; }
  int dim() const { return columns_.rows(); }
  int d() const { return dim() - 1; }

  RatVec column(int j) const;

  // Gram matrix of the normal form: 1 in the (1,d+1)/(d+1,1) corners and a
  // +/-1 middle diagonal with p-1 plus entries.
  static RatMat normal_form_gram(int dim, int p);

 private:
  HyperbolicBasis(RatMat columns, RatMat inverse, int p)
      : columns_(std::move(columns)), inverse_(std::move(inverse)), p_(p) {}

  static HyperbolicBasis finish(const QuadraticForm& form, RatMat columns);

  RatMat columns_;
  RatMat inverse_;
  int p_;
};

// Bounded brute force search for an isotropic pair of Q: integer vectors of
// sup-norm at most height with Q(x) = 0, x != 0, then a second isotropic y
// with B(x, y) != 0. Returns nothing if the search space is exhausted.
std::optional<std::pair<RatVec, RatVec>> find_isotropic_pair(const QuadraticForm& form, int height);

}  // namespace quadlab
