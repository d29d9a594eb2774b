#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <utility>

#include "quadlab/psi.hpp"
#include "quadlab/rng.hpp"

namespace quadlab {

// Unit direction, possibly tagged as lying on the light cone {Q = 0}.
struct Direction {
  Eigen::VectorXd v;

  double norm_defect() const { return std::abs(v.norm() - 1.0); }
};

// x / ||x||; throws on the zero vector.
Direction radial_project(const Eigen::VectorXd& x);

// Draws from the rotation-invariant measure on {Q=0} intersected with the
// unit sphere, for a diagonal +/-1 form: v = (u, w)/sqrt(2) with u, w
// uniform on the plus/minus coordinate spheres (Gaussian normalization).
Direction sample_boundary(const std::vector<int>& signs, Xoshiro256& rng);

// Strictness resolution for float comparisons near the boundary: when the
// double verdict sits within `band` (relative) of the threshold, the
// comparison is redone with ~166-bit floats supplied by `recompute`.
struct GuardedCompare {
  double band = 1e-9;

  bool strict_less(double lhs, double rhs,
                   const std::function<std::pair<Float50, Float50>()>& recompute) const;
  bool less_equal(double lhs, double rhs,
                  const std::function<std::pair<Float50, Float50>()>& recompute) const;

 private:
  bool in_band(double lhs, double rhs) const;
};

enum class CuspVariant {
  cusp,          // ||pi(x) - v|| <  psi(||x||)            (strict)
  windowed,      // ||pi(x) - v|| <= psi(||x||), ||x|| >= T
  windowed_f1,   // ||x/p(x) - f1/||f1|| || <= psi(p(x)), p(x) >= T
};

struct CuspSpec {
  Direction v;
  PsiSpec psi;
  CuspVariant variant = CuspVariant::cusp;
  double T = 1.0;
  // Required by windowed_f1: the basis columns (f_1 first); x is then given
  // as a coefficient vector in this basis and p(x) = |x_1| * ||f_1||.
  std::optional<Eigen::MatrixXd> basis_columns;
};

// Membership of x in the specified region. For the windowed_f1 variant x is
// a coefficient vector in the stored basis, otherwise standard coordinates.
bool cusp_member(const CuspSpec& spec, const Eigen::VectorXd& x);

}  // namespace quadlab
