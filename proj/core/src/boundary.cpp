#include "quadlab/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace quadlab {

Direction radial_project(const Eigen::VectorXd& x) {
  const double n = x.norm();
  if (!(n > 0.0)) throw std::domain_error("cannot project the zero vector");
  return Direction{x / n};
}

Direction sample_boundary(const std::vector<int>& signs, Xoshiro256& rng) {
  const int n = static_cast<int>(signs.size());
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  const double inv_sqrt2 = 0.70710678118654752440084436210485;
  for (int block = 0; block < 2; ++block) {
    const int want = block == 0 ? 1 : -1;
    double norm2 = 0.0;
    std::vector<double> g;
    do {
      g.clear();
      norm2 = 0.0;
      for (int i = 0; i < n; ++i) {
        if (signs[i] != want) continue;
        double x = rng.normal();
        g.push_back(x);
        norm2 += x * x;
      }
    } while (!(norm2 > 0.0));
    const double scale = inv_sqrt2 / std::sqrt(norm2);
    int k = 0;
    for (int i = 0; i < n; ++i)
      if (signs[i] == want) v[i] = g[k++] * scale;
  }
  return Direction{v};
}

bool GuardedCompare::in_band(double lhs, double rhs) const {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) <= band * scale;
}

bool GuardedCompare::strict_less(
    double lhs, double rhs, const std::function<std::pair<Float50, Float50>()>& recompute) const {
  if (!in_band(lhs, rhs)) return lhs < rhs;
  auto [l, r] = recompute();
  return l < r;
}

bool GuardedCompare::less_equal(
    double lhs, double rhs, const std::function<std::pair<Float50, Float50>()>& recompute) const {
  if (!in_band(lhs, rhs)) return lhs <= rhs;
  auto [l, r] = recompute();
  return l <= r;
}

namespace {

Float50 norm_hp(const Eigen::VectorXd& x) {
  Float50 s = 0;
  for (int i = 0; i < x.size(); ++i) s += Float50(x[i]) * Float50(x[i]);
  return sqrt(s);
}

// ||x/denom - dir|| in extended precision.
Float50 scaled_error_hp(const Eigen::VectorXd& x, const Float50& denom, const Eigen::VectorXd& dir) {
  Float50 s = 0;
  for (int i = 0; i < x.size(); ++i) {
    Float50 diff = Float50(x[i]) / denom - Float50(dir[i]);
    s += diff * diff;
  }
  return sqrt(s);
}

}  // namespace

bool cusp_member(const CuspSpec& spec, const Eigen::VectorXd& x) {
  GuardedCompare guard;
  switch (spec.variant) {
    case CuspVariant::cusp:
    case CuspVariant::windowed: {
      const double norm = x.norm();
      if (!(norm > 0.0)) throw std::domain_error("cusp membership needs x != 0");
      const double err = (x / norm - spec.v.v).norm();
      const double pv = spec.psi(norm);
      auto recompute = [&]() {
        Float50 n50 = norm_hp(x);
        return std::make_pair(scaled_error_hp(x, n50, spec.v.v), spec.psi.eval_hp(n50));
      };
      if (spec.variant == CuspVariant::cusp) return guard.strict_less(err, pv, recompute);
      if (!(norm >= spec.T)) return false;
      return guard.less_equal(err, pv, recompute);
    }
    case CuspVariant::windowed_f1: {
      if (!spec.basis_columns) throw std::invalid_argument("windowed_f1 needs basis columns");
      const Eigen::MatrixXd& F = *spec.basis_columns;
      if (x.size() != F.cols()) throw std::invalid_argument("coefficient vector has wrong length");
      const Eigen::VectorXd f1 = F.col(0);
      const double f1_norm = f1.norm();
      const double p_of_x = std::abs(x[0]) * f1_norm;
      if (!(p_of_x > 0.0)) throw std::domain_error("windowed_f1 membership needs p(x) != 0");
      if (!(p_of_x >= spec.T)) return false;
      const Eigen::VectorXd xs = F * x;
      const double err = (xs / p_of_x - f1 / f1_norm).norm();
      const double pv = spec.psi(p_of_x);
      auto recompute = [&]() {
        Float50 p50 = Float50(std::abs(x[0])) * norm_hp(f1);
        Eigen::VectorXd dir = f1 / f1_norm;
        // Rebuild x in standard coordinates at double precision (exact) and
        // divide in extended precision.
        Float50 s = 0;
        for (int i = 0; i < xs.size(); ++i) {
          Float50 diff = Float50(xs[i]) / p50 - Float50(f1[i]) / norm_hp(f1);
          s += diff * diff;
        }
        return std::make_pair(sqrt(s), spec.psi.eval_hp(p50));
      };
      return guard.less_equal(err, pv, recompute);
    }
  }
  return false;
}

}  // namespace quadlab
