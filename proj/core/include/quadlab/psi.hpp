#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadlab/rational.hpp"

namespace quadlab {

// Approximation function family. All members are quasi-conformal:
// psi(h t) <= c psi(t) for h in [1/2, 2], with the constant c stored
// alongside (power law: 2^|s|; constant: 1; log power: 2 (5/4)^|a|, using
// sup_{t>0} log(e+t)/log(e+t/2) < 5/4).
class PsiSpec {
 public:
  enum class Family { power_law, log_power, constant, tabulated };

  // psi(t) = eps * t^{-s}
  static PsiSpec power_law(double eps, double s);
  // psi(t) = eps * t^{-1} * log(e+t)^{-a}
  static PsiSpec log_power(double eps, double a);
  // psi(t) = eps
  static PsiSpec constant(double eps);
  // Piecewise log-linear interpolation of (t, psi) samples, clamped outside
  // the table range. Samples must have increasing t > 0 and psi > 0.
  static PsiSpec tabulated(std::vector<std::pair<double, double>> samples);

  // "powerlaw:eps=0.5,s=1" | "logpower:eps=1,a=0.5" | "const:eps=0.1" |
  // "table:file=path" (two-column CSV t,psi).
  static PsiSpec parse(std::string_view text);
  std::string to_string() const;

  Family family() const { return family_; }
  double eps() const { return eps_; }
  double exponent() const { return exponent_; }  // s or a; 0 for constant
  double qc_constant() const { return qc_c_; }

  double operator()(double t) const;  // throws on t <= 0
  Float50 eval_hp(const Float50& t) const;

  // Rigorous upper bound for sup of psi over [lo, hi]; exact for the
  // monotone families and for tables, a quasi-conformal chain bound
  // otherwise.
  double sup_on(double lo, double hi) const;

  // True when psi is nonincreasing on (0, inf) (all families with
  // nonnegative exponent; tables are scanned).
  bool nonincreasing() const;

 private:
  PsiSpec(Family f, double eps, double exponent, double qc);

  Family family_;
  double eps_;
  double exponent_;
  double qc_c_;
  std::vector<std::pair<double, double>> table_;  // (log t, log psi)
};

// Observed max of psi(h t)/psi(t) on a log-spaced t grid times an h grid in
// [1/2, 2]. Must not exceed qc_constant(); used by the selfcheck suite.
double quasiconformal_max_ratio(const PsiSpec& psi, int t_samples = 400, int h_samples = 97);

}  // namespace quadlab
