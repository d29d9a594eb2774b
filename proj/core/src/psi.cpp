#include "quadlab/psi.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace quadlab {

namespace {
constexpr double kE = 2.718281828459045235360287471353;

double table_qc_constant(const std::vector<std::pair<double, double>>& log_table) {
  // Scan psi(ht)/psi(t) over breakpoints x grid of h; the interpolant is
  // piecewise log-linear so the extremes sit near breakpoints.
  double worst = 1.0;
  auto eval = [&](double logt) {
    if (logt <= log_table.front().first) return log_table.front().second;
    if (logt >= log_table.back().first) return log_table.back().second;
    auto it = std::upper_bound(log_table.begin(), log_table.end(), logt,
                               [](double v, const auto& p) { return v < p.first; });
    auto lo = *(it - 1);
    auto hi = *it;
    double w = (logt - lo.first) / (hi.first - lo.first);
    return lo.second + w * (hi.second - lo.second);
  };
  const double lh = std::log(2.0);
  for (const auto& [lt, lp] : log_table) {
    for (int k = -32; k <= 32; ++k) {
      double h = lh * k / 32.0;
      worst = std::max(worst, std::exp(eval(lt + h) - eval(lt)));
      // Also probe ratios anchored just off the breakpoint.
      worst = std::max(worst, std::exp(eval(lt) - eval(lt - h)));
    }
  }
  return worst;
}
}  // namespace

PsiSpec::PsiSpec(Family f, double eps, double exponent, double qc)
    : family_(f), eps_(eps), exponent_(exponent), qc_c_(qc) {
  if (!(eps > 0.0) && f != Family::tabulated) throw std::invalid_argument("psi requires eps > 0");
}

PsiSpec PsiSpec::power_law(double eps, double s) {
  return PsiSpec(Family::power_law, eps, s, std::pow(2.0, std::abs(s)));
}

PsiSpec PsiSpec::log_power(double eps, double a) {
  return PsiSpec(Family::log_power, eps, a, 2.0 * std::pow(1.25, std::abs(a)));
}

PsiSpec PsiSpec::constant(double eps) { return PsiSpec(Family::constant, eps, 0.0, 1.0); }

PsiSpec PsiSpec::tabulated(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2) throw std::invalid_argument("table needs at least two samples");
  std::vector<std::pair<double, double>> logs;
  logs.reserve(samples.size());
  double prev_t = 0.0;
  for (auto& [t, v] : samples) {
    if (!(t > prev_t)) throw std::invalid_argument("table abscissae must be increasing and positive");
    if (!(v > 0.0)) throw std::invalid_argument("table values must be positive");
    logs.emplace_back(std::log(t), std::log(v));
    prev_t = t;
  }
  PsiSpec spec(Family::tabulated, samples.front().second, 0.0, 1.0);
  spec.table_ = std::move(logs);
  spec.qc_c_ = table_qc_constant(spec.table_);
  return spec;
}

double PsiSpec::operator()(double t) const {
  if (!(t > 0.0)) throw std::domain_error("psi is defined on (0, inf)");
  switch (family_) {
    case Family::power_law:
      return eps_ * std::pow(t, -exponent_);
    case Family::log_power:
      return eps_ / t * std::pow(std::log(kE + t), -exponent_);
    case Family::constant:
      return eps_;
    case Family::tabulated: {
      const double lt = std::log(t);
      if (lt <= table_.front().first) return std::exp(table_.front().second);
      if (lt >= table_.back().first) return std::exp(table_.back().second);
      auto it = std::upper_bound(table_.begin(), table_.end(), lt,
                                 [](double v, const auto& p) { return v < p.first; });
      auto lo = *(it - 1);
      auto hi = *it;
      double w = (lt - lo.first) / (hi.first - lo.first);
      return std::exp(lo.second + w * (hi.second - lo.second));
    }
  }
  return 0.0;
}

Float50 PsiSpec::eval_hp(const Float50& t) const {
  using boost::multiprecision::log;
  using boost::multiprecision::pow;
  switch (family_) {
    case Family::power_law:
      return Float50(eps_) * pow(t, Float50(-exponent_));
    case Family::log_power: {
      static const Float50 e50 = exp(Float50(1));
      return Float50(eps_) / t * pow(log(e50 + t), Float50(-exponent_));
    }
    case Family::constant:
      return Float50(eps_);
    case Family::tabulated:
      // The table itself has double resolution; the interpolant is its own
      // definition, so the high-precision value is the double value.
      return Float50((*this)(t.convert_to<double>()));
  }
  return Float50(0);
}

double PsiSpec::sup_on(double lo, double hi) const {
  if (!(lo > 0.0) || !(hi >= lo)) throw std::domain_error("bad interval");
  switch (family_) {
    case Family::constant:
      return eps_;
    case Family::power_law:
      return std::max((*this)(lo), (*this)(hi));  // monotone in t
    case Family::tabulated: {
      double best = std::max((*this)(lo), (*this)(hi));
      const double llo = std::log(lo), lhi = std::log(hi);
      for (const auto& [lt, lp] : table_)
        if (lt > llo && lt < lhi) best = std::max(best, std::exp(lp));
      return best;
    }
    case Family::log_power: {
      if (exponent_ >= 0.0) return (*this)(lo);  // decreasing
      // Chain of doubling windows; on [x, 2x] the quasi-conformal constant
      // bounds the sup by c * psi(x).
      double bound = 0.0;
      double x = lo;
      while (x < hi) {
        bound = std::max(bound, qc_c_ * (*this)(x));
        x *= 2.0;
      }
      return std::max(bound, qc_c_ * (*this)(hi));
    }
  }
  return 0.0;
}

bool PsiSpec::nonincreasing() const {
  switch (family_) {
    case Family::constant:
      return true;
    case Family::power_law:
      return exponent_ >= 0.0;
    case Family::log_power:
      return exponent_ >= 0.0;
    case Family::tabulated: {
      for (std::size_t i = 1; i < table_.size(); ++i)
        if (table_[i].second > table_[i - 1].second) return false;
      return true;
    }
  }
  return false;
}

namespace {
double parse_kv(std::string_view body, std::string_view key) {
  std::string text(body);
  std::string needle = std::string(key) + "=";
  auto pos = text.find(needle);
  if (pos == std::string::npos) throw std::invalid_argument("psi spec missing key " + std::string(key));
  pos += needle.size();
  auto end = text.find(',', pos);
  std::string value = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
  std::size_t used = 0;
  double out = std::stod(value, &used);
  if (used != value.size()) throw std::invalid_argument("bad number in psi spec: " + value);
  return out;
}
}  // namespace

PsiSpec PsiSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("psi spec needs family:params");
  std::string_view family = text.substr(0, colon);
  std::string_view body = text.substr(colon + 1);
  if (family == "powerlaw") return power_law(parse_kv(body, "eps"), parse_kv(body, "s"));
  if (family == "logpower") return log_power(parse_kv(body, "eps"), parse_kv(body, "a"));
  if (family == "const") return constant(parse_kv(body, "eps"));
  if (family == "table") {
    std::string prefix = "file=";
    std::string b(body);
    if (b.rfind(prefix, 0) != 0) throw std::invalid_argument("table psi needs file=path");
    std::ifstream in(b.substr(prefix.size()));
    if (!in) throw std::invalid_argument("cannot open psi table file");
    std::vector<std::pair<double, double>> samples;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream row(line);
      double t, v;
      if (row >> t >> v) samples.emplace_back(t, v);
    }
    return tabulated(std::move(samples));
  }
  throw std::invalid_argument("unknown psi family: " + std::string(family));
}

std::string PsiSpec::to_string() const {
  std::ostringstream out;
  switch (family_) {
    case Family::power_law:
      out << "powerlaw:eps=" << eps_ << ",s=" << exponent_;
      break;
    case Family::log_power:
      out << "logpower:eps=" << eps_ << ",a=" << exponent_;
      break;
    case Family::constant:
      out << "const:eps=" << eps_;
      break;
    case Family::tabulated:
      out << "table:" << table_.size() << " samples";
      break;
  }
  return out.str();
}

double quasiconformal_max_ratio(const PsiSpec& psi, int t_samples, int h_samples) {
  double worst = 0.0;
  for (int i = 0; i < t_samples; ++i) {
    // t from 1e-3 to 1e9, log spaced.
    double t = std::pow(10.0, -3.0 + 12.0 * i / (t_samples - 1));
    double pt = psi(t);
    for (int j = 0; j < h_samples; ++j) {
      double h = 0.5 * std::pow(4.0, static_cast<double>(j) / (h_samples - 1));
      worst = std::max(worst, psi(h * t) / pt);
    }
  }
  return worst;
}

}  // namespace quadlab
