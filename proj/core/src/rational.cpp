#include "quadlab/rational.hpp"

#include <stdexcept>

namespace quadlab {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) -> BigInt {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) throw std::invalid_argument("sign without digits");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad digit in rational literal");
    }
    return BigInt(std::string(s));
  };
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

int sign_of(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

bool rational_sqrt(const Rational& r, Rational* root) {
  if (r < 0) return false;
  BigInt num = numerator(r), den = denominator(r);
  BigInt sn = sqrt(num), sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return false;
  if (root) *root = Rational(sn, sd);
  return true;
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

RatMat RatMat::transposed() const {
  RatMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMat RatMat::operator*(const RatMat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  RatMat out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

RatVec RatMat::operator*(const RatVec& v) const {
  if (cols_ != static_cast<int>(v.size())) throw std::invalid_argument("matrix/vector shape mismatch");
  RatVec out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

bool RatMat::operator==(const RatMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != other.at(i, j)) return false;
  return true;
}

Rational rat_det(RatMat a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = a.rows();
  Rational det = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(k, j));
      det = -det;
    }
    det *= a.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      Rational f = a.at(i, k) / a.at(k, k);
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return det;
}

RatMat rat_inverse(const RatMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = a.rows();
  RatMat work = a;
  RatMat inv = RatMat::identity(n);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (work.at(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw std::domain_error("singular matrix");
    if (pivot != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(k, j));
        std::swap(inv.at(pivot, j), inv.at(k, j));
      }
    }
    Rational d = work.at(k, k);
    for (int j = 0; j < n; ++j) {
      work.at(k, j) /= d;
      inv.at(k, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || work.at(i, k) == 0) continue;
      Rational f = work.at(i, k);
      for (int j = 0; j < n; ++j) {
        work.at(i, j) -= f * work.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

std::vector<RatVec> rat_kernel(RatMat a) {
  const int rows = a.rows(), cols = a.cols();
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
    Rational d = a.at(r, c);
    for (int j = 0; j < cols; ++j) a.at(r, j) /= d;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rational f = a.at(i, c);
      for (int j = 0; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<RatVec> basis;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(cols);
    v[c] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -a.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace quadlab
