#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace quadlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ~166-bit mantissa float used by the guard-band re-decisions.
using Float50 = boost::multiprecision::cpp_bin_float_50;

// Parses "p/q", "p", "-p/q"; whitespace is not accepted. Throws on malformed
// input or zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" for non-integers, "p" otherwise; inverse of parse_rational.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

int sign_of(const Rational& r);

// True if r is the square of a rational; if so *root is the nonnegative root.
bool rational_sqrt(const Rational& r, Rational* root);

using RatVec = std::vector<Rational>;

// Minimal dense rational matrix; just enough exact linear algebra for the
// form arithmetic (congruence elimination, inversion, products).
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_symmetric() const;
  RatMat transposed() const;
  RatMat operator*(const RatMat& other) const;
  RatVec operator*(const RatVec& v) const;
  bool operator==(const RatMat& other) const;

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

Rational rat_det(RatMat a);

// Gauss-Jordan inverse; throws std::domain_error on singular input.
RatMat rat_inverse(const RatMat& a);

// Basis of the null space of a (treated as a linear map), as columns.
std::vector<RatVec> rat_kernel(RatMat a);

}  // namespace quadlab
