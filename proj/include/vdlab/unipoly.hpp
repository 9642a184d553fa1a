#pragma once

#include <string>
#include <vector>

#include "vdlab/rational.hpp"

namespace vdlab {

// Univariate polynomial in t with integer coefficients, ascending powers,
// trailing zeros stripped.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Int> coeffs);

  static UniPoly zero() { return UniPoly(); }
  static UniPoly one() { return UniPoly({Int(1)}); }
  // c * t^e
  static UniPoly term(const Int& c, int e);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int i) const;
  const std::vector<Int>& coeffs() const { return c_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  Int value_at_one() const;
  // d-th derivative evaluated at t = 1, exact.
  Int derivative_at_one(int d) const;

  // Quotient by (1 - t) when it divides exactly, otherwise nullopt.
  std::optional<UniPoly> divide_by_one_minus_t() const;
  // Multiplies by (1 - t)^e.
  UniPoly times_one_minus_t(int e) const;

  std::string to_string() const;

 private:
  std::vector<Int> c_;
  void strip();
};

// Truncated power series over Q: coefficients 0..order inclusive.
class TaylorSeries {
 public:
  TaylorSeries(std::vector<Rat> coeffs, int order);

  static TaylorSeries one(int order);
  // 1 + c*t truncated.
  static TaylorSeries linear(const Rat& c, int order);

  int order() const { return order_; }
  Rat coeff(int i) const;

  TaylorSeries mul(const TaylorSeries& o) const;
  // Requires unit constant term; throws std::domain_error otherwise.
  TaylorSeries invert() const;
  TaylorSeries truncate(int new_order) const;

  bool operator==(const TaylorSeries& o) const {
    return order_ == o.order_ && c_ == o.c_;
  }

 private:
  std::vector<Rat> c_;
  int order_;
};

}  // namespace vdlab
