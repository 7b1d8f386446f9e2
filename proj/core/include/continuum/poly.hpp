#pragma once

#include <string>
#include <vector>

#include "continuum/rational.hpp"

namespace continuum {

/// Polynomial with exact rational coefficients, constant term first.
/// Normalized: no trailing zero coefficients; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(Rat c) { return Poly({std::move(c)}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Rat(0);
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  Poly compose(const Poly& inner) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& other) const { return c_ == other.c_; }

  std::string str() const;  // "x^3 - 2x" style, for reports

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

}  // namespace continuum
