#pragma once

#include <string>
#include <vector>

#include "continuum/poly.hpp"

namespace continuum {

/// Element of Q[ε]/(ε^N): N exact rational coefficients c₀ + c₁ε + ... +
/// c_{N-1}ε^{N-1}. Arithmetic is polynomial arithmetic with every term of
/// degree >= N discarded, so ε is nilpotent: ε^N = 0 exactly.
class TruncatedPoly {
 public:
  explicit TruncatedPoly(int order);  // zero of the given order (order >= 2)
  static TruncatedPoly constant(int order, Rat c);
  static TruncatedPoly epsilon(int order);
  /// Coefficients beyond the order are rejected, shorter lists are padded.
  static TruncatedPoly from_coeffs(int order, std::vector<Rat> coeffs);

  int order() const { return static_cast<int>(c_.size()); }
  const Rat& coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;

  friend TruncatedPoly operator+(const TruncatedPoly& a, const TruncatedPoly& b);
  friend TruncatedPoly operator-(const TruncatedPoly& a, const TruncatedPoly& b);
  friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);
  TruncatedPoly operator-() const;
  bool operator==(const TruncatedPoly& other) const { return c_ == other.c_; }

  TruncatedPoly pow(int exponent) const;
  std::string str() const;  // "4 + 10e" style

 private:
  std::vector<Rat> c_;
};

/// f(x + ε) in Q[ε]/(ε^order): the coefficient of ε^k is f⁽ᵏ⁾(x)/k!.
TruncatedPoly lift_and_eval(const Poly& f, const Rat& x, int order);

/// f evaluated at a ring element (Horner in the truncated ring).
TruncatedPoly eval_poly_at(const Poly& f, const TruncatedPoly& t);

/// The ε-coefficient of lift_and_eval(f, x, 2): the derivative of f at x.
Rat derivative_at(const Poly& f, const Rat& x);

/// The d(yz) = z·dy + y·dz computation at order 2, with the discarded
/// dy·dz term made explicit. `holds` is a recomputation, not an assumption:
/// the identity is checked coefficient by coefficient.
struct LeibnizTrace {
  TruncatedPoly y, z;
  TruncatedPoly product;     // y·z in the ring
  TruncatedPoly differential; // y·z − y₀z₀  (= middle·ε exactly)
  Rat middle;                // y₀z₁ + z₀y₁
  Rat discarded;             // y₁z₁, the coefficient of the dropped ε² term
  bool holds = false;
};

LeibnizTrace leibniz_check(const TruncatedPoly& y, const TruncatedPoly& z);

}  // namespace continuum
