#include "continuum/nilpotent.hpp"

#include <algorithm>

#include "continuum/errors.hpp"

namespace continuum {

namespace {

void check_orders(const TruncatedPoly& a, const TruncatedPoly& b) {
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
}

}  // namespace

TruncatedPoly::TruncatedPoly(int order) {
  if (order < 2) throw Error("truncation order must be >= 2");
  c_.assign(static_cast<std::size_t>(order), Rat(0));
}

TruncatedPoly TruncatedPoly::constant(int order, Rat c) {
  TruncatedPoly t(order);
  t.c_[0] = std::move(c);
  return t;
}

TruncatedPoly TruncatedPoly::epsilon(int order) {
  TruncatedPoly t(order);
  t.c_[1] = 1;
  return t;
}

TruncatedPoly TruncatedPoly::from_coeffs(int order, std::vector<Rat> coeffs) {
  if (static_cast<int>(coeffs.size()) > order)
    throw Error("more coefficients than the truncation order allows");
  TruncatedPoly t(order);
  for (std::size_t i = 0; i < coeffs.size(); ++i) t.c_[i] = std::move(coeffs[i]);
  return t;
}

const Rat& TruncatedPoly::coeff(int k) const {
  if (k < 0 || k >= order()) throw Error("coefficient index out of range");
  return c_[static_cast<std::size_t>(k)];
}

bool TruncatedPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& c) { return c == 0; });
}

TruncatedPoly operator+(const TruncatedPoly& a, const TruncatedPoly& b) {
  check_orders(a, b);
  TruncatedPoly r(a.order());
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

TruncatedPoly operator-(const TruncatedPoly& a, const TruncatedPoly& b) {
  check_orders(a, b);
  TruncatedPoly r(a.order());
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
  check_orders(a, b);
  TruncatedPoly r(a.order());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < b.c_.size(); ++j)
      r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TruncatedPoly TruncatedPoly::operator-() const {
  TruncatedPoly r(order());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

TruncatedPoly TruncatedPoly::pow(int exponent) const {
  if (exponent < 0) throw Error("negative exponent");
  TruncatedPoly r = TruncatedPoly::constant(order(), 1);
  for (int i = 0; i < exponent; ++i) r = r * *this;
  return r;
}

std::string TruncatedPoly::str() const {
  std::string out;
  for (int k = 0; k < order(); ++k) {
    const Rat& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rat mag = abs(c);
    if (mag != 1 || k == 0) out += rat_to_string(mag);
    if (k >= 1) out += "e";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

TruncatedPoly lift_and_eval(const Poly& f, const Rat& x, int order) {
  TruncatedPoly arg = TruncatedPoly::constant(order, x) + TruncatedPoly::epsilon(order);
  return eval_poly_at(f, arg);
}

TruncatedPoly eval_poly_at(const Poly& f, const TruncatedPoly& t) {
  TruncatedPoly r(t.order());
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
    r = r * t + TruncatedPoly::constant(t.order(), *it);
  return r;
}

Rat derivative_at(const Poly& f, const Rat& x) {
  return lift_and_eval(f, x, 2).coeff(1);
}

LeibnizTrace leibniz_check(const TruncatedPoly& y, const TruncatedPoly& z) {
  check_orders(y, z);
  if (y.order() != 2) throw OrderMismatch(y.order(), 2);
  LeibnizTrace trace{y, z, y * z, TruncatedPoly(2), Rat(0), Rat(0), false};
  trace.differential = trace.product - TruncatedPoly::constant(2, y.coeff(0) * z.coeff(0));
  trace.middle = y.coeff(0) * z.coeff(1) + z.coeff(0) * y.coeff(1);
  trace.discarded = y.coeff(1) * z.coeff(1);
  TruncatedPoly expected(2);
  expected = TruncatedPoly::from_coeffs(2, {Rat(0), trace.middle});
  trace.holds = trace.differential == expected;
  return trace;
}

}  // namespace continuum
