#pragma once

#include <string>
#include <vector>

namespace dsrx {

// Dense integer polynomial, coefficients ascending: c[i] multiplies x^i.
// Degrees stay tiny here (characteristic polynomials of block quotients),
// so the arithmetic is the naive kind; products are overflow-checked since
// exactness is the whole point.
struct Polynomial {
  std::vector<long long> c;

  Polynomial() = default;
  explicit Polynomial(std::vector<long long> coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 when zero
  bool is_zero() const { return c.empty(); }
  bool operator==(const Polynomial&) const = default;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

double eval(const Polynomial& p, double x);
double eval_derivative(const Polynomial& p, double x);

// Human-readable form, descending powers, e.g. "x^3 - 3x^2 - 18x - 8".
std::string to_string(const Polynomial& p);

// Largest real root in (lo, hi); the bracket must strictly contain it.
// Scans downward for a sign change, bisects, then polishes with Newton
// steps.  Deliberately independent of the power-iteration machinery so the
// two can cross-check each other.
double largest_real_root(const Polynomial& p, double lo, double hi);

}  // namespace dsrx
