#include "dsrx/polynomial.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace dsrx {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

void strip(std::vector<long long>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<long long> coeffs) : c(std::move(coeffs)) {
  strip(c);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<long long> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] = checked_add(r[i], b.c[i]);
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<long long> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] = checked_add(r[i], -b.c[i]);
  return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<long long> r(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(a.c[i], b.c[j]));
  return Polynomial(std::move(r));
}

double eval(const Polynomial& p, double x) {
  double v = 0;
  for (size_t i = p.c.size(); i-- > 0;) v = v * x + static_cast<double>(p.c[i]);
  return v;
}

double eval_derivative(const Polynomial& p, double x) {
  double v = 0;
  for (size_t i = p.c.size(); i-- > 1;)
    v = v * x + static_cast<double>(i) * static_cast<double>(p.c[i]);
  return v;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    long long k = p.c[i];
    if (k == 0) continue;
    if (out.empty()) {
      if (k < 0) out += '-';
    } else {
      out += k < 0 ? " - " : " + ";
    }
    unsigned long long mag = k < 0 ? -static_cast<unsigned long long>(k) : k;
    if (mag != 1 || i == 0) out += std::to_string(mag);
    if (i == 1)
      out += 'x';
    else if (i > 1)
      out += "x^" + std::to_string(i);
  }
  return out;
}

double largest_real_root(const Polynomial& p, double lo, double hi) {
  if (p.degree() < 1) throw std::invalid_argument("constant polynomial has no root");
  if (!(lo < hi)) throw std::invalid_argument("root bracket is empty");
  // Two grid resolutions: our polynomials have well-separated dominant
  // roots, so the coarse pass almost always finds the sign change; the fine
  // pass is a fallback before giving up.
  for (int steps : {1 << 12, 1 << 16}) {
    double prev_x = hi;
    double prev_v = eval(p, hi);
    if (prev_v == 0) return hi;
    for (int i = 1; i <= steps; ++i) {
      double x = hi - (hi - lo) * i / steps;
      double v = eval(p, x);
      if (v == 0) return x;
      if ((v < 0) != (prev_v < 0)) {
        double a = x, b = prev_x, va = v;
        while (b - a > 1e-15 * std::max(1.0, std::abs(b))) {
          double m = 0.5 * (a + b);
          double vm = eval(p, m);
          if (vm == 0) return m;
          if ((vm < 0) == (va < 0)) {
            a = m;
            va = vm;
          } else {
            b = m;
          }
        }
        double r = 0.5 * (a + b);
        for (int it = 0; it < 8; ++it) {
          double d = eval_derivative(p, r);
          if (d == 0) break;
          double nr = r - eval(p, r) / d;
          if (!(nr >= a && nr <= b) || nr == r) break;
          r = nr;
        }
        return r;
      }
      prev_x = x;
      prev_v = v;
    }
  }
  throw std::runtime_error("no sign change for " + to_string(p) +
                           " inside the given bracket");
}

}  // namespace dsrx
