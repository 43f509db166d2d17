#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace inscribed {

template <class C>
bool coeff_is_zero(const C& c) {
  if constexpr (std::is_same_v<C, mpz_class>) {
    return sgn(c) == 0;
  } else {
    return c.is_zero();
  }
}

// Dense univariate polynomial; coefficient i multiplies t^i. Trailing zero
// coefficients are always trimmed, so the zero polynomial is empty.
//
// BasicPolynomial<mpz_class> is Z[t]; BasicPolynomial<Polynomial> is Z[q][x],
// the home of the area-refined generating functions.
template <class C>
class BasicPolynomial {
 public:
  using coefficient_type = C;

  BasicPolynomial() = default;
  explicit BasicPolynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  BasicPolynomial(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }
  // Constant polynomial.
  static BasicPolynomial constant(C value) { return BasicPolynomial(std::vector<C>{std::move(value)}); }
  // value * t^power
  static BasicPolynomial monomial(C value, std::size_t power) {
    std::vector<C> c(power + 1);
    c[power] = std::move(value);
    return BasicPolynomial(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const noexcept { return c_.size(); }
  const std::vector<C>& coefficients() const noexcept { return c_; }

  // Coefficient of t^i, zero beyond the degree.
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C{}; }
  const C& leading() const { return c_.back(); }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  BasicPolynomial& operator*=(const C& s) {
    if (coeff_is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (C& v : c_) v *= s;
    trim();
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator*(BasicPolynomial a, const C& s) { return a *= s; }
  friend BasicPolynomial operator*(const C& s, BasicPolynomial a) { return a *= s; }
  friend BasicPolynomial operator-(BasicPolynomial a) {
    for (C& v : a.c_) v = -v;
    return a;
  }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return BasicPolynomial(std::move(out));
  }
  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  // this * t^power
  BasicPolynomial shifted(std::size_t power) const {
    if (is_zero()) return {};
    std::vector<C> out(power);
    out.insert(out.end(), c_.begin(), c_.end());
    return BasicPolynomial(std::move(out));
  }
  // this mod t^n
  BasicPolynomial truncated(std::size_t n) const {
    if (c_.size() <= n) return *this;
    return BasicPolynomial(std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

using Polynomial = BasicPolynomial<mpz_class>;
using BivariatePolynomial = BasicPolynomial<Polynomial>;

// ---- Z[t] algorithms ------------------------------------------------------

// Nonnegative gcd of the coefficients; zero for the zero polynomial.
mpz_class content(const Polynomial& p);
// p / content(p) with positive leading coefficient.
Polynomial primitive_part(const Polynomial& p);
// lc(b)^(deg a - deg b + 1) * a mod b. b must be nonzero.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);
// Greatest common divisor in Z[t] with positive leading coefficient;
// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// a / b when b divides a exactly in Z[t]; throws InvalidArgument otherwise.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
// Quotient and remainder over Q; returns false when the quotient would need
// fractions. On success a = q * b + r with deg r < deg b.
bool divide_over_integers(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
mpz_class evaluate(const Polynomial& p, const mpz_class& t);

// "1 - 2*x + 3*x^2", lowest degree first; "0" for the zero polynomial.
std::string to_string(const Polynomial& p, const std::string& var = "x");

// ---- Z[q][x] helpers ------------------------------------------------------

// Substitute q = value in every coefficient.
Polynomial evaluate_inner(const BivariatePolynomial& p, const mpz_class& value);
// "(1) + (q^2)*x + (4*q^3 + q^4)*x^2"
std::string to_string(const BivariatePolynomial& p, const std::string& outer = "x",
                      const std::string& inner = "q");

}  // namespace inscribed
