#include "inscribed/poly.hpp"

#include <algorithm>
#include <utility>

#include "inscribed/errors.hpp"

namespace inscribed {

mpz_class content(const Polynomial& p) {
  mpz_class g = 0;
  for (const mpz_class& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (sgn(p.leading()) < 0) g = -g;
  if (g == 1) return p;
  std::vector<mpz_class> c = p.coefficients();
  for (mpz_class& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return Polynomial(std::move(c));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidArgument("pseudo-remainder by zero polynomial");
  std::vector<mpz_class> r = a.coefficients();
  const std::vector<mpz_class>& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  const mpz_class& lc = d.back();
  if (r.size() <= db) return a;
  // Every round scales the running remainder by lc(b), including rounds whose
  // top coefficient is already zero.
  for (std::size_t top = r.size() - 1; top >= db; --top) {
    const mpz_class factor = r[top];
    for (std::size_t i = 0; i < top; ++i) r[i] *= lc;
    if (sgn(factor) != 0) {
      for (std::size_t j = 0; j < db; ++j) r[top - db + j] -= factor * d[j];
    }
    r[top] = 0;
    if (top == db) break;
  }
  return Polynomial(std::move(r));
}

namespace {

mpz_class max_norm(const Polynomial& p) {
  mpz_class m = 0;
  for (const mpz_class& c : p.coefficients()) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  return m;
}

// Symmetric base-xi digits of v, least significant first.
Polynomial from_digits(mpz_class v, const mpz_class& xi) {
  std::vector<mpz_class> digits;
  const mpz_class half = xi / 2;
  while (sgn(v) != 0) {
    mpz_class d;
    mpz_fdiv_r(d.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
    if (d > half) d -= xi;
    v -= d;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
    digits.push_back(std::move(d));
  }
  return Polynomial(std::move(digits));
}

bool divides(const Polynomial& d, const Polynomial& a) {
  Polynomial q;
  Polynomial r;
  return divide_over_integers(a, d, q, r) && r.is_zero();
}

// Heuristic gcd of primitive polynomials (Char, Geddes and Gonnet): the
// integer gcd of the values at a large point, read back in base xi, is the
// polynomial gcd whenever its primitive part divides both inputs. Returns
// false when no point within the budget succeeds.
bool heuristic_gcd(const Polynomial& u, const Polynomial& v, Polynomial& out) {
  const mpz_class nu = max_norm(u);
  const mpz_class nv = max_norm(v);
  mpz_class xi = 2 * (nu < nv ? nu : nv) + 29;
  const std::size_t degree = static_cast<std::size_t>(std::max(u.degree(), v.degree()));
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * (degree + 1) > 50'000'000) return false;
    mpz_class g;
    const mpz_class eu = evaluate(u, xi);
    const mpz_class ev = evaluate(v, xi);
    mpz_gcd(g.get_mpz_t(), eu.get_mpz_t(), ev.get_mpz_t());
    Polynomial candidate = primitive_part(from_digits(g, xi));
    if (!candidate.is_zero() && divides(candidate, u) && divides(candidate, v)) {
      out = std::move(candidate);
      return true;
    }
    xi = xi * 73794 / 27011;
  }
  return false;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return primitive_part(b) * content(b);
  if (b.is_zero()) return primitive_part(a) * content(a);
  mpz_class g;
  const mpz_class ca = content(a);
  const mpz_class cb = content(b);
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Polynomial u = primitive_part(a);
  Polynomial v = primitive_part(b);
  if (u.degree() == 0 || v.degree() == 0) return Polynomial::constant(g);
  Polynomial h;
  if (heuristic_gcd(u, v, h)) return h * g;
  // Primitive remainder sequence.
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    if (v.degree() == 0) {
      u = Polynomial::constant(1);
      break;
    }
    Polynomial r = primitive_part(pseudo_remainder(u, v));
    u = std::move(v);
    v = std::move(r);
  }
  return primitive_part(u) * g;
}

bool divide_over_integers(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw InvalidArgument("division by zero polynomial");
  std::vector<mpz_class> rem = a.coefficients();
  const std::vector<mpz_class>& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  if (rem.size() <= db) {
    q = Polynomial{};
    r = a;
    return true;
  }
  std::vector<mpz_class> quo(rem.size() - db);
  for (std::size_t top = rem.size() - 1;; --top) {
    if (sgn(rem[top]) != 0) {
      if (!mpz_divisible_p(rem[top].get_mpz_t(), d.back().get_mpz_t())) return false;
      mpz_class f;
      mpz_divexact(f.get_mpz_t(), rem[top].get_mpz_t(), d.back().get_mpz_t());
      for (std::size_t j = 0; j <= db; ++j) rem[top - db + j] -= f * d[j];
      quo[top - db] = std::move(f);
    }
    if (top == db) break;
  }
  q = Polynomial(std::move(quo));
  r = Polynomial(std::move(rem));
  return true;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  Polynomial q;
  Polynomial r;
  if (!divide_over_integers(a, b, q, r) || !r.is_zero()) {
    throw InvalidArgument("polynomial division is not exact");
  }
  return q;
}

mpz_class evaluate(const Polynomial& p, const mpz_class& t) {
  mpz_class acc = 0;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
  return acc;
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    mpz_class magnitude = abs(c[i]);
    if (out.empty()) {
      if (sgn(c[i]) < 0) out += "-";
    } else {
      out += sgn(c[i]) < 0 ? " - " : " + ";
    }
    const bool unit = magnitude == 1;
    if (i == 0 || !unit) out += magnitude.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Polynomial evaluate_inner(const BivariatePolynomial& p, const mpz_class& value) {
  std::vector<mpz_class> out;
  out.reserve(p.size());
  for (const Polynomial& c : p.coefficients()) out.push_back(evaluate(c, value));
  return Polynomial(std::move(out));
}

std::string to_string(const BivariatePolynomial& p, const std::string& outer, const std::string& inner) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c[i], inner) + ")";
    if (i > 0) out += "*" + outer;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace inscribed
