#pragma once

#include <cstddef>
#include <span>
#include <stop_token>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "inscribed/automaton.hpp"
#include "inscribed/poly.hpp"

namespace inscribed {

// numerator / denominator as a power series in x, with denominator(0) = 1.
template <class C>
struct BasicRationalGF {
  BasicPolynomial<C> numerator;
  BasicPolynomial<C> denominator;

  friend bool operator==(const BasicRationalGF&, const BasicRationalGF&) = default;
};

// Height generating function G_b(x).
using RationalGF = BasicRationalGF<mpz_class>;
// Height and area generating function G'_b(x, q): coefficients of x are
// integer polynomials in q.
using BivariateGF = BasicRationalGF<Polynomial>;

struct GfDegrees {
  int numerator = 0;
  int denominator = 0;
  int max = 0;
};

template <class C>
GfDegrees degrees(const BasicRationalGF<C>& gf) {
  const int n = gf.numerator.degree();
  const int d = gf.denominator.degree();
  return {n, d, n > d ? n : d};
}

// Minimal rational function reproducing every term of `series`, found with an
// inversionless Berlekamp-Massey iteration over the integers (or over Z[q]
// for the bivariate overload). Throws FitError when fewer than
// 2 * degree_bound + 2 terms are supplied, when the shortest recurrence is
// longer than degree_bound, or when the result cannot be normalised to an
// integral denominator with constant term 1.
RationalGF fit_rational(std::span<const mpz_class> series, std::size_t degree_bound,
                        std::stop_token stop = {});
BivariateGF fit_rational(std::span<const Polynomial> series, std::size_t degree_bound,
                         std::stop_token stop = {});

// First n power-series coefficients.
std::vector<mpz_class> expand(const RationalGF& gf, std::size_t n);
std::vector<Polynomial> expand(const BivariateGF& gf, std::size_t n);

// Cancels gcd(numerator, denominator) and normalises denominator(0) = 1.
RationalGF reduce(const RationalGF& gf);

// Substitutes q = value and reduces.
RationalGF specialize(const BivariateGF& gf, const mpz_class& value);

struct GfOptions {
  BuildOptions build;
  // Terms checked beyond the ones the fit used.
  std::size_t verification_terms = 25;
  // Widest automaton accepted by gf_height_area.
  int max_area_width = 4;
  std::stop_token stop;
};

// Builds the automaton, fits 2 * |states| + 10 counts with the state count as
// the degree bound, then checks the fit against verification_terms more.
RationalGF gf_height(int b, const GfOptions& options = {});

// The same pipeline over the area-refined counts. Throws
// ResourceLimitExceeded when b > options.max_area_width.
BivariateGF gf_height_area(int b, const GfOptions& options = {});

// "(num) / (den)" with both sides written lowest degree first.
std::string to_string(const RationalGF& gf);
std::string to_string(const BivariateGF& gf);
// {"num": [...], "den": [...]}; coefficients are decimal strings, nested one
// level deeper (by power of q) for the bivariate form.
std::string to_json(const RationalGF& gf);
std::string to_json(const BivariateGF& gf);

}  // namespace inscribed
