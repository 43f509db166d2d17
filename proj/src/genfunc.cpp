#include "inscribed/genfunc.hpp"

#include <algorithm>

#include "inscribed/counting.hpp"
#include "inscribed/errors.hpp"
#include "json.hpp"

namespace inscribed {

namespace {

// The coefficient domains the recurrence search runs over: Z and Z[q]. Both
// are gcd domains, which is all the inversionless iteration needs.
template <class C>
struct Domain;

template <>
struct Domain<mpz_class> {
  static mpz_class one() { return 1; }
  static bool is_unit(const mpz_class& c) { return c == 1 || c == -1; }
  static mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static mpz_class quotient(const mpz_class& a, const mpz_class& g) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    return q;
  }
  static bool negative(const mpz_class& c) { return sgn(c) < 0; }
};

template <>
struct Domain<Polynomial> {
  static Polynomial one() { return Polynomial::constant(1); }
  static bool is_unit(const Polynomial& c) { return c.degree() == 0 && Domain<mpz_class>::is_unit(c.leading()); }
  static Polynomial gcd(const Polynomial& a, const Polynomial& b) { return inscribed::gcd(a, b); }
  static Polynomial quotient(const Polynomial& a, const Polynomial& g) { return exact_quotient(a, g); }
  static bool negative(const Polynomial& c) { return !c.is_zero() && sgn(c.leading()) < 0; }
};

// Divides out the gcd of all coefficients and makes the constant term
// positive. Scaling a connection polynomial does not change the recurrence.
template <class C>
BasicPolynomial<C> remove_content(const BasicPolynomial<C>& p) {
  using D = Domain<C>;
  const auto& c = p.coefficients();
  C g = c.front();
  for (std::size_t i = 1; i < c.size() && !D::is_unit(g); ++i) {
    if (!coeff_is_zero(c[i])) g = D::gcd(g, c[i]);
  }
  if (D::negative(c.front()) != D::negative(g)) g = -g;
  if (g == D::one()) return p;
  std::vector<C> out;
  out.reserve(c.size());
  for (const C& v : c) out.push_back(coeff_is_zero(v) ? C{} : D::quotient(v, g));
  return BasicPolynomial<C>(std::move(out));
}

template <class C>
struct Recurrence {
  BasicPolynomial<C> connection;
  std::size_t length = 0;
};

// Shortest linear recurrence generating `s`: connection(0) * s[n] +
// connection(1) * s[n-1] + ... = 0 for every n >= length.
//
// Berlekamp-Massey without division: the update
//   C <- disc(B) * C - disc(C) * x^m * B
// is the textbook C - (disc(C) / disc(B)) x^m B scaled by disc(B), and the
// content is cancelled after every update to keep coefficients small.
template <class C>
Recurrence<C> shortest_recurrence(std::span<const C> s, const std::stop_token& stop) {
  using P = BasicPolynomial<C>;
  using D = Domain<C>;
  P current = P::constant(D::one());
  P previous = current;
  C previous_disc = D::one();
  std::size_t length = 0;
  std::size_t gap = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    if (stop.stop_requested()) throw Cancelled();
    const auto& c = current.coefficients();
    C disc{};
    for (std::size_t i = 0; i < c.size() && i <= n; ++i) {
      if (!coeff_is_zero(c[i])) disc += c[i] * s[n - i];
    }
    if (coeff_is_zero(disc)) {
      ++gap;
      continue;
    }
    P next = current * previous_disc - previous.shifted(gap) * disc;
    if (2 * length <= n) {
      previous = std::move(current);
      previous_disc = std::move(disc);
      length = n + 1 - length;
      gap = 1;
    } else {
      ++gap;
    }
    current = remove_content(next);
  }
  return {std::move(current), length};
}

template <class C>
BasicRationalGF<C> fit(std::span<const C> series, std::size_t degree_bound, const std::stop_token& stop) {
  if (series.size() < 2 * degree_bound + 2) {
    throw FitError("insufficient terms: " + std::to_string(series.size()) + " given, " +
                   std::to_string(2 * degree_bound + 2) + " needed for degree bound " +
                   std::to_string(degree_bound));
  }
  Recurrence<C> rec = shortest_recurrence(series, stop);
  if (rec.length > degree_bound) {
    throw FitError("insufficient terms: shortest recurrence has length " + std::to_string(rec.length) +
                   ", above the degree bound " + std::to_string(degree_bound));
  }
  const C& constant = rec.connection.coefficients().front();
  if (!Domain<C>::is_unit(constant)) {
    throw FitError("recurrence cannot be normalised to an integral denominator");
  }
  BasicPolynomial<C> den = rec.connection;
  if (Domain<C>::negative(constant)) den = -den;
  BasicPolynomial<C> prefix(std::vector<C>(series.begin(), series.begin() + static_cast<std::ptrdiff_t>(rec.length)));
  BasicRationalGF<C> gf{(prefix * den).truncated(rec.length), std::move(den)};
  if (!std::ranges::equal(expand(gf, series.size()), series)) {
    throw FitError("fitted rational function does not reproduce the series");
  }
  return gf;
}

template <class C>
std::vector<C> expand_series(const BasicRationalGF<C>& gf, std::size_t n) {
  const auto& den = gf.denominator.coefficients();
  if (den.empty() || den.front() != Domain<C>::one()) {
    throw InvalidArgument("denominator must have constant term 1");
  }
  std::vector<C> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    C v = gf.numerator.coeff(k);
    for (std::size_t i = 1; i < den.size() && i <= k; ++i) {
      if (!coeff_is_zero(den[i])) v -= den[i] * out[k - i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t fit_terms(std::size_t states) { return 2 * states + 10; }

nlohmann::json coefficient_array(const Polynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const mpz_class& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

nlohmann::json coefficient_array(const BivariatePolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const Polynomial& c : p.coefficients()) out.push_back(coefficient_array(c));
  return out;
}

}  // namespace

RationalGF fit_rational(std::span<const mpz_class> series, std::size_t degree_bound, std::stop_token stop) {
  return reduce(fit(series, degree_bound, stop));
}

BivariateGF fit_rational(std::span<const Polynomial> series, std::size_t degree_bound, std::stop_token stop) {
  return fit(series, degree_bound, stop);
}

std::vector<mpz_class> expand(const RationalGF& gf, std::size_t n) { return expand_series(gf, n); }

std::vector<Polynomial> expand(const BivariateGF& gf, std::size_t n) { return expand_series(gf, n); }

RationalGF reduce(const RationalGF& gf) {
  if (gf.denominator.is_zero()) throw InvalidArgument("zero denominator");
  Polynomial num = gf.numerator;
  Polynomial den = gf.denominator;
  const Polynomial g = gcd(num, den);
  if (g.degree() > 0 || (g.degree() == 0 && g.leading() != 1)) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  const mpz_class constant = den.coeff(0);
  if (constant == -1) {
    num = -num;
    den = -den;
  } else if (constant != 1) {
    throw FitError("denominator cannot be normalised to constant term 1");
  }
  return {std::move(num), std::move(den)};
}

RationalGF specialize(const BivariateGF& gf, const mpz_class& value) {
  return reduce({evaluate_inner(gf.numerator, value), evaluate_inner(gf.denominator, value)});
}

RationalGF gf_height(int b, const GfOptions& options) {
  const Automaton a = build(b, options.build);
  const std::size_t fitted = fit_terms(a.size());
  const std::size_t total = fitted + options.verification_terms;
  const SeriesTable table = count_series(a, total - 1);
  const std::span<const mpz_class> all(table.counts);
  RationalGF gf = fit_rational(all.first(fitted), a.size(), options.stop);
  if (!std::ranges::equal(expand(gf, total), all)) {
    throw FitError("generating function for width " + std::to_string(b) +
                   " failed the verification window");
  }
  return gf;
}

BivariateGF gf_height_area(int b, const GfOptions& options) {
  if (b > options.max_area_width) {
    throw ResourceLimitExceeded("area generating function limited to width " +
                                std::to_string(options.max_area_width));
  }
  const Automaton a = build(b, options.build);
  const std::size_t fitted = fit_terms(a.size());
  const std::size_t total = fitted + options.verification_terms;
  const SeriesTable table = count_area_series(a, total - 1);
  const std::span<const Polynomial> all(table.area_counts);
  BivariateGF gf = fit_rational(all.first(fitted), a.size(), options.stop);
  if (!std::ranges::equal(expand(gf, total), all)) {
    throw FitError("area generating function for width " + std::to_string(b) +
                   " failed the verification window");
  }
  return gf;
}

std::string to_string(const RationalGF& gf) {
  return "(" + to_string(gf.numerator) + ") / (" + to_string(gf.denominator) + ")";
}

std::string to_string(const BivariateGF& gf) {
  return "(" + to_string(gf.numerator) + ") / (" + to_string(gf.denominator) + ")";
}

std::string to_json(const RationalGF& gf) {
  return nlohmann::json{{"num", coefficient_array(gf.numerator)}, {"den", coefficient_array(gf.denominator)}}
      .dump();
}

std::string to_json(const BivariateGF& gf) {
  return nlohmann::json{{"num", coefficient_array(gf.numerator)}, {"den", coefficient_array(gf.denominator)}}
      .dump();
}

}  // namespace inscribed
