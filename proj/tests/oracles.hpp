#pragma once

// Test-only reference computations. None of these call the code path they are
// used to check: theta sums are brute-forced over a fixed wide index window,
// cyclotomic numbers are checked through their complex embedding, and
// polynomial identities through schoolbook arithmetic on plain integers.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "thetaq/cyclotomic.hpp"
#include "thetaq/laurent.hpp"

namespace oracle {

using thetaq::CycloNum;
using thetaq::LaurentSeries;
using thetaq::Monomial;
using thetaq::Rational;

inline std::complex<double> embed_complex(const CycloNum& x) {
  const double angle = 2.0 * std::numbers::pi / x.order();
  std::complex<double> z{0.0, 0.0};
  for (std::size_t j = 0; j < x.coeffs().size(); ++j)
    z += x.coeffs()[j].get_d() * std::polar(1.0, angle * static_cast<double>(j));
  return z;
}

inline CycloNum random_cyclo(std::mt19937_64& rng, int order, int span = 7) {
  const auto phi = static_cast<std::size_t>(thetaq::euler_phi(order));
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c(phi);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return CycloNum::from_coeffs(order, std::move(c));
}

// Schoolbook long division of integer polynomials (lowest degree first),
// returning the quotient; asserts exactness by leaving a zero remainder.
inline std::vector<long> divide_exact(std::vector<long> num, const std::vector<long>& den) {
  const long n = static_cast<long>(num.size());
  const long d = static_cast<long>(den.size());
  std::vector<long> quo(static_cast<std::size_t>(n - d + 1), 0);
  for (long i = n - 1; i >= d - 1; --i) {
    const long c = num[static_cast<std::size_t>(i)] / den.back();
    quo[static_cast<std::size_t>(i - d + 1)] = c;
    for (long j = 0; j < d; ++j) num[static_cast<std::size_t>(i - d + 1 + j)] -= c * den[static_cast<std::size_t>(j)];
  }
  for (long r : num)
    if (r != 0) return {};
  return quo;
}

inline std::vector<long> mul(const std::vector<long>& x, const std::vector<long>& y) {
  std::vector<long> out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

// Theta sum f(c1*m1, c2*m2) by brute force over |n| <= window; coefficient
// powers by repeated multiplication.
inline std::map<std::pair<std::int64_t, std::int64_t>, CycloNum> theta_brute(
    const CycloNum& c1, Monomial m1, const CycloNum& c2, Monomial m2, std::int64_t max_degree,
    std::int64_t window = 60) {
  std::map<std::pair<std::int64_t, std::int64_t>, CycloNum> out;
  for (std::int64_t n = -window; n <= window; ++n) {
    const std::int64_t e1 = n * (n + 1) / 2;
    const std::int64_t e2 = n * (n - 1) / 2;
    const std::int64_t pa = e1 * m1.a + e2 * m2.a;
    const std::int64_t pb = e1 * m1.b + e2 * m2.b;
    if (pa + pb > max_degree) continue;
    CycloNum coeff(Rational(1), c1.order());
    for (std::int64_t t = 0; t < e1; ++t) coeff = coeff * c1;
    for (std::int64_t t = 0; t < e2; ++t) coeff = coeff * c2;
    auto [it, fresh] = out.try_emplace({pa, pb}, coeff);
    if (!fresh) it->second = it->second + coeff;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// Sum over n = k (mod m) of a^(n(n+1)/2) b^(n(n-1)/2) with n^2 <= max_degree;
// a plain integer count per exponent pair.
inline std::map<std::pair<std::int64_t, std::int64_t>, long> residue_brute(int m, int k, std::int64_t max_degree) {
  std::map<std::pair<std::int64_t, std::int64_t>, long> out;
  for (std::int64_t n = -100; n <= 100; ++n) {
    if (n * n > max_degree || ((n % m) + m) % m != k) continue;
    ++out[{n * (n + 1) / 2, n * (n - 1) / 2}];
  }
  return out;
}

inline std::map<std::pair<std::int64_t, std::int64_t>, CycloNum> as_map(const LaurentSeries& s) {
  std::map<std::pair<std::int64_t, std::int64_t>, CycloNum> out;
  for (const auto& [m, c] : s.terms()) out.emplace(std::pair{m.a, m.b}, c);
  return out;
}

inline LaurentSeries random_series(std::mt19937_64& rng, int order, std::int64_t validity, int terms = 6,
                                   int lo = -2, int hi = 5) {
  std::uniform_int_distribution<int> exp(lo, hi);
  LaurentSeries s(order, validity);
  for (int t = 0; t < terms; ++t) s.add_term({exp(rng), exp(rng)}, random_cyclo(rng, order, 4));
  return s;
}

}  // namespace oracle
