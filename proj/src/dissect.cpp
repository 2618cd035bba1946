#include "thetaq/dissect.hpp"

#include <algorithm>

#include "thetaq/error.hpp"

namespace thetaq {

namespace {

void check_modulus(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 1, got " + std::to_string(m));
}

// x / 2 for a numerator that must be even.
std::int64_t exact_half(std::int64_t x) {
  if (x % 2 != 0) throw Error(ErrorKind::InvalidArgument, "odd exponent numerator " + std::to_string(x));
  return x / 2;
}

}  // namespace

DissectionSpec::DissectionSpec(int m_, int k_, std::int64_t e) : m(m_), k(k_), zeta_exponent(e) {
  check_modulus(m);
  if (k < 0 || k >= m)
    throw Error(ErrorKind::InvalidArgument,
                "residue " + std::to_string(k) + " outside [0, " + std::to_string(m) + ")");
}

std::pair<Monomial, Monomial> boundary_monomials(int m) {
  check_modulus(m);
  const std::int64_t mm = m;
  const std::int64_t up = exact_half(mm * (mm + 1));
  const std::int64_t down = exact_half(mm * (mm - 1));
  return {Monomial{up, down}, Monomial{down, up}};
}

ClosedForm closed_form(int m, int k) {
  const DissectionSpec spec(m, k);
  const std::int64_t mm = m;
  const std::int64_t kk = k;
  // Exponents straight from substituting n = m j + k; each numerator is even.
  ClosedForm out;
  out.prefix = {exact_half(kk * (kk + 1)), exact_half(kk * (kk - 1))};
  out.first = {exact_half(mm * mm + 2 * mm * kk + mm), exact_half(mm * mm + 2 * mm * kk - mm)};
  out.second = {exact_half(mm * mm - 2 * mm * kk - mm), exact_half(mm * mm - 2 * mm * kk + mm)};

  // the same monomials through A_m (ab)^(mk), B_m (ab)^(-mk)
  const auto [am, bm] = boundary_monomials(m);
  const Monomial shift{mm * kk, mm * kk};
  if (!(out.first == am * shift) || !(out.second == bm * shift.pow(-1)))
    throw Error(ErrorKind::InvalidArgument, "closed-form exponents disagree with boundary monomials");
  return out;
}

LaurentSeries dissect_filter(const DissectionSpec& spec, std::int64_t n_max) {
  LaurentSeries out(1, n_max);
  if (n_max < 0) return out;
  std::int64_t bound = 0;
  while ((bound + 1) * (bound + 1) <= n_max) ++bound;
  const CycloNum one(Rational(1));
  for (std::int64_t n = -bound; n <= bound; ++n) {
    std::int64_t r = n % spec.m;
    if (r < 0) r += spec.m;
    if (r != spec.k) continue;
    out.add_term({n * (n + 1) / 2, n * (n - 1) / 2}, one);
  }
  return out;
}

LaurentSeries dissect_closed(const DissectionSpec& spec, std::int64_t n_max) {
  const ClosedForm cf = closed_form(spec.m, spec.k);
  // prefix has degree k^2; expand the theta factor that much lower so the
  // scaled result is still exact through n_max
  const std::int64_t prefix_degree = cf.prefix.total_degree();
  const std::int64_t budget = std::max<std::int64_t>(0, n_max - prefix_degree);
  const LaurentSeries inner =
      theta_expand({ScaledMonomial(cf.first), ScaledMonomial(cf.second)}, budget);
  return series_scale(inner, ScaledMonomial(cf.prefix)).truncated(n_max);
}

LaurentSeries transform_rhs(int m, std::int64_t zeta_exponent, std::int64_t n_max) {
  check_modulus(m);
  LaurentSeries out(m, n_max);
  for (int k = 0; k < m; ++k) {
    const DissectionSpec spec(m, k, zeta_exponent);
    const CycloNum coeff = zeta_power(m, zeta_exponent * k * k);
    out = out + series_scale(series_embed(dissect_closed(spec, n_max), m), ScaledMonomial(coeff, {}));
  }
  return out;
}

LaurentSeries transform_lhs(int m, std::int64_t zeta_exponent, std::int64_t n_max) {
  check_modulus(m);
  const CycloNum zeta = zeta_power(m, zeta_exponent);
  return theta_expand({ScaledMonomial(zeta, {1, 0}), ScaledMonomial(zeta, {0, 1})}, n_max);
}

}  // namespace thetaq
