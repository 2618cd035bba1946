#pragma once

#include <cstdint>
#include <utility>

#include "thetaq/laurent.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {

/// Residue class k of the summation index modulo m, and the root zeta_m^e
/// used by the transformation (e need not be coprime to m).
struct DissectionSpec {
  DissectionSpec(int m, int k, std::int64_t zeta_exponent = 1);

  int m;
  int k;
  std::int64_t zeta_exponent;
};

/// (A_m, B_m) = (a^(m(m+1)/2) b^(m(m-1)/2), a^(m(m-1)/2) b^(m(m+1)/2)).
std::pair<Monomial, Monomial> boundary_monomials(int m);

/// S_k = prefix * f(first, second) with prefix a^(k(k+1)/2) b^(k(k-1)/2),
/// first = A_m (ab)^(mk), second = B_m (ab)^(-mk).
struct ClosedForm {
  Monomial prefix;
  Monomial first;
  Monomial second;
};

ClosedForm closed_form(int m, int k);

/// Oracle: sum over n = k (mod m), n^2 <= n_max, of a^(n(n+1)/2) b^(n(n-1)/2).
/// Never touches the closed form.
LaurentSeries dissect_filter(const DissectionSpec& spec, std::int64_t n_max);

/// S_k through its closed form, exact through total degree n_max.
LaurentSeries dissect_closed(const DissectionSpec& spec, std::int64_t n_max);

/// sum_k zeta^(k^2) S_k with zeta = zeta_m^e, coefficients in Q(zeta_m).
LaurentSeries transform_rhs(int m, std::int64_t zeta_exponent, std::int64_t n_max);

/// f(zeta a, zeta b) expanded directly.
LaurentSeries transform_lhs(int m, std::int64_t zeta_exponent, std::int64_t n_max);

}  // namespace thetaq
