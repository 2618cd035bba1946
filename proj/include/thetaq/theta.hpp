#pragma once

#include <cstdint>
#include <vector>

#include "thetaq/laurent.hpp"

namespace thetaq {

/// Arguments of f(x, y). Expansion needs deg(x) + deg(y) > 0, the formal
/// stand-in for |xy| < 1: otherwise a single degree holds infinitely many terms.
struct ThetaArgs {
  ScaledMonomial first;
  ScaledMonomial second;
};

/// Indices n whose term in f(x, y) has total degree
/// D(n) = ((d1+d2) n^2 + (d1-d2) n) / 2 <= max_degree, in increasing order.
/// Found by walking outward from the integer nearest the vertex of D.
std::vector<std::int64_t> theta_indices(std::int64_t d1, std::int64_t d2, std::int64_t max_degree);

/// f(x, y) = sum_n x^(n(n+1)/2) y^(n(n-1)/2), exact through total degree n.
LaurentSeries theta_expand(const ThetaArgs& args, std::int64_t n);

/// (x; qq)_inf = prod_{k>=0} (1 - x qq^k), exact through total degree n.
LaurentSeries pochhammer_expand(const ScaledMonomial& x, const ScaledMonomial& qq, std::int64_t n);

/// (-x; xy)_inf (-y; xy)_inf (xy; xy)_inf. Both arguments need positive degree.
LaurentSeries triple_product_rhs(const ThetaArgs& args, std::int64_t n);

}  // namespace thetaq
