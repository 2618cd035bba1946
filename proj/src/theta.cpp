#include "thetaq/theta.hpp"

#include <algorithm>

#include "thetaq/error.hpp"

namespace thetaq {

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

std::int64_t triangular(std::int64_t n) { return n * (n + 1) / 2; }

int common_order(const ThetaArgs& args) {
  if (args.first.coeff.order() != args.second.coeff.order())
    throw Error(ErrorKind::OrderMismatch, "theta arguments live in different cyclotomic orders");
  return args.first.coeff.order();
}

}  // namespace

std::vector<std::int64_t> theta_indices(std::int64_t d1, std::int64_t d2, std::int64_t max_degree) {
  const std::int64_t s = d1 + d2;
  const std::int64_t t = d1 - d2;
  if (s <= 0)
    throw Error(ErrorKind::NonConvergent, "theta arguments have total degree sum " + std::to_string(s) +
                                              " <= 0");
  // s and t share parity, so s*n^2 + t*n is always even
  auto degree = [s, t](std::int64_t n) { return (s * n * n + t * n) / 2; };
  // nearest integer to the vertex -t/(2s): floor((s - t) / (2s))
  const std::int64_t start = floor_div(s - t, 2 * s);
  std::vector<std::int64_t> out;
  for (std::int64_t n = start - 1; degree(n) <= max_degree; --n) out.push_back(n);
  std::reverse(out.begin(), out.end());
  for (std::int64_t n = start; degree(n) <= max_degree; ++n) out.push_back(n);
  return out;
}

LaurentSeries theta_expand(const ThetaArgs& args, std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "truncation degree must be >= 0");
  const int order = common_order(args);
  const auto indices =
      theta_indices(args.first.mono.total_degree(), args.second.mono.total_degree(), n);
  LaurentSeries out(order, n);
  for (std::int64_t idx : indices) {
    // both exponents are triangular numbers, hence >= 0
    const auto e1 = static_cast<std::uint64_t>(triangular(idx));
    const auto e2 = static_cast<std::uint64_t>(triangular(idx - 1));
    const ScaledMonomial term = args.first.pow(e1) * args.second.pow(e2);
    out.add_term(term.mono, term.coeff);
  }
  return out;
}

LaurentSeries pochhammer_expand(const ScaledMonomial& x, const ScaledMonomial& qq, std::int64_t n) {
  const std::int64_t step = qq.mono.total_degree();
  if (step <= 0)
    throw Error(ErrorKind::NonConvergent, "q-Pochhammer base has total degree " + std::to_string(step));
  if (x.coeff.order() != qq.coeff.order())
    throw Error(ErrorKind::OrderMismatch, "q-Pochhammer arguments live in different cyclotomic orders");
  const int order = x.coeff.order();
  const std::int64_t d0 = x.mono.total_degree();

  // Factors of negative degree can pull high-degree terms back under n; the
  // total pull is bounded by the sum of their degrees.
  std::int64_t pull = 0;
  for (std::int64_t k = 0; d0 + k * step < 0; ++k) pull += d0 + k * step;

  LaurentSeries acc = LaurentSeries::constant(CycloNum(Rational(1), order), n - pull);
  ScaledMonomial t = x;
  for (std::int64_t k = 0; t.mono.total_degree() + pull <= n; ++k) {
    LaurentSeries factor = LaurentSeries::constant(CycloNum(Rational(1), order));
    factor.add_term(t.mono, -t.coeff);
    acc = series_mul(acc, factor);
    t = t * qq;
  }
  return acc.truncated(n);
}

LaurentSeries triple_product_rhs(const ThetaArgs& args, std::int64_t n) {
  if (args.first.mono.total_degree() <= 0 || args.second.mono.total_degree() <= 0)
    throw Error(ErrorKind::NonConvergent, "triple product needs both arguments of positive degree");
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "truncation degree must be >= 0");
  const ScaledMonomial product = args.first * args.second;
  const ScaledMonomial neg_first(-args.first.coeff, args.first.mono);
  const ScaledMonomial neg_second(-args.second.coeff, args.second.mono);
  return pochhammer_expand(neg_first, product, n) * pochhammer_expand(neg_second, product, n) *
         pochhammer_expand(product, product, n);
}

}  // namespace thetaq
