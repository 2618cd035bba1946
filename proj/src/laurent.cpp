#include "thetaq/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "thetaq/error.hpp"

namespace thetaq {

std::string to_string(Monomial m) {
  if (m.a == 0 && m.b == 0) return "1";
  std::string out;
  auto factor = [&out](const char* name, std::int64_t e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  factor("a", m.a);
  factor("b", m.b);
  return out;
}

ScaledMonomial::ScaledMonomial(CycloNum c, Monomial m) : coeff(std::move(c)), mono(m) {
  if (coeff.is_zero()) throw Error(ErrorKind::InvalidArgument, "scaled monomial with zero coefficient");
}

std::int64_t saturating_add(std::int64_t x, std::int64_t y) noexcept {
  if (x >= LaurentSeries::kExact || y >= LaurentSeries::kExact) return LaurentSeries::kExact;
  return std::min(x + y, LaurentSeries::kExact);
}

namespace {

void check_orders(const LaurentSeries& x, const LaurentSeries& y) {
  if (x.order() != y.order())
    throw Error(ErrorKind::OrderMismatch, "series orders " + std::to_string(x.order()) + " and " +
                                              std::to_string(y.order()));
}

}  // namespace

// ---------------------------------------------------------------------------

LaurentSeries::LaurentSeries(int order, std::int64_t validity)
    : order_(order), validity_(std::min(validity, kExact)) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "series order must be >= 1");
}

LaurentSeries LaurentSeries::constant(const CycloNum& c, std::int64_t validity) {
  LaurentSeries s(c.order(), validity);
  s.add_term({}, c);
  return s;
}

LaurentSeries LaurentSeries::monomial(const ScaledMonomial& m, std::int64_t validity) {
  LaurentSeries s(m.coeff.order(), validity);
  s.add_term(m.mono, m.coeff);
  return s;
}

CycloNum LaurentSeries::coefficient(Monomial m) const {
  if (auto it = terms_.find(m); it != terms_.end()) return it->second;
  return CycloNum(Rational(0), order_);
}

void LaurentSeries::add_term(Monomial m, const CycloNum& c) {
  if (c.order() != order_)
    throw Error(ErrorKind::OrderMismatch, "coefficient order " + std::to_string(c.order()) +
                                              " in series of order " + std::to_string(order_));
  if (m.total_degree() > validity_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentSeries LaurentSeries::truncated(std::int64_t v) const {
  LaurentSeries out(order_, std::min(validity_, v));
  for (const auto& [m, c] : terms_) {
    if (m.total_degree() > out.validity_) break;
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

std::string LaurentSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string term;
    const bool unit_mono = m.a == 0 && m.b == 0;
    bool negative = false;
    if (c.is_rational()) {
      Rational r = *c.as_rational();
      negative = r < 0;
      Rational mag = abs(r);
      if (unit_mono) term = mag.get_str();
      else if (mag == 1) term = thetaq::to_string(m);
      else term = mag.get_str() + "*" + thetaq::to_string(m);
    } else {
      std::size_t nonzero = 0;
      for (const auto& x : c.coeffs()) nonzero += (x != 0);
      std::string cs = c.to_string();
      if (nonzero == 1 && cs.front() == '-') {
        negative = true;
        cs.erase(0, 1);
      }
      if (unit_mono) term = nonzero == 1 ? cs : "(" + cs + ")";
      else term = (nonzero == 1 ? cs : "(" + cs + ")") + "*" + thetaq::to_string(m);
    }
    if (first) out += negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

bool operator==(const LaurentSeries& x, const LaurentSeries& y) {
  if (x.order_ != y.order_ || x.validity_ != y.validity_ || x.terms_.size() != y.terms_.size())
    return false;
  return std::equal(x.terms_.begin(), x.terms_.end(), y.terms_.begin(), [](const auto& l, const auto& r) {
    return l.first == r.first && l.second == r.second;
  });
}

// ---------------------------------------------------------------------------

LaurentSeries series_add(const LaurentSeries& x, const LaurentSeries& y) {
  check_orders(x, y);
  LaurentSeries out = x.truncated(std::min(x.validity(), y.validity()));
  for (const auto& [m, c] : y.terms()) out.add_term(m, c);
  return out;
}

LaurentSeries series_negate(const LaurentSeries& x) {
  LaurentSeries out(x.order(), x.validity());
  for (const auto& [m, c] : x.terms()) out.add_term(m, -c);
  return out;
}

LaurentSeries series_sub(const LaurentSeries& x, const LaurentSeries& y) {
  return series_add(x, series_negate(y));
}

LaurentSeries series_mul(const LaurentSeries& x, const LaurentSeries& y) {
  check_orders(x, y);
  std::int64_t v;
  if (x.empty() && y.empty()) {
    v = std::min(x.validity(), y.validity());
  } else if (x.empty()) {
    v = std::min(saturating_add(x.validity(), std::min<std::int64_t>(min_total_degree(y), 0)), y.validity());
  } else if (y.empty()) {
    v = std::min(saturating_add(y.validity(), std::min<std::int64_t>(min_total_degree(x), 0)), x.validity());
  } else {
    v = std::min(saturating_add(x.validity(), min_total_degree(y)),
                 saturating_add(y.validity(), min_total_degree(x)));
  }
  LaurentSeries out(x.order(), v);
  if (x.empty() || y.empty()) return out;
  const std::int64_t ymin = min_total_degree(y);
  for (const auto& [mx, cx] : x.terms()) {
    // x terms come in ascending degree; once even the lowest y term overshoots, stop
    if (saturating_add(mx.total_degree(), ymin) > v) break;
    for (const auto& [my, cy] : y.terms()) {
      const Monomial m = mx * my;
      if (m.total_degree() > v) break;
      out.add_term(m, cx * cy);
    }
  }
  return out;
}

LaurentSeries series_scale(const LaurentSeries& x, const ScaledMonomial& s) {
  if (x.order() != s.coeff.order())
    throw Error(ErrorKind::OrderMismatch, "scale factor order " + std::to_string(s.coeff.order()) +
                                              " on series of order " + std::to_string(x.order()));
  LaurentSeries out(x.order(), saturating_add(x.validity(), s.mono.total_degree()));
  const bool unit = s.coeff.is_one();
  for (const auto& [m, c] : x.terms()) out.add_term(m * s.mono, unit ? c : c * s.coeff);
  return out;
}

LaurentSeries series_embed(const LaurentSeries& x, int order) {
  if (order == x.order()) return x;
  LaurentSeries out(order, x.validity());
  for (const auto& [m, c] : x.terms()) out.add_term(m, cyclo_embed(c, order));
  return out;
}

Comparison series_equal_through(const LaurentSeries& x, const LaurentSeries& y, std::int64_t n) {
  check_orders(x, y);
  if (n > x.validity() || n > y.validity())
    throw Error(ErrorKind::ValidityExceeded,
                "comparison through degree " + std::to_string(n) + " but series are exact only through " +
                    std::to_string(std::min(x.validity(), y.validity())));
  const MonomialOrder less;
  auto ix = x.terms().begin();
  auto iy = y.terms().begin();
  const CycloNum zero(Rational(0), x.order());
  auto done = [n](auto it, const auto& terms) {
    return it == terms.end() || it->first.total_degree() > n;
  };
  while (!done(ix, x.terms()) || !done(iy, y.terms())) {
    if (done(iy, y.terms()) || (!done(ix, x.terms()) && less(ix->first, iy->first)))
      return {false, Mismatch{ix->first, ix->second, zero}};
    if (done(ix, x.terms()) || less(iy->first, ix->first))
      return {false, Mismatch{iy->first, zero, iy->second}};
    if (!(ix->second == iy->second)) return {false, Mismatch{ix->first, ix->second, iy->second}};
    ++ix;
    ++iy;
  }
  return {true, std::nullopt};
}

LaurentSeries specialize_q(const LaurentSeries& x) {
  LaurentSeries out(x.order(), x.validity());
  for (const auto& [m, c] : x.terms()) out.add_term({m.total_degree(), 0}, c);
  return out;
}

std::int64_t min_total_degree(const LaurentSeries& x) {
  if (x.empty()) throw Error(ErrorKind::EmptySeries, "minimum degree of the empty series");
  return x.terms().begin()->first.total_degree();
}

namespace {

LaurentSeries coefficientwise_part(const LaurentSeries& x, bool imaginary) {
  if (x.order() % 4 != 0)
    throw Error(ErrorKind::OrderNotDivisibleBy4,
                "real/imaginary split needs i in the field; order is " + std::to_string(x.order()));
  LaurentSeries out(x.order(), x.validity());
  for (const auto& [m, c] : x.terms()) {
    auto [re, im] = real_imag_parts(c);
    out.add_term(m, imaginary ? im : re);
  }
  return out;
}

}  // namespace

LaurentSeries series_real_part(const LaurentSeries& x) { return coefficientwise_part(x, false); }

LaurentSeries series_imag_part(const LaurentSeries& x) { return coefficientwise_part(x, true); }

}  // namespace thetaq
