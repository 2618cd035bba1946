#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "thetaq/cyclotomic.hpp"

namespace thetaq {

/// a^a_exp * b^b_exp with integer (possibly negative) exponents.
struct Monomial {
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::int64_t total_degree() const noexcept { return a + b; }
  Monomial pow(std::int64_t e) const noexcept { return {a * e, b * e}; }

  friend Monomial operator*(Monomial x, Monomial y) noexcept { return {x.a + y.a, x.b + y.b}; }
  friend bool operator==(Monomial, Monomial) = default;
};

/// Report order: ascending total degree, then descending a-exponent, so that
/// degree 1 lists a before b and degree 4 lists a^3*b before a*b^3.
struct MonomialOrder {
  bool operator()(Monomial x, Monomial y) const noexcept {
    if (x.total_degree() != y.total_degree()) return x.total_degree() < y.total_degree();
    return x.a > y.a;
  }
};

std::string to_string(Monomial m);

/// coeff * mono with a nonzero coefficient.
struct ScaledMonomial {
  ScaledMonomial(CycloNum coeff, Monomial mono);
  explicit ScaledMonomial(Monomial mono) : ScaledMonomial(CycloNum(1), mono) {}

  ScaledMonomial pow(std::uint64_t e) const { return {coeff.pow(e), mono.pow(static_cast<std::int64_t>(e))}; }
  ScaledMonomial embedded(int order) const { return {cyclo_embed(coeff, order), mono}; }

  friend ScaledMonomial operator*(const ScaledMonomial& x, const ScaledMonomial& y) {
    return {x.coeff * y.coeff, x.mono * y.mono};
  }

  CycloNum coeff;
  Monomial mono;
};

/// Truncated bivariate Laurent series over Q(zeta_L).
///
/// The series is exact for every total degree <= validity(); nothing is known
/// above it. Exact polynomials carry the sentinel validity kExact. Stored
/// coefficients are never zero and never sit above the validity bound.
class LaurentSeries {
 public:
  using TermMap = std::map<Monomial, CycloNum, MonomialOrder>;

  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

  explicit LaurentSeries(int order = 1, std::int64_t validity = kExact);

  static LaurentSeries constant(const CycloNum& c, std::int64_t validity = kExact);
  static LaurentSeries monomial(const ScaledMonomial& s, std::int64_t validity = kExact);

  int order() const noexcept { return order_; }
  std::int64_t validity() const noexcept { return validity_; }
  bool is_exact() const noexcept { return validity_ >= kExact; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Coefficient of `m` (zero when absent). Does not check validity.
  CycloNum coefficient(Monomial m) const;

  /// Adds c*m; terms above the validity bound are dropped, zero sums pruned.
  void add_term(Monomial m, const CycloNum& c);

  /// Keeps only terms of degree <= v and lowers validity to min(validity, v).
  LaurentSeries truncated(std::int64_t v) const;

  /// "c * a^p * b^q" terms in report order; "0" for the empty series.
  std::string to_string() const;

  friend bool operator==(const LaurentSeries& x, const LaurentSeries& y);

 private:
  int order_;
  std::int64_t validity_;
  TermMap terms_;
};

std::int64_t saturating_add(std::int64_t x, std::int64_t y) noexcept;

LaurentSeries series_add(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries series_sub(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries series_negate(const LaurentSeries& x);
LaurentSeries series_mul(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries series_scale(const LaurentSeries& x, const ScaledMonomial& s);
LaurentSeries series_embed(const LaurentSeries& x, int order);

inline LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y) { return series_add(x, y); }
inline LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y) { return series_sub(x, y); }
inline LaurentSeries operator-(const LaurentSeries& x) { return series_negate(x); }
inline LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y) { return series_mul(x, y); }

struct Mismatch {
  Monomial mono;
  CycloNum lhs;
  CycloNum rhs;
};

struct Comparison {
  bool equal = true;
  std::optional<Mismatch> first_mismatch;

  explicit operator bool() const noexcept { return equal; }
};

/// Compares coefficients on every monomial of total degree <= n. The first
/// mismatch is the least one in report order. Throws ValidityExceeded when n
/// exceeds either validity bound.
Comparison series_equal_through(const LaurentSeries& x, const LaurentSeries& y, std::int64_t n);

/// a^p b^q -> a^(p+q): the a=b=q collapse, with q living in the a slot.
LaurentSeries specialize_q(const LaurentSeries& x);

/// Smallest stored total degree; throws EmptySeries.
std::int64_t min_total_degree(const LaurentSeries& x);

/// Coefficientwise real and imaginary parts (order must be divisible by 4).
LaurentSeries series_real_part(const LaurentSeries& x);
LaurentSeries series_imag_part(const LaurentSeries& x);

}  // namespace thetaq
