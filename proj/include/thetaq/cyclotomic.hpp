#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace thetaq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense integer polynomial, lowest degree first. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  /// Degree, or -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  friend IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y);
  friend bool operator==(const IntPolynomial& x, const IntPolynomial& y) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Quotient and remainder of `num` by a monic `den`.
std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& num,
                                                     const IntPolynomial& den);

std::int64_t euler_phi(std::int64_t n);

/// Phi_m, computed as (x^m - 1) divided by Phi_d for every proper divisor d of m.
IntPolynomial cyclotomic_polynomial(int m);

namespace detail {
struct FieldTables;
}

/// Exact element of Q(zeta_L), stored in the power basis 1, zeta, ...,
/// zeta^(phi(L)-1) modulo Phi_L. Immutable and cheap to share.
class CycloNum {
 public:
  /// Zero of Q (order 1).
  CycloNum();
  explicit CycloNum(Rational value, int order = 1);
  CycloNum(long value) : CycloNum(Rational(value)) {}  // NOLINT: implicit by intent

  /// Builds from power-basis coefficients; `coeffs.size()` must equal phi(order).
  static CycloNum from_coeffs(int order, std::vector<Rational> coeffs);

  int order() const noexcept;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  CycloNum operator-() const;
  CycloNum scaled(const Rational& s) const;
  CycloNum pow(std::uint64_t e) const;

  friend CycloNum operator+(const CycloNum& x, const CycloNum& y);
  friend CycloNum operator-(const CycloNum& x, const CycloNum& y);
  friend CycloNum operator*(const CycloNum& x, const CycloNum& y);
  /// Field equality; operands of different orders are compared in the
  /// compositum.
  friend bool operator==(const CycloNum& x, const CycloNum& y);

  /// Renders with the expression-language names: i for zeta_4, omega for
  /// zeta_3, zeta(L,j) otherwise. E.g. "1/2 + 1/2*i".
  std::string to_string() const;

 private:
  friend CycloNum zeta_power(int order, std::int64_t e);
  friend CycloNum cyclo_embed(const CycloNum& x, int order);
  friend CycloNum cyclo_conj(const CycloNum& x);

  CycloNum(std::shared_ptr<const detail::FieldTables> field, std::vector<Rational> coeffs);
  void check_same_order(const CycloNum& other) const;

  std::shared_ptr<const detail::FieldTables> field_;
  std::vector<Rational> coeffs_;
};

/// zeta_L^(e mod L).
CycloNum zeta_power(int order, std::int64_t e);

/// Ring homomorphism Q(zeta_m) -> Q(zeta_L) sending zeta_m to zeta_L^(L/m).
/// Throws IncompatibleOrders unless m divides L.
CycloNum cyclo_embed(const CycloNum& x, int order);

/// The automorphism zeta -> zeta^-1.
CycloNum cyclo_conj(const CycloNum& x);

/// (Re, Im) with x = Re + i*Im, both fixed by conjugation. Requires 4 | order.
std::pair<CycloNum, CycloNum> real_imag_parts(const CycloNum& x);

std::int64_t lcm_order(std::int64_t x, std::int64_t y);

}  // namespace thetaq
