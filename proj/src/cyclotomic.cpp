#include "thetaq/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "thetaq/error.hpp"

namespace thetaq {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Integer> out(x.coeffs_.size() + y.coeffs_.size() - 1);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) out[i + j] += x.coeffs_[i] * y.coeffs_[j];
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Integer& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "x";
    if (d > 1) os << "^" << d;
  }
  return os.str();
}

std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& num,
                                                     const IntPolynomial& den) {
  if (den.is_zero() || den.coeffs().back() != 1)
    throw Error(ErrorKind::InvalidArgument, "divisor must be monic");
  std::vector<Integer> rem = num.coeffs();
  const auto& d = den.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {IntPolynomial(), num};
  std::vector<Integer> quo(static_cast<std::size_t>(num.degree() - dd + 1));
  for (int i = num.degree(); i >= dd; --i) {
    Integer c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= c * d[static_cast<std::size_t>(j)];
  }
  return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "euler_phi needs n >= 1");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

IntPolynomial cyclotomic_uncached(int m, std::map<int, IntPolynomial>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  std::vector<Integer> xm1(static_cast<std::size_t>(m) + 1);
  xm1.front() = -1;
  xm1.back() = 1;
  IntPolynomial divisor(std::vector<Integer>{1});
  for (int d = 1; d < m; ++d)
    if (m % d == 0) divisor = divisor * cyclotomic_uncached(d, memo);
  auto [quo, rem] = divide_monic(IntPolynomial(std::move(xm1)), divisor);
  if (!rem.is_zero()) throw Error(ErrorKind::InvalidArgument, "inexact cyclotomic division");
  memo.emplace(m, quo);
  return quo;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be >= 1");
  std::map<int, IntPolynomial> memo;
  return cyclotomic_uncached(m, memo);
}

std::int64_t lcm_order(std::int64_t x, std::int64_t y) { return std::lcm(x, y); }

// ---------------------------------------------------------------------------
// Field tables: for order L, the reductions of x^j modulo Phi_L for 0 <= j < L.
// Every product, embedding and conjugation is a linear combination of rows.

namespace detail {

struct FieldTables {
  int order = 1;
  std::size_t phi = 1;
  IntPolynomial modulus;
  std::vector<std::vector<Integer>> powers;
};

namespace {

std::shared_ptr<const FieldTables> build_tables(int order) {
  auto t = std::make_shared<FieldTables>();
  t->order = order;
  t->modulus = cyclotomic_polynomial(order);
  t->phi = static_cast<std::size_t>(t->modulus.degree());
  const auto& mod = t->modulus.coeffs();
  std::vector<Integer> cur(t->phi, 0);
  cur[0] = 1;
  t->powers.reserve(static_cast<std::size_t>(order));
  for (int j = 0; j < order; ++j) {
    t->powers.push_back(cur);
    // multiply by x, then fold the x^phi coefficient back using the monic modulus
    Integer top = cur.back();
    for (std::size_t i = t->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < t->phi; ++i) cur[i] -= top * mod[i];
  }
  return t;
}

}  // namespace

std::shared_ptr<const FieldTables> tables_for(int order) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be >= 1");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const FieldTables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[order];
  if (!slot) slot = build_tables(order);
  return slot;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// CycloNum

namespace {

std::size_t mod_index(std::int64_t e, int order) {
  std::int64_t r = e % order;
  if (r < 0) r += order;
  return static_cast<std::size_t>(r);
}

// Accumulates c * x^j (j taken mod L) into `acc` in the power basis.
void accumulate_power(std::vector<Rational>& acc, const detail::FieldTables& t, std::int64_t j,
                      const Rational& c) {
  if (c == 0) return;
  const auto& row = t.powers[mod_index(j, t.order)];
  for (std::size_t i = 0; i < t.phi; ++i)
    if (row[i] != 0) acc[i] += c * row[i];
}

}  // namespace

CycloNum::CycloNum() : CycloNum(Rational(0), 1) {}

CycloNum::CycloNum(Rational value, int order) : field_(detail::tables_for(order)) {
  coeffs_.assign(field_->phi, Rational(0));
  value.canonicalize();
  coeffs_[0] = std::move(value);
}

CycloNum::CycloNum(std::shared_ptr<const detail::FieldTables> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

CycloNum CycloNum::from_coeffs(int order, std::vector<Rational> coeffs) {
  auto t = detail::tables_for(order);
  if (coeffs.size() != t->phi)
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(t->phi) +
                                                " coefficients for order " + std::to_string(order));
  for (auto& c : coeffs) c.canonicalize();
  return CycloNum(std::move(t), std::move(coeffs));
}

int CycloNum::order() const noexcept { return field_->order; }

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycloNum::is_one() const { return is_rational() && coeffs_[0] == 1; }

std::optional<Rational> CycloNum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

void CycloNum::check_same_order(const CycloNum& other) const {
  if (order() != other.order())
    throw Error(ErrorKind::OrderMismatch, "cyclotomic orders " + std::to_string(order()) + " and " +
                                              std::to_string(other.order()));
}

CycloNum CycloNum::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return CycloNum(field_, std::move(out));
}

CycloNum CycloNum::scaled(const Rational& s) const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * s;
  return CycloNum(field_, std::move(out));
}

CycloNum operator+(const CycloNum& x, const CycloNum& y) {
  x.check_same_order(y);
  std::vector<Rational> out(x.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.coeffs_[i] + y.coeffs_[i];
  return CycloNum(x.field_, std::move(out));
}

CycloNum operator-(const CycloNum& x, const CycloNum& y) {
  x.check_same_order(y);
  std::vector<Rational> out(x.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.coeffs_[i] - y.coeffs_[i];
  return CycloNum(x.field_, std::move(out));
}

CycloNum operator*(const CycloNum& x, const CycloNum& y) {
  x.check_same_order(y);
  const auto& t = *x.field_;
  if (t.phi == 1) return CycloNum(x.field_, {x.coeffs_[0] * y.coeffs_[0]});
  std::vector<Rational> conv(2 * t.phi - 1, Rational(0));
  for (std::size_t i = 0; i < t.phi; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < t.phi; ++j)
      if (y.coeffs_[j] != 0) conv[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  std::vector<Rational> out(conv.begin(), conv.begin() + static_cast<std::ptrdiff_t>(t.phi));
  for (std::size_t j = t.phi; j < conv.size(); ++j)
    accumulate_power(out, t, static_cast<std::int64_t>(j), conv[j]);
  return CycloNum(x.field_, std::move(out));
}

bool operator==(const CycloNum& x, const CycloNum& y) {
  if (x.order() == y.order()) return x.coeffs_ == y.coeffs_;
  const int common = static_cast<int>(lcm_order(x.order(), y.order()));
  return cyclo_embed(x, common) == cyclo_embed(y, common);
}

CycloNum CycloNum::pow(std::uint64_t e) const {
  CycloNum result(Rational(1), order());
  CycloNum base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

namespace {

std::string basis_name(int order, std::size_t j) {
  if (order == 4 && j == 1) return "i";
  if (order == 3 && j == 1) return "omega";
  return "zeta(" + std::to_string(order) + "," + std::to_string(j) + ")";
}

}  // namespace

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << basis_name(order(), j);
    }
  }
  if (first) return "0";
  return os.str();
}

CycloNum zeta_power(int order, std::int64_t e) {
  auto t = detail::tables_for(order);
  const auto& row = t->powers[mod_index(e, order)];
  std::vector<Rational> out(row.begin(), row.end());
  return CycloNum(std::move(t), std::move(out));
}

CycloNum cyclo_embed(const CycloNum& x, int order) {
  if (order < 1 || order % x.order() != 0)
    throw Error(ErrorKind::IncompatibleOrders, "cannot embed order " + std::to_string(x.order()) +
                                                   " into order " + std::to_string(order));
  if (order == x.order()) return x;
  auto t = detail::tables_for(order);
  const std::int64_t step = order / x.order();
  std::vector<Rational> out(t->phi, Rational(0));
  for (std::size_t j = 0; j < x.coeffs_.size(); ++j)
    accumulate_power(out, *t, static_cast<std::int64_t>(j) * step, x.coeffs_[j]);
  return CycloNum(std::move(t), std::move(out));
}

CycloNum cyclo_conj(const CycloNum& x) {
  const auto& t = *x.field_;
  std::vector<Rational> out(t.phi, Rational(0));
  for (std::size_t j = 0; j < x.coeffs_.size(); ++j)
    accumulate_power(out, t, -static_cast<std::int64_t>(j), x.coeffs_[j]);
  return CycloNum(x.field_, std::move(out));
}

std::pair<CycloNum, CycloNum> real_imag_parts(const CycloNum& x) {
  if (x.order() % 4 != 0)
    throw Error(ErrorKind::OrderNotDivisibleBy4,
                "real/imaginary split needs i in the field; order is " + std::to_string(x.order()));
  const CycloNum conj = cyclo_conj(x);
  const CycloNum minus_i = zeta_power(x.order(), -(x.order() / 4));
  CycloNum re = (x + conj).scaled(Rational(1, 2));
  // 1/(2i) = -i/2
  CycloNum im = ((x - conj) * minus_i).scaled(Rational(1, 2));
  return {std::move(re), std::move(im)};
}

}  // namespace thetaq
