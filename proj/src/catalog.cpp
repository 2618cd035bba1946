#include "thetaq/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "thetaq/dissect.hpp"
#include "thetaq/error.hpp"
#include "thetaq/parallel.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Variables used in one specialization scope. A specq(...) node opens a fresh
// scope and, seen from outside, behaves like q.
struct VarUse {
  bool ab = false;
  bool q = false;
};

VarUse scan_scope(const Expr& e);

void scan_into(const Expr& e, VarUse& use) {
  std::visit(overloaded{
                 [&](const node::Sum& n) {
                   for (const auto& t : n.terms) scan_into(*t, use);
                 },
                 [&](const node::Product& n) {
                   for (const auto& f : n.factors) scan_into(*f, use);
                 },
                 [&](const node::Power& n) { scan_into(*n.base, use); },
                 [&](const node::ThetaCall& n) {
                   scan_into(*n.first, use);
                   scan_into(*n.second, use);
                 },
                 [&](const node::Var& n) {
                   if (n.name == Variable::q) use.q = true;
                   else use.ab = true;
                 },
                 [&](const node::RootOfUnity&) {},
                 [&](const node::RationalConst&) {},
                 [&](const node::Negate& n) { scan_into(*n.child, use); },
                 [&](const node::RealPart& n) { scan_into(*n.child, use); },
                 [&](const node::ImagPart& n) { scan_into(*n.child, use); },
                 [&](const node::SpecializeQ& n) {
                   scan_scope(*n.child);
                   use.q = true;
                 },
             },
             e.node);
}

VarUse scan_scope(const Expr& e) {
  VarUse use;
  scan_into(e, use);
  if (use.ab && use.q)
    throw Error(ErrorKind::MixedVariables, "q cannot be combined with a or b outside specq(...)");
  return use;
}

void collect_orders(const Expr& e, int& order) {
  auto fold = [&order](std::int64_t o) { order = static_cast<int>(lcm_order(order, o)); };
  std::visit(overloaded{
                 [&](const node::Sum& n) {
                   for (const auto& t : n.terms) collect_orders(*t, order);
                 },
                 [&](const node::Product& n) {
                   for (const auto& f : n.factors) collect_orders(*f, order);
                 },
                 [&](const node::Power& n) { collect_orders(*n.base, order); },
                 [&](const node::ThetaCall& n) {
                   collect_orders(*n.first, order);
                   collect_orders(*n.second, order);
                 },
                 [&](const node::Var&) {},
                 [&](const node::RootOfUnity& n) { fold(n.order); },
                 [&](const node::RationalConst&) {},
                 [&](const node::Negate& n) { collect_orders(*n.child, order); },
                 [&](const node::RealPart& n) {
                   fold(4);
                   collect_orders(*n.child, order);
                 },
                 [&](const node::ImagPart& n) {
                   fold(4);
                   collect_orders(*n.child, order);
                 },
                 [&](const node::SpecializeQ& n) { collect_orders(*n.child, order); },
             },
             e.node);
}

ScaledMonomial as_scaled_monomial(const LaurentSeries& s) {
  if (!s.is_exact() || s.size() != 1)
    throw Error(ErrorKind::NonMonomialArgument,
                "theta argument " + s.to_string() + " is not a single scaled monomial");
  const auto& [m, c] = *s.terms().begin();
  return ScaledMonomial(c, m);
}

CycloNum inverse_of_root_multiple(const CycloNum& c) {
  if (auto r = c.as_rational()) return CycloNum(Rational(1) / *r, c.order());
  // c = r * zeta^j satisfies c^L = r^L, so c^-1 = c^(L-1) / r^L
  const auto order = static_cast<std::uint64_t>(c.order());
  const auto lth = c.pow(order).as_rational();
  if (!lth || *lth == 0)
    throw Error(ErrorKind::NotInvertible, "coefficient " + c.to_string() + " is not a rational multiple of a root of unity");
  return c.pow(order - 1).scaled(Rational(1) / *lth);
}

class Evaluator {
 public:
  Evaluator(int order, std::int64_t budget) : order_(order), budget_(budget) {}

  LaurentSeries eval(const Expr& e) const {
    return std::visit(overloaded{
                          [&](const node::Sum& n) { return fold(n.terms, &series_add); },
                          [&](const node::Product& n) { return fold(n.factors, &series_mul); },
                          [&](const node::Power& n) { return power(*n.base, n.exponent); },
                          [&](const node::ThetaCall& n) {
                            const ScaledMonomial first = as_scaled_monomial(eval(*n.first));
                            const ScaledMonomial second = as_scaled_monomial(eval(*n.second));
                            return theta_expand({first, second}, budget_);
                          },
                          [&](const node::Var& n) {
                            const Monomial m = n.name == Variable::b ? Monomial{0, 1} : Monomial{1, 0};
                            return LaurentSeries::monomial(ScaledMonomial(one(), m));
                          },
                          [&](const node::RootOfUnity& n) {
                            return LaurentSeries::constant(cyclo_embed(zeta_power(n.order, n.exponent), order_));
                          },
                          [&](const node::RationalConst& n) {
                            return LaurentSeries::constant(CycloNum(n.value, order_));
                          },
                          [&](const node::Negate& n) { return series_negate(eval(*n.child)); },
                          [&](const node::RealPart& n) { return series_real_part(eval(*n.child)); },
                          [&](const node::ImagPart& n) { return series_imag_part(eval(*n.child)); },
                          [&](const node::SpecializeQ& n) { return specialize_q(eval(*n.child)); },
                      },
                      e.node);
  }

 private:
  CycloNum one() const { return CycloNum(Rational(1), order_); }

  LaurentSeries fold(const std::vector<ExprPtr>& items,
                     LaurentSeries (*op)(const LaurentSeries&, const LaurentSeries&)) const {
    if (items.empty()) throw Error(ErrorKind::InvalidArgument, "empty sum or product");
    LaurentSeries acc = eval(*items.front());
    for (std::size_t i = 1; i < items.size(); ++i) acc = op(acc, eval(*items[i]));
    return acc;
  }

  LaurentSeries power(const Expr& base_expr, std::int64_t exponent) const {
    LaurentSeries base = eval(base_expr);
    if (exponent < 0) {
      if (!base.is_exact() || base.size() != 1)
        throw Error(ErrorKind::NotInvertible, "negative power of " + base.to_string() +
                                                  "; only single monomials can be inverted");
      const auto& [m, c] = *base.terms().begin();
      base = LaurentSeries::monomial(ScaledMonomial(inverse_of_root_multiple(c), m.pow(-1)));
      exponent = -exponent;
    }
    LaurentSeries result = LaurentSeries::constant(one());
    auto e = static_cast<std::uint64_t>(exponent);
    while (e != 0) {
      if (e & 1U) result = series_mul(result, base);
      e >>= 1U;
      if (e != 0) base = series_mul(base, base);
    }
    return result;
  }

  int order_;
  std::int64_t budget_;
};

std::string monomial_key(Monomial m) { return to_string(m); }

}  // namespace

int required_root_order(const Expr& e) {
  int order = 1;
  collect_orders(e, order);
  return order;
}

LaurentSeries evaluate(const Expr& e, std::int64_t n, int order) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "truncation degree must be >= 0");
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "root order must be >= 1");
  const int needed = required_root_order(e);
  if (order % needed != 0)
    throw Error(ErrorKind::IncompatibleOrders, "expression needs a multiple of order " + std::to_string(needed) +
                                                   ", got " + std::to_string(order));
  scan_scope(e);

  std::int64_t budget = n;
  constexpr int kMaxDeepening = 64;
  for (int attempt = 0; attempt < kMaxDeepening; ++attempt) {
    LaurentSeries s = Evaluator(order, budget).eval(e);
    if (s.validity() >= n) return s.truncated(n);
    budget += n - s.validity();
  }
  throw Error(ErrorKind::ValidityExceeded, "could not reach validity " + std::to_string(n));
}

// ---------------------------------------------------------------------------

Identity make_identity(std::string name, ExprPtr lhs, ExprPtr rhs, std::string reference,
                       std::int64_t default_degree) {
  Identity id;
  id.name = std::move(name);
  id.required_root_order = static_cast<int>(lcm_order(required_root_order(*lhs), required_root_order(*rhs)));
  id.lhs = std::move(lhs);
  id.rhs = std::move(rhs);
  id.reference = std::move(reference);
  id.default_degree = default_degree;
  return id;
}

Identity make_identity(std::string name, std::string_view text, std::string reference,
                       std::int64_t default_degree) {
  auto [lhs, rhs] = parse_identity(text);
  return make_identity(std::move(name), std::move(lhs), std::move(rhs), std::move(reference), default_degree);
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::failed: return "failed";
    case Status::error: return "error";
  }
  return "error";
}

Report verify_identity(const Identity& id, std::int64_t n, std::optional<int> order_override) {
  Report r;
  r.name = id.name;
  r.reference = id.reference;
  r.degree = n;
  r.order = id.required_root_order;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (order_override) {
      if (*order_override < 1 || *order_override % id.required_root_order != 0)
        throw Error(ErrorKind::IncompatibleOrders, "order " + std::to_string(*order_override) +
                                                       " is not a multiple of " +
                                                       std::to_string(id.required_root_order));
      r.order = *order_override;
    }
    // q/a/b consistency is a property of the whole identity, not of one side
    scan_scope(*build::sum({id.lhs, id.rhs}));
    const LaurentSeries lhs = evaluate(*id.lhs, n, r.order);
    const LaurentSeries rhs = evaluate(*id.rhs, n, r.order);
    r.lhs_terms = lhs.size();
    r.rhs_terms = rhs.size();
    r.lhs_series = lhs.to_string();
    r.rhs_series = rhs.to_string();
    const Comparison cmp = series_equal_through(lhs, rhs, n);
    r.status = cmp.equal ? Status::verified : Status::failed;
    if (cmp.first_mismatch)
      r.first_mismatch = MismatchReport{monomial_key(cmp.first_mismatch->mono), cmp.first_mismatch->lhs.to_string(),
                                        cmp.first_mismatch->rhs.to_string()};
  } catch (const std::exception& e) {
    r.status = Status::error;
    r.error = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// c * mono with the factors kept flat, as the parser would produce them
ExprPtr scaled_expr(ExprPtr coeff, Monomial m) {
  std::vector<ExprPtr> parts;
  if (coeff) parts.push_back(std::move(coeff));
  auto push = [&parts](Variable v, std::int64_t e) {
    if (e == 0) return;
    parts.push_back(e == 1 ? build::var(v) : build::power(build::var(v), e));
  };
  push(Variable::a, m.a);
  push(Variable::b, m.b);
  if (parts.empty()) return build::rational(1);
  if (parts.size() == 1) return parts.front();
  return build::product(std::move(parts));
}

ExprPtr monomial_expr(Monomial m) { return scaled_expr(nullptr, m); }

}  // namespace

Identity transformation_identity(int m, std::int64_t zeta_exponent) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 1");
  auto root_expr = [m](std::int64_t e) -> ExprPtr {
    const std::int64_t r = ((e % m) + m) % m;
    if (r == 0) return nullptr;
    return build::root(m, r);
  };
  ExprPtr lhs = build::theta(scaled_expr(root_expr(zeta_exponent), {1, 0}),
                             scaled_expr(root_expr(zeta_exponent), {0, 1}));
  std::vector<ExprPtr> terms;
  for (int k = 0; k < m; ++k) {
    const ClosedForm cf = closed_form(m, k);
    std::vector<ExprPtr> factors;
    if (ExprPtr c = root_expr(zeta_exponent * k * k)) factors.push_back(std::move(c));
    if (!(cf.prefix == Monomial{})) {
      ExprPtr p = monomial_expr(cf.prefix);
      if (const auto* prod = std::get_if<node::Product>(&p->node))
        factors.insert(factors.end(), prod->factors.begin(), prod->factors.end());
      else
        factors.push_back(std::move(p));
    }
    factors.push_back(build::theta(monomial_expr(cf.first), monomial_expr(cf.second)));
    terms.push_back(factors.size() == 1 ? factors.front() : build::product(std::move(factors)));
  }
  ExprPtr rhs = terms.size() == 1 ? terms.front() : build::sum(std::move(terms));
  std::string name = "thm_m" + std::to_string(m);
  if (zeta_exponent != 1) name += "_e" + std::to_string(zeta_exponent);
  return make_identity(std::move(name), std::move(lhs), std::move(rhs),
                       "root-of-unity transformation of f(a,b), m=" + std::to_string(m));
}

const std::vector<Identity>& builtin_catalog() {
  static const std::vector<Identity> catalog = [] {
    const std::string part3 = "Ramanujan's Notebooks, Part III, ";
    const std::string part4 = "Ramanujan's Notebooks, Part IV, ";
    // m = 4 dissection pieces S_0 + S_2 (even) and S_1 + S_3 (odd)
    const std::string even4 = "f(a^10*b^6, a^6*b^10) + a^3*b*f(a^18*b^14, a^-2*b^2)";
    const std::string odd4 = "a*f(a^14*b^10, a^2*b^6) + a^6*b^3*f(a^22*b^18, a^-6*b^-2)";
    std::vector<Identity> out{
        make_identity("entry30_ii", "f(a^3*b, a*b^3) = 1/2*(f(a, b) + f(-a, -b))", part3 + "p. 46, Entry 30(ii)"),
        make_identity("entry30_iii", "a*f(a^5*b^3, a^-1*b) = 1/2*(f(a, b) - f(-a, -b))",
                      part3 + "p. 46, Entry 30(iii)"),
        make_identity("entry25_i", "specq(f(a^3*b, a*b^3)) = specq(1/2*(f(a, b) + f(-a, -b)))",
                      part3 + "p. 40, Entry 25(i)"),
        make_identity("entry25_ii", "specq(a*f(a^5*b^3, a^-1*b)) = specq(1/2*(f(a, b) - f(-a, -b)))",
                      part3 + "p. 40, Entry 25(ii)"),
        make_identity("entry25_i_direct", "f(q^4, q^4) = 1/2*(f(q, q) + f(-q, -q))", part3 + "p. 40, Entry 25(i)"),
        make_identity("entry25_ii_direct", "q*f(q^8, 1) = 1/2*(f(q, q) - f(-q, -q))",
                      part3 + "p. 40, Entry 25(ii)"),
        make_identity("entry7", "f(omega*a, omega*b) = omega*f(a, b) + (1 - omega)*f(a^6*b^3, a^3*b^6)",
                      part4 + "p. 144, Entry 7"),
        make_identity("entry9a", "f(i*a, i*b) = " + even4 + " + i*(" + odd4 + ")",
                      part4 + "p. 146, Entry 9, four-term form"),
        make_identity("entry9b", "f(i*a, i*b) = 1/2*(1 + i)*f(a, b) + 1/2*(1 - i)*f(-a, -b)",
                      part4 + "p. 146, Entry 9, compact form"),
        make_identity("remark_re", "Re(f(i*a, i*b)) = " + even4, part4 + "p. 146, Entry 9, real part"),
        make_identity("remark_re_even", even4 + " = f(a^3*b, a*b^3)",
                      part4 + "p. 146, Entry 9, real part; " + part3 + "p. 46, Entry 30(ii)"),
        make_identity("remark_re_half", "Re(f(i*a, i*b)) = 1/2*(f(a, b) + f(-a, -b))",
                      part4 + "p. 146, Entry 9, real part"),
        make_identity("remark_im", "Im(f(i*a, i*b)) = " + odd4, part4 + "p. 146, Entry 9, imaginary part"),
        make_identity("remark_im_odd", odd4 + " = a*f(a^5*b^3, a^-1*b)",
                      part4 + "p. 146, Entry 9, imaginary part; " + part3 + "p. 46, Entry 30(iii)"),
        make_identity("remark_im_half", "Im(f(i*a, i*b)) = 1/2*(f(a, b) - f(-a, -b))",
                      part4 + "p. 146, Entry 9, imaginary part"),
        make_identity("remark_q_re", "specq(" + even4 + ") = f(q^16, q^16) + q^4*f(q^32, 1)",
                      part4 + "p. 146, Entry 9, real part at a=b=q"),
        make_identity("remark_q_re_half", "specq(Re(f(i*a, i*b))) = 1/2*(f(q, q) + f(-q, -q))",
                      part4 + "p. 146, Entry 9, real part at a=b=q"),
        make_identity("remark_q_im", "specq(" + odd4 + ") = q*f(q^24, q^8) + q^9*f(q^40, q^-8)",
                      part4 + "p. 146, Entry 9, imaginary part at a=b=q"),
        make_identity("remark_q_im_half", "specq(Im(f(i*a, i*b))) = 1/2*(f(q, q) - f(-q, -q))",
                      part4 + "p. 146, Entry 9, imaginary part at a=b=q"),
    };
    for (int m = 2; m <= 8; ++m) out.push_back(transformation_identity(m));
    std::sort(out.begin(), out.end(), [](const Identity& x, const Identity& y) { return x.name < y.name; });
    return out;
  }();
  return catalog;
}

RunSummary summarize(const std::vector<Report>& reports) {
  RunSummary s;
  s.total = reports.size();
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::verified: ++s.verified; break;
      case Status::failed: ++s.failed; break;
      case Status::error: ++s.error; break;
    }
  }
  return s;
}

std::vector<Report> run_catalog(const std::vector<Identity>& ids, std::optional<std::int64_t> n, unsigned jobs,
                                std::optional<int> order_override) {
  auto reports = parallel_map(ids.size(), jobs, [&](std::size_t i) {
    return verify_identity(ids[i], n.value_or(ids[i].default_degree), order_override);
  });
  std::stable_sort(reports.begin(), reports.end(),
                   [](const Report& x, const Report& y) { return x.name < y.name; });
  return reports;
}

}  // namespace thetaq
