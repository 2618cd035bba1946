#include <doctest.h>

#include <nlohmann/json.hpp>
#include <set>

#include "thetaq/catalog.hpp"
#include "thetaq/dissect.hpp"
#include "thetaq/error.hpp"

using namespace thetaq;

namespace {

const Identity& entry(std::string_view name) {
  for (const auto& id : builtin_catalog())
    if (id.name == name) return id;
  FAIL("missing catalog entry " << name);
  throw std::logic_error("unreachable");
}

ErrorKind eval_error(std::string_view text, std::int64_t n = 10, int order = 0) {
  const auto e = parse_expr(text);
  try {
    (void)evaluate(*e, n, order ? order : required_root_order(*e));
  } catch (const Error& err) {
    return err.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::InvalidArgument;
}

LaurentSeries eval(std::string_view text, std::int64_t n, int order = 0) {
  const auto e = parse_expr(text);
  return evaluate(*e, n, order ? order : required_root_order(*e));
}

bool same_except_time(const Report& x, const Report& y) {
  return x.name == y.name && x.reference == y.reference && x.degree == y.degree && x.order == y.order &&
         x.status == y.status && x.lhs_terms == y.lhs_terms && x.rhs_terms == y.rhs_terms && x.error == y.error &&
         x.lhs_series == y.lhs_series && x.rhs_series == y.rhs_series &&
         x.first_mismatch.has_value() == y.first_mismatch.has_value() &&
         (!x.first_mismatch || (x.first_mismatch->monomial == y.first_mismatch->monomial &&
                                x.first_mismatch->lhs == y.first_mismatch->lhs &&
                                x.first_mismatch->rhs == y.first_mismatch->rhs));
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("evaluate") {
    const auto f = eval("f(a,b)", 9, 1);
    CHECK(f.size() == 7);
    CHECK(f.validity() == 9);
    CHECK(f == theta_expand({ScaledMonomial(Monomial{1, 0}), ScaledMonomial(Monomial{0, 1})}, 9));

    CHECK(series_equal_through(eval("omega*f(a,b) + (1-omega)*f(a^6*b^3, a^3*b^6)", 9, 3),
                               eval("f(omega*a, omega*b)", 9, 3), 9));
    CHECK(eval_error("f(a+b, b)") == ErrorKind::NonMonomialArgument);
    CHECK(eval_error("f(a, a^-1)") == ErrorKind::NonConvergent);
    CHECK(eval_error("f(omega*a, b)", 10, 4) == ErrorKind::IncompatibleOrders);
    CHECK(eval_error("Re(a)", 10, 3) == ErrorKind::IncompatibleOrders);
    CHECK(eval_error("q + a") == ErrorKind::MixedVariables);
    CHECK(eval_error("f(q, b)") == ErrorKind::MixedVariables);
    CHECK(eval_error("(1 + a)^-1") == ErrorKind::NotInvertible);
    CHECK(eval("specq(a*b) + q", 5).to_string() == "a + a^2");

    // negative-degree factors are compensated by deeper internal expansion
    const auto deep = eval("a^-20*f(a, b)", 10);
    CHECK(deep.validity() == 10);
    const auto wide = theta_expand({ScaledMonomial(Monomial{1, 0}), ScaledMonomial(Monomial{0, 1})}, 30);
    CHECK(deep == series_scale(wide, ScaledMonomial(Monomial{-20, 0})));
    // inverse of a scaled monomial
    CHECK(eval("(2*i*a)^-1", 3).to_string() == "-1/2*i*a^-1");
    CHECK(eval("zeta(6,1)^6", 0).to_string() == "1");
  }

  TEST_CASE("required root order") {
    CHECK(required_root_order(*parse_expr("f(a,b)")) == 1);
    CHECK(required_root_order(*parse_expr("omega*i")) == 12);
    CHECK(required_root_order(*parse_expr("Re(omega)")) == 12);
    CHECK(required_root_order(*parse_expr("zeta(10,3) + zeta(4,2)")) == 20);
    for (const auto& id : builtin_catalog()) {
      CAPTURE(id.name);
      CHECK(id.required_root_order ==
            lcm_order(required_root_order(*id.lhs), required_root_order(*id.rhs)));
    }
    CHECK(entry("entry7").required_root_order == 3);
    CHECK(entry("entry9b").required_root_order == 4);
    CHECK(entry("thm_m8").required_root_order == 8);
  }

  TEST_CASE("catalog contents") {
    const auto& cat = builtin_catalog();
    CHECK(cat.size() >= 17);
    std::set<std::string> names;
    for (const auto& id : cat) {
      names.insert(id.name);
      CHECK(!id.reference.empty());
      CHECK(id.default_degree >= 40);
    }
    CHECK(names.size() == cat.size());
    for (const char* want : {"entry30_ii", "entry30_iii", "entry25_i", "entry25_ii", "entry7", "entry9a", "entry9b",
                             "remark_re", "remark_im", "remark_q_re", "remark_q_im", "thm_m2", "thm_m3", "thm_m4",
                             "thm_m5", "thm_m6", "thm_m7", "thm_m8"})
      CHECK(names.count(want) == 1);
    CHECK(std::is_sorted(cat.begin(), cat.end(), [](const auto& x, const auto& y) { return x.name < y.name; }));
  }

  TEST_CASE("every entry verifies at several degrees") {
    for (const auto& id : builtin_catalog()) {
      for (std::int64_t n : {10, 25, 40, 60}) {
        CAPTURE(id.name);
        CAPTURE(n);
        const Report r = verify_identity(id, n);
        CHECK(r.status == Status::verified);
        CHECK(!r.first_mismatch);
        CHECK(r.error.empty());
        CHECK(r.degree == n);
      }
    }
  }

  TEST_CASE("known examples") {
    CHECK(verify_identity(entry("entry7"), 40).status == Status::verified);
    CHECK(verify_identity(entry("entry9b"), 40).status == Status::verified);
    const Report r = verify_identity(entry("entry9b"), 20, 12);
    CHECK(r.status == Status::verified);
    CHECK(r.order == 12);
    const Report bad = verify_identity(entry("entry9b"), 20, 6);
    CHECK(bad.status == Status::error);
    CHECK(!bad.error.empty());
  }

  TEST_CASE("corrupted entry7 fails") {
    const auto id = make_identity("entry7_corrupt",
                                  "f(omega*a, omega*b) = omega*f(a, b) + (1 + omega)*f(a^6*b^3, a^3*b^6)", "test");
    const Report r = verify_identity(id, 40);
    CHECK(r.status == Status::failed);
    REQUIRE(r.first_mismatch);
    // lhs constant term is 1; rhs gives omega + (1 + omega)
    CHECK(r.first_mismatch->monomial == "1");
    CHECK(r.first_mismatch->lhs == "1");
    CHECK(r.first_mismatch->rhs == "1 + 2*omega");
  }

  TEST_CASE("printed forms that do not hold") {
    // arguments a^14 b^18 and a^18 b^22 in place of a^-2 b^2 and a^-6 b^-2
    const auto literal = make_identity(
        "entry9a_literal",
        "f(i*a, i*b) = f(a^10*b^6, a^6*b^10) + a^3*b*f(a^18*b^14, a^14*b^18) + "
        "i*(a*f(a^14*b^10, a^10*b^14) + a^6*b^3*f(a^22*b^18, a^18*b^22))",
        "test");
    const Report r = verify_identity(literal, 60);
    CHECK(r.status == Status::failed);
    REQUIRE(r.first_mismatch);
    CHECK(r.first_mismatch->monomial == "b");

    const auto q_re = make_identity("q_re_literal", "specq(f(a^3*b, a*b^3)) = f(q^16, q^16) + q^4*f(q^32, q^32)",
                                    "test");
    CHECK(verify_identity(q_re, 60).status == Status::failed);
    const auto q_im = make_identity("q_im_literal",
                                    "specq(a*f(a^5*b^3, a^-1*b)) = q*f(q^24, q^24) + q^10*f(q^40, q^40)", "test");
    CHECK(verify_identity(q_im, 60).status == Status::failed);
  }

  TEST_CASE("the two forms of entry 9 agree") {
    const auto& a = entry("entry9a");
    const auto& b = entry("entry9b");
    for (std::int64_t n : {10, 40, 60}) {
      const auto ra = evaluate(*a.rhs, n, 4);
      const auto rb = evaluate(*b.rhs, n, 4);
      CHECK(ra == rb);
      CHECK(ra.to_string() == rb.to_string());
    }
  }

  TEST_CASE("generated transformation identities") {
    for (int m = 1; m <= 8; ++m)
      for (std::int64_t e : {0, 1, 3}) {
        CAPTURE(m);
        CAPTURE(e);
        const Identity id = transformation_identity(m, e);
        CHECK(id.required_root_order <= m);
        const auto rhs = evaluate(*id.rhs, 30, m);
        const auto lhs = evaluate(*id.lhs, 30, m);
        CHECK(series_equal_through(rhs, transform_rhs(m, e, 30), 30));
        CHECK(series_equal_through(lhs, transform_lhs(m, e, 30), 30));
        CHECK(verify_identity(id, 30, m).status == Status::verified);
      }
    CHECK(transformation_identity(3).name == "thm_m3");
    CHECK(transformation_identity(5, 2).name == "thm_m5_e2");
    CHECK(print_expr(*transformation_identity(2).rhs) == "f(a^3*b, a*b^3) + zeta(2,1)*a*f(a^5*b^3, a^-1*b)");
  }

  TEST_CASE("determinism and parallel runs") {
    const auto& cat = builtin_catalog();
    const auto serial = run_catalog(cat, 30, 1);
    const auto parallel = run_catalog(cat, 30, 8);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(same_except_time(serial[i], parallel[i]));
      CHECK(same_except_time(serial[i], verify_identity(cat[i], 30)));
    }
    const RunSummary s = summarize(serial);
    CHECK(s.total == cat.size());
    CHECK(s.verified == cat.size());
    CHECK(s.failed == 0);
    CHECK(s.error == 0);
    CHECK(run_json(serial).find("\"millis\"") != std::string::npos);
  }

  TEST_CASE("report document") {
    const auto id = make_identity("bad", "f(a,b) = f(a,b) + a", "test");
    const Report r = verify_identity(id, 12);
    const auto j = nlohmann::json::parse(report_json(r));
    CHECK(j["name"] == "bad");
    CHECK(j["paper_ref"] == "test");
    CHECK(j["degree"] == 12);
    CHECK(j["status"] == "failed");
    CHECK(j["first_mismatch"]["monomial"] == "a");
    CHECK(j["first_mismatch"]["lhs"] == "1");
    CHECK(j["first_mismatch"]["rhs"] == "2");
    CHECK(j["lhs_terms"].is_number_integer());
    CHECK(j["rhs_terms"].is_number_integer());
    CHECK(j["millis"].is_number());
    CHECK(!j.contains("error"));
    CHECK(!j.contains("lhs_series"));
    CHECK(nlohmann::json::parse(report_json(r, true)).contains("lhs_series"));

    const auto good = verify_identity(entry("entry7"), 10);
    const auto gj = nlohmann::json::parse(report_json(good));
    CHECK(!gj.contains("first_mismatch"));

    const auto run = nlohmann::json::parse(run_json({good, r}));
    CHECK(run["reports"].size() == 2);
    CHECK(run["summary"]["total"] == 2);
    CHECK(run["summary"]["verified"] == 1);
    CHECK(run["summary"]["failed"] == 1);
    CHECK(run["summary"]["error"] == 0);

    const auto broken = verify_identity(make_identity("nc", "f(a, a^-1) = 1", "test"), 5);
    CHECK(broken.status == Status::error);
    CHECK(nlohmann::json::parse(report_json(broken))["error"].is_string());
  }
}
