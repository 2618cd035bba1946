#include <doctest.h>

#include "oracles.hpp"
#include "thetaq/cyclotomic.hpp"
#include "thetaq/error.hpp"

using namespace thetaq;

namespace {

const int kOrders[] = {1, 2, 3, 4, 6, 8, 12};

CycloNum rat(long n, long d = 1, int order = 1) { return CycloNum(Rational(n, d), order); }

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == IntPolynomial(ints({-1, 1})));
    CHECK(cyclotomic_polynomial(4) == IntPolynomial(ints({1, 0, 1})));
    CHECK(cyclotomic_polynomial(1).to_string() == "x - 1");
    CHECK(cyclotomic_polynomial(4).to_string() == "x^2 + 1");

    // Phi_6 by the oracle: (x^6 - 1) / ((x - 1)(x + 1)(x^2 + x + 1))
    const auto divisor = oracle::mul(oracle::mul({-1, 1}, {1, 1}), {1, 1, 1});
    const auto phi6 = oracle::divide_exact({-1, 0, 0, 0, 0, 0, 1}, divisor);
    REQUIRE(phi6 == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(6) == IntPolynomial(ints({1, -1, 1})));
    CHECK(cyclotomic_polynomial(6).to_string() == "x^2 - x + 1");

    for (int m = 1; m <= 30; ++m)
      CHECK(cyclotomic_polynomial(m).degree() == euler_phi(m));
    CHECK_THROWS_AS(cyclotomic_polynomial(0), Error);
  }

  TEST_CASE("zeta powers") {
    CHECK(zeta_power(4, 2) == rat(-1, 1, 4));
    CHECK(zeta_power(3, 3) == rat(1, 1, 3));
    CHECK(zeta_power(3, 3).is_one());
    // x^2 mod x^2 - x + 1 = x - 1
    CHECK(zeta_power(6, 2) == zeta_power(6, 1) - rat(1, 1, 6));
    CHECK(zeta_power(6, 2).to_string() == "-1 + zeta(6,1)");
    CHECK(zeta_power(5, -1) == zeta_power(5, 4));
    CHECK(zeta_power(8, 11) == zeta_power(8, 3));
  }

  TEST_CASE("arithmetic") {
    const CycloNum i = zeta_power(4, 1);
    const CycloNum half_plus = (rat(1, 1, 4) + i).scaled(Rational(1, 2));
    const CycloNum half_minus = (rat(1, 1, 4) - i).scaled(Rational(1, 2));
    CHECK(half_plus + half_minus == rat(1, 1, 4));
    CHECK(half_plus.to_string() == "1/2 + 1/2*i");

    const CycloNum w = zeta_power(3, 1);
    // x^2 mod x^2 + x + 1 = -1 - x
    CHECK(w * w == -rat(1, 1, 3) - w);
    CHECK((w * w).to_string() == "-1 - omega");
    CHECK(i.scaled(Rational(1, 2)).to_string() == "1/2*i");

    CHECK_THROWS_AS(i + w, Error);
    try {
      (void)(i * w);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OrderMismatch);
    }
    CHECK(rat(2, 4).coeffs()[0] == Rational(1, 2));
    CHECK(rat(3, -6).coeffs()[0] == Rational(-1, 2));
  }

  TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(20240611);
    for (int order : kOrders) {
      CAPTURE(order);
      for (int t = 0; t < 100; ++t) {
        const auto x = oracle::random_cyclo(rng, order);
        const auto y = oracle::random_cyclo(rng, order);
        const auto z = oracle::random_cyclo(rng, order);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x - x).is_zero());
        // the complex embedding is a ring homomorphism
        CHECK(std::abs(oracle::embed_complex(x * y) - oracle::embed_complex(x) * oracle::embed_complex(y)) < 1e-9);
      }
    }
  }

  TEST_CASE("Phi_L vanishes at zeta_L") {
    for (int order : kOrders) {
      CAPTURE(order);
      const IntPolynomial phi = cyclotomic_polynomial(order);
      const auto& c = phi.coeffs();
      CycloNum acc(Rational(0), order);
      for (std::size_t j = 0; j < c.size(); ++j)
        acc = acc + zeta_power(order, static_cast<std::int64_t>(j)).scaled(Rational(c[j]));
      CHECK(acc.is_zero());
      // and zeta_L really is e^(2 pi i / L)
      const auto z = oracle::embed_complex(zeta_power(order, 1));
      CHECK(std::abs(z - std::polar(1.0, 2.0 * std::numbers::pi / order)) < 1e-12);
    }
  }

  TEST_CASE("embedding") {
    CHECK(cyclo_embed(zeta_power(2, 1), 6) == rat(-1, 1, 6));
    CHECK(cyclo_embed(zeta_power(2, 1), 6).order() == 6);
    CHECK(cyclo_embed(zeta_power(3, 1), 12) == zeta_power(12, 4));
    CHECK(cyclo_embed(rat(5, 7), 8) == rat(5, 7, 8));
    CHECK_THROWS_AS(cyclo_embed(zeta_power(3, 1), 8), Error);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
      const auto x = oracle::random_cyclo(rng, 3);
      const auto y = oracle::random_cyclo(rng, 3);
      CHECK(cyclo_embed(x * y, 12) == cyclo_embed(x, 12) * cyclo_embed(y, 12));
      CHECK(cyclo_embed(x + y, 12) == cyclo_embed(x, 12) + cyclo_embed(y, 12));
      // injective: distinct inputs stay distinct
      if (!(x == y)) CHECK(!(cyclo_embed(x, 12) == cyclo_embed(y, 12)));
      CHECK(std::abs(oracle::embed_complex(cyclo_embed(x, 12)) - oracle::embed_complex(x)) < 1e-9);
    }
    for (int from : kOrders)
      for (int to : kOrders) {
        if (to % from != 0) continue;
        for (int t = 0; t < 10; ++t) {
          const auto x = oracle::random_cyclo(rng, from);
          const auto y = oracle::random_cyclo(rng, from);
          CHECK(cyclo_embed(x * y, to) == cyclo_embed(x, to) * cyclo_embed(y, to));
        }
      }
  }

  TEST_CASE("conjugation") {
    const CycloNum i = zeta_power(4, 1);
    CHECK(cyclo_conj(i) == -i);
    CHECK(cyclo_conj((rat(1, 1, 4) + i).scaled(Rational(1, 2))) == (rat(1, 1, 4) - i).scaled(Rational(1, 2)));

    std::mt19937_64 rng(99);
    for (int order : kOrders) {
      for (int t = 0; t < 100; ++t) {
        const auto x = oracle::random_cyclo(rng, order);
        const auto y = oracle::random_cyclo(rng, order);
        CHECK(cyclo_conj(cyclo_conj(x)) == x);
        CHECK(cyclo_conj(x * y) == cyclo_conj(x) * cyclo_conj(y));
        CHECK(cyclo_conj(x + y) == cyclo_conj(x) + cyclo_conj(y));
        CHECK(std::abs(oracle::embed_complex(cyclo_conj(x)) - std::conj(oracle::embed_complex(x))) < 1e-9);
      }
    }
  }

  TEST_CASE("real and imaginary parts") {
    const CycloNum i = zeta_power(4, 1);
    auto [re, im] = real_imag_parts((rat(1, 1, 4) + i).scaled(Rational(1, 2)));
    CHECK(re == rat(1, 2, 4));
    CHECK(im == rat(1, 2, 4));
    auto [re1, im1] = real_imag_parts(rat(1, 1, 4));
    CHECK(re1 == rat(1, 1, 4));
    CHECK(im1.is_zero());
    auto [re2, im2] = real_imag_parts(rat(-3, 7, 8));
    CHECK(re2 == rat(-3, 7, 8));
    CHECK(im2.is_zero());

    CHECK_THROWS_AS(real_imag_parts(zeta_power(3, 1)), Error);
    try {
      (void)real_imag_parts(zeta_power(6, 1));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OrderNotDivisibleBy4);
    }

    std::mt19937_64 rng(4);
    for (int order : {4, 8, 12}) {
      const CycloNum unit_i = zeta_power(order, order / 4);
      for (int t = 0; t < 100; ++t) {
        const auto x = oracle::random_cyclo(rng, order);
        auto [r, m] = real_imag_parts(x);
        CHECK(r + unit_i * m == x);
        CHECK(cyclo_conj(r) == r);
        CHECK(cyclo_conj(m) == m);
        const auto z = oracle::embed_complex(x);
        CHECK(std::abs(oracle::embed_complex(r) - z.real()) < 1e-9);
        CHECK(std::abs(oracle::embed_complex(m) - z.imag()) < 1e-9);
      }
    }
  }

  TEST_CASE("equality across orders") {
    CHECK(zeta_power(4, 1) == zeta_power(8, 2));
    CHECK(!(zeta_power(4, 1) == zeta_power(8, 1)));
    CHECK(rat(1, 2) == rat(1, 2, 12));
  }

  TEST_CASE("powers") {
    const CycloNum w = zeta_power(3, 1);
    CHECK(w.pow(0).is_one());
    CHECK(w.pow(3).is_one());
    CHECK(w.pow(5) == w * w);
    CHECK(rat(2).pow(10) == rat(1024));
  }
}
