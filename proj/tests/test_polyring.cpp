#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nk/poly.hpp"

using namespace nk;

static Poly rand_poly(std::mt19937& rng, int ring, int nvars = 3) {
  std::uniform_int_distribution<int> nt(0, 5), e(-3, 3), c(-9, 9),
      v(0, nvars - 1);
  Poly p = poly_zero(ring);
  int n = nt(rng);
  for (int i = 0; i < n; ++i) {
    Mono m{};
    m[VQ] = static_cast<int16_t>(e(rng));
    m[VT] = static_cast<int16_t>(e(rng));
    Coeff cc = coeff_int(ring, c(rng));
    if (ring > 0 && c(rng) > 3) cc = coeff_add(ring, cc, coeff_w_pow(ring, 1));
    p = poly_add(p, poly_monomial(m, cc, ring));
  }
  return p;
}

TEST_CASE("addition") {
  Poly t = poly_var(VT);
  CHECK(poly_add(poly_add(t, poly_int(1)), poly_int(-1)) == t);

  Poly a = poly_sub(poly_int(1), t);                       // 1 - t
  Poly b = poly_sub(t, poly_mul(t, t));                    // t - t^2
  Poly want = poly_sub(poly_int(1), poly_mul(t, t));       // 1 - t^2
  CHECK(poly_add(a, b) == want);
  // cross-check by evaluation at t = 2
  Poly at2 = poly_substitute(poly_add(a, b), {{VT, poly_int(2)}});
  CHECK(at2 == poly_int(-3));

  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    Poly p = rand_poly(rng, 0);
    CHECK(poly_add(p, poly_zero(0)) == p);
  }
}

TEST_CASE("multiplication") {
  Poly t = poly_var(VT);
  Poly p = poly_add(poly_sub(t, poly_int(1)), poly_var(VT, -1));
  Poly want = poly_add(poly_sub(poly_mul(t, t), t), poly_int(1));
  CHECK(poly_mul(p, t) == want);

  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    Poly r = rand_poly(rng, 0);
    CHECK(poly_mul(r, poly_int(1)) == r);
  }

  // in the order-2 cyclotomic ring, w*w = 1 since w = -1
  Poly w = poly_coeff(2, coeff_w_pow(2, 1));
  CHECK(poly_mul(w, w) == poly_int(1, 2));
}

TEST_CASE("ring axioms on random inputs") {
  for (int ring : {0, 3, 4}) {
    std::mt19937 rng(100 + ring);
    for (int i = 0; i < 25; ++i) {
      Poly a = rand_poly(rng, ring), b = rand_poly(rng, ring),
           c = rand_poly(rng, ring);
      CHECK(poly_add(a, b) == poly_add(b, a));
      CHECK(poly_mul(a, b) == poly_mul(b, a));
      CHECK(poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c)));
      CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
      CHECK(poly_mul(a, poly_add(b, c)) ==
            poly_add(poly_mul(a, b), poly_mul(a, c)));
    }
  }
}

TEST_CASE("cyclotomic order 2 agrees with Z under w -> -1") {
  std::mt19937 rng(31);
  for (int i = 0; i < 30; ++i) {
    Poly a = rand_poly(rng, 2), b = rand_poly(rng, 2);
    auto down = [](const Poly& p) {  // w -> -1, landing in Z
      Poly r = poly_zero(0);
      for (const auto& [m, c] : p.terms)
        r = poly_add(r, poly_monomial(m, Coeff{c[0] - c[1]}, 0));
      return r;
    };
    CHECK(down(poly_mul(a, b)) == poly_mul(down(a), down(b)));
    CHECK(down(poly_add(a, b)) == poly_add(down(a), down(b)));
  }
}

TEST_CASE("substitution") {
  Poly t = poly_var(VT);
  Poly p = poly_add(poly_sub(t, poly_int(1)), poly_var(VT, -1));
  CHECK(poly_substitute(p, {{VT, poly_int(1)}}) == poly_int(1));

  Poly trunc = poly_parse("1 + 4*u + u^2 + v");
  CHECK(poly_substitute(trunc, {{VU, poly_zero(0)}}) == poly_parse("1 + v"));

  // a zero image for a negatively-exponentiated variable must fail
  CHECK_THROWS_AS(poly_substitute(p, {{VT, poly_zero(0)}}),
                  unit_required_error);
  CHECK_THROWS_AS(poly_substitute(p, {{VT, poly_parse("1+t")}}),
                  unit_required_error);

  // partial substitution: (t1,t2) -> (-t, -t^-1) stays exact
  Poly mix = poly_mul(poly_var(VT1), poly_var(VT2, -1));
  Poly img = poly_substitute(mix, {{VT1, poly_neg(poly_var(VT))},
                                   {VT2, poly_neg(poly_var(VT, -1))}});
  CHECK(img == poly_mul(t, t));
}

TEST_CASE("q-Pochhammer") {
  Poly t = poly_var(VT), q = poly_var(VQ);
  CHECK(q_pochhammer(t, q, 0) == poly_int(1));
  CHECK(q_pochhammer(t, q, 1) == poly_sub(poly_int(1), t));
  Poly want = poly_mul(poly_sub(poly_int(1), t),
                       poly_sub(poly_int(1), poly_mul(t, q)));
  CHECK(q_pochhammer(t, q, 2) == want);
}

TEST_CASE("q-binomials") {
  CHECK(q_binomial(5, 0) == poly_int(1));
  CHECK(q_binomial(2, 1) == poly_parse("1 + q"));
  CHECK(q_binomial(2, 3).is_zero());

  // alternating-sum identity: sum_m [k m] (-1)^m q^{m(m-1)/2} = [k == 0]
  for (int k = 0; k <= 8; ++k) {
    Poly s = poly_zero(0);
    for (int m = 0; m <= k; ++m) {
      Poly term = poly_mul(q_binomial(k, m), poly_var(VQ, m * (m - 1) / 2));
      if (m % 2) term = poly_neg(term);
      s = poly_add(s, term);
    }
    CHECK(s == (k == 0 ? poly_int(1) : poly_zero(0)));
  }

  // cross-check against the Pochhammer quotient definition by evaluation
  // at q = 2: [5 2]_2 = (2;2)_5 / ((2;2)_3 (2;2)_2)
  auto poch_int = [](long qv, int n) {
    long r = 1, p = qv;
    for (int i = 0; i < n; ++i) {
      r *= 1 - p;
      p *= qv;
    }
    return r;
  };
  Poly v = poly_substitute(q_binomial(5, 2), {{VQ, poly_int(2)}});
  CHECK(v == poly_int(poch_int(2, 5) / (poch_int(2, 3) * poch_int(2, 2))));
}

TEST_CASE("q-multinomials") {
  CHECK(q_multinomial(4, 0, 0) == poly_int(1));
  CHECK(q_multinomial(2, 1, 1) == poly_parse("1 + q"));
  CHECK(q_multinomial(2, 1, 2).is_zero());
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(0, 6);
  for (int i = 0; i < 30; ++i) {
    int k = d(rng), m = d(rng) % (k + 1), n = d(rng) % (k - m + 1);
    CHECK(q_multinomial(k, m, n) ==
          poly_mul(q_binomial(k, m + n), q_binomial(m + n, n)));
  }
}

TEST_CASE("degree span") {
  Poly p = poly_parse("t - 1 + t^-1");
  CHECK(degree_span(p, VT) == 2);
  CHECK(degree_span(poly_int(5), VT) == 0);
  CHECK_THROWS_AS(degree_span(poly_zero(0), VT), domain_error);
}

TEST_CASE("serialize / parse round-trip") {
  std::mt19937 rng(77);
  for (int ring : {0, 3}) {
    for (int i = 0; i < 30; ++i) {
      Poly p = rand_poly(rng, ring);
      std::string s1 = poly_str(p);
      Poly p2 = poly_parse(s1, ring);
      CHECK(p2 == p);
      CHECK(poly_str(p2) == s1);
      Poly p3 = poly_from_json(poly_json(p));
      CHECK(p3 == p);
    }
  }
}

TEST_CASE("unit inverses and exact division") {
  Poly m = poly_parse("-s^2*t^-1");
  CHECK(poly_is_unit_monomial(m));
  CHECK(poly_mul(m, poly_inv_unit(m)) == poly_int(1));
  CHECK_FALSE(poly_is_unit_monomial(poly_parse("2*t")));
  CHECK_THROWS_AS(poly_inv_unit(poly_parse("1+t")), unit_required_error);

  std::mt19937 rng(13);
  for (int ring : {0, 3}) {
    for (int i = 0; i < 20; ++i) {
      Poly a = rand_poly(rng, ring), b = rand_poly(rng, ring);
      if (b.is_zero()) continue;
      CHECK(poly_divexact(poly_mul(a, b), b) == a);
    }
  }
}

TEST_CASE("ring mismatch is rejected") {
  CHECK_THROWS_AS(poly_add(poly_int(1, 0), poly_int(1, 3)),
                  ring_mismatch_error);
  CHECK_THROWS_AS(poly_mul(poly_int(1, 2), poly_int(1, 3)),
                  ring_mismatch_error);
}

TEST_CASE("cyclotomic basics") {
  // Phi_1 = x - 1, Phi_2 = x + 1: both rings are Z
  CHECK(coeff_dim(1) == 1);
  CHECK(coeff_dim(2) == 1);
  CHECK(coeff_dim(3) == 2);
  CHECK(coeff_dim(4) == 2);
  // w^N = 1
  for (int n : {2, 3, 4, 5, 6}) {
    Poly w = poly_coeff(n, coeff_w_pow(n, 1));
    CHECK(poly_pow(w, n) == poly_int(1, n));
    // w is a unit and its inverse is w^{N-1}
    CHECK(poly_inv_unit(w) == poly_coeff(n, coeff_w_pow(n, n - 1)));
    // w satisfies Phi_n: sum over the cyclotomic coefficients vanishes
    const auto& phi = cyclotomic_poly(n);
    Poly acc = poly_zero(n);
    for (size_t i = 0; i < phi.size(); ++i) {
      Coeff c = coeff_w_pow(n, static_cast<long>(i));
      for (auto& x : c) x *= phi[i];
      acc = poly_add(acc, poly_coeff(n, c));
    }
    CHECK(acc.is_zero());
  }
}
