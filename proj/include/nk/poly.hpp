#pragma once
// Exact multivariate Laurent polynomials over Z and over cyclotomic integers
// Z[w]/Phi_N, plus q-combinatorics.
//
// Variables live in a fixed universe; exponents may be negative. q^{1/2} is
// the independent variable s with the global convention q = s^2. Coefficients
// are vectors of mpz over a ring tag: 0 = Z, N >= 1 = Z[w]/Phi_N with w a
// primitive N-th root of unity, reduced mod the cyclotomic polynomial so
// equality is representation equality.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nk {

struct ring_mismatch_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct unit_required_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// variable universe

inline constexpr int NVARS = 10;
enum Var : int { VQ, VS, VT, VT1, VT2, VQ21, VG, VU, VV, VZ };
const char* var_name(int v);
int var_index(const std::string& name);  // -1 if unknown

using Mono = std::array<int16_t, NVARS>;

inline Mono mono_one() { return Mono{}; }
Mono mono_mul(const Mono& a, const Mono& b);
int mono_total_degree(const Mono& m);

// graded-lexicographic term order (total degree, then lex by variable index)
struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

// ---------------------------------------------------------------------------
// coefficients: Z (ring tag 0) or Z[w]/Phi_N (ring tag N)

using Coeff = std::vector<mpz_class>;  // size = coeff_dim(ring)

// cyclotomic polynomial Phi_N as integer coefficient vector, monic,
// phi[i] = coefficient of x^i; cached per N
const std::vector<mpz_class>& cyclotomic_poly(int N);
int coeff_dim(int ring);  // 1 for Z, deg Phi_N otherwise

Coeff coeff_zero(int ring);
Coeff coeff_int(int ring, long v);
Coeff coeff_w_pow(int ring, long e);  // w^e reduced (ring > 0), e may be < 0
bool coeff_is_zero(const Coeff& c);
Coeff coeff_add(int ring, const Coeff& a, const Coeff& b);
Coeff coeff_neg(const Coeff& a);
Coeff coeff_mul(int ring, const Coeff& a, const Coeff& b);
// exact division; throws domain_error when not divisible
Coeff coeff_divexact(int ring, const Coeff& a, const Coeff& b);
std::string coeff_str(int ring, const Coeff& c);

// ---------------------------------------------------------------------------
// polynomials

struct Poly {
  int ring = 0;
  std::map<Mono, Coeff, MonoLess> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Poly& o) const {
    return ring == o.ring && terms == o.terms;
  }
};

Poly poly_zero(int ring = 0);
Poly poly_int(long v, int ring = 0);
Poly poly_coeff(int ring, const Coeff& c);
Poly poly_var(int var, int exp = 1, int ring = 0);
Poly poly_monomial(const Mono& m, const Coeff& c, int ring = 0);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_mul_term(const Poly& a, const Mono& m, const Coeff& c);
Poly poly_scale(const Poly& a, long c);
Poly poly_pow(const Poly& a, unsigned n);

// single-term unit +-w^j * monomial -> inverse; throws unit_required_error
Poly poly_inv_unit(const Poly& a);
bool poly_is_unit_monomial(const Poly& a);

// substitute some variables by polynomials (image must be a unit when the
// variable occurs with a negative exponent); unlisted variables unchanged
Poly poly_substitute(const Poly& p, const std::map<int, Poly>& bindings);

// exact division in the Laurent ring; throws domain_error if not exact
Poly poly_divexact(const Poly& a, const Poly& b);

// convert a ring-0 polynomial into a cyclotomic ring (or between equal rings)
Poly poly_to_ring(const Poly& p, int ring);

int degree_span(const Poly& p, int var);  // throws domain_error on zero poly
int min_exponent(const Poly& p, int var);
int max_exponent(const Poly& p, int var);
bool poly_uses_var(const Poly& p, int var);

// q-combinatorics (in the given variable, default q)
Poly q_pochhammer(const Poly& x, const Poly& q, int n);
Poly q_binomial(int k, int m, int var = VQ, int ring = 0);
Poly q_multinomial(int k, int m, int n, int var = VQ, int ring = 0);

// canonical text and JSON forms
std::string poly_str(const Poly& p);
Poly poly_parse(const std::string& text, int ring = 0);
std::string poly_json(const Poly& p);
Poly poly_from_json(const std::string& json_text);

}  // namespace nk
