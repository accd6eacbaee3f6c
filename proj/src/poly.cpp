#include "nk/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace nk {

static const char* kVarNames[NVARS] = {"q", "s", "t",  "t1", "t2",
                                       "q21", "g", "u", "v",  "z"};

const char* var_name(int v) { return kVarNames[v]; }

int var_index(const std::string& name) {
  for (int i = 0; i < NVARS; ++i)
    if (name == kVarNames[i]) return i;
  return -1;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r{};
  for (int i = 0; i < NVARS; ++i) r[i] = static_cast<int16_t>(a[i] + b[i]);
  return r;
}

int mono_total_degree(const Mono& m) {
  int d = 0;
  for (int i = 0; i < NVARS; ++i) d += m[i];
  return d;
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
  int da = mono_total_degree(a), db = mono_total_degree(b);
  if (da != db) return da < db;
  return a < b;  // lexicographic on the exponent arrays
}

// ---------------------------------------------------------------------------
// cyclotomic polynomials

static std::vector<mpz_class> poly_divide_exact_z(
    std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  // exact division of integer polynomials, den monic
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<mpz_class> quo(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    mpz_class c = num[i];
    quo[i - dd] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (auto& c : num)
    if (c != 0) throw domain_error("inexact polynomial division");
  return quo;
}

const std::vector<mpz_class>& cyclotomic_poly(int N) {
  static std::map<int, std::vector<mpz_class>> cache;
  static std::recursive_mutex mu;  // the Phi_N recursion re-enters
  std::lock_guard<std::recursive_mutex> lk(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  if (N < 1) throw domain_error("cyclotomic order must be >= 1");
  // x^N - 1 divided by product of Phi_d for proper divisors d
  std::vector<mpz_class> num(N + 1, 0);
  num[0] = -1;
  num[N] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    num = poly_divide_exact_z(std::move(num), cyclotomic_poly(d));
  }
  while (num.size() > 1 && num.back() == 0) num.pop_back();
  return cache.emplace(N, std::move(num)).first->second;
}

int coeff_dim(int ring) {
  if (ring == 0) return 1;
  return static_cast<int>(cyclotomic_poly(ring).size()) - 1;
}

Coeff coeff_zero(int ring) { return Coeff(coeff_dim(ring), 0); }

Coeff coeff_int(int ring, long v) {
  Coeff c = coeff_zero(ring);
  c[0] = v;
  return c;
}

static void coeff_reduce(int ring, std::vector<mpz_class>& c) {
  // reduce a raw polynomial in w modulo Phi_ring (monic), in place
  const auto& phi = cyclotomic_poly(ring);
  int d = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
    mpz_class q = c[i];
    if (q == 0) continue;
    for (int j = 0; j <= d; ++j) c[i - d + j] -= q * phi[j];
  }
  c.resize(d);
}

Coeff coeff_w_pow(int ring, long e) {
  if (ring == 0) throw domain_error("w requires a cyclotomic ring");
  long m = ((e % ring) + ring) % ring;
  std::vector<mpz_class> c(m + 1, 0);
  c[m] = 1;
  coeff_reduce(ring, c);
  return c;
}

bool coeff_is_zero(const Coeff& c) {
  return std::all_of(c.begin(), c.end(),
                     [](const mpz_class& x) { return x == 0; });
}

Coeff coeff_add(int ring, const Coeff& a, const Coeff& b) {
  (void)ring;
  Coeff r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Coeff coeff_neg(const Coeff& a) {
  Coeff r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Coeff coeff_mul(int ring, const Coeff& a, const Coeff& b) {
  if (ring == 0) return Coeff{a[0] * b[0]};
  std::vector<mpz_class> raw(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) raw[i + j] += a[i] * b[j];
  }
  coeff_reduce(ring, raw);
  return raw;
}

Coeff coeff_divexact(int ring, const Coeff& a, const Coeff& b) {
  if (coeff_is_zero(b)) throw domain_error("division by zero coefficient");
  if (ring == 0) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a[0].get_mpz_t(),
                b[0].get_mpz_t());
    if (r != 0) throw domain_error("inexact integer division");
    return Coeff{q};
  }
  // invert b over Q[x]/Phi by the extended Euclid algorithm, multiply, and
  // check integrality
  using QP = std::vector<mpq_class>;  // dense, low-to-high
  auto deg = [](const QP& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1;
  };
  const auto& phiz = cyclotomic_poly(ring);
  QP r0(phiz.size());
  for (size_t i = 0; i < phiz.size(); ++i) r0[i] = mpq_class(phiz[i]);
  QP r1(b.size());
  for (size_t i = 0; i < b.size(); ++i) r1[i] = mpq_class(b[i]);
  QP s0(1, 0), s1(1, 1);  // coefficients of b in the Bezout identity
  while (deg(r1) >= 0) {
    int d0 = deg(r0), d1 = deg(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    mpq_class f = r0[d0] / r1[d1];
    int shift = d0 - d1;
    for (int j = 0; j <= d1; ++j) r0[j + shift] -= f * r1[j];
    if (static_cast<int>(s0.size()) < static_cast<int>(s1.size()) + shift)
      s0.resize(s1.size() + shift, 0);
    for (size_t j = 0; j < s1.size(); ++j) s0[j + shift] -= f * s1[j];
    if (deg(r0) < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
    }
  }
  int dr = deg(r0);
  if (dr != 0) throw domain_error("coefficient not invertible over Q(w)");
  // s0 / r0[0] is b^{-1} mod Phi
  QP inv(coeff_dim(ring), 0);
  for (size_t i = 0; i < s0.size() && i < inv.size(); ++i)
    inv[i] = s0[i] / r0[0];
  if (s0.size() > inv.size())
    for (size_t i = inv.size(); i < s0.size(); ++i)
      if (s0[i] != 0) throw domain_error("inverse reduction failure");
  // a * inv mod Phi over Q
  QP raw(a.size() + inv.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < inv.size(); ++j) raw[i + j] += mpq_class(a[i]) * inv[j];
  int d = coeff_dim(ring);
  for (int i = static_cast<int>(raw.size()) - 1; i >= d; --i) {
    mpq_class qq = raw[i];
    if (qq == 0) continue;
    for (int j = 0; j <= d; ++j) raw[i - d + j] -= qq * mpq_class(phiz[j]);
  }
  Coeff out(d);
  for (int i = 0; i < d; ++i) {
    raw[i].canonicalize();
    if (raw[i].get_den() != 1) throw domain_error("inexact cyclotomic division");
    out[i] = raw[i].get_num();
  }
  return out;
}

std::string coeff_str(int ring, const Coeff& c) {
  if (ring == 0) return c[0].get_str();
  bool scalar = true;
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) scalar = false;
  if (scalar) return c[0].get_str();
  // polynomial in w
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << (c[i] > 0 ? "+" : "");
    if (i == 0)
      os << c[i].get_str();
    else {
      if (c[i] == -1)
        os << "-";
      else if (c[i] != 1)
        os << c[i].get_str() << "*";
      os << "w";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) return "0";
  std::string s = os.str();
  return c.size() > 1 ? "(" + s + ")" : s;
}

// ---------------------------------------------------------------------------
// polynomials

static void check_ring(const Poly& a, const Poly& b) {
  if (a.ring != b.ring)
    throw ring_mismatch_error("coefficient rings differ: " +
                              std::to_string(a.ring) + " vs " +
                              std::to_string(b.ring));
}

Poly poly_zero(int ring) { return Poly{ring, {}}; }

Poly poly_int(long v, int ring) {
  Poly p{ring, {}};
  if (v != 0) p.terms[mono_one()] = coeff_int(ring, v);
  return p;
}

Poly poly_coeff(int ring, const Coeff& c) {
  Poly p{ring, {}};
  if (!coeff_is_zero(c)) p.terms[mono_one()] = c;
  return p;
}

Poly poly_var(int var, int exp, int ring) {
  Poly p{ring, {}};
  Mono m{};
  m[var] = static_cast<int16_t>(exp);
  p.terms[m] = coeff_int(ring, 1);
  return p;
}

Poly poly_monomial(const Mono& m, const Coeff& c, int ring) {
  Poly p{ring, {}};
  if (!coeff_is_zero(c)) p.terms[m] = c;
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  check_ring(a, b);
  Poly r = a;
  for (const auto& [m, c] : b.terms) {
    auto it = r.terms.find(m);
    if (it == r.terms.end()) {
      r.terms.emplace(m, c);
    } else {
      it->second = coeff_add(r.ring, it->second, c);
      if (coeff_is_zero(it->second)) r.terms.erase(it);
    }
  }
  return r;
}

Poly poly_neg(const Poly& a) {
  Poly r = a;
  for (auto& [m, c] : r.terms) c = coeff_neg(c);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_mul_term(const Poly& a, const Mono& m, const Coeff& c) {
  Poly r{a.ring, {}};
  if (coeff_is_zero(c)) return r;
  for (const auto& [ma, ca] : a.terms) {
    Coeff p = coeff_mul(a.ring, ca, c);
    if (!coeff_is_zero(p)) r.terms.emplace(mono_mul(ma, m), std::move(p));
  }
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  check_ring(a, b);
  Poly r{a.ring, {}};
  for (const auto& [mb, cb] : b.terms) {
    for (const auto& [ma, ca] : a.terms) {
      Coeff p = coeff_mul(a.ring, ca, cb);
      if (coeff_is_zero(p)) continue;
      Mono m = mono_mul(ma, mb);
      auto it = r.terms.find(m);
      if (it == r.terms.end()) {
        r.terms.emplace(m, std::move(p));
      } else {
        it->second = coeff_add(r.ring, it->second, p);
        if (coeff_is_zero(it->second)) r.terms.erase(it);
      }
    }
  }
  return r;
}

Poly poly_scale(const Poly& a, long c) {
  return poly_mul_term(a, mono_one(), coeff_int(a.ring, c));
}

Poly poly_pow(const Poly& a, unsigned n) {
  Poly r = poly_int(1, a.ring);
  for (unsigned i = 0; i < n; ++i) r = poly_mul(r, a);
  return r;
}

bool poly_is_unit_monomial(const Poly& a) {
  if (a.terms.size() != 1) return false;
  const Coeff& c = a.terms.begin()->second;
  if (a.ring == 0) return c[0] == 1 || c[0] == -1;
  // +- w^j: try to find it
  for (int s = 0; s < 2; ++s)
    for (int j = 0; j < a.ring; ++j) {
      Coeff u = coeff_w_pow(a.ring, j);
      if (s) u = coeff_neg(u);
      if (u == c) return true;
    }
  return false;
}

Poly poly_inv_unit(const Poly& a) {
  if (a.terms.size() != 1)
    throw unit_required_error("inverse of a non-monomial: " + poly_str(a));
  const auto& [m, c] = *a.terms.begin();
  Mono mi{};
  for (int i = 0; i < NVARS; ++i) mi[i] = static_cast<int16_t>(-m[i]);
  Coeff ci;
  if (a.ring == 0) {
    if (c[0] != 1 && c[0] != -1)
      throw unit_required_error("coefficient is not a unit: " + poly_str(a));
    ci = c;
  } else {
    ci = coeff_divexact(a.ring, coeff_int(a.ring, 1), c);
  }
  return poly_monomial(mi, ci, a.ring);
}

Poly poly_substitute(const Poly& p, const std::map<int, Poly>& bindings) {
  // precompute images and, where needed, their inverses
  std::map<int, std::pair<Poly, std::optional<Poly>>> img;
  for (const auto& [v, q] : bindings) {
    if (q.ring != p.ring)
      throw ring_mismatch_error("substitution image in a different ring");
    img.emplace(v, std::make_pair(q, std::nullopt));
  }
  Poly out = poly_zero(p.ring);
  for (const auto& [m, c] : p.terms) {
    Mono rest = m;
    Poly factor = poly_int(1, p.ring);
    for (auto& [v, iq] : img) {
      int e = m[v];
      if (e == 0) continue;
      rest[v] = 0;
      if (e > 0) {
        factor = poly_mul(factor, poly_pow(iq.first, e));
      } else {
        if (!iq.second) iq.second = poly_inv_unit(iq.first);
        factor = poly_mul(factor, poly_pow(*iq.second, -e));
      }
    }
    out = poly_add(out, poly_mul_term(factor, rest, c));
  }
  return out;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  check_ring(a, b);
  if (b.is_zero()) throw domain_error("division by zero polynomial");
  Poly rem = a;
  Poly quo = poly_zero(a.ring);
  const auto& [lbm, lbc] = *b.terms.rbegin();  // leading term of b
  Mono lbi{};
  for (int i = 0; i < NVARS; ++i) lbi[i] = static_cast<int16_t>(-lbm[i]);
  while (!rem.is_zero()) {
    const auto& [lm, lc] = *rem.terms.rbegin();
    Coeff qc = coeff_divexact(a.ring, lc, lbc);  // throws when inexact
    Mono qm = mono_mul(lm, lbi);
    quo.terms[qm] = qc;
    rem = poly_sub(rem, poly_mul_term(b, qm, qc));
  }
  return quo;
}

Poly poly_to_ring(const Poly& p, int ring) {
  if (p.ring == ring) return p;
  if (p.ring != 0)
    throw ring_mismatch_error("can only embed Z into a cyclotomic ring");
  Poly r{ring, {}};
  for (const auto& [m, c] : p.terms) {
    Coeff cc = coeff_zero(ring);
    cc[0] = c[0];
    r.terms.emplace(m, std::move(cc));
  }
  return r;
}

int min_exponent(const Poly& p, int var) {
  if (p.is_zero()) throw domain_error("degree of the zero polynomial");
  int mn = INT32_MAX;
  for (const auto& [m, c] : p.terms) mn = std::min(mn, static_cast<int>(m[var]));
  return mn;
}

int max_exponent(const Poly& p, int var) {
  if (p.is_zero()) throw domain_error("degree of the zero polynomial");
  int mx = INT32_MIN;
  for (const auto& [m, c] : p.terms) mx = std::max(mx, static_cast<int>(m[var]));
  return mx;
}

int degree_span(const Poly& p, int var) {
  return max_exponent(p, var) - min_exponent(p, var);
}

bool poly_uses_var(const Poly& p, int var) {
  for (const auto& [m, c] : p.terms)
    if (m[var] != 0) return true;
  return false;
}

// ---------------------------------------------------------------------------
// q-combinatorics

Poly q_pochhammer(const Poly& x, const Poly& q, int n) {
  check_ring(x, q);
  Poly r = poly_int(1, x.ring);
  Poly qi = poly_int(1, x.ring);
  for (int i = 0; i < n; ++i) {
    r = poly_mul(r, poly_sub(poly_int(1, x.ring), poly_mul(x, qi)));
    qi = poly_mul(qi, q);
  }
  return r;
}

Poly q_binomial(int k, int m, int var, int ring) {
  if (m < 0 || m > k) return poly_zero(ring);
  // Pascal recurrence [k m] = [k-1 m-1] + q^m [k-1 m]
  std::vector<Poly> row(1, poly_int(1, ring));  // row for k' = 0
  for (int kk = 1; kk <= k; ++kk) {
    std::vector<Poly> nxt(kk + 1, poly_zero(ring));
    for (int mm = 0; mm <= kk; ++mm) {
      Poly s = poly_zero(ring);
      if (mm > 0) s = row[mm - 1];
      if (mm < kk) {
        Poly qm = poly_var(var, mm, ring);
        s = poly_add(s, poly_mul(qm, row[mm]));
      }
      nxt[mm] = std::move(s);
    }
    row = std::move(nxt);
  }
  return row[m];
}

Poly q_multinomial(int k, int m, int n, int var, int ring) {
  if (m < 0 || n < 0 || m + n > k) return poly_zero(ring);
  return poly_mul(q_binomial(k, m + n, var, ring),
                  q_binomial(m + n, n, var, ring));
}

// ---------------------------------------------------------------------------
// canonical text form
//   term order: graded-lex ascending; coefficient then '*' then variables
//   "t^-1", "2*t1^2*t2", "(1+w)*t"

std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    std::string cs = coeff_str(p.ring, c);
    bool neg = cs.size() > 0 && cs[0] == '-' && cs.find('w') == std::string::npos;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg)
      os << "-";
    if (neg && cs.find('w') == std::string::npos) cs = cs.substr(1);
    bool hasvars = false;
    std::ostringstream vs;
    for (int i = 0; i < NVARS; ++i) {
      if (m[i] == 0) continue;
      if (hasvars) vs << "*";
      vs << kVarNames[i];
      if (m[i] != 1) vs << "^" << m[i];
      hasvars = true;
    }
    if (!hasvars) {
      os << cs;
    } else if (cs == "1") {
      os << vs.str();
    } else {
      os << cs << "*" << vs.str();
    }
    first = false;
  }
  return os.str();
}

// parser for the canonical text form (and simple handwritten variants)
namespace {
struct Parser {
  const std::string& s;
  size_t i = 0;
  int ring;
  explicit Parser(const std::string& str, int r) : s(str), ring(r) {}
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  long integer() {
    ws();
    bool neg = eat('-');
    if (!neg) eat('+');
    ws();
    long v = 0;
    bool any = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
      any = true;
    }
    if (!any) throw domain_error("expected integer at position " +
                                 std::to_string(i) + " in: " + s);
    return neg ? -v : v;
  }
  std::string ident() {
    ws();
    std::string r;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      r += s[i];
      ++i;
    }
    return r;
  }
  // factor := integer | 'w'['^'int] | var['^'int] | '(' sum ')'
  Poly factor() {
    ws();
    if (i < s.size() && s[i] == '(') {
      ++i;
      Poly r = sum();
      if (!eat(')')) throw domain_error("missing ')' in: " + s);
      return pow_suffix(r);
    }
    if (i < s.size() &&
        (std::isdigit(static_cast<unsigned char>(s[i])))) {
      return poly_int(integer(), ring);
    }
    std::string id = ident();
    if (id.empty()) throw domain_error("parse error at position " +
                                       std::to_string(i) + " in: " + s);
    if (id == "w") {
      long e = 1;
      if (eat('^')) e = integer();
      return poly_coeff(ring, coeff_w_pow(ring, e));
    }
    int v = var_index(id);
    if (v < 0) throw domain_error("unknown variable '" + id + "'");
    long e = 1;
    if (eat('^')) e = integer();
    return poly_var(v, static_cast<int>(e), ring);
  }
  Poly pow_suffix(Poly base) {
    if (eat('^')) {
      long e = integer();
      if (e < 0) return poly_pow(poly_inv_unit(base), static_cast<unsigned>(-e));
      return poly_pow(base, static_cast<unsigned>(e));
    }
    return base;
  }
  Poly product() {
    Poly r = factor();
    for (;;) {
      ws();
      if (eat('*')) {
        r = poly_mul(r, factor());
        continue;
      }
      // implicit product when a variable follows directly
      if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) ||
                           s[i] == '(')) {
        r = poly_mul(r, factor());
        continue;
      }
      return r;
    }
  }
  Poly sum() {
    ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly r = product();
    if (neg) r = poly_neg(r);
    for (;;) {
      ws();
      if (i >= s.size() || s[i] == ')') return r;
      if (eat('+')) {
        r = poly_add(r, product());
      } else if (eat('-')) {
        r = poly_sub(r, product());
      } else {
        throw domain_error("parse error at position " + std::to_string(i) +
                           " in: " + s);
      }
    }
  }
};
}  // namespace

Poly poly_parse(const std::string& text, int ring) {
  Parser p(text, ring);
  p.ws();
  if (p.i >= text.size()) return poly_zero(ring);
  Poly r = p.sum();
  p.ws();
  if (p.i != text.size()) throw domain_error("trailing input in: " + text);
  return r;
}

std::string poly_json(const Poly& p) {
  nlohmann::json j;
  j["ring"] = p.ring == 0 ? "Z" : ("Z[w," + std::to_string(p.ring) + "]");
  j["terms"] = nlohmann::json::array();
  for (const auto& [m, c] : p.terms) {
    nlohmann::json t;
    if (p.ring == 0) {
      t["coeff"] = c[0].get_str();
    } else {
      nlohmann::json w = nlohmann::json::array();
      for (const auto& x : c) w.push_back(x.get_str());
      t["coeff"] = w;
    }
    nlohmann::json e = nlohmann::json::object();
    for (int i = 0; i < NVARS; ++i)
      if (m[i] != 0) e[kVarNames[i]] = m[i];
    t["exps"] = e;
    j["terms"].push_back(t);
  }
  return j.dump();
}

Poly poly_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  std::string rs = j.at("ring").get<std::string>();
  int ring = 0;
  if (rs != "Z") {
    if (rs.rfind("Z[w,", 0) != 0 || rs.back() != ']')
      throw domain_error("bad ring tag: " + rs);
    ring = std::stoi(rs.substr(4, rs.size() - 5));
  }
  Poly p = poly_zero(ring);
  for (const auto& t : j.at("terms")) {
    Coeff c = coeff_zero(ring);
    if (ring == 0) {
      c[0] = mpz_class(t.at("coeff").get<std::string>());
    } else {
      const auto& arr = t.at("coeff");
      for (size_t i = 0; i < arr.size() && i < c.size(); ++i)
        c[i] = mpz_class(arr[i].get<std::string>());
    }
    Mono m{};
    for (const auto& [k, v] : t.at("exps").items()) {
      int vi = var_index(k);
      if (vi < 0) throw domain_error("unknown variable in JSON: " + k);
      m[vi] = static_cast<int16_t>(v.get<int>());
    }
    p = poly_add(p, poly_monomial(m, c, ring));
  }
  return p;
}

}  // namespace nk
