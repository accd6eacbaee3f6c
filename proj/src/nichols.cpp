#include "nk/nichols.hpp"

#include <algorithm>

#include <json.hpp>

namespace nk {

void elem_add(Element& e, const Word& w, const Poly& c) {
  if (c.is_zero()) return;
  auto it = e.find(w);
  if (it == e.end()) {
    e.emplace(w, c);
  } else {
    it->second = poly_add(it->second, c);
    if (it->second.is_zero()) e.erase(it);
  }
}

void tensor_add(Tensor2& t, const Word& a, const Word& b, const Poly& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(std::move(key), c);
  } else {
    it->second = poly_add(it->second, c);
    if (it->second.is_zero()) t.erase(it);
  }
}

static void tensor3_add(Tensor3& t, const std::array<Word, 3>& key,
                        const Poly& c) {
  if (c.is_zero()) return;
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, c);
  } else {
    it->second = poly_add(it->second, c);
    if (it->second.is_zero()) t.erase(it);
  }
}

Element elem_sub(const Element& a, const Element& b) {
  Element r = a;
  for (const auto& [w, c] : b) elem_add(r, w, poly_neg(c));
  return r;
}

bool elem_is_zero(const Element& e) { return e.empty(); }

// ---------------------------------------------------------------------------
// construction

static bool word_alternates(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return false;
  return true;
}

static Word alternating_word(int first, int len) {
  Word w;
  for (int i = 0; i < len; ++i)
    w.push_back(static_cast<char>(i % 2 == 0 ? first : 3 - first));
  return w;
}

void NicholsAlgebra::build_basis_and_tables(
    const std::map<int, Poly>& phi_letters) {
  phi_letter_ = phi_letters;
  for (const auto& [l, p] : phi_letters)
    phi_letter_inv_.emplace(l, poly_inv_unit(p));

  if (rank == 1) {
    int top = kind == Kind::Rank1Root ? param - 1 : param;
    for (int k = 0; k <= top; ++k) basis.push_back(Word(k, char(1)));
  } else {
    int maxlen = kind == Kind::Rank2Root ? 2 * param : param;
    basis.push_back(Word());
    for (int len = 1; len <= maxlen; ++len)
      for (int first : {1, 2}) basis.push_back(alternating_word(first, len));
    if (kind == Kind::Rank2Root) {
      // (x2 x1)^N rewrites into (x1 x2)^N and is not a basis word
      Word full = alternating_word(2, 2 * param);
      basis.erase(std::find(basis.begin(), basis.end(), full));
    }
    std::sort(basis.begin(), basis.end(), [](const Word& a, const Word& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
  }
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = int(i);

  // pre-populate the coproduct and antipode memo tables so that all later
  // accesses are read-only (safe to share across threads)
  for (const Word& w : basis) coproduct(w);
  for (const Word& w : basis) antipode(w);
}

NicholsAlgebra NicholsAlgebra::rank1_root(int N) {
  if (N <= 0) throw domain_error("root-of-unity order must be positive");
  NicholsAlgebra H;
  H.kind = Kind::Rank1Root;
  H.param = N;
  H.rank = 1;
  H.ring = N;
  H.build_basis_and_tables({{1, poly_var(VT, 1, N)}});
  return H;
}

NicholsAlgebra NicholsAlgebra::rank1_generic(int maxdeg, const Poly& phi1) {
  NicholsAlgebra H;
  H.kind = Kind::Rank1Generic;
  H.param = maxdeg;
  H.rank = 1;
  H.ring = phi1.ring;
  H.build_basis_and_tables({{1, phi1}});
  return H;
}

NicholsAlgebra NicholsAlgebra::rank2_root(int N) {
  if (N <= 0) throw domain_error("root-of-unity order must be positive");
  NicholsAlgebra H;
  H.kind = Kind::Rank2Root;
  H.param = N;
  H.rank = 2;
  H.ring = N;
  H.build_basis_and_tables(
      {{1, poly_var(VT1, 1, N)}, {2, poly_var(VT2, 1, N)}});
  return H;
}

NicholsAlgebra NicholsAlgebra::rank2_generic(int maxdeg, const Poly& phi1,
                                             const Poly& phi2) {
  NicholsAlgebra H;
  H.kind = Kind::Rank2Generic;
  H.param = maxdeg;
  H.rank = 2;
  H.ring = phi1.ring;
  H.build_basis_and_tables({{1, phi1}, {2, phi2}});
  return H;
}

// ---------------------------------------------------------------------------
// structure maps

std::array<int, 2> NicholsAlgebra::deg(const Word& w) const {
  if (rank == 1) return {int(w.size()), 0};
  int d1 = 0, d2 = 0;
  for (char c : w) (c == 1 ? d1 : d2)++;
  return {d1, d2};
}

Poly NicholsAlgebra::qfactor(const std::array<int, 2>& da,
                             const std::array<int, 2>& db) const {
  switch (kind) {
    case Kind::Rank1Root:
      // q11 = w
      return poly_coeff(ring, coeff_w_pow(ring, long(da[0]) * db[0]));
    case Kind::Rank1Generic:
      return poly_var(VQ, da[0] * db[0], ring);
    case Kind::Rank2Root: {
      // q11 = q22 = -1, q21 free, q12 = w * q21^-1
      long a1 = da[0], a2 = da[1], b1 = db[0], b2 = db[1];
      Coeff c = coeff_w_pow(ring, a1 * b2);
      if ((a1 * b1 + a2 * b2) % 2 != 0) c = coeff_neg(c);
      Mono m = mono_one();
      m[VQ21] = static_cast<int16_t>(a2 * b1 - a1 * b2);
      return poly_monomial(m, c, ring);
    }
    case Kind::Rank2Generic: {
      // q11 = q22 = -1, q21 = g, q12 = s^2 * g^-1
      long a1 = da[0], a2 = da[1], b1 = db[0], b2 = db[1];
      Mono m = mono_one();
      m[VS] = static_cast<int16_t>(2 * a1 * b2);
      m[VG] = static_cast<int16_t>(a2 * b1 - a1 * b2);
      Coeff c = coeff_int(ring, (a1 * b1 + a2 * b2) % 2 ? -1 : 1);
      return poly_monomial(m, c, ring);
    }
  }
  throw domain_error("unreachable");
}

Element NicholsAlgebra::mul_words(const Word& a, const Word& b) const {
  Word w = a + b;
  Element out;
  if (rank == 1) {
    if (kind == Kind::Rank1Root && int(w.size()) >= param) return out;
    if (kind == Kind::Rank1Generic && int(w.size()) > param) return out;
    out.emplace(std::move(w), poly_int(1, ring));
    return out;
  }
  if (!word_alternates(w)) return out;
  if (kind == Kind::Rank2Generic) {
    if (int(w.size()) <= param) out.emplace(std::move(w), poly_int(1, ring));
    return out;
  }
  int N = param;
  if (int(w.size()) > 2 * N) return out;
  if (int(w.size()) == 2 * N && w[0] == 2) {
    // (x2 x1)^N = -(-q21)^N (x1 x2)^N
    Mono m = mono_one();
    m[VQ21] = static_cast<int16_t>(N);
    Coeff c = coeff_int(ring, N % 2 ? 1 : -1);
    out.emplace(alternating_word(1, 2 * N), poly_monomial(m, c, ring));
    return out;
  }
  out.emplace(std::move(w), poly_int(1, ring));
  return out;
}

Element NicholsAlgebra::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [w1, c1] : a)
    for (const auto& [w2, c2] : b) {
      Poly c = poly_mul(c1, c2);
      for (const auto& [w, cw] : mul_words(w1, w2))
        elem_add(out, w, poly_mul(c, cw));
    }
  return out;
}

Poly NicholsAlgebra::phi_word(const Word& w) const {
  Poly f = poly_int(1, ring);
  for (char l : w) f = poly_mul(f, phi_letter_.at(l));
  return f;
}

Element NicholsAlgebra::phi(const Element& e, bool inverse) const {
  const auto& tab = inverse ? phi_letter_inv_ : phi_letter_;
  Element out;
  for (const auto& [w, c] : e) {
    Poly f = poly_int(1, ring);
    for (char l : w) f = poly_mul(f, tab.at(l));
    elem_add(out, w, poly_mul(c, f));
  }
  return out;
}

const Tensor2& NicholsAlgebra::coproduct(const Word& w) const {
  auto it = delta_memo_.find(w);
  if (it != delta_memo_.end()) return it->second;
  Tensor2 r;
  if (w.empty()) {
    tensor_add(r, Word(), Word(), poly_int(1, ring));
  } else {
    Word letter(1, w[0]);
    Word rest = w.substr(1);
    const Tensor2& dr = coproduct(rest);
    auto dl = deg(letter);
    for (const auto& [cd, cf] : dr) {
      const auto& [c, d] = cd;
      // (x (x) 1) * (c (x) d): braiding factor 1
      for (const auto& [nw, cw] : mul_words(letter, c))
        tensor_add(r, nw, d, poly_mul(cf, cw));
      // (1 (x) x) * (c (x) d): braiding tau(x, c)
      Poly f = poly_mul(cf, qfactor(dl, deg(c)));
      for (const auto& [nw, cw] : mul_words(letter, d))
        tensor_add(r, c, nw, poly_mul(f, cw));
    }
  }
  return delta_memo_.emplace(w, std::move(r)).first->second;
}

Tensor2 NicholsAlgebra::coproduct(const Element& e) const {
  Tensor2 out;
  for (const auto& [w, c] : e)
    for (const auto& [ab, c2] : coproduct(w))
      tensor_add(out, ab.first, ab.second, poly_mul(c, c2));
  return out;
}

Tensor3 NicholsAlgebra::iterated_coproduct(const Word& w) const {
  Tensor3 out;
  for (const auto& [ab, c] : coproduct(w)) {
    for (const auto& [a12, c2] : coproduct(ab.first))
      tensor3_add(out, {a12.first, a12.second, ab.second}, poly_mul(c, c2));
  }
#ifndef NDEBUG
  // coassociativity: compare against (id (x) Delta)Delta
  Tensor3 alt;
  for (const auto& [ab, c] : coproduct(w))
    for (const auto& [b12, c2] : coproduct(ab.second))
      tensor3_add(alt, {ab.first, b12.first, b12.second}, poly_mul(c, c2));
  if (!(alt == out)) throw domain_error("coassociativity violated");
#endif
  return out;
}

const Element& NicholsAlgebra::antipode(const Word& w) const {
  auto it = antipode_memo_.find(w);
  if (it != antipode_memo_.end()) return it->second;
  Element r;
  if (w.empty()) {
    elem_add(r, Word(), poly_int(1, ring));
  } else {
    // S(w) = -w - sum S(w1) w2 over proper middle terms of Delta(w)
    elem_add(r, w, poly_int(-1, ring));
    for (const auto& [ab, c] : coproduct(w)) {
      if (ab.first == w || ab.second == w) continue;
      Element sw1;
      for (const auto& [sw, sc] : antipode(ab.first))
        elem_add(sw1, sw, poly_mul(c, sc));
      Element one_w2{{ab.second, poly_int(1, ring)}};
      r = elem_sub(r, mul(sw1, one_w2));
    }
  }
  return antipode_memo_.emplace(w, std::move(r)).first->second;
}

Element NicholsAlgebra::antipode(const Element& e) const {
  Element out;
  for (const auto& [w, c] : e)
    for (const auto& [w2, c2] : antipode(w))
      elem_add(out, w2, poly_mul(c, c2));
  return out;
}

Poly NicholsAlgebra::counit(const Element& e) const {
  auto it = e.find(Word());
  return it == e.end() ? poly_zero(ring) : it->second;
}

Tensor2 NicholsAlgebra::braid_tensor(const Element& a, const Element& b) const {
  Tensor2 out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Poly f = poly_mul(poly_mul(ca, cb), qfactor(deg(wa), deg(wb)));
      tensor_add(out, wb, wa, f);
    }
  return out;
}

// ---------------------------------------------------------------------------
// structure dump

static std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (char c : w) {
    if (!s.empty()) s += ".";
    s += "x" + std::to_string(int(c));
  }
  return s;
}

std::string NicholsAlgebra::structure_json() const {
  nlohmann::json j;
  j["dim"] = dim();
  j["ring"] = ring;
  for (const Word& a : basis) {
    nlohmann::json prod = nlohmann::json::object();
    for (const Word& b : basis) {
      nlohmann::json row = nlohmann::json::object();
      for (const auto& [w, c] : mul(Element{{a, poly_int(1, ring)}},
                                    Element{{b, poly_int(1, ring)}}))
        row[word_str(w)] = poly_str(c);
      if (!row.empty()) prod[word_str(b)] = row;
    }
    j["product"][word_str(a)] = prod;
    nlohmann::json cop = nlohmann::json::array();
    for (const auto& [ab, c] : coproduct(a))
      cop.push_back({word_str(ab.first), word_str(ab.second), poly_str(c)});
    j["coproduct"][word_str(a)] = cop;
    nlohmann::json ant = nlohmann::json::object();
    for (const auto& [w, c] : antipode(a)) ant[word_str(w)] = poly_str(c);
    j["antipode"][word_str(a)] = ant;
  }
  return j.dump();
}

// ---------------------------------------------------------------------------
// axiom verification

namespace {

Element word_el(const NicholsAlgebra& H, const Word& w) {
  return Element{{w, poly_int(1, H.ring)}};
}

// braided product on H (x) H: (a(x)b)(c(x)d) = qf(deg b, deg c) (ac (x) bd)
Tensor2 tensor_mul(const NicholsAlgebra& H, const Tensor2& x,
                   const Tensor2& y) {
  Tensor2 out;
  for (const auto& [ab, c1] : x)
    for (const auto& [cd, c2] : y) {
      Poly f = poly_mul(poly_mul(c1, c2),
                        H.qfactor(H.deg(ab.second), H.deg(cd.first)));
      Element left = H.mul_words(ab.first, cd.first);
      Element right = H.mul_words(ab.second, cd.second);
      for (const auto& [lw, lc] : left)
        for (const auto& [rw, rc] : right)
          tensor_add(out, lw, rw, poly_mul(poly_mul(f, lc), rc));
    }
  return out;
}

Element tensor_contract_mul(const NicholsAlgebra& H, const Tensor2& t) {
  Element out;
  for (const auto& [ab, c] : t)
    for (const auto& [w, cw] : H.mul_words(ab.first, ab.second))
      elem_add(out, w, poly_mul(c, cw));
  return out;
}

}  // namespace

HopfReport verify_hopf_axioms(const NicholsAlgebra& H) {
  HopfReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };
  const Poly one = poly_int(1, H.ring);

  // Hr1 associativity on all basis triples
  for (const Word& a : H.basis)
    for (const Word& b : H.basis)
      for (const Word& c : H.basis) {
        Element lhs = H.mul(H.mul(word_el(H, a), word_el(H, b)), word_el(H, c));
        Element rhs = H.mul(word_el(H, a), H.mul(word_el(H, b), word_el(H, c)));
        if (!(lhs == rhs)) {
          fail("associativity fails at " + word_str(a) + "," + word_str(b) +
               "," + word_str(c));
          break;
        }
      }

  // Hr3 unitality
  for (const Word& a : H.basis) {
    Element e = word_el(H, a);
    if (!(H.mul(word_el(H, Word()), e) == e) ||
        !(H.mul(e, word_el(H, Word())) == e))
      fail("unitality fails at " + word_str(a));
  }

  for (const Word& a : H.basis) {
    // Hr2 coassociativity (asserted inside iterated_coproduct in debug mode;
    // recompute both orders here unconditionally)
    Tensor3 left, right;
    for (const auto& [ab, c] : H.coproduct(a)) {
      for (const auto& [p, c2] : H.coproduct(ab.first)) {
        std::array<Word, 3> key{p.first, p.second, ab.second};
        auto it = left.find(key);
        Poly v = poly_mul(c, c2);
        if (it == left.end())
          left.emplace(key, v);
        else {
          it->second = poly_add(it->second, v);
          if (it->second.is_zero()) left.erase(it);
        }
      }
      for (const auto& [p, c2] : H.coproduct(ab.second)) {
        std::array<Word, 3> key{ab.first, p.first, p.second};
        auto it = right.find(key);
        Poly v = poly_mul(c, c2);
        if (it == right.end())
          right.emplace(key, v);
        else {
          it->second = poly_add(it->second, v);
          if (it->second.is_zero()) right.erase(it);
        }
      }
    }
    if (!(left == right)) fail("coassociativity fails at " + word_str(a));

    // Hr4 counitality
    Element keep_l, keep_r;
    for (const auto& [ab, c] : H.coproduct(a)) {
      if (ab.first.empty()) elem_add(keep_l, ab.second, c);
      if (ab.second.empty()) elem_add(keep_r, ab.first, c);
    }
    if (!(keep_l == word_el(H, a)) || !(keep_r == word_el(H, a)))
      fail("counitality fails at " + word_str(a));

    // Hr5 antipode identities
    Element conv_l, conv_r;
    for (const auto& [ab, c] : H.coproduct(a)) {
      Element s1 = H.antipode(Element{{ab.first, c}});
      conv_l = elem_sub(conv_l, elem_sub(Element{}, H.mul(s1, word_el(H, ab.second))));
      Element s2 = H.antipode(Element{{ab.second, one}});
      Element t;
      for (const auto& [w, cw] : H.mul(Element{{ab.first, c}}, s2))
        elem_add(t, w, cw);
      conv_r = elem_sub(conv_r, elem_sub(Element{}, t));
    }
    Element eps = a.empty() ? word_el(H, Word()) : Element{};
    if (!(conv_l == eps) || !(conv_r == eps))
      fail("antipode identity (Hr5) fails at " + word_str(a));

    // phi compatibilities: S phi = phi S, eps phi = eps
    if (!(H.antipode(H.phi(word_el(H, a))) == H.phi(H.antipode(word_el(H, a)))))
      fail("S.phi != phi.S at " + word_str(a));
    Poly eps_phi = H.counit(H.phi(word_el(H, a)));
    Poly eps_a = H.counit(word_el(H, a));
    if (!(eps_phi == eps_a)) fail("eps.phi != eps at " + word_str(a));

    // Hr5tau second identity: Delta S = (S (x) S) tau Delta
    Tensor2 lhs2 = H.coproduct(H.antipode(word_el(H, a)));
    Tensor2 rhs2;
    for (const auto& [bc, c] : H.coproduct(a)) {
      Poly f = poly_mul(c, H.qfactor(H.deg(bc.first), H.deg(bc.second)));
      for (const auto& [w1, c1] : H.antipode(bc.second))
        for (const auto& [w2, c2] : H.antipode(bc.first))
          tensor_add(rhs2, w1, w2, poly_mul(poly_mul(f, c1), c2));
    }
    if (!(lhs2 == rhs2)) fail("Delta.S identity (Hr5tau) fails at " + word_str(a));
  }

  // pairwise axioms; in the truncated (generic) algebras the bialgebra
  // compatibility only makes sense below the truncation degree
  bool truncated = H.kind == NicholsAlgebra::Kind::Rank1Generic ||
                   H.kind == NicholsAlgebra::Kind::Rank2Generic;
  for (const Word& a : H.basis)
    for (const Word& b : H.basis) {
      if (truncated && int(a.size() + b.size()) > H.param) continue;
      Element ab = H.mul(word_el(H, a), word_el(H, b));
      // Hr6tau: Delta(ab) = Delta(a) *_braided Delta(b)
      Tensor2 lhs = H.coproduct(ab);
      Tensor2 rhs = tensor_mul(H, H.coproduct(a), H.coproduct(b));
      if (!(lhs == rhs))
        fail("bialgebra compatibility (Hr6tau) fails at " + word_str(a) + "," +
             word_str(b));
      // Hr5tau first identity: S(ab) = mul(tau(S a (x) S b))
      Element l2 = H.antipode(ab);
      Element r2 = tensor_contract_mul(
          H, H.braid_tensor(H.antipode(word_el(H, a)), H.antipode(word_el(H, b))));
      if (!(l2 == r2))
        fail("S.mul identity (Hr5tau) fails at " + word_str(a) + "," +
             word_str(b));
      // phi is multiplicative
      if (!(H.phi(ab) == H.mul(H.phi(word_el(H, a)), H.phi(word_el(H, b)))))
        fail("phi.mul compatibility fails at " + word_str(a) + "," +
             word_str(b));
    }

  // phi is comultiplicative: (phi (x) phi) Delta = Delta phi
  for (const Word& a : H.basis) {
    Tensor2 lhs;
    for (const auto& [bc, c] : H.coproduct(a)) {
      Poly f = poly_mul(c, poly_mul(H.phi_word(bc.first), H.phi_word(bc.second)));
      tensor_add(lhs, bc.first, bc.second, f);
    }
    Tensor2 rhs = H.coproduct(H.phi(word_el(H, a)));
    if (!(lhs == rhs)) fail("Delta.phi compatibility fails at " + word_str(a));
  }
  return rep;
}

}  // namespace nk
