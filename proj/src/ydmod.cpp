#include "nk/ydmod.hpp"

#include <climits>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace nk {

namespace {

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (char ch : w) {
    s += 'x';
    s += static_cast<char>('0' + ch);
  }
  return s;
}

bool truncated_host(const NicholsAlgebra& H) {
  return H.kind == NicholsAlgebra::Kind::Rank1Generic ||
         H.kind == NicholsAlgebra::Kind::Rank2Generic;
}

int degree_bound(const NicholsAlgebra& H) {
  return truncated_host(H) ? H.param : INT_MAX;
}

}  // namespace

void mod_add(ModElement& e, int i, const Poly& c) {
  auto it = e.find(i);
  if (it == e.end()) {
    if (!c.is_zero()) e.emplace(i, c);
    return;
  }
  it->second = poly_add(it->second, c);
  if (it->second.is_zero()) e.erase(it);
}

void hy_add(HYTensor& t, const Word& h, int i, const Poly& c) {
  auto key = std::make_pair(h, i);
  auto it = t.find(key);
  if (it == t.end()) {
    if (!c.is_zero()) t.emplace(key, c);
    return;
  }
  it->second = poly_add(it->second, c);
  if (it->second.is_zero()) t.erase(it);
}

void yh_add(YHTensor& t, int i, const Word& h, const Poly& c) {
  auto key = std::make_pair(i, h);
  auto it = t.find(key);
  if (it == t.end()) {
    if (!c.is_zero()) t.emplace(key, c);
    return;
  }
  it->second = poly_add(it->second, c);
  if (it->second.is_zero()) t.erase(it);
}

Tensor2 left_coaction(const NicholsAlgebra& H, const Element& a) {
  Tensor2 out;
  for (const auto& [w, c] : a) {
    for (const auto& [key, c3] : H.iterated_coproduct(w)) {
      const Word &a1 = key[0], &a2 = key[1], &a3 = key[2];
      Poly base = poly_mul(poly_mul(c, c3),
                           H.qfactor(H.deg(a2), H.deg(a3)));
      Element s = H.phi(H.antipode(a3));
      for (const auto& [sw, sc] : s) {
        Poly bs = poly_mul(base, sc);
        for (const auto& [pw, pc] : H.mul_words(a1, sw))
          tensor_add(out, pw, a2, poly_mul(bs, pc));
      }
    }
  }
  return out;
}

Element right_action(const NicholsAlgebra& H, const Element& a,
                     const Element& h) {
  Element out;
  for (const auto& [hw, hc] : h) {
    for (const auto& [legs, c] : H.coproduct(hw)) {
      const Word &h1 = legs.first, &h2 = legs.second;
      Element s = H.phi(H.antipode(h1));
      for (const auto& [aw, ac] : a) {
        Poly f = H.qfactor(H.deg(aw), H.deg(h1));
        // left factor S(phi h1) * a
        Element left;
        for (const auto& [sw, sc] : s)
          for (const auto& [pw, pc] : H.mul_words(sw, aw))
            elem_add(left, pw, poly_mul(sc, pc));
        Poly base = poly_mul(poly_mul(hc, c), poly_mul(f, ac));
        for (const auto& [lw, lc] : left) {
          Poly bl = poly_mul(base, lc);
          for (const auto& [pw, pc] : H.mul_words(lw, h2))
            elem_add(out, pw, poly_mul(bl, pc));
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// YDModule

Element YDModule::basis_element(int i) const {
  const std::string& lbl = labels[i];
  Element e;
  if (lbl == "v") {
    e[w12_] = poly_int(1, host->ring);
    e[w21_] = alpha_;
  } else {
    e[lbl] = poly_int(1, host->ring);
  }
  return e;
}

std::array<int, 2> YDModule::coord_deg(int i) const {
  if (labels[i] == "v") return {n, n};
  return host->deg(labels[i]);
}

Poly YDModule::phi_scalar(int i, bool inverse) const {
  Poly s = host->phi_word(labels[i] == "v" ? w12_ : Word(labels[i]));
  return inverse ? poly_inv_unit(s) : s;
}

ModElement YDModule::to_coords(const Element& e) const {
  ModElement out;
  if (side == Side::Left) {
    for (const auto& [w, c] : e) {
      if (killed.count(w)) continue;
      mod_add(out, index_.at(w), c);
    }
    return out;
  }
  // regular right module: plain word coordinates
  if (n == 0) {
    for (const auto& [w, c] : e) mod_add(out, index_.at(w), c);
    return out;
  }
  // Y_n span check
  Poly c12 = poly_zero(host->ring), c21 = poly_zero(host->ring);
  for (const auto& [w, c] : e) {
    if (c.is_zero()) continue;
    int len = static_cast<int>(w.size());
    if (len <= 2 * n - 1) {
      mod_add(out, index_.at(w), c);
    } else if (len == 2 * n) {
      if (w == w12_)
        c12 = c;
      else
        c21 = c;
    } else {
      throw std::runtime_error("Y_n closure: degree " + std::to_string(len) +
                               " leak at " + word_str(w));
    }
  }
  if (!c12.is_zero()) {
    if (!poly_sub(c21, poly_mul(alpha_, c12)).is_zero())
      throw std::runtime_error("Y_n closure: top-degree part not a multiple "
                               "of v");
    mod_add(out, index_.at("v"), c12);
  } else if (!c21.is_zero()) {
    throw std::runtime_error("Y_n closure: bare (x2x1)^n component");
  }
  return out;
}

ModElement YDModule::act(const Word& h, const ModElement& y) const {
  ModElement out;
  for (const auto& [i, c] : y) {
    for (const auto& [pw, pc] : host->mul_words(h, labels[i])) {
      if (killed.count(pw)) continue;
      mod_add(out, index_.at(pw), poly_mul(c, pc));
    }
  }
  return out;
}

ModElement YDModule::act(const ModElement& y, const Word& h) const {
  Element ye;
  for (const auto& [i, c] : y)
    for (const auto& [w, wc] : basis_element(i))
      elem_add(ye, w, poly_mul(c, wc));
  Element hw;
  hw[h] = poly_int(1, host->ring);
  return to_coords(right_action(*host, ye, hw));
}

void YDModule::build_left_tables() {
  coaction_.assign(labels.size(), {});
  for (int i = 0; i < dim(); ++i) {
    Tensor2 dl = left_coaction(*host, basis_element(i));
    for (const auto& [legs, c] : dl) {
      if (killed.count(legs.second)) continue;
      coaction_[i].emplace_back(legs.first, index_.at(legs.second), c);
    }
  }
}

YDModule regular_left_module(const NicholsAlgebra& H) {
  YDModule M;
  M.side = Side::Left;
  M.host = std::make_shared<NicholsAlgebra>(H);
  for (const Word& w : H.basis) {
    M.index_[w] = static_cast<int>(M.labels.size());
    M.labels.push_back(w);
  }
  M.build_left_tables();
  YDReport rep = verify_yd_axioms(M);
  if (!rep.ok)
    throw std::runtime_error("regular left module axiom failure: " +
                             rep.failures.front());
  return M;
}

YDModule regular_right_module(const NicholsAlgebra& H) {
  YDModule M;
  M.side = Side::Right;
  M.host = std::make_shared<NicholsAlgebra>(H);
  for (const Word& w : H.basis) {
    M.index_[w] = static_cast<int>(M.labels.size());
    M.labels.push_back(w);
  }
  M.coaction_.assign(M.labels.size(), {});
  for (int i = 0; i < M.dim(); ++i)
    for (const auto& [legs, c] : H.coproduct(M.labels[i]))
      M.coaction_[i].emplace_back(legs.second, M.index_.at(legs.first), c);
  YDReport rep = verify_yd_axioms(M);
  if (!rep.ok)
    throw std::runtime_error("regular right module axiom failure: " +
                             rep.failures.front());
  return M;
}

std::vector<Word> find_coinvariants(const YDModule& M) {
  std::vector<Word> out;
  Poly one = poly_int(1, M.host->ring);
  for (int i = 0; i < M.dim(); ++i) {
    if (M.labels[i].empty() || M.labels[i] == "v") continue;
    const auto& rows = M.coact(i);
    if (rows.size() == 1 && std::get<0>(rows[0]).empty() &&
        std::get<1>(rows[0]) == i && std::get<2>(rows[0]) == one)
      out.push_back(M.labels[i]);
  }
  return out;
}

YDModule quotient_by_coinvariants(const YDModule& M,
                                  const std::vector<Word>& gens) {
  const NicholsAlgebra& H = M.H();
  // monomial two-sided ideal closure
  std::set<Word> killed(gens.begin(), gens.end());
  std::deque<Word> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    for (int r = 1; r <= H.rank; ++r) {
      Word l(1, static_cast<char>(r));
      for (const Element& prod : {H.mul_words(l, w), H.mul_words(w, l)}) {
        for (const auto& [pw, pc] : prod) {
          (void)pc;
          if (killed.insert(pw).second) queue.push_back(pw);
        }
      }
    }
  }
  // the ideal must be a subcomodule: delta_L(killed) in H (x) killed
  for (const Word& w : killed) {
    Element e;
    e[w] = poly_int(1, H.ring);
    for (const auto& [legs, c] : left_coaction(H, e)) {
      (void)c;
      if (!killed.count(legs.second))
        throw std::runtime_error(
            "quotient not well defined: delta_L(" + word_str(w) +
            ") has module leg " + word_str(legs.second) +
            " outside the ideal");
    }
  }
  YDModule Q;
  Q.side = Side::Left;
  Q.host = M.host;
  Q.killed = killed;
  for (const Word& w : H.basis) {
    if (killed.count(w)) continue;
    Q.index_[w] = static_cast<int>(Q.labels.size());
    Q.labels.push_back(w);
  }
  Q.build_left_tables();
  YDReport rep = verify_yd_axioms(Q);
  if (!rep.ok)
    throw std::runtime_error("quotient module axiom failure: " +
                             rep.failures.front());
  return Q;
}

YDModule build_Yn(int n, bool bind_parameters) {
  Poly phi1, phi2, alpha;
  if (bind_parameters) {
    phi1 = poly_mul(poly_var(VS, -n), poly_var(VT, -1));
    phi2 = poly_mul(poly_var(VS, -n), poly_var(VT, 1));
    // alpha = t2 (-q12)^n = (-1)^n t s^n g^-n
    alpha = poly_scale(poly_mul(poly_var(VT, 1), poly_mul(poly_var(VS, n),
                                                          poly_var(VG, -n))),
                       (n % 2 == 0) ? 1 : -1);
  } else {
    phi1 = poly_var(VT1);
    phi2 = poly_var(VT2);
    alpha = poly_scale(poly_mul(poly_var(VT2, 1),
                                poly_mul(poly_var(VS, 2 * n),
                                         poly_var(VG, -n))),
                       (n % 2 == 0) ? 1 : -1);
  }
  YDModule Y;
  Y.side = Side::Right;
  Y.n = n;
  Y.host = std::make_shared<NicholsAlgebra>(
      NicholsAlgebra::rank2_generic(2 * n + 1, phi1, phi2));
  const NicholsAlgebra& H = *Y.host;
  for (int i = 0; i < 2 * n; ++i) {
    Y.w12_ += static_cast<char>(i % 2 == 0 ? 1 : 2);
    Y.w21_ += static_cast<char>(i % 2 == 0 ? 2 : 1);
  }
  Y.alpha_ = alpha;
  for (const Word& w : H.basis) {
    if (static_cast<int>(w.size()) > 2 * n - 1) continue;
    Y.index_[w] = static_cast<int>(Y.labels.size());
    Y.labels.push_back(w);
  }
  Y.index_["v"] = static_cast<int>(Y.labels.size());
  Y.labels.push_back("v");
  // coaction = restricted coproduct; first legs must stay in the span
  Y.coaction_.assign(Y.labels.size(), {});
  for (int i = 0; i < Y.dim(); ++i) {
    std::map<Word, Element> byh;
    for (const auto& [w, c] : Y.basis_element(i))
      for (const auto& [legs, c2] : H.coproduct(w))
        elem_add(byh[legs.second], legs.first, poly_mul(c, c2));
    for (const auto& [h, e] : byh)
      for (const auto& [k, c] : Y.to_coords(e))
        Y.coaction_[i].emplace_back(h, k, c);
  }
  // generator actions must close into the span
  for (int i = 0; i < Y.dim(); ++i)
    for (int r = 1; r <= 2; ++r)
      (void)Y.act(ModElement{{i, poly_int(1, H.ring)}},
                  Word(1, static_cast<char>(r)));
  return Y;
}

// ---------------------------------------------------------------------------
// axiom verification

namespace {

void check_eq_hy(const HYTensor& a, const HYTensor& b, const std::string& msg,
                 YDReport& rep) {
  if (a != b) {
    rep.ok = false;
    rep.failures.push_back(msg);
  }
}

void check_eq_yh(const YHTensor& a, const YHTensor& b, const std::string& msg,
                 YDReport& rep) {
  if (a != b) {
    rep.ok = false;
    rep.failures.push_back(msg);
  }
}

void check_eq_mod(const ModElement& a, const ModElement& b,
                  const std::string& msg, YDReport& rep) {
  if (a != b) {
    rep.ok = false;
    rep.failures.push_back(msg);
  }
}

int total_deg(const std::array<int, 2>& d) { return d[0] + d[1]; }

}  // namespace

YDReport verify_yd_axioms(const YDModule& M) {
  YDReport rep;
  const NicholsAlgebra& H = M.H();
  const int bound = degree_bound(H);
  Poly one = poly_int(1, H.ring);

  auto unit_coords = [&](int i) { return ModElement{{i, one}}; };

  if (M.side == Side::Left) {
    for (int i = 0; i < M.dim(); ++i) {
      int dy = total_deg(M.coord_deg(i));
      // HDYL2: unit acts as identity
      check_eq_mod(M.act(Word(), unit_coords(i)), unit_coords(i),
                   "HDYL2 y=" + M.labels[i], rep);
      // HDYL4: counit on the coaction leg
      ModElement eps;
      for (const auto& [h, m, c] : M.coact(i))
        if (h.empty()) mod_add(eps, m, c);
      check_eq_mod(eps, unit_coords(i), "HDYL4 y=" + M.labels[i], rep);
      // HDYL3: coassociativity of the coaction
      std::map<std::tuple<Word, Word, int>, Poly> lhs, rhs;
      for (const auto& [h, k, c] : M.coact(i)) {
        for (const auto& [h2, l, c2] : M.coact(k)) {
          auto key = std::make_tuple(h, h2, l);
          Poly v = poly_add(lhs.count(key) ? lhs[key] : poly_zero(H.ring),
                            poly_mul(c, c2));
          if (v.is_zero()) lhs.erase(key); else lhs[key] = v;
        }
        for (const auto& [legs, c2] : H.coproduct(h)) {
          auto key = std::make_tuple(legs.first, legs.second, k);
          Poly v = poly_add(rhs.count(key) ? rhs[key] : poly_zero(H.ring),
                            poly_mul(c, c2));
          if (v.is_zero()) rhs.erase(key); else rhs[key] = v;
        }
      }
      if (lhs != rhs) {
        rep.ok = false;
        rep.failures.push_back("HDYL3 y=" + M.labels[i]);
      }
      // HDYL1 and eq:DYL against every algebra word (pair)
      for (const Word& h : H.basis) {
        int dh = static_cast<int>(h.size());
        if (dh + dy > bound) continue;
        // eq:DYL
        HYTensor L, R;
        for (const auto& [legs, c] : H.coproduct(h)) {
          const Word &h1 = legs.first, &h2 = legs.second;
          // LHS: (prod (x) id)(id (x) tau)(delta lambda (x) phi)(id (x) tau)
          Poly f1 = H.qfactor(H.deg(h2), M.coord_deg(i));
          Poly ph2 = H.phi_word(h2);
          for (const auto& [k, ck] : M.act(h1, unit_coords(i))) {
            for (const auto& [hw, m, cm] : M.coact(k)) {
              Poly f2 = H.qfactor(M.coord_deg(m), H.deg(h2));
              Poly base = poly_mul(poly_mul(c, f1),
                                   poly_mul(poly_mul(ck, cm),
                                            poly_mul(f2, ph2)));
              for (const auto& [pw, pc] : H.mul_words(hw, h2))
                hy_add(L, pw, m, poly_mul(base, pc));
            }
          }
          // RHS: (prod (x) lambda)(id (x) tau (x) id)(Delta (x) delta)
          for (const auto& [g, m, cg] : M.coact(i)) {
            Poly f = H.qfactor(H.deg(h2), H.deg(g));
            for (const auto& [l, cl] : M.act(h2, unit_coords(m))) {
              Poly base = poly_mul(poly_mul(c, cg), poly_mul(f, cl));
              for (const auto& [pw, pc] : H.mul_words(h1, g))
                hy_add(R, pw, l, poly_mul(base, pc));
            }
          }
        }
        check_eq_hy(L, R, "eq:DYL h=" + word_str(h) + " y=" + M.labels[i],
                    rep);
        // HDYL1 over second algebra words
        for (const Word& h2 : H.basis) {
          if (dh + static_cast<int>(h2.size()) + dy > bound) continue;
          ModElement lhs1 = M.act(h, M.act(h2, unit_coords(i)));
          ModElement rhs1;
          for (const auto& [pw, pc] : H.mul_words(h, h2))
            for (const auto& [k, c] : M.act(pw, unit_coords(i)))
              mod_add(rhs1, k, poly_mul(pc, c));
          check_eq_mod(lhs1, rhs1,
                       "HDYL1 h1=" + word_str(h) + " h2=" + word_str(h2) +
                           " y=" + M.labels[i],
                       rep);
        }
      }
    }
    return rep;
  }

  // right side
  for (int i = 0; i < M.dim(); ++i) {
    int dy = total_deg(M.coord_deg(i));
    // HDYR4
    check_eq_mod(M.act(unit_coords(i), Word()), unit_coords(i),
                 "HDYR4 y=" + M.labels[i], rep);
    // HDYR2
    ModElement eps;
    for (const auto& [h, k, c] : M.coact(i))
      if (h.empty()) mod_add(eps, k, c);
    check_eq_mod(eps, unit_coords(i), "HDYR2 y=" + M.labels[i], rep);
    // HDYR1
    std::map<std::tuple<int, Word, Word>, Poly> lhs, rhs;
    for (const auto& [h, k, c] : M.coact(i)) {
      for (const auto& [h2, l, c2] : M.coact(k)) {
        auto key = std::make_tuple(l, h2, h);
        Poly v = poly_add(lhs.count(key) ? lhs[key] : poly_zero(H.ring),
                          poly_mul(c, c2));
        if (v.is_zero()) lhs.erase(key); else lhs[key] = v;
      }
      for (const auto& [legs, c2] : H.coproduct(h)) {
        auto key = std::make_tuple(k, legs.first, legs.second);
        Poly v = poly_add(rhs.count(key) ? rhs[key] : poly_zero(H.ring),
                          poly_mul(c, c2));
        if (v.is_zero()) rhs.erase(key); else rhs[key] = v;
      }
    }
    if (lhs != rhs) {
      rep.ok = false;
      rep.failures.push_back("HDYR1 y=" + M.labels[i]);
    }
    for (const Word& h : H.basis) {
      int dh = static_cast<int>(h.size());
      if (dh + dy > bound) continue;
      // eq:DYR
      YHTensor L, R;
      for (const auto& [legs, c] : H.coproduct(h)) {
        const Word &h1 = legs.first, &h2 = legs.second;
        Poly f1 = H.qfactor(M.coord_deg(i), H.deg(h1));
        Poly ph1 = H.phi_word(h1);
        for (const auto& [k, ck] : M.act(unit_coords(i), h2)) {
          for (const auto& [hw, l, cl] : M.coact(k)) {
            Poly f2 = H.qfactor(H.deg(h1), M.coord_deg(l));
            Poly base = poly_mul(poly_mul(c, f1),
                                 poly_mul(poly_mul(ck, cl),
                                          poly_mul(f2, ph1)));
            for (const auto& [pw, pc] : H.mul_words(h1, hw))
              yh_add(L, l, pw, poly_mul(base, pc));
          }
        }
        for (const auto& [g, k, cg] : M.coact(i)) {
          Poly f = H.qfactor(H.deg(g), H.deg(h1));
          for (const auto& [l, cl] : M.act(unit_coords(k), h1)) {
            Poly base = poly_mul(poly_mul(c, cg), poly_mul(f, cl));
            for (const auto& [pw, pc] : H.mul_words(g, h2))
              yh_add(R, l, pw, poly_mul(base, pc));
          }
        }
      }
      check_eq_yh(L, R, "eq:DYR y=" + M.labels[i] + " h=" + word_str(h),
                  rep);
      // HDYR3 (right action is a module map: act by h1 then h2 = act by
      // the product h1 h2)
      for (const Word& h2 : H.basis) {
        if (dh + static_cast<int>(h2.size()) + dy > bound) continue;
        ModElement lhs1 = M.act(M.act(unit_coords(i), h), h2);
        ModElement rhs1;
        for (const auto& [pw, pc] : H.mul_words(h, h2))
          for (const auto& [k, c] : M.act(unit_coords(i), pw))
            mod_add(rhs1, k, poly_mul(pc, c));
        check_eq_mod(lhs1, rhs1,
                     "HDYR3 y=" + M.labels[i] + " h1=" + word_str(h) +
                         " h2=" + word_str(h2),
                     rep);
      }
    }
  }
  return rep;
}

}  // namespace nk
