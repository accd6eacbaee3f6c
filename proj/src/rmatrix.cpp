#include "nk/rmatrix.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <stdexcept>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nk {

namespace {

void pair_add(std::map<PairKey, Poly>& row, const PairKey& out,
              const Poly& c) {
  if (c.is_zero()) return;
  auto it = row.find(out);
  if (it == row.end()) {
    row.emplace(out, c);
    return;
  }
  it->second = poly_add(it->second, c);
  if (it->second.is_zero()) row.erase(it);
}

void check_grading(const RMatrix& R) {
  for (const auto& [in, row] : R.entries) {
    auto din = R.grading[in.first];
    din[0] += R.grading[in.second][0];
    din[1] += R.grading[in.second][1];
    for (const auto& [out, c] : row) {
      auto dout = R.grading[out.first];
      dout[0] += R.grading[out.second][0];
      dout[1] += R.grading[out.second][1];
      if (din != dout)
        throw std::logic_error("R-matrix entry violates the grading");
    }
  }
}

std::vector<std::array<int, 2>> module_grading(const YDModule& M) {
  std::vector<std::array<int, 2>> g(M.dim());
  for (int i = 0; i < M.dim(); ++i) g[i] = M.coord_deg(i);
  return g;
}

}  // namespace

Poly RMatrix::entry(int i, int j, int k, int l) const {
  const auto* r = row(i, j);
  if (!r) return poly_zero(ring);
  auto it = r->find({k, l});
  return it == r->end() ? poly_zero(ring) : it->second;
}

int RMatrix::nonzero_count() const {
  int n = 0;
  for (const auto& [in, row] : entries) n += static_cast<int>(row.size());
  return n;
}

RMatrix build_rho_left(const YDModule& M) {
  if (M.side != Side::Left)
    throw std::invalid_argument("build_rho_left needs a left module");
  RMatrix R;
  R.dim = M.dim();
  R.ring = M.H().ring;
  R.grading = module_grading(M);
  for (int i = 0; i < R.dim; ++i) {
    for (int j = 0; j < R.dim; ++j) {
      const Poly fy = M.phi_scalar(j);
      std::map<PairKey, Poly> row;
      for (const auto& [h, l, c] : M.coact(i)) {
        ModElement acted = M.act(h, ModElement{{j, poly_int(1, R.ring)}});
        if (acted.empty()) continue;
        const Poly coeff = poly_mul(
            poly_mul(c, M.H().qfactor(M.coord_deg(l), M.coord_deg(j))), fy);
        for (const auto& [k, ac] : acted)
          pair_add(row, {k, l}, poly_mul(coeff, ac));
      }
      if (!row.empty()) R.entries.emplace(PairKey{i, j}, std::move(row));
    }
  }
  check_grading(R);
  return R;
}

RMatrix build_rho_right(const YDModule& M) {
  if (M.side != Side::Right)
    throw std::invalid_argument("build_rho_right needs a right module");
  RMatrix R;
  R.dim = M.dim();
  R.ring = M.H().ring;
  R.grading = module_grading(M);
  for (int j = 0; j < R.dim; ++j) {
    // coaction on y_j grouped by the host leg
    std::map<Word, std::vector<std::pair<int, Poly>>> byh;
    for (const auto& [h, k, c] : M.coact(j)) byh[h].emplace_back(k, c);
    for (int i = 0; i < R.dim; ++i) {
      const auto di = M.coord_deg(i);
      std::map<PairKey, Poly> row;
      for (const auto& [h, legs] : byh) {
        ModElement acted = M.act(ModElement{{i, poly_int(1, R.ring)}}, h);
        if (acted.empty()) continue;
        for (const auto& [k, mc] : legs) {
          const Poly coeff = poly_mul(
              poly_mul(mc, M.H().qfactor(di, M.coord_deg(k))),
              M.phi_scalar(k));
          for (const auto& [l, ac] : acted)
            pair_add(row, {k, l}, poly_mul(coeff, ac));
        }
      }
      if (!row.empty()) R.entries.emplace(PairKey{i, j}, std::move(row));
    }
  }
  check_grading(R);
  return R;
}

namespace {

using Triple = std::array<int, 3>;
using TriState = std::map<Triple, Poly>;

void tri_add(TriState& st, const Triple& t, const Poly& c) {
  auto it = st.find(t);
  if (it == st.end()) {
    if (!c.is_zero()) st.emplace(t, c);
    return;
  }
  it->second = poly_add(it->second, c);
  if (it->second.is_zero()) st.erase(it);
}

// apply R to legs (pos, pos+1) of a 3-leg state
TriState apply_r(const RMatrix& R, const TriState& st, int pos) {
  TriState out;
  for (const auto& [t, c] : st) {
    const auto* row = R.row(t[pos], t[pos + 1]);
    if (!row) continue;
    for (const auto& [kl, c2] : *row) {
      Triple nt = t;
      nt[pos] = kl.first;
      nt[pos + 1] = kl.second;
      tri_add(out, nt, poly_mul(c, c2));
    }
  }
  return out;
}

bool yb_on_triple(const RMatrix& R, int a, int b, int c) {
  TriState st{{Triple{a, b, c}, poly_int(1, R.ring)}};
  TriState lhs = apply_r(R, apply_r(R, apply_r(R, st, 0), 1), 0);
  TriState rhs = apply_r(R, apply_r(R, apply_r(R, st, 1), 0), 1);
  return lhs == rhs;
}

}  // namespace

bool check_yang_baxter(const RMatrix& R, bool parallel,
                       std::tuple<int, int, int>* witness) {
  const int d = R.dim;
  const long total = static_cast<long>(d) * d * d;
  std::atomic<bool> ok{true};
  long bad = -1;
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < total; ++idx) {
      if (!ok) continue;
      int a = static_cast<int>(idx / (d * d));
      int b = static_cast<int>(idx / d % d);
      int c = static_cast<int>(idx % d);
      if (!yb_on_triple(R, a, b, c)) {
#pragma omp critical
        {
          if (ok || idx < bad) {
            ok = false;
            bad = idx;
          }
        }
      }
    }
  } else {
    for (long idx = 0; idx < total && ok; ++idx) {
      if (!yb_on_triple(R, static_cast<int>(idx / (d * d)),
                        static_cast<int>(idx / d % d),
                        static_cast<int>(idx % d))) {
        ok = false;
        bad = idx;
      }
    }
  }
  if (!ok && witness)
    *witness = {static_cast<int>(bad / (d * d)),
                static_cast<int>(bad / d % d), static_cast<int>(bad % d)};
  return ok;
}

RMatrix partial_transpose(const RMatrix& R) {
  RMatrix out;
  out.dim = R.dim;
  out.ring = R.ring;
  out.grading = R.grading;
  for (const auto& [in, row] : R.entries) {
    const int b = in.first, d = in.second;
    for (const auto& [o, c] : row) {
      const int a = o.first, cc = o.second;
      out.entries[{a, b}].emplace(PairKey{cc, d}, c);
    }
  }
  return out;
}

namespace {

// connected components of the sparsity pattern over pair indices
std::vector<std::vector<PairKey>> components(const RMatrix& R) {
  std::map<PairKey, std::vector<PairKey>> adj;
  for (const auto& [in, row] : R.entries)
    for (const auto& [out, c] : row) {
      adj[in].push_back(out);
      adj[out].push_back(in);
    }
  std::set<PairKey> seen;
  std::vector<std::vector<PairKey>> comps;
  for (const auto& [start, nb] : adj) {
    if (seen.count(start)) continue;
    std::vector<PairKey> comp, stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      PairKey x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (const PairKey& y : adj[x])
        if (seen.insert(y).second) stack.push_back(y);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// fraction-free Gauss-Jordan on [A | I] -> [p I | p A^-1]; returns the block
// inverse and its determinant (swap sign included)
void invert_block(const RMatrix& R, const std::vector<PairKey>& comp,
                  bool parallel, RMatrix& out, Poly& det) {
  const int n = static_cast<int>(comp.size());
  std::map<PairKey, int> idx;
  for (int i = 0; i < n; ++i) idx[comp[i]] = i;
  // dense block, row = output index, column = input index
  std::vector<std::vector<Poly>> M(n, std::vector<Poly>(2 * n,
                                                        poly_zero(R.ring)));
  for (int j = 0; j < n; ++j) {
    const auto* row = R.row(comp[j].first, comp[j].second);
    if (row)
      for (const auto& [o, c] : *row) M[idx.at(o)][j] = c;
    M[j][n + j] = poly_int(1, R.ring);
  }
  int sign = 1;
  Poly prev = poly_int(1, R.ring);
  for (int k = 0; k < n; ++k) {
    if (M[k][k].is_zero()) {
      int r = k + 1;
      while (r < n && M[r][k].is_zero()) ++r;
      if (r == n)
        throw std::runtime_error("not rigid: singular block in R-matrix");
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    const Poly& pivot = M[k][k];
    std::atomic<bool> bad{false};
#pragma omp parallel for schedule(dynamic) if (parallel && n > 4)
    for (int i = 0; i < n; ++i) {
      if (i == k || bad) continue;
      const Poly fac = M[i][k];
      for (int j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        Poly num = poly_sub(poly_mul(pivot, M[i][j]), poly_mul(fac, M[k][j]));
        try {
          M[i][j] = poly_divexact(num, prev);
        } catch (const domain_error&) {
          bad = true;
        }
      }
      M[i][k] = poly_zero(R.ring);
    }
    if (bad)
      throw std::logic_error("fraction-free elimination lost exactness");
    prev = pivot;
  }
  det = sign < 0 ? poly_neg(prev) : prev;
  // inverse entries = augmented part / final pivot
  for (int j = 0; j < n; ++j) {
    std::map<PairKey, Poly> row;
    for (int i = 0; i < n; ++i) {
      if (M[i][n + j].is_zero()) continue;
      Poly v;
      try {
        v = poly_divexact(M[i][n + j], prev);
      } catch (const domain_error&) {
        throw std::runtime_error(
            "not rigid: inverse escapes the Laurent ring");
      }
      row.emplace(comp[i], std::move(v));
    }
    out.entries.emplace(comp[j], std::move(row));
  }
}

RMatrix compose(const RMatrix& A, const RMatrix& B) {
  // (A after B): feed each input pair through B then A
  RMatrix out;
  out.dim = A.dim;
  out.ring = A.ring;
  out.grading = A.grading;
  for (const auto& [in, brow] : B.entries) {
    std::map<PairKey, Poly> row;
    for (const auto& [mid, c] : brow) {
      const auto* arow = A.row(mid.first, mid.second);
      if (!arow) continue;
      for (const auto& [o, c2] : *arow) pair_add(row, o, poly_mul(c, c2));
    }
    if (!row.empty()) out.entries.emplace(in, std::move(row));
  }
  return out;
}

bool is_identity(const RMatrix& R) {
  long diag = 0;
  const Poly one = poly_int(1, R.ring);
  for (const auto& [in, row] : R.entries) {
    if (row.size() != 1) return false;
    const auto& [o, c] = *row.begin();
    if (o != in || !(c == one)) return false;
    ++diag;
  }
  return diag == static_cast<long>(R.dim) * R.dim;
}

}  // namespace

RMatrix invert(const RMatrix& R, std::vector<Poly>* det, bool parallel) {
  RMatrix out;
  out.dim = R.dim;
  out.ring = R.ring;
  out.grading = R.grading;
  long covered = 0;
  if (det) det->clear();
  for (const auto& comp : components(R)) {
    Poly d;
    invert_block(R, comp, parallel, out, d);
    if (det) det->push_back(d);
    covered += static_cast<long>(comp.size());
  }
  if (covered != static_cast<long>(R.dim) * R.dim)
    throw std::runtime_error("not rigid: R-matrix has empty rows/columns");
  if (!is_identity(compose(R, out)))
    throw std::logic_error("inversion self-check failed");
  return out;
}

Poly rmatrix_det(const RMatrix& R) {
  std::vector<Poly> dets;
  invert(R, &dets);
  Poly d = poly_int(1, R.ring);
  for (const Poly& b : dets) d = poly_mul(d, b);
  return d;
}

RigidRMatrix build_rigid(const RMatrix& R) {
  RigidRMatrix out;
  out.r = R;
  out.ri = invert(R);
  out.gm = invert(partial_transpose(R));
  out.gp = invert(partial_transpose(out.ri));
  return out;
}

std::string rmatrix_json(const RMatrix& R) {
  nlohmann::json j;
  j["dim"] = R.dim;
  j["ring"] = R.ring;
  j["entries"] = nlohmann::json::array();
  for (const auto& [in, row] : R.entries)
    for (const auto& [o, c] : row) {
      nlohmann::json e;
      e["in"] = {in.first, in.second};
      e["out"] = {o.first, o.second};
      e["coeff"] = nlohmann::json::parse(poly_json(c));
      j["entries"].push_back(std::move(e));
    }
  return j.dump();
}

}  // namespace nk
