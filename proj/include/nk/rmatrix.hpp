#pragma once
// R-matrices on the square of a Yetter-Drinfel'd module, stored sparsely as
// maps from input index pairs to output index pairs.  rho_L and rho_R are the
// two canonical braidings built from (co)action + scaling automorphism; the
// rigid quadruple (R, R^-1 and the inverses of the two partial transposes)
// is what the state sum needs at crossings.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nk/poly.hpp>
#include <nk/ydmod.hpp>

namespace nk {

using PairKey = std::pair<int, int>;
// entries[(i,j)] = sparse row of outputs: (k,l) -> coefficient
using PairMap = std::map<PairKey, std::map<PairKey, Poly>>;

struct RMatrix {
  int dim = 0;               // module dimension; indices run over [0, dim)
  int ring = 0;              // 0 = integer coefficients, N = mod Phi_N(w)
  std::vector<std::array<int, 2>> grading;  // multidegree of each index
  PairMap entries;

  const std::map<PairKey, Poly>* row(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? nullptr : &it->second;
  }
  Poly entry(int i, int j, int k, int l) const;
  int nonzero_count() const;
};

// rho_L(y (x) y') = (lambda (x) id)(id (x) tau)(delta (x) phi_Y), i.e.
// entry[(i,j)][(k,l)]: k receives the action leg, l the coaction leg.
RMatrix build_rho_left(const YDModule& M);

// rho_R(y (x) y') = (phi_Y (x) lambda)(tau (x) id)(id (x) delta)
RMatrix build_rho_right(const YDModule& M);

// exact check of R12 R23 R12 = R23 R12 R23 on all basis triples;
// parallel = use the OpenMP kernel (the serial path is the reference)
bool check_yang_baxter(const RMatrix& R, bool parallel = true,
                       std::tuple<int, int, int>* witness = nullptr);

// f~[(a,b)][(c,d)] = f[(b,d)][(a,c)]
RMatrix partial_transpose(const RMatrix& R);

// Blockwise inversion over the exact coefficient ring: split the pair
// indices into connected components of the sparsity pattern and invert each
// block by fraction-free elimination.  Throws if a block is singular or the
// inverse leaves the Laurent polynomial ring.  det, if given, receives the
// determinant contributions of the blocks (in component order).
// parallel = invert the blocks with the OpenMP kernel.
RMatrix invert(const RMatrix& R, std::vector<Poly>* det = nullptr,
               bool parallel = true);

// determinant of the full pair matrix (product over blocks, +-1 signs from
// the permutation pairing rows to components included)
Poly rmatrix_det(const RMatrix& R);

struct RigidRMatrix {
  RMatrix r;    // the braiding itself
  RMatrix ri;   // r^-1
  RMatrix gm;   // (r~)^-1        (~ = partial transpose)
  RMatrix gp;   // ((r^-1)~)^-1
};

// computes the four operators needed by the state sum; throws if the
// braiding is not rigid (a partial transpose fails to invert)
RigidRMatrix build_rigid(const RMatrix& R);

// JSON description: dimension, ring, nonzero entries keyed "i,j->k,l"
std::string rmatrix_json(const RMatrix& R);

}  // namespace nk
