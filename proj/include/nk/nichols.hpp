#pragma once
// Finite-dimensional diagonal-type braided Hopf algebras with a scaling
// automorphism phi: rank-1 F[x]/(x^N) (root-of-unity and generic-truncated)
// and rank-2 Nichols algebras (root-of-unity dimension 4N, and generic
// truncated). Basis words are strings over letters {1,2}; elements are sparse
// maps word -> Laurent polynomial.
//
// Conventions:
//  - rank-1 root of unity order N: coefficient ring Cyclotomic(N), q = w.
//  - rank-1 generic: ring Z, q11 = q.
//  - rank-2 root of unity order N: ring Cyclotomic(N), q11 = q22 = -1,
//    q21 free gauge variable, q12 = w * q21^-1.
//  - rank-2 generic: ring Z, q11 = q22 = -1, q21 = g, q12 = s^2 * g^-1.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nk/poly.hpp"

namespace nk {

using Word = std::string;  // bytes with values 1..rank
using Element = std::map<Word, Poly>;
using Tensor2 = std::map<std::pair<Word, Word>, Poly>;
using Tensor3 = std::map<std::array<Word, 3>, Poly>;

// canonicalizing accumulation helpers
void elem_add(Element& e, const Word& w, const Poly& c);
void tensor_add(Tensor2& t, const Word& a, const Word& b, const Poly& c);
Element elem_sub(const Element& a, const Element& b);
bool elem_is_zero(const Element& e);

class NicholsAlgebra {
 public:
  enum class Kind { Rank1Root, Rank1Generic, Rank2Root, Rank2Generic };

  static NicholsAlgebra rank1_root(int N);
  // maxdeg = highest surviving power of x; phi1 = phi(x)/x scalar
  static NicholsAlgebra rank1_generic(int maxdeg, const Poly& phi1);
  static NicholsAlgebra rank2_root(int N);
  static NicholsAlgebra rank2_generic(int maxdeg, const Poly& phi1,
                                      const Poly& phi2);

  Kind kind;
  int param = 0;  // N or maxdeg
  int rank = 1;
  int ring = 0;  // coefficient ring tag shared by all structure constants
  std::vector<Word> basis;
  std::map<Word, int> index;

  int dim() const { return static_cast<int>(basis.size()); }

  // multidegree in Z^rank
  std::array<int, 2> deg(const Word& w) const;

  // braiding scalar: tau(a (x) b) = qfactor(deg a, deg b) * (b (x) a)
  Poly qfactor(const std::array<int, 2>& da, const std::array<int, 2>& db) const;

  // product of two basis words, reduced to normal form
  Element mul_words(const Word& a, const Word& b) const;
  Element mul(const Element& a, const Element& b) const;

  // scaling automorphism phi (and its inverse)
  Poly phi_word(const Word& w) const;
  Element phi(const Element& e, bool inverse = false) const;

  // coproduct (memoized per basis word at build time), its linear extension,
  // and the twice-iterated coproduct (Delta (x) id)Delta
  const Tensor2& coproduct(const Word& w) const;
  Tensor2 coproduct(const Element& e) const;
  Tensor3 iterated_coproduct(const Word& w) const;

  // antipode (memoized per basis word) and its linear extension
  const Element& antipode(const Word& w) const;
  Element antipode(const Element& e) const;

  Poly counit(const Element& e) const;

  // braided flip on homogeneous elements, term by term
  Tensor2 braid_tensor(const Element& a, const Element& b) const;

  std::string structure_json() const;  // product/coproduct/antipode tables

 private:
  NicholsAlgebra() = default;
  void build_basis_and_tables(const std::map<int, Poly>& phi_letters);
  std::map<int, Poly> phi_letter_, phi_letter_inv_;
  // pre-populated at build time; read-only afterwards
  mutable std::map<Word, Tensor2> delta_memo_;
  mutable std::map<Word, Element> antipode_memo_;
};

struct HopfReport {
  bool ok = true;
  std::vector<std::string> failures;  // witnesses, empty when ok
};

// checks Hr1-Hr5, Hr6tau, Hr5tau and the phi-compatibility relations on the
// full basis (pairs/triples where the axiom needs them)
HopfReport verify_hopf_axioms(const NicholsAlgebra& H);

}  // namespace nk
