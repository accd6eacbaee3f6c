#pragma once
// Left/right Yetter-Drinfel'd modules over the Nichols algebras of
// nichols.hpp: the regular left module (action = multiplication, coaction
// delta_L), its quotients by coinvariant-generated ideals, and the
// 4n-dimensional right submodules Y_n of the truncated generic rank-2
// algebra (coaction = restricted coproduct, action = lambda_R).
//
// Module elements are sparse coordinate vectors over the module basis; the
// basis vectors themselves are host-algebra elements (a single word, or the
// combination v = (x1x2)^n + alpha (x2x1)^n for Y_n).

#include <map>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nk/nichols.hpp"
#include "nk/poly.hpp"

namespace nk {

using ModElement = std::map<int, Poly>;                  // module coords
using HYTensor = std::map<std::pair<Word, int>, Poly>;   // H (x) Y
using YHTensor = std::map<std::pair<int, Word>, Poly>;   // Y (x) H

void mod_add(ModElement& e, int i, const Poly& c);
void hy_add(HYTensor& t, const Word& h, int i, const Poly& c);
void yh_add(YHTensor& t, int i, const Word& h, const Poly& c);

// delta_L a = (prod (x) id)(id (x) tau)(id (x) id (x) S phi) Delta^(2) a,
// on the regular module (both legs host words, tensor order H (x) Y)
Tensor2 left_coaction(const NicholsAlgebra& H, const Element& a);

// lambda_R(a (x) h) = prod^(2) (S phi (x) id (x) id)(tau (x) id)(id (x) Delta)
Element right_action(const NicholsAlgebra& H, const Element& a,
                     const Element& h);

enum class Side { Left, Right };

class YDModule {
 public:
  Side side = Side::Left;
  std::shared_ptr<const NicholsAlgebra> host;
  std::vector<std::string> labels;  // host word, or "v" for Y_n
  std::set<Word> killed;            // quotient data (left side only)
  int n = 0;                        // Y_n parameter (right side only)

  int dim() const { return static_cast<int>(labels.size()); }
  const NicholsAlgebra& H() const { return *host; }

  // basis vector as a host-algebra element
  Element basis_element(int i) const;
  // Z^2-multidegree of basis vector i (homogeneous by construction)
  std::array<int, 2> coord_deg(int i) const;
  // phi_Y(y_i) = phi_scalar(i) * y_i
  Poly phi_scalar(int i, bool inverse = false) const;

  // project a host element to module coordinates.  Left side: killed words
  // are dropped (quotient projection).  Right side (Y_n): throws
  // std::runtime_error when the element does not lie in the span of Y_n.
  ModElement to_coords(const Element& e) const;

  // left action lambda_L(h (x) y) = h y  (Left side only)
  ModElement act(const Word& h, const ModElement& y) const;
  // right action lambda_R(y (x) h)       (Right side only)
  ModElement act(const ModElement& y, const Word& h) const;

  // coaction on basis vector i as a list of (host word, module index,
  // coefficient); tensor order is H (x) Y on the left side (word = first
  // leg) and Y (x) H on the right side (word = second leg)
  const std::vector<std::tuple<Word, int, Poly>>& coact(int i) const {
    return coaction_[i];
  }

 private:
  friend YDModule regular_left_module(const NicholsAlgebra& H);
  friend YDModule regular_right_module(const NicholsAlgebra& H);
  friend YDModule quotient_by_coinvariants(const YDModule& M,
                                           const std::vector<Word>& gens);
  friend YDModule build_Yn(int n, bool bind_parameters);
  void build_left_tables();  // coaction from delta_L, with killed filtered
  std::map<std::string, int> index_;
  std::vector<std::vector<std::tuple<Word, int, Poly>>> coaction_;
  // Y_n data
  Word w12_, w21_;
  Poly alpha_;
};

// the regular left module (H, nabla, delta_L); verifies the YD axioms at
// build time and throws std::runtime_error with a witness on failure
YDModule regular_left_module(const NicholsAlgebra& H);

// the regular right module (H, lambda_R, Delta), same build-time verification
YDModule regular_right_module(const NicholsAlgebra& H);

// basis words w of degree >= 1 with delta_L w = 1 (x) w
std::vector<Word> find_coinvariants(const YDModule& M);

// quotient of a regular left module by the two-sided ideal generated by the
// given coinvariant words; throws std::runtime_error when the induced
// coaction is not well defined (ideal not a subcomodule)
YDModule quotient_by_coinvariants(const YDModule& M,
                                  const std::vector<Word>& gens);

// Y_n inside the degree-(2n+1) truncated generic rank-2 algebra with the
// parameter binding t1 = s^-n t^-1, t2 = s^-n t (so t1 t2 q^n = 1, q = s^2);
// basis = alternating words of degree <= 2n-1 plus v = (x1x2)^n +
// alpha (x2x1)^n with alpha = t2 (-q12)^n.  With bind_parameters = false the
// host keeps free t1, t2 and construction throws (closure fails).
YDModule build_Yn(int n, bool bind_parameters = true);

struct YDReport {
  bool ok = true;
  std::vector<std::string> failures;  // witnesses, empty when ok
};

// module/comodule axioms and the YD compatibility, exhaustively over module
// basis x algebra basis words.  On degree-truncated generic hosts, pairs
// whose total degree exceeds the truncation bound are skipped (the host
// product is not faithful there); all checks are exact on root-of-unity
// hosts and inside quotients/Y_n.
YDReport verify_yd_axioms(const YDModule& M);

}  // namespace nk
