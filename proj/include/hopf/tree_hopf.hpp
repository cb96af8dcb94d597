#ifndef HOPF_TREE_HOPF_HPP
#define HOPF_TREE_HOPF_HPP

#include <functional>
#include <set>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/lincomb.hpp"
#include "hopf/tree.hpp"

namespace hopf {

using CKElement = LinComb<Forest>;
using GLElement = LinComb<RootedTree>;

// --- Connes-Kreimer ---

// t (x) I + I (x) t + sum over admissible cuts P_c (x) R_c, multiplied out
// over the trees of the forest.
LinComb<Tensor<Forest>> cut_coproduct(const Forest& u);
// Sum over splittings of the vertex set into a descendant-closed part (left)
// and its complement (right).
LinComb<Tensor<Forest>> poset_coproduct(const Forest& u);
// Labeled forests go through the poset form, unlabeled ones through cuts.
LinComb<Tensor<Forest>> ck_coproduct(const Forest& u);
LinComb<Tensor<Forest>> ck_coproduct(const CKElement& x);

LinComb<Forest> ck_product(const Forest& u, const Forest& v);
CKElement ck_product(const CKElement& x, const CKElement& y);
// S(t) = -t - sum_c S(P_c) R_c, extended multiplicatively.
CKElement ck_antipode(const Forest& u);
CKElement ck_antipode(const CKElement& x);
Rational ck_counit(const CKElement& x);

HopfStructure<Forest> ck_hopf();
// Same algebra with the poset coproduct on every input.
HopfStructure<Forest> ck_poset_hopf();

// D(B+_a(u)) - B+_a(u) (x) I - (id (x) B+_a) D(u); zero for a 1-cocycle.
LinComb<Tensor<Forest>> bplus_cocycle_defect(const Forest& u, int label = 0);

// --- Grossman-Larson ---

// x o y: every map from the root branches of x to the vertices of y, each
// branch attached below its image.
GLElement gl_product(const RootedTree& x, const RootedTree& y);
GLElement gl_product(const GLElement& x, const GLElement& y);
// Splits the root branches into two complementary subsets.
LinComb<Tensor<RootedTree>> gl_coproduct(const RootedTree& t);
HopfStructure<RootedTree> gl_hopf();

// <B+(u), v> = |sym(u)| [u == v].
Rational ck_gl_pairing(const GLElement& x, const CKElement& y);
Rational ck_gl_pairing(const LinComb<Tensor<RootedTree>>& x, const LinComb<Tensor<Forest>>& y);

// --- planar: H_P (diamond) and Foissy ---

// Shuffles of the root branch sequences (branches of x into those of y).
LinComb<PlanarTree> planar_diamond(const PlanarTree& x, const PlanarTree& y);
// Deconcatenation of the root branch sequence.
LinComb<Tensor<PlanarTree>> planar_diamond_coproduct(const PlanarTree& t);
HopfStructure<PlanarTree> planar_hopf();

struct PlanarCut {
  OrderedForest pruned;  // left to right
  PlanarTree trunk;
};
std::vector<PlanarCut> planar_admissible_cuts(const PlanarTree& t);

LinComb<Tensor<OrderedForest>> foissy_coproduct(const OrderedForest& f);
LinComb<OrderedForest> foissy_product(const OrderedForest& a, const OrderedForest& b);
LinComb<OrderedForest> foissy_antipode(const OrderedForest& f);
HopfStructure<OrderedForest> foissy_hopf();

// --- characters ---

using TreeValues = std::function<Rational(const RootedTree&)>;

// Multiplicative extension: f(I) = 1, f(t1...tn) = f(t1)...f(tn).
Functional<Forest> character_from_trees(TreeValues on_trees);
// Infinitesimal extension: g(t) on single trees, 0 on I and on products.
Functional<Forest> infinitesimal_from_trees(TreeValues on_trees);
Functional<Forest> ck_counit_functional();
Functional<Forest> char_convolution(Functional<Forest> f, Functional<Forest> g);
// exp*(g) = sum_k g^{*k} / k!; the sum is finite on each forest. Throws
// DomainError when g(I) != 0.
Functional<Forest> char_exp(Functional<Forest> g);

// --- universal cocycle morphism ---

// Target Hopf algebra with one cocycle L_a per label (label 0 for unlabeled
// vertices).
template <class T>
struct CocycleTarget {
  T unit;
  Product<T> product;
  Coproduct<T> coproduct;
  std::function<LinComb<T>(int label, const T&)> cocycle;
};

// Throws DomainError naming the first probe x on which
// D L(x) = L(x) (x) 1 + (id (x) L) D(x) fails.
template <class T>
void validate_cocycle(const CocycleTarget<T>& h, int label, const std::vector<T>& probes) {
  for (const T& x : probes) {
    LinComb<T> lx = h.cocycle(label, x);
    LinComb<Tensor<T>> lhs = linear_map(lx, h.coproduct);
    LinComb<Tensor<T>> rhs;
    for (const auto& [b, c] : lx) rhs.add(Tensor<T>{b, h.unit}, c);
    for (const auto& [t, c] : h.coproduct(x))
      for (const auto& [b, cb] : h.cocycle(label, t.right)) rhs.add(Tensor<T>{t.left, b}, c * cb);
    if (lhs != rhs)
      throw DomainError("cocycle law fails for label " + std::to_string(label) + " on " + to_string(x));
  }
}

// The algebra morphism with psi(B+_a(u)) = L_a(psi(u)). With probes, every
// label occurring in u is validated first.
template <class T>
LinComb<T> universal_cocycle_map(const CocycleTarget<T>& h, const Forest& u,
                                 const std::vector<T>* probes = nullptr) {
  if (probes) {
    std::set<int> labels;
    std::function<void(const RootedTree&)> collect = [&](const RootedTree& t) {
      labels.insert(t.label());
      for (const auto& c : t.children()) collect(c);
    };
    for (const auto& t : u.trees()) collect(t);
    for (int a : labels) validate_cocycle(h, a, *probes);
  }
  LinComb<T> out(h.unit);
  for (const auto& t : u.trees()) {
    LinComb<T> inner = universal_cocycle_map(h, branches(t));
    LinComb<T> image = linear_map(inner, [&](const T& x) { return h.cocycle(t.label(), x); });
    out = bilinear_map(out, image, h.product);
  }
  return out;
}

template <class T>
LinComb<T> universal_cocycle_map(const CocycleTarget<T>& h, const CKElement& x) {
  return linear_map(x, [&](const Forest& u) { return universal_cocycle_map(h, u); });
}

}  // namespace hopf

#endif
