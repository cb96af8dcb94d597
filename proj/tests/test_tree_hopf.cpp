#include <doctest.h>

#include <vector>

#include "hopf/tree_hopf.hpp"
#include "util.hpp"

using namespace hopf;
using namespace testutil;

namespace {

using FT = Tensor<Forest>;

// Splittings of the vertex set into a descendant-closed part and the rest.
LinComb<FT> brute_poset_coproduct(const Forest& u) {
  FlatForest flat = flatten(u);
  int n = static_cast<int>(flat.parent.size());
  std::uint64_t all = (1ull << n) - 1;
  LinComb<FT> out;
  for (std::uint64_t mask = 0; mask <= all; ++mask) {
    bool closed = true;
    for (int v = 0; v < n && closed; ++v)
      if (flat.parent[v] >= 0 && (mask >> flat.parent[v] & 1) && !(mask >> v & 1)) closed = false;
    if (closed) out.add(FT{induced_forest(flat, mask), induced_forest(flat, all & ~mask)}, 1);
  }
  return out;
}

}  // namespace

TEST_CASE("ck coproduct examples") {
  Forest I, dot = F("[]"), l2 = F("[[]]"), cherry = F("[[],[]]");
  CHECK(ck_coproduct(dot) == lc<FT>({{tp(dot, I), 1}, {tp(I, dot), 1}}));
  CHECK(ck_coproduct(l2) == lc<FT>({{tp(l2, I), 1}, {tp(I, l2), 1}, {tp(dot, dot), 1}}));
  CHECK(ck_coproduct(cherry) ==
        lc<FT>({{tp(cherry, I), 1}, {tp(I, cherry), 1}, {tp(dot, l2), 2}, {tp(F("[] []"), dot), 1}}));
}

TEST_CASE("ck coproduct equals the descendant-closed splitting oracle") {
  for (const auto& u : unlabeled_forests_up_to(6)) CHECK(ck_coproduct(u) == brute_poset_coproduct(u));
  for (const auto& u : labeled_forests_up_to(5)) {
    CHECK(ck_coproduct(u) == brute_poset_coproduct(u));
    CHECK(cut_coproduct(u) == poset_coproduct(u));
  }
}

TEST_CASE("ck antipode and counit") {
  Forest I, dot = F("[]"), l2 = F("[[]]");
  CHECK(ck_antipode(dot) == lc<Forest>({{dot, -1}}));
  CHECK(ck_antipode(l2) == lc<Forest>({{l2, -1}, {F("[] []"), 1}}));
  // (S * id)(cherry) = 0
  CKElement s_id;
  for (const auto& [t, c] : ck_coproduct(F("[[],[]]")))
    s_id.add_scaled(ck_product(ck_antipode(t.left), CKElement(t.right)), c);
  CHECK(s_id.empty());
  CHECK(ck_counit(CKElement(I)) == q(1));
  CHECK(ck_counit(CKElement(F("[[],[]]"))) == q(0));
  CHECK(ck_counit(lc<Forest>({{I, 3}, {F("[[],[]]"), 1}})) == q(3));
}

TEST_CASE("ck hopf axioms") {
  CHECK(check_hopf_axioms(ck_hopf(), unlabeled_forests_up_to(5)).empty());
  CHECK(check_hopf_axioms(ck_hopf(), labeled_forests_up_to(4)).empty());
}

TEST_CASE("bplus is a 1-cocycle") {
  for (const auto& u : unlabeled_forests_up_to(5)) CHECK(bplus_cocycle_defect(u).empty());
  for (const auto& u : labeled_forests_up_to(4)) CHECK(bplus_cocycle_defect(u, 2).empty());
}

TEST_CASE("convolution of functionals") {
  auto eps = ck_counit_functional();
  auto ee = char_convolution(eps, eps);
  for (const auto& u : unlabeled_forests_up_to(4)) CHECK(ee(u) == eps(u));
  auto g = infinitesimal_from_trees([](const RootedTree& t) { return Rational(static_cast<long>(t.size())); });
  CHECK(char_convolution(g, g)(F("[]")) == q(0));
  auto e = char_exp(g);
  CHECK(e(F("[]")) == g(F("[]")));
  CHECK(e(F("[] []")) == g(F("[]")) * g(F("[]")));
  CHECK(e(Forest{}) == q(1));
  auto zero = infinitesimal_from_trees([](const RootedTree&) { return Rational(0); });
  for (const auto& u : unlabeled_forests_up_to(4)) CHECK(char_exp(zero)(u) == eps(u));
  CHECK_THROWS_AS(char_exp(eps)(F("[]")), DomainError);
}

TEST_CASE("char_exp of an infinitesimal character is a character") {
  auto g = infinitesimal_from_trees([](const RootedTree& t) { return Rational(1, static_cast<long>(t.size()) + 1); });
  auto e = char_exp(g);
  auto forests = unlabeled_forests_up_to(3);
  for (const auto& u : forests)
    for (const auto& v : forests) CHECK(e(u * v) == e(u) * e(v));
}

TEST_CASE("grossman-larson product") {
  auto dot = T("[]"), l2 = T("[[]]");
  CHECK(gl_product(l2, l2) == lc<RootedTree>({{T("[[],[]]"), 1}, {T("[[[]]]"), 1}}));
  for (const auto& s : unlabeled_trees(4)) CHECK(gl_product(dot, s) == GLElement(s));
  CHECK(gl_product(T("[[],[]]"), l2) ==
        lc<RootedTree>({{T("[[],[],[]]"), 1}, {T("[[],[[]]]"), 2}, {T("[[[],[]]]"), 1}}));
  CHECK(gl_product(T("f1"), T("f2")) == GLElement(T("f2")));
  CHECK(gl_product(T("f1[f3]"), T("f2")) == GLElement(T("f2[f3]")));
}

TEST_CASE("grossman-larson coproduct and axioms") {
  auto dot = T("[]"), l2 = T("[[]]"), cherry = T("[[],[]]");
  using RT = Tensor<RootedTree>;
  CHECK(gl_coproduct(dot) == lc<RT>({{tp(dot, dot), 1}}));
  CHECK(gl_coproduct(l2) == lc<RT>({{tp(l2, dot), 1}, {tp(dot, l2), 1}}));
  CHECK(gl_coproduct(cherry) == lc<RT>({{tp(cherry, dot), 1}, {tp(l2, l2), 2}, {tp(dot, cherry), 1}}));
  std::vector<RootedTree> probes;
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : unlabeled_trees(n)) probes.push_back(t);
  CHECK(check_hopf_axioms(gl_hopf(), probes).empty());
  for (const auto& x : probes)
    for (const auto& y : probes)
      for (const auto& z : unlabeled_trees(2)) {
        if (x.size() + y.size() + z.size() > 7) continue;
        CHECK(gl_product(gl_product(GLElement(x), GLElement(y)), GLElement(z)) ==
              gl_product(GLElement(x), gl_product(GLElement(y), GLElement(z))));
      }
}

TEST_CASE("ck-gl pairing") {
  CHECK(ck_gl_pairing(GLElement(T("[[],[]]")), CKElement(F("[] []"))) == q(2));
  CHECK(ck_gl_pairing(GLElement(T("[[]]")), CKElement(F("[] []"))) == q(0));
  auto l2 = GLElement(T("[[]]"));
  CHECK(ck_gl_pairing(gl_product(l2, l2), CKElement(F("[] []"))) == q(2));
  LinComb<Tensor<RootedTree>> xy(Tensor<RootedTree>{T("[[]]"), T("[[]]")});
  CHECK(ck_gl_pairing(xy, ck_coproduct(F("[] []"))) == q(2));
}

TEST_CASE("planar diamond") {
  auto dot = P("[]");
  CHECK(planar_diamond(bbr_parse("<>"), bbr_parse("<<>>")) ==
        lc<PlanarTree>({{bbr_parse("<><<>>"), 1}, {bbr_parse("<<>><>"), 1}}));
  for (const auto& t : planar_trees(4)) CHECK(planar_diamond(t, dot) == LinComb<PlanarTree>(t));
  using PT = Tensor<PlanarTree>;
  auto c = bbr_parse("<><>"), l = bbr_parse("<>");
  CHECK(planar_diamond_coproduct(c) == lc<PT>({{tp(c, dot), 1}, {tp(l, l), 1}, {tp(dot, c), 1}}));
  std::vector<PlanarTree> probes;
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : planar_trees(n)) probes.push_back(t);
  CHECK(check_hopf_axioms(planar_hopf(), probes).empty());
}

TEST_CASE("foissy") {
  using OT = Tensor<OrderedForest>;
  OrderedForest I, dot = OF("[]"), l2 = OF("[[]]"), cherry = OF("[[],[]]");
  CHECK(foissy_coproduct(dot) == lc<OT>({{tp(dot, I), 1}, {tp(I, dot), 1}}));
  CHECK(foissy_coproduct(l2) == lc<OT>({{tp(l2, I), 1}, {tp(I, l2), 1}, {tp(dot, dot), 1}}));
  CHECK(foissy_coproduct(cherry) ==
        lc<OT>({{tp(cherry, I), 1}, {tp(I, cherry), 1}, {tp(dot, l2), 2}, {tp(OF("[] []"), dot), 1}}));
  CHECK(foissy_product(OF("[[]]"), OF("[]")) != foissy_product(OF("[]"), OF("[[]]")));
  CHECK(check_hopf_axioms(foissy_hopf(), ordered_forests_up_to(5)).empty());
}

TEST_CASE("universal cocycle map into ck with bplus is the identity") {
  CocycleTarget<Forest> ck{Forest{}, [](const Forest& u, const Forest& v) { return ck_product(u, v); },
                           [](const Forest& u) { return ck_coproduct(u); },
                           [](int a, const Forest& u) { return CKElement(Forest{bplus(u, a)}); }};
  auto probes = unlabeled_forests_up_to(3);
  for (const auto& u : unlabeled_forests_up_to(5)) CHECK(universal_cocycle_map(ck, u, &probes) == CKElement(u));
  for (const auto& u : labeled_forests_up_to(4)) CHECK(universal_cocycle_map(ck, u) == CKElement(u));
  CHECK(universal_cocycle_map(ck, Forest{}) == CKElement(Forest{}));
}
