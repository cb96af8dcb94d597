#include <doctest.h>

#include <set>
#include <vector>

#include "hopf/diagrams.hpp"
#include "hopf/linalg.hpp"
#include "hopf/morphisms.hpp"
#include "hopf/tree_hopf.hpp"
#include "hopf/word_hopf.hpp"
#include "util.hpp"

using namespace hopf;
using namespace testutil;

namespace {

Word C(std::string_view s) { return parse_composition(s); }
Word Z(std::string_view s) { return parse_nsym_word(s); }

Rational random_coeff(const Word& w) {
  // deterministic pseudo-random value per word
  long h = 7;
  for (int a : w.letters()) h = (h * 31 + a) % 97;
  return Rational(h - 40, 1 + static_cast<long>(w.length()));
}

}  // namespace

TEST_CASE("pi examples") {
  CHECK(pi(F("f2[f1]")) == WordElement(W("f1.f2")));
  CHECK(pi(F("f1[f2,f3]")) == lc<Word>({{W("f2.f3.f1"), 1}, {W("f3.f2.f1"), 1}}));
  CHECK(pi(F("f4")) == WordElement(W("f4")));
  CHECK(pi(Forest{}) == WordElement(Word{}));
  CHECK_THROWS_AS(pi(F("[]")), DomainError);
  for (const auto& w : words_up_to_weight(5)) CHECK(pi(Forest{labeled_ladder(w)}) == WordElement(w));
}

TEST_CASE("pi is a cocycle morphism") {
  auto forests = labeled_forests_up_to(4);
  for (const auto& u : forests) {
    for (int a = 1; a <= 2; ++a) {
      WordElement expected;
      for (const auto& [w, c] : pi(u)) expected.add(w + Word{a}, c);
      CHECK(pi(Forest{bplus(u, a)}) == expected);
    }
    CHECK(universal_cocycle_map(pi_cocycle_target(), u) == pi(u));
  }
  for (const auto& u : labeled_forests_up_to(2))
    for (const auto& v : labeled_forests_up_to(3)) {
      WordElement prod;
      for (const auto& [x, cx] : pi(u))
        for (const auto& [y, cy] : pi(v)) prod.add_scaled(shuffle(x, y), cx * cy);
      CHECK(pi(u * v) == prod);
    }
}

TEST_CASE("alpha through pi") {
  CHECK(alpha_of(F("f3"), [](const Word&) { return Rational(5); }) == q(5));
  auto two = [](const Word& w) {
    if (w == Word{2, 3, 1}) return Rational(1);
    if (w == Word{3, 2, 1}) return Rational(2);
    return Rational(0);
  };
  CHECK(alpha_of(F("f1[f2,f3]"), two) == q(3));
  for (const auto& u : labeled_forests_up_to(4)) CHECK(alpha_of(u, random_coeff) == alpha_hat(pi(u), random_coeff));
}

TEST_CASE("kernel generators") {
  auto gens = kernel_generators(5);
  std::set<std::string> families;
  for (const auto& g : gens) {
    families.insert(g.family);
    CHECK(pi(g.element).empty());
    CHECK_FALSE(g.element.empty());
  }
  CHECK(families == std::set<std::string>{"product", "pair", "triple-graft", "triple-product"});
  // t o z + z o t - tz for t = f1, z = f2
  CKElement pair = lc<Forest>({{F("f2[f1]"), 1}, {F("f1[f2]"), 1}, {F("f1 f2"), -1}});
  bool found = false;
  for (const auto& g : kernel_generators(3)) found = found || g.element == pair || g.element == -pair;
  CHECK(found);
}

TEST_CASE("qsym products") {
  CHECK(qsym_product(C("M(1)"), C("M(1)")) == lc<Word>({{C("M(1,1)"), 2}, {C("M(2)"), 1}}));
  CHECK(qsym_product(C("M(2)"), C("M(1)")) == lc<Word>({{C("M(2,1)"), 1}, {C("M(1,2)"), 1}, {C("M(3)"), 1}}));
  for (const auto& a : words_up_to_weight(3)) {
    CHECK(qsym_product(Word{}, a) == QSymElement(a));
    for (const auto& b : words_up_to_weight(3))
      CHECK(qsym_product(a, b) == quasi_shuffle(a, b, Pairing::Additive));
  }
  CHECK(qsym_basis_string(C("M()")) == "M()");
  CHECK(nsym_basis_string(Z("z1z2")) == "z1z2");
  CHECK_THROWS_AS(parse_composition("M(1,"), ParseError);
}

TEST_CASE("symmetric functions") {
  const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11};
  for (long n = 0; n <= 6; ++n) CHECK(partitions(n).size() == counts[n]);
  CHECK(monomial_symmetric(Word{2, 1}) == lc<Word>({{Word{2, 1}, 1}, {Word{1, 2}, 1}}));
  CHECK(elementary(Word{1, 1}) == monomial_symmetric(Word{2}) + 2 * monomial_symmetric(Word{1, 1}));
  CHECK(to_elementary_basis(monomial_symmetric(Word{2})) == lc<Word>({{Word{1, 1}, 1}, {Word{2}, -2}}));
  for (long n = 1; n <= 5; ++n)
    for (const auto& lam : partitions(n)) {
      QSymElement back;
      for (const auto& [mu, c] : to_elementary_basis(monomial_symmetric(lam))) back.add_scaled(elementary(mu), c);
      CHECK(back == monomial_symmetric(lam));
    }
  CHECK_THROWS_AS(to_elementary_basis(QSymElement(C("M(1,2)"))), DomainError);
}

TEST_CASE("theorem 5 maps") {
  for (int n = 1; n <= 4; ++n) {
    NSymElement zn(Word{n});
    CHECK(alpha2(alpha1(zn)) == CKElement(Forest{ladder(n)}));
    CHECK(alpha4(alpha3(zn)) == CKElement(Forest{ladder(n)}));
    CHECK(alpha3(zn) == QSymElement(Word(std::vector<int>(n, 1))));
  }
  CHECK(alpha2_star(GLElement(T("[[],[]]"))) == lc<PlanarTree>({{P("[[],[]]"), 2}}));
  CHECK(alpha4_star(GLElement(T("[[[]]]"))) == monomial_symmetric(Word{2}));
  CHECK(alpha4_star(GLElement(T("[[],[]]"))) == 2 * monomial_symmetric(Word{1, 1}));
}

TEST_CASE("zhao") {
  CHECK(zhao_eps(0) == GLElement(T("[]")));
  CHECK(zhao_eps(1) == GLElement(T("[[]]")));
  CHECK(zhao_eps(2) == lc<RootedTree>({{T("[[],[]]"), q(1, 2)}}));
  CHECK(zhao_k(2) == lc<RootedTree>({{T("[[[]]]"), 1}, {T("[[],[]]"), q(1, 2)}}));
  CHECK(zhao_Zstar(F("[[]]")) == QSymElement(C("M(1,1)")));
  CHECK(zhao_Zstar(F("[[],[]]")) == lc<Word>({{C("M(1,1,1)"), 2}, {C("M(2,1)"), 1}}));
  CHECK(zhao_Zstar(Forest{}) == QSymElement(Word{}));
  CHECK(aplus(QSymElement(C("M(2)"))) == QSymElement(C("M(2,1)")));
  CHECK(zhao_Zu(WordElement(W("f2.f1"))) == QSymElement(C("M(1,1)")));
  CHECK(zhao_Zu_star(NSymElement(Z("z1z2"))) == WordElement(W("f1.f2")));
  for (long n = 1; n <= 4; ++n) {
    std::vector<GLElement> images;
    for (const auto& w : words_of_weight(n)) images.push_back(zhao_Z(NSymElement(w)));
    CHECK(rank_of(images) == images.size());
  }
  // Z* is multiplicative and intertwines B+ with A+.
  auto forests = unlabeled_forests_up_to(3);
  for (const auto& u : forests) {
    CHECK(zhao_Zstar(Forest{bplus(u)}) == aplus(zhao_Zstar(u)));
    for (const auto& v : forests) CHECK(zhao_Zstar(u * v) == qsym_product(zhao_Zstar(u), zhao_Zstar(v)));
  }
}

TEST_CASE("rho and F") {
  CHECK(rho(F("[]"), 3) == lc<Word>({{W("f1"), 1}, {W("f2"), 1}, {W("f3"), 1}}));
  CHECK(rho_star(WordElement(W("f2"))) == GLElement(T("[[]]")));
  CHECK(F(WordElement(W("f1.f2"))) == GLElement(bplus(Forest{labeled_ladder(W("f1.f2"))})));
  CHECK(F_star(F("f3")) == WordElement(W("f3")));
  CHECK(F_star(F("f1[f1,f2]")) == lc<Word>({{W("f1.f2.f1"), 1}, {W("f2.f1.f1"), 1}}));
  CHECK(beta4(QSymElement(C("M(1,1)")), 2) == WordElement(W("f1.f1")));
  CHECK(beta2_star(WordElement(W("f2"))) == LinComb<PlanarTree>(P("[[]]")));
  CHECK(beta2(LinComb<OrderedForest>(OF("[[]]")), 2) == WordElement(W("f1.f1")));
  CHECK(truncate(lc<Word>({{W("f1"), 1}, {W("f3"), 1}}), 2) == WordElement(W("f1")));
}

TEST_CASE("diagram squares") {
  auto diagrams = standard_diagrams(4);
  std::set<std::string> strict;
  for (const auto& d : diagrams) {
    auto rows = run_diagram(d, 4);
    CHECK_FALSE(rows.empty());
    if (!d.report_only) {
      strict.insert(d.name);
      CHECK_MESSAGE(all_strict_pass(rows), d.name);
    }
  }
  CHECK(strict == std::set<std::string>{"thm5-square", "thm5-dual-square", "prop-diag-square",
                                        "prop-diag-dual-square"});
  Diagram broken{"broken", Space::NSym, {Value{Space::NSym, NSymElement(Word{1})}}, {"alpha1", "alpha3"}, {"alpha3"}};
  CHECK_THROWS_AS(run_diagram(broken, 4), DomainError);
  CHECK_FALSE(f_structure_report(3).empty());
}
