#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "hopf/linalg.hpp"
#include "hopf/lyndon_hall.hpp"
#include "hopf/word_hopf.hpp"
#include "util.hpp"

using namespace hopf;
using namespace testutil;

namespace {

// Letter order with f_a < f_b iff a > b, lexicographic with prefixes first.
bool naive_less(const Word& u, const Word& v) {
  for (std::size_t i = 0; i < std::min(u.length(), v.length()); ++i)
    if (u[i] != v[i]) return u[i] > v[i];
  return u.length() < v.length();
}

// Strictly smaller than each proper rotation (primitive words only).
bool naive_lyndon(const Word& w) {
  std::size_t n = w.length();
  for (std::size_t k = 1; k < n; ++k) {
    Word rot = w.slice(k, n) + w.slice(0, k);
    if (!naive_less(w, rot)) return false;
  }
  return n > 0;
}

// Degree-n part of the free Lie algebra, spanned by right-normed brackets
// [f_k, x] with x in degree n - k.
std::map<long, std::size_t> free_lie_dimensions(long max_weight) {
  std::map<long, std::vector<WordElement>> basis;
  std::map<long, std::size_t> dims;
  for (long n = 1; n <= max_weight; ++n) {
    RowEchelon<Word> ech;
    std::vector<WordElement> kept;
    auto offer = [&](const WordElement& x) {
      if (ech.insert(x)) kept.push_back(x);
    };
    offer(WordElement(Word{static_cast<int>(n)}));
    for (long k = 1; k < n; ++k)
      for (const auto& x : basis[n - k]) offer(lie_bracket(WordElement(Word{static_cast<int>(k)}), x));
    dims[n] = ech.rank();
    basis[n] = std::move(kept);
  }
  return dims;
}

}  // namespace

TEST_CASE("letter and word order") {
  CHECK(letter_less(2, 1));
  CHECK(letter_less(3, 2));
  CHECK_FALSE(letter_less(1, 1));
  CHECK(alpha_less(W("f2.f1"), W("f1")));
  CHECK(alpha_less(W("f1.f1"), W("f1.f1.f2")));
  CHECK(alpha_less(W("f1.f2"), W("f1.f1")));
  for (const auto& u : words_up_to_weight(4))
    for (const auto& v : words_up_to_weight(4)) CHECK(alpha_less(u, v) == naive_less(u, v));
}

TEST_CASE("lyndon words") {
  CHECK(lyndon_of_weight(2) == std::vector<Word>{W("f2")});
  CHECK(lyndon_of_weight(3).size() == 2);
  auto four = lyndon_of_weight(4);
  CHECK(std::set<Word>(four.begin(), four.end()) == std::set<Word>{W("f4"), W("f3.f1"), W("f2.f1.f1")});
  for (long n = 1; n <= 7; ++n) {
    std::set<Word> oracle;
    for (const auto& w : words_of_weight(n))
      if (naive_lyndon(w)) oracle.insert(w);
    auto got = lyndon_of_weight(n);
    CHECK(std::set<Word>(got.begin(), got.end()) == oracle);
    for (const auto& w : words_of_weight(n)) CHECK(is_lyndon(w) == naive_lyndon(w));
  }
}

TEST_CASE("lyndon counts match free lie dimensions") {
  auto dims = free_lie_dimensions(6);
  const std::size_t expected[] = {1, 1, 2, 3, 6, 9};
  for (long n = 1; n <= 6; ++n) {
    CHECK(dims[n] == expected[n - 1]);
    CHECK(lyndon_of_weight(n).size() == dims[n]);
  }
  CHECK(lyndon_generate(6).size() == 22);
}

TEST_CASE("lyndon factorization") {
  CHECK(lyndon_factorize(W("f2.f1")) == std::vector<Word>{W("f2.f1")});
  CHECK(lyndon_factorize(W("f1.f2")) == std::vector<Word>{W("f1"), W("f2")});
  CHECK(lyndon_factorize(W("f1.f1")) == std::vector<Word>{W("f1"), W("f1")});
  for (const auto& w : words_up_to_weight(7)) {
    auto factors = lyndon_factorize(w);
    Word joined;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      CHECK(naive_lyndon(factors[i]));
      if (i) CHECK_FALSE(naive_less(factors[i - 1], factors[i]));
      joined = joined + factors[i];
    }
    CHECK(joined == w);
  }
}

TEST_CASE("standard factorization") {
  for (long n = 2; n <= 7; ++n)
    for (const auto& w : lyndon_of_weight(n)) {
      if (w.length() < 2) continue;
      auto [u, v] = standard_factorization(w);
      CHECK(u + v == w);
      CHECK(naive_lyndon(u));
      CHECK(naive_lyndon(v));
      for (std::size_t k = 1; k < w.length(); ++k)
        if (naive_lyndon(w.slice(k, w.length()))) CHECK(w.length() - k <= v.length());
    }
}

TEST_CASE("hall trees") {
  CHECK(hall_tree_of_lyndon(W("f2")).tree == T("f2"));
  auto t21 = hall_tree_of_lyndon(W("f2.f1"));
  CHECK(t21.tree == T("f2[f1]"));
  auto d = standard_decomposition(t21);
  REQUIRE(d.has_value());
  CHECK(d->first.tree == T("f2"));
  CHECK(d->second.tree == T("f1"));
  CHECK(hall_tree_of_lyndon(W("f2.f1.f1")).tree == T("f2[f1,f1]"));
  CHECK_FALSE(standard_decomposition(hall_tree_of_lyndon(W("f3"))).has_value());
  for (const auto& h : hall_trees(7)) {
    CHECK(hall_tree_of_lyndon(h.foliage).foliage == h.foliage);
    CHECK(as_hall_tree(h.tree).has_value());
    if (auto sd = standard_decomposition(h)) {
      CHECK(sd->first.foliage + sd->second.foliage == h.foliage);
      CHECK(graft(sd->first.tree, Forest{sd->second.tree}) == h.tree);
      CHECK(sd->first < sd->second);
    }
  }
  CHECK_FALSE(as_hall_tree(T("f1[f2]")).has_value());
}

TEST_CASE("hall set axioms") {
  CHECK(check_hall_axioms(5).empty());
  CHECK(check_hall_axioms(5, true).empty());
}

TEST_CASE("xi is injective on hall forests") {
  for (long n = 1; n <= 5; ++n) {
    std::set<RootedTree> images;
    auto forests = hall_forests_of_weight(n);
    for (const auto& u : forests) images.insert(xi(u));
    CHECK(images.size() == forests.size());
  }
  auto single = hall_forest_of_word(W("f2.f1"));
  CHECK(xi(single) == T("f2[f1]"));
  CHECK_THROWS(xi(HallForest{}));
}

TEST_CASE("hall polynomials") {
  CHECK(hall_polynomial(hall_tree_of_lyndon(W("f1"))) == WordElement(W("f1")));
  CHECK(hall_polynomial(hall_tree_of_lyndon(W("f2.f1"))) == lc<Word>({{W("f1.f2"), 1}, {W("f2.f1"), -1}}));
  CHECK(hall_polynomial(hall_tree_of_lyndon(W("f2.f1")), Orientation::Flipped) ==
        lc<Word>({{W("f1.f2"), -1}, {W("f2.f1"), 1}}));
  for (const auto& h : hall_trees(6)) CHECK(is_lie_polynomial(hall_polynomial(h)));
  // E(u) = E(u2) E(u1) for u = f1 f2 (decreasing Hall order: f1 > f2).
  auto u = hall_forest_of_word(W("f1.f2"));
  CHECK(pbw_element(u) == WordElement(W("f2.f1")));
}

TEST_CASE("pbw rank") {
  for (long n = 1; n <= 6; ++n) {
    std::vector<WordElement> vs;
    for (const auto& u : hall_forests_of_weight(n)) vs.push_back(pbw_element(u));
    CHECK(vs.size() == words_of_weight(n).size());
    CHECK(rank_of(vs) == (std::size_t{1} << (n - 1)));
  }
}

TEST_CASE("lyndon polynomial decomposition") {
  using LM = LyndonMonomial;
  CHECK(lyndon_poly_decompose(WordElement(W("f2.f1"))) == LinComb<LM>(LM{{W("f2.f1")}}));
  CHECK(lyndon_poly_decompose(WordElement(W("f1.f2"))) ==
        lc<LM>({{LM{{W("f1"), W("f2")}}, 1}, {LM{{W("f2.f1")}}, -1}}));
  CHECK(lyndon_poly_decompose(WordElement(W("f1.f1"))) == lc<LM>({{LM{{W("f1"), W("f1")}}, q(1, 2)}}));
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto words = words_up_to_weight(5);
  for (int trial = 0; trial < 20; ++trial) {
    WordElement x;
    for (const auto& w : words)
      if (coeff(rng()) > 1) x.add(w, coeff(rng()));
    CHECK(lyndon_poly_expand(lyndon_poly_decompose(x)) == x);
  }
}
