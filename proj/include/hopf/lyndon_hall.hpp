#ifndef HOPF_LYNDON_HALL_HPP
#define HOPF_LYNDON_HALL_HPP

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/tree.hpp"
#include "hopf/word.hpp"
#include "hopf/word_hopf.hpp"

namespace hopf {

// f_n < f_m iff n > m, so f1 is the largest letter.
bool letter_less(int a, int b);
// Alphabetical order from letter_less; a proper prefix is smaller.
std::strong_ordering word_compare(const Word& u, const Word& v);
inline bool alpha_less(const Word& u, const Word& v) { return word_compare(u, v) < 0; }

// w is nonempty and strictly smaller than each proper nonempty suffix.
bool is_lyndon(const Word& w);
// Lyndon words of weight <= max_weight, in alphabetical order.
std::vector<Word> lyndon_generate(long max_weight);
std::vector<Word> lyndon_of_weight(long weight);
// Nonincreasing Lyndon factors whose concatenation is w.
std::vector<Word> lyndon_factorize(const Word& w);
// w = uv with v the longest proper Lyndon suffix. Requires |w| >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);

// Labeled tree of the Hall set induced by Lyndon words, with its foliage.
// Ordered alphabetically by foliage.
struct HallTree {
  RootedTree tree;
  Word foliage;

  friend std::strong_ordering operator<=>(const HallTree& a, const HallTree& b) {
    return word_compare(a.foliage, b.foliage);
  }
  friend bool operator==(const HallTree& a, const HallTree& b) { return a.foliage == b.foliage; }
};

// A letter gives a single labeled vertex; otherwise tree(v) becomes an extra
// root branch of tree(u) for the standard factorization w = uv.
HallTree hall_tree_of_lyndon(const Word& w);
// (t1, t2) with t = t1 o t2 and foliage(t) = foliage(t1) foliage(t2); nullopt
// for single vertices.
std::optional<std::pair<HallTree, HallTree>> standard_decomposition(const HallTree& t);
// Hall trees of weight <= max_weight, increasing in the Hall order.
std::vector<HallTree> hall_trees(long max_weight);
std::optional<HallTree> as_hall_tree(const RootedTree& t);

// t_1^{r_1} ... t_m^{r_m} with t_1 > ... > t_m.
struct HallForest {
  std::vector<std::pair<HallTree, int>> factors;

  bool empty() const { return factors.empty(); }
  long weight() const;
  friend bool operator==(const HallForest&, const HallForest&) = default;
};

// The Hall forest of the Lyndon factorization of w (one per word).
HallForest hall_forest_of_word(const Word& w);
std::vector<HallForest> hall_forests_of_weight(long weight);
Forest to_forest(const HallForest& u);
std::string to_string(const HallForest& u);

// t_1^{o r_1} o (t_2^{o r_2} ... t_m^{o r_m}). Throws on the empty forest.
RootedTree xi(const HallForest& u);

// Bracket orientation of Hall polynomials: Standard is E(t) = [E(t2), E(t1)],
// Flipped is [E(t1), E(t2)].
enum class Orientation { Standard, Flipped };

// Dual word element with E(f_k leaf) = e_{-k}.
WordElement hall_polynomial(const HallTree& t, Orientation o = Orientation::Standard);
// E(u) = E(u2) E(u1), with u2 the smallest tree of u.
WordElement pbw_element(const HallForest& u, Orientation o = Orientation::Standard);

// Violations of the Hall set axioms among labeled trees of weight <=
// max_weight, one line each. The recursive axiom removes one copy of the
// smallest branch; literal = true removes all copies instead.
std::vector<std::string> check_hall_axioms(long max_weight, bool literal = false);

// Monomial in Lyndon words under the shuffle product; factors nonincreasing.
struct LyndonMonomial {
  std::vector<Word> factors;

  long weight() const;
  friend std::strong_ordering operator<=>(const LyndonMonomial& a, const LyndonMonomial& b);
  friend bool operator==(const LyndonMonomial&, const LyndonMonomial&) = default;
};
// "[f1]^2[f2.f1]"; the empty monomial prints "1".
std::string to_string(const LyndonMonomial& m);

// Unique expression of x (shuffle algebra) as a polynomial in Lyndon words.
LinComb<LyndonMonomial> lyndon_poly_decompose(const WordElement& x);
WordElement lyndon_poly_expand(const LinComb<LyndonMonomial>& p);

}  // namespace hopf

#endif
