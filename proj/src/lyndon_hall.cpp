#include "hopf/lyndon_hall.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cache.hpp"
#include "hopf/error.hpp"

namespace hopf {

bool letter_less(int a, int b) { return a > b; }

std::strong_ordering word_compare(const Word& u, const Word& v) {
  std::size_t n = std::min(u.length(), v.length());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == v[i]) continue;
    return letter_less(u[i], v[i]) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return u.length() <=> v.length();
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.length(); ++k)
    if (word_compare(w, w.slice(k, w.length())) >= 0) return false;
  return true;
}

std::vector<Word> lyndon_of_weight(long weight) {
  std::vector<Word> out;
  for (const Word& w : words_of_weight(weight))
    if (is_lyndon(w)) out.push_back(w);
  std::sort(out.begin(), out.end(), alpha_less);
  return out;
}

std::vector<Word> lyndon_generate(long max_weight) {
  std::vector<Word> out;
  for (long n = 1; n <= max_weight; ++n) {
    auto ws = lyndon_of_weight(n);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  std::sort(out.begin(), out.end(), alpha_less);
  return out;
}

std::vector<Word> lyndon_factorize(const Word& w) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < w.length()) {
    std::size_t j = w.length();
    while (!is_lyndon(w.slice(i, j))) --j;
    out.push_back(w.slice(i, j));
    i = j;
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.length() < 2) throw DomainError("standard factorization needs at least two letters: " + to_string(w));
  for (std::size_t k = 1; k < w.length(); ++k) {
    Word v = w.slice(k, w.length());
    if (is_lyndon(v)) return {w.slice(0, k), v};
  }
  throw Error("no proper Lyndon suffix in " + to_string(w));
}

HallTree hall_tree_of_lyndon(const Word& w) {
  if (!is_lyndon(w)) throw DomainError("not a Lyndon word: " + to_string(w));
  static detail::SyncCache<Word, HallTree> cache;
  return cache.get(w, [&] {
    if (w.length() == 1) return HallTree{RootedTree(w[0]), w};
    auto [u, v] = standard_factorization(w);
    return HallTree{graft(hall_tree_of_lyndon(u).tree, Forest{hall_tree_of_lyndon(v).tree}), w};
  });
}

std::optional<std::pair<HallTree, HallTree>> standard_decomposition(const HallTree& t) {
  if (t.foliage.length() < 2) return std::nullopt;
  auto [u, v] = standard_factorization(t.foliage);
  return std::make_pair(hall_tree_of_lyndon(u), hall_tree_of_lyndon(v));
}

std::vector<HallTree> hall_trees(long max_weight) {
  std::vector<HallTree> out;
  for (const Word& w : lyndon_generate(max_weight)) out.push_back(hall_tree_of_lyndon(w));
  return out;
}

std::optional<HallTree> as_hall_tree(const RootedTree& t) {
  if (!t.fully_labeled()) return std::nullopt;
  for (const Word& w : lyndon_of_weight(t.weight())) {
    HallTree h = hall_tree_of_lyndon(w);
    if (h.tree == t) return h;
  }
  return std::nullopt;
}

long HallForest::weight() const {
  long w = 0;
  for (const auto& [t, r] : factors) w += r * t.foliage.weight();
  return w;
}

HallForest hall_forest_of_word(const Word& w) {
  HallForest out;
  for (const Word& l : lyndon_factorize(w)) {
    if (!out.factors.empty() && out.factors.back().first.foliage == l)
      ++out.factors.back().second;
    else
      out.factors.emplace_back(hall_tree_of_lyndon(l), 1);
  }
  return out;
}

std::vector<HallForest> hall_forests_of_weight(long weight) {
  std::vector<HallForest> out;
  for (const Word& w : words_of_weight(weight)) out.push_back(hall_forest_of_word(w));
  return out;
}

Forest to_forest(const HallForest& u) {
  std::vector<RootedTree> trees;
  for (const auto& [t, r] : u.factors)
    for (int i = 0; i < r; ++i) trees.push_back(t.tree);
  return Forest(std::move(trees));
}

std::string to_string(const HallForest& u) {
  if (u.empty()) return "I";
  std::string out;
  for (const auto& [t, r] : u.factors) {
    if (!out.empty()) out += ' ';
    out += t.tree.code();
    if (r > 1) out += "^" + std::to_string(r);
  }
  return out;
}

RootedTree xi(const HallForest& u) {
  if (u.empty()) throw DomainError("xi is undefined on the empty forest");
  std::vector<RootedTree> rest;
  for (std::size_t i = 1; i < u.factors.size(); ++i)
    rest.push_back(graft_power(u.factors[i].first.tree, u.factors[i].second));
  return graft(graft_power(u.factors[0].first.tree, u.factors[0].second), Forest(std::move(rest)));
}

WordElement hall_polynomial(const HallTree& t, Orientation o) {
  static detail::SyncCache<std::pair<Word, int>, WordElement> cache;
  return cache.get({t.foliage, static_cast<int>(o)}, [&] {
    auto d = standard_decomposition(t);
    if (!d) return WordElement(t.foliage);
    WordElement e1 = hall_polynomial(d->first, o), e2 = hall_polynomial(d->second, o);
    return o == Orientation::Standard ? lie_bracket(e2, e1) : lie_bracket(e1, e2);
  });
}

WordElement pbw_element(const HallForest& u, Orientation o) {
  if (u.empty()) return WordElement(Word());
  HallForest rest = u;
  HallTree smallest = rest.factors.back().first;
  if (--rest.factors.back().second == 0) rest.factors.pop_back();
  return concat(hall_polynomial(smallest, o), pbw_element(rest, o));
}

std::vector<std::string> check_hall_axioms(long max_weight, bool literal) {
  std::vector<std::string> out;
  std::vector<HallTree> hall = hall_trees(max_weight);
  std::map<RootedTree, HallTree> by_tree;
  std::set<Word> foliages;
  for (const auto& h : hall) {
    if (!by_tree.emplace(h.tree, h).second) out.push_back("order: two Hall words share the tree " + h.tree.code());
    if (!foliages.insert(h.foliage).second) out.push_back("order: repeated foliage " + to_string(h.foliage));
    if (auto d = standard_decomposition(h)) {
      if (d->first.foliage + d->second.foliage != h.foliage)
        out.push_back("foliage: " + h.tree.code() + " is not f(t1) f(t2)");
      if (graft(d->first.tree, Forest{d->second.tree}) != h.tree)
        out.push_back("decomposition: " + h.tree.code() + " is not t1 o t2");
    }
  }
  auto in_hall = [&](const RootedTree& t) -> const HallTree* {
    auto it = by_tree.find(t);
    return it == by_tree.end() ? nullptr : &it->second;
  };

  for (long a = 1; a <= max_weight; ++a)
    if (!in_hall(RootedTree(static_cast<int>(a)))) out.push_back("letters: f" + std::to_string(a) + " missing");

  for (long w = 2; w <= max_weight; ++w) {
    for (const RootedTree& t : labeled_trees_of_weight(w)) {
      if (t.children().empty()) continue;
      std::vector<const HallTree*> bs;
      for (const auto& c : t.children()) bs.push_back(in_hall(c));
      if (std::any_of(bs.begin(), bs.end(), [](const HallTree* p) { return p == nullptr; })) continue;
      const HallTree* smallest = *std::min_element(bs.begin(), bs.end(),
                                                   [](const HallTree* x, const HallTree* y) { return *x < *y; });
      std::vector<RootedTree> kept;
      bool removed = false;
      for (const auto& c : t.children()) {
        if (c == smallest->tree && (literal || !removed)) {
          removed = true;
          continue;
        }
        kept.push_back(c);
      }
      RootedTree reduced(t.label(), std::move(kept));
      const HallTree* r = in_hall(reduced);
      bool rhs = r && *smallest > *r;
      bool lhs = in_hall(t) != nullptr;
      if (lhs != rhs)
        out.push_back("recursion: " + t.code() + (lhs ? " is" : " is not") + " Hall but the reduced tree " +
                      reduced.code() + (rhs ? " qualifies" : " does not qualify"));
    }
  }

  for (const auto& h : hall)
    for (const auto& c : h.tree.children()) {
      const HallTree* b = in_hall(c);
      if (!b || !(*b > h)) out.push_back("branches: " + c.code() + " is not a Hall tree above " + h.tree.code());
    }
  return out;
}

long LyndonMonomial::weight() const {
  long w = 0;
  for (const auto& f : factors) w += f.weight();
  return w;
}

std::strong_ordering operator<=>(const LyndonMonomial& a, const LyndonMonomial& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.factors.begin(), a.factors.end(), b.factors.begin(),
                                                b.factors.end());
}

std::string to_string(const LyndonMonomial& m) {
  if (m.factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.factors.size();) {
    std::size_t j = i;
    while (j < m.factors.size() && m.factors[j] == m.factors[i]) ++j;
    out += "[" + to_string(m.factors[i]) + "]";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

WordElement expand_monomial(const LyndonMonomial& m) {
  WordElement out{Word()};
  for (const Word& f : m.factors) out = quasi_shuffle(out, WordElement(f), Pairing::Zero);
  return out;
}

}  // namespace

LinComb<LyndonMonomial> lyndon_poly_decompose(const WordElement& x) {
  LinComb<LyndonMonomial> out;
  WordElement rest = x;
  while (!rest.empty()) {
    auto top = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it)
      if (word_compare(it->first, top->first) > 0) top = it;
    Word w = top->first;
    Rational c = top->second;
    LyndonMonomial m{w.empty() ? std::vector<Word>{} : lyndon_factorize(w)};
    WordElement p = expand_monomial(m);
    Rational lead = p.coeff(w);
    if (lead.is_zero()) throw Error("lyndon_poly_decompose: leading word missing from " + to_string(w));
    Rational q = c / lead;
    out.add(m, q);
    rest.add_scaled(p, -q);
  }
  return out;
}

WordElement lyndon_poly_expand(const LinComb<LyndonMonomial>& p) {
  return linear_map(p, [](const LyndonMonomial& m) { return expand_monomial(m); });
}

}  // namespace hopf
