#ifndef HOPF_TESTS_UTIL_HPP
#define HOPF_TESTS_UTIL_HPP

#include <initializer_list>
#include <random>
#include <string_view>
#include <utility>

#include "hopf/lincomb.hpp"
#include "hopf/tree.hpp"
#include "hopf/word.hpp"

namespace testutil {

using namespace hopf;

inline RootedTree T(std::string_view s) { return parse_tree(s); }
inline Forest F(std::string_view s) { return parse_forest(s); }
inline PlanarTree P(std::string_view s) { return parse_planar_tree(s); }
inline OrderedForest OF(std::string_view s) { return parse_ordered_forest(s); }
inline Word W(std::string_view s) { return parse_word(s); }

template <class B>
LinComb<B> lc(std::initializer_list<std::pair<B, Rational>> terms) {
  LinComb<B> out;
  for (const auto& [b, c] : terms) out.add(b, c);
  return out;
}

template <class B>
Tensor<B> tp(B l, B r) {
  return Tensor<B>{std::move(l), std::move(r)};
}

inline Rational q(long n, long d = 1) { return Rational(n, d); }

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611);
  return gen;
}

}  // namespace testutil

#endif
