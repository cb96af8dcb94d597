#ifndef HOPF_SINGULAR_FRAME_HPP
#define HOPF_SINGULAR_FRAME_HPP

#include <map>
#include <string>
#include <vector>

#include "hopf/lyndon_hall.hpp"
#include "hopf/tree.hpp"
#include "hopf/word.hpp"

namespace hopf {

// Polynomial in x with exact coefficients; coeffs()[i] multiplies x^i.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  UnivariatePoly(Rational c);  // NOLINT(google-explicit-constructor)
  static UnivariatePoly monomial(int degree, const Rational& c = Rational(1));

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

  UnivariatePoly& operator+=(const UnivariatePoly& o);
  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

  // x -> int_0^x p(s) ds
  UnivariatePoly integrate() const;
  Rational operator()(const Rational& x) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// 1 / (k1 (k1+k2) ... (k1+...+kn)). Throws DomainError on the empty word.
Rational frame_coefficient(const Word& w);
// Integral of s1^{k1-1} ... sn^{kn-1} over 0 <= s1 <= ... <= sn <= 1.
Rational iterated_integral(const Word& w);

struct FrameTerm {
  Word word;
  Rational coeff;
  long v_pow;
  long z_pow;
};

struct FrameSeries {
  long max_weight = 0;
  std::vector<FrameTerm> terms;  // canonical word order
};

FrameSeries frame_series(long max_weight);
std::string to_json(const FrameSeries& s);
// One line per term: "1/3 * e(-1)e(-2) v^3 z^-2".
std::string to_text(const FrameSeries& s);

// Sum of frame coefficients over the linear-extension words of u.
Rational alphaU(const Forest& u);
// Same value through polynomial integrals: products multiply, B+ with label k
// is g -> int_0^x g(s) s^{k-1} ds, evaluated at x = 1 at the end.
Rational alphaU_integral(const Forest& u);
UnivariatePoly alphaU_polynomial(const Forest& u);

// A functional on the labeled forests of weight <= max_weight.
struct ForestFunctional {
  long max_weight = 0;
  std::map<Forest, Rational> values;

  // Throws DomainError outside the table.
  Rational operator()(const Forest& u) const;
  friend bool operator==(const ForestFunctional&, const ForestFunctional&) = default;
};

ForestFunctional alphaU_functional(long max_weight);
// Convolutions use the poset coproduct; the sums stop at k = |u|.
// exp needs a(I) = 0, log needs a(I) = 1; DomainError otherwise.
ForestFunctional forest_exp(const ForestFunctional& a);
ForestFunctional forest_log(const ForestFunctional& a);
ForestFunctional betaU(long max_weight);

// sum beta(t) t over the Hall trees of weight <= max_weight.
LinComb<HallTree> hall_representation(long max_weight);

struct Prop53Result {
  bool ok = true;
  std::vector<std::string> mismatches;  // "word: expected x, got y"
};
// Compares sum_w alphaU(w) w with exp(sum_t c_t E(t)) in the concatenation
// algebra, up to weight max_weight. c_t = beta(t) / |sym(t)| by default, since
// <E(t), pi(t)> = |sym(t)|; literal = true uses c_t = beta(t).
Prop53Result prop53_check(long max_weight, Orientation o = Orientation::Standard, bool literal = false);

}  // namespace hopf

#endif
