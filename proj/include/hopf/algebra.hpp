#ifndef HOPF_ALGEBRA_HPP
#define HOPF_ALGEBRA_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hopf/lincomb.hpp"

namespace hopf {

template <class B>
using Functional = std::function<Rational(const B&)>;

template <class B>
using Coproduct = std::function<LinComb<Tensor<B>>(const B&)>;

template <class B>
using Product = std::function<LinComb<B>(const B&, const B&)>;

// Caches a functional's values. The cache is shared by copies of the returned
// functional and guarded for concurrent callers.
template <class B>
Functional<B> memoize(Functional<B> f) {
  struct State {
    Functional<B> f;
    std::map<B, Rational> cache;
    std::mutex mu;
  };
  auto state = std::make_shared<State>();
  state->f = std::move(f);
  return [state](const B& b) {
    {
      std::lock_guard<std::mutex> lock(state->mu);
      auto it = state->cache.find(b);
      if (it != state->cache.end()) return it->second;
    }
    Rational v = state->f(b);
    std::lock_guard<std::mutex> lock(state->mu);
    state->cache.emplace(b, v);
    return v;
  };
}

// (f * g)(x) = sum f(x') g(x'') over the coproduct expansion of x.
template <class B>
Functional<B> functional_convolve(Functional<B> f, Functional<B> g, Coproduct<B> coproduct) {
  return [f = std::move(f), g = std::move(g), coproduct = std::move(coproduct)](const B& x) {
    Rational out;
    for (const auto& [t, c] : coproduct(x)) {
      Rational left = f(t.left);
      if (left.is_zero()) continue;
      out += c * left * g(t.right);
    }
    return out;
  };
}

template <class B>
Rational evaluate(const Functional<B>& f, const LinComb<B>& x) {
  return linear_form(x, f);
}

// Unit, product, coproduct and antipode of a Hopf algebra given on a basis.
template <class B>
struct HopfStructure {
  B unit;
  Product<B> product;
  Coproduct<B> coproduct;
  std::function<LinComb<B>(const B&)> antipode;
};

// Antipode of a connected graded bialgebra from S(x) = -sum S(x') x'' over all
// coproduct terms other than x (x) 1, with S(1) = 1.
template <class B>
class RecursiveAntipode {
 public:
  RecursiveAntipode(B unit, Product<B> product, Coproduct<B> coproduct)
      : unit_(std::move(unit)), product_(std::move(product)), coproduct_(std::move(coproduct)) {}

  LinComb<B> operator()(const B& b) {
    if (b == unit_) return LinComb<B>(unit_);
    auto it = memo_.find(b);
    if (it != memo_.end()) return it->second;
    LinComb<B> out;
    for (const auto& [t, c] : coproduct_(b)) {
      if (t.left == b && t.right == unit_) continue;
      LinComb<B> s = (*this)(t.left);
      LinComb<B> term = linear_map(s, [&](const B& x) { return product_(x, t.right); });
      out.add_scaled(term, -c);
    }
    memo_.emplace(b, out);
    return out;
  }

 private:
  B unit_;
  Product<B> product_;
  Coproduct<B> coproduct_;
  std::map<B, LinComb<B>> memo_;
};

template <class B>
LinComb<Tensor<B>> coproduct_of(const LinComb<B>& x, const Coproduct<B>& coproduct) {
  return linear_map(x, coproduct);
}

// (D (x) id) D (b) - (id (x) D) D (b).
template <class B>
LinComb<Tensor3<B>> coassociativity_defect(const Coproduct<B>& coproduct, const B& b) {
  LinComb<Tensor3<B>> out;
  for (const auto& [t, c] : coproduct(b)) {
    for (const auto& [l, cl] : coproduct(t.left)) out.add(Tensor3<B>{l.left, l.right, t.right}, c * cl);
    for (const auto& [r, cr] : coproduct(t.right)) out.add(Tensor3<B>{t.left, r.left, r.right}, -c * cr);
  }
  return out;
}

// Outcome of one axiom on one probe element.
struct AxiomFailure {
  std::string axiom;
  std::string probe;
  std::string detail;
};

// Checks coassociativity, both counit laws and both antipode convolution laws
// on every probe basis element. Returns the failures (empty when all hold).
template <class B>
std::vector<AxiomFailure> check_hopf_axioms(const HopfStructure<B>& h, const std::vector<B>& probes,
                                            bool check_antipode = true) {
  std::vector<AxiomFailure> failures;
  for (const B& b : probes) {
    LinComb<Tensor<B>> d = h.coproduct(b);
    auto defect = coassociativity_defect(h.coproduct, b);
    if (!defect.empty()) failures.push_back({"coassociativity", to_string(b), to_string(defect)});

    LinComb<B> left, right;
    for (const auto& [t, c] : d) {
      if (t.left == h.unit) left.add(t.right, c);
      if (t.right == h.unit) right.add(t.left, c);
    }
    LinComb<B> expected(b);
    if (left != expected) failures.push_back({"left counit", to_string(b), to_string(left)});
    if (right != expected) failures.push_back({"right counit", to_string(b), to_string(right)});

    if (!check_antipode) continue;
    LinComb<B> s_id, id_s;
    for (const auto& [t, c] : d) {
      LinComb<B> sl = h.antipode(t.left);
      s_id.add_scaled(linear_map(sl, [&](const B& x) { return h.product(x, t.right); }), c);
      LinComb<B> sr = h.antipode(t.right);
      id_s.add_scaled(linear_map(sr, [&](const B& x) { return h.product(t.left, x); }), c);
    }
    LinComb<B> unit_eps = b == h.unit ? LinComb<B>(h.unit) : LinComb<B>();
    if (s_id != unit_eps) failures.push_back({"S*id", to_string(b), to_string(s_id)});
    if (id_s != unit_eps) failures.push_back({"id*S", to_string(b), to_string(id_s)});
  }
  return failures;
}

}  // namespace hopf

#endif
