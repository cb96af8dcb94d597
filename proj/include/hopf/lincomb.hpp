#ifndef HOPF_LINCOMB_HPP
#define HOPF_LINCOMB_HPP

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "hopf/error.hpp"
#include "hopf/rational.hpp"

namespace hopf {

// Every basis type B used with LinComb provides a total order (operator<=>,
// degree first) and a free function `std::string to_string(const B&)` found by
// argument-dependent lookup.

template <class L, class R = L>
struct Tensor {
  L left;
  R right;
  friend auto operator<=>(const Tensor&, const Tensor&) = default;
  friend bool operator==(const Tensor&, const Tensor&) = default;
};

template <class L, class R>
std::string to_string(const Tensor<L, R>& t) {
  return to_string(t.left) + " (x) " + to_string(t.right);
}

// Threefold tensor, the common target of (D (x) id) D and (id (x) D) D.
template <class B>
struct Tensor3 {
  B first;
  B second;
  B third;
  friend auto operator<=>(const Tensor3&, const Tensor3&) = default;
  friend bool operator==(const Tensor3&, const Tensor3&) = default;
};

template <class B>
std::string to_string(const Tensor3<B>& t) {
  return to_string(t.first) + " (x) " + to_string(t.second) + " (x) " + to_string(t.third);
}

// Finite formal sum of basis elements with nonzero exact coefficients.
template <class B>
class LinComb {
 public:
  using basis_type = B;
  using map_type = std::map<B, Rational>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(B b, Rational c = Rational(1)) { add(std::move(b), c); }

  void add(const B& b, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [b, c] : terms_) c *= s;
    }
    return *this;
  }

  // Adds scale * o in place.
  void add_scaled(const LinComb& o, const Rational& scale) {
    if (scale.is_zero()) return;
    for (const auto& [b, c] : o.terms_) add(b, c * scale);
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  map_type terms_;
};

// a + scale * b.
template <class B>
LinComb<B> lincomb_combine(const LinComb<B>& a, const LinComb<B>& b, const Rational& scale) {
  LinComb<B> out = a;
  out.add_scaled(b, scale);
  return out;
}

// Extends f : B -> LinComb<R> linearly.
template <class B, class F>
auto linear_map(const LinComb<B>& x, F&& f) {
  using Out = std::decay_t<std::invoke_result_t<F&, const B&>>;
  Out out;
  for (const auto& [b, c] : x) out.add_scaled(f(b), c);
  return out;
}

// Extends f : B1 x B2 -> LinComb<R> bilinearly.
template <class B1, class B2, class F>
auto bilinear_map(const LinComb<B1>& x, const LinComb<B2>& y, F&& f) {
  using Out = std::decay_t<std::invoke_result_t<F&, const B1&, const B2&>>;
  Out out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add_scaled(f(a, b), ca * cb);
  return out;
}

// Extends a scalar-valued f : B -> Rational linearly.
template <class B, class F>
Rational linear_form(const LinComb<B>& x, F&& f) {
  Rational out;
  for (const auto& [b, c] : x) out += c * f(b);
  return out;
}

template <class L, class R>
LinComb<Tensor<L, R>> tensor(const LinComb<L>& a, const LinComb<R>& b) {
  LinComb<Tensor<L, R>> out;
  for (const auto& [l, cl] : a)
    for (const auto& [r, cr] : b) out.add(Tensor<L, R>{l, r}, cl * cr);
  return out;
}

// Bilinear extension of a basis pairing. rule(b1, b2) returns nullopt when the
// pairing of that basis pair is undefined.
template <class B1, class B2, class Rule>
Rational pair_eval(const LinComb<B1>& x, const LinComb<B2>& y, Rule&& rule) {
  Rational out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      std::optional<Rational> v = rule(a, b);
      if (!v) throw DomainError("pairing undefined for (" + to_string(a) + ", " + to_string(b) + ")");
      out += ca * cb * *v;
    }
  return out;
}

// Kronecker pairing <u, v*> = [u == v].
struct KroneckerPairing {
  template <class B>
  std::optional<Rational> operator()(const B& a, const B& b) const {
    return Rational(a == b ? 1 : 0);
  }
};

// "c1*b1 + c2*b2" in basis order; a negative coefficient keeps its sign
// ("2*x + -1/2*y"); the empty sum prints "0".
template <class B, class Printer>
std::string to_string(const LinComb<B>& x, Printer&& print) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : x) {
    if (!first) out += " + ";
    first = false;
    out += c.to_string();
    out += '*';
    out += print(b);
  }
  return out;
}

template <class B>
std::string to_string(const LinComb<B>& x) {
  return to_string(x, [](const B& b) { return to_string(b); });
}

}  // namespace hopf

#endif
