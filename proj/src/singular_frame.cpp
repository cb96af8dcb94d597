#include "hopf/singular_frame.hpp"

#include <sstream>

#include <json.hpp>

#include "hopf/error.hpp"
#include "hopf/tree_hopf.hpp"
#include "hopf/word_hopf.hpp"

namespace hopf {

UnivariatePoly::UnivariatePoly(Rational c) {
  c_.push_back(std::move(c));
  trim();
}

UnivariatePoly UnivariatePoly::monomial(int degree, const Rational& c) {
  UnivariatePoly p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational());
  p.c_.back() = c;
  p.trim();
  return p;
}

void UnivariatePoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  UnivariatePoly out;
  if (a.c_.empty() || b.c_.empty()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  out.trim();
  return out;
}

UnivariatePoly UnivariatePoly::integrate() const {
  UnivariatePoly out;
  if (c_.empty()) return out;
  out.c_.assign(c_.size() + 1, Rational());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i + 1] = c_[i] / Rational(static_cast<long>(i) + 1);
  return out;
}

Rational UnivariatePoly::operator()(const Rational& x) const {
  Rational out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + *it;
  return out;
}

// --- frame coefficients ---

Rational frame_coefficient(const Word& w) {
  if (w.empty()) throw DomainError("frame coefficient of the empty word");
  Rational out(1);
  long partial = 0;
  for (int k : w.letters()) {
    partial += k;
    out /= Rational(partial);
  }
  return out;
}

Rational iterated_integral(const Word& w) {
  if (w.empty()) throw DomainError("iterated integral of the empty word");
  UnivariatePoly g(1);
  for (int k : w.letters()) g = (g * UnivariatePoly::monomial(k - 1)).integrate();
  return g(1);
}

FrameSeries frame_series(long max_weight) {
  if (max_weight < 1) throw DomainError("frame series needs max weight >= 1");
  FrameSeries s;
  s.max_weight = max_weight;
  for (const Word& w : words_up_to_weight(max_weight)) {
    if (w.empty()) continue;
    s.terms.push_back({w, frame_coefficient(w), w.weight(), -static_cast<long>(w.length())});
  }
  return s;
}

std::string to_json(const FrameSeries& s) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : s.terms) {
    nlohmann::ordered_json j;
    j["word"] = t.word.letters();
    j["coeff"] = t.coeff.to_string();
    j["v_pow"] = t.v_pow;
    j["z_pow"] = t.z_pow;
    terms.push_back(std::move(j));
  }
  nlohmann::ordered_json root;
  root["max_weight"] = s.max_weight;
  root["terms"] = std::move(terms);
  return root.dump();
}

std::string to_text(const FrameSeries& s) {
  std::ostringstream os;
  for (const auto& t : s.terms)
    os << t.coeff << " * " << to_e_string(t.word) << " v^" << t.v_pow << " z^" << t.z_pow << '\n';
  return os.str();
}

// --- alpha^U ---

Rational alphaU(const Forest& u) {
  if (!u.fully_labeled()) throw DomainError("alphaU needs a fully labeled forest: " + to_string(u));
  Rational out;
  for (const Word& w : linear_extensions(u)) out += w.empty() ? Rational(1) : frame_coefficient(w);
  return out;
}

namespace {

UnivariatePoly tree_polynomial(const RootedTree& t) {
  UnivariatePoly g(1);
  for (const auto& c : t.children()) g = g * tree_polynomial(c);
  return (g * UnivariatePoly::monomial(t.label() - 1)).integrate();
}

}  // namespace

UnivariatePoly alphaU_polynomial(const Forest& u) {
  if (!u.fully_labeled()) throw DomainError("alphaU needs a fully labeled forest: " + to_string(u));
  UnivariatePoly g(1);
  for (const auto& t : u.trees()) g = g * tree_polynomial(t);
  return g;
}

Rational alphaU_integral(const Forest& u) { return alphaU_polynomial(u)(1); }

Rational ForestFunctional::operator()(const Forest& u) const {
  auto it = values.find(u);
  if (it == values.end()) throw DomainError("forest functional undefined on " + to_string(u));
  return it->second;
}

ForestFunctional alphaU_functional(long max_weight) {
  ForestFunctional a;
  a.max_weight = max_weight;
  for (const Forest& u : labeled_forests_up_to(max_weight)) a.values.emplace(u, alphaU(u));
  return a;
}

namespace {

using Table = std::map<Forest, Rational>;

// Accumulates sum_k scale(k) p^{*k}(u) for k = 1..|u|.
template <class Scale>
Table convolution_series(const Table& p, Scale&& scale) {
  Table out;
  for (const auto& [u, v] : p) out[u] = Rational();
  Table power = p;
  std::size_t max_size = 0;
  for (const auto& [u, v] : p) max_size = std::max(max_size, u.size());
  for (std::size_t k = 1; k <= max_size; ++k) {
    if (k > 1) {
      Table next;
      for (const auto& [u, v] : p) {
        Rational s;
        for (const auto& [t, c] : poset_coproduct(u)) {
          const Rational& l = power.at(t.left);
          if (l.is_zero()) continue;
          s += c * l * p.at(t.right);
        }
        next[u] = s;
      }
      power = std::move(next);
    }
    Rational f = scale(k);
    for (const auto& [u, v] : power)
      if (k <= u.size()) out[u] += f * v;
  }
  return out;
}

}  // namespace

ForestFunctional forest_exp(const ForestFunctional& a) {
  if (!a(Forest()).is_zero()) throw DomainError("exp needs a(I) = 0");
  ForestFunctional out;
  out.max_weight = a.max_weight;
  out.values = convolution_series(a.values, [](std::size_t k) { return Rational(1) / factorial(static_cast<long>(k)); });
  out.values[Forest()] += 1;
  return out;
}

ForestFunctional forest_log(const ForestFunctional& a) {
  if (!a(Forest()).is_one()) throw DomainError("log needs a(I) = 1");
  Table p = a.values;
  p[Forest()] -= 1;
  ForestFunctional out;
  out.max_weight = a.max_weight;
  out.values = convolution_series(p, [](std::size_t k) {
    return Rational(k % 2 ? 1 : -1, static_cast<long>(k));
  });
  return out;
}

ForestFunctional betaU(long max_weight) { return forest_log(alphaU_functional(max_weight)); }

LinComb<HallTree> hall_representation(long max_weight) {
  ForestFunctional beta = betaU(max_weight);
  LinComb<HallTree> out;
  for (const HallTree& h : hall_trees(max_weight)) out.add(h, beta(Forest{h.tree}));
  return out;
}

Prop53Result prop53_check(long max_weight, Orientation o, bool literal) {
  auto truncated = [max_weight](const WordElement& x) {
    WordElement out;
    for (const auto& [w, c] : x)
      if (w.weight() <= max_weight) out.add(w, c);
    return out;
  };
  WordElement log_part;
  for (const auto& [h, c] : hall_representation(max_weight))
    log_part.add_scaled(hall_polynomial(h, o), literal ? c : c / Rational(sym_order(h.tree)));

  WordElement exp_part{Word()}, power{Word()};
  for (long k = 1; k <= max_weight; ++k) {
    power = truncated(concat(power, log_part));
    exp_part.add_scaled(power, Rational(1) / factorial(k));
  }

  WordElement expected{Word()};
  for (const Word& w : words_up_to_weight(max_weight))
    if (!w.empty()) expected.add(w, frame_coefficient(w));

  Prop53Result r;
  WordElement diff = exp_part - expected;
  for (const auto& [w, c] : diff) {
    r.ok = false;
    r.mismatches.push_back(to_string(w) + ": expected " + expected.coeff(w).to_string() + ", got " +
                           exp_part.coeff(w).to_string());
  }
  return r;
}

}  // namespace hopf
