#include "hopf/word_hopf.hpp"

#include <memory>
#include <tuple>

#include "cache.hpp"
#include "hopf/error.hpp"

namespace hopf {

std::string to_string(Pairing p) { return p == Pairing::Zero ? "zero" : "additive"; }

std::optional<int> bracket(int a, int b, Pairing p) {
  if (p == Pairing::Zero) return std::nullopt;
  return a + b;
}

LinComb<Word> shuffle(const Word& x, const Word& y) { return quasi_shuffle(x, y, Pairing::Zero); }

LinComb<Word> quasi_shuffle(const Word& x, const Word& y, Pairing p) {
  if (x.empty()) return LinComb<Word>(y);
  if (y.empty()) return LinComb<Word>(x);
  static detail::SyncCache<std::tuple<Word, Word, int>, LinComb<Word>> cache;
  return cache.get({x, y, static_cast<int>(p)}, [&] {
    LinComb<Word> out;
    Word a{x[0]}, b{y[0]};
    Word u = x.slice(1, x.length()), v = y.slice(1, y.length());
    for (const auto& [w, c] : quasi_shuffle(u, y, p)) out.add(a + w, c);
    for (const auto& [w, c] : quasi_shuffle(x, v, p)) out.add(b + w, c);
    if (auto ab = bracket(x[0], y[0], p))
      for (const auto& [w, c] : quasi_shuffle(u, v, p)) out.add(Word{*ab} + w, c);
    return out;
  });
}

WordElement quasi_shuffle(const WordElement& x, const WordElement& y, Pairing p) {
  return bilinear_map(x, y, [p](const Word& a, const Word& b) { return quasi_shuffle(a, b, p); });
}

LinComb<Tensor<Word>> deconcat_coproduct(const Word& w) {
  LinComb<Tensor<Word>> out;
  for (std::size_t k = 0; k <= w.length(); ++k) out.add({w.slice(0, k), w.slice(k, w.length())}, 1);
  return out;
}

LinComb<Tensor<Word>> deconcat_coproduct(const WordElement& x) {
  return linear_map(x, [](const Word& w) { return deconcat_coproduct(w); });
}

WordElement word_antipode(const Word& w, Pairing p) {
  if (w.empty()) return WordElement(Word());
  static detail::SyncCache<std::pair<Word, int>, WordElement> cache;
  return cache.get({w, static_cast<int>(p)}, [&] {
    WordElement out;
    for (std::size_t k = 0; k < w.length(); ++k) {
      WordElement s = word_antipode(w.slice(0, k), p);
      out.add_scaled(quasi_shuffle(s, WordElement(w.slice(k, w.length())), p), -1);
    }
    return out;
  });
}

std::optional<Word> composition_action(const Word& composition, const Word& w, Pairing p) {
  if (static_cast<std::size_t>(composition.weight()) != w.length())
    throw DomainError("composition weight must equal the word length");
  std::vector<int> out;
  std::size_t pos = 0;
  for (int block : composition.letters()) {
    int letter = w[pos];
    for (int i = 1; i < block; ++i) {
      auto b = bracket(letter, w[pos + i], p);
      if (!b) return std::nullopt;
      letter = *b;
    }
    out.push_back(letter);
    pos += block;
  }
  return Word(std::move(out));
}

WordElement word_antipode_closed(const Word& w, Pairing p) {
  WordElement out;
  Rational sign = w.length() % 2 ? Rational(-1) : Rational(1);
  Word rev = w.reversed();
  for (const Word& comp : words_of_weight(static_cast<long>(w.length())))
    if (auto img = composition_action(comp, rev, p)) out.add(*img, sign);
  return out;
}

WordElement hoffman_tau(const Word& w, Pairing p) {
  WordElement out;
  for (const Word& comp : words_of_weight(static_cast<long>(w.length()))) {
    auto img = composition_action(comp, w, p);
    if (!img) continue;
    Rational c(1);
    for (int i : comp.letters()) c /= factorial(i);
    out.add(*img, c);
  }
  return out;
}

WordElement hoffman_psi(const Word& w, Pairing p) {
  WordElement out;
  for (const Word& comp : words_of_weight(static_cast<long>(w.length()))) {
    auto img = composition_action(comp, w, p);
    if (!img) continue;
    Rational c((static_cast<long>(w.length()) - static_cast<long>(comp.length())) % 2 ? -1 : 1);
    for (int i : comp.letters()) c /= Rational(i);
    out.add(*img, c);
  }
  return out;
}

WordElement hoffman_tau(const WordElement& x, Pairing p) {
  return linear_map(x, [p](const Word& w) { return hoffman_tau(w, p); });
}

WordElement hoffman_psi(const WordElement& x, Pairing p) {
  return linear_map(x, [p](const Word& w) { return hoffman_psi(w, p); });
}

HopfStructure<Word> word_hopf(Pairing p) {
  return {Word(), [p](const Word& a, const Word& b) { return quasi_shuffle(a, b, p); },
          [](const Word& w) { return deconcat_coproduct(w); }, [p](const Word& w) { return word_antipode(w, p); }};
}

// --- concatenation dual ---

WordElement concat(const WordElement& x, const WordElement& y) {
  return bilinear_map(x, y, [](const Word& a, const Word& b) { return WordElement(a + b); });
}

LinComb<Tensor<Word>> dual_delta(const Word& w, Pairing p) {
  static detail::SyncCache<std::pair<Word, int>, LinComb<Tensor<Word>>> cache;
  return cache.get({w, static_cast<int>(p)}, [&] {
    LinComb<Tensor<Word>> out;
    const long n = w.weight();
    for (long k = 0; k <= n; ++k) {
      std::vector<Word> left = k == 0 ? std::vector<Word>{Word()} : words_of_weight(k);
      std::vector<Word> right = k == n ? std::vector<Word>{Word()} : words_of_weight(n - k);
      for (const Word& u : left)
        for (const Word& v : right) out.add({u, v}, quasi_shuffle(u, v, p).coeff(w));
    }
    return out;
  });
}

LinComb<Tensor<Word>> dual_delta(const WordElement& x, Pairing p) {
  return linear_map(x, [p](const Word& w) { return dual_delta(w, p); });
}

HopfStructure<Word> concat_hopf(Pairing p) {
  Product<Word> prod = [](const Word& a, const Word& b) { return WordElement(a + b); };
  Coproduct<Word> cop = [p](const Word& w) { return dual_delta(w, p); };
  auto s = std::make_shared<RecursiveAntipode<Word>>(Word(), prod, cop);
  auto mu = std::make_shared<std::mutex>();
  return {Word(), prod, cop, [s, mu](const Word& w) {
            std::lock_guard<std::mutex> lock(*mu);
            return (*s)(w);
          }};
}

namespace {

void require_brackets(Pairing p, const char* what) {
  if (p == Pairing::Zero) throw DomainError(std::string(what) + " needs the additive pairing (zero brackets degenerate)");
}

template <class LetterImage>
WordElement multiplicative_on_letters(const WordElement& x, LetterImage&& image) {
  return linear_map(x, [&](const Word& w) {
    WordElement out{Word()};
    for (int a : w.letters()) out = concat(out, image(a));
    return out;
  });
}

}  // namespace

WordElement tau_star(const WordElement& x, Pairing p) {
  require_brackets(p, "tau_star");
  return multiplicative_on_letters(x, [](int n) {
    WordElement img;
    for (const Word& u : words_of_weight(n)) img.add(u, Rational(1) / factorial(static_cast<long>(u.length())));
    return img;
  });
}

WordElement psi_star(const WordElement& x, Pairing p) {
  require_brackets(p, "psi_star");
  return multiplicative_on_letters(x, [](int n) {
    WordElement img;
    for (const Word& u : words_of_weight(n)) {
      long k = static_cast<long>(u.length());
      img.add(u, Rational(k % 2 ? 1 : -1, k));
    }
    return img;
  });
}

namespace {

template <class Map>
WordElement dual_by_scan(const WordElement& x, Map&& map) {
  return linear_map(x, [&](const Word& w) {
    WordElement out;
    if (w.empty()) return WordElement(Word());
    for (const Word& u : words_of_weight(w.weight())) out.add(u, map(u).coeff(w));
    return out;
  });
}

}  // namespace

WordElement tau_star_by_duality(const WordElement& x, Pairing p) {
  require_brackets(p, "tau_star");
  return dual_by_scan(x, [p](const Word& u) { return hoffman_tau(u, p); });
}

WordElement psi_star_by_duality(const WordElement& x, Pairing p) {
  require_brackets(p, "psi_star");
  return dual_by_scan(x, [p](const Word& u) { return hoffman_psi(u, p); });
}

WordElement lie_bracket(const WordElement& x, const WordElement& y) { return concat(x, y) - concat(y, x); }

bool is_lie_polynomial(const WordElement& x) {
  LinComb<Tensor<Word>> expected;
  for (const auto& [w, c] : x) {
    expected.add({w, Word()}, c);
    expected.add({Word(), w}, c);
  }
  return dual_delta(x, Pairing::Zero) == expected;
}

std::string to_dual_string(const WordElement& x) {
  return to_string(x, [](const Word& w) { return to_dual_string(w); });
}

std::string to_e_string(const WordElement& x) {
  return to_string(x, [](const Word& w) { return to_e_string(w); });
}

}  // namespace hopf
