#include "hopf/word.hpp"

#include <algorithm>
#include <numeric>

#include "hopf/error.hpp"

namespace hopf {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int a : letters_)
    if (a <= 0) throw DomainError("letters must be positive integers");
  weight_ = std::accumulate(letters_.begin(), letters_.end(), 0L);
}

Word Word::slice(std::size_t from, std::size_t to) const {
  return Word(std::vector<int>(letters_.begin() + static_cast<long>(from),
                               letters_.begin() + static_cast<long>(to)));
}

Word Word::reversed() const { return Word(std::vector<int>(letters_.rbegin(), letters_.rend())); }

Word operator+(const Word& a, const Word& b) {
  std::vector<int> l = a.letters_;
  l.insert(l.end(), b.letters_.begin(), b.letters_.end());
  Word w;
  w.letters_ = std::move(l);
  w.weight_ = a.weight_ + b.weight_;
  return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += '.';
    out += 'f';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string to_dual_string(const Word& w) { return to_string(w) + "*"; }

std::string to_e_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int a : w.letters()) out += "e(-" + std::to_string(a) + ")";
  return out;
}

Word parse_word(std::string_view text) {
  if (text == "1") return Word();
  if (text.empty()) throw ParseError("empty word", 0);
  std::vector<int> letters;
  std::size_t i = 0;
  for (;;) {
    if (i >= text.size() || text[i] != 'f') throw ParseError("expected letter 'f'", i);
    ++i;
    std::size_t start = i;
    long value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      value = value * 10 + (text[i] - '0');
      if (value > 1000000) throw ParseError("letter index too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected letter index", i);
    if (value == 0) throw ParseError("letter index must be positive", start);
    letters.push_back(static_cast<int>(value));
    if (i == text.size()) break;
    if (text[i] != '.') throw ParseError("expected '.'", i);
    ++i;
  }
  return Word(std::move(letters));
}

namespace {

void compositions(long remaining, std::vector<int>& prefix, std::vector<Word>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = 1; part <= remaining; ++part) {
    prefix.push_back(part);
    compositions(remaining - part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> words_of_weight(long weight) {
  std::vector<Word> out;
  if (weight < 0) return out;
  std::vector<int> prefix;
  compositions(weight, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> words_up_to_weight(long max_weight) {
  std::vector<Word> out;
  for (long n = 1; n <= max_weight; ++n) {
    auto w = words_of_weight(n);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

}  // namespace hopf
