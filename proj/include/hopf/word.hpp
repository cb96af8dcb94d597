#ifndef HOPF_WORD_HPP
#define HOPF_WORD_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace hopf {

// Finite sequence of letters. Letter k stands for f_k (and for e_{-k} in the
// dual). Also used for compositions (QSYM indices) and NSym monomials.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);
  Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  long weight() const { return weight_; }
  int operator[](std::size_t i) const { return letters_[i]; }

  // Letters [from, to).
  Word slice(std::size_t from, std::size_t to) const;
  Word reversed() const;

  friend Word operator+(const Word& a, const Word& b);

  // Canonical order: weight first, then lexicographic on the letter sequence.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

 private:
  std::vector<int> letters_;
  long weight_ = 0;
};

// "f1.f2.f1"; the empty word prints "1".
std::string to_string(const Word& w);
// Dual basis element: "f1.f2*"; the empty word prints "1*".
std::string to_dual_string(const Word& w);
// e-letter form used by the frame export: "e(-1)e(-2)".
std::string to_e_string(const Word& w);

// Parses "f1.f2.f1" or "1". Throws ParseError with a byte offset.
Word parse_word(std::string_view text);

// All words (compositions) of exactly the given weight, in canonical order.
std::vector<Word> words_of_weight(long weight);
// All words of weight 1..max_weight, in canonical order (empty word excluded).
std::vector<Word> words_up_to_weight(long max_weight);

}  // namespace hopf

#endif
