#ifndef HOPF_WORD_HOPF_HPP
#define HOPF_WORD_HOPF_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/lincomb.hpp"
#include "hopf/word.hpp"

namespace hopf {

// Hoffman pairing on letters: Zero gives the shuffle product, Additive
// ([f_a, f_b] = f_{a+b}) the quasi-symmetric one.
enum class Pairing { Zero, Additive };

std::string to_string(Pairing p);

// Word elements (shuffle side) and dual word elements (concatenation side)
// share the representation; only the product and the printing differ.
using WordElement = LinComb<Word>;

std::optional<int> bracket(int a, int b, Pairing p);

LinComb<Word> shuffle(const Word& x, const Word& y);
// (au) * (bv) = a(u * bv) + b(au * v) + [a,b](u * v).
LinComb<Word> quasi_shuffle(const Word& x, const Word& y, Pairing p);
WordElement quasi_shuffle(const WordElement& x, const WordElement& y, Pairing p);

LinComb<Tensor<Word>> deconcat_coproduct(const Word& w);
LinComb<Tensor<Word>> deconcat_coproduct(const WordElement& x);

// S(w) = -sum_{k<n} S(a_1..a_k) * a_{k+1}..a_n.
WordElement word_antipode(const Word& w, Pairing p);
// (-1)^n sum over compositions I of n of I[a_n...a_1].
WordElement word_antipode_closed(const Word& w, Pairing p);

// I[w]: the consecutive blocks of w of sizes i_1, ..., i_l each contracted
// to one letter by the bracket; nullopt when a block brackets to zero.
std::optional<Word> composition_action(const Word& composition, const Word& w, Pairing p);

// tau(w) = sum_I 1/(i_1!...i_l!) I[w]; psi(w) = sum_I (-1)^{n-l}/(i_1...i_l) I[w].
WordElement hoffman_tau(const Word& w, Pairing p);
WordElement hoffman_psi(const Word& w, Pairing p);
WordElement hoffman_tau(const WordElement& x, Pairing p);
WordElement hoffman_psi(const WordElement& x, Pairing p);

// (quasi-)shuffle product, deconcatenation, recursive antipode.
HopfStructure<Word> word_hopf(Pairing p);

// --- concatenation dual ---

WordElement concat(const WordElement& x, const WordElement& y);
// delta(w*) = sum_{u,v} <u * v, w*> u* (x) v*, by scanning all pairs of
// complementary weight.
LinComb<Tensor<Word>> dual_delta(const Word& w, Pairing p);
LinComb<Tensor<Word>> dual_delta(const WordElement& x, Pairing p);
HopfStructure<Word> concat_hopf(Pairing p);

// Dual Hoffman maps, multiplicative for concatenation:
// tau*(f_n*) = sum_{a_1+...+a_k=n} 1/k! (a_1...a_k)*,
// psi*(f_n*) = sum (-1)^{k-1}/k (a_1...a_k)*.
// Only the Additive pairing has the required brackets; Zero throws.
WordElement tau_star(const WordElement& x, Pairing p);
WordElement psi_star(const WordElement& x, Pairing p);
// The same maps read off from <tau*(w*), u> = <w*, tau(u)>.
WordElement tau_star_by_duality(const WordElement& x, Pairing p);
WordElement psi_star_by_duality(const WordElement& x, Pairing p);

WordElement lie_bracket(const WordElement& x, const WordElement& y);
// Primitive under the unshuffle coproduct.
bool is_lie_polynomial(const WordElement& x);

// "1*f1.f2* + -1*f2.f1*".
std::string to_dual_string(const WordElement& x);
// "1*e(-1)e(-2) + -1*e(-2)e(-1)".
std::string to_e_string(const WordElement& x);

}  // namespace hopf

#endif
