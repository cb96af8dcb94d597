#ifndef HOPF_MORPHISMS_HPP
#define HOPF_MORPHISMS_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/tree.hpp"
#include "hopf/tree_hopf.hpp"
#include "hopf/word_hopf.hpp"

namespace hopf {

// Compositions I index the monomial quasi-symmetric functions M_I; SYM lives
// inside QSYM through m_lambda = sum of M_I over the rearrangements of lambda.
// NSYM elements are words in the letters z_n under concatenation.
using QSymElement = LinComb<Word>;
using NSymElement = LinComb<Word>;

std::string qsym_basis_string(const Word& composition);  // "M(1,2)", "M()"
std::string nsym_basis_string(const Word& w);            // "z1z2", "1"
std::string to_qsym_string(const QSymElement& x);
std::string to_nsym_string(const NSymElement& x);
// Inverses of the basis printers; ParseError with a byte offset.
Word parse_composition(std::string_view text);  // "M(1,2)", "M()"
Word parse_nsym_word(std::string_view text);    // "z1z2", "1"

// --- pi and alpha ---

// Sum of the words of all linear extensions (ZERO pairing). Throws
// DomainError on an unlabeled vertex.
WordElement pi(const Forest& u);
WordElement pi(const CKElement& x);
// pi as the cocycle morphism into the shuffle algebra with L_a(w) = wa.
CocycleTarget<Word> pi_cocycle_target();

using WordCoefficients = std::function<Rational(const Word&)>;
// Sum of coeffs(w) over the linear-extension words of u.
Rational alpha_of(const Forest& u, const WordCoefficients& coeffs);
// Linear extension of w -> coeffs(w).
Rational alpha_hat(const WordElement& x, const WordCoefficients& coeffs);

struct KernelGenerator {
  std::string family;
  CKElement element;
};
// Every instance, over labeled trees of total weight <= max_weight, of
//   t_1...t_m - sum_i t_i o prod_{j != i} t_j        (m >= 2)
//   t o z + z o t - tz
//   s o (t o z) + s o (z o t) - s o (tz)
//   s o (tz) + z o (ts) + t o (sz) - tzs
// with symmetric families listed once per multiset of trees.
std::vector<KernelGenerator> kernel_generators(long max_weight);

// --- QSYM / NSYM / SYM ---

QSymElement qsym_product(const Word& a, const Word& b);
QSymElement qsym_product(const QSymElement& x, const QSymElement& y);
NSymElement nsym_product(const NSymElement& x, const NSymElement& y);

// Partitions of n as nonincreasing words, in canonical word order.
std::vector<Word> partitions(long n);
// m_lambda.
QSymElement monomial_symmetric(const Word& lambda);
// e_n = m_(1,...,1); e_lambda = product of the e_{lambda_i}.
QSymElement elementary(const Word& lambda);
// Coefficients of x in the e_lambda basis, keyed by lambda. Throws
// DomainError if x is not symmetric.
LinComb<Word> to_elementary_basis(const QSymElement& x);

// --- alpha maps: NSYM, QSYM and the tree algebras ---

LinComb<OrderedForest> alpha1(const NSymElement& x);  // z_n -> planar ladder l_n
CKElement alpha2(const LinComb<OrderedForest>& x);    // forget the order
QSymElement alpha3(const NSymElement& x);             // z_n -> m_(1^n)
CKElement alpha4(const QSymElement& x);               // m_(1^n) -> l_n
QSymElement alpha1_star(const LinComb<PlanarTree>& x);
LinComb<PlanarTree> alpha2_star(const GLElement& x);
QSymElement alpha3_star(const QSymElement& x);
QSymElement alpha4_star(const GLElement& x);

// --- Zhao ---

// k_n = sum over trees with n + 1 vertices of t / |sym(t)|.
GLElement zhao_k(int n);
// eps_0 = single vertex, eps_n = sum_{i=1..n} (-1)^{i-1} k_i o eps_{n-i}.
GLElement zhao_eps(int n);
GLElement zhao_Z(const NSymElement& x);
// M_I -> M_{I (1)}.
QSymElement aplus(const QSymElement& x);
CocycleTarget<Word> qsym_aplus_target();
QSymElement zhao_Zstar(const Forest& u);
QSymElement zhao_Zstar(const CKElement& x);

// Z_u(w) = Z*(l_n) with n the length of w.
QSymElement zhao_Zu(const WordElement& x);
// z_n -> e_{-n}, multiplicative.
WordElement zhao_Zu_star(const NSymElement& x);

// Sum of pi over every assignment of labels to the vertices of the unlabeled
// forest u with total weight <= max_weight.
WordElement rho(const Forest& u, long max_weight);
WordElement rho(const CKElement& x, long max_weight);
// e_{-n} -> l_n, multiplicative for the Grossman-Larson product.
GLElement rho_star(const WordElement& x);

// F(w) = B+(l^w) with l^w the labeled ladder, pi(l^w) = w.
GLElement F(const WordElement& x);
// F*(u) = pi(u) read in the e-letters.
WordElement F_star(const Forest& u);

// --- maps between SYM/NSYM, Foissy/planar and H_U ---

WordElement truncate(const WordElement& x, long max_weight);
// Sum over every assignment of labels to the vertices of each ordered forest
// (total weight <= max_weight) of pi of the labeled forest.
WordElement beta2(const LinComb<OrderedForest>& x, long max_weight);
// e_n -> sum of the words of length n and weight <= max_weight; products are
// truncated at max_weight.
WordElement beta4(const QSymElement& x, long max_weight);
// e_{-n} -> alpha2*(l_n), multiplicative for the diamond product.
LinComb<PlanarTree> beta2_star(const WordElement& x);
// e_{-n} -> alpha4*(l_n), multiplicative in QSYM.
QSymElement beta4_star(const WordElement& x);

}  // namespace hopf

#endif
